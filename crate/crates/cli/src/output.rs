//! Report documents. Each serializes to one JSON object tagged by
//! `command` and parses back to the same value.

use std::fmt::Write;

use lndkit_core::{ClassificationReport, DemazureRoot};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Image {
    pub var: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarOrder {
    pub var: String,
    /// Least `k` with `D^k(var) = 0`.
    pub order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum Verdict {
    #[serde(rename = "VerifiedLND")]
    VerifiedLnd {
        max_order: u32,
        orders: Vec<VarOrder>,
    },
    NotNilpotent {
        var: String,
        order: u32,
        earlier: u32,
        ratio: String,
    },
    Inconclusive {
        bound: u32,
    },
    NotWellDefined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLndReport {
    pub derivation: String,
    pub images: Vec<Image>,
    pub well_defined: bool,
    /// Normal forms of `D(g)` per relation.
    pub residues: Vec<String>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceItem {
    pub kind: String,
    pub criterion: String,
    pub citation: String,
    pub data: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub verdict: String,
    pub candidate: Option<String>,
    pub scope: String,
    pub evidence: Vec<EvidenceItem>,
}

impl ClassifyReport {
    pub fn from_report(r: &ClassificationReport) -> Self {
        ClassifyReport {
            verdict: r.verdict.as_str().into(),
            candidate: r.candidate.map(|c| c.as_str().into()),
            scope: r.scope.as_str().into(),
            evidence: r
                .evidence
                .iter()
                .map(|e| EvidenceItem {
                    kind: e.kind.as_str().into(),
                    criterion: e.criterion.clone(),
                    citation: e.citation.clone(),
                    data: e.data.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpReport {
    pub derivation: String,
    pub input: String,
    pub parameter: String,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Part {
    pub degree: i64,
    pub images: Vec<Image>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub derivation: String,
    pub weights: Vec<i64>,
    pub parts: Vec<Part>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root {
    pub vector: Vec<i64>,
    /// Index of the ray pairing to -1.
    pub ray: usize,
}

impl From<DemazureRoot> for Root {
    fn from(r: DemazureRoot) -> Self {
        Root { vector: r.vector, ray: r.distinguished }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    pub rays: Vec<Vec<i64>>,
    #[serde(rename = "box")]
    pub box_size: u32,
    pub count: usize,
    pub line_factor: Option<Root>,
    pub roots: Vec<Root>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coefficient {
    pub power: u32,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HdstarReport {
    pub element: String,
    pub cylinder_variable: String,
    pub ideal: Vec<String>,
    pub coefficients: Vec<Coefficient>,
    pub member: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub failed: String,
    pub exit_code: i32,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Document {
    CheckLnd(CheckLndReport),
    Classify(ClassifyReport),
    Exp(ExpReport),
    Decompose(DecomposeReport),
    Roots(RootsReport),
    HdstarMember(HdstarReport),
    Error(ErrorReport),
}

fn images_text(out: &mut String, images: &[Image]) {
    for i in images {
        let _ = writeln!(out, "  {} -> {}", i.var, i.image);
    }
}

impl Document {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Document::CheckLnd(r) => {
                let _ = writeln!(out, "derivation {}", r.derivation);
                images_text(&mut out, &r.images);
                let _ = writeln!(out, "well-defined: {}", if r.well_defined { "yes" } else { "no" });
                if !r.residues.is_empty() {
                    let _ = writeln!(out, "residues: {}", r.residues.join(", "));
                }
                match &r.verdict {
                    Verdict::VerifiedLnd { max_order, orders } => {
                        let list: Vec<String> = orders.iter().map(|o| format!("{}: {}", o.var, o.order)).collect();
                        let _ = writeln!(out, "VerifiedLND: max order {max_order} ({})", list.join(", "));
                    }
                    Verdict::NotNilpotent { var, order, earlier, ratio } => {
                        let _ = writeln!(
                            out,
                            "NotNilpotent: D^{order}({var}) = {ratio} * D^{earlier}({var}) != 0, so {var} is never killed"
                        );
                    }
                    Verdict::Inconclusive { bound } => {
                        let _ = writeln!(out, "Inconclusive: no proof or cycle within {bound} iterations");
                    }
                    Verdict::NotWellDefined => {
                        let _ = writeln!(out, "NotWellDefined: some relation is not sent into the ideal");
                    }
                }
            }
            Document::Classify(r) => {
                match &r.candidate {
                    Some(c) => {
                        let _ = writeln!(out, "verdict: {} (candidate {c})", r.verdict);
                    }
                    None => {
                        let _ = writeln!(out, "verdict: {}", r.verdict);
                    }
                }
                let _ = writeln!(out, "scope: {}", r.scope);
                if !r.evidence.is_empty() {
                    out.push_str("evidence:\n");
                }
                for e in &r.evidence {
                    let _ = writeln!(out, "  [{}] {}: {}", e.kind, e.criterion, e.data);
                    let _ = writeln!(out, "    {}", e.citation);
                }
            }
            Document::Exp(r) => {
                let _ = writeln!(out, "{}", r.result);
            }
            Document::Decompose(r) => {
                let w: Vec<String> = r.weights.iter().map(i64::to_string).collect();
                let _ = writeln!(out, "derivation {} by weights ({})", r.derivation, w.join(", "));
                if r.parts.is_empty() {
                    out.push_str("no nonzero parts\n");
                }
                for p in &r.parts {
                    let _ = writeln!(out, "degree {}:", p.degree);
                    images_text(&mut out, &p.images);
                }
            }
            Document::Roots(r) => {
                let _ = writeln!(out, "{} roots in box {}", r.count, r.box_size);
                match &r.line_factor {
                    Some(l) => {
                        let _ = writeln!(out, "line factor: {:?} (ray {})", l.vector, l.ray);
                    }
                    None => out.push_str("line factor: none\n"),
                }
                for root in &r.roots {
                    let _ = writeln!(out, "  {:?} ray {}", root.vector, root.ray);
                }
            }
            Document::HdstarMember(r) => {
                let _ = writeln!(out, "{}", if r.member { "member" } else { "not a member" });
                let _ = writeln!(out, "I = ({})", r.ideal.join(", "));
                for c in &r.coefficients {
                    let _ = writeln!(out, "  {}^{}: {}", r.cylinder_variable, c.power, c.coefficient);
                }
            }
            Document::Error(r) => {
                let _ = writeln!(out, "error: {}", r.error);
            }
        }
        out
    }
}
