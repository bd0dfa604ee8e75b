//! Classification reports shared by the toric, trinomial and generic
//! classifiers.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Type of `Y` for `X = Y × A¹`: `A` when `HD*(X) = K[X]`, `B` when it is
/// infinitely generated, `C` when `Y` is rigid and `HD*(X) = K[Y]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    A,
    B,
    C,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::A => "A",
            Verdict::B => "B",
            Verdict::C => "C",
            Verdict::Inconclusive => "Inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether a verdict holds outright or only relative to the derivations the
/// caller supplied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scope {
    Absolute,
    RelativeToSuppliedLnds,
}

impl Scope {
    pub fn as_str(self) -> &'static str {
        match self {
            Scope::Absolute => "absolute",
            Scope::RelativeToSuppliedLnds => "relative to supplied LNDs",
        }
    }
}

/// Kinds of evidence, used to check report invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EvidenceKind {
    /// Proves type A.
    TypeA,
    /// Shows that `Y` admits a nonzero LND.
    NonRigid,
    /// Shows that `Y` is rigid.
    Rigid,
    /// Rules out type A.
    NotTypeA,
    /// Recorded for the reader; does not decide anything.
    Supporting,
}

impl EvidenceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EvidenceKind::TypeA => "type-a",
            EvidenceKind::NonRigid => "non-rigid",
            EvidenceKind::Rigid => "rigid",
            EvidenceKind::NotTypeA => "not-type-a",
            EvidenceKind::Supporting => "supporting",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub kind: EvidenceKind,
    pub criterion: String,
    /// The statement the criterion rests on.
    pub citation: String,
    pub data: String,
}

impl Evidence {
    pub fn new(
        kind: EvidenceKind,
        criterion: impl Into<String>,
        citation: impl Into<String>,
        data: impl Into<String>,
    ) -> Self {
        Evidence { kind, criterion: criterion.into(), citation: citation.into(), data: data.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    /// Most likely verdict when `verdict` is `Inconclusive`.
    pub candidate: Option<Verdict>,
    pub scope: Scope,
    pub evidence: Vec<Evidence>,
}

impl ClassificationReport {
    pub fn new(verdict: Verdict, scope: Scope, evidence: Vec<Evidence>) -> Self {
        ClassificationReport { verdict, candidate: None, scope, evidence }
    }

    pub fn inconclusive(candidate: Option<Verdict>, scope: Scope, evidence: Vec<Evidence>) -> Self {
        ClassificationReport { verdict: Verdict::Inconclusive, candidate, scope, evidence }
    }

    pub fn has(&self, kind: EvidenceKind) -> bool {
        self.evidence.iter().any(|e| e.kind == kind)
    }

    /// A needs a type-A certificate, B needs non-rigidity and not-A
    /// evidence, C needs rigidity evidence.
    pub fn is_consistent(&self) -> bool {
        match self.verdict {
            Verdict::A => self.has(EvidenceKind::TypeA),
            Verdict::B => self.has(EvidenceKind::NonRigid) && self.has(EvidenceKind::NotTypeA),
            Verdict::C => self.has(EvidenceKind::Rigid),
            Verdict::Inconclusive => true,
        }
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verdict: {}", self.verdict)?;
        if let Some(c) = self.candidate {
            write!(f, " (candidate {c})")?;
        }
        writeln!(f, " [{}]", self.scope.as_str())?;
        for e in &self.evidence {
            writeln!(f, "  - [{}] {}: {}", e.kind.as_str(), e.criterion, e.data)?;
            writeln!(f, "    ({})", e.citation)?;
        }
        Ok(())
    }
}
