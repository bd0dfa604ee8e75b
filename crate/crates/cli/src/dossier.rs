//! JSON input files: full dossiers, bare cones and bare trinomial data.

use std::collections::BTreeMap;
use std::sync::Arc;

use lndkit_core::parse::parse_poly;
use lndkit_core::rational::integer;
use lndkit_core::trinomial::TrinomialKind;
use lndkit_core::{Cone, Derivation, MonomialOrder, PresentedAlgebra, Rational, Tags, TrinomialData, VarietyDossier};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A rational written as a JSON integer or as a string `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalInput {
    Int(i64),
    Text(String),
}

impl RationalInput {
    pub fn value(&self) -> Result<Rational, CliError> {
        match self {
            RationalInput::Int(v) => Ok(integer(*v)),
            RationalInput::Text(s) => parse_rational(s),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let p = parse_poly::<&str>(s, &[]).map_err(|e| CliError::Input(format!("`{s}` is not a rational: {e}")))?;
    p.as_constant().ok_or_else(|| CliError::Input(format!("`{s}` is not a rational")))
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeFile {
    pub rays: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrinomialFile {
    #[serde(rename = "type")]
    pub kind: u8,
    #[serde(default)]
    pub m: usize,
    pub l: Vec<Vec<u32>>,
    #[serde(default)]
    pub a: Option<Vec<RationalInput>>,
    #[serde(rename = "A", default)]
    pub matrix: Option<Vec<Vec<RationalInput>>>,
}

impl TrinomialFile {
    pub fn data(&self) -> Result<TrinomialData, CliError> {
        let values = |v: &[RationalInput]| v.iter().map(RationalInput::value).collect::<Result<Vec<_>, _>>();
        let bad = |e: lndkit_core::Error| CliError::Input(e.to_string());
        match self.kind {
            1 => {
                let a = self.a.as_deref().ok_or_else(|| CliError::Input("Type 1 data needs `a`".into()))?;
                TrinomialData::new(TrinomialKind::Type1 { a: values(a)? }, self.m, self.l.clone()).map_err(bad)
            }
            2 => {
                let rows = self.matrix.as_deref().ok_or_else(|| CliError::Input("Type 2 data needs `A`".into()))?;
                let [r0, r1] = rows else {
                    return Err(CliError::Input("`A` must have exactly two rows".into()));
                };
                let rows = [values(r0)?, values(r1)?];
                TrinomialData::new(TrinomialKind::Type2 { rows }, self.m, self.l.clone()).map_err(bad)
            }
            k => Err(CliError::Input(format!("trinomial type must be 1 or 2, got {k}"))),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Assertions {
    #[serde(default)]
    pub rigid: bool,
    /// Coordinates of `y` with `{y} × A¹` invariant.
    #[serde(default)]
    pub invariant_line: Option<Vec<RationalInput>>,
    /// Equations of a subset of stable points with invariant cylinder.
    #[serde(default)]
    pub stable_subset: Option<Vec<String>>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DossierFile {
    #[serde(default)]
    pub vars: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    /// Images per derivation; generators left out are sent to 0.
    #[serde(default)]
    pub derivations: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    pub gradings: BTreeMap<String, Vec<i64>>,
    #[serde(default)]
    pub toric: Option<ConeFile>,
    #[serde(default)]
    pub trinomial: Option<TrinomialFile>,
    #[serde(default)]
    pub assertions: Assertions,
}

/// A loaded input file.
pub struct Loaded {
    pub file: DossierFile,
    pub algebra: Arc<PresentedAlgebra>,
}

fn core_input(context: &str) -> impl Fn(lndkit_core::Error) -> CliError + '_ {
    move |e| CliError::Input(format!("{context}: {e}"))
}

/// Reads any of the three accepted shapes; bare cones and trinomial data
/// become dossiers without variables.
pub fn parse_document(text: &str) -> Result<DossierFile, CliError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    let object = value.as_object().ok_or_else(|| CliError::Input("top level must be an object".into()))?;
    let schema = |e: serde_json::Error| CliError::Input(format!("schema error: {e}"));
    if object.contains_key("rays") && !object.contains_key("vars") {
        let cone: ConeFile = serde_json::from_value(value).map_err(schema)?;
        return Ok(DossierFile { toric: Some(cone), ..DossierFile::default() });
    }
    if object.contains_key("type") && !object.contains_key("vars") {
        let t: TrinomialFile = serde_json::from_value(value).map_err(schema)?;
        return Ok(DossierFile { trinomial: Some(t), ..DossierFile::default() });
    }
    serde_json::from_value(value).map_err(schema)
}

pub fn order(name: &str) -> Result<MonomialOrder, CliError> {
    match name {
        "grevlex" => Ok(MonomialOrder::Grevlex),
        "lex" => Ok(MonomialOrder::Lex),
        other => Err(CliError::Input(format!("unknown order `{other}` (expected lex or grevlex)"))),
    }
}

impl Loaded {
    pub fn from_text(text: &str, order: &MonomialOrder) -> Result<Self, CliError> {
        let file = parse_document(text)?;
        let relations = file
            .relations
            .iter()
            .map(|r| parse_poly(r, &file.vars))
            .collect::<Result<Vec<_>, _>>()
            .map_err(core_input("relation"))?;
        let mut algebra =
            PresentedAlgebra::with_order(file.vars.clone(), relations, order).map_err(core_input("algebra"))?;
        for (name, weights) in &file.gradings {
            algebra = algebra.with_grading(name.clone(), weights.clone()).map_err(core_input("grading"))?;
        }
        Ok(Loaded { file, algebra: Arc::new(algebra) })
    }

    pub fn derivation_names(&self) -> impl Iterator<Item = &String> {
        self.file.derivations.keys()
    }

    pub fn derivation(&self, name: &str) -> Result<Derivation, CliError> {
        let images =
            self.file.derivations.get(name).ok_or_else(|| CliError::Input(format!("no derivation named `{name}`")))?;
        if let Some(unknown) = images.keys().find(|v| self.algebra.var_index(v).is_none()) {
            return Err(CliError::Input(format!("derivation `{name}` has an image for unknown variable `{unknown}`")));
        }
        let texts: Vec<&str> = self.algebra.vars().iter().map(|v| images.get(v).map_or("0", String::as_str)).collect();
        Derivation::parse(self.algebra.clone(), &texts).map_err(core_input(&format!("derivation `{name}`")))
    }

    pub fn element(&self, text: &str) -> Result<lndkit_core::Polynomial, CliError> {
        self.algebra.parse_element(text).map_err(core_input("expression"))
    }

    pub fn cone(&self) -> Result<Option<Cone>, CliError> {
        self.file.toric.as_ref().map(|c| Cone::new(c.rays.clone()).map_err(core_input("cone"))).transpose()
    }

    pub fn trinomial(&self) -> Result<Option<TrinomialData>, CliError> {
        self.file.trinomial.as_ref().map(TrinomialFile::data).transpose()
    }

    /// Weights by grading name, or an inline comma-separated list.
    pub fn weights(&self, grading: &str) -> Result<Vec<i64>, CliError> {
        if let Some(w) = self.file.gradings.get(grading) {
            return Ok(w.clone());
        }
        grading
            .split(',')
            .map(|s| s.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError::Input(format!("no grading named `{grading}`")))
    }

    pub fn tags(&self) -> Result<Tags, CliError> {
        let a = &self.file.assertions;
        let invariant_line = a
            .invariant_line
            .as_ref()
            .map(|p| p.iter().map(RationalInput::value).collect::<Result<Vec<_>, _>>())
            .transpose()?;
        let stable_subset = a
            .stable_subset
            .as_ref()
            .map(|eqs| eqs.iter().map(|e| self.element(e)).collect::<Result<Vec<_>, _>>())
            .transpose()?;
        Ok(Tags {
            toric: self.cone()?,
            trinomial: self.trinomial()?,
            rigid_asserted: a.rigid,
            invariant_line,
            stable_subset,
        })
    }

    pub fn dossier(&self, bound: u32) -> Result<VarietyDossier, CliError> {
        let derivations = self
            .derivation_names()
            .map(|name| Ok((name.clone(), self.derivation(name)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        for (name, d) in &derivations {
            if !d.is_well_defined() {
                return Err(CliError::Semantic(format!(
                    "derivation `{name}` is not well defined modulo the relations"
                )));
            }
        }
        VarietyDossier::new(self.algebra.clone(), derivations, self.tags()?, bound)
            .map_err(|e| CliError::Semantic(e.to_string()))
    }
}
