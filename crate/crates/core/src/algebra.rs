//! Finitely presented commutative algebras `ℚ[x_1..x_n] / (relations)`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{groebner, GroebnerBasis, Ideal};
use crate::order::MonomialOrder;
use crate::parse::{is_identifier, parse_poly};
use crate::polynomial::Polynomial;

/// An integer weight vector on the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub name: String,
    pub weights: Vec<i64>,
    /// Every relation is homogeneous for `weights`.
    pub compatible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedAlgebra {
    vars: Vec<String>,
    relations: Vec<Polynomial>,
    gb: GroebnerBasis,
    gradings: Vec<Grading>,
}

impl PresentedAlgebra {
    pub fn new(vars: Vec<String>, relations: Vec<Polynomial>) -> Result<Self> {
        Self::with_order(vars, relations, &MonomialOrder::Grevlex)
    }

    pub fn polynomial_ring(vars: Vec<String>) -> Result<Self> {
        Self::new(vars, Vec::new())
    }

    /// Parses relations given as text over `vars`.
    pub fn parse<S: AsRef<str>>(vars: &[S], relations: &[S]) -> Result<Self> {
        let names: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let rels = relations.iter().map(|r| parse_poly(r.as_ref(), &names)).collect::<Result<Vec<_>>>()?;
        Self::new(names, rels)
    }

    pub fn with_order(vars: Vec<String>, relations: Vec<Polynomial>, order: &MonomialOrder) -> Result<Self> {
        for (k, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidVariableName(v.clone()));
            }
            if vars[..k].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        let arity = vars.len();
        let relations: Vec<Polynomial> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        let ideal = Ideal::new(arity, relations.iter().cloned())?;
        let gb = groebner(&ideal, order)?;
        if gb.is_unit() {
            return Err(Error::ZeroAlgebra);
        }
        Ok(PresentedAlgebra { vars, relations, gb, gradings: Vec::new() })
    }

    /// Attaches a named grading; `compatible` records whether every relation
    /// is homogeneous for it.
    pub fn with_grading(mut self, name: impl Into<String>, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: weights.len() });
        }
        let compatible = self.incompatible_relation(&weights).is_none();
        self.gradings.push(Grading { name: name.into(), weights, compatible });
        Ok(self)
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn gradings(&self) -> &[Grading] {
        &self.gradings
    }

    pub fn grading(&self, name: &str) -> Option<&Grading> {
        self.gradings.iter().find(|g| g.name == name)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Index of the first relation that is not homogeneous for `weights`.
    pub fn incompatible_relation(&self, weights: &[i64]) -> Option<usize> {
        self.relations.iter().position(|r| !r.is_homogeneous(weights))
    }

    pub fn parse_element(&self, text: &str) -> Result<Polynomial> {
        parse_poly(text, &self.vars)
    }

    pub fn format(&self, f: &Polynomial) -> String {
        f.display(&self.vars).to_string()
    }

    pub fn variable(&self, index: usize) -> Polynomial {
        Polynomial::variable(self.arity(), index)
    }

    pub fn check_arity(&self, f: &Polynomial) -> Result<()> {
        if f.arity() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: f.arity() });
        }
        Ok(())
    }

    /// Canonical representative modulo the relations.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.gb.normal_form(f)
    }

    pub(crate) fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.gb.reduce(f)
    }

    pub fn is_zero(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn equal(&self, f: &Polynomial, g: &Polynomial) -> Result<bool> {
        self.is_zero(&f.try_sub(g)?)
    }

    /// Preimage in the polynomial ring of the ideal generated by `ideal` in
    /// the quotient: its generators together with the relations.
    pub fn lift_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        if ideal.arity() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: ideal.arity() });
        }
        Ideal::new(self.arity(), ideal.generators().iter().chain(&self.relations).cloned())
    }

    /// True iff `ideal` generates the unit ideal of the algebra.
    pub fn contains_one(&self, ideal: &Ideal) -> Result<bool> {
        self.lift_ideal(ideal)?.contains_one()
    }

    /// Membership of `f` in the ideal of the algebra generated by `ideal`.
    pub fn ideal_contains(&self, ideal: &Ideal, f: &Polynomial) -> Result<bool> {
        self.check_arity(f)?;
        let gb = groebner(&self.lift_ideal(ideal)?, self.gb.order())?;
        gb.contains(f)
    }

    /// A name not already used by a generator, starting from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        (1..).map(|k| format!("{base}_{k}")).find(|n| self.var_index(n).is_none()).expect("unbounded search")
    }

    /// `A[u]` for a fresh variable `u` appended last, with no new relations.
    pub fn cylinder(&self) -> PresentedAlgebra {
        let name = self.fresh_name("u");
        self.cylinder_named(&name).expect("fresh name is valid")
    }

    pub fn cylinder_named(&self, name: &str) -> Result<PresentedAlgebra> {
        self.adjoin(&[name], Vec::new())
    }

    /// Appends new variables and extra relations (over the enlarged ring).
    pub fn adjoin(&self, names: &[&str], extra: Vec<Polynomial>) -> Result<PresentedAlgebra> {
        let mut vars = self.vars.clone();
        vars.extend(names.iter().map(|n| n.to_string()));
        let arity = vars.len();
        let mut relations = self.relations.iter().map(|r| r.with_arity(arity)).collect::<Result<Vec<_>>>()?;
        for r in &extra {
            if r.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: r.arity() });
            }
        }
        if extra.is_empty() {
            let gb = self.gb.extended(arity)?;
            for (k, v) in vars.iter().enumerate() {
                if !is_identifier(v) {
                    return Err(Error::InvalidVariableName(v.clone()));
                }
                if vars[..k].contains(v) {
                    return Err(Error::DuplicateVariable(v.clone()));
                }
            }
            let gradings = self
                .gradings
                .iter()
                .map(|g| {
                    let mut weights = g.weights.clone();
                    weights.resize(arity, 0);
                    Grading { name: g.name.clone(), weights, compatible: g.compatible }
                })
                .collect();
            return Ok(PresentedAlgebra { vars, relations, gb, gradings });
        }
        relations.extend(extra);
        PresentedAlgebra::with_order(vars, relations, self.gb.order())
    }

    /// True iff `self` is `base[u]` with `u` the last variable.
    pub fn is_cylinder_over(&self, base: &PresentedAlgebra) -> bool {
        self.arity() == base.arity() + 1
            && self.vars[..base.arity()] == base.vars[..]
            && self.relations.len() == base.relations.len()
            && self
                .relations
                .iter()
                .zip(&base.relations)
                .all(|(a, b)| b.with_arity(self.arity()).is_ok_and(|b| &b == a))
    }
}
