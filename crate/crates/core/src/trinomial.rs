//! Trinomial varieties `Spec R(A)`: data, relations, the rigidity criterion
//! and the canonical LND of a non-rigid Type 1 variety.
//!
//! Tuples are stored 0-based. Printed labels are 1-based for Type 1
//! (`i = 1..r`) and 0-based for Type 2 (`i = 0..r`); [`TrinomialData::label`]
//! converts.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::PresentedAlgebra;
use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::groebner::{jacobian_rank_at_point, Ideal};
use crate::monomial::Monomial;
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use crate::report::{ClassificationReport, Evidence, EvidenceKind, Scope, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrinomialKind {
    /// Pairwise distinct `a_1..a_r`.
    Type1 { a: Vec<Rational> },
    /// A `2 × (r+1)` matrix given by its two rows.
    Type2 { rows: [Vec<Rational>; 2] },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrinomialData {
    kind: TrinomialKind,
    m: usize,
    exponents: Vec<Vec<u32>>,
}

impl TrinomialData {
    pub fn type1(exponents: Vec<Vec<u32>>, a: Vec<Rational>, m: usize) -> Result<Self> {
        Self::new(TrinomialKind::Type1 { a }, m, exponents)
    }

    pub fn type2(exponents: Vec<Vec<u32>>, rows: [Vec<Rational>; 2], m: usize) -> Result<Self> {
        Self::new(TrinomialKind::Type2 { rows }, m, exponents)
    }

    pub fn new(kind: TrinomialKind, m: usize, exponents: Vec<Vec<u32>>) -> Result<Self> {
        let data = TrinomialData { kind, m, exponents };
        data.validate()?;
        Ok(data)
    }

    fn validate(&self) -> Result<()> {
        let blocks = self.exponents.len();
        let min_blocks = match self.kind {
            TrinomialKind::Type1 { .. } => 2,
            TrinomialKind::Type2 { .. } => 3,
        };
        if blocks < min_blocks {
            return Err(Error::InvalidData(format!("r must be at least 2 ({blocks} tuples given)")));
        }
        for (b, tuple) in self.exponents.iter().enumerate() {
            if tuple.is_empty() {
                return Err(Error::InvalidData(format!("tuple l_{} is empty (n_i >= 1)", self.label(b))));
            }
            if tuple.contains(&0) {
                return Err(Error::InvalidData(format!("tuple l_{} has a zero entry (l_ij >= 1)", self.label(b))));
            }
        }
        match &self.kind {
            TrinomialKind::Type1 { a } => {
                if a.len() != blocks {
                    return Err(Error::InvalidData(format!("{} coefficients a_i for r = {blocks}", a.len())));
                }
                for i in 0..blocks {
                    if let Some(j) = (i + 1..blocks).find(|&j| a[i] == a[j]) {
                        return Err(Error::InvalidData(format!(
                            "a_{} = a_{} (coefficients must be pairwise distinct)",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
            TrinomialKind::Type2 { rows } => {
                if rows.iter().any(|r| r.len() != blocks) {
                    return Err(Error::InvalidData(format!("matrix must have {blocks} columns")));
                }
                for i in 0..blocks {
                    for j in i + 1..blocks {
                        if (&rows[0][i] * &rows[1][j] - &rows[0][j] * &rows[1][i]).is_zero() {
                            return Err(Error::InvalidData(format!("columns {i} and {j} are linearly dependent")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> &TrinomialKind {
        &self.kind
    }

    pub fn is_type1(&self) -> bool {
        matches!(self.kind, TrinomialKind::Type1 { .. })
    }

    /// Number of free variables `S_1..S_m`.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exponents
    }

    /// The `r` of the construction.
    pub fn r(&self) -> usize {
        match self.kind {
            TrinomialKind::Type1 { .. } => self.exponents.len(),
            TrinomialKind::Type2 { .. } => self.exponents.len() - 1,
        }
    }

    /// Printed label of the tuple stored at `block`.
    pub fn label(&self, block: usize) -> usize {
        match self.kind {
            TrinomialKind::Type1 { .. } => block + 1,
            TrinomialKind::Type2 { .. } => block,
        }
    }

    /// Variable names `T_ij` (block-major, then `S_k`).
    pub fn variable_names(&self) -> Vec<String> {
        let mut names = Vec::new();
        for (b, tuple) in self.exponents.iter().enumerate() {
            let i = self.label(b);
            for j in 1..=tuple.len() {
                if i < 10 && j < 10 {
                    names.push(format!("T{i}{j}"));
                } else {
                    names.push(format!("T{i}_{j}"));
                }
            }
        }
        names.extend((1..=self.m).map(|k| format!("S{k}")));
        names
    }

    pub fn arity(&self) -> usize {
        self.exponents.iter().map(Vec::len).sum::<usize>() + self.m
    }

    /// Index of `T_{block, position}` among all variables.
    pub fn var_index(&self, block: usize, position: usize) -> usize {
        self.exponents[..block].iter().map(Vec::len).sum::<usize>() + position
    }

    /// The monomial `T_i^{l_i}` for a block.
    pub fn block_monomial(&self, block: usize) -> Polynomial {
        let mut exps = alloc::vec![0u32; self.arity()];
        for (p, &e) in self.exponents[block].iter().enumerate() {
            exps[self.var_index(block, p)] = e;
        }
        Polynomial::monomial(Monomial::from_exponents(exps), Rational::one())
    }

    /// The relations `g_i`, in the order of the index set `I`.
    pub fn relations(&self) -> Vec<Polynomial> {
        let n = self.arity();
        match &self.kind {
            TrinomialKind::Type1 { a } => (0..self.exponents.len() - 1)
                .map(|b| {
                    let c = Polynomial::constant(n, &a[b + 1] - &a[b]);
                    &(&self.block_monomial(b) - &self.block_monomial(b + 1)) - &c
                })
                .collect(),
            TrinomialKind::Type2 { rows } => (0..self.exponents.len() - 2)
                .map(|b| {
                    let minor = |p: usize, q: usize| &rows[0][p] * &rows[1][q] - &rows[0][q] * &rows[1][p];
                    let t0 = self.block_monomial(b).scale(&minor(b + 1, b + 2));
                    let t1 = self.block_monomial(b + 1).scale(&minor(b, b + 2));
                    let t2 = self.block_monomial(b + 2).scale(&minor(b, b + 1));
                    &(&t0 - &t1) + &t2
                })
                .collect(),
        }
    }

    /// Blocks whose tuple has no entry equal to 1.
    fn without_one(&self) -> Vec<usize> {
        (0..self.exponents.len()).filter(|&b| !self.exponents[b].contains(&1)).collect()
    }

    fn first_one(&self, block: usize) -> Option<usize> {
        self.exponents[block].iter().position(|&e| e == 1)
    }

    fn even_with_two(&self, block: usize) -> bool {
        let t = &self.exponents[block];
        t.iter().all(|e| e % 2 == 0) && t.contains(&2)
    }
}

/// Which condition of the rigidity criterion holds; indices use the printed
/// numbering, choices are 0-based positions inside the tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RigidityWitness {
    /// `m > 0`.
    FreeVariables { m: usize },
    /// Type 1: every `i != b` has some `l_{ij(i)} = 1`.
    Type1Exception { b: usize, choice: Vec<Option<usize>> },
    /// Type 2: at most two indices lack an exponent 1. `exceptions` lists
    /// them; fewer than two means the condition holds in a boundary case.
    Type2AtMostTwo { exceptions: Vec<usize>, choice: Vec<Option<usize>> },
    /// Type 2: exactly three indices `a, b, c` lack an exponent 1, and the
    /// tuples of `a` and `b` are even and contain a 2.
    Type2EvenPair { a: usize, b: usize, c: usize, choice: Vec<Option<usize>> },
    /// No condition holds.
    NoCondition,
}

impl RigidityWitness {
    pub fn describe(&self) -> String {
        match self {
            RigidityWitness::FreeVariables { m } => format!("condition 1: m = {m} > 0"),
            RigidityWitness::Type1Exception { b, .. } => {
                format!("condition 2: every i != {b} has an exponent 1")
            }
            RigidityWitness::Type2AtMostTwo { exceptions, .. } => {
                format!("condition 2: indices without an exponent 1 are {exceptions:?} (at most two)")
            }
            RigidityWitness::Type2EvenPair { a, b, c, .. } => {
                format!("condition 3: a = {a}, b = {b} have even tuples containing 2, c = {c}")
            }
            RigidityWitness::NoCondition => "no condition of the rigidity criterion holds".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityVerdict {
    pub rigid: bool,
    pub witness: RigidityWitness,
}

/// The rigidity criterion, scanning conditions in order.
pub fn is_rigid(t: &TrinomialData) -> RigidityVerdict {
    let non_rigid = |witness| RigidityVerdict { rigid: false, witness };
    if t.m > 0 {
        return non_rigid(RigidityWitness::FreeVariables { m: t.m });
    }
    let lacking = t.without_one();
    let choice: Vec<Option<usize>> = (0..t.exponents.len()).map(|b| t.first_one(b)).collect();
    match t.kind {
        TrinomialKind::Type1 { .. } => {
            if lacking.len() <= 1 {
                let b = t.label(lacking.first().copied().unwrap_or(0));
                return non_rigid(RigidityWitness::Type1Exception { b, choice });
            }
        }
        TrinomialKind::Type2 { .. } => {
            if lacking.len() <= 2 {
                let exceptions = lacking.iter().map(|&b| t.label(b)).collect();
                return non_rigid(RigidityWitness::Type2AtMostTwo { exceptions, choice });
            }
            if lacking.len() == 3 {
                let even: Vec<usize> = lacking.iter().copied().filter(|&b| t.even_with_two(b)).collect();
                if even.len() >= 2 {
                    let (a, b) = (even[0], even[1]);
                    let c = *lacking.iter().find(|&&x| x != a && x != b).expect("three indices");
                    return non_rigid(RigidityWitness::Type2EvenPair {
                        a: t.label(a),
                        b: t.label(b),
                        c: t.label(c),
                        choice,
                    });
                }
            }
        }
    }
    RigidityVerdict { rigid: true, witness: RigidityWitness::NoCondition }
}

pub fn build_relations(t: &TrinomialData) -> Result<PresentedAlgebra> {
    PresentedAlgebra::new(t.variable_names(), t.relations())
}

/// `j(i)`: the first exponent-1 position of every tuple, and position 0 for
/// the one tuple allowed to lack it. `None` when two tuples lack it.
pub fn default_choice(t: &TrinomialData) -> Option<Vec<usize>> {
    let mut exceptional = 0;
    let choice = (0..t.exponents.len())
        .map(|b| {
            t.first_one(b).unwrap_or_else(|| {
                exceptional += 1;
                0
            })
        })
        .collect();
    (exceptional <= 1).then_some(choice)
}

/// `δ(T_{ij(i)}) = ∏_{k≠i} ∂T_k^{l_k}/∂T_{kj(k)}`, zero on every other
/// variable, on `build_relations(t)`.
pub fn type1_lnd(t: &TrinomialData, algebra: &Arc<PresentedAlgebra>, choice: &[usize]) -> Result<Derivation> {
    if !t.is_type1() {
        return Err(Error::InvalidData("the canonical LND is defined for Type 1 data".into()));
    }
    let blocks = t.exponents.len();
    if choice.len() != blocks {
        return Err(Error::BadChoiceFunction(format!("{} entries for r = {blocks}", choice.len())));
    }
    if algebra.vars() != t.variable_names().as_slice() {
        return Err(Error::AlgebraMismatch("algebra was not built from this trinomial data".into()));
    }
    for (b, &p) in choice.iter().enumerate() {
        if p >= t.exponents[b].len() {
            return Err(Error::BadChoiceFunction(format!(
                "j({}) = {} exceeds n_{} = {}",
                t.label(b),
                p + 1,
                t.label(b),
                t.exponents[b].len()
            )));
        }
    }
    let off: Vec<usize> = (0..blocks).filter(|&b| t.exponents[b][choice[b]] != 1).collect();
    if off.len() > 1 {
        return Err(Error::BadChoiceFunction(format!(
            "l_{{i,j(i)}} != 1 for i in {:?}; at most one index may be exceptional",
            off.iter().map(|&b| t.label(b)).collect::<Vec<_>>()
        )));
    }
    let n = t.arity();
    let partials = (0..blocks)
        .map(|b| t.block_monomial(b).partial_derivative(t.var_index(b, choice[b])))
        .collect::<Result<Vec<_>>>()?;
    let mut images = alloc::vec![Polynomial::zero(n); n];
    for b in 0..blocks {
        let product = (0..blocks).filter(|&k| k != b).fold(Polynomial::one(n), |acc, k| &acc * &partials[k]);
        images[t.var_index(b, choice[b])] = product;
    }
    Derivation::new(algebra.clone(), images)
}

/// On `Z × A^m` modulo `y_1^{k_1}⋯y_m^{k_m} = f`: `δ(h) = D(h)·y_2^{k_2}⋯y_m^{k_m}`
/// for `h` in `K[Z]`, `δ(y_1) = D(f)` and `δ(y_j) = 0` for `j >= 2`.
pub fn suspension_lnd(d: &Derivation, f: &Polynomial, k: &[u32]) -> Result<Derivation> {
    if k.first() != Some(&1) {
        return Err(Error::BadWeights(format!("k_1 must be 1, got {:?}", k.first())));
    }
    if k.contains(&0) {
        return Err(Error::BadWeights("weights must be positive".into()));
    }
    if !d.is_well_defined() {
        return Err(Error::NotWellDefined);
    }
    let z = d.algebra();
    z.check_arity(f)?;
    let base = z.arity();
    let m = k.len();
    let n = base + m;
    let mut names: Vec<String> = Vec::with_capacity(m);
    for j in 1..=m {
        let mut name = format!("y{j}");
        while z.var_index(&name).is_some() || names.contains(&name) {
            name.push('_');
        }
        names.push(name);
    }
    let mut exps = alloc::vec![0u32; n];
    exps[base..].copy_from_slice(k);
    let product = Polynomial::monomial(Monomial::from_exponents(exps), Rational::one());
    let relation = &product - &f.with_arity(n)?;
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let algebra = Arc::new(z.adjoin(&name_refs, alloc::vec![relation])?);

    let mut tail = alloc::vec![0u32; n];
    tail[base + 1..].copy_from_slice(&k[1..]);
    let tail = Polynomial::monomial(Monomial::from_exponents(tail), Rational::one());
    let mut images = d.images().iter().map(|g| Ok(&g.with_arity(n)? * &tail)).collect::<Result<Vec<_>>>()?;
    images.push(d.apply(f)?.with_arity(n)?);
    images.extend((1..m).map(|_| Polynomial::zero(n)));
    Derivation::new(algebra, images)
}

const CRITERION: &str = "Rigidity criterion for trinomial varieties";
const TYPE_A_FREE: &str = "If m > 0 then Y is of type A";
const TYPE_A_TYPE1: &str =
    "A non-rigid Type 1 trinomial variety is of type A: the canonical LND has no common zero, so there are no stable points";
const TYPE_B: &str =
    "A non-rigid Type 2 trinomial variety with m = 0 is of type B: the origin lies in every component of the singular locus, so origin × A¹ is an invariant line";
const TYPE_C: &str = "Y is rigid and HD*(X) = K[Y]";

/// Type of the trinomial variety given by `t`.
pub fn classify_trinomial(t: &TrinomialData) -> Result<ClassificationReport> {
    if !t.is_type1() && t.m == 0 {
        if let Some(b) = t.exponents.iter().position(|l| l.as_slice() == [1]) {
            return Err(Error::UnreducedPresentation(format!(
                "T_{}^l_{} is the single variable T_{}1; eliminate it and decrease r first",
                t.label(b),
                t.label(b),
                t.label(b)
            )));
        }
    }
    let rigidity = is_rigid(t);
    let mut evidence = Vec::new();
    if rigidity.rigid {
        evidence.push(Evidence::new(EvidenceKind::Rigid, "rigid trinomial", CRITERION, rigidity.witness.describe()));
        evidence.push(Evidence::new(EvidenceKind::Supporting, "rigid base", TYPE_C, "no nonzero LND exists"));
        return Ok(ClassificationReport::new(Verdict::C, Scope::Absolute, evidence));
    }
    evidence.push(Evidence::new(EvidenceKind::NonRigid, "non-rigid trinomial", CRITERION, rigidity.witness.describe()));

    if t.m > 0 {
        evidence.push(Evidence::new(
            EvidenceKind::TypeA,
            "free variables",
            TYPE_A_FREE,
            "∂/∂S1 has the slice S1, so 1 lies in the image ideal",
        ));
        return Ok(ClassificationReport::new(Verdict::A, Scope::Absolute, evidence));
    }
    if t.is_type1() {
        let mut data = String::from("canonical LND with the default choice function");
        if let Some(choice) = default_choice(t) {
            let algebra = Arc::new(build_relations(t)?);
            let d = type1_lnd(t, &algebra, &choice)?;
            match algebra.contains_one(&d.image_ideal()) {
                Ok(true) => data.push_str("; its images and the relations generate the unit ideal"),
                Ok(false) => data.push_str("; its images do not generate the unit ideal"),
                Err(e) => data.push_str(&format!("; unit ideal check skipped ({e})")),
            }
        }
        evidence.push(Evidence::new(EvidenceKind::TypeA, "Type 1 non-rigid", TYPE_A_TYPE1, data));
        return Ok(ClassificationReport::new(Verdict::A, Scope::Absolute, evidence));
    }

    evidence.push(Evidence::new(
        EvidenceKind::NotTypeA,
        "invariant line through the origin",
        TYPE_B,
        "Type 2 with m = 0",
    ));
    let n = t.arity();
    let origin = alloc::vec![Rational::zero(); n];
    if let Ok(rank) = jacobian_rank_at_point(&t.relations(), &origin) {
        evidence.push(Evidence::new(
            EvidenceKind::Supporting,
            "Jacobian rank at the origin",
            "A point where the Jacobian rank drops below the codimension is singular",
            format!("rank {rank} with {} relations", t.relations().len()),
        ));
    }
    Ok(ClassificationReport::new(Verdict::B, Scope::Absolute, evidence))
}

/// Ideal generated by the canonical LND's images, for callers that want the
/// type-A witness directly.
pub fn canonical_image_ideal(t: &TrinomialData) -> Result<Option<(Arc<PresentedAlgebra>, Ideal)>> {
    let Some(choice) = default_choice(t) else { return Ok(None) };
    let algebra = Arc::new(build_relations(t)?);
    let d = type1_lnd(t, &algebra, &choice)?;
    Ok(Some((algebra, d.image_ideal())))
}
