//! Type A/B/C classification of `Y` (for `X = Y × A¹`) from a presented
//! algebra, a list of derivations standing in for `LND(Y)` and optional
//! structural tags.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::PresentedAlgebra;
use crate::derivation::{Derivation, NilpotencyVerdict};
use crate::error::{Error, Result};
use crate::grading::coordinate_weights;
use crate::groebner::{groebner, GroebnerBasis, Ideal};
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use crate::report::{ClassificationReport, Evidence, EvidenceKind, Scope, Verdict};
use crate::toric::{classify_toric, Cone};
use crate::trinomial::{classify_trinomial, TrinomialData};

const IMAGE_IDEAL: &str = "If the ideal generated by all images of all LNDs is K[Y], then Y is of type A";
const INVARIANT_LINE: &str = "If {y} × A¹ is SAut(X)-invariant for some y in Y, then Y is not of type A";
const STABLE_SUBSET: &str =
    "If V consists of SAut(Y)-stable points and V × A¹ is SAut(X)-invariant, then Y is not of type A";
const NON_RIGID: &str = "A nonzero LND shows that Y is not rigid";
const RIGID: &str = "Y is rigid and HD*(X) = K[Y]";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tags {
    pub toric: Option<Cone>,
    pub trinomial: Option<TrinomialData>,
    pub rigid_asserted: bool,
    /// A point `y` such that `{y} × A¹` is claimed to be `SAut(X)`-invariant.
    pub invariant_line: Option<Vec<Rational>>,
    /// Equations of a closed subset claimed to consist of stable points with
    /// `V × A¹` invariant.
    pub stable_subset: Option<Vec<Polynomial>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DossierLnd {
    pub name: String,
    pub derivation: Derivation,
    pub verdict: NilpotencyVerdict,
}

impl DossierLnd {
    pub fn is_verified(&self) -> bool {
        self.verdict.is_verified()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyDossier {
    algebra: Arc<PresentedAlgebra>,
    lnds: Vec<DossierLnd>,
    tags: Tags,
}

impl VarietyDossier {
    /// Records the nilpotency verdict of every derivation; each must be
    /// well defined on `algebra`.
    pub fn new(
        algebra: Arc<PresentedAlgebra>,
        derivations: Vec<(String, Derivation)>,
        tags: Tags,
        bound: u32,
    ) -> Result<Self> {
        let mut lnds = Vec::with_capacity(derivations.len());
        for (name, derivation) in derivations {
            if derivation.algebra() != &algebra {
                return Err(Error::AlgebraMismatch(format!("derivation `{name}` lives on another algebra")));
            }
            let verdict = derivation.nilpotency_check(bound)?;
            lnds.push(DossierLnd { name, derivation, verdict });
        }
        Ok(VarietyDossier { algebra, lnds, tags })
    }

    pub fn algebra(&self) -> &Arc<PresentedAlgebra> {
        &self.algebra
    }

    pub fn lnds(&self) -> &[DossierLnd] {
        &self.lnds
    }

    pub fn tags(&self) -> &Tags {
        &self.tags
    }

    /// Derivations that verified as LNDs.
    pub fn verified(&self) -> impl Iterator<Item = &DossierLnd> {
        self.lnds.iter().filter(|l| l.is_verified())
    }

    fn require_lnds(&self) -> Result<()> {
        if self.lnds.is_empty() {
            Err(Error::NoLnds)
        } else {
            Ok(())
        }
    }
}

/// The ideal generated by the images of every verified LND.
pub fn combined_image_ideal(v: &VarietyDossier) -> Result<Ideal> {
    v.require_lnds()?;
    let gens: Vec<Polynomial> = v.verified().flat_map(|l| l.derivation.image_ideal().generators().to_vec()).collect();
    Ideal::new(v.algebra.arity(), gens)
}

/// The relations together with the combined images; its zero set is the
/// locus fixed by every supplied one-parameter subgroup.
pub fn fixed_locus(v: &VarietyDossier) -> Result<Ideal> {
    v.algebra.lift_ideal(&combined_image_ideal(v)?)
}

/// Gröbner basis exhibiting `1 ∈ I + relations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeACertificate {
    pub basis: GroebnerBasis,
}

impl TypeACertificate {
    /// Re-checks `NF(1) = 0`.
    pub fn check(&self) -> bool {
        self.basis.contains(&Polynomial::one(self.basis.arity())).unwrap_or(false)
    }
}

/// `Some` iff the supplied LNDs already prove type A. `None` says nothing
/// about the type.
pub fn test_type_a(v: &VarietyDossier) -> Result<Option<TypeACertificate>> {
    let basis = groebner(&fixed_locus(v)?, v.algebra.groebner_basis().order())?;
    Ok(basis.is_unit().then_some(TypeACertificate { basis }))
}

/// The right-hand side of the conjectured description
/// `HD*(Y × A¹) = K[Y] ⊕ ⊕_{i>0} I·u^i`, as a membership predicate on
/// `K[Y][u]` with `u` the last variable.
#[derive(Clone, Debug)]
pub struct ConjecturedHdStar {
    base: Arc<PresentedAlgebra>,
    ideal: GroebnerBasis,
}

impl ConjecturedHdStar {
    pub fn new(base: Arc<PresentedAlgebra>, ideal: &Ideal) -> Result<Self> {
        let basis = groebner(&base.lift_ideal(ideal)?, base.groebner_basis().order())?;
        Ok(ConjecturedHdStar { base, ideal: basis })
    }

    pub fn base(&self) -> &Arc<PresentedAlgebra> {
        &self.base
    }

    /// Coefficients `f_i` of `f = Σ f_i u^i`, as elements of the base ring.
    pub fn coefficients(&self, f: &Polynomial) -> Result<Vec<(u32, Polynomial)>> {
        let n = self.base.arity();
        if f.arity() != n + 1 {
            return Err(Error::ArityMismatch { expected: n + 1, found: f.arity() });
        }
        let f = self.base.groebner_basis().extended(n + 1)?.normal_form(f)?;
        let mut out = Vec::new();
        for (degree, part) in f.weighted_components(&coordinate_weights(n + 1, n))? {
            let terms = part.terms().iter().map(|(m, c)| {
                let mut exps = m.exponents().to_vec();
                exps.pop();
                (crate::monomial::Monomial::from_exponents(exps), c.clone())
            });
            out.push((degree as u32, Polynomial::from_terms(n, terms)?));
        }
        Ok(out)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        for (i, coefficient) in self.coefficients(f)? {
            if i > 0 && !self.ideal.contains(&coefficient)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// One-shot form of [`ConjecturedHdStar::contains`].
pub fn conjectured_hdstar_member(base: &Arc<PresentedAlgebra>, ideal: &Ideal, f: &Polynomial) -> Result<bool> {
    ConjecturedHdStar::new(base.clone(), ideal)?.contains(f)
}

/// `u^i·D` applied to the generator `x_j` gives `u^i·D(x_j)`, exhibiting
/// `D(x_j)` in `J_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JiLift {
    pub lnd: String,
    pub generator: usize,
    pub image: Polynomial,
    pub lifted: Derivation,
    pub verified: bool,
    pub identity_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JiCertificate {
    pub power: u32,
    pub cylinder: Arc<PresentedAlgebra>,
    /// Empty for `power = 0`, where `J_0 = K[Y]` holds trivially.
    pub lifts: Vec<JiLift>,
}

impl JiCertificate {
    pub fn holds(&self) -> bool {
        self.lifts.iter().all(|l| l.verified && l.identity_holds)
    }
}

/// Evidence for `I ⊆ J_i`, one lift per verified LND and generator with a
/// nonzero image.
pub fn ji_lower_bound_check(v: &VarietyDossier, power: u32, bound: u32) -> Result<JiCertificate> {
    v.require_lnds()?;
    let cylinder = Arc::new(v.algebra.cylinder());
    let mut lifts = Vec::new();
    if power > 0 {
        let n = cylinder.arity();
        let u_power = Polynomial::variable(n, n - 1).try_pow(power)?;
        for lnd in v.verified() {
            let lifted = lnd.derivation.lift(&cylinder, power)?;
            let verified = lifted.nilpotency_check(bound)?.is_verified();
            for (j, image) in lnd.derivation.images().iter().enumerate() {
                if image.is_zero() {
                    continue;
                }
                let lhs = lifted.apply(&cylinder.variable(j))?;
                let rhs = cylinder.normal_form(&(&image.with_arity(n)? * &u_power))?;
                lifts.push(JiLift {
                    lnd: lnd.name.clone(),
                    generator: j,
                    image: image.clone(),
                    lifted: lifted.clone(),
                    verified,
                    identity_holds: lhs == rhs,
                });
            }
        }
    }
    Ok(JiCertificate { power, cylinder, lifts })
}

/// `f` vanishes on the zero set of `ideal`, by the Rabinowitsch trick.
pub fn radical_contains(algebra: &PresentedAlgebra, ideal: &Ideal, f: &Polynomial) -> Result<bool> {
    algebra.check_arity(f)?;
    let n = algebra.arity() + 1;
    let t = Polynomial::variable(n, n - 1);
    let mut gens =
        algebra.lift_ideal(ideal)?.generators().iter().map(|g| g.with_arity(n)).collect::<Result<Vec<_>>>()?;
    gens.push(&Polynomial::one(n) - &(&t * &f.with_arity(n)?));
    Ideal::new(n, gens)?.contains_one()
}

fn delegate(
    report: Result<ClassificationReport>,
    what: &str,
    evidence: &mut Vec<Evidence>,
    candidate: &mut Option<Verdict>,
) -> Option<ClassificationReport> {
    match report {
        Ok(r) if r.verdict != Verdict::Inconclusive => Some(r),
        Ok(r) => {
            *candidate = candidate.or(r.candidate);
            evidence.extend(r.evidence);
            None
        }
        Err(e) => {
            evidence.push(Evidence::new(
                EvidenceKind::Supporting,
                format!("{what} tag rejected"),
                "Structural classifiers need valid, reduced data",
                format!("{e}"),
            ));
            None
        }
    }
}

/// Classification following the priority: structural tags, the image-ideal
/// certificate, rigidity, then the not-type-A tags. Errors in individual
/// criteria are recorded as evidence.
pub fn classify(v: &VarietyDossier, bound: u32) -> ClassificationReport {
    let mut evidence = Vec::new();
    let mut structural = None;
    if let Some(t) = &v.tags.trinomial {
        if let Some(r) = delegate(classify_trinomial(t), "trinomial", &mut evidence, &mut structural) {
            return r;
        }
    }
    if let Some(c) = &v.tags.toric {
        if let Some(r) = delegate(classify_toric(c, bound), "toric", &mut evidence, &mut structural) {
            return r;
        }
    }
    let scope = Scope::RelativeToSuppliedLnds;

    let mut locus_proper = false;
    if !v.lnds.is_empty() {
        for l in &v.lnds {
            if !l.is_verified() {
                evidence.push(Evidence::new(
                    EvidenceKind::Supporting,
                    format!("derivation `{}` not used", l.name),
                    "Only verified LNDs contribute images",
                    l.verdict.describe(v.algebra.vars()),
                ));
            }
        }
        match test_type_a(v) {
            Ok(Some(cert)) => {
                evidence.push(Evidence::new(
                    EvidenceKind::TypeA,
                    "1 in the image ideal",
                    IMAGE_IDEAL,
                    format!("reduced Gröbner basis of images + relations is {{1}} ({} LNDs)", v.verified().count()),
                ));
                debug_assert!(cert.check());
                return ClassificationReport::new(Verdict::A, scope, evidence);
            }
            Ok(None) => {
                locus_proper = true;
                evidence.push(Evidence::new(
                    EvidenceKind::Supporting,
                    "image ideal is proper",
                    IMAGE_IDEAL,
                    "images of the supplied LNDs have a common zero; supplied LNDs may be incomplete",
                ));
            }
            Err(e) => evidence.push(Evidence::new(
                EvidenceKind::Supporting,
                "image ideal not computed",
                IMAGE_IDEAL,
                format!("{e}"),
            )),
        }
    }

    if v.tags.rigid_asserted {
        evidence.push(Evidence::new(EvidenceKind::Rigid, "rigidity asserted", RIGID, "user assertion"));
        if let Some(l) = v.verified().find(|l| !l.derivation.is_zero()) {
            evidence.push(Evidence::new(
                EvidenceKind::Supporting,
                "assertion conflicts with a nonzero LND",
                NON_RIGID,
                format!("`{}`", l.name),
            ));
            return ClassificationReport::inconclusive(None, scope, evidence);
        }
        return ClassificationReport::new(Verdict::C, Scope::Absolute, evidence);
    }

    let witness = v.verified().find(|l| !l.derivation.is_zero());
    if let Some(l) = witness {
        evidence.push(Evidence::new(EvidenceKind::NonRigid, "nonzero LND", NON_RIGID, format!("`{}`", l.name)));
    }

    let mut not_a = false;
    if let Some(point) = &v.tags.invariant_line {
        match check_invariant_line(v, point) {
            Ok(data) => {
                not_a = true;
                evidence.push(Evidence::new(EvidenceKind::NotTypeA, "invariant line", INVARIANT_LINE, data));
            }
            Err(reason) => evidence.push(Evidence::new(
                EvidenceKind::Supporting,
                "invariant line tag rejected",
                INVARIANT_LINE,
                reason,
            )),
        }
    }
    if let Some(eqs) = &v.tags.stable_subset {
        match check_stable_subset(v, eqs) {
            Ok(data) => {
                not_a = true;
                evidence.push(Evidence::new(EvidenceKind::NotTypeA, "stable subset", STABLE_SUBSET, data));
            }
            Err(reason) => evidence.push(Evidence::new(
                EvidenceKind::Supporting,
                "stable subset tag rejected",
                STABLE_SUBSET,
                reason,
            )),
        }
    }

    if witness.is_some() && locus_proper && not_a {
        return ClassificationReport::new(Verdict::B, scope, evidence);
    }
    let candidate = if witness.is_some() && locus_proper { Some(Verdict::B) } else { structural };
    ClassificationReport::inconclusive(candidate, scope, evidence)
}

/// The tagged point lies on `Y` and is fixed by every supplied subgroup.
fn check_invariant_line(v: &VarietyDossier, point: &[Rational]) -> Result<String, String> {
    let alg = &v.algebra;
    if point.len() != alg.arity() {
        return Err(format!("point has {} coordinates, expected {}", point.len(), alg.arity()));
    }
    for (k, r) in alg.relations().iter().enumerate() {
        if !r.evaluate(point).map_err(|e| format!("{e}"))?.is_zero() {
            return Err(format!("relation {k} does not vanish at the point"));
        }
    }
    for l in v.verified() {
        for (j, g) in l.derivation.images().iter().enumerate() {
            if !g.evaluate(point).map_err(|e| format!("{e}"))?.is_zero() {
                return Err(format!("`{}` moves the point: image of {} does not vanish", l.name, alg.vars()[j]));
            }
        }
    }
    Ok(format!("point lies on Y and in the fixed locus of {} LNDs", v.verified().count()))
}

/// Every supplied image vanishes on the tagged subset.
fn check_stable_subset(v: &VarietyDossier, eqs: &[Polynomial]) -> Result<String, String> {
    let alg = &v.algebra;
    let ideal = Ideal::new(alg.arity(), eqs.iter().cloned()).map_err(|e| format!("{e}"))?;
    if alg.contains_one(&ideal).map_err(|e| format!("{e}"))? {
        return Err("the subset is empty".into());
    }
    for l in v.verified() {
        for (j, g) in l.derivation.images().iter().enumerate() {
            if !radical_contains(alg, &ideal, g).map_err(|e| format!("{e}"))? {
                return Err(format!("`{}` image of {} does not vanish on the subset", l.name, alg.vars()[j]));
            }
        }
    }
    Ok(format!("subset lies in the fixed locus of {} LNDs", v.verified().count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::integer;
    use alloc::vec;

    fn w1() -> VarietyDossier {
        let a = Arc::new(PresentedAlgebra::parse(&["x", "y", "z"], &["x*y - z^2 + 1"]).unwrap());
        let d = Derivation::parse(a.clone(), &["0", "2*z", "x"]).unwrap();
        let s = Derivation::parse(a.clone(), &["2*z", "0", "y"]).unwrap();
        VarietyDossier::new(a, vec![("d".into(), d), ("swap".into(), s)], Tags::default(), 64).unwrap()
    }

    fn quadric_cone(tags: Tags) -> VarietyDossier {
        let a = Arc::new(PresentedAlgebra::parse(&["x", "y", "z"], &["x*y - z^2"]).unwrap());
        let d = Derivation::parse(a.clone(), &["0", "2*z", "x"]).unwrap();
        VarietyDossier::new(a, vec![("d".into(), d)], tags, 64).unwrap()
    }

    #[test]
    fn danielewski_type_a() {
        let v = w1();
        let ideal = combined_image_ideal(&v).unwrap();
        assert_eq!(ideal.generators().len(), 4);
        assert!(v.algebra().contains_one(&ideal).unwrap());
        let cert = test_type_a(&v).unwrap().unwrap();
        assert!(cert.check());
        assert!(fixed_locus(&v).unwrap().contains_one().unwrap());
        let report = classify(&v, 10);
        assert_eq!(report.verdict, Verdict::A);
        assert!(report.is_consistent());
    }

    #[test]
    fn requires_lnds() {
        let a = Arc::new(PresentedAlgebra::parse(&["x"], &[]).unwrap());
        let v = VarietyDossier::new(a, vec![], Tags::default(), 8).unwrap();
        assert_eq!(combined_image_ideal(&v), Err(Error::NoLnds));
        assert_eq!(fixed_locus(&v), Err(Error::NoLnds));
        assert!(matches!(ji_lower_bound_check(&v, 1, 8), Err(Error::NoLnds)));
        assert_eq!(classify(&v, 10).verdict, Verdict::Inconclusive);
    }

    #[test]
    fn quadric_cone_fixed_locus_and_type_b() {
        let v = quadric_cone(Tags::default());
        let locus = fixed_locus(&v).unwrap();
        let alg = v.algebra();
        assert!(!locus.contains_one().unwrap());
        // {x = z = 0} is the y-axis
        let gb = groebner(&locus, &crate::order::MonomialOrder::Grevlex).unwrap();
        assert!(gb.contains(&alg.parse_element("x").unwrap()).unwrap());
        assert!(gb.contains(&alg.parse_element("z").unwrap()).unwrap());
        assert!(!gb.contains(&alg.parse_element("y").unwrap()).unwrap());
        assert_eq!(classify(&v, 10).verdict, Verdict::Inconclusive);
        assert_eq!(classify(&v, 10).candidate, Some(Verdict::B));

        let tagged = quadric_cone(Tags { invariant_line: Some(vec![integer(0); 3]), ..Tags::default() });
        let report = classify(&tagged, 10);
        assert_eq!(report.verdict, Verdict::B);
        assert!(report.is_consistent());

        let off =
            quadric_cone(Tags { invariant_line: Some(vec![integer(1), integer(1), integer(1)]), ..Tags::default() });
        assert_eq!(classify(&off, 10).verdict, Verdict::Inconclusive);

        let alg = v.algebra().clone();
        let origin =
            vec![alg.parse_element("x").unwrap(), alg.parse_element("y").unwrap(), alg.parse_element("z").unwrap()];
        let subset = quadric_cone(Tags { stable_subset: Some(origin), ..Tags::default() });
        assert_eq!(classify(&subset, 10).verdict, Verdict::B);
    }

    #[test]
    fn hdstar_membership() {
        let v = quadric_cone(Tags::default());
        let base = v.algebra().clone();
        let ideal = combined_image_ideal(&v).unwrap();
        let cyl = base.cylinder();
        let p = ConjecturedHdStar::new(base.clone(), &ideal).unwrap();
        assert!(p.contains(&cyl.parse_element("y^3 + z").unwrap()).unwrap());
        assert!(!p.contains(&cyl.parse_element("u").unwrap()).unwrap());
        assert!(p.contains(&cyl.parse_element("2*z*u^2").unwrap()).unwrap());
        assert!(!p.contains(&cyl.parse_element("y*u").unwrap()).unwrap());
        assert!(p.contains(&base.parse_element("x").unwrap()).is_err());
    }

    #[test]
    fn ji_certificates() {
        let v = w1();
        let cert = ji_lower_bound_check(&v, 3, 64).unwrap();
        assert_eq!(cert.lifts.len(), 4);
        assert!(cert.holds());
        let zero = ji_lower_bound_check(&v, 0, 64).unwrap();
        assert!(zero.lifts.is_empty() && zero.holds());
    }

    #[test]
    fn rigid_assertion() {
        let a = Arc::new(PresentedAlgebra::parse(&["x", "y"], &["x^2 - y^3 - 1"]).unwrap());
        let v = VarietyDossier::new(a, vec![], Tags { rigid_asserted: true, ..Tags::default() }, 8).unwrap();
        let r = classify(&v, 10);
        assert_eq!(r.verdict, Verdict::C);
        assert!(r.is_consistent());
    }
}
