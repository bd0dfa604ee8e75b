//! Decomposition of derivations into homogeneous parts for integer
//! gradings.
//!
//! For a weight vector `w` making every relation homogeneous, the part of
//! degree `e` sends `x_j` to the `w_j + e` component of `D(x_j)`. Because the
//! relation ideal is graded, each part is again a well-defined derivation.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDerivationPart {
    pub degree: i64,
    pub part: Derivation,
}

/// A part for a pair of gradings, degrees ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedPart {
    pub degree: (i64, i64),
    pub part: Derivation,
}

fn check_grading(d: &Derivation, weights: &[i64]) -> Result<()> {
    let algebra = d.algebra();
    if weights.len() != algebra.arity() {
        return Err(Error::ArityMismatch { expected: algebra.arity(), found: weights.len() });
    }
    if let Some(relation) = algebra.incompatible_relation(weights) {
        return Err(Error::IncompatibleGrading { relation });
    }
    if !d.is_well_defined() {
        return Err(Error::NotWellDefined);
    }
    Ok(())
}

/// Groups image components by a degree key and assembles one derivation per
/// key.
fn assemble<K: Ord + Clone>(
    d: &Derivation,
    key: impl Fn(usize, &crate::monomial::Monomial) -> Result<K>,
) -> Result<Vec<(K, Derivation)>> {
    let algebra = d.algebra();
    let n = algebra.arity();
    let mut buckets: BTreeMap<K, Vec<Vec<crate::polynomial::Term>>> = BTreeMap::new();
    for (j, image) in d.images().iter().enumerate() {
        for (m, c) in image.terms() {
            let k = key(j, m)?;
            buckets.entry(k).or_insert_with(|| alloc::vec![Vec::new(); n])[j].push((m.clone(), c.clone()));
        }
    }
    buckets
        .into_iter()
        .map(|(k, images)| {
            let images =
                images.into_iter().map(|terms| Polynomial::from_terms(n, terms)).collect::<Result<Vec<_>>>()?;
            Ok((k, Derivation::new(algebra.clone(), images)?))
        })
        .collect()
}

fn shifted_degree(weights: &[i64], j: usize, m: &crate::monomial::Monomial) -> Result<i64> {
    m.weighted_degree(weights).and_then(|deg| deg.checked_sub(weights[j])).ok_or(Error::DegreeOverflow)
}

/// Homogeneous parts of `d` in increasing degree; zero parts are omitted, so
/// the first and last entries are nonzero and `D = 0` gives an empty list.
pub fn decompose(d: &Derivation, weights: &[i64]) -> Result<Vec<GradedDerivationPart>> {
    check_grading(d, weights)?;
    Ok(assemble(d, |j, m| shifted_degree(weights, j, m))?
        .into_iter()
        .map(|(degree, part)| GradedDerivationPart { degree, part })
        .collect())
}

/// Parts for the `Z²`-grading given by two weight vectors.
pub fn decompose_bigraded(d: &Derivation, first: &[i64], second: &[i64]) -> Result<Vec<BigradedPart>> {
    check_grading(d, first)?;
    check_grading(d, second)?;
    Ok(assemble(d, |j, m| Ok((shifted_degree(first, j, m)?, shifted_degree(second, j, m)?)))?
        .into_iter()
        .map(|(degree, part)| BigradedPart { degree, part })
        .collect())
}

/// Lowest and highest homogeneous parts.
pub fn extreme_parts(d: &Derivation, weights: &[i64]) -> Result<(GradedDerivationPart, GradedDerivationPart)> {
    let mut parts = decompose(d, weights)?;
    if parts.is_empty() {
        return Err(Error::ZeroDerivation);
    }
    let highest = parts.pop().expect("nonempty");
    let lowest = if parts.is_empty() { highest.clone() } else { parts.swap_remove(0) };
    Ok((lowest, highest))
}

/// Imagewise sum of parts.
pub fn recombine(parts: &[GradedDerivationPart]) -> Result<Option<Derivation>> {
    let mut iter = parts.iter();
    let Some(first) = iter.next() else { return Ok(None) };
    iter.try_fold(first.part.clone(), |acc, p| acc.try_add(&p.part)).map(Some)
}

/// True iff `d` maps every generator `x_j` to zero or to a polynomial
/// homogeneous of degree `w_j + degree`.
pub fn is_homogeneous_of_degree(d: &Derivation, weights: &[i64], degree: i64) -> bool {
    d.images().iter().enumerate().all(|(j, image)| {
        image.terms().iter().all(|(m, _)| m.weighted_degree(weights) == weights[j].checked_add(degree))
    })
}

/// Weight vector giving the variable `index` weight 1 and all others 0.
pub fn coordinate_weights(arity: usize, index: usize) -> Vec<i64> {
    (0..arity).map(|j| i64::from(j == index)).collect()
}

/// For a derivation of the form `f · ∂/∂x_index` with `f` free of `x_index`,
/// returns `f`.
pub fn translation_coefficient(d: &Derivation, index: usize) -> Option<Polynomial> {
    let images = d.images();
    let others_vanish = images.iter().enumerate().all(|(j, g)| j == index || g.is_zero());
    let f = &images[index];
    (others_vanish && f.is_free_of(index)).then(|| f.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PresentedAlgebra;
    use alloc::sync::Arc;
    use alloc::vec;

    #[test]
    fn single_homogeneous_part() {
        let a = Arc::new(PresentedAlgebra::parse(&["x", "y"], &[]).unwrap());
        let d = Derivation::parse(a, &["y^2", "0"]).unwrap();
        let parts = decompose(&d, &[1, 1]).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].degree, 1);
        assert_eq!(parts[0].part, d);
        let (lo, hi) = extreme_parts(&d, &[1, 1]).unwrap();
        assert_eq!(lo, hi);
    }

    #[test]
    fn cylinder_split_by_u_degree() {
        let base = Arc::new(PresentedAlgebra::parse(&["x", "y", "z"], &["x*y - z^2 + 1"]).unwrap());
        let cyl = Arc::new(base.cylinder());
        // ∂/∂u + u·D with D the canonical LND
        let d = Derivation::parse(cyl.clone(), &["0", "2*z*u", "x*u", "1"]).unwrap();
        let w = coordinate_weights(4, 3);
        let parts = decompose(&d, &w).unwrap();
        let degrees: Vec<i64> = parts.iter().map(|p| p.degree).collect();
        assert_eq!(degrees, vec![-1, 1]);
        assert_eq!(translation_coefficient(&parts[0].part, 3), Some(Polynomial::one(4)));
        assert_eq!(recombine(&parts).unwrap().unwrap(), d);
        for p in &parts {
            assert!(is_homogeneous_of_degree(&p.part, &w, p.degree));
        }
    }

    #[test]
    fn zero_and_incompatible() {
        let a = Arc::new(PresentedAlgebra::parse(&["x", "y", "z"], &["x*y - z^2 + 1"]).unwrap());
        let zero = Derivation::zero(a.clone());
        assert!(decompose(&zero, &[1, -1, 0]).unwrap().is_empty());
        assert_eq!(extreme_parts(&zero, &[1, -1, 0]), Err(Error::ZeroDerivation));
        let d = Derivation::parse(a, &["0", "2*z", "x"]).unwrap();
        assert_eq!(decompose(&d, &[1, 1, 1]), Err(Error::IncompatibleGrading { relation: 0 }));
        // weights (1,-1,0): y -> 2z raises degree by 1, z -> x raises by 1
        let parts = decompose(&d, &[1, -1, 0]).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].degree, 1);
    }

    #[test]
    fn bigraded_parts_are_lexicographic() {
        let a = Arc::new(PresentedAlgebra::parse(&["x", "y"], &[]).unwrap());
        let d = Derivation::parse(a, &["1 + y", "x^2"]).unwrap();
        let parts = decompose_bigraded(&d, &[1, 0], &[0, 1]).unwrap();
        let degrees: Vec<_> = parts.iter().map(|p| p.degree).collect();
        assert_eq!(degrees, vec![(-1, 0), (-1, 1), (2, -1)]);
    }
}
