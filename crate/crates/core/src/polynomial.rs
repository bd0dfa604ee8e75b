//! Sparse multivariate polynomials over the rationals.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::rational::{self, Rational};

pub type Term = (Monomial, Rational);

/// A polynomial in a fixed number of variables.
///
/// Terms are kept sorted ascending in grevlex order with nonzero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    arity: usize,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial { arity, terms: Vec::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(arity), c)
    }

    pub fn variable(arity: usize, index: usize) -> Self {
        Self::monomial(Monomial::variable(arity, index, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let arity = m.arity();
        if c.is_zero() {
            return Self::zero(arity);
        }
        Polynomial { arity, terms: alloc::vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            if m.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: m.arity() });
            }
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_map(arity, acc))
    }

    fn from_map(arity: usize, map: BTreeMap<Monomial, Rational>) -> Self {
        let terms = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { arity, terms }
    }

    /// Terms already sorted ascending in grevlex with no zeros or duplicates.
    pub(crate) fn from_sorted_terms(arity: usize, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { arity, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// The constant value, if the polynomial is constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// Leading term with respect to grevlex.
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.last()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Exponent of the highest power of variable `index` occurring.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponents()[index]).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(t, _)| t.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    fn check_arity(&self, other: &Polynomial) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        Ok(self.merge(other, |c| c.clone()))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        Ok(self.merge(other, |c| -c.clone()))
    }

    fn merge(&self, other: &Polynomial, map_other: impl Fn(&Rational) -> Rational) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Less => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((mb.clone(), map_other(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + map_other(cb);
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), map_other(c))));
        Polynomial { arity: self.arity, terms: out }
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.arity));
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb).ok_or(Error::ExponentOverflow)?;
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(slot) => *slot += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Self::from_map(self.arity, acc))
    }

    pub fn try_pow(&self, mut exp: u32) -> Result<Polynomial> {
        let mut result = Polynomial::one(self.arity);
        let mut square = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.try_mul(&square)?;
            }
            exp >>= 1;
            if exp > 0 {
                square = square.try_mul(&square)?;
            }
        }
        Ok(result)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { arity: self.arity, terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| Ok((t.checked_mul(m).ok_or(Error::ExponentOverflow)?, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial { arity: self.arity, terms })
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        if index >= self.arity {
            return Err(Error::IndexOutOfRange { index, arity: self.arity });
        }
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.exps_mut()[index] = e - 1;
            terms.push((d, c * rational::integer(i64::from(e))));
        }
        // lowering one exponent can reorder terms
        Self::from_terms(self.arity, terms)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: point.len() });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    value *= rational::pow(x, e);
                }
            }
            total += value;
        }
        Ok(total)
    }

    /// Splits into homogeneous components for the weight vector `weights`,
    /// sorted by increasing degree. Empty iff `self` is zero.
    pub fn weighted_components(&self, weights: &[i64]) -> Result<Vec<(i64, Polynomial)>> {
        if weights.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: weights.len() });
        }
        let mut parts: BTreeMap<i64, Vec<Term>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.weighted_degree(weights).ok_or(Error::DegreeOverflow)?;
            parts.entry(d).or_default().push((m.clone(), c.clone()));
        }
        Ok(parts.into_iter().map(|(d, terms)| (d, Polynomial { arity: self.arity, terms })).collect())
    }

    /// True iff all terms share one weighted degree.
    pub fn is_homogeneous(&self, weights: &[i64]) -> bool {
        let mut degrees = self.terms.iter().map(|(m, _)| m.weighted_degree(weights));
        match degrees.next() {
            None => true,
            Some(first) => first.is_some() && degrees.all(|d| d == first),
        }
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: images.len() });
        }
        let target = images.first().map_or(0, |p| p.arity);
        if let Some(bad) = images.iter().find(|p| p.arity != target) {
            return Err(Error::ArityMismatch { expected: target, found: bad.arity });
        }
        let mut total = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut value = Polynomial::constant(target, c.clone());
            for (image, &e) in images.iter().zip(m.exponents()) {
                if e > 0 {
                    value = value.try_mul(&image.try_pow(e)?)?;
                }
            }
            total = total.try_add(&value)?;
        }
        Ok(total)
    }

    /// Re-embeds into a ring of `arity` variables, appending fresh variables
    /// or dropping trailing ones that do not occur.
    pub fn with_arity(&self, arity: usize) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                m.with_arity(arity)
                    .map(|m| (m, c.clone()))
                    .ok_or(Error::ArityMismatch { expected: arity, found: self.arity })
            })
            .collect::<Result<Vec<_>>>()?;
        // appending or dropping unused trailing variables preserves grevlex order
        Ok(Polynomial { arity, terms })
    }

    /// True iff variable `index` does not occur.
    pub fn is_free_of(&self, index: usize) -> bool {
        self.terms.iter().all(|(m, _)| m.exponents()[index] == 0)
    }

    /// Ratio `c` with `self = c * other`, if one exists and `other` is nonzero.
    pub fn proportionality(&self, other: &Polynomial) -> Option<Rational> {
        if self.arity != other.arity || other.is_zero() || self.len() != other.len() {
            return None;
        }
        let (_, a0) = &self.terms[0];
        let (_, b0) = &other.terms[0];
        let ratio = a0 / b0;
        let same = self.terms.iter().zip(&other.terms).all(|((ma, ca), (mb, cb))| ma == mb && *ca == &ratio * cb);
        same.then_some(ratio)
    }

    /// Renders using the given variable names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names: Some(names) }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: Option<&'a [String]>,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::parse::write_polynomial(f, self.poly, self.names)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::parse::write_polynomial(f, self, None)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics on arity mismatch (or exponent overflow); use the
            /// `try_` method for a fallible version.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect(concat!("polynomial ", stringify!($method)))
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial { arity: self.arity, terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::integer;

    fn x(i: usize) -> Polynomial {
        Polynomial::variable(3, i)
    }

    fn c(v: i64) -> Polynomial {
        Polynomial::constant(3, integer(v))
    }

    #[test]
    fn arithmetic_examples() {
        assert!((&x(0) + &(-x(0))).is_zero());
        assert_eq!((&x(0) + &x(1)) * (&x(0) - &x(1)), &x(0) * &x(0) - &x(1) * &x(1));
        let cube = (&x(0) + &c(1)).try_pow(3).unwrap();
        let expected = x(0).try_pow(3).unwrap() + c(3) * x(0).try_pow(2).unwrap() + c(3) * x(0) + c(1);
        assert_eq!(cube, expected);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = Polynomial::variable(2, 0);
        let b = Polynomial::variable(3, 0);
        assert_eq!(a.try_add(&b), Err(Error::ArityMismatch { expected: 2, found: 3 }));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn exponent_overflow_is_an_error() {
        let big = Polynomial::monomial(Monomial::from_exponents(alloc::vec![u32::MAX]), integer(1));
        let y = Polynomial::variable(1, 0);
        assert_eq!(big.try_mul(&y), Err(Error::ExponentOverflow));
    }

    #[test]
    fn derivative_examples() {
        // d/dz (z^2 - 1) = 2z
        let f = &x(2) * &x(2) - c(1);
        assert_eq!(f.partial_derivative(2).unwrap(), c(2) * x(2));
        assert!(x(1).partial_derivative(0).unwrap().is_zero());
        // d/dx (x^2 y^3) = 2 x y^3
        let g = x(0).try_pow(2).unwrap() * x(1).try_pow(3).unwrap();
        assert_eq!(g.partial_derivative(0).unwrap(), c(2) * x(0) * x(1).try_pow(3).unwrap());
        assert_eq!(g.partial_derivative(3), Err(Error::IndexOutOfRange { index: 3, arity: 3 }));
    }

    #[test]
    fn evaluation_examples() {
        let f = &x(0) * &x(0) - x(1);
        assert_eq!(f.evaluate(&[integer(2), integer(4), integer(9)]).unwrap(), integer(0));
        assert_eq!(c(1).evaluate(&[integer(5), integer(-3), integer(7)]).unwrap(), integer(1));
        assert!(f.evaluate(&[integer(1)]).is_err());
    }

    #[test]
    fn weighted_components_examples() {
        // y + u^2 y with weights (0, 1) on (y, u)
        let y = Polynomial::variable(2, 0);
        let u = Polynomial::variable(2, 1);
        let f = &y + &(&u * &u * &y);
        let parts = f.weighted_components(&[0, 1]).unwrap();
        assert_eq!(parts, alloc::vec![(0, y.clone()), (2, &u * &u * &y)]);

        let t = Polynomial::variable(1, 0);
        let g = &t * &t + &t;
        assert_eq!(g.weighted_components(&[1]).unwrap(), alloc::vec![(1, t.clone()), (2, &t * &t)]);

        let h = &x(0) * &x(1) - &x(2) * &x(2) + c(1);
        let parts = h.weighted_components(&[1, 1, 1]).unwrap();
        assert_eq!(parts, alloc::vec![(0, c(1)), (2, &x(0) * &x(1) - &x(2) * &x(2))]);
        assert!(Polynomial::zero(3).weighted_components(&[1, 1, 1]).unwrap().is_empty());
        assert!(h.weighted_components(&[1]).is_err());
    }

    #[test]
    fn substitution_is_composition() {
        // (x + y)^2 with x -> z, y -> 1
        let f = (&x(0) + &x(1)).try_pow(2).unwrap();
        let g = f.substitute(&[x(2), c(1), x(2)]).unwrap();
        assert_eq!(g, (&x(2) + &c(1)).try_pow(2).unwrap());
    }

    #[test]
    fn proportionality() {
        let f = &x(0) + &x(1);
        assert_eq!(f.scale(&integer(-3)).proportionality(&f), Some(integer(-3)));
        assert_eq!(x(0).proportionality(&x(1)), None);
    }
}
