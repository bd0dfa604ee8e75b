#![allow(dead_code)]

use std::sync::Arc;

use lndkit_core::monomial::Monomial;
use lndkit_core::rational::rational;
use lndkit_core::{Derivation, Polynomial, PresentedAlgebra};
use proptest::prelude::*;

pub fn algebra(vars: &[&str], relations: &[&str]) -> Arc<PresentedAlgebra> {
    Arc::new(PresentedAlgebra::parse(vars, relations).unwrap())
}

pub fn derivation(a: &Arc<PresentedAlgebra>, images: &[&str]) -> Derivation {
    Derivation::parse(a.clone(), images).unwrap()
}

/// The corpus: a named algebra with one verified LND on it.
pub fn corpus() -> Vec<(&'static str, Derivation)> {
    let plane = algebra(&["x", "y"], &[]);
    let w1 = algebra(&["x", "y", "z"], &["x*y - z^2 + 1"]);
    let susp = algebra(&["z", "y1", "y2"], &["y1*y2 - z^2 + 1"]);
    let trinomial = algebra(&["T11", "T12", "T21"], &["T11*T12 - T21^2 - 1"]);
    vec![
        ("plane", derivation(&plane, &["y^2", "1"])),
        ("w1", derivation(&w1, &["0", "2*z", "x"])),
        ("suspension", derivation(&susp, &["y2", "2*z", "0"])),
        ("trinomial", derivation(&trinomial, &["2*T21", "0", "T12"])),
    ]
}

/// Polynomials in `arity` variables with total degree at most `degree` and
/// at most `terms` terms.
pub fn poly(arity: usize, degree: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0..=degree, arity), -6i64..=6, 1i64..=3);
    prop::collection::vec(term, 0..=terms).prop_map(move |ts| {
        let ts = ts.into_iter().filter_map(|(mut e, n, d)| {
            while e.iter().sum::<u32>() > degree {
                let k = e.iter().position(|&x| x > 0).unwrap();
                e[k] -= 1;
            }
            (n != 0).then(|| (Monomial::from_exponents(e), rational(n, d)))
        });
        Polynomial::from_terms(arity, ts).unwrap()
    })
}

pub fn small_rational() -> impl Strategy<Value = lndkit_core::Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rational(n, d))
}
