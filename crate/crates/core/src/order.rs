use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::monomial::{grevlex, Monomial};

/// Term orders available to the Gröbner kernel.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    /// Nonnegative weights compared first, ties broken by grevlex.
    Weighted(Vec<u32>),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Grevlex => grevlex(a.exponents(), b.exponents()),
            MonomialOrder::Weighted(w) => {
                let wa = weight(w, a);
                let wb = weight(w, b);
                wa.cmp(&wb).then_with(|| grevlex(a.exponents(), b.exponents()))
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Weighted(_) => "weighted",
        }
    }
}

fn weight(w: &[u32], m: &Monomial) -> u128 {
    w.iter().zip(m.exponents()).map(|(&a, &e)| u128::from(a) * u128::from(e)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn lex_prefers_first_variable() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Less);
    }

    #[test]
    fn weighted_breaks_ties_with_grevlex() {
        let order = MonomialOrder::Weighted(vec![0, 1]);
        assert_eq!(order.cmp(&m(&[5, 0]), &m(&[0, 1])), Ordering::Less);
        assert_eq!(order.cmp(&m(&[2, 1]), &m(&[1, 1])), Ordering::Greater);
    }

    #[test]
    fn one_is_minimal_and_order_is_multiplicative() {
        let monos = [m(&[0, 0, 0]), m(&[1, 0, 2]), m(&[0, 3, 0]), m(&[2, 1, 1]), m(&[0, 0, 1])];
        for order in [MonomialOrder::Lex, MonomialOrder::Grevlex, MonomialOrder::Weighted(vec![2, 0, 1])] {
            for a in &monos {
                assert_ne!(order.cmp(a, &monos[0]), Ordering::Less);
                for b in &monos {
                    for c in &monos {
                        let ac = a.checked_mul(c).unwrap();
                        let bc = b.checked_mul(c).unwrap();
                        assert_eq!(order.cmp(a, b), order.cmp(&ac, &bc));
                    }
                }
            }
        }
    }
}
