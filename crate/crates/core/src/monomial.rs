use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Exponent vector of a monomial. The `Ord` impl is graded reverse
/// lexicographic with respect to the variable order, which is the canonical
/// storage order for [`Polynomial`](crate::Polynomial).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial { exps: vec![0; arity] }
    }

    pub fn variable(arity: usize, index: usize, exp: u32) -> Self {
        let mut exps = vec![0; arity];
        exps[index] = exp;
        Monomial { exps }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.arity(), other.arity());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a.checked_add(*b)).collect::<Option<Vec<_>>>()?;
        Some(Monomial { exps })
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial { exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Σ w_i e_i`, or `None` on overflow.
    pub fn weighted_degree(&self, weights: &[i64]) -> Option<i64> {
        let mut total: i64 = 0;
        for (&e, &w) in self.exps.iter().zip(weights) {
            total = total.checked_add(w.checked_mul(i64::from(e))?)?;
        }
        Some(total)
    }

    /// Same exponents embedded into a ring with `arity` variables; the new
    /// variables are appended with exponent zero. Returns `None` when
    /// shrinking would drop a variable that occurs.
    pub fn with_arity(&self, arity: usize) -> Option<Monomial> {
        if arity >= self.arity() {
            let mut exps = self.exps.clone();
            exps.resize(arity, 0);
            Some(Monomial { exps })
        } else if self.exps[arity..].iter().all(|&e| e == 0) {
            Some(Monomial { exps: self.exps[..arity].to_vec() })
        } else {
            None
        }
    }

    pub(crate) fn exps_mut(&mut self) -> &mut Vec<u32> {
        &mut self.exps
    }
}

pub(crate) fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable wins
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(&self.exps, &other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
