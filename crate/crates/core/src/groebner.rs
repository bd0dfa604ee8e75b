//! Ideals, reduced Gröbner bases and normal forms.
//!
//! Buchberger's algorithm with the normal selection strategy (smallest lcm
//! first) and the Gebauer–Möller installation of the product and chain
//! criteria. Output is deterministic for fixed input and order.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::polynomial::{Polynomial, Term};
use crate::rational::Rational;

pub const DEFAULT_MAX_PAIRS: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Processed S-pair budget before giving up with [`Error::ResourceLimit`].
    pub max_pairs: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_pairs: DEFAULT_MAX_PAIRS }
    }
}

/// A finitely generated ideal of a polynomial ring. Zero generators are
/// dropped, so the zero ideal has no generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    arity: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(arity: usize, generators: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if g.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: g.arity() });
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal { arity, generators: gens })
    }

    pub fn zero(arity: usize) -> Self {
        Ideal { arity, generators: Vec::new() }
    }

    pub fn unit(arity: usize) -> Self {
        Ideal { arity, generators: alloc::vec![Polynomial::one(arity)] }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The ideal generated by both generator lists.
    pub fn join(&self, other: &Ideal) -> Result<Ideal> {
        Ideal::new(self.arity, self.generators.iter().chain(&other.generators).cloned())
    }

    pub fn groebner(&self, order: &MonomialOrder) -> Result<GroebnerBasis> {
        groebner(self, order)
    }

    /// True iff 1 lies in the ideal.
    pub fn contains_one(&self) -> Result<bool> {
        Ok(groebner(self, &MonomialOrder::Grevlex)?.is_unit())
    }
}

/// Reduced, monic Gröbner basis sorted ascending by leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    arity: usize,
    basis: Vec<Polynomial>,
    sorted: Vec<Vec<Term>>,
}

impl GroebnerBasis {
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    /// Leading monomials in the basis order.
    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.sorted.iter().map(|g| &g.last().expect("nonzero basis element").0)
    }

    /// Full reduction remainder; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.arity() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: f.arity() });
        }
        Ok(self.reduce(f))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub(crate) fn reduce(&self, f: &Polynomial) -> Polynomial {
        if self.sorted.is_empty() || f.is_zero() {
            return f.clone();
        }
        let p = to_order(f, &self.order);
        let r = reduce_full(p, self.sorted.iter().map(Vec::as_slice), &self.order);
        from_order(self.arity, r, &self.order)
    }

    /// Same basis viewed in a ring with extra trailing variables that no
    /// basis element involves.
    pub(crate) fn extended(&self, arity: usize) -> Result<GroebnerBasis> {
        if arity < self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: arity });
        }
        // appending variables that occur nowhere keeps leading terms for every
        // supported order
        let appended = match &self.order {
            MonomialOrder::Weighted(w) => {
                let mut w = w.clone();
                w.resize(arity, 1);
                MonomialOrder::Weighted(w)
            }
            other => other.clone(),
        };
        let basis: Vec<Polynomial> = self.basis.iter().map(|g| g.with_arity(arity)).collect::<Result<_>>()?;
        let sorted = basis.iter().map(|g| to_order(g, &appended)).collect();
        Ok(GroebnerBasis { order: appended, arity, basis, sorted })
    }
}

fn to_order(f: &Polynomial, order: &MonomialOrder) -> Vec<Term> {
    let mut terms = f.terms().to_vec();
    if !matches!(order, MonomialOrder::Grevlex) {
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
    }
    terms
}

fn from_order(arity: usize, mut terms: Vec<Term>, order: &MonomialOrder) -> Polynomial {
    if !matches!(order, MonomialOrder::Grevlex) {
        terms.sort_by(|a, b| a.0.cmp(&b.0));
    }
    Polynomial::from_sorted_terms(arity, terms)
}

/// `p - coef * shift * g`, all lists ascending in `order`.
fn sub_scaled(p: &[Term], coef: &Rational, shift: &Monomial, g: &[Term], order: &MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut scaled = g.iter().map(|(m, c)| (m.checked_mul(shift).expect("lcm-bounded exponents"), c * coef));
    let mut i = 0;
    let mut next = scaled.next();
    while let Some((m, c)) = next.take() {
        while i < p.len() && order.cmp(&p[i].0, &m) == Ordering::Less {
            out.push(p[i].clone());
            i += 1;
        }
        if i < p.len() && p[i].0 == m {
            let v = &p[i].1 - c;
            if !v.is_zero() {
                out.push((m, v));
            }
            i += 1;
        } else {
            out.push((m, -c));
        }
        next = scaled.next();
    }
    out.extend_from_slice(&p[i..]);
    out
}

fn reduce_full<'a>(
    mut p: Vec<Term>,
    basis: impl Iterator<Item = &'a [Term]> + Clone,
    order: &MonomialOrder,
) -> Vec<Term> {
    let mut rem: Vec<Term> = Vec::new();
    while let Some((m, c)) = p.last() {
        let divisor = basis.clone().find(|g| g.last().is_some_and(|(lm, _)| lm.divides(m)));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.last().expect("nonzero divisor");
                let shift = lm.quotient_of(m).expect("divides");
                let coef = c / lc;
                p = sub_scaled(&p, &coef, &shift, g, order);
            }
            None => rem.push(p.pop().expect("nonempty")),
        }
    }
    rem.reverse();
    rem
}

fn make_monic(p: &mut [Term]) {
    if let Some((_, lc)) = p.last() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in p.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

fn spoly(f: &[Term], g: &[Term], order: &MonomialOrder) -> Vec<Term> {
    let (lf, cf) = f.last().expect("nonzero");
    let (lg, cg) = g.last().expect("nonzero");
    let lcm = lf.lcm(lg);
    let sf = lf.quotient_of(&lcm).expect("lcm");
    let sg = lg.quotient_of(&lcm).expect("lcm");
    let mut left: Vec<Term> =
        f.iter().map(|(m, c)| (m.checked_mul(&sf).expect("lcm-bounded exponents"), c / cf)).collect();
    // leading terms cancel exactly
    left.pop();
    let mut g_rest = g.to_vec();
    g_rest.pop();
    sub_scaled(&left, &cg.recip(), &sg, &g_rest, order)
}

/// S-polynomial of `f` and `g` with respect to `order`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    if f.arity() != g.arity() {
        return Err(Error::ArityMismatch { expected: f.arity(), found: g.arity() });
    }
    if f.is_zero() || g.is_zero() {
        return Ok(Polynomial::zero(f.arity()));
    }
    let s = spoly(&to_order(f, order), &to_order(g, order), order);
    Ok(from_order(f.arity(), s, order))
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Buchberger<'o> {
    order: &'o MonomialOrder,
    polys: Vec<Vec<Term>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Buchberger<'_> {
    fn lm(&self, k: usize) -> &Monomial {
        &self.polys[k].last().expect("nonzero").0
    }

    /// Gebauer–Möller update after adding polynomial `h`.
    fn update(&mut self, h: usize) {
        let lh = self.lm(h).clone();
        let candidates: Vec<Pair> =
            (0..h).filter(|&g| self.active[g]).map(|g| Pair { i: g, j: h, lcm: self.lm(g).lcm(&lh) }).collect();

        let mut kept: Vec<Pair> = Vec::new();
        for (idx, p) in candidates.iter().enumerate() {
            let coprime = self.lm(p.i).is_coprime(&lh);
            let dominated = candidates[idx + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p.clone());
            }
        }
        kept.retain(|p| !self.lm(p.i).is_coprime(&lh));

        let order_lcm = |a: &Monomial, b: &Monomial| a.lcm(b);
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let li = &polys[p.i].last().expect("nonzero").0;
            let lj = &polys[p.j].last().expect("nonzero").0;
            !(lh.divides(&p.lcm) && order_lcm(li, &lh) != p.lcm && order_lcm(lj, &lh) != p.lcm)
        });
        self.pairs.extend(kept);

        for g in 0..h {
            if self.active[g] && lh.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    fn push(&mut self, mut p: Vec<Term>) -> usize {
        make_monic(&mut p);
        self.polys.push(p);
        self.active.push(false);
        let h = self.polys.len() - 1;
        self.update(h);
        h
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| order.cmp(&a.lcm, &b.lcm).then((a.j, a.i).cmp(&(b.j, b.i))))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn active_basis(&self) -> impl Iterator<Item = &[Term]> + Clone {
        self.polys.iter().zip(&self.active).filter(|(_, a)| **a).map(|(p, _)| p.as_slice())
    }
}

pub fn groebner(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    groebner_with(ideal, order, &GroebnerConfig::default())
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn groebner_with(ideal: &Ideal, order: &MonomialOrder, config: &GroebnerConfig) -> Result<GroebnerBasis> {
    if let MonomialOrder::Weighted(w) = order {
        if w.len() != ideal.arity {
            return Err(Error::InvalidOrder(alloc::format!("{} weights for {} variables", w.len(), ideal.arity)));
        }
    }
    let arity = ideal.arity;
    let unit = || {
        let one = Polynomial::one(arity);
        let sorted = alloc::vec![one.terms().to_vec()];
        Ok(GroebnerBasis { order: order.clone(), arity, basis: alloc::vec![one], sorted })
    };
    if ideal.generators.iter().any(|g| g.as_constant().is_some()) {
        return unit();
    }

    let mut state = Buchberger { order, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for g in &ideal.generators {
        state.push(to_order(g, order));
    }

    let mut processed = 0usize;
    while let Some(pair) = state.next_pair() {
        processed += 1;
        if processed > config.max_pairs {
            return Err(Error::ResourceLimit { pairs: config.max_pairs });
        }
        let s = spoly(&state.polys[pair.i], &state.polys[pair.j], order);
        let r = reduce_full(s, state.active_basis(), order);
        if r.is_empty() {
            continue;
        }
        if r.len() == 1 && r[0].0.is_one() {
            return unit();
        }
        state.push(r);
    }

    // minimal basis: active leading monomials are pairwise non-dividing except
    // for possible duplicates among the original generators
    let mut minimal: Vec<Vec<Term>> = Vec::new();
    for p in state.active_basis() {
        let lm = &p.last().expect("nonzero").0;
        if minimal.iter().any(|q| q.last().expect("nonzero").0.divides(lm)) {
            continue;
        }
        minimal.retain(|q| !lm.divides(&q.last().expect("nonzero").0));
        minimal.push(p.to_vec());
    }

    let mut reduced: Vec<Vec<Term>> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let mut p = minimal[k].clone();
        let lead = p.pop().expect("nonzero");
        let others = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, q)| q.as_slice());
        let mut tail = reduce_full(p, others, order);
        tail.push(lead);
        make_monic(&mut tail);
        reduced.push(tail);
    }
    reduced.sort_by(|a, b| order.cmp(&a.last().expect("nonzero").0, &b.last().expect("nonzero").0));

    let basis = reduced.iter().map(|p| from_order(arity, p.clone(), order)).collect();
    Ok(GroebnerBasis { order: order.clone(), arity, basis, sorted: reduced })
}

/// Rank over ℚ of the Jacobian of `relations` at `point`.
pub fn jacobian_rank_at_point(relations: &[Polynomial], point: &[Rational]) -> Result<usize> {
    for (k, g) in relations.iter().enumerate() {
        if !g.evaluate(point)?.is_zero() {
            return Err(Error::PointNotOnVariety { relation: k });
        }
    }
    let mut rows = Vec::with_capacity(relations.len());
    for g in relations {
        let row = (0..g.arity()).map(|j| g.partial_derivative(j)?.evaluate(point)).collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(linalg::rank(rows))
}
