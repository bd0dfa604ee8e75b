//! Derivations of presented algebras and the additive group actions of
//! locally nilpotent ones.
//!
//! A derivation is fixed by the images of the generators and acts on a
//! representative `f` by the chain rule `D(f) = Σ ∂f/∂x_j · D(x_j)`, with the
//! result reduced modulo the relations. It descends to the quotient iff
//! every relation is mapped into the relation ideal, which is checked once at
//! construction and recorded in a [`WellDefinedness`] certificate.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::PresentedAlgebra;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};

/// Name of the extra variable carrying the formal group parameter.
pub const FORMAL_PARAMETER: &str = "_s";

pub const DEFAULT_NILPOTENCY_BOUND: u32 = 64;

/// Residues of the relations under a derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WellDefinedness {
    /// Normal form of `D(g)` for each relation `g`, in relation order.
    pub residues: Vec<Polynomial>,
}

impl WellDefinedness {
    pub fn holds(&self) -> bool {
        self.residues.iter().all(Polynomial::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NilpotencyVerdict {
    /// Every generator is killed by some power `D^k`, `k <= max_order`.
    VerifiedLnd { max_order: u32, orders: Vec<u32> },
    /// `D^order(x) = ratio * D^earlier(x) != 0`, so `x` is never killed.
    NotNilpotent { var: usize, order: u32, earlier: u32, ratio: Rational },
    /// Neither a proof nor a cycle was found within the bound.
    Inconclusive { bound: u32 },
}

impl NilpotencyVerdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, NilpotencyVerdict::VerifiedLnd { .. })
    }

    /// Readable form using the generator names of the algebra.
    pub fn describe(&self, names: &[String]) -> String {
        match self {
            NilpotencyVerdict::VerifiedLnd { max_order, .. } => format!("verified LND, max order {max_order}"),
            NilpotencyVerdict::NotNilpotent { var, order, earlier, ratio } => {
                let x = names.get(*var).map_or_else(|| format!("x{var}"), String::clone);
                format!("not nilpotent: D^{order}({x}) = {ratio} * D^{earlier}({x}) != 0")
            }
            NilpotencyVerdict::Inconclusive { bound } => format!("inconclusive within {bound} iterations"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    algebra: Arc<PresentedAlgebra>,
    images: Vec<Polynomial>,
    certificate: WellDefinedness,
}

impl Derivation {
    /// Derivation with `images[j] = D(x_j)`; images are stored in normal form.
    pub fn new(algebra: Arc<PresentedAlgebra>, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != algebra.arity() {
            return Err(Error::ArityMismatch { expected: algebra.arity(), found: images.len() });
        }
        let images = images.iter().map(|p| algebra.normal_form(p)).collect::<Result<Vec<_>>>()?;
        let mut d = Derivation { algebra, images, certificate: WellDefinedness { residues: Vec::new() } };
        let residues = d.algebra.relations().iter().map(|g| d.apply_unchecked(g)).collect();
        d.certificate = WellDefinedness { residues };
        Ok(d)
    }

    /// Parses one image per generator.
    pub fn parse<S: AsRef<str>>(algebra: Arc<PresentedAlgebra>, images: &[S]) -> Result<Self> {
        let images = images.iter().map(|s| algebra.parse_element(s.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::new(algebra, images)
    }

    pub fn zero(algebra: Arc<PresentedAlgebra>) -> Self {
        let n = algebra.arity();
        Self::new(algebra, alloc::vec![Polynomial::zero(n); n]).expect("zero derivation")
    }

    /// `∂/∂x_index` (meaningful on the quotient when no relation involves it).
    pub fn coordinate(algebra: Arc<PresentedAlgebra>, index: usize) -> Result<Self> {
        let n = algebra.arity();
        if index >= n {
            return Err(Error::IndexOutOfRange { index, arity: n });
        }
        let images = (0..n).map(|j| if j == index { Polynomial::one(n) } else { Polynomial::zero(n) }).collect();
        Self::new(algebra, images)
    }

    pub fn algebra(&self) -> &Arc<PresentedAlgebra> {
        &self.algebra
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn image(&self, index: usize) -> &Polynomial {
        &self.images[index]
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Polynomial::is_zero)
    }

    pub fn certificate(&self) -> &WellDefinedness {
        &self.certificate
    }

    pub fn is_well_defined(&self) -> bool {
        self.certificate.holds()
    }

    fn require_well_defined(&self) -> Result<()> {
        if self.is_well_defined() {
            Ok(())
        } else {
            Err(Error::NotWellDefined)
        }
    }

    fn apply_unchecked(&self, f: &Polynomial) -> Polynomial {
        let n = self.algebra.arity();
        let mut total = Polynomial::zero(n);
        for (j, image) in self.images.iter().enumerate() {
            if image.is_zero() || f.is_free_of(j) {
                continue;
            }
            let partial = f.partial_derivative(j).expect("index in range");
            total = &total + &(&partial * image);
        }
        self.algebra.reduce(&total)
    }

    /// `D(f)` in normal form.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        self.algebra.check_arity(f)?;
        Ok(self.apply_unchecked(f))
    }

    /// `D^k(f)`.
    pub fn apply_n(&self, f: &Polynomial, k: u32) -> Result<Polynomial> {
        let mut g = self.algebra.normal_form(f)?;
        for _ in 0..k {
            if g.is_zero() {
                break;
            }
            g = self.apply_unchecked(&g);
        }
        Ok(g)
    }

    pub fn kernel_membership(&self, f: &Polynomial) -> Result<bool> {
        self.require_well_defined()?;
        Ok(self.apply(f)?.is_zero())
    }

    /// True iff `D(s) = 1`.
    pub fn check_slice(&self, s: &Polynomial) -> Result<bool> {
        self.require_well_defined()?;
        Ok(self.apply(s)?.is_one())
    }

    /// Ideal generated by the images of the generators, which is the image
    /// ideal because `D(f) = Σ ∂f/∂x_j · D(x_j)`.
    pub fn image_ideal(&self) -> Ideal {
        Ideal::new(self.algebra.arity(), self.images.iter().cloned()).expect("images share the arity")
    }

    /// Iterates `D` on each generator up to `bound` times.
    pub fn nilpotency_check(&self, bound: u32) -> Result<NilpotencyVerdict> {
        self.require_well_defined()?;
        let n = self.algebra.arity();
        let mut orders = Vec::with_capacity(n);
        let mut inconclusive = false;
        for var in 0..n {
            let mut chain: Vec<Polynomial> = alloc::vec![self.algebra.reduce(&self.algebra.variable(var))];
            let mut order = None;
            for k in 0..=bound {
                let current = &chain[k as usize];
                if current.is_zero() {
                    order = Some(k);
                    break;
                }
                if let Some((earlier, ratio)) = chain[..k as usize]
                    .iter()
                    .enumerate()
                    .find_map(|(j, prev)| current.proportionality(prev).map(|r| (j, r)))
                {
                    return Ok(NilpotencyVerdict::NotNilpotent { var, order: k, earlier: earlier as u32, ratio });
                }
                if k < bound {
                    let next = self.apply_unchecked(current);
                    chain.push(next);
                }
            }
            match order {
                Some(k) => orders.push(k),
                None => {
                    inconclusive = true;
                    orders.push(bound + 1);
                }
            }
        }
        if inconclusive {
            return Ok(NilpotencyVerdict::Inconclusive { bound });
        }
        let max_order = orders.iter().copied().max().unwrap_or(0);
        Ok(NilpotencyVerdict::VerifiedLnd { max_order, orders })
    }

    /// Runs [`nilpotency_check`](Self::nilpotency_check) and wraps a verified
    /// derivation.
    pub fn verify_lnd(&self, bound: u32) -> Result<Lnd> {
        match self.nilpotency_check(bound)? {
            NilpotencyVerdict::VerifiedLnd { orders, .. } => Ok(Lnd { derivation: self.clone(), orders }),
            other => Err(Error::NotVerifiedLnd(other.describe(self.algebra.vars()))),
        }
    }

    /// `h * D`.
    pub fn scaled(&self, h: &Polynomial) -> Result<Derivation> {
        self.algebra.check_arity(h)?;
        let images = self.images.iter().map(|g| g * h).collect();
        Derivation::new(self.algebra.clone(), images)
    }

    pub fn try_add(&self, other: &Derivation) -> Result<Derivation> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch("summands live on different algebras".into()));
        }
        let images = self.images.iter().zip(&other.images).map(|(a, b)| a + b).collect();
        Derivation::new(self.algebra.clone(), images)
    }

    /// `u^power · D` on the cylinder `A[u]`, with `u ↦ 0`.
    pub fn lift(&self, cylinder: &Arc<PresentedAlgebra>, power: u32) -> Result<Derivation> {
        if !cylinder.is_cylinder_over(&self.algebra) {
            return Err(Error::AlgebraMismatch("target is not a cylinder over the source algebra".into()));
        }
        let n = cylinder.arity();
        let u_power = Polynomial::variable(n, n - 1).try_pow(power)?;
        let mut images = self.images.iter().map(|g| Ok(&g.with_arity(n)? * &u_power)).collect::<Result<Vec<_>>>()?;
        images.push(Polynomial::zero(n));
        Derivation::new(cylinder.clone(), images)
    }

    /// Human-readable images, one `var -> image` per generator.
    pub fn describe(&self) -> Vec<(String, String)> {
        self.algebra.vars().iter().zip(&self.images).map(|(v, g)| (v.clone(), self.algebra.format(g))).collect()
    }
}

/// A derivation together with a bounded proof of local nilpotency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lnd {
    derivation: Derivation,
    orders: Vec<u32>,
}

/// Group parameter for [`Lnd::exp`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpParameter {
    Value(Rational),
    /// Keep the parameter as the extra trailing variable [`FORMAL_PARAMETER`].
    Formal,
}

impl Lnd {
    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    pub fn into_derivation(self) -> Derivation {
        self.derivation
    }

    pub fn algebra(&self) -> &Arc<PresentedAlgebra> {
        self.derivation.algebra()
    }

    /// Smallest `k` with `D^k(x_j) = 0`, per generator.
    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn max_order(&self) -> u32 {
        self.orders.iter().copied().max().unwrap_or(0)
    }

    /// Upper bound on the nilpotency order of an arbitrary `f`, from the
    /// generator orders and the Leibniz rule.
    fn order_bound(&self, f: &Polynomial) -> u64 {
        f.terms()
            .iter()
            .map(|(m, _)| {
                m.exponents()
                    .iter()
                    .zip(&self.orders)
                    .map(|(&e, &o)| u64::from(e) * u64::from(o.saturating_sub(1)))
                    .sum::<u64>()
                    + 1
            })
            .max()
            .unwrap_or(0)
    }

    /// `[f, D f, D^2 f, ...]` up to the last nonzero iterate.
    pub fn iterates(&self, f: &Polynomial) -> Result<Vec<Polynomial>> {
        let d = &self.derivation;
        let mut current = d.algebra.normal_form(f)?;
        let cap = self.order_bound(&current);
        let mut out = Vec::new();
        while !current.is_zero() {
            assert!((out.len() as u64) < cap, "iterates exceed the Leibniz bound");
            let next = d.apply_unchecked(&current);
            out.push(current);
            current = next;
        }
        Ok(out)
    }

    /// `exp(sD)(f) = Σ s^i D^i(f) / i!`.
    pub fn exp(&self, f: &Polynomial, s: &ExpParameter) -> Result<Polynomial> {
        let iterates = self.iterates(f)?;
        let n = self.algebra().arity();
        match s {
            ExpParameter::Value(value) => {
                let mut total = Polynomial::zero(n);
                for (i, g) in iterates.iter().enumerate() {
                    let i = i as u32;
                    let coef = rational::pow(value, i) / rational::factorial(i);
                    total = &total + &g.scale(&coef);
                }
                Ok(total)
            }
            ExpParameter::Formal => {
                if self.algebra().var_index(FORMAL_PARAMETER).is_some() {
                    return Err(Error::ReservedName(FORMAL_PARAMETER.into()));
                }
                let s = Polynomial::variable(n + 1, n);
                let mut total = Polynomial::zero(n + 1);
                for (i, g) in iterates.iter().enumerate() {
                    let i = i as u32;
                    let term = &g.with_arity(n + 1)? * &s.try_pow(i)?;
                    total = &total + &term.scale(&rational::factorial(i).recip());
                }
                Ok(total)
            }
        }
    }

    /// `ρ(f) = Σ (-s)^i D^i(f) / i!`, the projection onto the kernel along
    /// the slice `s`.
    pub fn kernel_projection(&self, slice: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
        if !self.derivation.check_slice(slice)? {
            return Err(Error::NotASlice);
        }
        let minus_s = -self.derivation.algebra.normal_form(slice)?;
        let mut total = Polynomial::zero(self.algebra().arity());
        let mut power = Polynomial::one(self.algebra().arity());
        for (i, g) in self.iterates(f)?.iter().enumerate() {
            let coef = rational::factorial(i as u32).recip();
            total = &total + &(&power * g).scale(&coef);
            power = &power * &minus_s;
        }
        self.derivation.algebra.normal_form(&total)
    }
}

/// `exp(sD)(f)` for a derivation that must verify as an LND within `bound`.
pub fn exp_action(d: &Derivation, f: &Polynomial, s: &ExpParameter, bound: u32) -> Result<Polynomial> {
    d.verify_lnd(bound)?.exp(f, s)
}

/// Sum of `Rational` multiples is handy in tests; kept public for callers
/// computing linear combinations of images.
pub fn linear_combination(arity: usize, parts: &[(Rational, Polynomial)]) -> Polynomial {
    parts.iter().fold(Polynomial::zero(arity), |acc, (c, p)| if c.is_zero() { acc } else { &acc + &p.scale(c) })
}
