//! Lattice data of affine toric varieties: rays of the cone `σ ⊂ N_ℝ`,
//! Demazure roots in `M`, the grading `φ(m) = Σ⟨m, v_i⟩` and line factors.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::linalg::{feasible, rank_i64, solve_integer};
use crate::rational::integer;
use crate::report::{ClassificationReport, Evidence, EvidenceKind, Scope, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    rays: Vec<Vec<i64>>,
}

/// `e` with `⟨e, v_distinguished⟩ = -1` and `⟨e, v_j⟩ >= 0` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DemazureRoot {
    pub vector: Vec<i64>,
    pub distinguished: usize,
}

fn pairing(m: &[i64], v: &[i64]) -> i64 {
    m.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn proportional(a: &[i64], b: &[i64]) -> bool {
    (0..a.len()).all(|i| (i..a.len()).all(|j| a[i] * b[j] == a[j] * b[i]))
}

impl Cone {
    /// Validates that rays share a dimension, are primitive and pairwise
    /// non-proportional.
    pub fn new(rays: Vec<Vec<i64>>) -> Result<Self> {
        let dim = rays.first().map(Vec::len).ok_or_else(|| Error::InvalidCone("no rays".into()))?;
        if dim == 0 {
            return Err(Error::InvalidCone("rays have dimension 0".into()));
        }
        for (i, ray) in rays.iter().enumerate() {
            if ray.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: ray.len() });
            }
            let g = ray.iter().fold(0i64, |g, &x| g.gcd(&x));
            if g == 0 {
                return Err(Error::InvalidCone(format!("ray {i} is zero")));
            }
            if g != 1 {
                return Err(Error::InvalidCone(format!("ray {i} is not primitive (gcd {g})")));
            }
            if let Some(j) = rays[..i].iter().position(|other| proportional(other, ray)) {
                return Err(Error::InvalidCone(format!("rays {j} and {i} are proportional")));
            }
        }
        Ok(Cone { dim, rays })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    fn check_dim(&self, m: &[i64]) -> Result<()> {
        if m.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: m.len() });
        }
        Ok(())
    }

    /// Pairings `⟨m, v_i⟩` for every ray.
    pub fn pairings(&self, m: &[i64]) -> Result<Vec<i64>> {
        self.check_dim(m)?;
        Ok(self.rays.iter().map(|v| pairing(m, v)).collect())
    }

    pub fn full_dimensional(&self) -> bool {
        rank_i64(&self.rays) == self.dim
    }

    /// Some `m` is strictly positive on every ray.
    pub fn pointed(&self) -> bool {
        let rows: Vec<Vec<_>> = self.rays.iter().map(|v| v.iter().map(|&x| integer(x)).collect()).collect();
        let rhs = alloc::vec![integer(1); rows.len()];
        feasible(&rows, &rhs)
    }

    pub fn is_root(&self, e: &[i64]) -> Option<usize> {
        let p = self.pairings(e).ok()?;
        let neg: Vec<usize> = (0..p.len()).filter(|&i| p[i] < 0).collect();
        match neg.as_slice() {
            [i] if p[*i] == -1 => Some(*i),
            _ => None,
        }
    }
}

/// `⟨m, v_i⟩ >= 0` for every ray.
pub fn dual_membership(m: &[i64], cone: &Cone) -> Result<bool> {
    Ok(cone.pairings(m)?.iter().all(|&p| p >= 0))
}

/// `φ(m) = Σ⟨m, v_i⟩`.
pub fn phi_degree(m: &[i64], cone: &Cone) -> Result<i64> {
    Ok(cone.pairings(m)?.iter().sum())
}

/// All roots with max-norm at most `bound`, sorted by vector.
///
/// For each distinguished ray the equation `⟨e, v_i⟩ = -1` is solved for one
/// coordinate where `v_i` is nonzero, so only the remaining coordinates are
/// scanned.
pub fn enumerate_roots(cone: &Cone, bound: u32) -> Vec<DemazureRoot> {
    let b = i64::from(bound);
    let n = cone.dim;
    let mut out = Vec::new();
    for (i, v) in cone.rays.iter().enumerate() {
        let pivot = v.iter().position(|&x| x != 0).expect("rays are nonzero");
        let free: Vec<usize> = (0..n).filter(|&k| k != pivot).collect();
        let mut e = alloc::vec![-b; n];
        loop {
            let rest: i64 = free.iter().map(|&k| e[k] * v[k]).sum();
            let (q, r) = (-1 - rest).div_rem(&v[pivot]);
            if r == 0 && q.abs() <= b {
                e[pivot] = q;
                if cone.rays.iter().enumerate().all(|(j, w)| j == i || pairing(&e, w) >= 0) {
                    out.push(DemazureRoot { vector: e.clone(), distinguished: i });
                }
            }
            // odometer over the free coordinates
            let mut advanced = false;
            for &k in &free {
                if e[k] < b {
                    e[k] += 1;
                    advanced = true;
                    break;
                }
                e[k] = -b;
            }
            if !advanced {
                break;
            }
        }
    }
    out.sort();
    out
}

/// A root `p` with `⟨p, v_i⟩ = -1` and `⟨p, v_j⟩ = 0` for `j != i`; such a
/// root splits off a factor `A¹`.
pub fn detect_line_factor(cone: &Cone) -> Option<DemazureRoot> {
    (0..cone.rays.len()).find_map(|i| {
        let rhs: Vec<i64> = (0..cone.rays.len()).map(|j| if j == i { -1 } else { 0 }).collect();
        solve_integer(&cone.rays, &rhs).map(|vector| DemazureRoot { vector, distinguished: i })
    })
}

fn show(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
    format!("({})", parts.join(", "))
}

const NON_DEGENERATE: &str = "The toric criteria apply to cones that are pointed and full-dimensional";
const LINE_FACTOR: &str = "If Y = Z × A¹ then Y is of type A";
const ROOTS: &str = "A Demazure root gives a homogeneous LND, so the toric variety is not rigid";
const NO_LINE_FACTOR: &str = "A non-rigid non-degenerate toric variety without line factor is of type B; \
     a negative φ-degree root would force a line factor";

/// Type of the toric variety given by `cone`.
pub fn classify_toric(cone: &Cone, bound: u32) -> Result<ClassificationReport> {
    if !cone.full_dimensional() {
        return Err(Error::DegenerateCone(format!(
            "rays span a space of dimension {} in Z^{}",
            rank_i64(&cone.rays),
            cone.dim
        )));
    }
    if !cone.pointed() {
        return Err(Error::DegenerateCone("cone contains a line".into()));
    }
    let mut evidence = alloc::vec![Evidence::new(
        EvidenceKind::Supporting,
        "non-degenerate cone",
        NON_DEGENERATE,
        format!("{} rays in Z^{}", cone.rays.len(), cone.dim),
    )];
    if let Some(p) = detect_line_factor(cone) {
        evidence.push(Evidence::new(
            EvidenceKind::TypeA,
            "line factor",
            LINE_FACTOR,
            format!("p = {} pairs to -1 with ray {} and to 0 with the others", show(&p.vector), p.distinguished),
        ));
        return Ok(ClassificationReport::new(Verdict::A, Scope::Absolute, evidence));
    }
    evidence.push(Evidence::new(
        EvidenceKind::NotTypeA,
        "no line factor",
        NO_LINE_FACTOR,
        "no integral p with one pairing -1 and the rest 0",
    ));
    let roots = enumerate_roots(cone, bound);
    match roots.first() {
        Some(first) => {
            evidence.push(Evidence::new(
                EvidenceKind::NonRigid,
                "Demazure roots",
                ROOTS,
                format!(
                    "{} roots with max-norm <= {bound}, e.g. {} at ray {}",
                    roots.len(),
                    show(&first.vector),
                    first.distinguished
                ),
            ));
            Ok(ClassificationReport::new(Verdict::B, Scope::Absolute, evidence))
        }
        None => {
            evidence.push(Evidence::new(
                EvidenceKind::Supporting,
                "no roots in box",
                ROOTS,
                format!("no Demazure root with max-norm <= {bound}; this does not prove rigidity"),
            ));
            Ok(ClassificationReport::inconclusive(Some(Verdict::C), Scope::Absolute, evidence))
        }
    }
}
