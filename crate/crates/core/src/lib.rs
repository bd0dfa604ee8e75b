//! Exact commutative algebra toolkit for locally nilpotent derivations on
//! affine varieties over ℚ.
//!
//! Everything here works with `alloc` only; file formats, IO and the command
//! line live in the `lndkit` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod classifier;
pub mod derivation;
pub mod error;
pub mod grading;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod polynomial;
pub mod rational;
pub mod report;
pub mod toric;
pub mod trinomial;

pub use algebra::{Grading, PresentedAlgebra};
pub use classifier::{classify, Tags, VarietyDossier};
pub use derivation::{Derivation, ExpParameter, Lnd, NilpotencyVerdict, WellDefinedness};
pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, GroebnerConfig, Ideal};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use report::{ClassificationReport, Evidence, EvidenceKind, Scope, Verdict};
pub use toric::{Cone, DemazureRoot};
pub use trinomial::{RigidityVerdict, TrinomialData};
