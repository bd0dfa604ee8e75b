use alloc::string::String;

use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("variable name `{0}` is reserved")]
    ReservedName(String),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("weighted degree overflow")]
    DegreeOverflow,
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("resource limit exceeded after {pairs} S-pairs")]
    ResourceLimit { pairs: usize },
    #[error("point does not lie on the variety (relation {relation} does not vanish)")]
    PointNotOnVariety { relation: usize },
    #[error("relations generate the unit ideal")]
    ZeroAlgebra,
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("derivation is not well defined modulo the relations")]
    NotWellDefined,
    #[error("derivation is not a verified LND: {0}")]
    NotVerifiedLnd(String),
    #[error("element is not a slice")]
    NotASlice,
    #[error("grading is not compatible with relation {relation}")]
    IncompatibleGrading { relation: usize },
    #[error("zero derivation")]
    ZeroDerivation,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid cone: {0}")]
    InvalidCone(String),
    #[error("degenerate cone: {0}")]
    DegenerateCone(String),
    #[error("invalid trinomial data: {0}")]
    InvalidData(String),
    #[error("unreduced presentation: {0}")]
    UnreducedPresentation(String),
    #[error("bad choice function: {0}")]
    BadChoiceFunction(String),
    #[error("bad suspension weights: {0}")]
    BadWeights(String),
    #[error("no LNDs supplied")]
    NoLnds,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
