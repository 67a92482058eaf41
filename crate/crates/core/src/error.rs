use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimensions differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("subspace is not contained in the ambient subspace")]
    NotContained,
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("variable counts differ ({left} vs {right})")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not normalized: {0}")]
    NotNormalized(String),
    #[error("polynomial is degenerate: H(1) = {h1} < {nvars} variables")]
    Degenerate { h1: usize, nvars: usize },
    #[error("algebra is not Gorenstein (socle dimension {socle_dim})")]
    NotGorenstein { socle_dim: usize },
    #[error("algebra is not local")]
    NotLocal,
    #[error("the ideal generated by the given elements is the whole algebra")]
    UnitIdeal,
    #[error("variable sets are not disjoint")]
    NonDisjoint,
    #[error("not an O-sequence: {0}")]
    NotOSequence(String),
    #[error("growth is not maximal at degree {degree}: H({next}) = {actual}, bound {bound}")]
    GrowthNotMaximal { degree: usize, next: usize, actual: BigUint, bound: BigUint },
    #[error("polynomial is not of the form G + sum of squares of fresh variables")]
    NotSplit,
    #[error("precondition of {statement} violated: {detail}")]
    Precondition { statement: &'static str, detail: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
