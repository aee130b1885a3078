use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not regular at q = infinity")]
    NotRegular(String),

    #[error("no monomial square root of {value}: {reason}")]
    NoMonomialRoot { value: String, reason: &'static str },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("index out of range: {0}")]
    Index(String),

    #[error("mismatched domains: {0}")]
    Domain(String),

    #[error("lattice not preserved: entry ({row}, {col}) = {entry}")]
    LatticeNotPreserved {
        row: usize,
        col: usize,
        entry: String,
    },

    #[error("reduced matrix is not a signed permutation")]
    NotSignedPermutation,

    #[error("R-matrix calibration failed: {0}")]
    Calibration(String),

    #[error("operator is not scalar on an isotypic block: {0}")]
    NonScalarBlock(String),

    #[error("epsilon* = {eps} exceeds the target highest weight {lambda}")]
    StarOutOfRange { eps: u32, lambda: u32 },

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
