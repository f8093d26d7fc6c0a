use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Progress made by a Gröbner computation before its budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Progress {
    pub steps: u64,
    pub basis_len: usize,
    pub pairs_left: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable x{index} outside of x1..x{n}")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,
    #[error("polynomial must only involve level-0 variables")]
    NotBaseLevel,
    #[error("point does not lie on the hypersurface")]
    NotOnHypersurface,
    #[error("point is not a singular point of the hypersurface")]
    NotSingularPoint,
    #[error("level {m} is below the required minimum {min}")]
    LevelTooSmall { m: i64, min: i64 },
    #[error("hypersurface is smooth; singular locus dimension required to be >= 0")]
    SmoothHypersurface,
    #[error(
        "budget exceeded after {} reduction steps ({} basis elements, {} pairs pending)",
        .0.steps, .0.basis_len, .0.pairs_left
    )]
    BudgetExceeded(Progress),
    #[error("ring has {vars} variables, more than the cap of {cap}")]
    VariableCap { vars: usize, cap: usize },
    #[error("enumeration needs more than {cap} evaluations")]
    CountCap { cap: u64 },
    #[error("{p} is not a usable prime: {reason}")]
    BadPrime { p: u64, reason: String },
    #[error("ambient ring does not contain variable {0}")]
    NotInAmbient(String),
}
