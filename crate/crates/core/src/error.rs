use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("expected a real root, got {0}")]
    NotReal(String),
    #[error("weight {0} is not in the positive affine root lattice")]
    NotInAffineLattice(String),
    #[error("level k1 = {0} is negative; only k1 >= 0 is supported")]
    NegativeLevel(String),
    #[error("critical level k1 = -2 is out of scope")]
    CriticalLevel,
    #[error("highest weight is not dominant integral: {0}")]
    NotDominantIntegral(String),
    #[error("level k1 must be positive, got {0}")]
    NonPositiveLevel(String),
    #[error("invalid rational {0:?}")]
    BadRational(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid field `{field}`: {msg}")]
    InvalidField { field: String, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
