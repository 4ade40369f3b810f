use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator parameter {index} vanishes in (b)_{mu} inside the truncation range")]
    ZeroDenominatorParameter { index: usize, mu: usize },

    #[error("first numerator parameter {0} is not a nonpositive integer")]
    NotTerminating(String),

    #[error("matrix is not nilpotent: X^{dim} != 0")]
    NotNilpotent { dim: usize },

    #[error("index {index} is outside the family range 0..={max}")]
    IndexOutOfFamily { index: usize, max: usize },

    #[error("interpolant has degree {got:?}, expected {expected}")]
    InterpolationDegreeMismatch { expected: usize, got: Option<usize> },

    #[error("reflection law fails at entry ({row}, {col})")]
    ReflectionMismatch { row: usize, col: usize },

    #[error("identity `{name}` fails, residual {residual}")]
    IdentityFailure { name: String, residual: String },

    #[error("moment pattern violated at i={i}, gamma={gamma}, index={index}")]
    PatternViolation { i: usize, gamma: usize, index: usize },

    #[error("eta = 0: the J+ coherent relation is undefined")]
    EtaZero,

    #[error("affine form with zero slope is not allowed here")]
    ZeroSlope,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
