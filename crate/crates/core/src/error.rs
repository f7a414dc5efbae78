use thiserror::Error;

/// Errors raised by the algebraic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inexact division: numerator is not divisible by (1-t)^{power}")]
    InexactDivision { power: usize },

    #[error("mixed ambient dimensions in combination: {0} vs {1}")]
    MixedAmbient(usize, usize),

    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },

    #[error("ideal is not monomial")]
    NotMonomial,

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("random draw from an empty span")]
    EmptySpan,

    #[error("linear form is zero")]
    ZeroForm,

    #[error("element is not superficial for the module")]
    NotSuperficial,

    #[error("forms could not be certified as an admissible ssop (verdict: {0})")]
    NotAdmissible(String),

    #[error("index out of range: {0}")]
    BadIndex(String),

    #[error("expansion to degree {requested} exceeds the truncation degree {max}")]
    Truncation { requested: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
