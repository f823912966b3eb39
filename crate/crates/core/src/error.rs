use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("insufficient truncation degree: need {needed}, series has {have}")]
    InsufficientDegree { needed: usize, have: usize },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A quotient that must lie in the ring did not divide exactly.
    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
