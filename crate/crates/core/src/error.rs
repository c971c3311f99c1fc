use thiserror::Error;

/// Errors raised by the library. Search budget exhaustion is not an error:
/// it is reported through `SearchReport::exhaustive`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("input does not satisfy its system: {0}")]
    NotASolution(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("point is not on the curve")]
    NotOnCurve,

    #[error("parameters are not on the quartic")]
    NotOnQuartic,

    #[error("map undefined at this point: {0}")]
    ExceptionalLocus(String),

    #[error("search range too large: {0}")]
    SearchTooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
