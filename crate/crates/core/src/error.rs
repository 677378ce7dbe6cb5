use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial division is not exact")]
    NotDivisible,

    #[error("cannot evaluate a Laurent polynomial with negative exponents at q = 0")]
    ZeroAtNegativeOffset,

    #[error("parameter out of domain: {0}")]
    Domain(String),

    /// Two constructions of the same object disagreed. Always a bug.
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),

    #[error("unknown check id `{0}`")]
    UnknownCheckId(String),

    #[error("missing parameter `{0}`")]
    MissingParam(String),

    #[error("unexpected parameter `{0}`")]
    UnexpectedParam(String),

    #[error("invalid grid: {0}")]
    Grid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
