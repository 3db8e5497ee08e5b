use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: String, msg: String },
    #[error("invalid root datum: {0}")]
    RootDatum(String),
    #[error("element is not in the affine Weyl group")]
    NotAffine,
    #[error("non-exact polynomial division")]
    InexactDivision,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("decomposition failed: {0}")]
    Decomposition(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
