use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("boundary mismatch: {left} does not match {right}")]
    BoundaryMismatch { left: usize, right: usize },

    #[error("malformed morphism: {0}")]
    InvalidMorphism(String),

    #[error("morphism outside the chosen subcategory A: {0}")]
    NotInA(String),

    #[error("kind mismatch: expected {expected}, got {got}")]
    KindMismatch { expected: String, got: String },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("no mediating morphism: {0}")]
    NoMediator(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("instance too large: {0}")]
    Oversize(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            _ => 3,
        }
    }

    pub(crate) fn check_boundary(left: usize, right: usize) -> Result<()> {
        if left == right {
            Ok(())
        } else {
            Err(Error::BoundaryMismatch { left, right })
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
