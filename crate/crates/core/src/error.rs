use crate::qfield::QError;
use crate::tldiag::TlError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] QError),
    #[error(transparent)]
    Diagram(#[from] TlError),
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
