use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A series or quadrature could not reach the requested tolerance
    /// within the configured caps.
    #[error("did not converge: {0}")]
    NonConvergence(String),

    /// The direct oracle disagreed with itself (e.g. a non-real residue
    /// after removing the Gauss prefactor).
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
