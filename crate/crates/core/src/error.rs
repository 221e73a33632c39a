use thiserror::Error;

/// Errors raised by the numeric and exact layers.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no convergence in {function}: best value {best}, error bound {bound:e}")]
    Convergence {
        function: &'static str,
        best: f64,
        bound: f64,
    },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
