use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    Input(String),

    /// Distances (and hence the QEC) are undefined on a disconnected graph.
    #[error("graph is disconnected")]
    Disconnected,

    /// The centered Gram matrix has a negative eigenvalue, so no quadratic
    /// embedding exists.
    #[error("graph is not of QE class (most negative Gram eigenvalue {min_eigenvalue:e}, qec {qec})")]
    NotQeClass { min_eigenvalue: f64, qec: f64 },

    #[error("numerical failure: {message} (residual {residual:e})")]
    Numerical { message: String, residual: f64 },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
