use thiserror::Error;

/// Errors produced by matrix construction, the eigensolvers and the sweep
/// harness.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter failed validation; `name` identifies the offender.
    #[error("invalid parameter `{name}`: {message}")]
    InvalidParameter { name: &'static str, message: String },

    /// A requested dimension is degenerate or exceeds a configured cap.
    #[error("size error: {0}")]
    Size(String),

    /// A parameter is inside a region where the closed forms blow up
    /// (correlation magnitude within 1e-8 of 1, or a vanishing divisor).
    #[error("out of supported range: {0}")]
    Range(String),

    /// The matrix has an eigenvalue below the negative-semidefinite tolerance.
    #[error("matrix is not positive semidefinite (eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    /// An iterative solver hit its iteration cap.
    #[error("eigensolver failed to converge (residual {residual:.3e})")]
    NonConvergence { residual: f64 },

    /// The characteristic-equation scan could not isolate the expected
    /// number of roots even after grid refinement.
    #[error("root isolation failed: expected {expected} roots, found {found}")]
    RootIsolation { expected: usize, found: usize },

    /// Rayleigh quotient of the zero vector.
    #[error("zero vector has no Rayleigh quotient")]
    ZeroVector,

    #[error("thread pool: {0}")]
    ThreadPool(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(name: &'static str, message: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            message: message.into(),
        }
    }
}
