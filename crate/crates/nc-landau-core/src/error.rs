use thiserror::Error;

/// Errors shared across the library surface.
#[derive(Debug, Error)]
pub enum CoreError {
    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A grid or parameter record failed validation before any computation.
    #[error("invalid input: {0}")]
    Validation(String),

    /// A grid is too coarse for the requested computation; carries the
    /// predicted truncation level so the caller can size a finer grid.
    #[error("grid too coarse: {reason} (predicted truncation ≈ {predicted:.2e})")]
    Resolution { reason: String, predicted: f64 },

    /// Two sampled fields were given on incompatible grids.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// The iterative eigensolver failed to converge.
    #[error("eigensolver did not converge: {0}")]
    NoConvergence(String),

    /// Dense factorization or eigendecomposition failed.
    #[error("linear algebra failure: {0}")]
    Linalg(String),

    /// File output failed.
    #[error("i/o failure on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
