use thiserror::Error;

/// Errors raised by the dense linear algebra layer.
#[derive(Debug, Clone, Error)]
pub enum LinalgError {
    #[error("matrix is not Hermitian: max |A - A'| entry {defect:.3e} exceeds {tol:.0e}")]
    NotHermitian { defect: f64, tol: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off norm {off_norm:.3e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("invalid matrix data: {0}")]
    InvalidData(String),
}
