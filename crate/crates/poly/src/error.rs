use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum PolyError {
    #[error("target degree {target} is below the polynomial degree {required}")]
    DegreeTooLow { required: u32, target: u32 },

    #[error("variable count mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid simplex point: {0}")]
    InvalidPoint(String),

    #[error("polynomial parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}
