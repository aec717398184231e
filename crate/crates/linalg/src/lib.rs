//! Dense complex linear algebra for small operator problems.
//!
//! Everything here is dense, double precision and self-contained: complex
//! matrices and vectors, Kronecker products, Hermitian eigendecomposition
//! via cyclic Jacobi rotations, PSD tests, traces and partial traces.
//! Problem sizes are desk scale (a few hundred at most after symmetric
//! subspace compression), so there are no sparse formats and no external
//! solver backends.

mod eigen;
mod error;
mod hermitian;
mod json;
mod matrix;

pub use eigen::EigenDecomposition;
pub use error::LinalgError;
pub use hermitian::{partial_trace, trace_product, HermitianMatrix, Subsystem};
pub use json::MatrixJson;
pub use matrix::{kron, ComplexMatrix, ComplexVector};

/// Complex scalar used throughout.
pub type Complex64 = num_complex::Complex<f64>;

/// Absolute entrywise tolerance below which a matrix counts as Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-12;
