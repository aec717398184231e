use crate::eigen::{jacobi_eigen, EigenDecomposition};
use crate::{ComplexMatrix, ComplexVector, LinalgError, HERMITICITY_TOL};

/// Which tensor factor `partial_trace` keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Square complex matrix equal to its conjugate transpose.
///
/// Construction checks the defect `max |A - A'|` against an absolute
/// tolerance of 1e-12 and stores the symmetrized matrix `(A + A') / 2`,
/// so every downstream consumer sees an exactly Hermitian operator. The
/// measured defect of the raw input stays available for reporting.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    mat: ComplexMatrix,
    defect: f64,
}

impl HermitianMatrix {
    pub fn new(mat: ComplexMatrix) -> Result<Self, LinalgError> {
        if !mat.is_square() {
            return Err(LinalgError::DimensionMismatch(format!(
                "Hermitian matrix must be square, got {}x{}",
                mat.rows(),
                mat.cols()
            )));
        }
        let mut defect: f64 = 0.0;
        for i in 0..mat.rows() {
            for j in 0..mat.cols() {
                defect = defect.max((mat.get(i, j) - mat.get(j, i).conj()).norm());
            }
        }
        if defect > HERMITICITY_TOL {
            return Err(LinalgError::NotHermitian {
                defect,
                tol: HERMITICITY_TOL,
            });
        }
        let sym = mat.add(&mat.dagger()).scale_real(0.5);
        Ok(Self { mat: sym, defect })
    }

    /// Hermitian matrix from real entries (symmetry still checked).
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self, LinalgError> {
        Self::new(ComplexMatrix::from_real_rows(rows)?)
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    /// Hermiticity defect of the matrix passed to the constructor.
    pub fn hermiticity_defect(&self) -> f64 {
        self.defect
    }

    pub fn get(&self, i: usize, j: usize) -> crate::Complex64 {
        self.mat.get(i, j)
    }

    /// Eigendecomposition with eigenvalues sorted ascending.
    pub fn eigen(&self) -> Result<EigenDecomposition, LinalgError> {
        jacobi_eigen(&self.mat)
    }

    /// Least eigenvalue, i.e. the infimum of `x' A x` over unit vectors.
    pub fn min_eigenvalue(&self) -> Result<f64, LinalgError> {
        Ok(self.eigen()?.values[0])
    }

    /// True iff the least eigenvalue is at least `-tol`.
    pub fn is_psd(&self, tol: f64) -> Result<bool, LinalgError> {
        assert!(tol >= 0.0, "PSD tolerance must be nonnegative");
        Ok(self.min_eigenvalue()? >= -tol)
    }

    /// Real quadratic form `x' A x`.
    pub fn quadratic_form(&self, x: &ComplexVector) -> f64 {
        x.inner(&self.mat.apply(x)).re
    }
}

/// Real part of `Tr(G M)` for Hermitian `G`, `M` of equal dimension.
///
/// The product trace of two Hermitian matrices is real; rounding leaves
/// an imaginary part at machine-epsilon scale, which is discarded.
pub fn trace_product(g: &HermitianMatrix, m: &HermitianMatrix) -> Result<f64, LinalgError> {
    if g.dim() != m.dim() {
        return Err(LinalgError::DimensionMismatch(format!(
            "trace_product: {} vs {}",
            g.dim(),
            m.dim()
        )));
    }
    let mut acc = crate::Complex64::new(0.0, 0.0);
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            acc += g.get(i, j) * m.get(j, i);
        }
    }
    debug_assert!(acc.im.abs() <= 1e-12 * (1.0 + acc.re.abs()));
    Ok(acc.re)
}

/// Partial trace of a Hermitian matrix on a bipartite space of
/// dimensions `dims = (dA, dB)`, keeping the requested factor.
///
/// Basis ordering is the Kronecker convention: composite index
/// `i = a * dB + b`. The trace of the input is preserved.
pub fn partial_trace(
    m: &HermitianMatrix,
    dims: (usize, usize),
    keep: Subsystem,
) -> Result<HermitianMatrix, LinalgError> {
    let (da, db) = dims;
    if da * db != m.dim() {
        return Err(LinalgError::DimensionMismatch(format!(
            "partial_trace: {}x{} factors do not match dimension {}",
            da,
            db,
            m.dim()
        )));
    }
    let out = match keep {
        Subsystem::A => ComplexMatrix::from_fn(da, da, |a1, a2| {
            (0..db).map(|b| m.get(a1 * db + b, a2 * db + b)).sum()
        }),
        Subsystem::B => ComplexMatrix::from_fn(db, db, |b1, b2| {
            (0..da).map(|a| m.get(a * db + b1, a * db + b2)).sum()
        }),
    };
    HermitianMatrix::new(out)
}
