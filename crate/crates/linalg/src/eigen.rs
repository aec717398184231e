//! Cyclic Jacobi eigendecomposition for complex Hermitian matrices.
//!
//! Each rotation annihilates one off-diagonal pair `(p, q)`: a phase
//! factor first makes `a_pq` real, then a standard real Jacobi rotation
//! zeroes it. The off-diagonal Frobenius norm decreases monotonically,
//! with the usual quadratic convergence once sweeps get close. This is
//! slower than tridiagonalization + QR but foolproof at the matrix sizes
//! used here, and the accumulated rotations give orthonormal eigenvectors
//! directly.

use crate::{Complex64, ComplexMatrix, LinalgError};

const MAX_SWEEPS: usize = 128;

/// Eigenvalues (ascending) and matching orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl EigenDecomposition {
    /// Largest entry of `A - V diag(values) V'`, a reconstruction residual.
    pub fn reconstruction_error(&self, a: &ComplexMatrix) -> f64 {
        let n = self.values.len();
        let lambda = ComplexMatrix::diagonal(&self.values);
        let rebuilt = self
            .vectors
            .matmul(&lambda)
            .matmul(&self.vectors.dagger());
        let mut err: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                err = err.max((a.get(i, j) - rebuilt.get(i, j)).norm());
            }
        }
        err
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut acc = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                acc += a.get(p, q).norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// One complex Jacobi rotation zeroing `a[p][q]` (and `a[q][p]`).
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (tau - (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let phase_conj = phase.conj();

    let n = a.rows();
    // A <- A J with J mixing columns p and q.
    for j in 0..n {
        let ajp = a.get(j, p);
        let ajq = a.get(j, q);
        a.set(j, p, ajp * c - ajq * (phase_conj * s));
        a.set(j, q, ajp * s + ajq * (phase_conj * c));
    }
    // A <- J' A, mixing rows p and q.
    for j in 0..n {
        let apj = a.get(p, j);
        let aqj = a.get(q, j);
        a.set(p, j, apj * c - aqj * (phase * s));
        a.set(q, j, apj * s + aqj * (phase * c));
    }
    // Accumulate eigenvectors: V <- V J.
    for j in 0..n {
        let vjp = v.get(j, p);
        let vjq = v.get(j, q);
        v.set(j, p, vjp * c - vjq * (phase_conj * s));
        v.set(j, q, vjp * s + vjq * (phase_conj * c));
    }
    // The (p, q) pair is annihilated by construction; pin it to zero so
    // rounding dust cannot accumulate there.
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));
}

pub(crate) fn jacobi_eigen(input: &ComplexMatrix) -> Result<EigenDecomposition, LinalgError> {
    let n = input.rows();
    let mut a = input.clone();
    let mut v = ComplexMatrix::identity(n);
    if n == 1 {
        return Ok(EigenDecomposition {
            values: vec![a.get(0, 0).re],
            vectors: v,
        });
    }

    let scale = a.frobenius_norm();
    let threshold = 1e-12 * scale.max(f64::MIN_POSITIVE);

    let mut converged = false;
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                // Skip entries already at rounding level relative to scale.
                if a.get(p, q).norm() > f64::EPSILON * scale {
                    rotate(&mut a, &mut v, p, q);
                }
            }
        }
        sweeps += 1;
    }
    if !converged && off_diagonal_norm(&a) > threshold {
        return Err(LinalgError::NoConvergence {
            sweeps,
            off_norm: off_diagonal_norm(&a),
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a.get(i, i)
            .re
            .partial_cmp(&a.get(j, j).re)
            .expect("eigenvalues are finite")
    });
    let values: Vec<f64> = order.iter().map(|&i| a.get(i, i).re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v.get(i, order[j]));
    Ok(EigenDecomposition { values, vectors })
}
