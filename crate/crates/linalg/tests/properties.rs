//! Property checks for the dense Hermitian toolkit: eigendecomposition
//! residuals on random matrices, the Kronecker mixed-product identity,
//! quadratic-form bounds and trace preservation under partial traces.

use qeo_linalg::{
    kron, partial_trace, trace_product, Complex64, ComplexMatrix, ComplexVector, HermitianMatrix,
    Subsystem,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_complex_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> HermitianMatrix {
    let g = random_complex_matrix(rng, n, n);
    HermitianMatrix::new(g.add(&g.dagger()).scale_real(0.5)).unwrap()
}

fn random_unit_vector(rng: &mut ChaCha8Rng, n: usize) -> ComplexVector {
    loop {
        let v = ComplexVector::new(
            (0..n)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect(),
        );
        if v.norm() > 1e-3 {
            return v.normalized();
        }
    }
}

/// Witness matrix with spectrum (-0.75, 1.25, 1.25, 3.25).
fn witness() -> HermitianMatrix {
    HermitianMatrix::from_real_rows(&[
        vec![0.25, 0.0, 0.0, -1.0],
        vec![0.0, 2.25, -1.0, 0.0],
        vec![0.0, -1.0, 2.25, 0.0],
        vec![-1.0, 0.0, 0.0, 0.25],
    ])
    .unwrap()
}

/// Projector onto (e00 + e11) / sqrt(2), the maximally entangled state
/// paired with the witness above.
fn entangled_state() -> HermitianMatrix {
    HermitianMatrix::from_real_rows(&[
        vec![0.5, 0.0, 0.0, 0.5],
        vec![0.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, 0.0, 0.0],
        vec![0.5, 0.0, 0.0, 0.5],
    ])
    .unwrap()
}

#[test]
fn witness_spectrum_matches_reference() {
    let eig = witness().eigen().unwrap();
    let expected = [-0.75, 1.25, 1.25, 3.25];
    for (got, want) in eig.values.iter().zip(expected) {
        assert!(
            (got - want).abs() < 1e-12,
            "eigenvalue {got} expected {want}"
        );
    }
    assert!((witness().min_eigenvalue().unwrap() + 0.75).abs() < 1e-12);
}

#[test]
fn witness_detects_the_entangled_state() {
    let w = witness();
    let rho = entangled_state();
    assert!(rho.is_psd(1e-10).unwrap());
    assert!(!w.is_psd(1e-10).unwrap());
    assert!((trace_product(&w, &rho).unwrap() + 0.75).abs() < 1e-12);
}

#[test]
fn trace_product_reference_values() {
    let w = witness();
    let id4 = HermitianMatrix::new(ComplexMatrix::identity(4)).unwrap();
    let mixed = HermitianMatrix::new(ComplexMatrix::identity(4).scale_real(0.25)).unwrap();
    // Tr(W)/4 = (0.25 + 2.25 + 2.25 + 0.25)/4.
    assert!((trace_product(&w, &mixed).unwrap() - 1.25).abs() < 1e-14);
    assert!((trace_product(&id4, &mixed).unwrap() - 1.0).abs() < 1e-14);
}

#[test]
fn zero_matrix_is_psd() {
    let z = HermitianMatrix::new(ComplexMatrix::identity(3).scale_real(0.0)).unwrap();
    assert!(z.is_psd(0.0).unwrap());
}

#[test]
fn scaled_identity_min_eigenvalue() {
    for c in [-2.5, 0.0, 1.0, 7.25] {
        let h = HermitianMatrix::new(ComplexMatrix::identity(4).scale_real(c)).unwrap();
        assert!((h.min_eigenvalue().unwrap() - c).abs() < 1e-13);
    }
}

#[test]
fn rank_one_projector_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [2, 3, 6] {
        let x = random_unit_vector(&mut rng, n);
        let h = HermitianMatrix::new(x.outer()).unwrap();
        let eig = h.eigen().unwrap();
        for v in &eig.values[..n - 1] {
            assert!(v.abs() < 1e-12, "projector null eigenvalue {v}");
        }
        assert!((eig.values[n - 1] - 1.0).abs() < 1e-12);
        assert!((h.min_eigenvalue().unwrap()).abs() < 1e-12);
    }
}

#[test]
fn eigen_reconstruction_and_orthonormality() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for n in 1..=12 {
        for _ in 0..3 {
            let h = random_hermitian(&mut rng, n);
            let eig = h.eigen().unwrap();
            assert!(
                eig.values.windows(2).all(|w| w[0] <= w[1]),
                "eigenvalues not ascending"
            );
            assert!(eig.reconstruction_error(h.matrix()) <= 1e-9);
            let gram = eig.vectors.dagger().matmul(&eig.vectors);
            assert!(gram.max_abs_diff(&ComplexMatrix::identity(n)) <= 1e-10);
        }
    }
}

#[test]
fn kron_mixed_product_property() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let a = random_complex_matrix(&mut rng, 3, 2);
        let b = random_complex_matrix(&mut rng, 2, 4);
        let c = random_complex_matrix(&mut rng, 2, 3);
        let d = random_complex_matrix(&mut rng, 4, 2);
        let lhs = kron(&a, &b).matmul(&kron(&c, &d));
        let rhs = kron(&a.matmul(&c), &b.matmul(&d));
        assert!(lhs.max_abs_diff(&rhs) <= 1e-10);
    }
}

#[test]
fn quadratic_form_stays_within_spectral_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let h = random_hermitian(&mut rng, 6);
    let eig = h.eigen().unwrap();
    let (lo, hi) = (eig.values[0], eig.values[5]);
    for _ in 0..100 {
        let x = random_unit_vector(&mut rng, 6);
        let form = h.quadratic_form(&x);
        assert!(form >= lo - 1e-10 && form <= hi + 1e-10);
    }
}

#[test]
fn partial_trace_preserves_trace() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for (da, db) in [(2, 2), (2, 3), (3, 4)] {
        let h = random_hermitian(&mut rng, da * db);
        for keep in [Subsystem::A, Subsystem::B] {
            let reduced = partial_trace(&h, (da, db), keep).unwrap();
            let diff = (reduced.matrix().trace() - h.matrix().trace()).norm();
            assert!(diff <= 1e-12);
        }
    }
}

#[test]
fn partial_trace_of_bell_projector_is_maximally_mixed() {
    // Projector onto (e01 + e10) / sqrt(2).
    let bell = HermitianMatrix::from_real_rows(&[
        vec![0.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.5, 0.5, 0.0],
        vec![0.0, 0.5, 0.5, 0.0],
        vec![0.0, 0.0, 0.0, 0.0],
    ])
    .unwrap();
    let reduced = partial_trace(&bell, (2, 2), Subsystem::A).unwrap();
    let expected = ComplexMatrix::identity(2).scale_real(0.5);
    assert!(reduced.matrix().max_abs_diff(&expected) < 1e-15);
}
