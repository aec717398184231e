use std::collections::BTreeMap;

use crate::{enumerate_multiindices, MultiIndex, PolyError, SimplexPoint};

/// Sparse real polynomial in the simplex coordinates, not necessarily
/// homogeneous. Keys are exponent multi-indices over all `k` variables;
/// the constant term is the all-zero index.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    num_vars: usize,
    terms: BTreeMap<MultiIndex, f64>,
}

impl Polynomial {
    pub fn new(num_vars: usize) -> Self {
        assert!(num_vars >= 1);
        Self {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, value: f64) -> Self {
        let mut p = Self::new(num_vars);
        p.add_term(MultiIndex::zero(num_vars), value);
        p
    }

    /// Add `coeff * x^exponents` to the polynomial.
    pub fn add_term(&mut self, exponents: MultiIndex, coeff: f64) {
        assert_eq!(exponents.len(), self.num_vars);
        let entry = self.terms.entry(exponents.clone()).or_insert(0.0);
        *entry += coeff;
        if *entry == 0.0 {
            self.terms.remove(&exponents);
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, f64> {
        &self.terms
    }

    /// Largest total degree among the terms (zero for the empty sum).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(MultiIndex::degree).max().unwrap_or(0)
    }

    /// Plain evaluation at a simplex point.
    pub fn evaluate(&self, x: &SimplexPoint) -> f64 {
        assert_eq!(x.dim(), self.num_vars);
        self.terms.iter().map(|(n, c)| c * x.monomial(n)).sum()
    }

    /// Embed into the homogeneous degree-`r` form by multiplying every
    /// term (the constant included) by the matching power of the
    /// coordinate sum. Agrees with `self` at every simplex point.
    pub fn homogenize(&self, r: u32) -> Result<SimplexPolynomial, PolyError> {
        let deg = self.degree();
        if r < deg {
            return Err(PolyError::DegreeTooLow {
                required: deg,
                target: r,
            });
        }
        let mut coeffs: BTreeMap<MultiIndex, f64> = BTreeMap::new();
        for (exponents, &coeff) in &self.terms {
            let gap = r - exponents.degree();
            for pad in enumerate_multiindices(self.num_vars, gap) {
                let key = exponents.plus(&pad);
                *coeffs.entry(key).or_insert(0.0) += coeff * pad.multinomial() as f64;
            }
        }
        SimplexPolynomial::from_coeffs(self.num_vars, r, coeffs)
    }
}

/// Homogeneous degree-`r` polynomial over all `k` simplex coordinates,
/// stored as a sparse map from exponent multi-index to coefficient.
///
/// On the simplex this basis is exactly the degree-`r` Bernstein basis
/// (monomials in the coordinates, the last one standing in for the
/// affine slack), so membership in the nonnegative Bernstein cone is the
/// sign condition `all coefficients >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexPolynomial {
    num_vars: usize,
    degree: u32,
    coeffs: BTreeMap<MultiIndex, f64>,
}

impl SimplexPolynomial {
    pub fn from_coeffs(
        num_vars: usize,
        degree: u32,
        coeffs: BTreeMap<MultiIndex, f64>,
    ) -> Result<Self, PolyError> {
        for key in coeffs.keys() {
            if key.len() != num_vars {
                return Err(PolyError::DimensionMismatch {
                    expected: num_vars,
                    got: key.len(),
                });
            }
            if key.degree() != degree {
                return Err(PolyError::DegreeTooLow {
                    required: key.degree(),
                    target: degree,
                });
            }
        }
        Ok(Self {
            num_vars,
            degree,
            coeffs,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficient of the monomial `x^n`; absent keys are zero.
    pub fn coefficient(&self, n: &MultiIndex) -> f64 {
        self.coeffs.get(n).copied().unwrap_or(0.0)
    }

    /// Sparse view of the coefficients in the degree-`r` monomial basis.
    /// This is the Bernstein-cone membership certificate: the polynomial
    /// is in the cone iff every value is nonnegative.
    pub fn bernstein_coefficients(&self) -> &BTreeMap<MultiIndex, f64> {
        &self.coeffs
    }

    /// Dense coefficient vector aligned with `enumerate_multiindices`.
    pub fn dense_coefficients(&self) -> Vec<f64> {
        enumerate_multiindices(self.num_vars, self.degree)
            .iter()
            .map(|n| self.coefficient(n))
            .collect()
    }

    /// Cone membership test: all coefficients at least `-tol`.
    pub fn is_bernstein_nonnegative(&self, tol: f64) -> bool {
        self.coeffs.values().all(|&c| c >= -tol)
    }

    pub fn evaluate(&self, x: &SimplexPoint) -> f64 {
        assert_eq!(x.dim(), self.num_vars);
        self.coeffs.iter().map(|(n, c)| c * x.monomial(n)).sum()
    }

    /// Re-homogenize to a higher degree by multiplying with the matching
    /// power of the coordinate sum.
    pub fn raise_degree(&self, target: u32) -> Result<SimplexPolynomial, PolyError> {
        if target < self.degree {
            return Err(PolyError::DegreeTooLow {
                required: self.degree,
                target,
            });
        }
        let gap = target - self.degree;
        let pads = enumerate_multiindices(self.num_vars, gap);
        let mut coeffs: BTreeMap<MultiIndex, f64> = BTreeMap::new();
        for (n, &c) in &self.coeffs {
            for pad in &pads {
                *coeffs.entry(n.plus(pad)).or_insert(0.0) += c * pad.multinomial() as f64;
            }
        }
        SimplexPolynomial::from_coeffs(self.num_vars, target, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_quadratic() -> Polynomial {
        // th1^2 - th1*th2 + th2^2 + 0.05 over six coordinates
        let mut g = Polynomial::new(6);
        g.add_term(MultiIndex::new(vec![2, 0, 0, 0, 0, 0]), 1.0);
        g.add_term(MultiIndex::new(vec![1, 1, 0, 0, 0, 0]), -1.0);
        g.add_term(MultiIndex::new(vec![0, 2, 0, 0, 0, 0]), 1.0);
        g.add_term(MultiIndex::zero(6), 0.05);
        g
    }

    #[test]
    fn homogenized_constant_is_counted_partition_of_unity() {
        let one = Polynomial::constant(6, 1.0);
        let h = one.homogenize(2).unwrap();
        for n in enumerate_multiindices(6, 2) {
            let expected = n.multinomial() as f64;
            assert_eq!(h.coefficient(&n), expected);
        }
    }

    #[test]
    fn homogenize_keeps_pure_monomials() {
        let mut g = Polynomial::new(2);
        g.add_term(MultiIndex::new(vec![1, 0]), 1.0);
        let h = g.homogenize(1).unwrap();
        assert_eq!(h.coefficient(&MultiIndex::new(vec![1, 0])), 1.0);
        assert_eq!(h.coefficient(&MultiIndex::new(vec![0, 1])), 0.0);
    }

    #[test]
    fn worked_quadratic_homogeneous_coefficients() {
        let h = worked_quadratic().homogenize(2).unwrap();
        assert!((h.coefficient(&MultiIndex::new(vec![2, 0, 0, 0, 0, 0])) - 1.05).abs() < 1e-15);
        assert!((h.coefficient(&MultiIndex::new(vec![1, 1, 0, 0, 0, 0])) + 0.9).abs() < 1e-15);
        assert!((h.coefficient(&MultiIndex::new(vec![0, 0, 1, 1, 0, 0])) - 0.1).abs() < 1e-15);
        assert!((h.coefficient(&MultiIndex::new(vec![0, 0, 2, 0, 0, 0])) - 0.05).abs() < 1e-15);
    }

    #[test]
    fn homogenize_rejects_low_target() {
        match worked_quadratic().homogenize(1) {
            Err(PolyError::DegreeTooLow { required, target }) => {
                assert_eq!((required, target), (2, 1));
            }
            other => panic!("expected DegreeTooLow, got {other:?}"),
        }
    }

    #[test]
    fn evaluation_matches_hand_value() {
        let point = SimplexPoint::new(vec![0.5, 0.5, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let g = worked_quadratic();
        assert!((g.evaluate(&point) - 0.3).abs() < 1e-15);
        let h = g.homogenize(2).unwrap();
        assert!((h.evaluate(&point) - 0.3).abs() < 1e-15);
    }

    #[test]
    fn cone_certificate_signs() {
        // 0.05 alone homogenizes to strictly positive coefficients.
        let small = Polynomial::constant(6, 0.05).homogenize(2).unwrap();
        assert!(small.is_bernstein_nonnegative(0.0));
        assert!(small.bernstein_coefficients().values().all(|&c| c > 0.0));

        // The worked quadratic without its constant dips negative on the
        // cross term.
        let mut g = Polynomial::new(6);
        g.add_term(MultiIndex::new(vec![2, 0, 0, 0, 0, 0]), 1.0);
        g.add_term(MultiIndex::new(vec![1, 1, 0, 0, 0, 0]), -1.0);
        g.add_term(MultiIndex::new(vec![0, 2, 0, 0, 0, 0]), 1.0);
        let h = g.homogenize(2).unwrap();
        assert_eq!(h.coefficient(&MultiIndex::new(vec![1, 1, 0, 0, 0, 0])), -1.0);
        assert!(!h.is_bernstein_nonnegative(0.0));

        // Shifting the worked polynomial by its degree-2 lower prevision
        // value lands exactly on the cone boundary.
        let mut shifted = worked_quadratic();
        shifted.add_term(MultiIndex::zero(6), 0.45);
        let hs = shifted.homogenize(2).unwrap();
        assert!(hs.is_bernstein_nonnegative(1e-15));
        let cross = hs.coefficient(&MultiIndex::new(vec![1, 1, 0, 0, 0, 0]));
        assert!(cross.abs() < 1e-15, "boundary coefficient {cross}");
    }
}
