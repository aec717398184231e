use crate::{MultiIndex, PolyError};

const SUM_TOL: f64 = 1e-12;

/// Point on the probability simplex: `k` nonnegative coordinates with
/// unit sum (within 1e-12).
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexPoint {
    probs: Vec<f64>,
}

impl SimplexPoint {
    pub fn new(probs: Vec<f64>) -> Result<Self, PolyError> {
        if probs.is_empty() {
            return Err(PolyError::InvalidPoint("no coordinates".into()));
        }
        if let Some(p) = probs.iter().find(|&&p| !(p >= 0.0)) {
            return Err(PolyError::InvalidPoint(format!(
                "negative or non-finite coordinate {p}"
            )));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(PolyError::InvalidPoint(format!(
                "coordinates sum to {sum}, not 1"
            )));
        }
        Ok(Self { probs })
    }

    /// Barycentre `(1/k, ..., 1/k)`.
    pub fn uniform(k: usize) -> Self {
        Self {
            probs: vec![1.0 / k as f64; k],
        }
    }

    /// Vertex `e_slot` of the simplex.
    pub fn vertex(k: usize, slot: usize) -> Self {
        let mut probs = vec![0.0; k];
        probs[slot] = 1.0;
        Self { probs }
    }

    /// Rational grid point `counts / resolution` for a multi-index of
    /// degree `resolution`.
    pub fn from_grid(index: &MultiIndex, resolution: u32) -> Self {
        assert_eq!(index.degree(), resolution);
        let probs = index
            .counts()
            .iter()
            .map(|&c| f64::from(c) / f64::from(resolution))
            .collect();
        Self { probs }
    }

    /// Normalize arbitrary nonnegative weights into a simplex point.
    pub fn from_weights(weights: &[f64]) -> Result<Self, PolyError> {
        let sum: f64 = weights.iter().sum();
        if !(sum > 0.0) {
            return Err(PolyError::InvalidPoint("weights sum to zero".into()));
        }
        let probs: Vec<f64> = weights.iter().map(|w| w / sum).collect();
        if probs.iter().any(|&p| !(p >= 0.0)) {
            return Err(PolyError::InvalidPoint("negative weight".into()));
        }
        Ok(Self { probs })
    }

    pub fn dim(&self) -> usize {
        self.probs.len()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Monomial value `prod_i p_i^{n_i}`.
    pub fn monomial(&self, index: &MultiIndex) -> f64 {
        assert_eq!(self.dim(), index.len());
        let mut acc = 1.0;
        for (p, &n) in self.probs.iter().zip(index.counts()) {
            for _ in 0..n {
                acc *= p;
            }
        }
        acc
    }
}
