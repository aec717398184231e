use crate::{Complex64, ComplexMatrix, LinalgError};
use serde::{Deserialize, Serialize};

/// On-disk schema for square complex matrices:
/// `{ "dim": n, "re": [[...]], "im": [[...]] }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        assert!(m.is_square(), "matrix JSON schema covers square matrices");
        let n = m.rows();
        let re = (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j).re).collect())
            .collect();
        let im = (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j).im).collect())
            .collect();
        Self { dim: n, re, im }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix, LinalgError> {
        let n = self.dim;
        let shape_ok = |part: &Vec<Vec<f64>>| part.len() == n && part.iter().all(|r| r.len() == n);
        if n == 0 || !shape_ok(&self.re) || !shape_ok(&self.im) {
            return Err(LinalgError::InvalidData(format!(
                "matrix JSON with dim {n} has inconsistent re/im shapes"
            )));
        }
        Ok(ComplexMatrix::from_fn(n, n, |i, j| {
            Complex64::new(self.re[i][j], self.im[i][j])
        }))
    }

    pub fn parse(text: &str) -> Result<ComplexMatrix, LinalgError> {
        let parsed: MatrixJson = serde_json::from_str(text)
            .map_err(|e| LinalgError::InvalidData(format!("matrix JSON: {e}")))?;
        parsed.to_matrix()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_json_text() {
        let m = ComplexMatrix::from_rows(&[
            vec![Complex64::new(0.25, 0.0), Complex64::new(0.0, -1.0)],
            vec![Complex64::new(0.0, 1.0), Complex64::new(2.25, 0.0)],
        ])
        .unwrap();
        let text = serde_json::to_string(&MatrixJson::from_matrix(&m)).unwrap();
        let back = MatrixJson::parse(&text).unwrap();
        assert!(m.max_abs_diff(&back) == 0.0);
    }

    #[test]
    fn rejects_ragged_input() {
        let text = r#"{"dim": 2, "re": [[1.0, 0.0], [0.0]], "im": [[0.0, 0.0], [0.0, 0.0]]}"#;
        assert!(MatrixJson::parse(text).is_err());
    }
}
