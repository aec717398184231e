use std::fmt;

/// Vector of nonnegative counts `(n_1, ..., n_k)`.
///
/// A multi-index serves two roles: the exponent vector of a monomial
/// `x_1^{n_1} ... x_k^{n_k}`, and the occupation numbers labelling a
/// symmetric-subspace basis vector. Ordering is lexicographic over the
/// counts, which is also the enumeration order used everywhere.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    counts: Vec<u32>,
}

impl MultiIndex {
    pub fn new(counts: Vec<u32>) -> Self {
        assert!(!counts.is_empty(), "multi-index needs at least one slot");
        Self { counts }
    }

    /// All-zero index over `k` slots.
    pub fn zero(k: usize) -> Self {
        Self::new(vec![0; k])
    }

    /// Index with a single unit entry at `slot`.
    pub fn unit(k: usize, slot: usize) -> Self {
        let mut counts = vec![0; k];
        counts[slot] = 1;
        Self::new(counts)
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Number of slots `k`.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total degree, the sum of all counts.
    pub fn degree(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// Componentwise sum.
    pub fn plus(&self, other: &MultiIndex) -> MultiIndex {
        assert_eq!(self.len(), other.len());
        MultiIndex::new(
            self.counts
                .iter()
                .zip(&other.counts)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self` with slot `i` decremented, or `None` if that count is zero.
    pub fn decrement(&self, i: usize) -> Option<MultiIndex> {
        if self.counts[i] == 0 {
            return None;
        }
        let mut counts = self.counts.clone();
        counts[i] -= 1;
        Some(MultiIndex::new(counts))
    }

    /// Multinomial coefficient `degree! / (n_1! ... n_k!)`.
    ///
    /// Computed as a product of binomials over prefix sums so that every
    /// intermediate stays at or below the final value. Exact in 64-bit
    /// for the degrees used here (up to roughly 60 over six slots).
    pub fn multinomial(&self) -> u64 {
        let mut result: u64 = 1;
        let mut prefix: u64 = 0;
        for &c in &self.counts {
            prefix += u64::from(c);
            result = result
                .checked_mul(binomial(prefix, u64::from(c)))
                .expect("multinomial overflow");
        }
        result
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k.min(n));
    let mut result: u64 = 1;
    for i in 0..k {
        result = result.checked_mul(n - i).expect("binomial overflow") / (i + 1);
    }
    result
}

/// Number of multi-indices of degree `r` over `k` slots, `C(k+r-1, r)`.
pub fn multiindex_count(k: usize, r: u32) -> usize {
    binomial(k as u64 + u64::from(r) - 1, u64::from(r)) as usize
}

/// All multi-indices of degree exactly `r` over `k` slots, in ascending
/// lexicographic order, without duplicates.
pub fn enumerate_multiindices(k: usize, r: u32) -> Vec<MultiIndex> {
    assert!(k >= 1);
    let mut out = Vec::with_capacity(multiindex_count(k, r));
    let mut current = vec![0u32; k];
    fill(&mut out, &mut current, 0, r);
    out
}

fn fill(out: &mut Vec<MultiIndex>, current: &mut Vec<u32>, slot: usize, remaining: u32) {
    if slot == current.len() - 1 {
        current[slot] = remaining;
        out.push(MultiIndex::new(current.clone()));
        current[slot] = 0;
        return;
    }
    for c in 0..=remaining {
        current[slot] = c;
        fill(out, current, slot + 1, remaining - c);
    }
    current[slot] = 0;
}
