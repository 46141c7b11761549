//! Growth series of the simple Monge matrices with respect to the max norm
//! and the L₁,₁ norm, and exhaustive enumeration of each graded piece.
//!
//! Both norms pull back along `Φ` to weighted entry sums of the preimage
//! `X`: every kelp weighs 1 for the max norm, and kelp `(a, b)` weighs
//! `a · (n + 1 - b)` for the L₁,₁ norm. The series are therefore products of
//! geometric series, one per cell of `X`, truncated at `q^K`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::monge::{phi, SimpleMongeMatrix};
use crate::{BiwordMatrix, Error, Result};

/// Default cap on the number of matrices [`enumerate_graded`] may return.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// Coefficients of `q^0 ..= q^K` of a power series, exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesCoefficients {
    coeffs: Vec<BigUint>,
}

impl SeriesCoefficients {
    /// The series `1`, truncated at `q^truncation`.
    pub fn one(truncation: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); truncation + 1];
        coeffs[0] = BigUint::one();
        SeriesCoefficients { coeffs }
    }

    /// Wrap an explicit coefficient list; its length is `K + 1`.
    ///
    /// # Panics
    ///
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series has at least one coefficient"
        );
        SeriesCoefficients { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigUint {
        &self.coeffs[k]
    }

    /// Multiply in place by `1 / (1 - q^step)`.
    pub fn mul_geometric(&mut self, step: usize) {
        assert!(step > 0, "geometric step must be positive");
        for k in step..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(k);
            hi[0] += &lo[k - step];
        }
    }
}

/// Which norm a series or enumeration is graded by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Norm {
    Max,
    L11,
}

impl Norm {
    /// Weight of the cell at 0-based `(row, col)` of an `n × n` preimage.
    fn cell_weight(self, n: usize, row: usize, col: usize) -> usize {
        match self {
            Norm::Max => 1,
            Norm::L11 => (row + 1) * (n - col),
        }
    }

    /// The norm of a simple Monge matrix.
    pub fn of(self, a: &SimpleMongeMatrix) -> u64 {
        match self {
            Norm::Max => a.norm_max(),
            Norm::L11 => a.norm_l11(),
        }
    }
}

/// `1 / (1 - q)^{n²}`: coefficient `k` is `binomial(n² + k - 1, k)`.
pub fn series_max(n: usize, truncation: usize) -> SeriesCoefficients {
    let mut s = SeriesCoefficients::one(truncation);
    for _ in 0..n * n {
        s.mul_geometric(1);
    }
    s
}

/// `∏_{i,j=1..n} 1 / (1 - q^{ij})`.
pub fn series_l11(n: usize, truncation: usize) -> SeriesCoefficients {
    let mut s = SeriesCoefficients::one(truncation);
    for i in 1..=n {
        for j in 1..=n {
            if i * j <= truncation {
                s.mul_geometric(i * j);
            }
        }
    }
    s
}

/// The L₁,₁ series with `n → ∞`; coefficient `k` stabilises once `n >= k`,
/// so this is `series_l11(K, K)`.
pub fn series_l11_infinity(truncation: usize) -> SeriesCoefficients {
    series_l11(truncation.max(1), truncation)
}

/// Partial sums of the coefficients, i.e. multiplication by `1 / (1 - q)`.
pub fn partial_sum_series(s: &SeriesCoefficients) -> SeriesCoefficients {
    let mut out = s.clone();
    out.mul_geometric(1);
    out
}

/// Every simple Monge matrix in `𝓜⁰_n` of norm exactly `k`, sorted
/// row-major lexicographically.
pub fn enumerate_graded(
    n: usize,
    k: u64,
    norm: Norm,
    cap: usize,
) -> Result<Vec<SimpleMongeMatrix>> {
    enumerate_norm(n, k, norm, cap, false)
}

/// Every simple Monge matrix in `𝓜⁰_n` of norm at most `k`, sorted.
pub fn enumerate_filtered(
    n: usize,
    k: u64,
    norm: Norm,
    cap: usize,
) -> Result<Vec<SimpleMongeMatrix>> {
    enumerate_norm(n, k, norm, cap, true)
}

fn enumerate_norm(
    n: usize,
    k: u64,
    norm: Norm,
    cap: usize,
    at_most: bool,
) -> Result<Vec<SimpleMongeMatrix>> {
    let mut preimages = Vec::new();
    let targets = if at_most { 0..=k } else { k..=k };
    for target in targets {
        weighted_compositions(n, target, norm, cap, &mut preimages)?;
    }
    let mut out: Vec<SimpleMongeMatrix> = preimages.iter().map(phi).collect();
    out.sort_unstable();
    Ok(out)
}

/// Push every `X ∈ ℕ^{n×n}` with `Σ weight(cell) · X[cell] = target`.
fn weighted_compositions(
    n: usize,
    target: u64,
    norm: Norm,
    cap: usize,
    out: &mut Vec<BiwordMatrix>,
) -> Result<()> {
    let mut cells: Vec<(usize, u64)> = (0..n * n)
        .map(|idx| (idx, norm.cell_weight(n, idx / n, idx % n) as u64))
        .collect();
    // Heaviest cells first so infeasible branches die early.
    cells.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut current = BiwordMatrix::zero(n)?;
    fill(&cells, 0, target, &mut current, cap, out)
}

fn fill(
    cells: &[(usize, u64)],
    next: usize,
    remaining: u64,
    current: &mut BiwordMatrix,
    cap: usize,
    out: &mut Vec<BiwordMatrix>,
) -> Result<()> {
    if remaining == 0 {
        if out.len() >= cap {
            return Err(Error::CapExceeded { cap });
        }
        out.push(current.clone());
        return Ok(());
    }
    let Some(&(idx, w)) = cells.get(next) else {
        return Ok(());
    };
    let n = current.n();
    let (row, col) = (idx / n, idx % n);
    for count in (0..=remaining / w).rev() {
        current.set(row, col, count);
        fill(cells, next + 1, remaining - count * w, current, cap, out)?;
    }
    current.set(row, col, 0);
    Ok(())
}
