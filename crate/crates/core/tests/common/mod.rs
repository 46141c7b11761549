#![allow(dead_code)]

use kelpbed_core::monge::{phi, SquareMatrix};
use kelpbed_core::BiwordMatrix;
use proptest::prelude::*;

/// An `n × n` biword matrix with entries in `0..=max_entry`, `n` in `dims`.
pub fn biword_matrix(
    dims: std::ops::RangeInclusive<usize>,
    max_entry: u64,
) -> impl Strategy<Value = BiwordMatrix> {
    dims.prop_flat_map(move |n| {
        proptest::collection::vec(0..=max_entry, n * n)
            .prop_map(move |e| BiwordMatrix::from_row_major(n, e).unwrap())
    })
}

/// A pair of same-dimension biword matrices.
pub fn biword_pair(
    dims: std::ops::RangeInclusive<usize>,
    max_entry: u64,
) -> impl Strategy<Value = (BiwordMatrix, BiwordMatrix)> {
    dims.prop_flat_map(move |n| {
        let side = || {
            proptest::collection::vec(0..=max_entry, n * n)
                .prop_map(move |e| BiwordMatrix::from_row_major(n, e).unwrap())
        };
        (side(), side())
    })
}

/// `Φ(X)` plus an addition table `u[i] + v[j]`: Monge by construction.
pub fn monge_from(x: &BiwordMatrix, u: &[i64], v: &[i64]) -> SquareMatrix {
    let mut a = phi(x).into_matrix();
    let m = a.dim();
    for (i, ui) in u.iter().enumerate().take(m) {
        for (j, vj) in v.iter().enumerate().take(m) {
            a.set(i, j, a.get(i, j) + ui + vj);
        }
    }
    a
}

/// A Monge matrix of dimension exactly `n + 1`, possibly with negative
/// entries.
pub fn monge_of_size(n: usize) -> impl Strategy<Value = SquareMatrix> {
    let m = n + 1;
    (
        proptest::collection::vec(0..=4u64, n * n),
        proptest::collection::vec(-20..=20i64, m),
        proptest::collection::vec(-20..=20i64, m),
    )
        .prop_map(move |(e, u, v)| monge_from(&BiwordMatrix::from_row_major(n, e).unwrap(), &u, &v))
}

/// A Monge matrix of dimension `n + 1`, `n` in `dims`.
pub fn monge_matrix(dims: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = SquareMatrix> {
    dims.prop_flat_map(monge_of_size)
}

/// Two Monge matrices of the same dimension.
pub fn monge_pair(
    dims: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (SquareMatrix, SquareMatrix)> {
    dims.prop_flat_map(|n| (monge_of_size(n), monge_of_size(n)))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
