mod common;

use common::{biword_matrix, monge_matrix, monge_pair};
use kelpbed_core::monge::{
    decompose, density, distance_product, distance_product_argmin, distance_product_monge,
    distribution, is_monge, norm_l11, norm_max, phi, phi_inverse, sum_matrix, SimpleMongeMatrix,
    SquareMatrix,
};
use kelpbed_core::BiwordMatrix;
use proptest::prelude::*;

/// Every `i < I`, `j < J`, not just contiguous blocks.
fn monge_all_pairs(a: &SquareMatrix) -> bool {
    let m = a.dim();
    for i in 0..m {
        for ii in i + 1..m {
            for j in 0..m {
                for jj in j + 1..m {
                    if a.get(i, j) + a.get(ii, jj) > a.get(i, jj) + a.get(ii, j) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `Φ(X)[i][j]` counts kelps with top in `i..=n` and bottom in `1..j`.
fn phi_by_counting(x: &BiwordMatrix) -> SquareMatrix {
    let n = x.n();
    let mut a = SquareMatrix::zero(n + 1).unwrap();
    for i in 1..=n + 1 {
        for j in 1..=n + 1 {
            let c = x.sub_bed(i..=n, 1..=j - 1).unwrap().count_kelps();
            a.set(i - 1, j - 1, c as i64);
        }
    }
    a
}

/// Each kelp `(a, b)` contributes an all-ones `a × (n + 1 - b)` block in the
/// upper-right corner.
fn phi_by_blocks(x: &BiwordMatrix) -> SquareMatrix {
    let n = x.n();
    let mut a = SquareMatrix::zero(n + 1).unwrap();
    for (kelp, mult) in x.kelps() {
        for i in 0..kelp.top {
            for j in kelp.bottom..=n {
                a.set(i, j, a.get(i, j) + mult as i64);
            }
        }
    }
    a
}

fn simple_pair(
    dims: std::ops::RangeInclusive<usize>,
    max_entry: u64,
) -> impl Strategy<Value = (SimpleMongeMatrix, SimpleMongeMatrix)> {
    common::biword_pair(dims, max_entry).prop_map(|(x, y)| (phi(&x), phi(&y)))
}

#[test]
fn criteria_agree_exhaustively_on_small_grids() {
    // Every 2×2 matrix with entries in 0..=3.
    for code in 0..4u32.pow(4) {
        let e: Vec<i64> = (0..4).map(|d| (code / 4u32.pow(d) % 4) as i64).collect();
        let a = SquareMatrix::from_row_major(2, e).unwrap();
        assert_eq!(is_monge(&a), monge_all_pairs(&a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn criteria_agree(
        a in (1usize..=5).prop_flat_map(|m| proptest::collection::vec(0..=5i64, m * m)
            .prop_map(move |e| SquareMatrix::from_row_major(m, e).unwrap()))
    ) {
        prop_assert_eq!(is_monge(&a), monge_all_pairs(&a));
    }

    #[test]
    fn criteria_agree_on_near_monge(a in monge_matrix(1..=4), i in 0usize..5, j in 0usize..5, d in -2i64..=2) {
        let mut b = a.clone();
        let (i, j) = (i % b.dim(), j % b.dim());
        b.set(i, j, b.get(i, j) + d);
        prop_assert_eq!(is_monge(&b), monge_all_pairs(&b));
    }

    #[test]
    fn product_of_monge_is_monge((a, b) in monge_pair(1..=7)) {
        prop_assert!(is_monge(&distance_product(&a, &b).unwrap()));
    }

    #[test]
    fn simple_monge_closed((a, b) in simple_pair(1..=7, 4)) {
        let c = distance_product(a.as_matrix(), b.as_matrix()).unwrap();
        prop_assert!(SimpleMongeMatrix::new(c).is_ok());
    }

    #[test]
    fn decomposition_reconstructs(a in monge_matrix(1..=7)) {
        let d = decompose(&a).unwrap();
        prop_assert_eq!(d.reconstruct(), a.clone());
        prop_assert!(SimpleMongeMatrix::new(d.simple_part.as_matrix().clone()).is_ok());
        prop_assert_eq!(
            distribution(&density(&a).unwrap()).unwrap().add(&sum_matrix(&a)).unwrap(),
            a
        );
    }

    #[test]
    fn density_nonnegative_and_distribution_monge(a in monge_matrix(1..=6)) {
        let d = density(&a).unwrap();
        prop_assert!(d.row_major().iter().all(|&v| v >= 0));
        prop_assert!(is_monge(&distribution(&d).unwrap()));
    }

    #[test]
    fn sum_matrix_of_simple_vanishes(x in biword_matrix(1..=6, 4)) {
        let a = phi(&x).into_matrix();
        prop_assert_eq!(sum_matrix(&a), SquareMatrix::zero(a.dim()).unwrap());
    }

    #[test]
    fn phi_is_a_bijection(x in biword_matrix(1..=7, 5)) {
        let a = phi(&x);
        prop_assert_eq!(phi_inverse(&a), x.clone());
        prop_assert_eq!(phi(&phi_inverse(&a)), a.clone());
        prop_assert_eq!(a.as_matrix(), &phi_by_counting(&x));
        prop_assert_eq!(a.as_matrix(), &phi_by_blocks(&x));
        prop_assert_eq!(a.norm_max(), x.total_kelps());
    }

    #[test]
    fn norms_submultiplicative((a, b) in simple_pair(1..=6, 4)) {
        let c = distance_product(a.as_matrix(), b.as_matrix()).unwrap();
        prop_assert!(norm_max(&c) <= norm_max(a.as_matrix()) + norm_max(b.as_matrix()));
        prop_assert!(norm_l11(&c) <= norm_l11(a.as_matrix()) + norm_l11(b.as_matrix()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fast_product_matches_naive((a, b) in simple_pair(1..=63, 3)) {
        let (naive, naive_arg) = distance_product_argmin(a.as_matrix(), b.as_matrix()).unwrap();
        let (fast, fast_arg) =
            kelpbed_core::monge::distance_product_monge_argmin(&a, &b).unwrap();
        prop_assert_eq!(fast.as_matrix(), &naive);
        prop_assert_eq!(fast_arg, naive_arg);
        prop_assert_eq!(distance_product_monge(&a, &b).unwrap().into_matrix(), naive);
    }
}
