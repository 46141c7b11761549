//! The extended Demazure product `⋆` on biword matrices.
//!
//! Stack the kelp bed of `X` on top of the kelp bed of `Y`, identifying the
//! bottom vertices of `X` with the top vertices of `Y`. A kelp `x = (a,b)`
//! of `X` and a kelp `y = (c,d)` of `Y` form an *up–down pair* when `b <= c`;
//! the *weight* `wt(X, Y)` is the size of a largest system of disjoint
//! up–down pairs. The product picks kelps of `X` right to left and matches
//! each with the leftmost kelp of `Y` that raises the weight, then fuses
//! every chosen pair `((a,b),(c,d))` into the kelp `(a,d)`.
//!
//! On permutation matrices this restricts to the classical Demazure
//! (0-Hecke) product, provided here as [`hecke_product`].

use alloc::vec;
use alloc::vec::Vec;

use crate::monge::{distance_product, phi, phi_inverse, SimpleMongeMatrix};
use crate::{BiwordMatrix, Error, Kelp, Result};

/// Default cap on the number of kelps per side accepted by [`weight_oracle`].
pub const DEFAULT_ORACLE_BOUND: usize = 12;

/// `(x, y)` is an up–down pair iff the bottom vertex of `x` is weakly left of
/// the top vertex of `y`.
pub fn is_up_down_pair(x: Kelp, y: Kelp) -> bool {
    x.bottom <= y.top
}

/// `wt(X, Y)` via the split-point formula
/// `min_{1<=k<=n+1} #X[[n] × {1..k-1}] + #Y[{k..n} × [n]]`.
pub fn weight(x: &BiwordMatrix, y: &BiwordMatrix) -> Result<u64> {
    x.check_same_dim(y)?;
    let n = x.n();
    let mut x_bottoms = vec![0u64; n];
    let mut y_tops = vec![0u64; n];
    for (kelp, m) in x.kelps() {
        x_bottoms[kelp.bottom - 1] += m;
    }
    for (kelp, m) in y.kelps() {
        y_tops[kelp.top - 1] += m;
    }
    Ok(split_min(&x_bottoms, &y_tops))
}

/// `min_k (sum x_bottoms[..k]) + (sum y_tops[k..])` over `k in 0..=n`.
fn split_min(x_bottoms: &[u64], y_tops: &[u64]) -> u64 {
    let mut left = 0;
    let mut right: u64 = y_tops.iter().sum();
    let mut best = right;
    for (xb, yt) in x_bottoms.iter().zip(y_tops) {
        left += xb;
        right -= yt;
        best = best.min(left + right);
    }
    best
}

/// A multiset of up–down pairs drawn from `(X, Y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpDownSystem {
    pairs: Vec<(Kelp, Kelp)>,
}

impl UpDownSystem {
    /// Validate that every pair is up–down and that the first (second)
    /// components use no more copies than `x` (`y`) provides.
    pub fn new(pairs: Vec<(Kelp, Kelp)>, x: &BiwordMatrix, y: &BiwordMatrix) -> Result<Self> {
        x.check_same_dim(y)?;
        let n = x.n();
        let mut used_x = BiwordMatrix::zero(n)?;
        let mut used_y = BiwordMatrix::zero(n)?;
        for &(a, b) in &pairs {
            let in_range = |k: Kelp| (1..=n).contains(&k.top) && (1..=n).contains(&k.bottom);
            if !in_range(a) || !in_range(b) || !is_up_down_pair(a, b) {
                return Err(Error::InvalidUpDownSystem);
            }
            used_x.add_kelp(a);
            used_y.add_kelp(b);
            if used_x.multiplicity(a) > x.multiplicity(a)
                || used_y.multiplicity(b) > y.multiplicity(b)
            {
                return Err(Error::InvalidUpDownSystem);
            }
        }
        Ok(UpDownSystem { pairs })
    }

    pub fn pairs(&self) -> &[(Kelp, Kelp)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

fn expand(x: &BiwordMatrix) -> Vec<Kelp> {
    x.kelps()
        .flat_map(|(k, m)| core::iter::repeat_n(k, m as usize))
        .collect()
}

/// A largest up–down system, found by augmenting paths over the bipartite
/// graph of individual kelp copies. Refuses inputs with more than `bound`
/// kelps on either side.
pub fn max_up_down_system(
    x: &BiwordMatrix,
    y: &BiwordMatrix,
    bound: usize,
) -> Result<UpDownSystem> {
    x.check_same_dim(y)?;
    for side in [x, y] {
        let total = side.total_kelps() as usize;
        if total > bound {
            return Err(Error::OracleCapacity {
                requested: total,
                bound,
            });
        }
    }
    let left = expand(x);
    let right = expand(y);
    let mut match_of_right: Vec<Option<usize>> = vec![None; right.len()];
    for l in 0..left.len() {
        let mut seen = vec![false; right.len()];
        augment(l, &left, &right, &mut match_of_right, &mut seen);
    }
    let pairs = match_of_right
        .iter()
        .enumerate()
        .filter_map(|(r, l)| l.map(|l| (left[l], right[r])))
        .collect();
    Ok(UpDownSystem { pairs })
}

fn augment(
    l: usize,
    left: &[Kelp],
    right: &[Kelp],
    match_of_right: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for r in 0..right.len() {
        if seen[r] || !is_up_down_pair(left[l], right[r]) {
            continue;
        }
        seen[r] = true;
        let free = match match_of_right[r] {
            None => true,
            Some(other) => augment(other, left, right, match_of_right, seen),
        };
        if free {
            match_of_right[r] = Some(l);
            return true;
        }
    }
    false
}

/// `wt(X, Y)` as the size of a maximum matching; a brute-force check on
/// [`weight`].
pub fn weight_oracle(x: &BiwordMatrix, y: &BiwordMatrix, bound: usize) -> Result<u64> {
    max_up_down_system(x, y, bound).map(|s| s.len() as u64)
}

/// The pairs selected while computing `X ⋆ Y`, in selection order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarTrace {
    /// `(x_ℓ, y_ℓ)` for `ℓ = 1..=w`.
    pub pairs: Vec<(Kelp, Kelp)>,
    /// Selection rounds that ended with a chosen pair; equals `pairs.len()`.
    pub rounds: usize,
    /// Candidate kelp types of `X` examined over the whole run, including
    /// the final unsuccessful scan.
    pub candidates_examined: usize,
}

impl StarTrace {
    /// Fuse every pair `((a,b),(c,d))` into the kelp `(a,d)`.
    pub fn fused(&self, n: usize) -> BiwordMatrix {
        let mut out = BiwordMatrix::zero(n).expect("n >= 1");
        for (x, y) in &self.pairs {
            out.add_kelp(Kelp::new(x.top, y.bottom));
        }
        out
    }
}

/// `X ⋆ Y` by iterated kelp selection and fusion.
pub fn star(x: &BiwordMatrix, y: &BiwordMatrix) -> Result<BiwordMatrix> {
    star_trace(x, y).map(|t| t.fused(x.n()))
}

/// Run the selection loop of `X ⋆ Y` and return the chosen pairs.
///
/// Round `ℓ` scans the kelp types of `X` from the right (top vertex, then
/// bottom vertex), restricted to top vertices weakly left of every kelp
/// already chosen. For each candidate `x` it looks for the leftmost unused
/// kelp `y` of `Y` (bottom vertex, then top vertex) whose addition raises
/// the weight; a candidate with no such `y` is passed over for this round
/// only. The loop stops when no candidate succeeds.
///
/// Weight checks use the split-point formula: with `f(k)` the split value
/// after adding `x`, adding `y = (c,d)` raises the weight iff
/// `min_{k<=c} f(k) + 1` and `min_{k>c} f(k)` both exceed the current
/// weight, which depends on `c` alone.
pub fn star_trace(x: &BiwordMatrix, y: &BiwordMatrix) -> Result<StarTrace> {
    x.check_same_dim(y)?;
    let n = x.n();

    // X kelp types, rightmost first; Y kelp types, leftmost (by bottom) first.
    let mut x_types: Vec<Kelp> = x.kelps().map(|(k, _)| k).collect();
    x_types.reverse();
    let mut y_types: Vec<Kelp> = y.kelps().map(|(k, _)| k).collect();
    y_types.sort_unstable_by_key(|k| (k.bottom, k.top));

    let mut x_left = x.clone();
    let mut y_left = y.clone();
    // Split counts of the chosen sub-beds, indexed by k = 1..=n+1 (slot k-1).
    // base[k-1] = #X_ℓ[bottom < k] + #Y_ℓ[top >= k].
    let mut base = vec![0u64; n + 1];
    let mut current = 0u64;
    let mut top_bound = n;
    let mut trace = StarTrace {
        pairs: Vec::new(),
        rounds: 0,
        candidates_examined: 0,
    };

    let mut f = vec![0u64; n + 1];
    let mut prefix_min = vec![0u64; n + 1];
    let mut suffix_min = vec![0u64; n + 2];

    loop {
        let mut chosen = None;
        for &xk in x_types.iter().filter(|k| k.top <= top_bound) {
            if x_left.multiplicity(xk) == 0 {
                continue;
            }
            trace.candidates_examined += 1;
            for (slot, v) in f.iter_mut().enumerate() {
                // slot = k - 1; x contributes to every k > bottom.
                *v = base[slot] + u64::from(slot >= xk.bottom);
            }
            let mut run = u64::MAX;
            for (slot, v) in f.iter().enumerate() {
                run = run.min(*v);
                prefix_min[slot] = run;
            }
            suffix_min[n + 1] = u64::MAX;
            for slot in (0..=n).rev() {
                suffix_min[slot] = suffix_min[slot + 1].min(f[slot]);
            }
            // y with top c counts towards every k <= c, i.e. slots 0..c.
            let raises = |c: usize| prefix_min[c - 1] + 1 > current && suffix_min[c] > current;
            let hit = y_types
                .iter()
                .copied()
                .find(|&yk| y_left.multiplicity(yk) > 0 && raises(yk.top));
            if let Some(yk) = hit {
                chosen = Some((xk, yk));
                break;
            }
        }
        let Some((xk, yk)) = chosen else { break };

        x_left.set(xk.top - 1, xk.bottom - 1, x_left.multiplicity(xk) - 1);
        y_left.set(yk.top - 1, yk.bottom - 1, y_left.multiplicity(yk) - 1);
        for (slot, v) in base.iter_mut().enumerate() {
            *v += u64::from(slot >= xk.bottom) + u64::from(slot < yk.top);
        }
        current += 1;
        debug_assert_eq!(base.iter().copied().min(), Some(current));
        top_bound = top_bound.min(xk.top);
        trace.pairs.push((xk, yk));
        trace.rounds += 1;
    }
    Ok(trace)
}

/// `Φ⁻¹(Φ(X) ⊙ Φ(Y))` with the naive min-plus product.
pub fn star_via_monge(x: &BiwordMatrix, y: &BiwordMatrix) -> Result<BiwordMatrix> {
    x.check_same_dim(y)?;
    let product = distance_product(phi(x).as_matrix(), phi(y).as_matrix())?;
    let simple = SimpleMongeMatrix::new(product)?;
    Ok(phi_inverse(&simple))
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation);
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation);
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Number of pairs `i < j` with `σ(i) > σ(j)`.
    pub fn inversions(&self) -> usize {
        let v = &self.images;
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&w| w < v[i]).count())
            .sum()
    }

    /// Right multiplication by the adjacent transposition `σ_i`
    /// (1-based `i`): swaps the values `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Self {
        let images = self
            .images
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Permutation { images }
    }

    /// Recognise a permutation matrix.
    pub fn from_matrix(x: &BiwordMatrix) -> Option<Self> {
        let mut images = Vec::with_capacity(x.n());
        for row in x.rows() {
            if row.iter().sum::<u64>() != 1 || row.iter().any(|&e| e > 1) {
                return None;
            }
            images.push(row.iter().position(|&e| e == 1)? + 1);
        }
        Permutation::new(images).ok()
    }
}

/// The permutation matrix with `X[i][σ(i)] = 1`.
pub fn permutation_to_matrix(p: &Permutation) -> BiwordMatrix {
    let n = p.n();
    let mut x = BiwordMatrix::zero(n).expect("n >= 1");
    for i in 1..=n {
        x.set(i - 1, p.apply(i) - 1, 1);
    }
    x
}

/// A reduced word `[i_1, …, i_k]` with `v = σ_{i_1} ⋯ σ_{i_k}`, read off a
/// bubble sort of the one-line notation of `v`.
pub fn reduced_word(v: &Permutation) -> Vec<usize> {
    let mut a = v.images.clone();
    let mut word = Vec::with_capacity(v.inversions());
    let mut swapped = true;
    while swapped {
        swapped = false;
        for p in 0..a.len().saturating_sub(1) {
            if a[p] > a[p + 1] {
                a.swap(p, p + 1);
                word.push(p + 1);
                swapped = true;
            }
        }
    }
    word
}

/// Fold `word` onto `u` with `w ⋆ σ_i = wσ_i` when that adds an inversion
/// and `w` otherwise.
pub fn hecke_fold(u: &Permutation, word: &[usize]) -> Permutation {
    word.iter().fold(u.clone(), |w, &i| {
        let next = w.times_simple(i);
        if next.inversions() > w.inversions() {
            next
        } else {
            w
        }
    })
}

/// The classical Demazure product `u ⋆ v` on permutations.
pub fn hecke_product(u: &Permutation, v: &Permutation) -> Result<Permutation> {
    if u.n() != v.n() {
        return Err(Error::DimensionMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    Ok(hecke_fold(u, &reduced_word(v)))
}
