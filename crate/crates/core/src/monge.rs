//! Monge matrices, the density/distribution maps, `Φ`, and the min-plus
//! distance product.
//!
//! All indices in this module are 0-based; error positions are reported
//! 1-based. A square matrix of dimension `m = n + 1` is *simple Monge* when
//! every contiguous 2×2 block satisfies
//! `A[i][j] + A[i+1][j+1] <= A[i][j+1] + A[i+1][j]`, all entries are
//! nonnegative, and its first column and bottom row vanish.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{BiwordMatrix, Error, Result};

/// A dense `m × m` integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareMatrix {
    m: usize,
    entries: Vec<i64>,
}

impl SquareMatrix {
    pub fn zero(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidDimension(0));
        }
        Ok(SquareMatrix {
            m,
            entries: vec![0; m * m],
        })
    }

    pub fn from_row_major(m: usize, entries: Vec<i64>) -> Result<Self> {
        if m == 0 || entries.len() != m * m {
            return Err(Error::InvalidDimension(m));
        }
        Ok(SquareMatrix { m, entries })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let m = rows.len();
        let mut entries = Vec::with_capacity(m * m);
        for row in rows {
            let row = row.as_ref();
            if row.len() != m {
                return Err(Error::InvalidDimension(row.len()));
            }
            entries.extend_from_slice(row);
        }
        Self::from_row_major(m, entries)
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.m + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.entries[row * self.m + col] = value;
    }

    pub fn row(&self, row: usize) -> &[i64] {
        &self.entries[row * self.m..(row + 1) * self.m]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.m)
    }

    pub fn row_major(&self) -> &[i64] {
        &self.entries
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(SquareMatrix { m: self.m, entries })
    }

    /// 0-based position of the first negative entry in row-major order.
    pub fn first_negative(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|&v| v < 0)
            .map(|idx| (idx / self.m, idx % self.m))
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// First contiguous 2×2 block (0-based top-left corner, row-major scan)
/// violating the Monge inequality.
pub fn monge_violation(a: &SquareMatrix) -> Option<(usize, usize)> {
    let m = a.dim();
    for i in 0..m.saturating_sub(1) {
        for j in 0..m - 1 {
            if a.get(i, j) + a.get(i + 1, j + 1) > a.get(i, j + 1) + a.get(i + 1, j) {
                return Some((i, j));
            }
        }
    }
    None
}

/// True iff every contiguous 2×2 block satisfies the Monge inequality,
/// which is equivalent to the inequality over all pairs `i < I`, `j < J`.
pub fn is_monge(a: &SquareMatrix) -> bool {
    monge_violation(a).is_none()
}

fn require_monge(a: &SquareMatrix) -> Result<()> {
    match monge_violation(a) {
        Some((i, j)) => Err(Error::NotMonge {
            row: i + 1,
            col: j + 1,
        }),
        None => Ok(()),
    }
}

/// The first nonzero position on the first column or bottom row.
fn l_boundary_violation(a: &SquareMatrix) -> Option<(usize, usize)> {
    let m = a.dim();
    (0..m)
        .map(|i| (i, 0))
        .chain((0..m).map(|j| (m - 1, j)))
        .find(|&(i, j)| a.get(i, j) != 0)
}

/// The density matrix: mixed second differences
/// `A[i][j] + A[i+1][j-1] - A[i][j-1] - A[i+1][j]` off the bottom row and
/// first column, zero on them. Nonnegative because `a` must be Monge.
pub fn density(a: &SquareMatrix) -> Result<SquareMatrix> {
    require_monge(a)?;
    let m = a.dim();
    let mut out = SquareMatrix::zero(m)?;
    for i in 0..m - 1 {
        for j in 1..m {
            out.set(
                i,
                j,
                a.get(i, j) + a.get(i + 1, j - 1) - a.get(i, j - 1) - a.get(i + 1, j),
            );
        }
    }
    Ok(out)
}

/// The distribution matrix: each entry is the sum of the entries of `b`
/// lying weakly southwest of it.
pub fn distribution(b: &SquareMatrix) -> Result<SquareMatrix> {
    if let Some((i, j)) = b.first_negative() {
        return Err(Error::NegativeEntry {
            row: i + 1,
            col: j + 1,
        });
    }
    let m = b.dim();
    let mut out = SquareMatrix::zero(m)?;
    for i in (0..m).rev() {
        let mut row_prefix = 0;
        for j in 0..m {
            row_prefix += b.get(i, j);
            let below = if i + 1 < m { out.get(i + 1, j) } else { 0 };
            out.set(i, j, row_prefix + below);
        }
    }
    Ok(out)
}

/// Place `x` in the upper-right `n × n` block of an `(n+1) × (n+1)` zero
/// matrix.
pub fn pad_l(x: &BiwordMatrix) -> SquareMatrix {
    let n = x.n();
    let mut out = SquareMatrix::zero(n + 1).expect("n + 1 >= 1");
    for i in 0..n {
        for j in 0..n {
            out.set(i, j + 1, x.entry(i, j) as i64);
        }
    }
    out
}

/// Inverse of [`pad_l`]: the upper-right block of a matrix whose first
/// column and bottom row are zero.
pub fn unpad_l(a: &SquareMatrix) -> Result<BiwordMatrix> {
    if a.dim() < 2 {
        return Err(Error::InvalidDimension(a.dim()));
    }
    if let Some((i, j)) = l_boundary_violation(a) {
        return Err(Error::NotSimple {
            row: i + 1,
            col: j + 1,
        });
    }
    if let Some((i, j)) = a.first_negative() {
        return Err(Error::NegativeEntry {
            row: i + 1,
            col: j + 1,
        });
    }
    let n = a.dim() - 1;
    let entries = (0..n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| a.get(i, j) as u64);
    BiwordMatrix::from_row_major(n, entries.collect())
}

/// An `(n+1) × (n+1)` nonnegative Monge matrix with zero first column and
/// zero bottom row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleMongeMatrix(SquareMatrix);

impl SimpleMongeMatrix {
    /// Validate nonnegativity, the zero L-boundary and the Monge property,
    /// in that order.
    pub fn new(a: SquareMatrix) -> Result<Self> {
        if a.dim() < 2 {
            return Err(Error::InvalidDimension(a.dim()));
        }
        if let Some((i, j)) = a.first_negative() {
            return Err(Error::NegativeEntry {
                row: i + 1,
                col: j + 1,
            });
        }
        if let Some((i, j)) = l_boundary_violation(&a) {
            return Err(Error::NotSimple {
                row: i + 1,
                col: j + 1,
            });
        }
        require_monge(&a)?;
        Ok(SimpleMongeMatrix(a))
    }

    /// The `n` of `𝓜⁰_n`, one less than the matrix dimension.
    pub fn n(&self) -> usize {
        self.0.dim() - 1
    }

    pub fn as_matrix(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> SquareMatrix {
        self.0
    }

    /// Max-norm; always the top-right entry.
    pub fn norm_max(&self) -> u64 {
        norm_max(&self.0) as u64
    }

    pub fn norm_l11(&self) -> u64 {
        norm_l11(&self.0) as u64
    }
}

impl fmt::Display for SimpleMongeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<SquareMatrix> for SimpleMongeMatrix {
    type Error = Error;

    fn try_from(a: SquareMatrix) -> Result<Self> {
        SimpleMongeMatrix::new(a)
    }
}

/// `Φ = Σ ∘ L`: entry `(i, j)` (0-based) counts the kelps of `x` with top
/// vertex `> i` and bottom vertex `< j + 1`, i.e. `#X[{i+1..n} × {1..j}]`.
pub fn phi(x: &BiwordMatrix) -> SimpleMongeMatrix {
    let a = distribution(&pad_l(x)).expect("entries are nonnegative");
    SimpleMongeMatrix(a)
}

/// The inverse of [`phi`]: the upper-right block of the density matrix.
pub fn phi_inverse(a: &SimpleMongeMatrix) -> BiwordMatrix {
    let d = density(&a.0).expect("simple Monge matrices are Monge");
    unpad_l(&d).expect("density of a simple Monge matrix is L-padded and nonnegative")
}

/// Naive min-plus product `C[i][j] = min_k A[i][k] + B[k][j]`.
pub fn distance_product(a: &SquareMatrix, b: &SquareMatrix) -> Result<SquareMatrix> {
    distance_product_argmin(a, b).map(|(c, _)| c)
}

/// Naive min-plus product together with the leftmost argmin `k` of every
/// entry (row-major).
pub fn distance_product_argmin(
    a: &SquareMatrix,
    b: &SquareMatrix,
) -> Result<(SquareMatrix, Vec<usize>)> {
    a.check_same_dim(b)?;
    let m = a.dim();
    let mut c = SquareMatrix::zero(m)?;
    let mut argmin = vec![0; m * m];
    let mut best = vec![i64::MAX; m];
    for i in 0..m {
        best.fill(i64::MAX);
        let arg = &mut argmin[i * m..(i + 1) * m];
        for (k, &aik) in a.row(i).iter().enumerate() {
            for (j, &bkj) in b.row(k).iter().enumerate() {
                let v = aik + bkj;
                if v < best[j] {
                    best[j] = v;
                    arg[j] = k;
                }
            }
        }
        for (j, &v) in best.iter().enumerate() {
            c.set(i, j, v);
        }
    }
    Ok((c, argmin))
}

/// Min-plus product of simple Monge matrices using monotone argmins.
///
/// For fixed `i`, `(j, k) ↦ A[i][k] + B[k][j]` is Monge, so its leftmost
/// row-minimum positions are nondecreasing in `j`. Each output row is filled
/// by divide and conquer on the middle column, splitting the `k` range at
/// its argmin: `O(m log m)` per row.
pub fn distance_product_monge(
    a: &SimpleMongeMatrix,
    b: &SimpleMongeMatrix,
) -> Result<SimpleMongeMatrix> {
    distance_product_monge_argmin(a, b).map(|(c, _)| c)
}

/// [`distance_product_monge`] together with the leftmost argmins.
pub fn distance_product_monge_argmin(
    a: &SimpleMongeMatrix,
    b: &SimpleMongeMatrix,
) -> Result<(SimpleMongeMatrix, Vec<usize>)> {
    let (a, b) = (&a.0, &b.0);
    a.check_same_dim(b)?;
    let m = a.dim();
    let mut c = SquareMatrix::zero(m)?;
    let mut argmin = vec![0; m * m];
    for i in 0..m {
        let row = a.row(i);
        let arg = &mut argmin[i * m..(i + 1) * m];
        row_minima(row, b, 0, m, 0, m - 1, arg);
        for j in 0..m {
            c.set(i, j, row[arg[j]] + b.get(arg[j], j));
        }
    }
    Ok((SimpleMongeMatrix(c), argmin))
}

/// Fill `arg[j]` for `j in cols_lo..cols_hi` with the leftmost argmin over
/// `k in k_lo..=k_hi` of `row[k] + b[k][j]`.
fn row_minima(
    row: &[i64],
    b: &SquareMatrix,
    cols_lo: usize,
    cols_hi: usize,
    k_lo: usize,
    k_hi: usize,
    arg: &mut [usize],
) {
    if cols_lo >= cols_hi {
        return;
    }
    let mid = (cols_lo + cols_hi) / 2;
    let mut best_k = k_lo;
    let mut best = row[k_lo] + b.get(k_lo, mid);
    for (k, &aik) in row.iter().enumerate().take(k_hi + 1).skip(k_lo + 1) {
        let v = aik + b.get(k, mid);
        if v < best {
            best = v;
            best_k = k;
        }
    }
    arg[mid] = best_k;
    row_minima(row, b, cols_lo, mid, k_lo, best_k, arg);
    row_minima(row, b, mid + 1, cols_hi, best_k, k_hi, arg);
}

/// The sum matrix `S[i][j] = A[i][0] + A[m-1][j] - A[m-1][0]`: the addition
/// table of the first column and the offset bottom row.
pub fn sum_matrix(a: &SquareMatrix) -> SquareMatrix {
    let m = a.dim();
    let corner = a.get(m - 1, 0);
    let mut out = SquareMatrix::zero(m).expect("m >= 1");
    for i in 0..m {
        for j in 0..m {
            out.set(i, j, a.get(i, 0) + a.get(m - 1, j) - corner);
        }
    }
    out
}

/// A Monge matrix split as `distribution(density(A)) + sum_matrix(A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MongeDecomposition {
    pub simple_part: SimpleMongeMatrix,
    pub sum_part: SquareMatrix,
}

impl MongeDecomposition {
    /// `simple_part + sum_part`.
    pub fn reconstruct(&self) -> SquareMatrix {
        self.simple_part
            .0
            .add(&self.sum_part)
            .expect("parts share a dimension")
    }
}

/// Split a Monge matrix into its simple part and its sum-matrix part.
///
/// The simple part must itself be nonnegative, which holds for every Monge
/// matrix since the density is.
pub fn decompose(a: &SquareMatrix) -> Result<MongeDecomposition> {
    if a.dim() < 2 {
        return Err(Error::InvalidDimension(a.dim()));
    }
    let simple = distribution(&density(a)?)?;
    Ok(MongeDecomposition {
        simple_part: SimpleMongeMatrix(simple),
        sum_part: sum_matrix(a),
    })
}

/// Largest entry. Entries are expected to be nonnegative.
pub fn norm_max(a: &SquareMatrix) -> i64 {
    a.entries.iter().copied().max().unwrap_or(0)
}

/// Sum of entries. Entries are expected to be nonnegative.
pub fn norm_l11(a: &SquareMatrix) -> i64 {
    a.entries.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq<const M: usize>(rows: [[i64; M]; M]) -> SquareMatrix {
        SquareMatrix::from_rows(&rows).unwrap()
    }

    fn example_x() -> BiwordMatrix {
        BiwordMatrix::from_rows(&[[0, 0, 0, 0], [1, 0, 1, 0], [0, 0, 3, 0], [0, 1, 0, 0]]).unwrap()
    }

    fn example_y() -> BiwordMatrix {
        BiwordMatrix::from_rows(&[[0, 0, 1, 1], [0, 0, 0, 1], [1, 0, 0, 0], [0, 0, 0, 0]]).unwrap()
    }

    fn phi_x() -> SquareMatrix {
        sq([
            [0, 1, 2, 6, 6],
            [0, 1, 2, 6, 6],
            [0, 0, 1, 4, 4],
            [0, 0, 1, 1, 1],
            [0, 0, 0, 0, 0],
        ])
    }

    fn phi_y() -> SquareMatrix {
        sq([
            [0, 1, 1, 2, 4],
            [0, 1, 1, 1, 2],
            [0, 1, 1, 1, 1],
            [0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0],
        ])
    }

    fn phi_xy() -> SquareMatrix {
        sq([
            [0, 1, 1, 2, 3],
            [0, 1, 1, 2, 3],
            [0, 1, 1, 1, 2],
            [0, 1, 1, 1, 1],
            [0, 0, 0, 0, 0],
        ])
    }

    #[test]
    fn monge_checks() {
        assert!(is_monge(&sq([[8, 5, 6], [7, 3, 1], [13, 5, 1]])));
        assert!(!is_monge(&sq([[1, 0], [0, 1]])));
        assert_eq!(monge_violation(&sq([[1, 0], [0, 1]])), Some((0, 0)));
        assert!(is_monge(&sq([[7]])));
    }

    #[test]
    fn density_worked() {
        let a = sq([[8, 5, 6], [7, 3, 1], [13, 5, 1]]);
        assert_eq!(density(&a).unwrap(), sq([[0, 1, 3], [0, 4, 2], [0, 0, 0]]));
        assert_eq!(
            density(&SquareMatrix::zero(3).unwrap()).unwrap(),
            SquareMatrix::zero(3).unwrap()
        );
        assert_eq!(
            density(&sq([[1, 0], [0, 1]])),
            Err(Error::NotMonge { row: 1, col: 1 })
        );
    }

    #[test]
    fn density_of_sum_matrix_vanishes() {
        // S[i][j] = u[i] + v[j]: the four terms of every mixed difference cancel.
        let (u, v) = ([3, -1, 4, 0], [0, 2, -5, 7]);
        let mut s = SquareMatrix::zero(4).unwrap();
        for (i, ui) in u.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                s.set(i, j, ui + vj);
            }
        }
        assert_eq!(density(&s).unwrap(), SquareMatrix::zero(4).unwrap());
    }

    #[test]
    fn distribution_worked() {
        let b = sq([[3, 0, 2], [1, 4, 0], [2, 3, 1]]);
        // Entry (2,3) sums rows 2..3 in full: 1+4+0+2+3+1 = 11. A 10 there
        // would violate the Monge inequality against (3,2) and (3,3).
        assert_eq!(
            distribution(&b).unwrap(),
            sq([[6, 13, 16], [3, 10, 11], [2, 5, 6]])
        );
        let mut e13 = SquareMatrix::zero(3).unwrap();
        e13.set(0, 2, 1);
        assert_eq!(distribution(&e13).unwrap(), e13);
        assert_eq!(
            distribution(&sq([[0, -1], [0, 0]])),
            Err(Error::NegativeEntry { row: 1, col: 2 })
        );
    }

    #[test]
    fn pad_and_unpad() {
        let x = example_x();
        let padded = pad_l(&x);
        assert_eq!(padded.dim(), 5);
        assert_eq!(padded.row(1), &[0, 1, 0, 1, 0]);
        assert_eq!(padded.row(4), &[0; 5]);
        assert_eq!(unpad_l(&padded).unwrap(), x);
        assert_eq!(
            pad_l(&BiwordMatrix::zero(3).unwrap()),
            SquareMatrix::zero(4).unwrap()
        );
    }

    #[test]
    fn phi_worked() {
        assert_eq!(phi(&example_x()).as_matrix(), &phi_x());
        assert_eq!(phi(&example_y()).as_matrix(), &phi_y());
        assert_eq!(
            phi(&BiwordMatrix::zero(4).unwrap()).as_matrix(),
            &SquareMatrix::zero(5).unwrap()
        );
    }

    #[test]
    fn phi_inverse_worked() {
        let a = SimpleMongeMatrix::new(phi_x()).unwrap();
        assert_eq!(phi_inverse(&a), example_x());
        let xy = SimpleMongeMatrix::new(phi_xy()).unwrap();
        let expected =
            BiwordMatrix::from_rows(&[[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]])
                .unwrap();
        assert_eq!(phi_inverse(&xy), expected);
    }

    #[test]
    fn simple_monge_validation() {
        assert_eq!(
            SimpleMongeMatrix::new(sq([[1, 0], [0, 0]])),
            Err(Error::NotSimple { row: 1, col: 1 })
        );
        assert_eq!(
            SimpleMongeMatrix::new(sq([[0, 1, 0], [0, 0, 1], [0, 0, 0]])),
            Err(Error::NotMonge { row: 1, col: 2 })
        );
        assert!(SimpleMongeMatrix::new(sq([[0]])).is_err());
    }

    #[test]
    fn distance_product_worked() {
        assert_eq!(distance_product(&phi_x(), &phi_y()).unwrap(), phi_xy());
        let a = SimpleMongeMatrix::new(phi_x()).unwrap();
        let b = SimpleMongeMatrix::new(phi_y()).unwrap();
        assert_eq!(
            distance_product_monge(&a, &b).unwrap().as_matrix(),
            &phi_xy()
        );
        assert_eq!(distance_product(&sq([[2]]), &sq([[5]])).unwrap(), sq([[7]]));
        // First column of a simple matrix is zero, so A ⊙ 0 picks min_k A[i][k] = 0.
        let z = SquareMatrix::zero(5).unwrap();
        assert_eq!(distance_product(&phi_x(), &z).unwrap(), z);
        let zs = phi(&BiwordMatrix::zero(4).unwrap());
        assert_eq!(distance_product_monge(&zs, &zs).unwrap(), zs);
        assert!(distance_product(&phi_x(), &SquareMatrix::zero(3).unwrap()).is_err());
    }

    #[test]
    fn sum_matrix_and_decomposition() {
        let a = sq([[8, 5, 6], [7, 3, 1], [13, 5, 1]]);
        let s = sum_matrix(&a);
        assert_eq!(s.get(0, 0), 8);
        assert_eq!(s, sq([[8, 0, -4], [7, -1, -5], [13, 5, 1]]));
        let d = decompose(&a).unwrap();
        assert_eq!(d.reconstruct(), a);
        assert_eq!(
            d.simple_part.as_matrix(),
            &sq([[0, 5, 10], [0, 4, 6], [0, 0, 0]])
        );
        assert_eq!(sum_matrix(&phi_x()), SquareMatrix::zero(5).unwrap());
    }

    #[test]
    fn norms() {
        let a = SimpleMongeMatrix::new(phi_x()).unwrap();
        assert_eq!(a.norm_max(), 6);
        assert_eq!(
            a.norm_l11(),
            1 + 2 + 6 + 6 + 1 + 2 + 6 + 6 + 1 + 4 + 4 + 1 + 1 + 1
        );
        let z = SquareMatrix::zero(3).unwrap();
        assert_eq!((norm_max(&z), norm_l11(&z)), (0, 0));
    }
}
