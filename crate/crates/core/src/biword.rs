//! Biwords, their matrices of column multiplicities, and induced sub-beds.
//!
//! A biword over `[n]` is a lexicographically sorted two-row array; its
//! matrix `X` counts how often each column `(i, j)` occurs. Drawn as a
//! bipartite multigraph, each column is a *kelp* from top vertex `i` to
//! bottom vertex `j`. Kelp vertices are 1-based, matrix accessors are
//! 0-based.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use crate::{Error, Result};

/// An edge from top vertex `top` to bottom vertex `bottom`, both in `1..=n`.
///
/// The derived order is lexicographic: top vertex first, bottom vertex
/// breaking ties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Kelp {
    pub top: usize,
    pub bottom: usize,
}

impl Kelp {
    pub const fn new(top: usize, bottom: usize) -> Self {
        Kelp { top, bottom }
    }
}

/// An `n × n` matrix of nonnegative integers; entry `(i, j)` is the number
/// of copies of kelp `(i+1, j+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiwordMatrix {
    n: usize,
    entries: Vec<u64>,
}

impl BiwordMatrix {
    /// The `n × n` zero matrix (the empty biword).
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(0));
        }
        Ok(BiwordMatrix {
            n,
            entries: vec![0; n * n],
        })
    }

    /// Build from a row-major buffer of length `n * n`.
    pub fn from_row_major(n: usize, entries: Vec<u64>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::InvalidDimension(n));
        }
        Ok(BiwordMatrix { n, entries })
    }

    /// Build from nested rows; every row must have length `rows.len()`.
    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::InvalidDimension(row.len()));
            }
            entries.extend_from_slice(row);
        }
        Self::from_row_major(n, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u64) {
        self.entries[row * self.n + col] = value;
    }

    /// Number of copies of `kelp` (1-based vertices).
    pub fn multiplicity(&self, kelp: Kelp) -> u64 {
        self.entry(kelp.top - 1, kelp.bottom - 1)
    }

    /// Add one copy of `kelp`.
    pub fn add_kelp(&mut self, kelp: Kelp) {
        self.entries[(kelp.top - 1) * self.n + kelp.bottom - 1] += 1;
    }

    pub fn row_major(&self) -> &[u64] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.entries.chunks(self.n)
    }

    /// Total number of kelps, i.e. the sum of all entries.
    pub fn total_kelps(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Distinct kelps with their multiplicities, in lexicographic order.
    pub fn kelps(&self) -> impl Iterator<Item = (Kelp, u64)> + '_ {
        let n = self.n;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(move |(idx, &m)| (Kelp::new(idx / n + 1, idx % n + 1), m))
    }

    /// The sub-bed induced by a rectangle of top and bottom vertices.
    pub fn sub_bed(
        &self,
        rows: RangeInclusive<usize>,
        cols: RangeInclusive<usize>,
    ) -> Result<SubBed<'_>> {
        SubBed::new(self, rows, cols)
    }

    pub(crate) fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for BiwordMatrix {
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

/// A lexicographically sorted list of columns `(a_t, b_t)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Biword {
    columns: Vec<Kelp>,
}

impl Biword {
    /// Build from columns in any order; they are sorted into canonical form.
    pub fn new(mut columns: Vec<Kelp>) -> Self {
        columns.sort_unstable();
        Biword { columns }
    }

    /// Build from the top and bottom rows.
    pub fn from_rows(top: &[usize], bottom: &[usize]) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::DimensionMismatch {
                left: top.len(),
                right: bottom.len(),
            });
        }
        Ok(Self::new(
            top.iter()
                .zip(bottom)
                .map(|(&a, &b)| Kelp::new(a, b))
                .collect(),
        ))
    }

    pub fn columns(&self) -> &[Kelp] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn top_row(&self) -> impl Iterator<Item = usize> + '_ {
        self.columns.iter().map(|k| k.top)
    }

    pub fn bottom_row(&self) -> impl Iterator<Item = usize> + '_ {
        self.columns.iter().map(|k| k.bottom)
    }
}

/// Count the columns of `word` into an `n × n` matrix.
pub fn biword_to_matrix(word: &Biword, n: usize) -> Result<BiwordMatrix> {
    let mut x = BiwordMatrix::zero(n)?;
    for &kelp in word.columns() {
        for letter in [kelp.top, kelp.bottom] {
            if letter == 0 || letter > n {
                return Err(Error::LetterOutOfRange { letter, n });
            }
        }
        x.add_kelp(kelp);
    }
    Ok(x)
}

/// List the kelps of `x` in lexicographic order, one column per copy.
pub fn matrix_to_biword(x: &BiwordMatrix) -> Biword {
    let mut columns = Vec::with_capacity(x.total_kelps() as usize);
    for (kelp, m) in x.kelps() {
        columns.extend(core::iter::repeat_n(kelp, m as usize));
    }
    Biword { columns }
}

/// The kelps of `base` whose top vertex lies in `rows` and bottom vertex in
/// `cols` (both 1-based, inclusive; `a..=b` with `b < a` is empty).
#[derive(Debug, Clone)]
pub struct SubBed<'a> {
    base: &'a BiwordMatrix,
    rows: RangeInclusive<usize>,
    cols: RangeInclusive<usize>,
}

impl<'a> SubBed<'a> {
    pub fn new(
        base: &'a BiwordMatrix,
        rows: RangeInclusive<usize>,
        cols: RangeInclusive<usize>,
    ) -> Result<Self> {
        for r in [&rows, &cols] {
            if !r.is_empty() && (*r.start() == 0 || *r.end() > base.n()) {
                return Err(Error::IntervalOutOfRange {
                    start: *r.start(),
                    end: *r.end(),
                    n: base.n(),
                });
            }
        }
        Ok(SubBed { base, rows, cols })
    }

    pub fn base(&self) -> &BiwordMatrix {
        self.base
    }

    pub fn contains(&self, kelp: Kelp) -> bool {
        self.rows.contains(&kelp.top) && self.cols.contains(&kelp.bottom)
    }

    /// Number of kelps in the rectangle.
    pub fn count_kelps(&self) -> u64 {
        let mut total = 0;
        for i in self.rows.clone() {
            for j in self.cols.clone() {
                total += self.base.entry(i - 1, j - 1);
            }
        }
        total
    }

    /// The sub-bed as a standalone matrix with every entry outside the
    /// rectangle set to zero.
    pub fn to_matrix(&self) -> BiwordMatrix {
        let mut out = BiwordMatrix::zero(self.base.n()).expect("n >= 1");
        for (kelp, m) in self.base.kelps() {
            if self.contains(kelp) {
                out.set(kelp.top - 1, kelp.bottom - 1, m);
            }
        }
        out
    }
}

/// Sum of `s.base()` over the rectangle of `s`.
pub fn count_kelps(s: &SubBed<'_>) -> u64 {
    s.count_kelps()
}
