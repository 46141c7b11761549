//! Combinatorial models of the L₁,₁-graded simple Monge matrices of
//! unbounded dimension, and of the max-norm filtration.
//!
//! A class of L₁,₁ norm `k` is determined by its density matrix `M`, whose
//! entries `M_{i,-j}` (row `i`, column `j` counted from the right) satisfy
//! `Σ ij · M_{i,-j} = k`. Such matrices are in bijection with
//!
//! - partitions of `k` where each part `a` comes in `d(a)` copies
//!   ([`DivisorCopyPartition`], text form `a[c]`),
//! - partitions of `k` with distinguishable but unlabeled parts
//!   ([`DistinguishablePartition`], text form `a(s)`),
//!
//! and the same count also enumerates factorization patterns of `k` (not
//! modelled here) and unital *-subalgebras of `M_k(ℂ)` up to unitary
//! similarity, whose direct-sum signature [`star_algebra_signature`]
//! renders.
//!
//! [`psi`] maps `(n, n, k)`-boxed plane partitions into `(n+1) × (n+1)`
//! matrices; its image is Monge exactly when every southern face is weakly
//! decreasing.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::str::FromStr;

use crate::monge::{distribution, phi, SimpleMongeMatrix, SquareMatrix};
use crate::{BiwordMatrix, Error, Result};

/// Default largest `k` accepted by [`enumerate_density`].
pub const DEFAULT_DENSITY_BOUND: u64 = 12;

/// Number of divisors of `a`.
pub fn divisor_count(a: u64) -> u64 {
    divisor_count_upto(a, a)
}

/// Number of divisors of `a` that are at most `i`.
pub fn divisor_count_upto(a: u64, i: u64) -> u64 {
    (1..=i.min(a)).filter(|&d| a.is_multiple_of(d)).count() as u64
}

/// The `c`-th smallest divisor of `a` (1-based `c`).
pub fn nth_divisor(a: u64, c: u64) -> Option<u64> {
    if c == 0 {
        return None;
    }
    (1..=a).filter(|&d| a.is_multiple_of(d)).nth(c as usize - 1)
}

/// A density matrix `M ∈ 𝓓_k`, stored as its smallest square upper-right
/// block; the `k × k` frame is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DensityClass {
    k: u64,
    size: usize,
    /// `cells[(i-1) * size + (j-1)] = M_{i,-j}`.
    cells: Vec<u64>,
}

impl DensityClass {
    /// Read a square matrix as an upper-right block; `k` is its weighted sum.
    pub fn from_matrix(block: &BiwordMatrix) -> Self {
        let s = block.n();
        let mut by_cell = BTreeMap::new();
        for (kelp, m) in block.kelps() {
            by_cell.insert((kelp.top, s + 1 - kelp.bottom), m);
        }
        Self::from_cells(by_cell)
    }

    /// Like [`from_matrix`](Self::from_matrix) but insists on the weighted
    /// sum `k`.
    pub fn new(k: u64, block: &BiwordMatrix) -> Result<Self> {
        let d = Self::from_matrix(block);
        if d.k != k {
            return Err(Error::WeightMismatch {
                expected: k,
                actual: d.k,
            });
        }
        Ok(d)
    }

    /// Build from `(i, j) ↦ M_{i,-j}` with 1-based `i`, `j`.
    fn from_cells(by_cell: BTreeMap<(usize, usize), u64>) -> Self {
        let size = by_cell
            .iter()
            .filter(|(_, &m)| m > 0)
            .map(|(&(i, j), _)| i.max(j))
            .max()
            .unwrap_or(0);
        let mut cells = vec![0; size * size];
        let mut k = 0;
        for (&(i, j), &m) in by_cell.iter().filter(|(_, &m)| m > 0) {
            cells[(i - 1) * size + (j - 1)] = m;
            k += (i * j) as u64 * m;
        }
        DensityClass { k, size, cells }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Side length of the smallest upper-right block holding every nonzero
    /// entry; 0 for the zero matrix.
    pub fn support_size(&self) -> usize {
        self.size
    }

    /// `M_{i,-j}` for 1-based `i`, `j`; zero outside the support.
    pub fn cell(&self, i: usize, j: usize) -> u64 {
        if i == 0 || j == 0 || i > self.size || j > self.size {
            return 0;
        }
        self.cells[(i - 1) * self.size + (j - 1)]
    }

    /// Nonzero `((i, j), M_{i,-j})`, ordered by `i` then `j`.
    pub fn nonzero_cells(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        let s = self.size;
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(move |(idx, &m)| ((idx / s + 1, idx % s + 1), m))
    }

    /// The upper-right block in ordinary orientation, at least `1 × 1`.
    pub fn to_block(&self) -> BiwordMatrix {
        self.embed(self.size.max(1)).expect("size fits")
    }

    /// The density matrix placed in the upper-right corner of an `n × n`
    /// frame.
    pub fn embed(&self, n: usize) -> Result<BiwordMatrix> {
        if n < self.size {
            return Err(Error::DimensionMismatch {
                left: n,
                right: self.size,
            });
        }
        let mut out = BiwordMatrix::zero(n)?;
        for ((i, j), m) in self.nonzero_cells() {
            out.set(i - 1, n - j, m);
        }
        Ok(out)
    }
}

/// `Σ̄(M)`: the distribution of `M`, as the smallest matrix of its class
/// under `A ~ [[0, A], [0, 0]]`.
pub fn sigma_bar(m: &DensityClass) -> SquareMatrix {
    let block = m.to_block();
    let sq = SquareMatrix::from_row_major(
        block.n(),
        block.row_major().iter().map(|&v| v as i64).collect(),
    )
    .expect("square block");
    distribution(&sq).expect("density entries are nonnegative")
}

/// The representative of `Σ̄(M)` in `𝓜⁰_n`; needs `n >= support_size`.
pub fn sigma_bar_at(m: &DensityClass, n: usize) -> Result<SimpleMongeMatrix> {
    Ok(phi(&m.embed(n)?))
}

/// A part `a` tagged with a copy label or subscript.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DecoratedPart {
    pub part: u64,
    pub tag: u64,
}

/// Distinct decorated parts with their multiplicities.
pub type PartList = Vec<(DecoratedPart, u64)>;

/// Canonical order: part descending, then tag ascending.
fn canonical(mut parts: PartList) -> PartList {
    let mut merged: BTreeMap<(core::cmp::Reverse<u64>, u64), u64> = BTreeMap::new();
    for (p, m) in parts.drain(..) {
        *merged
            .entry((core::cmp::Reverse(p.part), p.tag))
            .or_default() += m;
    }
    merged
        .into_iter()
        .filter(|(_, m)| *m > 0)
        .map(|((core::cmp::Reverse(part), tag), m)| (DecoratedPart { part, tag }, m))
        .collect()
}

fn check_positive(parts: &[(DecoratedPart, u64)]) -> Result<()> {
    if parts.iter().any(|(p, _)| p.part == 0 || p.tag == 0) {
        return Err(Error::InvalidPart);
    }
    Ok(())
}

fn total(parts: &[(DecoratedPart, u64)]) -> u64 {
    parts.iter().map(|(p, m)| p.part * m).sum()
}

/// A partition in which part `a` comes in `d(a)` copies `a[1] … a[d(a)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorCopyPartition {
    parts: PartList,
}

impl DivisorCopyPartition {
    /// `parts` are `(part, copy label)` with multiplicities, in any order.
    pub fn new(parts: PartList) -> Result<Self> {
        check_positive(&parts)?;
        if let Some((p, _)) = parts.iter().find(|(p, _)| p.tag > divisor_count(p.part)) {
            return Err(Error::InvalidLabel {
                part: p.part,
                label: p.tag,
            });
        }
        Ok(DivisorCopyPartition {
            parts: canonical(parts),
        })
    }

    /// Distinct decorated parts with multiplicities, canonically ordered.
    pub fn parts(&self) -> &[(DecoratedPart, u64)] {
        &self.parts
    }

    /// The partitioned integer.
    pub fn total(&self) -> u64 {
        total(&self.parts)
    }
}

/// A partition with distinguishable but unlabeled parts: for every size
/// `a`, subscript `a(s+1)` occurs no more often than `a(s)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistinguishablePartition {
    parts: PartList,
}

impl DistinguishablePartition {
    pub fn new(parts: PartList) -> Result<Self> {
        check_positive(&parts)?;
        let parts = canonical(parts);
        let count = |part: u64, tag: u64| {
            parts
                .iter()
                .find(|(p, _)| p.part == part && p.tag == tag)
                .map_or(0, |(_, m)| *m)
        };
        for (p, m) in &parts {
            if p.tag > 1 && count(p.part, p.tag - 1) < *m {
                return Err(Error::NotUnlabeled {
                    part: p.part,
                    subscript: p.tag - 1,
                });
            }
        }
        Ok(DistinguishablePartition { parts })
    }

    pub fn parts(&self) -> &[(DecoratedPart, u64)] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        total(&self.parts)
    }

    /// Occurrences of `part(subscript)`.
    pub fn count(&self, part: u64, subscript: u64) -> u64 {
        self.parts
            .iter()
            .find(|(p, _)| p.part == part && p.tag == subscript)
            .map_or(0, |(_, m)| *m)
    }
}

/// `M_{i,-j}` copies of the part `(ij)[d_i(ij)]`.
pub fn density_to_p(m: &DensityClass) -> DivisorCopyPartition {
    let parts = m
        .nonzero_cells()
        .map(|((i, j), mult)| {
            let part = (i * j) as u64;
            (
                DecoratedPart {
                    part,
                    tag: divisor_count_upto(part, i as u64),
                },
                mult,
            )
        })
        .collect();
    DivisorCopyPartition {
        parts: canonical(parts),
    }
}

/// Inverse of [`density_to_p`]: `a[c]` lands in `M_{i,-a/i}` where `i` is
/// the `c`-th smallest divisor of `a`.
pub fn p_to_density(p: &DivisorCopyPartition) -> Result<DensityClass> {
    let mut by_cell = BTreeMap::new();
    for &(dp, mult) in p.parts() {
        let i = nth_divisor(dp.part, dp.tag).ok_or(Error::InvalidLabel {
            part: dp.part,
            label: dp.tag,
        })?;
        *by_cell
            .entry((i as usize, (dp.part / i) as usize))
            .or_default() += mult;
    }
    Ok(DensityClass::from_cells(by_cell))
}

/// `Σ_{ℓ>=j} M_{i,-ℓ}` occurrences of `i(j)`.
pub fn density_to_r(m: &DensityClass) -> DistinguishablePartition {
    let s = m.support_size();
    let mut parts = Vec::new();
    for i in 1..=s {
        let mut tail = 0;
        for j in (1..=s).rev() {
            tail += m.cell(i, j);
            if tail > 0 {
                parts.push((
                    DecoratedPart {
                        part: i as u64,
                        tag: j as u64,
                    },
                    tail,
                ));
            }
        }
    }
    DistinguishablePartition {
        parts: canonical(parts),
    }
}

/// Inverse of [`density_to_r`]: `M_{i,-j} = #i(j) - #i(j+1)`.
pub fn r_to_density(r: &DistinguishablePartition) -> Result<DensityClass> {
    let mut by_cell = BTreeMap::new();
    for &(dp, mult) in r.parts() {
        let next = r.count(dp.part, dp.tag + 1);
        if next > mult {
            return Err(Error::NotUnlabeled {
                part: dp.part,
                subscript: dp.tag,
            });
        }
        by_cell.insert((dp.part as usize, dp.tag as usize), mult - next);
    }
    Ok(DensityClass::from_cells(by_cell))
}

/// Direct-sum signature of the unital *-subalgebra attached to `r`: parts
/// sharing a size and subscript become one diagonal block
/// `Δ(Ma ⊕ … ⊕ Ma)`, a lone part becomes `Ma`.
pub fn star_algebra_signature(r: &DistinguishablePartition) -> String {
    let mut out = String::new();
    for (idx, (p, mult)) in r.parts().iter().enumerate() {
        if idx > 0 {
            out.push_str(" ⊕ ");
        }
        if *mult == 1 {
            let _ = write!(out, "M{}", p.part);
        } else {
            out.push_str("Δ(");
            for c in 0..*mult {
                if c > 0 {
                    out.push_str(" ⊕ ");
                }
                let _ = write!(out, "M{}", p.part);
            }
            out.push(')');
        }
    }
    out
}

/// All of `𝓓_k`, in a fixed canonical order. Refuses `k > bound`.
pub fn enumerate_density(k: u64, bound: u64) -> Result<Vec<DensityClass>> {
    if k > bound {
        return Err(Error::OracleCapacity {
            requested: k as usize,
            bound: bound as usize,
        });
    }
    let mut cells = Vec::new();
    for i in 1..=k as usize {
        for j in 1..=k as usize / i {
            cells.push((i, j));
        }
    }
    cells.sort_by_key(|&(i, j)| core::cmp::Reverse(i * j));
    let mut out = Vec::new();
    let mut chosen = BTreeMap::new();
    density_fill(&cells, 0, k, &mut chosen, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn density_fill(
    cells: &[(usize, usize)],
    next: usize,
    remaining: u64,
    chosen: &mut BTreeMap<(usize, usize), u64>,
    out: &mut Vec<DensityClass>,
) {
    if remaining == 0 {
        out.push(DensityClass::from_cells(chosen.clone()));
        return;
    }
    let Some(&(i, j)) = cells.get(next) else {
        return;
    };
    let w = (i * j) as u64;
    for count in (0..=remaining / w).rev() {
        if count > 0 {
            chosen.insert((i, j), count);
        } else {
            chosen.remove(&(i, j));
        }
        density_fill(cells, next + 1, remaining - count * w, chosen, out);
    }
}

/// A plane partition as rows of positive entries, weakly decreasing along
/// rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    rows: Vec<Vec<u64>>,
}

impl PlanePartition {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() || row.contains(&0) || row.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::NotPlanePartition);
            }
            if r > 0 {
                let above = &rows[r - 1];
                if row.len() > above.len() || row.iter().zip(above).any(|(b, a)| b > a) {
                    return Err(Error::NotPlanePartition);
                }
            }
        }
        Ok(PlanePartition { rows })
    }

    /// Read a grid where zero means "no box"; trailing zeros are dropped.
    pub fn from_grid(grid: &[Vec<u64>]) -> Result<Self> {
        let rows = grid
            .iter()
            .map(|r| r.iter().copied().take_while(|&v| v > 0).collect::<Vec<_>>())
            .take_while(|r| !r.is_empty())
            .collect();
        Self::new(rows)
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Entry at 0-based `(row, col)`, zero outside the shape.
    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.rows
            .get(row)
            .and_then(|r| r.get(col))
            .copied()
            .unwrap_or(0)
    }

    pub fn fits_box(&self, rows: usize, cols: usize, height: u64) -> bool {
        self.rows.len() <= rows
            && self
                .rows
                .iter()
                .all(|r| r.len() <= cols && r.iter().all(|&v| v <= height))
    }
}

/// Reflect `pi` horizontally and place it in the upper-right `n × n` block
/// of an `(n+1) × (n+1)` zero matrix. `pi` must fit the `(n, n, k)` box.
pub fn psi(pi: &PlanePartition, n: usize, k: u64) -> Result<SquareMatrix> {
    if !pi.fits_box(n, n, k) {
        return Err(Error::BoxViolation {
            rows: n,
            cols: n,
            height: k,
        });
    }
    let mut out = SquareMatrix::zero(n + 1)?;
    for (i, row) in pi.rows().iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            out.set(i, n - j, v as i64);
        }
    }
    Ok(out)
}

/// Heights of the visible southern face of each wall: row `i` minus row
/// `i+1`, over the columns of row `i`.
pub fn southern_faces(pi: &PlanePartition) -> Vec<Vec<u64>> {
    pi.rows()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &v)| v - pi.entry(i + 1, j))
                .collect()
        })
        .collect()
}

pub fn has_weakly_decreasing_faces(pi: &PlanePartition) -> bool {
    southern_faces(pi)
        .iter()
        .all(|face| face.windows(2).all(|w| w[0] >= w[1]))
}

/// Every `(rows, cols, height)`-boxed plane partition, including the empty
/// one.
pub fn boxed_plane_partitions(rows: usize, cols: usize, height: u64) -> Vec<PlanePartition> {
    let mut grid = vec![vec![0u64; cols]; rows];
    let mut out = Vec::new();
    fill_grid(&mut grid, 0, height, &mut out);
    out
}

fn fill_grid(grid: &mut [Vec<u64>], pos: usize, height: u64, out: &mut Vec<PlanePartition>) {
    let cols = grid.first().map_or(0, Vec::len);
    if cols == 0 || pos == grid.len() * cols {
        out.push(PlanePartition::from_grid(grid).expect("grid is weakly decreasing"));
        return;
    }
    let (r, c) = (pos / cols, pos % cols);
    let mut cap = height;
    if r > 0 {
        cap = cap.min(grid[r - 1][c]);
    }
    if c > 0 {
        cap = cap.min(grid[r][c - 1]);
    }
    for v in 0..=cap {
        grid[r][c] = v;
        fill_grid(grid, pos + 1, height, out);
    }
    grid[r][c] = 0;
}

fn fmt_parts(
    f: &mut fmt::Formatter<'_>,
    parts: &[(DecoratedPart, u64)],
    open: char,
    close: char,
) -> fmt::Result {
    f.write_str("(")?;
    for (idx, (p, m)) in parts.iter().enumerate() {
        if idx > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{}{open}{}{close}", p.part, p.tag)?;
        if *m > 1 {
            write!(f, "^{m}")?;
        }
    }
    f.write_str(")")
}

impl fmt::Display for DivisorCopyPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(f, &self.parts, '[', ']')
    }
}

impl fmt::Display for DistinguishablePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(f, &self.parts, '(', ')')
    }
}

/// Either kind of decorated partition, as recognised from its text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecoratedPartition {
    DivisorCopy(DivisorCopyPartition),
    Distinguishable(DistinguishablePartition),
}

impl DecoratedPartition {
    pub fn to_density(&self) -> Result<DensityClass> {
        match self {
            DecoratedPartition::DivisorCopy(p) => p_to_density(p),
            DecoratedPartition::Distinguishable(r) => r_to_density(r),
        }
    }
}

fn parse_number(s: &str) -> Result<u64> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Syntax("expected a decimal number"));
    }
    s.parse().map_err(|_| Error::Syntax("number too large"))
}

/// Parse `(a[c]^m, …)` or `(a(s)^m, …)`; the bracket kind must be
/// consistent across parts. Returns the parts and whether `[` was used.
fn parse_parts(s: &str) -> Result<(PartList, Option<bool>)> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or(Error::Syntax("a partition is wrapped in parentheses"))?;
    let mut parts = Vec::new();
    let mut square = None;
    if inner.trim().is_empty() {
        return Ok((parts, square));
    }
    for token in inner.split(',') {
        let token = token.trim();
        let (body, mult) = match token.split_once('^') {
            Some((b, m)) => (b.trim(), parse_number(m)?),
            None => (token, 1),
        };
        let (open_at, is_square) = match (body.find('['), body.find('(')) {
            (Some(i), None) => (i, true),
            (None, Some(i)) => (i, false),
            _ => return Err(Error::Syntax("each part needs one [label] or (subscript)")),
        };
        if *square.get_or_insert(is_square) != is_square {
            return Err(Error::Syntax("cannot mix [label] and (subscript) parts"));
        }
        let close = if is_square { ']' } else { ')' };
        let tag = body[open_at + 1..]
            .strip_suffix(close)
            .ok_or(Error::Syntax("unterminated label or subscript"))?;
        let part = DecoratedPart {
            part: parse_number(&body[..open_at])?,
            tag: parse_number(tag)?,
        };
        if mult == 0 {
            return Err(Error::Syntax("multiplicity must be positive"));
        }
        parts.push((part, mult));
    }
    Ok((parts, square))
}

impl FromStr for DivisorCopyPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_parts(s)? {
            (_, Some(false)) => Err(Error::Syntax("expected a[c] parts")),
            (parts, _) => DivisorCopyPartition::new(parts),
        }
    }
}

impl FromStr for DistinguishablePartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_parts(s)? {
            (_, Some(true)) => Err(Error::Syntax("expected a(s) parts")),
            (parts, _) => DistinguishablePartition::new(parts),
        }
    }
}

impl FromStr for DecoratedPartition {
    type Err = Error;

    /// The empty partition `()` parses as a divisor-copy partition.
    fn from_str(s: &str) -> Result<Self> {
        match parse_parts(s)? {
            (parts, Some(false)) => {
                DistinguishablePartition::new(parts).map(DecoratedPartition::Distinguishable)
            }
            (parts, _) => DivisorCopyPartition::new(parts).map(DecoratedPartition::DivisorCopy),
        }
    }
}
