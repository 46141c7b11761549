use core::fmt;

/// Errors raised when an operation's precondition is violated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands of different dimension were combined.
    DimensionMismatch { left: usize, right: usize },
    /// A dimension of zero, or a buffer whose length is not `n * n`.
    InvalidDimension(usize),
    /// A biword letter outside `1..=n`.
    LetterOutOfRange { letter: usize, n: usize },
    /// A row or column interval that does not fit inside `1..=n`.
    IntervalOutOfRange { start: usize, end: usize, n: usize },
    /// The contiguous 2×2 block with top-left corner `(row, col)` (1-based)
    /// violates the Monge inequality.
    NotMonge { row: usize, col: usize },
    /// The first column or bottom row has a nonzero entry at `(row, col)`.
    NotSimple { row: usize, col: usize },
    /// A negative entry at `(row, col)` where nonnegative entries are required.
    NegativeEntry { row: usize, col: usize },
    /// Images of a permutation are not a bijection of `1..=n`.
    InvalidPermutation,
    /// A pair `((a,b),(c,d))` with `b > c`, or a system using more copies of
    /// a kelp than its bed contains.
    InvalidUpDownSystem,
    /// A brute-force oracle was asked for more than it is configured to handle.
    OracleCapacity { requested: usize, bound: usize },
    /// An enumeration produced more than `cap` results.
    CapExceeded { cap: usize },
    /// A decorated part `a[c]` whose copy label exceeds the divisor count of `a`.
    InvalidLabel { part: u64, label: u64 },
    /// A distinguishable partition where `a(s+1)` occurs more often than `a(s)`.
    NotUnlabeled { part: u64, subscript: u64 },
    /// A part of size zero, or a subscript/label of zero.
    InvalidPart,
    /// The parts of a partition do not sum to the stated total.
    WeightMismatch { expected: u64, actual: u64 },
    /// A plane partition that is not weakly decreasing, or does not fit its box.
    NotPlanePartition,
    /// A plane partition that does not fit in the `(rows, cols, height)` box.
    BoxViolation {
        rows: usize,
        cols: usize,
        height: u64,
    },
    /// Malformed decorated-partition text.
    Syntax(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::InvalidDimension(n) => write!(f, "invalid dimension {n}"),
            Error::LetterOutOfRange { letter, n } => {
                write!(f, "letter {letter} outside 1..={n}")
            }
            Error::IntervalOutOfRange { start, end, n } => {
                write!(f, "interval {start}..={end} outside 1..={n}")
            }
            Error::NotMonge { row, col } => write!(
                f,
                "not Monge: 2x2 block at ({row},{col}) violates A[i][j] + A[i+1][j+1] <= A[i][j+1] + A[i+1][j]"
            ),
            Error::NotSimple { row, col } => write!(
                f,
                "not simple: first column and bottom row must be zero, found nonzero at ({row},{col})"
            ),
            Error::NegativeEntry { row, col } => write!(f, "negative entry at ({row},{col})"),
            Error::InvalidPermutation => write!(f, "images do not form a permutation"),
            Error::InvalidUpDownSystem => write!(
                f,
                "invalid up-down system: every pair needs b <= c and copies drawn from the beds"
            ),
            Error::OracleCapacity { requested, bound } => {
                write!(f, "oracle capacity exceeded: {requested} > {bound}")
            }
            Error::CapExceeded { cap } => write!(f, "enumeration exceeded cap of {cap} results"),
            Error::InvalidLabel { part, label } => {
                write!(f, "copy label {label} exceeds the number of divisors of {part}")
            }
            Error::NotUnlabeled { part, subscript } => write!(
                f,
                "part {part}({}) occurs more often than {part}({subscript})",
                subscript + 1
            ),
            Error::InvalidPart => write!(f, "parts, labels and subscripts must be positive"),
            Error::WeightMismatch { expected, actual } => {
                write!(f, "weighted sum is {actual}, expected {expected}")
            }
            Error::NotPlanePartition => {
                write!(f, "rows must be positive and weakly decrease along rows and columns")
            }
            Error::BoxViolation { rows, cols, height } => {
                write!(f, "plane partition does not fit in the ({rows},{cols},{height}) box")
            }
            Error::Syntax(what) => write!(f, "syntax error: {what}"),
        }
    }
}

impl core::error::Error for Error {}
