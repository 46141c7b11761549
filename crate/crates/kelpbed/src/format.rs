//! The shared plain-text formats.
//!
//! A matrix is a line holding its dimension `n` followed by `n` rows of `n`
//! whitespace-separated integers. A biword is two lines, the top row then
//! the bottom row. Blank lines and lines starting with `#` are ignored
//! everywhere, so annotated output can be fed back in.

use std::fmt::Write as _;

use kelpbed_core::monge::SquareMatrix;
use kelpbed_core::{Biword, BiwordMatrix};

use crate::CliError;

/// Largest absolute entry accepted on input.
pub const MAX_ABS_ENTRY: i64 = 1 << 31;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, what: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("line {line}: {what}"))
}

fn parse_ints(line: usize, text: &str) -> Result<Vec<i64>, CliError> {
    text.split_whitespace()
        .map(|tok| {
            let v: i64 = tok
                .parse()
                .map_err(|_| parse_err(line, format!("bad integer `{tok}`")))?;
            if v.abs() > MAX_ABS_ENTRY {
                return Err(parse_err(
                    line,
                    format!("entry {v} exceeds 2^31 in magnitude"),
                ));
            }
            Ok(v)
        })
        .collect()
}

/// Read one integer matrix; entries may be negative.
pub fn parse_square(text: &str) -> Result<SquareMatrix, CliError> {
    let mut lines = content_lines(text);
    let (l0, header) = lines
        .next()
        .ok_or_else(|| CliError::Parse("empty input".into()))?;
    let n = match parse_ints(l0, header)?.as_slice() {
        [n] if *n >= 1 => *n as usize,
        _ => return Err(parse_err(l0, "expected a positive dimension")),
    };
    let mut entries = Vec::with_capacity(n * n);
    for _ in 0..n {
        let (ln, row) = lines
            .next()
            .ok_or_else(|| CliError::Parse(format!("expected {n} rows")))?;
        let row = parse_ints(ln, row)?;
        if row.len() != n {
            return Err(parse_err(
                ln,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        entries.extend(row);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "trailing content after matrix"));
    }
    Ok(SquareMatrix::from_row_major(n, entries)?)
}

/// Read one matrix of nonnegative entries.
pub fn parse_biword_matrix(text: &str) -> Result<BiwordMatrix, CliError> {
    let sq = parse_square(text)?;
    if let Some((r, c)) = sq.first_negative() {
        return Err(CliError::Parse(format!(
            "negative entry at ({}, {})",
            r + 1,
            c + 1
        )));
    }
    let entries = sq.row_major().iter().map(|&v| v as u64).collect();
    Ok(BiwordMatrix::from_row_major(sq.dim(), entries)?)
}

/// Read a biword as two rows of positive letters. Here blank lines count,
/// so two empty rows spell the empty biword.
pub fn parse_biword(text: &str) -> Result<Biword, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.starts_with('#'));
    let mut row = || -> Result<Vec<usize>, CliError> {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| CliError::Parse("a biword has two rows".into()))?;
        parse_ints(ln, l)?
            .into_iter()
            .map(|v| usize::try_from(v).map_err(|_| parse_err(ln, "letters are positive")))
            .collect()
    };
    let (top, bottom) = (row()?, row()?);
    if let Some((ln, _)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(parse_err(ln, "trailing content after biword"));
    }
    Biword::from_rows(&top, &bottom).map_err(|_| CliError::Parse("rows differ in length".into()))
}

pub fn write_square(a: &SquareMatrix) -> String {
    format!("{}\n{a}\n", a.dim())
}

pub fn write_biword_matrix(x: &BiwordMatrix) -> String {
    format!("{}\n{x}\n", x.n())
}

pub fn write_biword(w: &Biword) -> String {
    let join = |it: &mut dyn Iterator<Item = usize>| {
        it.map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    };
    let mut out = String::new();
    let _ = writeln!(out, "{}", join(&mut w.top_row()));
    let _ = writeln!(out, "{}", join(&mut w.bottom_row()));
    out
}
