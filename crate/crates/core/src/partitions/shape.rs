//! Partitions, skew shapes and the cells of their Young diagrams.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a Young diagram in matrix (English) coordinates, 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Column index minus row index.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// dropped on construction, so two partitions compare equal iff their
/// positive parts agree.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds a partition from parts the caller knows to be weakly
    /// decreasing. Trailing zeros are still trimmed.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// The positive parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part, 1-indexed; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of positive parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The parts padded with zeros to `ell` entries.
    pub fn padded(&self, ell: usize) -> Result<Vec<usize>> {
        if ell < self.length() {
            return Err(Error::InvalidLength { ell, length: self.length() });
        }
        let mut v = self.parts.clone();
        v.resize(ell, 0);
        Ok(v)
    }

    /// Whether the Young diagram of `other` sits inside that of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Cells of the diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut cells = Vec::with_capacity(self.size());
        for (r, &p) in self.parts.iter().enumerate() {
            for c in 1..=p {
                cells.push(Cell::new(r + 1, c));
            }
        }
        cells
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width).map(|c| self.parts.iter().take_while(|&&p| p >= c).count()).collect();
        Partition { parts }
    }

    /// Removes the given cells and returns the result if it is still a
    /// partition diagram.
    pub fn without_cells(&self, cells: &[Cell]) -> Option<Partition> {
        let mut parts = self.parts.clone();
        let mut per_row = vec![0usize; parts.len()];
        for cell in cells {
            if !self.contains_cell(*cell) {
                return None;
            }
            per_row[cell.row - 1] += 1;
        }
        for (r, removed) in per_row.iter().enumerate() {
            // removed cells must be the rightmost ones in their row
            let keep = parts[r] - removed;
            if cells.iter().any(|c| c.row == r + 1 && c.col <= keep) {
                return None;
            }
            parts[r] = keep;
        }
        Partition::new(parts).ok()
    }

    /// The text form accepted by [`FromStr`] padded to a declared length.
    pub fn display_padded(&self, ell: usize) -> String {
        let mut parts = self.parts.clone();
        if ell > parts.len() {
            parts.resize(ell, 0);
        }
        join_parts(&parts)
    }
}

fn join_parts(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join_parts(&self.parts))
    }
}

/// Empty partition prints as `0`, matching the parser.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", join_parts(&self.parts))
        }
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `4,2,1`. The empty string and `0` are the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: format!("bad part {:?}: {}", tok.trim(), e),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse { input: s.to_string(), reason: e.to_string() })
    }
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer: outer.to_string(), inner: inner.to_string() });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.outer == self.inner
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Cells of `outer \ inner` in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut cells = Vec::with_capacity(self.size());
        for r in 1..=self.outer.length() {
            for c in self.inner.part(r) + 1..=self.outer.part(r) {
                cells.push(Cell::new(r, c));
            }
        }
        cells
    }

    /// Column range `(first, last)` of the skew cells in row `r`; empty rows
    /// give `first > last`.
    pub fn row_range(&self, r: usize) -> (usize, usize) {
        (self.inner.part(r) + 1, self.outer.part(r))
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.outer, self.inner)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Splits `"λ"` or `"λ/μ"` into its two partitions without checking
/// containment.
pub fn parse_shape_pair(s: &str) -> Result<(Partition, Partition)> {
    match s.split_once('/') {
        Some((outer, inner)) => Ok((outer.parse()?, inner.parse()?)),
        None => Ok((s.parse()?, Partition::empty())),
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (outer, inner) = parse_shape_pair(s)?;
        SkewShape::new(outer, inner)
    }
}

/// All partitions of `size`, in increasing lexicographic order of parts.
pub fn partitions_of(size: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in 1..=max_part.min(remaining) {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partitions of every size up to `max_size` with at most `max_length`
/// parts, ordered by size and then lexicographically.
pub fn partitions_up_to(max_size: usize, max_length: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).filter(|p| p.length() <= max_length).collect()
}

/// All partitions contained in `outer`, ordered by size then lexicographically.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    fn rec(outer: &Partition, row: usize, bound: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > outer.length() {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        let cap = bound.min(outer.part(row));
        for p in 0..=cap {
            prefix.push(p);
            rec(outer, row + 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer, 1, usize::MAX, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out.dedup();
    out
}
