//! Young diagrams as partitions, with hook/arm/leg statistics, diagonal
//! counts, and rim-hook removal.
//!
//! Cells are 1-indexed, `(row, col)`, row 1 being the first (longest) row.
//! Following the source convention used throughout this crate, `leg` runs
//! along the row (`lambda_h - k`) and `arm` along the column
//! (`lambda'_k - h`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CombError, Result};

/// A box position in a Young diagram, 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-indexed");
        Cell { row, col }
    }

    /// The cell mirrored across the main diagonal.
    pub fn transposed(self) -> Self {
        Cell { row: self.col, col: self.row }
    }
}

/// A partition: non-increasing positive parts, no trailing zeros stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting increasing or zero parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p == 0) {
            return Err(CombError::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts that may contain zeros or be unsorted
    /// only by trailing zeros; strictly increasing inner parts still fail.
    pub fn from_parts_trimmed(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of boxes.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Length of row `h` (1-indexed); 0 beyond the last row.
    pub fn row_len(&self, h: u32) -> u32 {
        self.parts.get(h as usize - 1).copied().unwrap_or(0)
    }

    /// Length of column `k` (1-indexed); this is `lambda'_k`.
    pub fn col_len(&self, k: u32) -> u32 {
        self.parts.iter().take_while(|&&p| p >= k).count() as u32
    }

    pub fn contains(&self, s: Cell) -> bool {
        s.col <= self.row_len(s.row)
    }

    /// Iterates over all cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| {
            (1..=p).map(move |j| Cell::new(i as u32 + 1, j))
        })
    }

    /// The conjugate (transposed) diagram.
    pub fn conjugate(&self) -> Partition {
        match self.parts.first() {
            None => Partition::empty(),
            Some(&m) => {
                let parts = (1..=m).map(|k| self.col_len(k)).collect();
                Partition { parts }
            }
        }
    }

    /// `lambda_h - k`: boxes strictly to the right of `s` in its row.
    /// May be negative when `s` lies outside the diagram.
    pub fn leg(&self, s: Cell) -> i64 {
        self.row_len(s.row) as i64 - s.col as i64
    }

    /// `lambda'_k - h`: boxes strictly below `s` in its column.
    /// May be negative when `s` lies outside the diagram.
    pub fn arm(&self, s: Cell) -> i64 {
        self.col_len(s.col) as i64 - s.row as i64
    }

    /// Hook length `leg + arm + 1` of a cell inside the diagram.
    pub fn hook_length(&self, s: Cell) -> Result<u64> {
        if !self.contains(s) {
            return Err(CombError::CellOutside(s));
        }
        Ok((self.leg(s) + self.arm(s) + 1) as u64)
    }

    /// The rim of `s`: border cells `(i,j)` with `i >= s.row`, `j >= s.col`
    /// and `(i+1,j+1)` outside the diagram. Its cardinality equals the hook
    /// length of `s`. Cells come back in boundary order, row by row.
    pub fn rim_cells(&self, s: Cell) -> Result<Vec<Cell>> {
        if !self.contains(s) {
            return Err(CombError::CellOutside(s));
        }
        let mut rim = Vec::new();
        for c in self.cells() {
            if c.row >= s.row
                && c.col >= s.col
                && !self.contains(Cell::new(c.row + 1, c.col + 1))
            {
                rim.push(c);
            }
        }
        Ok(rim)
    }

    /// Removes the rim hook of `s`, yielding a diagram with
    /// `weight - hook_length(s)` boxes.
    pub fn remove_hook(&self, s: Cell) -> Result<Partition> {
        let rim = self.rim_cells(s)?;
        let mut parts = self.parts.clone();
        for c in &rim {
            // rim cells in a row form the right end of that row; the new
            // length is the smallest removed column minus one
            let row = c.row as usize - 1;
            parts[row] = parts[row].min(c.col - 1);
        }
        Partition::from_parts_trimmed(parts)
    }

    /// Number of boxes on the diagonal `col - row = nu`.
    pub fn diagonal_count(&self, nu: i64) -> u64 {
        self.cells()
            .filter(|c| c.col as i64 - c.row as i64 == nu)
            .count() as u64
    }
}

/// Relative hook length `leg_beta(s) + arm_alpha(s) + 1` of a cell with
/// respect to a pair of diagrams. May be non-positive when `s` lies outside
/// both diagrams.
pub fn relative_hook(alpha: &Partition, beta: &Partition, s: Cell) -> i64 {
    beta.leg(s) + alpha.arm(s) + 1
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first and
/// `(1,...,1)` last.
pub fn enumerate_partitions(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(remaining: u64, max_part: u64, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            current.push(p as u32);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// All partitions of weight at most `n`, grouped by weight `0..=n`.
pub fn partitions_up_to(n: u64) -> Vec<Vec<Partition>> {
    (0..=n).map(enumerate_partitions).collect()
}

impl fmt::Display for Partition {
    /// Canonical text form: comma-separated descending parts, `-` for empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = CombError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|e| CombError::Parse(format!("bad partition {s:?}: {e}")))?;
        Partition::new(parts)
    }
}
