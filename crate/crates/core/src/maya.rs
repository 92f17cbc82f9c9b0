//! Maya diagrams: the 0/1 border-edge encoding of Young diagrams, charges,
//! subsequence extraction and interleaving, and hook removal as a bit swap.
//!
//! A Maya diagram is a doubly infinite 0/1 sequence that is eventually 0 to
//! the left and eventually 1 to the right. Only a finite window is stored;
//! positions below the window read 0 and positions at or above its end read
//! 1. Canonical form trims the window so it starts with a 1 and ends with a
//! 0 (or is empty), so structural equality is semantic equality.

use std::fmt;
use std::str::FromStr;

use crate::error::{CombError, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MayaDiagram {
    window_start: i64,
    bits: Vec<bool>,
}

impl MayaDiagram {
    /// Builds a diagram from an explicit window, then canonicalizes.
    pub fn from_window(window_start: i64, bits: Vec<bool>) -> Self {
        let mut m = MayaDiagram { window_start, bits };
        m.normalize();
        m
    }

    /// The vacuum at `charge`: all 0 below `charge`, all 1 from it on.
    pub fn vacuum(charge: i64) -> Self {
        MayaDiagram { window_start: charge, bits: Vec::new() }
    }

    fn normalize(&mut self) {
        let leading = self.bits.iter().take_while(|&&b| !b).count();
        self.bits.drain(..leading);
        self.window_start += leading as i64;
        while self.bits.last() == Some(&true) {
            self.bits.pop();
        }
    }

    /// Bit at position `nu`.
    pub fn get(&self, nu: i64) -> bool {
        if nu < self.window_start {
            false
        } else {
            let idx = (nu - self.window_start) as usize;
            self.bits.get(idx).copied().unwrap_or(true)
        }
    }

    pub fn window_start(&self) -> i64 {
        self.window_start
    }

    /// First position at which every later bit reads 1.
    pub fn window_end(&self) -> i64 {
        self.window_start + self.bits.len() as i64
    }

    /// Particle-hole imbalance: `#{m(nu)=0, nu >= 0} - #{m(nu)=1, nu < 0}`.
    pub fn charge(&self) -> i64 {
        let end = self.window_end();
        let mut zeros_ge0: i64 = 0;
        let mut ones_lt0: i64 = 0;
        // implicit 0s in [0, window_start) when the window starts above 0
        if self.window_start > 0 {
            zeros_ge0 += self.window_start;
        }
        // implicit 1s in [end, 0) when the window ends below 0
        if end < 0 {
            ones_lt0 += -end;
        }
        for (i, &b) in self.bits.iter().enumerate() {
            let nu = self.window_start + i as i64;
            if nu >= 0 && !b {
                zeros_ge0 += 1;
            }
            if nu < 0 && b {
                ones_lt0 += 1;
            }
        }
        zeros_ge0 - ones_lt0
    }

    /// Swaps the bits at positions `x` and `y`. When the two bits differ this
    /// realizes removal or addition of a hook of length `|x - y|` on the
    /// underlying diagram; when they agree it is the identity.
    pub fn transpose(&self, x: i64, y: i64) -> MayaDiagram {
        let lo = self.window_start.min(x).min(y);
        let hi = self.window_end().max(x + 1).max(y + 1);
        let mut bits: Vec<bool> = (lo..hi).map(|nu| self.get(nu)).collect();
        bits.swap((x - lo) as usize, (y - lo) as usize);
        MayaDiagram::from_window(lo, bits)
    }

    /// The `i`-th of the `l` arithmetic-progression subsequences:
    /// `n -> m(l*n + i)`.
    pub fn subsequence(&self, l: u32, i: u32) -> Result<MayaDiagram> {
        if l < 2 {
            return Err(CombError::ModulusTooSmall(l));
        }
        let l = l as i64;
        let i = i as i64;
        // n-range covering the window
        let lo = (self.window_start - i).div_euclid(l);
        let hi = (self.window_end() - i).div_euclid(l) + 1;
        let bits = (lo..hi).map(|n| self.get(l * n + i)).collect();
        Ok(MayaDiagram::from_window(lo, bits))
    }

    /// Inverse of [`subsequence`](Self::subsequence):
    /// `m(l*n + i) = parts[i](n)`.
    pub fn interleave(parts: &[MayaDiagram]) -> MayaDiagram {
        let l = parts.len() as i64;
        assert!(l >= 2, "interleave needs at least two subsequences");
        let lo = parts.iter().map(|p| p.window_start).min().unwrap();
        let hi = parts.iter().map(|p| p.window_end()).max().unwrap();
        let mut bits = Vec::with_capacity(((hi - lo) * l) as usize);
        for n in lo..hi {
            for p in parts {
                bits.push(p.get(n));
            }
        }
        MayaDiagram::from_window(lo * l, bits)
    }
}

/// The charge-0 Maya diagram of a Young diagram: the 0 bits sit at the
/// positions `lambda_i - i`.
pub fn to_maya(y: &Partition) -> MayaDiagram {
    let rows = y.rows() as i64;
    if rows == 0 {
        return MayaDiagram::vacuum(0);
    }
    let hi = y.parts()[0] as i64 - 1; // largest zero position
    let lo = -rows; // below this everything is an implicit 0
    let zero_positions: Vec<i64> = (1..=rows)
        .map(|i| y.row_len(i as u32) as i64 - i)
        .collect();
    let mut bits = vec![true; (hi - lo + 1) as usize];
    for nu in zero_positions {
        bits[(nu - lo) as usize] = false;
    }
    MayaDiagram::from_window(lo, bits)
}

/// Decodes a Maya diagram into its Young diagram and charge. The 0 bits of a
/// charge-`c` diagram sit at `lambda_i - i + c`.
pub fn from_maya(m: &MayaDiagram) -> (Partition, i64) {
    let c = m.charge();
    let mut parts = Vec::new();
    let mut row: i64 = 1;
    // explicit zeros in the window, scanned from the top down
    for nu in (m.window_start..m.window_end()).rev() {
        if !m.get(nu) {
            let lambda = nu - c + row;
            debug_assert!(lambda >= 0, "inconsistent maya diagram");
            if lambda > 0 {
                parts.push(lambda as u32);
                row += 1;
            }
        }
    }
    // implicit zeros below the window contribute no further boxes:
    // the first of them already decodes to a zero-length row
    debug_assert!(m.window_start - 1 - c + row <= 0);
    (Partition::new(parts).expect("maya zeros decode in decreasing order"), c)
}

impl fmt::Display for MayaDiagram {
    /// Text form `0...0,1,0,1|0,1,0,1...1` with `|` marking position 0.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self.window_start.min(0);
        let hi = self.window_end().max(0);
        let mut before = Vec::new();
        let mut after = Vec::new();
        for nu in lo..hi {
            let bit = if self.get(nu) { "1" } else { "0" };
            if nu < 0 {
                before.push(bit);
            } else {
                after.push(bit);
            }
        }
        write!(f, "0...0")?;
        for b in before {
            write!(f, ",{b}")?;
        }
        write!(f, "|")?;
        for b in after {
            write!(f, "{b},")?;
        }
        write!(f, "1...1")
    }
}

impl FromStr for MayaDiagram {
    type Err = CombError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (before, after) = s
            .split_once('|')
            .ok_or_else(|| CombError::Parse(format!("missing '|' in maya diagram {s:?}")))?;
        let parse_bits = |side: &str| -> Result<Vec<bool>> {
            side.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty() && !t.starts_with("0...") && !t.ends_with("...1"))
                .map(|t| match t {
                    "0" => Ok(false),
                    "1" => Ok(true),
                    other => Err(CombError::Parse(format!("bad maya bit {other:?}"))),
                })
                .collect()
        };
        let before = parse_bits(before)?;
        let after = parse_bits(after)?;
        let start = -(before.len() as i64);
        let bits = before.into_iter().chain(after).collect();
        Ok(MayaDiagram::from_window(start, bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn to_maya_staircase() {
        // (3,2,1) -> 0...,1,0,1 | 0,1,0,...1
        let m = to_maya(&p(&[3, 2, 1]));
        let expected: Vec<(i64, bool)> = vec![
            (-4, false),
            (-3, true),
            (-2, false),
            (-1, true),
            (0, false),
            (1, true),
            (2, false),
            (3, true),
        ];
        for (nu, b) in expected {
            assert_eq!(m.get(nu), b, "position {nu}");
        }
    }

    #[test]
    fn to_maya_small() {
        let m = to_maya(&Partition::empty());
        assert_eq!(m, MayaDiagram::vacuum(0));
        let m = to_maya(&p(&[1]));
        assert!(m.get(-1));
        assert!(!m.get(0));
        assert!(!m.get(-2));
        assert!(m.get(1));
    }

    #[test]
    fn from_maya_roundtrip() {
        for n in 0..=12u64 {
            for y in enumerate_partitions(n) {
                let (back, c) = from_maya(&to_maya(&y));
                assert_eq!(back, y);
                assert_eq!(c, 0);
            }
        }
    }

    #[test]
    fn charge_of_to_maya_is_zero() {
        for n in 0..=10u64 {
            for y in enumerate_partitions(n) {
                assert_eq!(to_maya(&y).charge(), 0);
            }
        }
    }

    #[test]
    fn shifted_windows_carry_charge() {
        // brute force: shifting every bit by d shifts the charge by d
        for n in 0..=6u64 {
            for y in enumerate_partitions(n) {
                let m = to_maya(&y);
                for d in -3..=3i64 {
                    let shifted =
                        MayaDiagram::from_window(m.window_start() + d, {
                            let mut b = Vec::new();
                            for nu in m.window_start()..m.window_end() {
                                b.push(m.get(nu));
                            }
                            b
                        });
                    assert_eq!(shifted.charge(), d);
                    let (back, c) = from_maya(&shifted);
                    assert_eq!(back, y);
                    assert_eq!(c, d);
                }
            }
        }
    }

    #[test]
    fn transpose_example() {
        // exchanging m(-3)=1 and m(2)=0 removes the length-5 hook of (3,2,1)
        let m = to_maya(&p(&[3, 2, 1]));
        let swapped = m.transpose(-3, 2);
        let (y, c) = from_maya(&swapped);
        assert_eq!(y, p(&[1]));
        assert_eq!(c, 0);
    }

    #[test]
    fn transpose_equal_bits_is_identity() {
        let m = to_maya(&p(&[3, 2, 1]));
        assert_eq!(m.transpose(-3, 1), m);
    }

    #[test]
    fn transpose_matches_remove_hook() {
        // removing the hook at cell s swaps the 1 below the hook's column
        // with the 0 at the end of its row
        for n in 1..=10u64 {
            for y in enumerate_partitions(n) {
                let m = to_maya(&y);
                for s in y.cells() {
                    let x = y.row_len(s.row) as i64 - s.row as i64; // the 0 bit
                    let yy = s.col as i64 - 1 - y.col_len(s.col) as i64; // the 1 bit
                    assert!(!m.get(x));
                    assert!(m.get(yy));
                    let (removed, c) = from_maya(&m.transpose(x, yy));
                    assert_eq!(c, 0);
                    assert_eq!(removed, y.remove_hook(s).unwrap(), "y={y} s={s:?}");
                }
            }
        }
    }

    #[test]
    fn subsequences_of_staircase() {
        // the 5-quotient table for (3,2,1)
        let m = to_maya(&p(&[3, 2, 1]));
        let charges: Vec<i64> = (0..5)
            .map(|i| m.subsequence(5, i).unwrap().charge())
            .collect();
        assert_eq!(charges, vec![1, 0, 0, 0, -1]);
        let sub2 = m.subsequence(5, 2).unwrap();
        let (y2, c2) = from_maya(&sub2);
        assert_eq!(y2, p(&[1]));
        assert_eq!(c2, 0);
        for (i, expected) in [(0u32, Partition::empty()), (1, Partition::empty()), (3, Partition::empty()), (4, Partition::empty())] {
            let (y, _) = from_maya(&m.subsequence(5, i).unwrap());
            assert_eq!(y, expected);
        }
    }

    #[test]
    fn subsequence_rejects_small_modulus() {
        assert!(to_maya(&p(&[1])).subsequence(1, 0).is_err());
    }

    #[test]
    fn interleave_inverts_subsequence() {
        for l in 2..=5u32 {
            for n in 0..=10u64 {
                for y in enumerate_partitions(n) {
                    let m = to_maya(&y);
                    let subs: Vec<MayaDiagram> =
                        (0..l).map(|i| m.subsequence(l, i).unwrap()).collect();
                    let charge_sum: i64 = subs.iter().map(|s| s.charge()).sum();
                    assert_eq!(charge_sum, 0);
                    assert_eq!(MayaDiagram::interleave(&subs), m);
                }
            }
        }
    }

    #[test]
    fn text_roundtrip() {
        let m = to_maya(&p(&[3, 2, 1]));
        assert_eq!(m.to_string(), "0...0,1,0,1|0,1,0,1...1");
        let parsed: MayaDiagram = m.to_string().parse().unwrap();
        assert_eq!(parsed, m);
        let parsed: MayaDiagram = "0...0|1...1".parse().unwrap();
        assert_eq!(parsed, MayaDiagram::vacuum(0));
    }
}
