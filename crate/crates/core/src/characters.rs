//! Torus characters at fixed points: tangent spaces of the quiver varieties
//! and of toric Hilbert-scheme charts, kept as formal multisets of weight
//! monomials with no cancellation.

use std::fmt;

use serde::Serialize;

use crate::coloring::ColorSpec;
use crate::error::{CombError, Result};
use crate::partition::Partition;

/// A torus weight `t1^p t2^q e_beta e_alpha^{-1}`; `alpha == beta` means no
/// frame factor. Frame indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WeightMonomial {
    pub t1: i64,
    pub t2: i64,
    pub alpha: usize,
    pub beta: usize,
}

impl WeightMonomial {
    pub fn is_zero_weight(&self) -> bool {
        self.t1 == 0 && self.t2 == 0 && self.alpha == self.beta
    }
}

impl fmt::Display for WeightMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.alpha != self.beta {
            parts.push(format!("e{}e{}^-1", self.beta, self.alpha));
        }
        for (name, e) in [("t1", self.t1), ("t2", self.t2)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Formal multiset of weight monomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterSum {
    pub terms: Vec<WeightMonomial>,
}

impl CharacterSum {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiset equality regardless of term order.
    pub fn same_multiset(&self, other: &Self) -> bool {
        let mut a = self.terms.clone();
        let mut b = other.terms.clone();
        a.sort();
        b.sort();
        a == b
    }
}

/// 1 iff `a` and `b` agree mod `l`.
pub fn delta_mod(a: i64, b: i64, l: u32) -> u32 {
    u32::from((a - b).rem_euclid(l as i64) == 0)
}

/// Tangent character of the quiver variety at the fixed point `ys`.
///
/// For each ordered pair (alpha, beta) with frame factor `e_beta e_alpha^-1`:
/// boxes `s` of `Y_alpha` whose relative hook `a_{Y_beta}(s) + l_{Y_alpha}(s)
/// + 1` is congruent to `rho_beta - rho_alpha` contribute
/// `t1^{-a_{Y_beta}(s)} t2^{l_{Y_alpha}(s)+1}`, and boxes `t` of `Y_beta`
/// with `a_{Y_alpha}(t) + l_{Y_beta}(t) + 1` congruent to `rho_alpha -
/// rho_beta` contribute `t1^{a_{Y_alpha}(t)+1} t2^{-l_{Y_beta}(t)}`. The
/// congruences are exactly invariance of each monomial under the cyclic
/// subgroup of the torus.
pub fn tangent_character(ys: &[Partition], spec: &ColorSpec) -> Result<CharacterSum> {
    if ys.len() != spec.rank() {
        return Err(CombError::LengthMismatch { expected: spec.rank(), got: ys.len() });
    }
    let l = spec.l();
    let rho = spec.gammas();
    let mut terms = Vec::new();
    for (ai, ya) in ys.iter().enumerate() {
        for (bi, yb) in ys.iter().enumerate() {
            let diff = rho[bi] as i64 - rho[ai] as i64;
            for s in ya.cells() {
                if delta_mod(yb.arm(s) + ya.leg(s) + 1, diff, l) == 1 {
                    terms.push(WeightMonomial {
                        t1: -yb.arm(s),
                        t2: ya.leg(s) + 1,
                        alpha: ai + 1,
                        beta: bi + 1,
                    });
                }
            }
            for t in yb.cells() {
                if delta_mod(ya.arm(t) + yb.leg(t) + 1, -diff, l) == 1 {
                    terms.push(WeightMonomial {
                        t1: ya.arm(t) + 1,
                        t2: -yb.leg(t),
                        alpha: ai + 1,
                        beta: bi + 1,
                    });
                }
            }
        }
    }
    if terms.iter().any(WeightMonomial::is_zero_weight) {
        return Err(CombError::ZeroWeight);
    }
    Ok(CharacterSum { terms })
}

/// A monomial `wx^x wy^y` in the two weight characters of a toric chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ChartMonomial {
    pub x: i64,
    pub y: i64,
    pub chart: usize,
}

/// Tangent character of a toric Hilbert scheme at the fixed point given by
/// one partition per chart: each box contributes
/// `wx^{a(s)+1} wy^{-l(s)}` and `wx^{-a(s)} wy^{l(s)+1}`.
pub fn hilbert_tangent_character(ys: &[Partition]) -> Vec<ChartMonomial> {
    let mut out = Vec::new();
    for (chart, y) in ys.iter().enumerate() {
        for s in y.cells() {
            out.push(ChartMonomial { x: y.arm(s) + 1, y: -y.leg(s), chart });
            out.push(ChartMonomial { x: -y.arm(s), y: y.leg(s) + 1, chart });
        }
    }
    out
}
