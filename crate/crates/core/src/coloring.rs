//! Residue colorings of partition tuples, the fixed-point sets P_w(v),
//! dimension vectors and the quiver-variety dimension formula, common cores,
//! and the row-tableau encoding of core tuples.

use serde::Serialize;

use crate::corequot::core_from_k;
use crate::error::{CombError, Result};
use crate::partition::{enumerate_partitions, Cell, Partition};

/// Framing data: the modulus `l` and the non-decreasing residues
/// `gamma_1 <= ... <= gamma_r` of the r framing slots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorSpec {
    l: u32,
    gammas: Vec<u32>,
}

impl ColorSpec {
    pub fn new(l: u32, gammas: Vec<u32>) -> Result<Self> {
        if l < 2 {
            return Err(CombError::ModulusTooSmall(l));
        }
        if gammas.is_empty() {
            return Err(CombError::LengthMismatch { expected: 1, got: 0 });
        }
        if let Some(&g) = gammas.iter().find(|&&g| g >= l) {
            return Err(CombError::ResidueOutOfRange(g, l));
        }
        if gammas.windows(2).any(|w| w[0] > w[1]) {
            return Err(CombError::Parse(format!(
                "framing residues must be non-decreasing, got {gammas:?}"
            )));
        }
        Ok(Self { l, gammas })
    }

    /// Rank-1 spec with the single residue `j`.
    pub fn rank_one(l: u32, j: u32) -> Result<Self> {
        Self::new(l, vec![j])
    }

    /// Spec from a multiplicity vector: `w[i]` framing slots of residue `i`.
    pub fn from_w(l: u32, w: &DimVector) -> Result<Self> {
        if w.0.len() != l as usize {
            return Err(CombError::LengthMismatch { expected: l as usize, got: w.0.len() });
        }
        let mut gammas = Vec::new();
        for (i, &mult) in w.0.iter().enumerate() {
            gammas.extend(std::iter::repeat(i as u32).take(mult as usize));
        }
        Self::new(l, gammas)
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn rank(&self) -> usize {
        self.gammas.len()
    }

    pub fn gammas(&self) -> &[u32] {
        &self.gammas
    }

    /// Multiplicity vector of the framing residues.
    pub fn w_vector(&self) -> DimVector {
        let mut w = vec![0u64; self.l as usize];
        for &g in &self.gammas {
            w[g as usize] += 1;
        }
        DimVector(w)
    }
}

/// Vector of `l` box counts indexed by residue class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DimVector(pub Vec<u64>);

impl DimVector {
    pub fn zero(l: u32) -> Self {
        DimVector(vec![0; l as usize])
    }

    /// n copies of the all-ones vector.
    pub fn delta(l: u32, n: u64) -> Self {
        DimVector(vec![n; l as usize])
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// Residue of a box: `(gamma - row + col) mod l`.
pub fn residue(s: Cell, gamma: u32, l: u32) -> u32 {
    (gamma as i64 - s.row as i64 + s.col as i64).rem_euclid(l as i64) as u32
}

/// Counts boxes of each residue class over the tuple.
pub fn color_counts(ys: &[Partition], spec: &ColorSpec) -> Result<DimVector> {
    if ys.len() != spec.rank() {
        return Err(CombError::LengthMismatch { expected: spec.rank(), got: ys.len() });
    }
    let mut v = vec![0u64; spec.l as usize];
    for (y, &gamma) in ys.iter().zip(&spec.gammas) {
        for s in y.cells() {
            v[residue(s, gamma, spec.l) as usize] += 1;
        }
    }
    Ok(DimVector(v))
}

/// All r-tuples of partitions with color counts `v`, in a fixed deterministic
/// order: weight compositions in lex-descending order, partitions of each
/// component weight in reverse-lexicographic order.
pub fn enumerate_p_w_v(spec: &ColorSpec, v: &DimVector) -> Result<Vec<Vec<Partition>>> {
    if v.0.len() != spec.l as usize {
        return Err(CombError::LengthMismatch { expected: spec.l as usize, got: v.0.len() });
    }
    let n = v.total();
    let r = spec.rank();
    let mut out = Vec::new();
    let mut composition = Vec::with_capacity(r);
    compose(n, r, &mut composition, &mut |comp| {
        let pools: Vec<Vec<Partition>> =
            comp.iter().map(|&m| enumerate_partitions(m)).collect();
        let mut idx = vec![0usize; r];
        loop {
            let tuple: Vec<Partition> =
                idx.iter().enumerate().map(|(a, &i)| pools[a][i].clone()).collect();
            if color_counts(&tuple, spec).unwrap() == *v {
                out.push(tuple);
            }
            // odometer increment, last index fastest
            let mut a = r;
            loop {
                if a == 0 {
                    return;
                }
                a -= 1;
                idx[a] += 1;
                if idx[a] < pools[a].len() {
                    break;
                }
                idx[a] = 0;
            }
        }
    });
    Ok(out)
}

fn compose(n: u64, slots: usize, prefix: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
    if slots == 1 {
        prefix.push(n);
        f(prefix);
        prefix.pop();
        return;
    }
    for first in (0..=n).rev() {
        prefix.push(first);
        compose(n - first, slots - 1, prefix, f);
        prefix.pop();
    }
}

/// Charge vector and core shared by every member of the rank-1 set
/// P_{e_j}(v): `k_i = v_{i+j} - v_{i+j+1}` cyclically.
pub fn common_core(l: u32, j: u32, v: &DimVector) -> Result<(Vec<i64>, Partition)> {
    if v.0.len() != l as usize {
        return Err(CombError::LengthMismatch { expected: l as usize, got: v.0.len() });
    }
    if j >= l {
        return Err(CombError::ResidueOutOfRange(j, l));
    }
    let lu = l as usize;
    let k: Vec<i64> = (0..lu)
        .map(|i| v.0[(i + j as usize) % lu] as i64 - v.0[(i + j as usize + 1) % lu] as i64)
        .collect();
    let core = core_from_k(&k, l)?;
    Ok((k, core))
}

/// `2 v.w - v C v^T` with C the affine type-A Cartan matrix; for l = 2 the
/// off-diagonal entries are -2, which the cyclic neighbor sum below covers.
/// A negative value signals an empty variety and is reported as an error.
pub fn dim_quiver_variety(w: &DimVector, v: &DimVector) -> Result<u64> {
    if w.0.len() != v.0.len() {
        return Err(CombError::LengthMismatch { expected: w.0.len(), got: v.0.len() });
    }
    let l = v.0.len();
    let vi: Vec<i64> = v.0.iter().map(|&x| x as i64).collect();
    let wi: Vec<i64> = w.0.iter().map(|&x| x as i64).collect();
    let sq: i64 = vi.iter().map(|x| x * x).sum();
    let adj: i64 = (0..l).map(|i| vi[i] * vi[(i + 1) % l]).sum();
    let d = 2 * vi.iter().zip(&wi).map(|(a, b)| a * b).sum::<i64>() - (2 * sq - 2 * adj);
    if d < 0 {
        return Err(CombError::NegativeDimension(d));
    }
    Ok(d as u64)
}

/// Per-row charge vectors of a row-increasing tableau with entries in
/// `1..=l` and row lengths in `1..=l-1`. Row of length m with content set C:
/// the slot `(n - m - 1) mod l` gets 0 or -1 for n <= m (n in C or not),
/// and 1 or 0 for m < n <= l.
pub fn tableau_to_k(rows: &[Vec<u32>], l: u32) -> Result<Vec<Vec<i64>>> {
    if l < 2 {
        return Err(CombError::ModulusTooSmall(l));
    }
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        if row.is_empty() || row.len() >= l as usize {
            return Err(CombError::MalformedTableau(format!(
                "row length must be in 1..{}, got {}",
                l,
                row.len()
            )));
        }
        if row.iter().any(|&e| e < 1 || e > l) {
            return Err(CombError::MalformedTableau(format!("entry out of 1..={l} in {row:?}")));
        }
        if row.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CombError::MalformedTableau(format!("row not strictly increasing: {row:?}")));
        }
        let m = row.len() as u32;
        let mut k = vec![0i64; l as usize];
        for n in 1..=l {
            let idx = (n as i64 - m as i64 - 1).rem_euclid(l as i64) as usize;
            let present = row.contains(&n);
            k[idx] = match (n <= m, present) {
                (true, true) => 0,
                (true, false) => -1,
                (false, true) => 1,
                (false, false) => 0,
            };
        }
        debug_assert_eq!(k.iter().sum::<i64>(), 0);
        out.push(k);
    }
    Ok(out)
}

/// Core tuple encoded by a tableau, ordered by ascending framing residue
/// (the rows, whose lengths are the residues, taken in reverse).
pub fn tableau_cores(rows: &[Vec<u32>], l: u32) -> Result<Vec<Partition>> {
    let ks = tableau_to_k(rows, l)?;
    ks.iter().rev().map(|k| core_from_k(k, l)).collect()
}
