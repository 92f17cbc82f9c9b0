//! l-core / l-quotient decomposition of Young diagrams, charge vectors, and
//! the core-weight formula.

use serde::Serialize;

use crate::error::{CombError, Result};
use crate::maya::{from_maya, to_maya, MayaDiagram};
use crate::partition::Partition;

/// The full decomposition data of a partition with respect to a modulus `l`:
/// the `l`-core, the `l`-tuple of quotient partitions, and the charge
/// vector of the Maya subsequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreQuotient {
    pub l: u32,
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub k: Vec<i64>,
}

impl CoreQuotient {
    /// Total weight of the quotient tuple.
    pub fn quotient_weight(&self) -> u64 {
        self.quotient.iter().map(|q| q.weight()).sum()
    }
}

/// Splits `y` into its `l`-core and `l`-quotient via the Maya diagram.
pub fn decompose(y: &Partition, l: u32) -> Result<CoreQuotient> {
    if l < 2 {
        return Err(CombError::ModulusTooSmall(l));
    }
    let m = to_maya(y);
    let mut quotient = Vec::with_capacity(l as usize);
    let mut k = Vec::with_capacity(l as usize);
    for i in 0..l {
        let sub = m.subsequence(l, i)?;
        let (part, charge) = from_maya(&sub);
        quotient.push(part);
        k.push(charge);
    }
    let core = core_from_k(&k, l)?;
    Ok(CoreQuotient { l, core, quotient, k })
}

/// The unique `l`-core whose Maya subsequences are vacua at the given
/// charges. Requires the charges to sum to zero.
pub fn core_from_k(k: &[i64], l: u32) -> Result<Partition> {
    if l < 2 {
        return Err(CombError::ModulusTooSmall(l));
    }
    if k.len() != l as usize {
        return Err(CombError::LengthMismatch { expected: l as usize, got: k.len() });
    }
    let sum: i64 = k.iter().sum();
    if sum != 0 {
        return Err(CombError::ChargeSumNonzero(sum));
    }
    let subs: Vec<MayaDiagram> = k.iter().map(|&c| MayaDiagram::vacuum(c)).collect();
    let (core, charge) = from_maya(&MayaDiagram::interleave(&subs));
    debug_assert_eq!(charge, 0);
    Ok(core)
}

/// Rebuilds the unique partition with the given `l`-core and `l`-quotient.
pub fn reconstruct(core: &Partition, quotient: &[Partition], l: u32) -> Result<Partition> {
    if l < 2 {
        return Err(CombError::ModulusTooSmall(l));
    }
    if quotient.len() != l as usize {
        return Err(CombError::LengthMismatch { expected: l as usize, got: quotient.len() });
    }
    if !is_core(core, l)? {
        return Err(CombError::NotACore { l, partition: core.to_string() });
    }
    let core_maya = to_maya(core);
    let mut subs = Vec::with_capacity(l as usize);
    for i in 0..l {
        let charge = core_maya.subsequence(l, i)?.charge();
        // a charge-c Maya diagram of q is its charge-0 diagram shifted by c
        let q_maya = to_maya(&quotient[i as usize]);
        let shifted = MayaDiagram::from_window(
            q_maya.window_start() + charge,
            (q_maya.window_start()..q_maya.window_end()).map(|nu| q_maya.get(nu)).collect(),
        );
        subs.push(shifted);
    }
    let (y, charge) = from_maya(&MayaDiagram::interleave(&subs));
    debug_assert_eq!(charge, 0);
    Ok(y)
}

/// Weight of the `l`-core with charge vector `k`:
/// `sum_i ( l*k_i^2/2 + i*k_i )`.
pub fn core_weight(k: &[i64], l: u32) -> Result<u64> {
    let sum: i64 = k.iter().sum();
    if sum != 0 {
        return Err(CombError::ChargeSumNonzero(sum));
    }
    let sq: i64 = k.iter().map(|&ki| ki * ki).sum();
    let lin: i64 = k.iter().enumerate().map(|(i, &ki)| i as i64 * ki).sum();
    let val = (l as i64 * sq) / 2 + lin;
    debug_assert_eq!((l as i64 * sq) % 2, 0);
    debug_assert!(val >= 0);
    Ok(val as u64)
}

/// True iff no cell of `y` has hook length divisible by `l`.
pub fn is_core(y: &Partition, l: u32) -> Result<bool> {
    if l < 2 {
        return Err(CombError::ModulusTooSmall(l));
    }
    Ok(y.cells().all(|s| y.hook_length(s).unwrap() % l as u64 != 0))
}
