//! Truncated multigraded power series in q, t, r_0..r_{l-1}: brute-force and
//! closed-form generating functions for Poincare polynomials and Euler
//! characteristics, theta building blocks, and the Gottsche product.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::coloring::{color_counts, enumerate_p_w_v, ColorSpec, DimVector};
use crate::error::{CombError, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Exponent vector of one monomial: q-degree, t-degree, and r_i degrees
/// (the latter may be negative in theta factors).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Exponents {
    pub q: i64,
    pub t: i64,
    pub r: Vec<i64>,
}

/// Formal series truncated by q-degree; no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    nr: usize,
    trunc: i64,
    coeffs: BTreeMap<Exponents, BigInt>,
}

impl QSeries {
    pub fn zero(nr: usize, trunc: i64) -> Self {
        QSeries { nr, trunc, coeffs: BTreeMap::new() }
    }

    pub fn one(nr: usize, trunc: i64) -> Self {
        let mut s = Self::zero(nr, trunc);
        s.add_term(Exponents { q: 0, t: 0, r: vec![0; nr] }, BigInt::from(1));
        s
    }

    pub fn nr(&self) -> usize {
        self.nr
    }

    pub fn truncation(&self) -> i64 {
        self.trunc
    }

    pub fn add_term(&mut self, e: Exponents, c: BigInt) {
        assert_eq!(e.r.len(), self.nr);
        if e.q > self.trunc || c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, e: &Exponents) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nr, other.nr);
        let mut out = self.truncated(self.trunc.min(other.trunc));
        for (e, c) in &other.coeffs {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nr, other.nr);
        let mut out = Self::zero(self.nr, self.trunc.min(other.trunc));
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                if e1.q + e2.q > out.trunc {
                    continue;
                }
                let r = e1.r.iter().zip(&e2.r).map(|(a, b)| a + b).collect();
                out.add_term(Exponents { q: e1.q + e2.q, t: e1.t + e2.t, r }, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = Self::one(self.nr, self.trunc);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by the geometric series `1/(1 - m)`; `m` must have
    /// positive q-degree.
    pub fn mul_geom(&self, m: &Exponents, c: &BigInt) -> Self {
        assert!(m.q > 0, "geometric factor needs positive q-degree");
        let mut factor = Self::one(self.nr, self.trunc);
        let mut e = m.clone();
        let mut coef = c.clone();
        while e.q <= self.trunc {
            factor.add_term(e.clone(), coef.clone());
            e = Exponents {
                q: e.q + m.q,
                t: e.t + m.t,
                r: e.r.iter().zip(&m.r).map(|(a, b)| a + b).collect(),
            };
            coef *= c;
        }
        self.mul(&factor)
    }

    /// Multiplies by `(1 - m)` with coefficient `c` on `m`.
    pub fn mul_one_minus(&self, m: &Exponents, c: &BigInt) -> Self {
        let mut factor = Self::one(self.nr, self.trunc);
        factor.add_term(m.clone(), -c.clone());
        self.mul(&factor)
    }

    /// Copy with a lower truncation bound.
    pub fn truncated(&self, trunc: i64) -> Self {
        let mut out = Self::zero(self.nr, trunc.min(self.trunc));
        for (e, c) in &self.coeffs {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// Specialization t = 1: t-degrees collapse to zero.
    pub fn at_t_one(&self) -> Self {
        let mut out = Self::zero(self.nr, self.trunc);
        for (e, c) in &self.coeffs {
            out.add_term(Exponents { q: e.q, t: 0, r: e.r.clone() }, c.clone());
        }
        out
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if e.q != 0 {
                write!(f, "*q^{}", e.q)?;
            }
            if e.t != 0 {
                write!(f, "*t^{}", e.t)?;
            }
            for (i, &ri) in e.r.iter().enumerate() {
                if ri != 0 {
                    write!(f, "*r{i}^{ri}")?;
                }
            }
        }
        Ok(())
    }
}

/// Betti-degree statistic of a single diagram: boxes with hook divisible by
/// `l` and positive leg, doubled into cohomological degree unless
/// `double` is false (the compatibility reading).
pub fn betti_exponent(y: &Partition, l: u32, double: bool) -> i64 {
    let count = y
        .cells()
        .filter(|&s| y.hook_length(s).unwrap() % l as u64 == 0 && y.leg(s) > 0)
        .count() as i64;
    if double {
        2 * count
    } else {
        count
    }
}

/// Brute-force rank-1 generating function: sum over all partitions of
/// weight at most `nq` of `q^|Y| t^{betti} prod r_i^{v_i}`.
pub fn z_bruteforce(l: u32, j: u32, nq: i64) -> Result<QSeries> {
    z_bruteforce_with(l, j, nq, true)
}

/// `z_bruteforce` with the degree-doubling choice exposed.
pub fn z_bruteforce_with(l: u32, j: u32, nq: i64, double: bool) -> Result<QSeries> {
    let spec = ColorSpec::rank_one(l, j)?;
    let mut out = QSeries::zero(l as usize, nq);
    for n in 0..=nq.max(0) as u64 {
        accumulate_weight_class(&spec, n, double, &mut out);
    }
    Ok(out)
}

/// `z_bruteforce` with the weight classes split across `workers` threads;
/// the merge order is deterministic.
pub fn z_bruteforce_par(l: u32, j: u32, nq: i64, workers: usize) -> Result<QSeries> {
    let spec = ColorSpec::rank_one(l, j)?;
    let workers = workers.max(1);
    let weights: Vec<u64> = (0..=nq.max(0) as u64).collect();
    let chunks: Vec<&[u64]> = weights.chunks(weights.len().div_ceil(workers)).collect();
    let partials: Vec<QSeries> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                let spec = &spec;
                scope.spawn(move || {
                    let mut acc = QSeries::zero(l as usize, nq);
                    for &n in *chunk {
                        accumulate_weight_class(spec, n, true, &mut acc);
                    }
                    acc
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut out = QSeries::zero(l as usize, nq);
    for p in partials {
        out = out.add(&p);
    }
    Ok(out)
}

fn accumulate_weight_class(spec: &ColorSpec, n: u64, double: bool, out: &mut QSeries) {
    let l = spec.l();
    for y in enumerate_partitions(n) {
        let v = color_counts(std::slice::from_ref(&y), spec).unwrap();
        out.add_term(
            Exponents {
                q: n as i64,
                t: betti_exponent(&y, l, double),
                r: v.0.iter().map(|&x| x as i64).collect(),
            },
            BigInt::from(1),
        );
    }
}

fn q_reg_exponent(l: u32, m: i64, t: i64) -> Exponents {
    Exponents { q: l as i64 * m, t, r: vec![m; l as usize] }
}

/// Closed form of the quotient part:
/// `prod_m 1/((1 - q_reg^m t^{2m-2})(1 - q_reg^m t^{2m})^{l-1})` with
/// `q_reg = q^l prod r_i`.
pub fn z_quot_closed(l: u32, nq: i64) -> Result<QSeries> {
    if l < 2 {
        return Err(CombError::ModulusTooSmall(l));
    }
    let mut out = QSeries::one(l as usize, nq);
    let one = BigInt::from(1);
    let mut m = 1i64;
    while l as i64 * m <= nq {
        out = out.mul_geom(&q_reg_exponent(l, m, 2 * m - 2), &one);
        for _ in 0..l - 1 {
            out = out.mul_geom(&q_reg_exponent(l, m, 2 * m), &one);
        }
        m += 1;
    }
    Ok(out)
}

/// Theta-function core part: the lattice sum over `(n_1..n_{l-1})` with
/// `n_l = 0` of `prod_mu q_reg^{n_mu (n_mu - n_{mu+1})} (q r_{j+mu})^{n_mu}`.
pub fn theta_core(l: u32, j: u32, nq: i64) -> Result<QSeries> {
    if l < 2 {
        return Err(CombError::ModulusTooSmall(l));
    }
    if j >= l {
        return Err(CombError::ResidueOutOfRange(j, l));
    }
    let mut out = QSeries::zero(l as usize, nq);
    // the quadratic form is positive definite; |n_mu| beyond nq + 1 cannot
    // reach q-degree <= nq
    let bound = nq.max(0) + 1;
    let dims = (l - 1) as usize;
    let mut n = vec![-bound; dims];
    loop {
        emit_theta_term(l, j, &n, &mut out);
        let mut i = 0;
        loop {
            if i == dims {
                return Ok(out);
            }
            n[i] += 1;
            if n[i] <= bound {
                break;
            }
            n[i] = -bound;
            i += 1;
        }
    }
}

fn emit_theta_term(l: u32, j: u32, n: &[i64], out: &mut QSeries) {
    let lu = l as usize;
    let mut q = 0i64;
    let mut r = vec![0i64; lu];
    for (idx, &nmu) in n.iter().enumerate() {
        let next = if idx + 1 < n.len() { n[idx + 1] } else { 0 };
        let quad = nmu * (nmu - next);
        // q_reg^quad
        q += l as i64 * quad;
        for ri in r.iter_mut() {
            *ri += quad;
        }
        // (q r_{j+mu})^{n_mu}, mu = idx + 1
        q += nmu;
        r[(j as usize + idx + 1) % lu] += nmu;
    }
    debug_assert!(q >= 0, "core weight must be nonnegative");
    if q <= out.truncation() {
        out.add_term(Exponents { q, t: 0, r }, BigInt::from(1));
    }
}

/// Closed form of the full rank-1 generating function:
/// `theta_core x z_quot_closed`.
pub fn z_closed(l: u32, j: u32, nq: i64) -> Result<QSeries> {
    Ok(theta_core(l, j, nq)?.mul(&z_quot_closed(l, nq)?))
}

/// Euler-characteristic generating function for general framing:
/// `prod_j (z_closed at t = 1)^{w_j}`.
pub fn euler_generating(l: u32, w: &DimVector, nq: i64) -> Result<QSeries> {
    if w.0.len() != l as usize {
        return Err(CombError::LengthMismatch { expected: l as usize, got: w.0.len() });
    }
    let mut out = QSeries::one(l as usize, nq);
    for (j, &wj) in w.0.iter().enumerate() {
        if wj > 0 {
            let factor = z_closed(l, j as u32, nq)?.at_t_one();
            out = out.mul(&factor.pow(wj));
        }
    }
    Ok(out)
}

/// Gottsche's product for a surface with Betti numbers `betti`:
/// `prod_{m>=1} prod_i (1 - (-1)^i t^{2m-2+i} q^m)^{(-1)^{i+1} b_i}`.
/// The result has no r variables.
pub fn gottsche(betti: &[i64], nq: i64) -> QSeries {
    let mut out = QSeries::one(0, nq);
    for m in 1..=nq.max(0) {
        for (i, &b) in betti.iter().enumerate() {
            if b == 0 {
                continue;
            }
            let sign = if i % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
            let e = Exponents { q: m, t: 2 * m - 2 + i as i64, r: vec![] };
            // exponent (-1)^{i+1} b: even i inverts, odd i multiplies
            let (invert, reps) = if i % 2 == 0 { (b > 0, b.unsigned_abs()) } else { (b < 0, b.unsigned_abs()) };
            for _ in 0..reps {
                out = if invert {
                    out.mul_geom(&e, &sign)
                } else {
                    out.mul_one_minus(&e, &sign)
                };
            }
        }
    }
    out
}

/// Poincare polynomial of the rank-1 variety: map from t-degree to Betti
/// number, summing `t^{betti_exponent}` over the fixed points.
pub fn poincare_polynomial(l: u32, j: u32, v: &DimVector) -> Result<BTreeMap<i64, u64>> {
    let spec = ColorSpec::rank_one(l, j)?;
    let mut out = BTreeMap::new();
    for ys in enumerate_p_w_v(&spec, v)? {
        *out.entry(betti_exponent(&ys[0], l, true)).or_insert(0) += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exps(q: i64, t: i64, r: &[i64]) -> Exponents {
        Exponents { q, t, r: r.to_vec() }
    }

    #[test]
    fn series_basics() {
        let one = QSeries::one(2, 8);
        assert_eq!(one.coeff(&exps(0, 0, &[0, 0])), BigInt::from(1));
        let mut a = QSeries::zero(2, 8);
        a.add_term(exps(1, 0, &[1, 0]), BigInt::from(2));
        let sq = a.mul(&a);
        assert_eq!(sq.coeff(&exps(2, 0, &[2, 0])), BigInt::from(4));
        assert_eq!(a.add(&a.clone()).num_terms(), 1);
        let cancel = a.add(&{
            let mut b = QSeries::zero(2, 8);
            b.add_term(exps(1, 0, &[1, 0]), BigInt::from(-2));
            b
        });
        assert_eq!(cancel.num_terms(), 0);
    }

    #[test]
    fn geometric_inverse_roundtrip() {
        let m = exps(1, 2, &[1, 1]);
        let one = QSeries::one(2, 10);
        let g = one.mul_geom(&m, &BigInt::from(1));
        let back = g.mul_one_minus(&m, &BigInt::from(1));
        assert_eq!(back, QSeries::one(2, 10));
    }

    #[test]
    fn brute_force_small_coefficients() {
        let z = z_bruteforce(2, 0, 4).unwrap();
        assert_eq!(z.coeff(&exps(0, 0, &[0, 0])), BigInt::from(1));
        // the single 2-core (1)
        assert_eq!(z.coeff(&exps(1, 0, &[1, 0])), BigInt::from(1));
        // (2) at t^0 and (1,1) at t^2
        assert_eq!(z.coeff(&exps(2, 0, &[1, 1])), BigInt::from(1));
        assert_eq!(z.coeff(&exps(2, 2, &[1, 1])), BigInt::from(1));
    }

    #[test]
    fn brute_force_flag_changes_grading() {
        let doubled = z_bruteforce_with(2, 0, 4, true).unwrap();
        let plain = z_bruteforce_with(2, 0, 4, false).unwrap();
        assert_eq!(plain.coeff(&exps(2, 1, &[1, 1])), BigInt::from(1));
        assert_eq!(doubled.coeff(&exps(2, 1, &[1, 1])), BigInt::from(0));
        assert_eq!(doubled.coeff(&exps(2, 2, &[1, 1])), BigInt::from(1));
    }

    #[test]
    fn parallel_equals_serial() {
        for workers in [1, 2, 3, 7] {
            assert_eq!(
                z_bruteforce_par(2, 1, 8, workers).unwrap(),
                z_bruteforce(2, 1, 8).unwrap()
            );
        }
    }

    #[test]
    fn quot_closed_small() {
        let z = z_quot_closed(2, 4).unwrap();
        assert_eq!(z.coeff(&exps(0, 0, &[0, 0])), BigInt::from(1));
        assert_eq!(z.coeff(&exps(2, 0, &[1, 1])), BigInt::from(1));
        assert_eq!(z.coeff(&exps(2, 2, &[1, 1])), BigInt::from(1));
        assert_eq!(z.coeff(&exps(2, 4, &[1, 1])), BigInt::from(0));
    }

    #[test]
    fn theta_core_small() {
        let th = theta_core(2, 0, 6).unwrap();
        assert_eq!(th.coeff(&exps(0, 0, &[0, 0])), BigInt::from(1));
        // n = -1: core (1); n = 1: core (2,1)
        assert_eq!(th.coeff(&exps(1, 0, &[1, 0])), BigInt::from(1));
        assert_eq!(th.coeff(&exps(3, 0, &[1, 2])), BigInt::from(1));
    }

    #[test]
    fn theta_core_matches_core_enumeration() {
        use crate::coloring::color_counts;
        use crate::corequot::is_core;
        for l in 2..=4u32 {
            for j in 0..l {
                let nq = 8i64;
                let th = theta_core(l, j, nq).unwrap();
                let mut direct = QSeries::zero(l as usize, nq);
                let spec = ColorSpec::rank_one(l, j).unwrap();
                for n in 0..=nq as u64 {
                    for y in enumerate_partitions(n) {
                        if is_core(&y, l).unwrap() {
                            let v = color_counts(std::slice::from_ref(&y), &spec).unwrap();
                            direct.add_term(
                                exps(n as i64, 0, &v.0.iter().map(|&x| x as i64).collect::<Vec<_>>()),
                                BigInt::from(1),
                            );
                        }
                    }
                }
                assert_eq!(th, direct, "l={l} j={j}");
            }
        }
    }

    #[test]
    fn closed_form_equals_brute_force() {
        for l in 2..=3u32 {
            for j in 0..l {
                let nq = 10i64;
                assert_eq!(
                    z_closed(l, j, nq).unwrap(),
                    z_bruteforce(l, j, nq).unwrap(),
                    "l={l} j={j}"
                );
            }
        }
    }

    #[test]
    fn euler_counts_fixed_points() {
        let w = DimVector(vec![1, 1]);
        let e = euler_generating(2, &w, 4).unwrap();
        assert_eq!(e.coeff(&exps(2, 0, &[1, 1])), BigInt::from(5));
        let spec = ColorSpec::from_w(2, &w).unwrap();
        let pts = enumerate_p_w_v(&spec, &DimVector(vec![1, 1])).unwrap();
        assert_eq!(pts.len(), 5);
    }

    #[test]
    fn gottsche_plane_statistic() {
        // coefficient of q^n is sum over |Y| = n of t^{2(n - rows)}
        let g = gottsche(&[1], 8);
        for n in 0..=8i64 {
            let mut expected: BTreeMap<i64, BigInt> = BTreeMap::new();
            for y in enumerate_partitions(n as u64) {
                *expected
                    .entry(2 * (n - y.rows() as i64))
                    .or_insert_with(BigInt::zero) += 1;
            }
            for (t, c) in expected {
                assert_eq!(g.coeff(&exps(n, t, &[])), c, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn gottsche_ale_matches_quot_closed() {
        for l in 2..=3u32 {
            let mreg = 6i64;
            let g = gottsche(&[1, 0, l as i64 - 1], mreg);
            let zq = z_quot_closed(l, mreg * l as i64).unwrap();
            for (e, c) in zq.terms() {
                assert_eq!(e.q % l as i64, 0);
                let m = e.q / l as i64;
                assert!(e.r.iter().all(|&ri| ri == m), "pure q_reg grading");
                if m <= mreg {
                    assert_eq!(g.coeff(&exps(m, e.t, &[])), *c, "l={l} m={m} t={}", e.t);
                }
            }
        }
    }

    #[test]
    fn poincare_examples() {
        let p0 = poincare_polynomial(3, 1, &DimVector::zero(3)).unwrap();
        assert_eq!(p0, BTreeMap::from([(0, 1)]));
        let p = poincare_polynomial(3, 1, &DimVector(vec![1, 2, 1])).unwrap();
        assert_eq!(p, BTreeMap::from([(0, 1), (2, 2)]));
        let ale = poincare_polynomial(2, 0, &DimVector::delta(2, 1)).unwrap();
        assert_eq!(ale, BTreeMap::from([(0, 1), (2, 1)]));
    }
}
