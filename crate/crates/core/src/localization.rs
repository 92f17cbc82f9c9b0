//! Equivariant integrals as exact rational functions: fixed-point sums over
//! quiver varieties and toric Hilbert-scheme charts, plus the rank-1 closed
//! forms used as identities.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{FactoredRational, LinearForm, MultiPoly, RationalFunction};
use crate::characters::{tangent_character, ChartMonomial, WeightMonomial};
use crate::coloring::{common_core, enumerate_p_w_v, ColorSpec, DimVector};
use crate::error::{CombError, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Additive weight of a torus monomial: `p*eps1 + q*eps2 + a_beta - a_alpha`.
pub fn euler_factor(m: &WeightMonomial) -> Result<LinearForm> {
    let mut a = vec![0i64; m.alpha.max(m.beta)];
    if m.alpha != m.beta {
        a[m.beta - 1] += 1;
        a[m.alpha - 1] -= 1;
    }
    let f = LinearForm::new(m.t1, m.t2, a);
    if f.is_zero() {
        return Err(CombError::ZeroWeight);
    }
    Ok(f)
}

/// Additive weight of a chart monomial given the chart weight pairs.
pub fn chart_factor(m: &ChartMonomial, charts: &[(LinearForm, LinearForm)]) -> Result<LinearForm> {
    let (wx, wy) = &charts[m.chart];
    let width = wx.a.len().max(wy.a.len());
    let mut a = vec![0i64; width];
    for (dst, &src) in a.iter_mut().zip(&wx.a) {
        *dst += m.x * src;
    }
    for (dst, &src) in a.iter_mut().zip(&wy.a) {
        *dst += m.y * src;
    }
    let f = LinearForm::new(m.x * wx.c1 + m.y * wy.c1, m.x * wx.c2 + m.y * wy.c2, a);
    if f.is_zero() {
        return Err(CombError::ZeroWeight);
    }
    Ok(f)
}

/// Localization sum `sum_Y 1 / prod(tangent weights)` over the fixed points
/// of the quiver variety with framing `spec` and dimension vector `v`.
pub fn equivariant_integral(spec: &ColorSpec, v: &DimVector) -> Result<RationalFunction> {
    let nvars = 2 + spec.rank();
    let mut acc = FactoredRational::zero(nvars);
    for ys in enumerate_p_w_v(spec, v)? {
        let character = tangent_character(&ys, spec)?;
        let forms: Vec<LinearForm> = character
            .terms
            .iter()
            .map(euler_factor)
            .collect::<Result<_>>()?;
        acc = acc.add(&FactoredRational::reciprocal(&forms, nvars)?);
    }
    Ok(acc.into_rational())
}

/// The l toric chart weight pairs of the type A ALE surface:
/// chart i = 1..l has `wx = i*eps1 - (l-i)*eps2`, `wy = -(i-1)*eps1 +
/// (l+1-i)*eps2`.
pub fn ale_charts(l: u32) -> Result<Vec<(LinearForm, LinearForm)>> {
    if l < 2 {
        return Err(CombError::ModulusTooSmall(l));
    }
    let li = l as i64;
    Ok((1..=li)
        .map(|i| {
            (
                LinearForm::eps(i, -(li - i)),
                LinearForm::eps(-(i - 1), li + 1 - i),
            )
        })
        .collect())
}

/// The single chart of the plane with weights `(eps1, eps2)`.
pub fn plane_chart() -> Vec<(LinearForm, LinearForm)> {
    vec![(LinearForm::eps(1, 0), LinearForm::eps(0, 1))]
}

/// Per-order coefficients of the toric localization series: entry n is the
/// coefficient of the 2n-th power of the expansion parameter, the sum over
/// tuples of partitions of total weight n of reciprocal chart weights.
pub fn hilbert_series_z(
    charts: &[(LinearForm, LinearForm)],
    nmax: u64,
) -> Result<Vec<RationalFunction>> {
    let mut out = Vec::with_capacity(nmax as usize + 1);
    for n in 0..=nmax {
        let mut acc = FactoredRational::zero(2);
        let mut tuple = vec![Partition::empty(); charts.len()];
        sum_tuples(charts, n, 0, &mut tuple, &mut acc)?;
        out.push(acc.into_rational());
    }
    Ok(out)
}

fn sum_tuples(
    charts: &[(LinearForm, LinearForm)],
    rest: u64,
    slot: usize,
    tuple: &mut Vec<Partition>,
    acc: &mut FactoredRational,
) -> Result<()> {
    if slot + 1 == charts.len() {
        for y in enumerate_partitions(rest) {
            tuple[slot] = y;
            let forms: Vec<LinearForm> = crate::characters::hilbert_tangent_character(tuple)
                .iter()
                .map(|m| chart_factor(m, charts))
                .collect::<Result<_>>()?;
            *acc = acc.add(&FactoredRational::reciprocal(&forms, 2)?);
        }
        return Ok(());
    }
    for w in 0..=rest {
        for y in enumerate_partitions(w) {
            tuple[slot] = y;
            sum_tuples(charts, rest - w, slot + 1, tuple, acc)?;
        }
    }
    Ok(())
}

/// `prod_{s in Y} ((a(s)+1) eta1 - l(s) eta2)(-a(s) eta1 + (l(s)+1) eta2)`,
/// the box product attached to one chart.
pub fn n_y_factor(y: &Partition, eta1: &LinearForm, eta2: &LinearForm, nvars: usize) -> MultiPoly {
    let p1 = eta1.to_poly(nvars);
    let p2 = eta2.to_poly(nvars);
    let mut acc = MultiPoly::one(nvars);
    for s in y.cells() {
        let f1 = p1
            .scale(&BigInt::from(y.arm(s) + 1))
            .add(&p2.scale(&BigInt::from(-y.leg(s))));
        let f2 = p1
            .scale(&BigInt::from(-y.arm(s)))
            .add(&p2.scale(&BigInt::from(y.leg(s) + 1)));
        acc = acc.mul(&f1).mul(&f2);
    }
    acc
}

/// How an identity between rational functions is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Canonical rational-function comparison.
    Exact,
    /// Evaluation at `points` random rational points drawn from the seed;
    /// points hitting a zero denominator are resampled.
    Random { seed: u64, points: usize },
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `1/(n! l^n (eps1 eps2)^n)` in two variables.
pub fn rank_one_closed_form(n: u64, l: u32) -> RationalFunction {
    let e1e2 = MultiPoly::var(2, 0).mul(&MultiPoly::var(2, 1));
    let den = e1e2
        .pow(n as u32)
        .scale(&(factorial(n) * BigInt::from(l).pow(n as u32)));
    RationalFunction::new(MultiPoly::one(2), den)
}

/// Checks the rank-1 hook localization identity
/// `sum_{Y in P_{e_j}(v)} prod_{s: l | h(s)}
///  1/((-a(s) eps1 + (l(s)+1) eps2)((a(s)+1) eps1 - l(s) eps2))
///  = 1/(n! l^n (eps1 eps2)^n)`
/// with n the common quotient weight of the members.
pub fn verify_identity_a6(l: u32, j: u32, v: &DimVector, mode: VerifyMode) -> Result<bool> {
    let spec = ColorSpec::rank_one(l, j)?;
    let (_, core) = common_core(l, j, v)?;
    let total = v.total();
    if total < core.weight() || (total - core.weight()) % l as u64 != 0 {
        // no partition has this color vector; treat the empty sum as failing
        return Ok(false);
    }
    let n = (total - core.weight()) / l as u64;
    let members = enumerate_p_w_v(&spec, v)?;
    if members.is_empty() {
        return Ok(false);
    }
    let rhs = rank_one_closed_form(n, l);
    let mut lhs = FactoredRational::zero(2);
    for ys in &members {
        let y = &ys[0];
        let mut forms = Vec::new();
        for s in y.cells() {
            if y.hook_length(s)? % l as u64 == 0 {
                forms.push(LinearForm::eps(-y.arm(s), y.leg(s) + 1));
                forms.push(LinearForm::eps(y.arm(s) + 1, -y.leg(s)));
            }
        }
        lhs = lhs.add(&FactoredRational::reciprocal(&forms, 2)?);
    }
    match mode {
        VerifyMode::Exact => Ok(lhs.into_rational() == rhs),
        VerifyMode::Random { seed, points } => {
            let lhs = lhs.into_rational();
            Ok(rational_functions_agree(&lhs, &rhs, seed, points))
        }
    }
}

/// Compares two rational functions at `points` random rational points with
/// small numerators, resampling whenever either denominator vanishes.
pub fn rational_functions_agree(
    a: &RationalFunction,
    b: &RationalFunction,
    seed: u64,
    points: usize,
) -> bool {
    let nvars = a.nvars().max(b.nvars());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    while checked < points {
        let pt = sample_point(&mut rng, nvars);
        match (a.eval(&pt), b.eval(&pt)) {
            (Some(x), Some(y)) => {
                if x != y {
                    return false;
                }
                checked += 1;
            }
            _ => continue,
        }
    }
    true
}

/// A random point with nonzero rational coordinates of small height.
pub fn sample_point(rng: &mut ChaCha8Rng, nvars: usize) -> Vec<BigRational> {
    (0..nvars)
        .map(|_| {
            let mut num = 0i64;
            while num == 0 {
                num = rng.gen_range(-19..=19);
            }
            let den = rng.gen_range(1..=19i64);
            BigRational::new(BigInt::from(num), BigInt::from(den))
        })
        .collect()
}
