//! Exact multivariate polynomial and rational-function arithmetic over the
//! integers, in the fixed variable order (eps1, eps2, a_1, ..., a_r).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{CombError, Result};

/// Integer linear form `c1*eps1 + c2*eps2 + sum a[i]*a_{i+1}`.
/// Trailing zero frame coefficients are trimmed for canonical equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    pub c1: i64,
    pub c2: i64,
    pub a: Vec<i64>,
}

impl LinearForm {
    pub fn new(c1: i64, c2: i64, mut a: Vec<i64>) -> Self {
        while a.last() == Some(&0) {
            a.pop();
        }
        LinearForm { c1, c2, a }
    }

    /// Form in eps1, eps2 only.
    pub fn eps(c1: i64, c2: i64) -> Self {
        Self::new(c1, c2, Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.c1 == 0 && self.c2 == 0 && self.a.iter().all(|&c| c == 0)
    }

    /// Sign-normalized copy (first nonzero coefficient positive) and whether
    /// the sign was flipped.
    pub fn normalized(&self) -> (LinearForm, bool) {
        let lead = [self.c1, self.c2]
            .into_iter()
            .chain(self.a.iter().copied())
            .find(|&c| c != 0)
            .unwrap_or(0);
        if lead < 0 {
            (
                LinearForm::new(-self.c1, -self.c2, self.a.iter().map(|&c| -c).collect()),
                true,
            )
        } else {
            (self.clone(), false)
        }
    }

    /// Number of variables needed to express the form.
    pub fn min_vars(&self) -> usize {
        2 + self.a.len()
    }

    pub fn to_poly(&self, nvars: usize) -> MultiPoly {
        assert!(nvars >= self.min_vars());
        let mut p = MultiPoly::zero(nvars);
        for (i, &c) in [self.c1, self.c2].iter().chain(self.a.iter()).enumerate() {
            if c != 0 {
                p.add_term(MultiPoly::unit_exp(nvars, i), BigInt::from(c));
            }
        }
        p
    }

    /// Value at a point (eps1, eps2, a_1, ..): the slice may be longer than
    /// needed.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert!(point.len() >= self.min_vars());
        let mut acc = BigRational::zero();
        for (i, &c) in [self.c1, self.c2].iter().chain(self.a.iter()).enumerate() {
            if c != 0 {
                acc += &point[i] * BigRational::from(BigInt::from(c));
            }
        }
        acc
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly(self.min_vars()))
    }
}

/// Polynomial with arbitrary-precision integer coefficients; keys are
/// exponent vectors of fixed length `nvars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

/// Variable names for display, in the fixed order.
fn var_name(i: usize) -> String {
    match i {
        0 => "e1".into(),
        1 => "e2".into(),
        _ => format!("a{}", i - 1),
    }
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut p = Self::zero(nvars);
        p.terms.insert(Self::unit_exp(nvars, i), BigInt::one());
        p
    }

    fn unit_exp(nvars: usize, i: usize) -> Vec<u32> {
        let mut e = vec![0; nvars];
        e[i] = 1;
        e
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: BigInt) {
        assert_eq!(exp.len(), self.nvars);
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    /// Coefficient of the graded-lex leading monomial.
    pub fn leading_coefficient(&self) -> BigInt {
        self.terms
            .iter()
            .max_by(|(e1, _), (e2, _)| {
                (e1.iter().sum::<u32>(), *e1).cmp(&(e2.iter().sum::<u32>(), *e2))
            })
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Divides every coefficient by `d` exactly; `d` must divide the content.
    pub fn div_exact(&self, d: &BigInt) -> Self {
        assert!(!d.is_zero());
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            let (q, r) = c.div_rem(d);
            assert!(r.is_zero());
            *c = q;
        }
        out
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert!(point.len() >= self.nvars);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut m = BigRational::from(c.clone());
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    m *= x;
                }
            }
            acc += m;
        }
        acc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // graded-lex descending for stable output
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by_key(|e| (std::cmp::Reverse(e.iter().sum::<u32>()), std::cmp::Reverse((*e).clone())));
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { var_name(v) } else { format!("{}^{}", var_name(v), k) })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Quotient of two integer polynomials, canonicalized by stripping the
/// common integer content and making the denominator's leading coefficient
/// positive. No polynomial gcd is attempted; equality is decided by
/// cross-multiplication.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert_eq!(num.nvars(), den.nvars());
        let mut rf = RationalFunction { num, den };
        rf.canonicalize();
        rf
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(MultiPoly::zero(nvars), MultiPoly::one(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::new(MultiPoly::one(nvars), MultiPoly::one(nvars))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let nvars = p.nvars();
        Self::new(p, MultiPoly::one(nvars))
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one(self.den.nvars());
            return;
        }
        let g = self.num.content().gcd(&self.den.content());
        if !g.is_one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        if self.den.leading_coefficient().is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    /// None when the denominator vanishes at the point.
    pub fn eval(&self, point: &[BigRational]) -> Option<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Sum-of-reciprocals accumulator keeping the denominator as a multiset of
/// sign-normalized linear forms, so repeated addition never expands a large
/// polynomial product until the end.
#[derive(Debug, Clone)]
pub struct FactoredRational {
    nvars: usize,
    num: MultiPoly,
    den: BTreeMap<LinearForm, u32>,
}

impl FactoredRational {
    pub fn zero(nvars: usize) -> Self {
        FactoredRational { nvars, num: MultiPoly::zero(nvars), den: BTreeMap::new() }
    }

    /// `1 / prod(forms)`; rejects zero forms.
    pub fn reciprocal(forms: &[LinearForm], nvars: usize) -> Result<Self> {
        let mut den = BTreeMap::new();
        let mut sign = 1i64;
        for f in forms {
            if f.is_zero() {
                return Err(CombError::ZeroWeight);
            }
            let (n, flipped) = f.normalized();
            if flipped {
                sign = -sign;
            }
            *den.entry(n).or_insert(0) += 1;
        }
        Ok(FactoredRational {
            nvars,
            num: MultiPoly::constant(nvars, BigInt::from(sign)),
            den,
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut den: BTreeMap<LinearForm, u32> = self.den.clone();
        for (f, &m) in &other.den {
            let e = den.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let mut lhs = self.num.clone();
        let mut rhs = other.num.clone();
        for (f, &m) in &den {
            let p = f.to_poly(self.nvars);
            let extra_l = m - self.den.get(f).copied().unwrap_or(0);
            let extra_r = m - other.den.get(f).copied().unwrap_or(0);
            if extra_l > 0 {
                lhs = lhs.mul(&p.pow(extra_l));
            }
            if extra_r > 0 {
                rhs = rhs.mul(&p.pow(extra_r));
            }
        }
        FactoredRational { nvars: self.nvars, num: lhs.add(&rhs), den }
    }

    pub fn into_rational(self) -> RationalFunction {
        let mut den = MultiPoly::one(self.nvars);
        for (f, m) in &self.den {
            den = den.mul(&f.to_poly(self.nvars).pow(*m));
        }
        RationalFunction::new(self.num, den)
    }
}
