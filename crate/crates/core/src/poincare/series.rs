//! Exact rational functions and truncated power series in one variable `z`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::Rational;
use crate::{Error, Result};

type UPoly = Vec<Rational>;

fn trim(mut p: UPoly) -> UPoly {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

fn padd(a: &[Rational], b: &[Rational]) -> UPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or(Rational::ZERO);
                match b.get(i) {
                    Some(y) => x + y,
                    None => x,
                }
            })
            .collect(),
    )
}

fn pneg(a: &[Rational]) -> UPoly {
    a.iter().map(|x| -x).collect()
}

fn pmul(a: &[Rational], b: &[Rational]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(out)
}

/// `(quotient, remainder)` of polynomial division; `b` nonzero.
fn pdivrem(a: &[Rational], b: &[Rational]) -> (UPoly, UPoly) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::ZERO; r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lead;
        for (i, y) in b.iter().enumerate() {
            r[k + i] = r[k + i].sub_mul(&c, y);
        }
        q[k] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn pgcd(a: &[Rational], b: &[Rational]) -> UPoly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let (_, r) = pdivrem(&x, &y);
        x = y;
        y = r;
    }
    x
}

fn pscale(a: &[Rational], c: &Rational) -> UPoly {
    trim(a.iter().map(|x| x * c).collect())
}

fn shift(a: &[Rational], k: usize, c: &Rational) -> UPoly {
    if a.is_empty() || c.is_zero() {
        return Vec::new();
    }
    let mut out = vec![Rational::ZERO; k];
    out.extend(a.iter().map(|x| x * c));
    out
}

fn fmt_upoly(p: &[Rational], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { "-" } else { "+" })?;
        }
        first = false;
        let zpart = match k {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{k}"),
        };
        if k == 0 {
            write!(f, "{a}")?;
        } else if a.is_one() {
            write!(f, "{zpart}")?;
        } else if a.is_integer() {
            write!(f, "{a}{zpart}")?;
        } else {
            write!(f, "{a}*{zpart}")?;
        }
    }
    Ok(())
}

/// Operations shared by exact rational functions and truncated series, enough
/// to state the reduction formulas once.
pub trait SeriesLike: Sized + Clone {
    /// `c * z^k * self`.
    fn shift_scale(&self, k: usize, c: i64) -> Self;
    /// `1 + self`.
    fn plus_one(&self) -> Self;
    /// `self / other`; `other` must have constant term 1 or -1.
    fn divide(&self, other: &Self) -> Result<Self>;
}

/// `num/den` in lowest terms with `den(0) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UPoly,
    den: UPoly,
}

impl RationalFunction {
    /// Reduces `num/den`; fails if `den(0) = 0`.
    pub fn new(num: Vec<Rational>, den: Vec<Rational>) -> Result<Self> {
        let (num, den) = (trim(num), trim(den));
        if den.first().is_none_or(Rational::is_zero) {
            return Err(Error::Precondition {
                statement: "power series expansion",
                detail: "denominator has zero constant term".into(),
            });
        }
        let g = pgcd(&num, &den);
        let (num, den) = if g.len() > 1 { (pdivrem(&num, &g).0, pdivrem(&den, &g).0) } else { (num, den) };
        let c = den[0].recip();
        Ok(RationalFunction { num: pscale(&num, &c), den: pscale(&den, &c) })
    }

    pub fn from_i64(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(
            num.iter().map(|&x| Rational::from_int(x)).collect(),
            den.iter().map(|&x| Rational::from_int(x)).collect(),
        )
    }

    pub fn one() -> Self {
        RationalFunction { num: vec![Rational::ONE], den: vec![Rational::ONE] }
    }

    /// `1 / (1 - z)^n`.
    pub fn complete_intersection(n: usize) -> Self {
        let mut den = vec![Rational::ONE];
        for _ in 0..n {
            den = pmul(&den, &[Rational::ONE, -Rational::ONE]);
        }
        RationalFunction { num: vec![Rational::ONE], den }
    }

    pub fn numerator(&self) -> &[Rational] {
        &self.num
    }

    pub fn denominator(&self) -> &[Rational] {
        &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(padd(&pmul(&self.num, &other.den), &pmul(&other.num, &self.den)), pmul(&self.den, &other.den))
            .expect("product of denominators has constant term 1")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&RationalFunction { num: pneg(&other.num), den: other.den.clone() })
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(pmul(&self.num, &other.num), pmul(&self.den, &other.den)).expect("constant term 1")
    }

    /// Fails when `other` vanishes at `z = 0`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Self::new(pmul(&self.num, &other.den), pmul(&self.den, &other.num))
    }

    /// Maclaurin coefficients `c_0..c_pmax` from the recurrence
    /// `c_k = num_k - sum_{i>=1} den_i c_(k-i)`.
    pub fn expand(&self, pmax: usize) -> Vec<Rational> {
        let mut c: Vec<Rational> = Vec::with_capacity(pmax + 1);
        for k in 0..=pmax {
            let mut v = self.num.get(k).cloned().unwrap_or(Rational::ZERO);
            for (i, d) in self.den.iter().enumerate().skip(1).take(k) {
                v = v.sub_mul(d, &c[k - i]);
            }
            c.push(v);
        }
        c
    }

    /// The expansion as a truncated series; fails on non-integer coefficients.
    pub fn series(&self, pmax: usize) -> Result<TruncatedSeries> {
        let coeffs = self
            .expand(pmax)
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.numer())
                } else {
                    Err(Error::Invariant(format!("non-integer series coefficient {c}")))
                }
            })
            .collect::<Result<_>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}

impl SeriesLike for RationalFunction {
    fn shift_scale(&self, k: usize, c: i64) -> Self {
        Self::new(shift(&self.num, k, &Rational::from_int(c)), self.den.clone()).expect("same denominator")
    }

    fn plus_one(&self) -> Self {
        self.add(&Self::one())
    }

    fn divide(&self, other: &Self) -> Result<Self> {
        self.div(other)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let multi = self.num.iter().filter(|c| !c.is_zero()).count() > 1;
        if multi {
            write!(f, "(")?;
        }
        fmt_upoly(&self.num, f)?;
        if multi {
            write!(f, ")")?;
        }
        if self.den.len() > 1 {
            write!(f, "/(")?;
            fmt_upoly(&self.den, f)?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

/// Coefficients `c_0..c_pmax` of a power series, exact to order `pmax`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    pub coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn from_counts(counts: &[usize]) -> Self {
        TruncatedSeries { coeffs: counts.iter().map(|&c| BigInt::from(c)).collect() }
    }

    pub fn pmax(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn truncate(&self, pmax: usize) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().take(pmax + 1).cloned().collect() }
    }

    fn get(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        TruncatedSeries { coeffs: (0..n).map(|k| self.get(k) + other.get(k)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n).map(|k| (0..=k).map(|i| self.get(i) * other.get(k - i)).sum()).collect();
        TruncatedSeries { coeffs }
    }
}

impl SeriesLike for TruncatedSeries {
    fn shift_scale(&self, k: usize, c: i64) -> Self {
        let n = self.coeffs.len();
        let coeffs = (0..n).map(|i| if i < k { BigInt::zero() } else { self.get(i - k) * c }).collect();
        TruncatedSeries { coeffs }
    }

    fn plus_one(&self) -> Self {
        let mut c = self.coeffs.clone();
        if let Some(x) = c.first_mut() {
            *x += 1;
        }
        TruncatedSeries { coeffs: c }
    }

    fn divide(&self, other: &Self) -> Result<Self> {
        let b0 = other.get(0);
        if !b0.abs().is_one() {
            return Err(Error::Precondition {
                statement: "series division",
                detail: format!("divisor has constant term {b0}, expected 1 or -1"),
            });
        }
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut c: Vec<BigInt> = Vec::with_capacity(n);
        for k in 0..n {
            let mut v = self.get(k);
            for i in 1..=k {
                v -= other.get(i) * &c[k - i];
            }
            c.push(v * &b0);
        }
        Ok(TruncatedSeries { coeffs: c })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries{self}")
    }
}
