//! Sparse multivariate polynomials over Q.
//!
//! The same type holds elements of the divided-power side `P = Q[y_1..y_n]`
//! and (degree-truncated) elements of the power-series side
//! `S = Q[[x_1..x_n]]`; only the variable letter used for printing differs.

mod basis;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exact::Rational;
use crate::{Error, Result};

pub use basis::{monomials_of_degree, MonomialBasis};
pub use parse::{parse, parse_infer};

/// Exponent vector. Ordered degree-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Monomial)
    }

    /// `prod_i e_i!`
    pub fn factorial(&self) -> Rational {
        let mut acc: i64 = 1;
        let mut out = Rational::ONE;
        for &e in &self.0 {
            for k in 2..=e as i64 {
                match acc.checked_mul(k) {
                    Some(v) => acc = v,
                    None => {
                        out = out * Rational::from_int(acc);
                        acc = k;
                    }
                }
            }
        }
        out * Rational::from_int(acc)
    }

    fn fmt_var(&self, f: &mut fmt::Formatter<'_>, var: char) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{var}{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_var(f, 'y')
    }
}

/// Polynomial with nonzero rational coefficients on a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, Monomial::one(nvars), c)
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, Monomial::var(nvars, i), Rational::ONE)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        assert_eq!(m.nvars(), self.nvars, "monomial has wrong number of variables");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
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

    /// Terms in increasing degree-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or(Rational::ZERO)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Lowest degree of a term (the order of a series); errors on zero.
    pub fn order(&self) -> Result<u32> {
        self.terms.keys().next().map(Monomial::degree).ok_or(Error::ZeroPolynomial)
    }

    /// Lower degree form: the homogeneous part of minimal degree.
    pub fn ldf(&self) -> Result<Polynomial> {
        Ok(self.homogeneous_component(self.order()?))
    }

    /// Homogeneous component `F_d`.
    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        self.filter_terms(|m| m.degree() == d)
    }

    /// Terms of degree at most `d`.
    pub fn truncate_above(&self, d: u32) -> Polynomial {
        self.filter_terms(|m| m.degree() <= d)
    }

    /// `F_{>=h}`: terms of degree at least `h`.
    pub fn tail_from(&self, h: u32) -> Polynomial {
        self.filter_terms(|m| m.degree() >= h)
    }

    fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Indices of variables that occur in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.terms.keys().any(|m| m.0[i] > 0)).collect()
    }

    /// Re-indexes variables: old variable `i` becomes `map[i]` in a ring with `nvars` variables.
    ///
    /// Fails if a variable with nonzero exponent has no image.
    pub fn remap(&self, nvars: usize, map: &[Option<usize>]) -> Result<Polynomial> {
        assert_eq!(map.len(), self.nvars);
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &x) in m.0.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let j = map[i].ok_or(Error::VariableOutOfRange { index: i + 1, nvars })?;
                e[j] += x;
            }
            out.add_term(Monomial(e), c);
        }
        Ok(out)
    }

    /// Same polynomial viewed in a ring with more variables.
    pub fn extend_vars(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars);
        let map: Vec<Option<usize>> = (0..self.nvars).map(Some).collect();
        self.remap(nvars, &map).expect("identity embedding")
    }

    /// Rescales to coprime integer coefficients with a positive leading
    /// (highest degree-lex) coefficient. Used for display of ideal generators.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        use num_traits::{One, Zero};
        let Some((_, lead)) = self.terms.iter().next_back() else {
            return self.clone();
        };
        let mut l = num_bigint::BigInt::one();
        let mut g = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            l = l.lcm(&c.denom());
            g = g.gcd(&c.numer());
        }
        let mut f = Rational::from_bigints(l, g);
        if lead.is_negative() {
            f = -f;
        }
        self.scale(&f)
    }

    pub fn display_as(&self, var: char) -> DisplayAs<'_> {
        DisplayAs { poly: self, var }
    }

    fn check_same(&self, other: &Polynomial) {
        assert_eq!(self.nvars, other.nvars, "polynomials live in different rings");
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(self + other)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_same(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Rational::from_int(-1))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_same(rhs);
        let mut out = Polynomial::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), &(x * y));
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

/// Formatter that prints with a chosen variable letter (`y` for P, `x` for S).
pub struct DisplayAs<'a> {
    poly: &'a Polynomial,
    var: char,
}

impl fmt::Display for DisplayAs<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                m.fmt_var(f, self.var)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_as('y').fmt(f)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Polynomial {
        parse(s, n).unwrap()
    }

    #[test]
    fn graded_pieces() {
        let f = p("y1^3 + y2^2", 2);
        assert_eq!(f.homogeneous_component(2), p("y2^2", 2));
        assert!(f.homogeneous_component(1).is_zero());
        let sq = &p("y1 + y2", 2) * &p("y1 + y2", 2);
        assert_eq!(sq.homogeneous_component(2), p("y1^2 + 2*y1*y2 + y2^2", 2));
    }

    #[test]
    fn tails_and_truncations() {
        let f = p("y1^5 + y1^3 + y2^2", 2);
        assert_eq!(f.tail_from(4), p("y1^5", 2));
        assert_eq!(f.tail_from(0), f);
        assert_eq!(p("y1^5 + y2^2", 2).truncate_above(2), p("y2^2", 2));
    }

    #[test]
    fn order_and_ldf() {
        let f = p("x1^3 - 3*x2^2", 2);
        assert_eq!(f.order().unwrap(), 2);
        assert_eq!(f.ldf().unwrap(), p("-3*x2^2", 2));
        let g = p("x1*x2", 2);
        assert_eq!(g.order().unwrap(), 2);
        assert_eq!(g.ldf().unwrap(), g);
        let h = p("x1 + x1^2", 1);
        assert_eq!(h.order().unwrap(), 1);
        assert_eq!(h.ldf().unwrap(), p("x1", 1));
        assert_eq!(Polynomial::zero(2).order(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p("y1^3 + y2^2", 2).to_string(), "y1^3 + y2^2");
        assert_eq!(p("-1/2*y1*y2", 2).to_string(), "-1/2*y1*y2");
        assert_eq!(p("x1^3 - 3*x2^2", 2).display_as('x').to_string(), "x1^3 - 3*x2^2");
        assert_eq!(p("2 - y1", 1).to_string(), "-y1 + 2");
        assert_eq!(Polynomial::zero(3).to_string(), "0");
    }

    #[test]
    fn primitive_scaling() {
        let f = p("x2^2 - 1/3*x1^3", 2);
        assert_eq!(f.primitive(), p("x1^3 - 3*x2^2", 2));
    }

    #[test]
    fn factorials() {
        assert_eq!(Monomial::new(vec![3, 2]).factorial(), Rational::from_int(12));
        assert_eq!(Monomial::new(vec![25]).factorial().to_string(), "15511210043330985984000000");
    }

    pub(crate) fn arb_poly(nvars: usize, maxdeg: u32) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0..=maxdeg, nvars), -5i64..=5, 1i64..=3), 0..6).prop_map(
            move |ts| {
                Polynomial::from_terms(nvars, ts.into_iter().map(|(e, a, b)| (Monomial::new(e), Rational::new(a, b))))
            },
        )
    }

    proptest! {
        #[test]
        fn components_sum_back(f in arb_poly(3, 3)) {
            let mut acc = Polynomial::zero(3);
            for d in 0..=9 {
                acc = &acc + &f.homogeneous_component(d);
            }
            prop_assert_eq!(acc, f);
        }

        #[test]
        fn ldf_is_multiplicative(f in arb_poly(2, 3), g in arb_poly(2, 3)) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let fg = &f * &g;
            prop_assert_eq!(fg.ldf().unwrap(), &f.ldf().unwrap() * &g.ldf().unwrap());
            prop_assert_eq!(fg.order().unwrap(), f.order().unwrap() + g.order().unwrap());
        }

        #[test]
        fn format_parse_round_trip(f in arb_poly(3, 4)) {
            let text = f.to_string();
            let back = parse(&text, 3).unwrap();
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
