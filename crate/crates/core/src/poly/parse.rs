//! Recursive-descent parser for the polynomial text format.
//!
//! ```text
//! expression := [sign] term (sign term)*
//! term       := coef ['*' factor ('*' factor)*] | factor ('*' factor)*
//! factor     := var ['^' natural]
//! var        := ('y' | 'x') natural>=1
//! coef       := natural ['/' natural>=1]
//! ```
//! Whitespace is insignificant. `y_i` and `x_i` both map to index `i - 1`.

use num_bigint::BigInt;

use super::{Monomial, Polynomial};
use crate::exact::Rational;
use crate::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

/// A parsed term before the variable count is known.
struct RawTerm {
    coef: Rational,
    factors: Vec<(usize, u32, usize)>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn natural(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a natural number");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn small_natural(&mut self, what: &str) -> Result<u32> {
        let start = self.pos;
        let n = self.natural()?;
        u32::try_from(n).map_err(|_| Error::Parse { pos: start, msg: format!("{what} too large") })
    }

    fn factor(&mut self) -> Result<(usize, u32, usize)> {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(b'x') | Some(b'y') => self.pos += 1,
            _ => return self.err("expected a variable `y<i>` or `x<i>`"),
        }
        let idx = self.small_natural("variable index")?;
        if idx == 0 {
            return Err(Error::Parse { pos: at, msg: "variable indices start at 1".into() });
        }
        let mut exp = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            exp = self.small_natural("exponent")?;
        }
        Ok((idx as usize - 1, exp, at))
    }

    fn term(&mut self, negative: bool) -> Result<RawTerm> {
        let mut coef = Rational::ONE;
        let mut factors = Vec::new();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.natural()?;
                let mut den = BigInt::from(1);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    den = self.natural()?;
                    if den == BigInt::from(0) {
                        return self.err("zero denominator");
                    }
                }
                coef = Rational::from_bigints(num, den);
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    factors.push(self.factor()?);
                }
            }
            Some(b'x') | Some(b'y') => factors.push(self.factor()?),
            Some(_) => return self.err("expected a coefficient or variable"),
            None => return self.err("unexpected end of input"),
        }
        if !factors.is_empty() {
            while self.peek() == Some(b'*') {
                self.pos += 1;
                factors.push(self.factor()?);
            }
        }
        if negative {
            coef = -coef;
        }
        Ok(RawTerm { coef, factors })
    }

    fn expression(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut negative = false;
        match self.peek() {
            Some(b'-') => {
                negative = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            None => return self.err("empty expression"),
            _ => {}
        }
        terms.push(self.term(negative)?);
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    terms.push(self.term(false)?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    terms.push(self.term(true)?);
                }
                None => break,
                Some(_) => return self.err("expected `+`, `-` or end of input"),
            }
        }
        Ok(terms)
    }
}

fn assemble(terms: Vec<RawTerm>, nvars: usize) -> Result<Polynomial> {
    let mut p = Polynomial::zero(nvars);
    for t in terms {
        let mut e = vec![0u32; nvars];
        for (i, x, _) in t.factors {
            if i >= nvars {
                return Err(Error::VariableOutOfRange { index: i + 1, nvars });
            }
            e[i] += x;
        }
        p.add_term(Monomial::new(e), &t.coef);
    }
    Ok(p)
}

fn raw(text: &str) -> Result<Vec<RawTerm>> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.expression()
}

/// Parses `text` as a polynomial in `nvars` variables.
pub fn parse(text: &str, nvars: usize) -> Result<Polynomial> {
    assemble(raw(text)?, nvars)
}

/// Parses `text`, taking the number of variables to be the largest index used.
pub fn parse_infer(text: &str) -> Result<Polynomial> {
    let terms = raw(text)?;
    let n = terms.iter().flat_map(|t| t.factors.iter().map(|f| f.0 + 1)).max().unwrap_or(1);
    assemble(terms, n)
}
