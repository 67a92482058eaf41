//! Reduction formulas for Poincaré series and the split-quadric predictor.

use crate::apolar::{annihilator, hilbert_function, is_nondegenerate};
use crate::artin::algebra_from_inverse_system;
use crate::poly::{Monomial, Polynomial};
use crate::{Error, Rational, Result};

use super::resolution::betti_numbers;
use super::series::{RationalFunction, SeriesLike, TruncatedSeries};

/// `P_C = P / (1 + z^2 P)` where `P = P_{C/Soc(C)}`, for Gorenstein `C` with
/// embedding dimension at least 2.
pub fn socle_formula<T: SeriesLike>(p_mod_socle: &T) -> Result<T> {
    p_mod_socle.divide(&p_mod_socle.shift_scale(2, 1).plus_one())
}

/// `P_{C/Soc(C)} = P_C / (1 - z^2 P_C)`.
pub fn socle_formula_inverse<T: SeriesLike>(p: &T) -> Result<T> {
    p.divide(&p.shift_scale(2, -1).plus_one())
}

/// `P_C = P / (1 - h z P)` where `P = P_{C/(c_1..c_h)}` for independent socle
/// elements `c_i` outside `N^2`.
pub fn quotient_formula<T: SeriesLike>(p_quotient: &T, h: usize) -> Result<T> {
    p_quotient.divide(&p_quotient.shift_scale(1, -(h as i64)).plus_one())
}

/// `P_{C/(c_1..c_h)} = P_C / (1 + h z P_C)`.
pub fn quotient_formula_inverse<T: SeriesLike>(p: &T, h: usize) -> Result<T> {
    p.divide(&p.shift_scale(1, h as i64).plus_one())
}

/// `P_A = P_D / (1 - h z P_D + z^2 P_D)` where `D = B / Soc(B)`: the socle
/// formula on `A` composed with the quotient formula for the `h` split
/// variables. Valid for every `B`, including embedding dimension 1.
pub fn chain_through_socle_quotient<T: SeriesLike>(p_d: &T, h: usize) -> Result<T> {
    socle_formula(&quotient_formula(p_d, h)?)
}

/// A visible splitting `F = G + sum_{j in Q} y_j^2` with `G` in the other variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricReduction {
    /// `G` written in its own `m` variables.
    pub g: Polynomial,
    pub g_vars: Vec<usize>,
    pub quadric_vars: Vec<usize>,
    pub n: usize,
    pub m: usize,
    /// Number of split quadrics, `n - m`.
    pub h: usize,
    /// `H_A(1) - H_A(2)`.
    pub hilbert_drop: i64,
}

impl QuadricReduction {
    /// Whether `H_A(1) - H_A(2)` agrees with the number of split quadrics.
    pub fn hilbert_drop_matches(&self) -> bool {
        self.hilbert_drop == self.h as i64
    }

    /// The functional relation between `P_A` and `P_B`, `B = S/Ann(G)`.
    pub fn relation_text(&self) -> String {
        let h = self.h;
        if h == 0 {
            "P_A = P_B".to_string()
        } else if self.m <= 1 {
            format!("P_A = P_D/(1 - {h}z*P_D + z^2*P_D), D = B/Soc(B) = k[x]/(x^(s))")
        } else {
            format!("P_A = P_B/(1 - {h}z*P_B)")
        }
    }
}

/// Detects `F = G + sum y_j^2` where each `y_j` occurs only in the term `y_j^2`
/// (coefficient 1). If every variable qualifies, `y_1^2` is kept as `G`.
pub fn reduce_quadrics(f: &Polynomial) -> Result<QuadricReduction> {
    let n = f.nvars();
    if !is_nondegenerate(f)? {
        let h1 = hilbert_function(f)?[1];
        return Err(Error::Degenerate { h1, nvars: n });
    }
    let mut quadric_vars: Vec<usize> = (0..n)
        .filter(|&j| {
            let sq = Monomial::new({
                let mut e = vec![0; n];
                e[j] = 2;
                e
            });
            f.coeff(&sq).is_one() && f.terms().all(|(m, _)| m.exponents()[j] == 0 || *m == sq)
        })
        .collect();
    if quadric_vars.len() == n {
        quadric_vars.remove(0);
    }
    let g_vars: Vec<usize> = (0..n).filter(|j| !quadric_vars.contains(j)).collect();
    let mut g = f.clone();
    for &j in &quadric_vars {
        g = &g - &(&Polynomial::var(n, j) * &Polynomial::var(n, j));
    }
    let map: Vec<Option<usize>> = (0..n).map(|i| g_vars.iter().position(|&v| v == i)).collect();
    let g = g.remap(g_vars.len(), &map)?;
    if g.degree().unwrap_or(0) < 2 || !is_nondegenerate(&g)? {
        return Err(Error::NotSplit);
    }
    let h_a = hilbert_function(f)?;
    let hilbert_drop = h_a[1] as i64 - h_a.get(2).copied().unwrap_or(0) as i64;
    let m = g_vars.len();
    Ok(QuadricReduction { g, g_vars, quadric_vars, n, m, h: n - m, hilbert_drop })
}

/// How a closed form was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormSource {
    /// `n <= 1`: `A = k[x]/(x^(s+1))`.
    EmbeddingDimensionOne,
    /// `Ann(F)` has `n` minimal generators: `1/(1-z)^n`.
    CompleteIntersection,
    /// Quadric reduction onto a part with a known closed form.
    QuadricReduction,
}

impl ClosedFormSource {
    pub fn describe(&self) -> &'static str {
        match self {
            ClosedFormSource::EmbeddingDimensionOne => "embedding dimension 1",
            ClosedFormSource::CompleteIntersection => "complete intersection",
            ClosedFormSource::QuadricReduction => "quadric reduction",
        }
    }
}

/// A closed form for `P_A`, `A = S/Ann(F)`, when the reduction chain determines one.
pub fn closed_form(f: &Polynomial) -> Result<Option<(RationalFunction, ClosedFormSource)>> {
    let n = f.nvars();
    if n <= 1 {
        return Ok(Some((RationalFunction::complete_intersection(n), ClosedFormSource::EmbeddingDimensionOne)));
    }
    if annihilator(f)?.minimal_generators().len() == n {
        return Ok(Some((RationalFunction::complete_intersection(n), ClosedFormSource::CompleteIntersection)));
    }
    let red = match reduce_quadrics(f) {
        Ok(r) if r.h > 0 => r,
        Ok(_) | Err(Error::NotSplit) => return Ok(None),
        Err(e) => return Err(e),
    };
    if red.m <= 1 {
        let p_d = RationalFunction::complete_intersection(1);
        let p = chain_through_socle_quotient(&p_d, red.h)?;
        return Ok(Some((p, ClosedFormSource::QuadricReduction)));
    }
    match closed_form(&red.g)? {
        Some((p_b, _)) => Ok(Some((quotient_formula(&p_b, red.h)?, ClosedFormSource::QuadricReduction))),
        None => Ok(None),
    }
}

/// Prediction for `P_A` checked against the resolution oracle.
#[derive(Clone, Debug)]
pub struct Prediction {
    pub closed_form: Option<RationalFunction>,
    pub source: Option<ClosedFormSource>,
    pub reduction: Option<QuadricReduction>,
    /// Oracle series of `A`.
    pub oracle: TruncatedSeries,
    /// Oracle series of `B = S/Ann(G)` when only a relation is available.
    pub oracle_b: Option<TruncatedSeries>,
    /// The series implied by the closed form or by the relation applied to `oracle_b`.
    pub predicted: Option<TruncatedSeries>,
    /// `None` when there is nothing to compare.
    pub consistent: Option<bool>,
}

pub fn predict(f: &Polynomial, pmax: usize) -> Result<Prediction> {
    let a = algebra_from_inverse_system(f)?;
    let oracle = betti_numbers(&a, pmax)?;
    let reduction = match reduce_quadrics(f) {
        Ok(r) => Some(r),
        Err(Error::NotSplit) => None,
        Err(e) => return Err(e),
    };
    let (closed, source) = match closed_form(f)? {
        Some((p, s)) => (Some(p), Some(s)),
        None => (None, None),
    };
    let mut oracle_b = None;
    let predicted = if let Some(p) = &closed {
        Some(p.series(pmax)?)
    } else if let Some(r) = reduction.as_ref().filter(|r| r.h > 0) {
        let b = betti_numbers(&algebra_from_inverse_system(&r.g)?, pmax)?;
        let p = quotient_formula(&b, r.h)?;
        oracle_b = Some(b);
        Some(p)
    } else {
        None
    };
    let consistent = predicted.as_ref().map(|p| *p == oracle);
    Ok(Prediction { closed_form: closed, source, reduction, oracle, oracle_b, predicted, consistent })
}

/// `1/(1 - n z + z^2)`.
pub fn stretched_series(n: usize) -> RationalFunction {
    RationalFunction::new(vec![Rational::ONE], vec![Rational::ONE, Rational::from_int(-(n as i64)), Rational::ONE])
        .expect("constant term 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::from_i64(num, den).unwrap()
    }

    fn counts(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn socle_formula_examples() {
        assert_eq!(socle_formula(&rf(&[1], &[1, -2])).unwrap(), rf(&[1], &[1, -2, 1]));
        assert_eq!(socle_formula(&RationalFunction::one()).unwrap(), rf(&[1], &[1, 0, 1]));
        let t = TruncatedSeries::from_counts(&[1, 2, 4, 8]);
        assert_eq!(counts(&socle_formula(&t).unwrap()), vec![1, 2, 3, 4]);
        let p = rf(&[1], &[1, -3, 1]);
        assert_eq!(socle_formula(&socle_formula_inverse(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn quotient_formula_examples() {
        let geo = rf(&[1], &[1, -1]);
        assert_eq!(quotient_formula(&geo, 1).unwrap(), rf(&[1], &[1, -2]));
        assert_eq!(quotient_formula(&geo, 0).unwrap(), geo);
        assert_eq!(quotient_formula(&geo, 4).unwrap(), rf(&[1], &[1, -5]));
        let p = rf(&[1, 1], &[1, -3, 1]);
        assert_eq!(quotient_formula_inverse(&quotient_formula(&p, 2).unwrap(), 2).unwrap(), p);
    }

    #[test]
    fn quadric_reductions() {
        let r = reduce_quadrics(&parse("y1^3 + y2^2 + y3^2", 3).unwrap()).unwrap();
        assert_eq!((r.m, r.h, r.g_vars.clone()), (1, 2, vec![0]));
        assert_eq!(r.g, parse("y1^3", 1).unwrap());
        assert!(r.hilbert_drop_matches());

        let r = reduce_quadrics(&parse("y1^3 + y2^3 + y3^2", 3).unwrap()).unwrap();
        assert_eq!((r.m, r.h), (2, 1));

        let r = reduce_quadrics(&parse("y1^3 + y2^3", 2).unwrap()).unwrap();
        assert_eq!(r.h, 0);
        assert_eq!(r.relation_text(), "P_A = P_B");

        // G = y1^4 + (y1 + y2)^2 is stretched, so H_B(2) = 1 < m = 2 and
        // H_A(1) - H_A(2) = 2 overcounts the single split quadric.
        let f = parse("y1^4 + y1^2 + 2*y1*y2 + y2^2 + y3^2", 3).unwrap();
        let r = reduce_quadrics(&f).unwrap();
        assert_eq!((r.m, r.h, r.hilbert_drop), (2, 1, 2));
        assert!(!r.hilbert_drop_matches());
        let p = predict(&f, 6).unwrap();
        assert_eq!(p.closed_form, Some(stretched_series(3)));
        assert_eq!(p.consistent, Some(true));
    }

    #[test]
    fn closed_forms() {
        let f = parse("y1^3 + y2^2 + y3^2", 3).unwrap();
        let (p, src) = closed_form(&f).unwrap().unwrap();
        assert_eq!(p, stretched_series(3));
        assert_eq!(src, ClosedFormSource::QuadricReduction);
        let (p, src) = closed_form(&parse("y1^2 + y2^2", 2).unwrap()).unwrap().unwrap();
        assert_eq!(p, RationalFunction::complete_intersection(2));
        assert_eq!(src, ClosedFormSource::CompleteIntersection);
        let (p, _) = closed_form(&parse("y1^3 + y2^3 + y3^2", 3).unwrap()).unwrap().unwrap();
        assert_eq!(p, rf(&[1], &[1, -3, 1]));
    }

    #[test]
    fn predictions_agree_with_oracle() {
        for (f, n) in [("y1^4 + y2^2 + y3^2", 3), ("y1^2 + y2^2", 2), ("y1^3 + y2^3 + y1*y2*y3 + y4^2", 4)] {
            let p = predict(&parse(f, n).unwrap(), 5).unwrap();
            assert_eq!(p.consistent, Some(true), "{f}");
        }
        let p = predict(&parse("y1^3 + y2^3 + y3^3 + y4^3 + y5^2", 5).unwrap(), 4).unwrap();
        assert!(p.closed_form.is_none());
        assert!(p.oracle_b.is_some());
        assert_eq!(p.consistent, Some(true));
    }
}
