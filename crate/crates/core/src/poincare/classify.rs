//! Hypothesis checks for the known rationality criteria, read off `H_A`,
//! `dim A` and, when available, the symmetric decomposition.

use crate::apolar::capital_degree_of;
use crate::artin::{algebra_from_inverse_system, symmetric_decomposition, SymmetricDecomposition};
use crate::growth::o_sequence_violation;
use crate::{Error, HilbertVector, Polynomial, Result};

/// Which rationality criteria apply, with the data they were decided on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub hilbert: HilbertVector,
    pub dim: usize,
    pub socle_degree: usize,
    pub capital_degree: usize,
    pub stretched: bool,
    /// `H(t) = m <= 4` for `t = 2..=c` and `H(c+1) = 1`, some `c >= 1`.
    pub column_shape: bool,
    /// The `(m, c)` found; `m` is `None` when the column is empty (`c = 1`).
    pub column: Option<(Option<usize>, usize)>,
    /// `H(2) <= 4` and `dim A <= 16`.
    pub small_length: bool,
    /// `H(2) <= 4` and `cdeg <= 3`.
    pub low_capital_degree: bool,
    /// `H(i) = m <= 4` for `2 <= i <= cdeg`.
    pub constant_column: bool,
    /// `f_3`, known only when the decomposition was computed.
    pub f3: Option<usize>,
    /// `f_3 <= 4`; also decided from `H(1) <= 4` alone since `f_3 <= f_2 = H(1)`.
    pub f3_at_most_4: Option<bool>,
}

impl TheoremVerdict {
    /// True if any criterion applies.
    pub fn any(&self) -> bool {
        self.column_shape
            || self.small_length
            || self.low_capital_degree
            || self.constant_column
            || self.f3_at_most_4 == Some(true)
    }
}

fn h_at(h: &[usize], t: usize) -> usize {
    h.get(t).copied().unwrap_or(0)
}

fn column_witness(h: &[usize]) -> Option<(Option<usize>, usize)> {
    for c in 1..h.len() {
        if h_at(h, c + 1) != 1 {
            continue;
        }
        if c == 1 {
            return Some((None, 1));
        }
        let m = h[2];
        if m <= 4 && (2..=c).all(|t| h[t] == m) {
            return Some((Some(m), c));
        }
    }
    None
}

fn verdict(h: &[usize], dim: usize, f3: Option<usize>) -> TheoremVerdict {
    let cdeg = capital_degree_of(h);
    let h2 = h_at(h, 2);
    let column = column_witness(h);
    let constant_column = cdeg < 2 || ((2..=cdeg).all(|i| h[i] == h2) && h2 <= 4);
    let f3_at_most_4 = match f3 {
        Some(f) => Some(f <= 4),
        None if h_at(h, 1) <= 4 => Some(true),
        None => None,
    };
    TheoremVerdict {
        hilbert: h.to_vec(),
        dim,
        socle_degree: h.len().saturating_sub(1),
        capital_degree: cdeg,
        stretched: cdeg <= 1,
        column_shape: column.is_some(),
        column,
        small_length: h2 <= 4 && dim <= 16,
        low_capital_degree: h2 <= 4 && cdeg <= 3,
        constant_column,
        f3,
        f3_at_most_4,
    }
}

/// Classifies from a Hilbert function alone. `dim` defaults to `sum H`.
pub fn classify_hilbert(h: &[usize], dim: Option<usize>) -> Result<TheoremVerdict> {
    if let Some(d) = o_sequence_violation(h) {
        return Err(Error::NotOSequence(format!("{h:?} violates Macaulay's bound at degree {d}")));
    }
    let total: usize = h.iter().sum();
    if let Some(d) = dim {
        if d != total {
            return Err(Error::Precondition {
                statement: "dim A equals the sum of the Hilbert function",
                detail: format!("dim {d} but sum H = {total}"),
            });
        }
    }
    Ok(verdict(h, total, None))
}

/// Classifies `A = S/Ann(F)`, with `f_3` read from the symmetric decomposition.
pub fn classify_polynomial(f: &Polynomial) -> Result<(TheoremVerdict, SymmetricDecomposition)> {
    let alg = algebra_from_inverse_system(f)?;
    let dec = symmetric_decomposition(&alg)?;
    let f3 = dec.f_h(3).unwrap_or(0);
    Ok((verdict(&dec.total, alg.dim(), Some(f3)), dec))
}

/// Both sides of `sum_{a<=s-4} H_{Q(a)}(2) >= H(3)` for a 3-stretched algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnInequality {
    pub lhs: usize,
    pub rhs: usize,
}

impl ColumnInequality {
    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }
}

const THREE_STRETCHED: &str = "3-stretched Gorenstein with H(3) <= 5";

/// Evaluates the inequality on a decomposition whose algebra has `cdeg = 3` and `H(3) <= 5`.
pub fn three_stretched_inequality(dec: &SymmetricDecomposition) -> Result<ColumnInequality> {
    let cdeg = capital_degree_of(&dec.total);
    let h3 = h_at(&dec.total, 3);
    if cdeg != 3 || h3 > 5 {
        return Err(Error::Precondition {
            statement: THREE_STRETCHED,
            detail: format!("H = {:?}, cdeg = {cdeg}", dec.total),
        });
    }
    let lhs = (0..=dec.s - 4).map(|a| dec.entry(a, 2)).sum();
    Ok(ColumnInequality { lhs, rhs: h3 })
}

pub fn three_stretched_check(f: &Polynomial) -> Result<ColumnInequality> {
    let dec = symmetric_decomposition(&algebra_from_inverse_system(f)?)?;
    three_stretched_inequality(&dec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    #[test]
    fn bounded_length_example() {
        let v = classify_hilbert(&[1, 5, 4, 4, 1], Some(15)).unwrap();
        assert!(v.small_length);
        assert!(v.low_capital_degree);
        assert_eq!(v.capital_degree, 3);
        // H(2) = H(3) = 4 and H(4) = 1 is a column of height 4.
        assert!(v.column_shape);
        assert_eq!(v.column, Some((Some(4), 3)));
    }

    #[test]
    fn column_example() {
        let v = classify_hilbert(&[1, 6, 3, 3, 3, 1, 1], None).unwrap();
        assert!(v.column_shape);
        assert_eq!(v.column, Some((Some(3), 4)));
        assert!(v.constant_column);
        assert_eq!(v.dim, 18);
        assert!(!v.small_length);
    }

    #[test]
    fn stretched_example() {
        let v = classify_hilbert(&[1, 2, 1], None).unwrap();
        assert!(v.stretched && v.column_shape && v.constant_column);
        assert_eq!(v.column, Some((None, 1)));
        assert_eq!(v.f3_at_most_4, Some(true));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(classify_hilbert(&[1, 2, 4], None), Err(Error::NotOSequence(_))));
        assert!(matches!(classify_hilbert(&[1, 2, 1], Some(5)), Err(Error::Precondition { .. })));
    }

    #[test]
    fn large_column_fails() {
        let v = classify_hilbert(&[1, 5, 5, 5, 1], None).unwrap();
        assert!(!v.column_shape && !v.constant_column && !v.small_length);
        assert_eq!(v.f3_at_most_4, None);
    }

    #[test]
    fn from_polynomial() {
        let f = parse("y1^4 + y2^3 + y3^2", 3).unwrap();
        let (v, dec) = classify_polynomial(&f).unwrap();
        assert_eq!(v.hilbert, dec.total);
        assert_eq!(v.f3, dec.f_h(3));
        assert_eq!(v.dim, dec.total.iter().sum::<usize>());
    }

    #[test]
    fn homogeneous_quartic_reads_p_ge_m() {
        // A single row, so the inequality reads H(2) >= H(3).
        let f = parse("y1^4 + y2^4 + y3^4 + y1^2*y2*y3", 3).unwrap();
        let dec = symmetric_decomposition(&algebra_from_inverse_system(&f).unwrap()).unwrap();
        let c = three_stretched_inequality(&dec).unwrap();
        assert_eq!((c.lhs, c.rhs), (dec.total[2], dec.total[3]));
        assert!(c.holds());
    }

    #[test]
    fn constructed_three_stretched_instance() {
        let f = parse("y1^5 + y2^4 + y3^3 + y2*y3^2", 3).unwrap();
        let c = three_stretched_check(&f).unwrap();
        assert!(c.holds());
        assert!(three_stretched_check(&parse("y1^4 + y2^2", 2).unwrap()).is_err());
    }
}
