//! Exhaustive enumeration of symmetric decomposition tables.
//!
//! A table for socle degree `s` has rows `a = 0..=s-2`; row `a` has entries
//! in degrees `0..=s-a`, is symmetric about `(s-a)/2`, row 0 starts and ends
//! with 1 and every other row vanishes at both ends. A table is admissible
//! when every partial sum of rows is an O-sequence, its total is at most
//! `max_dim` and `H(2) <= max_h2`.

use crate::apolar::capital_degree_of;
use crate::growth::is_o_sequence;
use crate::{Error, HilbertVector, Result};

/// One admissible table and what it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTable {
    pub s: usize,
    pub rows: Vec<HilbertVector>,
    pub hilbert: HilbertVector,
    pub dim: usize,
    pub f3: usize,
    pub capital_degree: usize,
}

impl DecompositionTable {
    pub fn f3_at_most_4(&self) -> bool {
        self.f3 <= 4
    }

    pub fn low_capital_degree(&self) -> bool {
        self.capital_degree <= 3
    }

    /// `f_3 <= 4` or `cdeg <= 3`.
    pub fn covered(&self) -> bool {
        self.f3_at_most_4() || self.low_capital_degree()
    }

    /// `H_{Q(0)}(1)`.
    pub fn a1(&self) -> usize {
        self.rows[0][1]
    }
}

struct Search {
    s: usize,
    max_dim: usize,
    max_h2: usize,
    out: Vec<DecompositionTable>,
}

impl Search {
    fn prefix_ok(&self, partial: &[usize], dim: usize) -> bool {
        dim <= self.max_dim && partial[2] <= self.max_h2 && is_o_sequence(partial)
    }

    fn rows(&mut self, a: usize, rows: &mut Vec<HilbertVector>, partial: &mut HilbertVector, dim: usize) {
        if a + 1 == self.s {
            self.finish(rows, partial, dim);
            return;
        }
        let len = self.s - a;
        let mut row = vec![0; len + 1];
        if a == 0 {
            row[0] = 1;
            row[len] = 1;
        }
        self.entries(a, 1, &mut row, rows, partial, dim);
    }

    /// Chooses `row[i] = row[len - i]` for `i = i..=len/2`.
    fn entries(
        &mut self,
        a: usize,
        i: usize,
        row: &mut HilbertVector,
        rows: &mut Vec<HilbertVector>,
        partial: &mut HilbertVector,
        dim: usize,
    ) {
        let len = row.len() - 1;
        let row_dim: usize = row.iter().sum();
        if i > len / 2 {
            for (j, x) in row.iter().enumerate() {
                partial[j] += x;
            }
            if self.prefix_ok(partial, dim + row_dim) {
                rows.push(row.clone());
                self.rows(a + 1, rows, partial, dim + row_dim);
                rows.pop();
            }
            for (j, x) in row.iter().enumerate() {
                partial[j] -= x;
            }
            return;
        }
        let weight = if 2 * i == len { 1 } else { 2 };
        let mut v = 0;
        while dim + row_dim + weight * v <= self.max_dim {
            if (i == 2 || len - i == 2) && partial[2] + v > self.max_h2 {
                break;
            }
            row[i] = v;
            row[len - i] = v;
            self.entries(a, i + 1, row, rows, partial, dim);
            v += 1;
        }
        row[i] = 0;
        row[len - i] = 0;
    }

    fn finish(&mut self, rows: &[HilbertVector], total: &[usize], dim: usize) {
        let f3 = (0..=self.s - 3).map(|a| rows[a][1]).sum();
        self.out.push(DecompositionTable {
            s: self.s,
            rows: rows.to_vec(),
            hilbert: total.to_vec(),
            dim,
            f3,
            capital_degree: capital_degree_of(total),
        });
    }
}

/// Every admissible table with socle degree `s >= 3`, in lexicographic order of rows.
pub fn enumerate_decompositions(s: usize, max_dim: usize, max_h2: usize) -> Result<Vec<DecompositionTable>> {
    if s < 3 {
        return Err(Error::Precondition {
            statement: "decomposition enumeration",
            detail: format!("socle degree {s} < 3"),
        });
    }
    let mut search = Search { s, max_dim, max_h2, out: Vec::new() };
    let mut partial = vec![0; s + 1];
    search.rows(0, &mut Vec::new(), &mut partial, 0);
    Ok(search.out)
}

/// Tables violating both `f_3 <= 4` and `cdeg <= 3`; empty when the dichotomy holds.
pub fn uncovered_tables(s: usize, max_dim: usize, max_h2: usize) -> Result<Vec<DecompositionTable>> {
    Ok(enumerate_decompositions(s, max_dim, max_h2)?.into_iter().filter(|d| !d.covered()).collect())
}

/// Least total over tables with `H_{Q(0)}(1) >= a1`, searching totals up to `cap`.
pub fn least_dim_with_a1(s: usize, a1: usize, max_h2: usize, cap: usize) -> Result<Option<usize>> {
    Ok(enumerate_decompositions(s, cap, max_h2)?.iter().filter(|d| d.a1() >= a1).map(|d| d.dim).min())
}

/// Tables with `H_{Q(0)}(1) = 1` and `f_3 >= 5`, with `H(2)` unrestricted.
pub fn stretched_row_exceptions(s: usize, max_dim: usize) -> Result<Vec<DecompositionTable>> {
    Ok(enumerate_decompositions(s, max_dim, max_dim)?.into_iter().filter(|d| d.a1() == 1 && d.f3 >= 5).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn socle_degree_three_tables() {
        let t = enumerate_decompositions(3, 8, 4).unwrap();
        assert!(t.iter().any(|d| d.hilbert == vec![1, 2, 1, 1]));
        assert!(t.iter().all(|d| d.rows.len() == 2 && d.dim == d.hilbert.iter().sum::<usize>()));
        assert!(t.iter().all(|d| d.hilbert[1] >= d.hilbert[2]));
    }

    #[test]
    fn rows_are_symmetric_and_vanish() {
        for d in enumerate_decompositions(5, 16, 4).unwrap() {
            for (a, r) in d.rows.iter().enumerate() {
                let len = 5 - a;
                assert_eq!(r.len(), len + 1);
                assert!((0..=len).all(|i| r[i] == r[len - i]));
                assert_eq!(r[0], usize::from(a == 0));
            }
        }
    }

    #[test]
    fn dichotomy_holds_up_to_dimension_16() {
        for s in 4..=9 {
            assert!(!enumerate_decompositions(s, 16, 4).unwrap().is_empty());
            assert!(uncovered_tables(s, 16, 4).unwrap().is_empty(), "s = {s}");
        }
    }

    #[test]
    fn wide_first_row_exceeds_16() {
        assert_eq!(least_dim_with_a1(6, 3, 4, 20).unwrap(), Some(17));
    }

    #[test]
    fn one_dimensional_first_row_forces_large_h2() {
        let ex = stretched_row_exceptions(7, 16).unwrap();
        assert_eq!(ex.len(), 1);
        assert_eq!(ex[0].rows[4], vec![0, 4, 4, 0]);
        assert_eq!(ex[0].hilbert[2], 5);
        for s in 8..=9 {
            assert!(stretched_row_exceptions(s, 16).unwrap().iter().all(|d| d.hilbert[2] >= 5));
        }
    }

    #[test]
    fn small_socle_degree_is_rejected() {
        assert!(enumerate_decompositions(2, 16, 4).is_err());
    }
}
