use std::collections::HashMap;

use super::Monomial;

/// All monomials of degree `d` in `n` variables, in decreasing lex order
/// (`x1^d` first).
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(n, 0, d, &mut vec![0; n], &mut out);
    out
}

/// A coordinatization of a span of monomials, grouped by degree.
///
/// The degree blocks appear in the order given at construction. This lets the
/// S-side use increasing degrees (so echelon pivots pick out lower degree
/// forms) and the P-side use decreasing degrees (pivots pick out top degree
/// forms).
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    nvars: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    blocks: Vec<(u32, std::ops::Range<usize>)>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degrees: impl IntoIterator<Item = u32>) -> Self {
        let mut monomials = Vec::new();
        let mut blocks = Vec::new();
        for d in degrees {
            let start = monomials.len();
            monomials.extend(monomials_of_degree(nvars, d));
            blocks.push((d, start..monomials.len()));
        }
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialBasis { nvars, monomials, index, blocks }
    }

    /// Degrees `0..=d` ascending.
    pub fn ascending(nvars: usize, d: u32) -> Self {
        Self::new(nvars, 0..=d)
    }

    /// Degrees `d..=0` descending.
    pub fn descending(nvars: usize, d: u32) -> Self {
        Self::new(nvars, (0..=d).rev())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinate range of the degree-`d` block.
    pub fn block(&self, d: u32) -> std::ops::Range<usize> {
        self.blocks.iter().find(|(e, _)| *e == d).map_or(0..0, |(_, r)| r.clone())
    }

    pub fn degree_of(&self, i: usize) -> u32 {
        self.monomials[i].degree()
    }
}
