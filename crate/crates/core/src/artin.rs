//! Finite-dimensional local algebras given by structure constants.
//!
//! Elements are dense coordinate vectors over a fixed basis. The basis always
//! contains the unit, and the maximal ideal is the span of the remaining basis
//! vectors; quotients preserve this shape.

use crate::apolar::{check_normalized, contract, sparse_coords};
use crate::exact::sparse::{to_dense, to_sparse, SparseVec};
use crate::exact::{kernel, Echelon, Matrix, Rational, Subspace};
use crate::poly::{MonomialBasis, Polynomial};
use crate::{Error, HilbertVector, Result};

/// A commutative local algebra `A` with `dim A < ∞` over Q.
#[derive(Clone, Debug)]
pub struct FiniteLocalAlgebra {
    labels: Vec<String>,
    /// `mult[i * dim + j] = e_i * e_j`.
    mult: Vec<SparseVec>,
    unit: usize,
    maximal_ideal: Subspace,
    variables: Vec<Vec<Rational>>,
}

impl FiniteLocalAlgebra {
    /// Builds an algebra from structure constants and checks it is commutative,
    /// associative and unital, and that the non-unit basis vectors span a
    /// nilpotent ideal.
    pub fn from_structure(
        labels: Vec<String>,
        mult: Vec<SparseVec>,
        unit: usize,
        variables: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let dim = labels.len();
        if mult.len() != dim * dim || unit >= dim {
            return Err(Error::Invariant("structure table has the wrong shape".into()));
        }
        let maximal_ideal = Subspace::coordinate(dim, (0..dim).filter(|&i| i != unit));
        let a = FiniteLocalAlgebra { labels, mult, unit, maximal_ideal, variables };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            let mut e = vec![Rational::ZERO; d];
            e[i] = Rational::ONE;
            if to_dense(self.basis_product(self.unit, i), d) != e {
                return Err(Error::Invariant(format!("basis element {i} is not fixed by the unit")));
            }
            for j in 0..i {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return Err(Error::Invariant(format!("e_{i} e_{j} != e_{j} e_{i}")));
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let left = self.mul_sparse_basis(self.basis_product(i, j), k);
                    let right = self.mul_sparse_basis(self.basis_product(j, k), i);
                    if left != right {
                        return Err(Error::Invariant(format!("(e_{i} e_{j}) e_{k} != e_{i} (e_{j} e_{k})")));
                    }
                }
            }
        }
        let m = &self.maximal_ideal;
        for i in (0..d).filter(|&i| i != self.unit) {
            for j in (0..d).filter(|&j| j != self.unit) {
                if !m.contains(&to_dense(self.basis_product(i, j), d)) {
                    return Err(Error::NotLocal);
                }
            }
        }
        if !self.ideal_power(d + 1).is_zero() {
            return Err(Error::NotLocal);
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn unit(&self) -> Vec<Rational> {
        let mut e = vec![Rational::ZERO; self.dim()];
        e[self.unit] = Rational::ONE;
        e
    }

    pub fn maximal_ideal(&self) -> &Subspace {
        &self.maximal_ideal
    }

    /// Images of `x_1..x_n`.
    pub fn variable_images(&self) -> &[Vec<Rational>] {
        &self.variables
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim() + j]
    }

    /// The coefficient of `e_k` in `e_i e_j`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.basis_product(i, j).iter().find(|(l, _)| *l == k).map_or(Rational::ZERO, |(_, c)| c.clone())
    }

    fn mul_sparse_basis(&self, v: &SparseVec, k: usize) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; self.dim()];
        for (i, c) in v {
            for (l, x) in self.basis_product(*i, k) {
                out[*l] += &(c * x);
            }
        }
        out
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; self.dim()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    /// Span of all products `u * v` with `u` in `left`, `v` in `right`.
    pub fn product_span(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        let rb = right.basis_vectors();
        for u in left.basis_vectors() {
            for v in &rb {
                rows.push(self.mul(&u, v));
            }
        }
        Subspace::from_vectors(self.dim(), rows)
    }

    /// `m^j`, with `m^0 = A`.
    pub fn ideal_power(&self, j: usize) -> Subspace {
        if j == 0 {
            return Subspace::full(self.dim());
        }
        let mut p = self.maximal_ideal.clone();
        for _ in 1..j {
            if p.is_zero() {
                break;
            }
            p = self.product_span(&self.maximal_ideal, &p);
        }
        p
    }

    /// All powers `m^0, m^1, ..., m^(t+1)` where `m^(t+1) = 0`.
    pub fn ideal_powers(&self) -> Vec<Subspace> {
        let mut out = vec![Subspace::full(self.dim()), self.maximal_ideal.clone()];
        while !out.last().expect("nonempty").is_zero() {
            let next = self.product_span(&self.maximal_ideal, out.last().expect("nonempty"));
            out.push(next);
        }
        out
    }

    /// `{a : a * sub = 0}`.
    pub fn annihilator_of(&self, sub: &Subspace) -> Subspace {
        let d = self.dim();
        let mut rows = Vec::new();
        for v in sub.basis_vectors() {
            // Row k of the map a ↦ a * v.
            let cols: Vec<Vec<Rational>> = (0..d)
                .map(|i| {
                    let mut e = vec![Rational::ZERO; d];
                    e[i] = Rational::ONE;
                    self.mul(&e, &v)
                })
                .collect();
            for k in 0..d {
                rows.push(cols.iter().map(|c| c[k].clone()).collect());
            }
        }
        if rows.is_empty() {
            return Subspace::full(d);
        }
        kernel(&Matrix::from_rows(d, rows))
    }

    /// `(0 : m^j)`; zero for `j = 0`.
    pub fn colon_of_power(&self, j: usize) -> Subspace {
        self.annihilator_of(&self.ideal_power(j))
    }

    pub fn socle(&self) -> Subspace {
        self.colon_of_power(1)
    }

    pub fn is_gorenstein(&self) -> bool {
        self.socle().dim() == 1
    }

    /// Largest `t` with `m^t != 0`.
    pub fn socle_degree(&self) -> usize {
        self.ideal_powers().len() - 2
    }

    /// Embedding dimension `dim m / m^2`.
    pub fn embedding_dim(&self) -> usize {
        self.associated_graded_hilbert().get(1).copied().unwrap_or(0)
    }

    /// `H(t) = dim m^t / m^(t+1)`.
    pub fn associated_graded_hilbert(&self) -> HilbertVector {
        let p = self.ideal_powers();
        (0..p.len() - 1).map(|t| p[t].dim() - p[t + 1].dim()).filter(|&h| h > 0).collect()
    }

    /// The ideal generated by `elements`: `span{e * b}`.
    pub fn ideal_generated(&self, elements: &[Vec<Rational>]) -> Subspace {
        let d = self.dim();
        let mut rows = Vec::new();
        for e in elements {
            for i in 0..d {
                let mut b = vec![Rational::ZERO; d];
                b[i] = Rational::ONE;
                rows.push(self.mul(e, &b));
            }
        }
        Subspace::from_vectors(d, rows)
    }

    /// `A / (elements)`.
    pub fn quotient_algebra(&self, elements: &[Vec<Rational>]) -> Result<FiniteLocalAlgebra> {
        let ideal = self.ideal_generated(elements);
        self.quotient_by(&ideal)
    }

    /// `A / I` for an ideal `I` given as a subspace.
    pub fn quotient_by(&self, ideal: &Subspace) -> Result<FiniteLocalAlgebra> {
        if !self.maximal_ideal.contains_subspace(ideal) {
            return Err(Error::UnitIdeal);
        }
        let d = self.dim();
        let mut is_pivot = vec![false; d];
        for &p in ideal.pivots() {
            is_pivot[p] = true;
        }
        let keep: Vec<usize> = (0..d).filter(|&i| !is_pivot[i]).collect();
        let mut new_index = vec![usize::MAX; d];
        for (k, &i) in keep.iter().enumerate() {
            new_index[i] = k;
        }
        let project = |v: &[Rational]| -> Vec<Rational> {
            let r = ideal.reduce(v);
            keep.iter().map(|&i| r[i].clone()).collect()
        };
        let mut mult = Vec::with_capacity(keep.len() * keep.len());
        for &i in &keep {
            for &j in &keep {
                mult.push(to_sparse(&project(&to_dense(self.basis_product(i, j), d))));
            }
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let variables = self.variables.iter().map(|v| project(v)).collect();
        FiniteLocalAlgebra::from_structure(labels, mult, new_index[self.unit], variables)
    }

    /// `A / Soc(A)`.
    pub fn modulo_socle(&self) -> Result<FiniteLocalAlgebra> {
        self.quotient_by(&self.socle())
    }

    /// Left multiplication by `v` as a matrix acting on column vectors.
    pub fn multiplication_matrix(&self, v: &[Rational]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for i in 0..d {
            let mut e = vec![Rational::ZERO; d];
            e[i] = Rational::ONE;
            for (k, c) in self.mul(v, &e).into_iter().enumerate() {
                m[(k, i)] = c;
            }
        }
        m
    }
}

/// `A = S / Ann(F)` with basis `x^a` chosen greedily in increasing degree.
pub fn algebra_from_inverse_system(f: &Polynomial) -> Result<FiniteLocalAlgebra> {
    check_normalized(f)?;
    let s = f.degree().ok_or(Error::ZeroPolynomial)?;
    let n = f.nvars();
    let h1 = crate::apolar::hilbert_function(f)?.get(1).copied().unwrap_or(0);
    if s >= 1 && h1 < n {
        return Err(Error::Degenerate { h1, nvars: n });
    }
    let p_coords = MonomialBasis::descending(n, s);
    let s_coords = MonomialBasis::ascending(n, s);
    let mut ech = Echelon::with_tracking(p_coords.len());
    let mut basis = Vec::new();
    for m in s_coords.monomials() {
        let g = contract(&Polynomial::monomial(n, m.clone(), Rational::ONE), f)?;
        if g.is_zero() {
            continue;
        }
        let v = sparse_coords(&g, &p_coords);
        if !ech.contains(v.clone()) {
            ech.insert(v);
            basis.push(m.clone());
        }
    }
    let d = basis.len();
    let express = |p: &Polynomial| -> Result<SparseVec> {
        if p.is_zero() {
            return Ok(Vec::new());
        }
        ech.express(sparse_coords(p, &p_coords))
            .ok_or_else(|| Error::Invariant("derivative outside the inverse system".into()))
    };
    let mut mult = Vec::with_capacity(d * d);
    for a in &basis {
        for b in &basis {
            let g = contract(&Polynomial::monomial(n, a.mul(b), Rational::ONE), f)?;
            mult.push(express(&g)?);
        }
    }
    let variables = (0..n)
        .map(|i| express(&contract(&Polynomial::var(n, i), f)?).map(|v| to_dense(&v, d)))
        .collect::<Result<_>>()?;
    let labels =
        basis.iter().map(|m| Polynomial::monomial(n, m.clone(), Rational::ONE).display_as('x').to_string()).collect();
    // The constant monomial comes first in increasing degree order.
    FiniteLocalAlgebra::from_structure(labels, mult, 0, variables)
}

/// Iarrobino's symmetric decomposition of `gr(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricDecomposition {
    pub s: usize,
    /// `rows[a]` is the Hilbert function of `Q(a)`, of length `s - a + 1`.
    pub rows: Vec<HilbertVector>,
    pub total: HilbertVector,
    /// `f[h - 2] = f_h` for `h = 2..=s`.
    pub f: Vec<usize>,
}

impl SymmetricDecomposition {
    /// `f_h`, or `None` outside `2..=s`.
    pub fn f_h(&self, h: usize) -> Option<usize> {
        if h < 2 {
            return None;
        }
        self.f.get(h - 2).copied()
    }

    /// `H_{Q(a)}(i)`, zero outside the table.
    pub fn entry(&self, a: usize, i: usize) -> usize {
        self.rows.get(a).and_then(|r| r.get(i)).copied().unwrap_or(0)
    }

    /// Checks the sum, symmetry and vanishing properties; `Err` names the first failure.
    pub fn check(&self) -> Result<()> {
        let s = self.s;
        for i in 0..self.total.len() {
            let sum: usize = (0..self.rows.len()).map(|a| self.entry(a, i)).sum();
            if sum != self.total[i] {
                return Err(Error::Invariant(format!("rows sum to {sum} != H({i}) = {}", self.total[i])));
            }
        }
        for (a, row) in self.rows.iter().enumerate() {
            if s < 2 {
                break;
            }
            for i in 0..=(s - a) {
                if self.entry(a, i) != self.entry(a, s - a - i) {
                    return Err(Error::Invariant(format!("row {a} is not symmetric about {}/2", s - a)));
                }
            }
            if a >= 1 && (row[0] != 0 || row[s - a] != 0) {
                return Err(Error::Invariant(format!("row {a} does not vanish at 0 and {}", s - a)));
            }
        }
        Ok(())
    }
}

/// Hilbert functions of `Q(a) = C(a)/C(a+1)` where
/// `C(a)_i = ((0 : m^(s+1-a-i)) ∩ m^i + m^(i+1)) / m^(i+1)`.
pub fn symmetric_decomposition(alg: &FiniteLocalAlgebra) -> Result<SymmetricDecomposition> {
    let socle_dim = alg.socle().dim();
    if socle_dim != 1 {
        return Err(Error::NotGorenstein { socle_dim });
    }
    let powers = alg.ideal_powers();
    let s = powers.len() - 2;
    let total: HilbertVector = (0..=s).map(|t| powers[t].dim() - powers[t + 1].dim()).collect();
    if s < 2 {
        let dec = SymmetricDecomposition { s, rows: vec![total.clone()], total, f: Vec::new() };
        return Ok(dec);
    }
    let power = |t: usize| powers.get(t).cloned().unwrap_or_else(|| Subspace::zero(alg.dim()));
    let colons: Vec<Subspace> = (0..=s + 1).map(|j| alg.annihilator_of(&power(j))).collect();
    // c[a][i] = dim C(a)_i for a = 0..=s-1.
    let c: Vec<Vec<usize>> = (0..s)
        .map(|a| {
            (0..=s)
                .map(|i| {
                    let j = (s + 1) as isize - a as isize - i as isize;
                    let colon = if j <= 0 { Subspace::zero(alg.dim()) } else { colons[j as usize].clone() };
                    let lower = power(i + 1);
                    let top = colon.intersect(&power(i)).and_then(|x| x.sum(&lower)).expect("same ambient");
                    top.dim() - lower.dim()
                })
                .collect()
        })
        .collect();
    let rows: Vec<HilbertVector> = (0..=s - 2).map(|a| (0..=s - a).map(|i| c[a][i] - c[a + 1][i]).collect()).collect();
    let f = (2..=s).map(|h| (0..=s - h).map(|a| rows[a].get(1).copied().unwrap_or(0)).sum()).collect();
    let dec = SymmetricDecomposition { s, rows, total, f };
    dec.check()?;
    Ok(dec)
}

/// Hilbert function of `A = S/Ann(F)` read from the associated graded algebra.
pub fn associated_graded_hilbert(alg: &FiniteLocalAlgebra) -> HilbertVector {
    alg.associated_graded_hilbert()
}

/// The decomposition of `B = S/Ann(F_{>=h})`.
pub fn decomposition_of_tail(f: &Polynomial, h: u32) -> Result<SymmetricDecomposition> {
    let tail = f.tail_from(h);
    if tail.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vars = tail.support_vars();
    let map: Vec<Option<usize>> = (0..tail.nvars()).map(|i| vars.iter().position(|&v| v == i)).collect();
    let local = tail.remap(vars.len(), &map)?;
    symmetric_decomposition(&algebra_from_inverse_system(&local)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn alg(s: &str, n: usize) -> FiniteLocalAlgebra {
        algebra_from_inverse_system(&parse(s, n).unwrap()).unwrap()
    }

    fn label_index(a: &FiniteLocalAlgebra, l: &str) -> usize {
        a.labels().iter().position(|x| x == l).unwrap()
    }

    fn e(a: &FiniteLocalAlgebra, l: &str) -> Vec<Rational> {
        let mut v = vec![Rational::ZERO; a.dim()];
        v[label_index(a, l)] = Rational::ONE;
        v
    }

    #[test]
    fn truncated_polynomial_ring() {
        let a = alg("y1^2", 1);
        assert_eq!(a.dim(), 3);
        assert_eq!(a.mul(&e(&a, "x1"), &e(&a, "x1")), e(&a, "x1^2"));
        assert!(a.mul(&e(&a, "x1"), &e(&a, "x1^2")).iter().all(Rational::is_zero));
        assert_eq!(a.socle(), Subspace::from_vectors(3, vec![e(&a, "x1^2")]));
        assert_eq!(a.ideal_power(2), Subspace::from_vectors(3, vec![e(&a, "x1^2")]));
    }

    #[test]
    fn sum_of_two_squares() {
        let a = alg("y1^2 + y2^2", 2);
        assert_eq!(a.dim(), 4);
        let (x1, x2) = (e(&a, "x1"), e(&a, "x2"));
        assert!(a.mul(&x1, &x2).iter().all(Rational::is_zero));
        let sq = a.mul(&x1, &x1);
        assert!(!sq.iter().all(Rational::is_zero));
        assert_eq!(sq, a.mul(&x2, &x2));
        assert!(a.is_gorenstein());
        assert_eq!(a.socle(), Subspace::from_vectors(4, vec![sq]));
    }

    #[test]
    fn socle_relation() {
        let a = alg("y1^3 + y2^2", 2);
        assert_eq!(a.dim(), 5);
        let x1 = e(&a, "x1");
        let x1_3 = a.mul(&a.mul(&x1, &x1), &x1);
        let x2_2 = a.mul(&e(&a, "x2"), &e(&a, "x2"));
        assert_eq!(x1_3, x2_2.iter().map(|c| c * &Rational::from_int(3)).collect::<Vec<_>>());
        assert_eq!(a.colon_of_power(1).dim(), 1);
        assert_eq!(a.associated_graded_hilbert(), vec![1, 2, 1, 1]);
    }

    #[test]
    fn quotients() {
        let a = alg("y1^2 + y2^2", 2);
        let q = a.modulo_socle().unwrap();
        assert_eq!(q.dim(), 3);
        assert!(q.ideal_power(2).is_zero());
        assert_eq!(q.associated_graded_hilbert(), vec![1, 2]);
        let k = a.quotient_algebra(a.variable_images()).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(a.quotient_algebra(&[a.unit()]).unwrap_err(), Error::UnitIdeal);

        let b = alg("y1^3 + y2^2 + y3^2", 3);
        let sigma: Vec<Rational> = a_sigma(&b);
        let vars = b.variable_images();
        let c = b.quotient_algebra(&[vars[1].clone(), vars[2].clone(), sigma]).unwrap();
        assert_eq!(c.dim(), 3);
        assert_eq!(c.associated_graded_hilbert(), vec![1, 1, 1]);
    }

    fn a_sigma(b: &FiniteLocalAlgebra) -> Vec<Rational> {
        // σ = x1^3 / 6
        let x1 = &b.variable_images()[0];
        b.mul(&b.mul(x1, x1), x1).iter().map(|c| c * &Rational::new(1, 6)).collect()
    }

    #[test]
    fn graded_hilbert_examples() {
        assert_eq!(alg("y1^3 + y2^3", 2).associated_graded_hilbert(), vec![1, 2, 2, 1]);
        let k = alg("y1", 1).quotient_algebra(&[alg("y1", 1).variable_images()[0].clone()]).unwrap();
        assert_eq!(k.associated_graded_hilbert(), vec![1]);
    }

    #[test]
    fn decomposition_examples() {
        let d = symmetric_decomposition(&alg("y1^4 + y2^2", 2)).unwrap();
        assert_eq!(d.rows, vec![vec![1, 1, 1, 1, 1], vec![0, 0, 0, 0], vec![0, 1, 0]]);
        assert_eq!(d.f, vec![2, 1, 1]);
        let d = symmetric_decomposition(&alg("y1^3 + y2^3 + y3^2", 3)).unwrap();
        assert_eq!(d.rows, vec![vec![1, 2, 2, 1], vec![0, 1, 0]]);
        let d = symmetric_decomposition(&alg("y1^3 + y2^3 + y1*y2*y3", 3)).unwrap();
        assert_eq!(d.rows[0], d.total);
        assert!(d.rows[1..].iter().all(|r| r.iter().all(|&x| x == 0)));
    }

    #[test]
    fn tail_decompositions() {
        let f = parse("y1^4 + y2^3", 2).unwrap();
        let a = symmetric_decomposition(&algebra_from_inverse_system(&f).unwrap()).unwrap();
        let b = decomposition_of_tail(&f, 4).unwrap();
        assert_eq!(a.rows[0], b.rows[0]);
        assert_eq!(b.rows[0], vec![1; 5]);

        let f = parse("y1^5 + y2^4 + y3^2", 3).unwrap();
        let a = symmetric_decomposition(&algebra_from_inverse_system(&f).unwrap()).unwrap();
        let b = decomposition_of_tail(&f, 4).unwrap();
        for k in 0..=1 {
            assert_eq!(a.rows[k], b.rows[k]);
        }
        assert_eq!(decomposition_of_tail(&f, 6).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn non_gorenstein_is_rejected() {
        // k[x1, x2] / m^2 has a 2-dimensional socle.
        let a = alg("y1^2 + y2^2", 2).modulo_socle().unwrap();
        assert_eq!(symmetric_decomposition(&a).unwrap_err(), Error::NotGorenstein { socle_dim: 2 });
    }

    #[test]
    fn degenerate_input_is_rejected() {
        let f = parse("y1^3", 2).unwrap();
        assert!(matches!(algebra_from_inverse_system(&f), Err(Error::Degenerate { .. })));
    }
}
