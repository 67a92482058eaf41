use super::{kernel, rref, Matrix, Rational};
use crate::Error;

/// A linear subspace of Q^n stored by its canonical RREF basis.
///
/// Two subspaces are equal iff their basis matrices are identical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the given vectors (each of length `ambient`).
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Rational>>) -> Self {
        Self::from_matrix(&Matrix::from_rows(ambient, vectors))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let r = rref(m);
        Subspace { ambient: m.cols(), basis: r.matrix, pivots: r.pivots }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vecs = indices
            .into_iter()
            .map(|i| {
                let mut v = vec![Rational::ZERO; ambient];
                v[i] = Rational::ONE;
                v
            })
            .collect();
        Self::from_vectors(ambient, vecs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    /// Reduces `v` against the canonical basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let f = w[p].clone();
            if f.is_zero() {
                continue;
            }
            for (j, x) in self.basis.row(i).iter().enumerate() {
                if !x.is_zero() {
                    w[j] = w[j].sub_mul(&f, x);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Rational::is_zero)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let mut rows = self.basis.row_vecs();
        rows.extend(other.basis.row_vecs());
        Ok(Subspace::from_vectors(self.ambient, rows))
    }

    /// Intersection computed as the kernel of the stacked system `[A; -B]^T`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        // Solve sum_i a_i A_i - sum_j b_j B_j = 0 for (a, b).
        let mut sys = Matrix::zeros(self.ambient, da + db);
        for i in 0..da {
            for (k, x) in self.basis.row(i).iter().enumerate() {
                sys[(k, i)] = x.clone();
            }
        }
        for j in 0..db {
            for (k, x) in other.basis.row(j).iter().enumerate() {
                sys[(k, da + j)] = -x;
            }
        }
        let ker = kernel(&sys);
        let vecs = ker
            .basis_vectors()
            .into_iter()
            .map(|coef| {
                let mut v = vec![Rational::ZERO; self.ambient];
                for (i, c) in coef[..da].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (k, x) in self.basis.row(i).iter().enumerate() {
                        if !x.is_zero() {
                            v[k] += c * x;
                        }
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::from_vectors(self.ambient, vecs))
    }

    /// `dim self - dim sub`, requiring `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize, Error> {
        self.check_ambient(sub)?;
        if !self.contains_subspace(sub) {
            return Err(Error::NotContained);
        }
        Ok(self.dim() - sub.dim())
    }

    /// Image under coordinate projection onto `cols` (in the given order).
    pub fn project(&self, cols: &[usize]) -> Subspace {
        let rows = (0..self.dim()).map(|i| cols.iter().map(|&c| self.basis[(i, c)].clone()).collect()).collect();
        Subspace::from_vectors(cols.len(), rows)
    }

    /// Embeds into a larger ambient space by mapping coordinate `i` to `map[i]`.
    pub fn embed(&self, ambient: usize, map: &[usize]) -> Subspace {
        assert_eq!(map.len(), self.ambient);
        let rows = self
            .basis_vectors()
            .into_iter()
            .map(|r| {
                let mut v = vec![Rational::ZERO; ambient];
                for (i, x) in r.into_iter().enumerate() {
                    v[map[i]] = x;
                }
                v
            })
            .collect();
        Subspace::from_vectors(ambient, rows)
    }
}
