use std::fmt;

use super::Rational;

/// Dense row-major matrix over Q.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::ONE;
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Rational] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place Gauss-Jordan reduction. Returns pivot columns in order.
    fn reduce_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            if !inv.is_one() {
                for x in self.row_mut(r)[c..].iter_mut() {
                    if !x.is_zero() {
                        *x *= &inv;
                    }
                }
            }
            let pivot_row: Vec<(usize, Rational)> = self.row(r)[c..]
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (c + j, x.clone()))
                .collect();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                let row = self.row_mut(i);
                for (j, x) in &pivot_row {
                    row[*j] = row[*j].sub_mul(&f, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of a reduced row-echelon computation.
#[derive(Clone, Debug)]
pub struct Rref {
    /// Nonzero rows only.
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row-echelon form of `m`, with zero rows dropped.
pub fn rref(m: &Matrix) -> Rref {
    let mut work = m.clone();
    let pivots = work.reduce_in_place();
    let rank = pivots.len();
    work.data.truncate(rank * work.cols);
    work.rows = rank;
    Rref { matrix: work, rank, pivots }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// Right null space `{v : m v = 0}` in canonical form.
pub fn kernel(m: &Matrix) -> super::Subspace {
    let r = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Rational::ZERO; n];
        v[free] = Rational::ONE;
        for (i, &p) in r.pivots.iter().enumerate() {
            let x = &r.matrix[(i, free)];
            if !x.is_zero() {
                v[p] = -x;
            }
        }
        basis.push(v);
    }
    super::Subspace::from_vectors(n, basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_dependent_rows() {
        let r = rref(&Matrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix, Matrix::from_i64(&[&[1, 2]]));
    }

    #[test]
    fn rref_permutation() {
        let r = rref(&Matrix::from_i64(&[&[0, 1], &[1, 0]]));
        assert_eq!(r.rank, 2);
        assert_eq!(r.matrix, Matrix::identity(2));
    }

    #[test]
    fn rref_by_hand() {
        // [[2,4],[1,3]] -> R1/2 = [1,2]; R2-R1 = [0,1]; R1-2R2 = [1,0]
        let r = rref(&Matrix::from_i64(&[&[2, 4], &[1, 3]]));
        assert_eq!(r.rank, 2);
        assert_eq!(r.matrix, Matrix::identity(2));
    }

    #[test]
    fn kernel_examples() {
        let k = kernel(&Matrix::from_i64(&[&[1, 1]]));
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[Rational::ONE, Rational::from_int(-1)]));

        assert_eq!(kernel(&Matrix::identity(3)).dim(), 0);

        let k = kernel(&Matrix::from_i64(&[&[1, 2, 3]]));
        assert_eq!(k.dim(), 2);
        let v = |a: i64, b: i64, c: i64| [a, b, c].map(Rational::from_int);
        assert!(k.contains(&v(-2, 1, 0)));
        assert!(k.contains(&v(-3, 0, 1)));
        assert!(!k.contains(&v(1, 0, 0)));
    }

    #[test]
    fn matrix_product() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), Matrix::from_i64(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), Matrix::from_i64(&[&[1, 3], &[2, 4]]));
    }
}
