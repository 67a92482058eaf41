//! Betti numbers of the residue field via a minimal free resolution.
//!
//! A submodule of `A^r` is stored as a list of vectors in the flattened
//! coordinates `(component, basis index) -> component * dim + index`. At each
//! step the syzygy module `Z` is minimally generated by a basis of `Z / mZ`,
//! and the next syzygies are the linear relations among the products
//! `e_k * g_i` of basis elements with the chosen generators.

use crate::artin::FiniteLocalAlgebra;
use crate::exact::sparse::{to_sparse, SparseVec};
use crate::exact::{Echelon, Insertion, Rational};
use crate::Result;

use super::series::TruncatedSeries;

struct Module<'a> {
    alg: &'a FiniteLocalAlgebra,
    d: usize,
}

impl Module<'_> {
    /// `e_k * v` for `v` in `A^r`.
    fn mul_basis(&self, v: &SparseVec, k: usize) -> SparseVec {
        let mut terms: Vec<(usize, Rational)> = Vec::new();
        for (idx, c) in v {
            let (comp, j) = (idx / self.d, idx % self.d);
            for (l, x) in self.alg.basis_product(j, k) {
                terms.push((comp * self.d + l, c * x));
            }
        }
        terms.sort_by_key(|t| t.0);
        let mut out: SparseVec = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += &c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        out
    }
}

/// Basis elements generating `m` as an ideal: independent modulo `m^2`.
fn ideal_generators_of_m(alg: &FiniteLocalAlgebra) -> Vec<usize> {
    let d = alg.dim();
    let m2 = alg.ideal_power(2);
    let mut ech = Echelon::new(d);
    for v in m2.basis_vectors() {
        ech.insert(to_sparse(&v));
    }
    let mut out = Vec::new();
    for j in (0..d).filter(|&j| j != alg.unit_index()) {
        let mut e = vec![Rational::ZERO; d];
        e[j] = Rational::ONE;
        if let Insertion::Independent = ech.insert(to_sparse(&e)) {
            out.push(j);
        }
    }
    out
}

/// Splits `z` into a minimal generating set: returns the generators.
fn minimal_generators(module: &Module<'_>, ambient: usize, z: &[SparseVec], m_gens: &[usize]) -> Vec<SparseVec> {
    let mut ech = Echelon::new(ambient);
    for v in z {
        for &k in m_gens {
            let w = module.mul_basis(v, k);
            if !w.is_empty() {
                ech.insert(w);
            }
        }
    }
    z.iter().filter(|v| matches!(ech.insert((*v).clone()), Insertion::Independent)).cloned().collect()
}

/// Kernel of `A^g -> A^r`, `(a_i) ↦ sum a_i g_i`.
fn syzygies(module: &Module<'_>, r: usize, gens: &[SparseVec]) -> Vec<SparseVec> {
    let d = module.d;
    let mut ech = Echelon::with_tracking(r * d);
    let mut kernel = Vec::new();
    for g in gens {
        for k in 0..d {
            let w = module.mul_basis(g, k);
            if let Insertion::Dependent(Some(rel)) = ech.insert(w) {
                // Insertion index i*d + k matches the flattened coordinate of e_k in component i.
                kernel.push(rel);
            }
        }
    }
    kernel
}

/// `beta_0, ..., beta_pmax` of `k` over `A`.
pub fn betti_counts(alg: &FiniteLocalAlgebra, pmax: usize) -> Result<Vec<usize>> {
    let d = alg.dim();
    let module = Module { alg, d };
    let m_gens = ideal_generators_of_m(alg);
    let mut betti = vec![1];
    // Z_0 = m inside A^1.
    let mut z: Vec<SparseVec> = (0..d).filter(|&j| j != alg.unit_index()).map(|j| vec![(j, Rational::ONE)]).collect();
    let mut rank = 1;
    while betti.len() <= pmax {
        let gens = minimal_generators(&module, rank * d, &z, &m_gens);
        betti.push(gens.len());
        if betti.len() > pmax || gens.is_empty() {
            break;
        }
        z = syzygies(&module, rank, &gens);
        rank = gens.len();
    }
    betti.resize(pmax + 1, 0);
    Ok(betti)
}

/// The Poincaré series of `A` truncated at `z^pmax`.
pub fn betti_numbers(alg: &FiniteLocalAlgebra, pmax: usize) -> Result<TruncatedSeries> {
    Ok(TruncatedSeries::from_counts(&betti_counts(alg, pmax)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::algebra_from_inverse_system;
    use crate::poly::parse;

    fn betti(f: &str, n: usize, pmax: usize) -> Vec<usize> {
        betti_counts(&algebra_from_inverse_system(&parse(f, n).unwrap()).unwrap(), pmax).unwrap()
    }

    #[test]
    fn truncated_polynomial_ring_is_periodic() {
        assert_eq!(betti("y1^4", 1, 6), vec![1; 7]);
    }

    #[test]
    fn complete_intersection_of_two_quadrics() {
        assert_eq!(betti("y1^2 + y2^2", 2, 6), vec![1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn stretched_three_variables() {
        // 1/(1 - 3z + z^2)
        assert_eq!(betti("y1^3 + y2^2 + y3^2", 3, 6), vec![1, 3, 8, 21, 55, 144, 377]);
    }

    #[test]
    fn second_betti_number_counts_generators() {
        for (f, n) in [("y1^3 + y2^3 + y1*y2*y3", 3), ("y1^4 + y1^2*y2 + y2^3", 2)] {
            let poly = parse(f, n).unwrap();
            let ann = crate::apolar::annihilator(&poly).unwrap();
            let b = betti(f, n, 2);
            assert_eq!(b[1], n);
            assert_eq!(b[2], n * (n - 1) / 2 + ann.minimal_generators().len(), "{f}");
        }
    }
}
