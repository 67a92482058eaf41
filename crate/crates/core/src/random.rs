//! Seeded generators of random inverse systems.
//!
//! Every draw comes from a `ChaCha8Rng` seeded by the caller, so a suite run
//! is reproduced exactly by its seed. Coefficients come from a small fixed set
//! of rationals; degenerate or non-normalized draws are rejected and redrawn.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::apolar::{capital_degree_of, hilbert_function};
use crate::poly::monomials_of_degree;
use crate::{Monomial, Polynomial, Rational};

const COEFFICIENTS: [(i64, i64); 6] = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (3, 1)];

/// Attempts per draw before giving up on a rejection loop.
const MAX_ATTEMPTS: usize = 10_000;

pub struct InstanceGenerator {
    rng: ChaCha8Rng,
}

impl InstanceGenerator {
    pub fn new(seed: u64) -> Self {
        InstanceGenerator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn coefficient(&mut self) -> Rational {
        let (p, q) = *COEFFICIENTS.choose(&mut self.rng).expect("nonempty");
        Rational::new(p, q)
    }

    fn monomial(&mut self, n: usize, d: u32, allowed: impl Fn(&Monomial) -> bool) -> Option<Monomial> {
        let monos: Vec<Monomial> = monomials_of_degree(n, d).into_iter().filter(|m| allowed(m)).collect();
        monos.choose(&mut self.rng).cloned()
    }

    /// A sparse polynomial in `n` variables with terms in degrees `2..=s`,
    /// always including a term of degree `s`.
    pub fn polynomial(&mut self, n: usize, s: u32) -> Polynomial {
        assert!(n >= 1 && s >= 2, "need n >= 1 and s >= 2");
        loop {
            let mut f = Polynomial::zero(n);
            let top = self.monomial(n, s, |_| true).expect("monomials exist");
            f.add_term(top, &self.coefficient());
            let extra = self.rng.gen_range(n..=n + 3);
            for _ in 0..extra {
                let d = self.rng.gen_range(2..=s);
                let m = self.monomial(n, d, |_| true).expect("monomials exist");
                let c = self.coefficient();
                f.add_term(m, &c);
            }
            if f.degree() == Some(s) {
                return f;
            }
        }
    }

    /// As [`polynomial`](Self::polynomial), rejecting draws with `H(1) < n`.
    pub fn gorenstein(&mut self, n: usize, s: u32) -> Polynomial {
        for _ in 0..MAX_ATTEMPTS {
            let f = self.polynomial(n, s);
            if nondegenerate(&f) {
                return f;
            }
        }
        panic!("no non-degenerate draw with n = {n}, s = {s}");
    }

    /// A non-degenerate draw with `n` and `s` in the given ranges and `dim A <= max_dim`.
    pub fn gorenstein_bounded(
        &mut self,
        n: std::ops::RangeInclusive<usize>,
        s: std::ops::RangeInclusive<u32>,
        max_dim: usize,
    ) -> Polynomial {
        for _ in 0..MAX_ATTEMPTS {
            let nn = self.rng.gen_range(n.clone());
            let ss = self.rng.gen_range(s.clone());
            let f = self.gorenstein(nn, ss);
            let dim: usize = hilbert_function(&f).map(|h| h.iter().sum()).unwrap_or(usize::MAX);
            if dim <= max_dim {
                return f;
            }
        }
        panic!("no draw with dim <= {max_dim}");
    }

    /// `(G, H)` in `n` variables, `G` in the first `m` and `H` in the rest,
    /// each non-degenerate in its own variables.
    pub fn disjoint_pair(&mut self, n: usize, s: u32) -> (Polynomial, Polynomial) {
        assert!(n >= 2);
        let m = self.rng.gen_range(1..n);
        let sg = self.rng.gen_range(2..=s);
        let sh = self.rng.gen_range(2..=s);
        let g = self.gorenstein(m, sg).extend_vars(n);
        let local = self.gorenstein(n - m, sh);
        let map: Vec<Option<usize>> = (m..n).map(Some).collect();
        let h = local.remap(n, &map).expect("in range");
        (g, h)
    }

    /// `F = y_1^s + F_4 + F_3 + F_2` with `x_1^3 ∘ F_4 = 0`, redrawn until
    /// `cdeg = 3` and `H(3) <= 5`.
    pub fn three_stretched(
        &mut self,
        n: std::ops::RangeInclusive<usize>,
        s: std::ops::RangeInclusive<u32>,
    ) -> Polynomial {
        for _ in 0..MAX_ATTEMPTS {
            let nn = self.rng.gen_range(n.clone());
            let ss = self.rng.gen_range(s.clone());
            let mut f = Polynomial::monomial(nn, Monomial::new(pure_power(nn, 0, ss)), Rational::ONE);
            for d in [4u32, 3, 2] {
                let count = self.rng.gen_range(1..=nn + 1);
                for _ in 0..count {
                    let m = self.monomial(nn, d, |m| d != 4 || m.exponents()[0] < 3).expect("monomials exist");
                    let c = self.coefficient();
                    f.add_term(m, &c);
                }
            }
            let Ok(h) = hilbert_function(&f) else { continue };
            if h.get(1) == Some(&nn) && capital_degree_of(&h) == 3 && h[3] <= 5 {
                return f;
            }
        }
        panic!("no 3-stretched draw found");
    }
}

fn pure_power(n: usize, i: usize, e: u32) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = e;
    v
}

fn nondegenerate(f: &Polynomial) -> bool {
    hilbert_function(f).map(|h| h.get(1) == Some(&f.nvars())).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_reproduce() {
        let a: Vec<String> = (0..5).map(|_| InstanceGenerator::new(3).gorenstein(3, 4).to_string()).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        let mut g = InstanceGenerator::new(3);
        let b: Vec<String> = (0..5).map(|_| g.gorenstein(3, 4).to_string()).collect();
        assert!(b.iter().any(|x| *x != b[0]));
    }

    #[test]
    fn draws_meet_their_constraints() {
        let mut g = InstanceGenerator::new(11);
        for _ in 0..10 {
            let f = g.gorenstein(3, 4);
            assert_eq!(f.degree(), Some(4));
            assert!(crate::apolar::check_normalized(&f).is_ok());
            assert_eq!(hilbert_function(&f).unwrap()[1], 3);
            let f = g.gorenstein_bounded(2..=4, 2..=4, 12);
            assert!(hilbert_function(&f).unwrap().iter().sum::<usize>() <= 12);
            let (p, q) = g.disjoint_pair(4, 4);
            assert!(p.support_vars().iter().all(|v| !q.support_vars().contains(v)));
            let h = hilbert_function(&g.three_stretched(2..=5, 4..=6)).unwrap();
            assert_eq!(capital_degree_of(&h), 3);
            assert!(h[3] <= 5);
        }
    }
}
