//! Macaulay representations, growth bounds and Gotzmann persistence.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// `C(n, k)` exactly.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `h = sum_j C(k_j, j)` with `j = d, d-1, ...` and `k_d > k_(d-1) > ... ` , `k_j >= j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayRep {
    pub h: BigUint,
    pub d: u32,
    /// Pairs `(k_j, j)` in decreasing `j`.
    pub terms: Vec<(u64, u32)>,
}

impl MacaulayRep {
    /// `sum_j C(k_j + shift, j + shift)`.
    pub fn shifted_sum(&self, kshift: u64, jshift: u64) -> BigUint {
        self.terms.iter().map(|&(k, j)| binomial(k + kshift, j as u64 + jshift)).sum()
    }

    pub fn value(&self) -> BigUint {
        self.shifted_sum(0, 0)
    }
}

/// Largest `k` with `C(k, j) <= h`, assuming `h >= 1`.
fn largest_k(h: &BigUint, j: u64) -> u64 {
    let mut lo = j;
    let mut hi = j.max(1);
    while binomial(hi, j) <= *h {
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial(mid, j) <= *h {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The greedy `d`-th Macaulay representation of `h`. Panics if `d == 0`.
pub fn macaulay_rep(h: impl Into<BigUint>, d: u32) -> MacaulayRep {
    assert!(d >= 1, "Macaulay representations need d >= 1");
    let h = h.into();
    let mut rest = h.clone();
    let mut terms = Vec::new();
    for j in (1..=d).rev() {
        if rest.is_zero() {
            break;
        }
        let k = largest_k(&rest, j as u64);
        rest -= binomial(k, j as u64);
        terms.push((k, j));
    }
    MacaulayRep { h, d, terms }
}

/// `h^<d> = sum_j C(k_j + 1, j + 1)`.
pub fn macaulay_bound(h: impl Into<BigUint>, d: u32) -> BigUint {
    macaulay_rep(h, d).shifted_sum(1, 1)
}

/// First degree `d` where `H(d+1) > H(d)^<d>`, or where `H(0) != 1`.
pub fn o_sequence_violation(h: &[usize]) -> Option<usize> {
    if h.first() != Some(&1) {
        return Some(0);
    }
    (1..h.len().saturating_sub(1)).find(|&d| BigUint::from(h[d + 1]) > macaulay_bound(h[d], d as u32))
}

pub fn is_o_sequence(h: &[usize]) -> bool {
    o_sequence_violation(h).is_none()
}

/// The continuation forced by maximal growth at degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GotzmannTail {
    pub rep: MacaulayRep,
}

impl GotzmannTail {
    /// Predicted `H(t)` for `t >= d`.
    pub fn at(&self, t: usize) -> BigUint {
        let d = self.rep.d as usize;
        assert!(t >= d, "the tail starts at degree {d}");
        let shift = (t - d) as u64;
        self.rep.shifted_sum(shift, shift)
    }

    /// `H(d), ..., H(upto)` as machine integers where they fit.
    pub fn values(&self, upto: usize) -> Vec<Option<u64>> {
        (self.rep.d as usize..=upto).map(|t| self.at(t).to_u64()).collect()
    }
}

/// Requires `H(d+1) = H(d)^<d>`; then `H(t) = sum_j C(k_j + t - d, j + t - d)` for all `t >= d`.
pub fn gotzmann_persists(h: &[usize], d: usize) -> Result<GotzmannTail> {
    if d == 0 {
        return Err(Error::Precondition { statement: "Gotzmann persistence", detail: "degree must be >= 1".into() });
    }
    let hd = h.get(d).copied().unwrap_or(0);
    let next = h.get(d + 1).copied().unwrap_or(0);
    let rep = macaulay_rep(hd, d as u32);
    let bound = rep.shifted_sum(1, 1);
    if BigUint::from(next) != bound {
        return Err(Error::GrowthNotMaximal { degree: d, next: d + 1, actual: next.into(), bound });
    }
    Ok(GotzmannTail { rep })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn representations() {
        assert_eq!(macaulay_rep(4u32, 2).terms, vec![(3, 2), (1, 1)]);
        assert_eq!(macaulay_rep(1u32, 5).terms, vec![(5, 5)]);
        let r = macaulay_rep(5u32, 3);
        assert_eq!(r.terms, vec![(4, 3), (2, 2)]);
        assert_eq!(r.value(), big(5));
        assert!(macaulay_rep(0u32, 3).terms.is_empty());
    }

    #[test]
    fn bounds() {
        assert_eq!(macaulay_bound(4u32, 2), big(5));
        assert_eq!(macaulay_bound(1u32, 7), big(1));
        assert_eq!(macaulay_bound(3u32, 2), big(4));
        assert_eq!(macaulay_bound(2u32, 1), big(3));
    }

    #[test]
    fn o_sequences() {
        assert!(is_o_sequence(&[1, 2, 1, 1, 1]));
        assert!(!is_o_sequence(&[1, 2, 4]));
        assert_eq!(o_sequence_violation(&[1, 2, 4]), Some(1));
        assert!(is_o_sequence(&[1]));
        assert!(!is_o_sequence(&[]));
        assert!(!is_o_sequence(&[2, 1]));
        assert!(!is_o_sequence(&[1, 3, 0, 1]));
    }

    #[test]
    fn persistence() {
        let t = gotzmann_persists(&[1, 3, 4, 5], 2).unwrap();
        for s in 2..12 {
            assert_eq!(t.at(s), big(s as u64 + 2));
        }
        let t = gotzmann_persists(&[1, 2, 1, 1], 2).unwrap();
        assert!((2..10).all(|s| t.at(s) == big(1)));
        let t = gotzmann_persists(&[1, 3, 3, 4], 2).unwrap();
        assert!((2..10).all(|s| t.at(s) == big(s as u64 + 1)));
        assert!(matches!(gotzmann_persists(&[1, 3, 4, 4], 2), Err(Error::GrowthNotMaximal { .. })));
    }

    /// All strictly decreasing expansions of `h` in degree `d` with `k_j >= j`.
    fn brute_force(h: u64, d: u32) -> Vec<Vec<(u64, u32)>> {
        fn rec(h: u64, j: u32, kmax: u64, cur: &mut Vec<(u64, u32)>, out: &mut Vec<Vec<(u64, u32)>>) {
            if h == 0 {
                out.push(cur.clone());
                return;
            }
            if j == 0 {
                return;
            }
            for k in j as u64..kmax {
                let b = binomial(k, j as u64).to_u64().unwrap();
                if b > h {
                    break;
                }
                cur.push((k, j));
                rec(h - b, j - 1, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(h, d, h + d as u64 + 1, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn representation_is_unique() {
        for d in 1..=6 {
            for h in 1..=50u64 {
                let all = brute_force(h, d);
                assert_eq!(all, vec![macaulay_rep(h, d).terms], "h = {h}, d = {d}");
            }
        }
    }

    #[test]
    fn bound_is_monotone() {
        for d in 1..=6 {
            let b: Vec<BigUint> = (0..=50u32).map(|h| macaulay_bound(h, d)).collect();
            assert!(b.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn small_values_do_not_grow() {
        for d in 1..=10u32 {
            for h in 0..=d {
                assert_eq!(macaulay_bound(h, d), big(h as u64));
            }
        }
    }
}
