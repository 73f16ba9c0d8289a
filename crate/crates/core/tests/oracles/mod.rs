//! Slow, direct reference implementations used only by tests.
#![allow(dead_code)]

use hyperq::hyperbinary::HyperExpansion;
use hyperq::poly::{BiPoly, LaurentPoly};

pub fn fusc(n: u64) -> u64 {
    match n {
        0 | 1 => n,
        _ if n.is_multiple_of(2) => fusc(n / 2),
        _ => fusc(n / 2) + fusc(n / 2 + 1),
    }
}

/// Every digit string over {0,1,2} of the right length whose value is `n`.
pub fn expansions(n: u64) -> Vec<Vec<u8>> {
    let k = (64 - n.leading_zeros()) as usize;
    let mut out = Vec::new();
    let mut digits = vec![0u8; k];
    fn go(i: usize, acc: u64, n: u64, digits: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let k = digits.len();
        if i == k {
            if acc == n {
                out.push(digits.clone());
            }
            return;
        }
        let rest = (k - i - 1) as u32;
        for d in 0..=2u8 {
            let v = acc + (d as u64) * (1u64 << rest);
            // remaining positions add at most 2·(2^rest - 1)
            if v <= n && v + 2 * ((1u64 << rest) - 1) >= n {
                digits[i] = d;
                go(i + 1, v, n, digits, out);
            }
        }
    }
    go(0, 0, n, &mut digits, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// `(ℓ, p₁, p₂, t, z)`: digit sum, ones, twos, twos again, and zeros after
/// the first nonzero digit.
pub fn digit_stats(d: &[u8]) -> (u32, u32, u32, u32, u32) {
    let ell = d.iter().map(|&x| x as u32).sum();
    let p1 = d.iter().filter(|&&x| x == 1).count() as u32;
    let p2 = d.iter().filter(|&&x| x == 2).count() as u32;
    let z = d.iter().skip_while(|&&x| x == 0).filter(|&&x| x == 0).count() as u32;
    (ell, p1, p2, p2, z)
}

pub fn h_q(n: u64) -> LaurentPoly {
    LaurentPoly::from_terms(expansions(n).iter().map(|d| (digit_stats(d).0 as i64, 1)))
}

pub fn h_rs(n: u64) -> BiPoly {
    expansions(n).iter().fold(BiPoly::zero(), |acc, d| {
        let (_, _, _, t, z) = digit_stats(d);
        acc + BiPoly::monomial(1, t, z)
    })
}

pub fn prefix_sums(d: &[u8]) -> Vec<u64> {
    let mut acc = 0u64;
    d.iter()
        .map(|&x| {
            acc = 2 * acc + x as u64;
            acc
        })
        .collect()
}

pub fn below(c: &[u64], d: &[u64]) -> bool {
    c.iter().zip(d).all(|(a, b)| a <= b)
}

/// Elements of 𝓓(n) with exactly one lower cover, using only the
/// prefix-sum order.
pub fn join_irreducibles(n: u64) -> Vec<HyperExpansion> {
    let all = expansions(n);
    let s: Vec<Vec<u64>> = all.iter().map(|d| prefix_sums(d)).collect();
    let lt = |a: usize, b: usize| a != b && below(&s[a], &s[b]);
    let mut out: Vec<HyperExpansion> = (0..all.len())
        .filter(|&d| {
            let lower = (0..all.len())
                .filter(|&c| lt(c, d) && !(0..all.len()).any(|e| lt(c, e) && lt(e, d)))
                .count();
            lower == 1
        })
        .map(|d| HyperExpansion::from_digits(all[d].clone()).unwrap())
        .collect();
    out.sort();
    out
}

/// Downward-closed subsets of a fence given by cover pairs (lower, upper).
pub fn ideals(size: usize, covers: &[(usize, usize)]) -> Vec<u64> {
    (0..1u64 << size)
        .filter(|&x| covers.iter().all(|&(lo, hi)| x >> (hi - 1) & 1 == 0 || x >> (lo - 1) & 1 == 1))
        .collect()
}
