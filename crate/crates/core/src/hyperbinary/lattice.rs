//! The refinement order on `𝓓(n)`.
//!
//! `c ≤ d` iff `sᵢ(c) ≤ sᵢ(d)` for every prefix length `i`. Meets and
//! joins are taken coordinatewise on prefix-sum vectors and turned back
//! into digits with `dᵢ = sᵢ - 2·s_{i-1}`; a digit outside `{0,1,2}`
//! would mean the prefix-sum image is not a sublattice.

use super::{bit_len, BinaryExpansion, HyperExpansion};
use crate::error::Error;

fn same_n(c: &HyperExpansion, d: &HyperExpansion) -> Result<(), Error> {
    let (left, right) = (c.value(), d.value());
    if left != right || c.len() != d.len() {
        return Err(Error::MismatchedValue { left, right });
    }
    Ok(())
}

/// `c ≤ d` in `𝓓(n)`.
pub fn leq(c: &HyperExpansion, d: &HyperExpansion) -> Result<bool, Error> {
    same_n(c, d)?;
    Ok(c.s_vector().iter().zip(d.s_vector()).all(|(a, b)| *a <= b))
}

fn from_s_vector(s: &[u64]) -> Result<HyperExpansion, Error> {
    let mut prev = 0i128;
    let mut digits = Vec::with_capacity(s.len());
    for &si in s {
        let d = si as i128 - 2 * prev;
        if !(0..=2).contains(&d) {
            return Err(Error::InvariantViolation(format!(
                "prefix sums {s:?} reconstruct to digit {d}"
            )));
        }
        digits.push(d as u8);
        prev = si as i128;
    }
    Ok(HyperExpansion::from_digits_unchecked(digits))
}

fn combine(
    c: &HyperExpansion,
    d: &HyperExpansion,
    pick: fn(u64, u64) -> u64,
) -> Result<HyperExpansion, Error> {
    same_n(c, d)?;
    let s: Vec<u64> = c.s_vector().into_iter().zip(d.s_vector()).map(|(a, b)| pick(a, b)).collect();
    from_s_vector(&s)
}

pub fn lattice_meet(c: &HyperExpansion, d: &HyperExpansion) -> Result<HyperExpansion, Error> {
    combine(c, d, u64::min)
}

pub fn lattice_join(c: &HyperExpansion, d: &HyperExpansion) -> Result<HyperExpansion, Error> {
    combine(c, d, u64::max)
}

/// `b₁…b_r`, the bits of `β(n)` strictly before its rightmost 0; empty
/// when `β(n)` has no zero.
pub fn principal_prefix(n: u64) -> BinaryExpansion {
    let beta = BinaryExpansion::of(n);
    let r = beta.bits().iter().rposition(|&b| b == 0).unwrap_or(0);
    BinaryExpansion::from_bits(beta.bits()[..r].to_vec())
}

/// The top of `𝓓(n)`: the binary expansion itself.
pub fn max_element(n: u64) -> HyperExpansion {
    HyperExpansion::from_digits_unchecked(BinaryExpansion::of(n).bits().to_vec())
}

/// The bottom of `𝓓(n)`: `1^k` when `n = 2^k - 1`, otherwise
/// `0 (b₂+1) … (b_r+1) 2 1^{k-r-1}` from the principal prefix.
pub fn min_element(n: u64) -> HyperExpansion {
    let k = bit_len(n);
    let pp = principal_prefix(n);
    if n == 0 || n.count_ones() as usize == k {
        return max_element(n);
    }
    let r = pp.len();
    let mut digits = Vec::with_capacity(k);
    digits.push(0);
    digits.extend(pp.bits()[1..].iter().map(|b| b + 1));
    digits.push(2);
    digits.extend(std::iter::repeat_n(1, k - r - 1));
    HyperExpansion::from_digits_unchecked(digits)
}

/// The `r` join-irreducible elements of `𝓓(n)`. For each `i ∈ [r]`, split
/// `n = q·2^{k-i} + m` and emit `0̂(q) 0…0 0̂(m)`, padded to length `k`.
pub fn join_irreducibles(n: u64) -> Vec<HyperExpansion> {
    let k = bit_len(n);
    let r = principal_prefix(n).len();
    (1..=r)
        .map(|i| {
            let shift = k - i;
            let (hi, lo) = (n >> shift, n & ((1u64 << shift) - 1));
            let c = min_element(hi);
            let d = min_element(lo);
            let mut digits = c.digits().to_vec();
            digits.extend(std::iter::repeat_n(0, k - c.len() - d.len()));
            digits.extend_from_slice(d.digits());
            HyperExpansion::from_digits_unchecked(digits)
        })
        .collect()
}
