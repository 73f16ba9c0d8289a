//! Hyperbinary partitions of `n`, stored as hyperbinary expansions.
//!
//! A hyperbinary expansion of `n` is a digit string `d₁…d_k` over
//! `{0, 1, 2}` with `Σ dᵢ 2^{k-i} = n`, where `k` is the length of the
//! binary expansion of `n`. Digit `dᵢ` is the multiplicity of the part
//! `2^{k-i}`, so the string and the partition determine each other. The
//! digit string is the authoritative representation here; see
//! [`HyperExpansion::parts`] for the partition view.

mod export;
mod genfunc;
mod lattice;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use export::{hasse_dot, records, ExpansionRecord};
pub use genfunc::{
    h_q, h_q_enumerated, h_q_table, h_rs, h_rs_enumerated, h_rs_table, hbar_form_report, hbar_st,
    hbar_st_enumerated, hbar_st_table, HbarDiscrepancy, HbarReading,
};
pub use lattice::{
    join_irreducibles, lattice_join, lattice_meet, leq, max_element, min_element, principal_prefix,
};

/// Bits `b₁…b_k` of `n`, most significant first; empty for `n = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryExpansion {
    bits: Vec<u8>,
}

impl BinaryExpansion {
    pub fn of(n: u64) -> Self {
        let k = bit_len(n);
        Self {
            bits: (0..k).rev().map(|i| (n >> i & 1) as u8).collect(),
        }
    }

    pub(crate) fn from_bits(bits: Vec<u8>) -> Self {
        Self { bits }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn value(&self) -> u64 {
        self.bits.iter().fold(0, |acc, &b| acc * 2 + b as u64)
    }
}

impl fmt::Display for BinaryExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.bits)
    }
}

/// Number of binary digits of `n` (0 for `n = 0`).
pub fn bit_len(n: u64) -> usize {
    (64 - n.leading_zeros()) as usize
}

fn write_digits(f: &mut fmt::Formatter<'_>, digits: &[u8]) -> fmt::Result {
    if digits.is_empty() {
        return write!(f, "ε");
    }
    for d in digits {
        write!(f, "{d}")?;
    }
    Ok(())
}

/// One element of `𝓓(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperExpansion {
    digits: Vec<u8>,
}

/// Per-expansion statistics.
///
/// `ell` is the number of parts, `p1`/`p2` count digits equal to 1/2,
/// `t` counts twos and `z` counts zeros right of the leftmost nonzero
/// digit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperStats {
    pub ell: u32,
    pub p1: u32,
    pub p2: u32,
    pub t: u32,
    pub z: u32,
}

impl HyperExpansion {
    /// The empty expansion ε of 0.
    pub fn empty() -> Self {
        Self { digits: Vec::new() }
    }

    /// Validates digits and length against the represented integer.
    pub fn from_digits(digits: Vec<u8>) -> Result<Self, Error> {
        if let Some(d) = digits.iter().find(|&&d| d > 2) {
            return Err(Error::InvariantViolation(format!("digit {d} is not in {{0,1,2}}")));
        }
        let value = digits
            .iter()
            .try_fold(0u64, |acc, &d| acc.checked_mul(2)?.checked_add(d as u64))
            .ok_or_else(|| Error::InvariantViolation("expansion exceeds 64 bits".into()))?;
        if bit_len(value) != digits.len() {
            return Err(Error::InvariantViolation(format!(
                "length {} does not match the binary length {} of {value}",
                digits.len(),
                bit_len(value)
            )));
        }
        Ok(Self { digits })
    }

    pub(crate) fn from_digits_unchecked(digits: Vec<u8>) -> Self {
        Self { digits }
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// `s(d) = Σ dᵢ 2^{k-i}`.
    pub fn value(&self) -> u64 {
        self.digits.iter().fold(0, |acc, &d| acc * 2 + d as u64)
    }

    /// `sᵢ(d)`, the value of the length-`i` prefix (1-based).
    pub fn s_prefix(&self, i: usize) -> Result<u64, Error> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(self.digits[..i].iter().fold(0, |acc, &d| acc * 2 + d as u64))
    }

    /// `(s₁(d), …, s_k(d))`, built with `sᵢ = 2·s_{i-1} + dᵢ`.
    pub fn s_vector(&self) -> Vec<u64> {
        self.digits
            .iter()
            .scan(0u64, |acc, &d| {
                *acc = *acc * 2 + d as u64;
                Some(*acc)
            })
            .collect()
    }

    pub fn stats(&self) -> HyperStats {
        let mut st = HyperStats::default();
        let mut seen_nonzero = false;
        for &d in &self.digits {
            st.ell += d as u32;
            match d {
                0 if seen_nonzero => st.z += 1,
                1 => st.p1 += 1,
                2 => st.p2 += 1,
                _ => {}
            }
            seen_nonzero |= d != 0;
        }
        st.t = st.p2;
        st
    }

    /// Elements covered by `self`: each adjacent pair `(dᵢ, 0)` with
    /// `dᵢ > 0` becomes `(dᵢ - 1, 2)`.
    pub fn covers(&self) -> Vec<HyperExpansion> {
        self.digits
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > 0 && w[1] == 0)
            .map(|(i, _)| {
                let mut digits = self.digits.clone();
                digits[i] -= 1;
                digits[i + 1] = 2;
                HyperExpansion { digits }
            })
            .collect()
    }

    /// Elements covering `self`: the inverse move `(cᵢ, 2) → (cᵢ + 1, 0)`.
    pub fn covered_by(&self) -> Vec<HyperExpansion> {
        self.digits
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] < 2 && w[1] == 2)
            .map(|(i, _)| {
                let mut digits = self.digits.clone();
                digits[i] += 1;
                digits[i + 1] = 0;
                HyperExpansion { digits }
            })
            .collect()
    }

    /// The hyperbinary partition, parts in decreasing order.
    pub fn parts(&self) -> Vec<u64> {
        let k = self.len();
        self.digits
            .iter()
            .enumerate()
            .flat_map(|(i, &d)| std::iter::repeat_n(1u64 << (k - 1 - i), d as usize))
            .collect()
    }
}

impl fmt::Display for HyperExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.digits)
    }
}

impl FromStr for HyperExpansion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "ε" || s.is_empty() {
            return Ok(Self::empty());
        }
        let digits = s
            .chars()
            .map(|c| match c {
                '0'..='2' => Ok(c as u8 - b'0'),
                _ => Err(Error::Parse(format!("not a hyperbinary digit string: {s:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_digits(digits)
    }
}

fn padded(d: &HyperExpansion, len: usize) -> Vec<u8> {
    let mut digits = vec![0; len - d.len()];
    digits.extend_from_slice(&d.digits);
    digits
}

fn enumerate_memo(n: u64, memo: &mut HashMap<u64, Vec<HyperExpansion>>) -> Vec<HyperExpansion> {
    if let Some(v) = memo.get(&n) {
        return v.clone();
    }
    let k = bit_len(n);
    let out = if n == 0 {
        vec![HyperExpansion::empty()]
    } else if n % 2 == 1 {
        // H(2m-1) = 2·H(m-1) + (1)
        enumerate_memo((n - 1) / 2, memo)
            .iter()
            .map(|psi| {
                let mut digits = padded(psi, k - 1);
                digits.push(1);
                HyperExpansion { digits }
            })
            .collect()
    } else {
        // H(2m) = 2·H(m) ⊎ (2·H(m-1) + (1²))
        let m = n / 2;
        let mut out: Vec<_> = enumerate_memo(m, memo)
            .iter()
            .map(|chi| {
                let mut digits = chi.digits.clone();
                digits.push(0);
                HyperExpansion { digits }
            })
            .collect();
        out.extend(enumerate_memo(m - 1, memo).iter().map(|chi| {
            let mut digits = padded(chi, k - 1);
            digits.push(2);
            HyperExpansion { digits }
        }));
        out
    };
    memo.insert(n, out.clone());
    out
}

/// All hyperbinary expansions of `n`, in descending lexicographic order
/// (so the binary expansion comes first). `enumerate(0)` is `[ε]`.
pub fn enumerate(n: u64) -> Vec<HyperExpansion> {
    let mut out = enumerate_memo(n, &mut HashMap::new());
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// `h(n)`, the number of hyperbinary partitions of `n`.
pub fn h_count(n: u64) -> usize {
    enumerate(n).len()
}
