//! Fence posets built from principal prefixes, their order ideals, and the
//! isomorphism between `𝓓(n)` and the ideal lattice.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Error;
use crate::hyperbinary::{enumerate, h_q, min_element, principal_prefix, BinaryExpansion, HyperExpansion};
use crate::poly::{LaurentPoly, RatFunc};

/// Elements `x₁ … x_r`; covers only relate neighbours. `up[i]` (for
/// `x_{i+1}`, `i ≥ 1`) is true when `x_i ⋖ x_{i+1}`, false when
/// `x_{i+1} ⋖ x_i`. `up[0]` is unused.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FencePoset {
    up: Vec<bool>,
}

/// A set of fence elements; bit `i - 1` stands for `x_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Ideal(pub u64);

impl Ideal {
    pub fn contains(self, i: usize) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Ideal) -> bool {
        self.0 & !other.0 == 0
    }

    /// The indicator vector as a digit string of length `r`, `x₁` first.
    pub fn indicator(self, r: usize) -> String {
        (1..=r).map(|i| if self.contains(i) { '1' } else { '0' }).collect()
    }
}

impl FencePoset {
    pub fn from_bits(bits: &[u8]) -> Self {
        Self {
            up: bits.iter().enumerate().map(|(i, &b)| i > 0 && b == 1).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn is_up(&self, i: usize) -> bool {
        self.up[i - 1]
    }

    /// Cover relations as `(lower, upper)` pairs of 1-based indices.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (2..=self.size())
            .map(|i| if self.is_up(i) { (i - 1, i) } else { (i, i - 1) })
            .collect()
    }

    pub fn is_ideal(&self, set: Ideal) -> bool {
        self.covers()
            .into_iter()
            .all(|(lo, hi)| !set.contains(hi) || set.contains(lo))
    }

    /// Hasse diagram with `x₁ … x_r` as labels, bottom to top.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph fence {\n  rankdir=BT;\n");
        for i in 1..=self.size() {
            let _ = writeln!(out, "  \"x{i}\";");
        }
        for (lo, hi) in self.covers() {
            let _ = writeln!(out, "  \"x{lo}\" -> \"x{hi}\";");
        }
        out.push_str("}\n");
        out
    }
}

/// `𝓕(n)`, from the principal prefix of `β(n)`. `fence(0)` is empty.
pub fn fence(n: u64) -> FencePoset {
    FencePoset::from_bits(principal_prefix(n).bits())
}

/// All order ideals, sorted by size and then bitset value.
pub fn ideals(f: &FencePoset) -> Vec<Ideal> {
    let mut partial = vec![0u64];
    for i in 1..=f.size() {
        let bit = 1u64 << (i - 1);
        let mut next = Vec::with_capacity(partial.len() * 2);
        for &set in &partial {
            let prev_in = i > 1 && set & (bit >> 1) != 0;
            let (may_take, may_skip) = match i {
                1 => (true, true),
                _ if f.is_up(i) => (prev_in, true),
                _ => (true, !prev_in),
            };
            if may_skip {
                next.push(set);
            }
            if may_take {
                next.push(set | bit);
            }
        }
        partial = next;
    }
    let mut out: Vec<Ideal> = partial.into_iter().map(Ideal).collect();
    out.sort_by_key(|i| (i.len(), i.0));
    out
}

/// `rgf_n(q) = Σ_I q^{|I|}` over ideals of `𝓕(n)`, counted by a pass
/// along the fence without listing the ideals.
pub fn rgf(n: u64) -> LaurentPoly {
    let f = fence(n);
    if f.size() == 0 {
        return LaurentPoly::one();
    }
    let q = LaurentPoly::q();
    let (mut with_last, mut without_last) = (q.clone(), LaurentPoly::one());
    for i in 2..=f.size() {
        let (take, skip) = if f.is_up(i) {
            (with_last.clone(), &with_last + &without_last)
        } else {
            (&with_last + &without_last, without_last)
        };
        with_last = &take * &q;
        without_last = skip;
    }
    with_last + without_last
}

/// `s̃(d)`: the first `r` prefix sums of `d` minus those of `0̂(n)`.
pub fn stilde(d: &HyperExpansion) -> Result<Vec<u8>, Error> {
    let n = d.value();
    let r = principal_prefix(n).len();
    let (sd, s0) = (d.s_vector(), min_element(n).s_vector());
    sd[..r]
        .iter()
        .zip(&s0[..r])
        .map(|(&a, &b)| match a.checked_sub(b) {
            Some(v @ 0..=1) => Ok(v as u8),
            _ => Err(Error::InvariantViolation(format!(
                "s-tilde of {d} has entry {} outside {{0,1}}",
                a as i128 - b as i128
            ))),
        })
        .collect()
}

fn stilde_ideal(d: &HyperExpansion) -> Result<Ideal, Error> {
    let v = stilde(d)?;
    Ok(Ideal(v.iter().enumerate().map(|(i, &b)| u64::from(b) << i).sum()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub n: u64,
    pub ok: bool,
    pub size: usize,
    pub counterexample: Option<String>,
}

/// Checks that `s̃` maps `𝓓(n)` onto the ideals of `𝓕(n)` and that
/// `c ≤ d ⟺ s̃(c) ⊆ s̃(d)` for every pair.
pub fn iso_check(n: u64) -> IsoReport {
    let fail = |size, msg: String| IsoReport {
        n,
        ok: false,
        size,
        counterexample: Some(msg),
    };
    let expansions = enumerate(n);
    let mut images = Vec::with_capacity(expansions.len());
    for d in &expansions {
        match stilde_ideal(d) {
            Ok(i) => images.push(i),
            Err(e) => return fail(expansions.len(), e.to_string()),
        }
    }
    let f = fence(n);
    let expected: HashSet<Ideal> = ideals(&f).into_iter().collect();
    let got: HashSet<Ideal> = images.iter().copied().collect();
    if got.len() != images.len() {
        return fail(expansions.len(), "s-tilde is not injective".into());
    }
    if let Some(extra) = got.symmetric_difference(&expected).next() {
        return fail(
            expansions.len(),
            format!("indicator {} is in only one of the two sets", extra.indicator(f.size())),
        );
    }
    let s: Vec<Vec<u64>> = expansions.iter().map(HyperExpansion::s_vector).collect();
    for (a, (ca, ia)) in s.iter().zip(&images).enumerate() {
        for (b, (cb, ib)) in s.iter().zip(&images).enumerate() {
            let below = ca.iter().zip(cb).all(|(x, y)| x <= y);
            if below != ia.is_subset(*ib) {
                return fail(
                    expansions.len(),
                    format!("order mismatch between {} and {}", expansions[a], expansions[b]),
                );
            }
        }
    }
    IsoReport {
        n,
        ok: true,
        size: expansions.len(),
        counterexample: None,
    }
}

/// `q^{r+s}·rgf_n(q⁻¹)` with `r = |𝓕(n)|` and `s` the number of ones in `β(n)`.
pub fn weighted_rgf(n: u64) -> LaurentPoly {
    let r = fence(n).size() as i64;
    let s = BinaryExpansion::of(n).ones() as i64;
    rgf(n).reverse_var().shift(r + s)
}

/// `h_q(n) = q^{r+s}·rgf_n(q⁻¹)`.
pub fn weight_check(n: u64) -> bool {
    h_q(n as i64) == weighted_rgf(n)
}

/// `CW_q(n)` rebuilt from rank generating functions:
/// `q^{r'−r+s'−s}·rgf_{n−1}(q⁻¹) / rgf_n(q⁻¹)`, primes referring to `n − 1`.
pub fn qcw_fence(n: u64) -> Result<RatFunc, Error> {
    if n == 0 {
        return Err(Error::NotApplicable("the fence form of CW_q needs n >= 1".into()));
    }
    let stat = |m: u64| (fence(m).size() as i64, BinaryExpansion::of(m).ones() as i64);
    let ((r, s), (r1, s1)) = (stat(n), stat(n - 1));
    let num = rgf(n - 1).reverse_var().shift(r1 - r + s1 - s);
    RatFunc::new(num, rgf(n).reverse_var())
}

/// Hasse diagram of `𝓙(𝓕(n))`, nodes labelled by indicator strings.
pub fn ideals_dot(n: u64) -> String {
    let f = fence(n);
    let all = ideals(&f);
    let label = |i: Ideal| match f.size() {
        0 => "∅".to_string(),
        r => i.indicator(r),
    };
    let mut out = format!("digraph \"J(F({n}))\" {{\n  rankdir=BT;\n");
    for &i in &all {
        let _ = writeln!(out, "  \"{}\";", label(i));
    }
    let members: HashSet<Ideal> = all.iter().copied().collect();
    for &i in &all {
        for x in 1..=f.size() {
            let bigger = Ideal(i.0 | 1 << (x - 1));
            if !i.contains(x) && members.contains(&bigger) {
                let _ = writeln!(out, "  \"{}\" -> \"{}\";", label(i), label(bigger));
            }
        }
    }
    out.push_str("}\n");
    out
}
