//! Generating functions over `𝓓(n)`, each computed two ways: by direct
//! enumeration and by a Stern-type recurrence.
//!
//! * `h_q(n)   = Σ q^{ℓ(d)}`
//! * `H_rs(n)  = Σ r^{t(d)} s^{z(d)}`
//! * `h̄_st(n) = Σ s^{p₁(d)} t^{p₂(d)}`
//!
//! All three satisfy `f(-1) = 0`, `f(0) = 1`, and for `n ≥ 1`
//! `f(2n-1) = odd(f(n-1))`, `f(2n) = even(f(n), f(n-1))`.

use serde::Serialize;

use super::enumerate;
use crate::poly::{BiPoly, LaurentPoly};

struct Recurrence<T> {
    minus_one: T,
    zero: T,
    odd: fn(&T) -> T,
    even: fn(&T, &T) -> T,
}

impl<T: Clone> Recurrence<T> {
    /// `(f(n-1), f(n))`, halving `n` at each step.
    fn pair(&self, n: u64) -> (T, T) {
        if n == 0 {
            return (self.minus_one.clone(), self.zero.clone());
        }
        let m = n / 2;
        let (prev, cur) = self.pair(m);
        if n.is_multiple_of(2) {
            ((self.odd)(&prev), (self.even)(&cur, &prev))
        } else {
            let at_2m = if m == 0 { cur.clone() } else { (self.even)(&cur, &prev) };
            (at_2m, (self.odd)(&cur))
        }
    }

    fn at(&self, n: i64) -> T {
        match n {
            _ if n < 0 => self.minus_one.clone(),
            _ => self.pair(n as u64).1,
        }
    }

    fn table(&self, max: u64) -> Vec<T> {
        let mut v: Vec<T> = Vec::with_capacity(max as usize + 1);
        v.push(self.zero.clone());
        for n in 1..=max as usize {
            let next = if n % 2 == 1 {
                (self.odd)(&v[(n - 1) / 2])
            } else {
                (self.even)(&v[n / 2], &v[n / 2 - 1])
            };
            v.push(next);
        }
        v
    }
}

fn hq_rec() -> Recurrence<LaurentPoly> {
    Recurrence {
        minus_one: LaurentPoly::zero(),
        zero: LaurentPoly::one(),
        odd: |prev| prev.shift(1),
        even: |cur, prev| cur + &prev.shift(2),
    }
}

fn hrs_rec() -> Recurrence<BiPoly> {
    Recurrence {
        minus_one: BiPoly::zero(),
        zero: BiPoly::one(),
        odd: |prev| prev.clone(),
        even: |cur, prev| &(&BiPoly::y() * cur) + &(&BiPoly::x() * prev),
    }
}

fn hbar_rec() -> Recurrence<BiPoly> {
    Recurrence {
        minus_one: BiPoly::zero(),
        zero: BiPoly::one(),
        odd: |prev| &BiPoly::x() * prev,
        even: |cur, prev| cur + &(&BiPoly::y() * prev),
    }
}

/// `h_q(n)` by the recurrence `h_q(2n-1) = q·h_q(n-1)`,
/// `h_q(2n) = h_q(n) + q²·h_q(n-1)`; zero for negative `n`.
pub fn h_q(n: i64) -> LaurentPoly {
    hq_rec().at(n)
}

/// `h_q(n)` summed over [`enumerate`].
pub fn h_q_enumerated(n: u64) -> LaurentPoly {
    LaurentPoly::from_terms(enumerate(n).iter().map(|d| (d.stats().ell as i64, 1)))
}

/// `[h_q(0), …, h_q(max)]` by the recurrence.
pub fn h_q_table(max: u64) -> Vec<LaurentPoly> {
    hq_rec().table(max)
}

/// `H_rs(n)` by `H(2n-1) = H(n-1)`, `H(2n) = s·H(n) + r·H(n-1)`.
/// The first [`BiPoly`] variable is `r` (exponent `t(d)`), the second `s`
/// (exponent `z(d)`).
pub fn h_rs(n: i64) -> BiPoly {
    hrs_rec().at(n)
}

pub fn h_rs_enumerated(n: u64) -> BiPoly {
    enumerate(n).iter().fold(BiPoly::zero(), |acc, d| {
        let st = d.stats();
        acc + BiPoly::monomial(1, st.t, st.z)
    })
}

pub fn h_rs_table(max: u64) -> Vec<BiPoly> {
    hrs_rec().table(max)
}

/// `h̄_st(n)` by `h̄(2n-1) = s·h̄(n-1)`, `h̄(2n) = h̄(n) + t·h̄(n-1)`.
/// First variable `s` (exponent `p₁`), second `t` (exponent `p₂`).
pub fn hbar_st(n: i64) -> BiPoly {
    hbar_rec().at(n)
}

pub fn hbar_st_enumerated(n: u64) -> BiPoly {
    enumerate(n).iter().fold(BiPoly::zero(), |acc, d| {
        let st = d.stats();
        acc + BiPoly::monomial(1, st.p1, st.p2)
    })
}

pub fn hbar_st_table(max: u64) -> Vec<BiPoly> {
    hbar_rec().table(max)
}

/// Candidate forms of the `(p₁, p₂)` recurrence, each checked against
/// enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HbarReading {
    /// `h̄(2n-1) = h̄(n-1)`, no weight on the odd step.
    OddUnweighted,
    /// `h̄(2n-1) = s·h̄(n-1)`.
    OddTimesS,
    /// `h̄(2n) = h̄(n) + t·h̄(n-1)`, reading `q²` as `t`.
    EvenQSquaredAsT,
    /// `h̄(2n) = h̄(n) + s²·h̄(n-1)`, reading `q` as `s`.
    EvenQSquaredAsSSquared,
}

impl HbarReading {
    pub const ALL: [HbarReading; 4] = [
        HbarReading::OddUnweighted,
        HbarReading::OddTimesS,
        HbarReading::EvenQSquaredAsT,
        HbarReading::EvenQSquaredAsSSquared,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            HbarReading::OddUnweighted => "hbar(2n-1) = hbar(n-1)",
            HbarReading::OddTimesS => "hbar(2n-1) = s*hbar(n-1)",
            HbarReading::EvenQSquaredAsT => "hbar(2n) = hbar(n) + t*hbar(n-1)",
            HbarReading::EvenQSquaredAsSSquared => "hbar(2n) = hbar(n) + s^2*hbar(n-1)",
        }
    }
}

/// How one reading fares against enumeration over `1 ≤ n`, `2n ≤ max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HbarDiscrepancy {
    pub reading: HbarReading,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<u64>,
}

/// Tests each [`HbarReading`] against enumerated values up to `max`.
pub fn hbar_form_report(max: u64) -> Vec<HbarDiscrepancy> {
    let truth: Vec<BiPoly> = (0..=max).map(hbar_st_enumerated).collect();
    let s = BiPoly::x();
    let t = BiPoly::y();
    let s2 = &s * &s;
    HbarReading::ALL
        .iter()
        .map(|&reading| {
            let mut checked = 0;
            let mut failures = 0;
            let mut first_failure = None;
            for n in 1..=max / 2 {
                let (lo, mid, n1) = (&truth[n as usize - 1], &truth[n as usize], n as usize);
                let (lhs, rhs) = match reading {
                    HbarReading::OddUnweighted => (&truth[2 * n1 - 1], lo.clone()),
                    HbarReading::OddTimesS => (&truth[2 * n1 - 1], &s * lo),
                    HbarReading::EvenQSquaredAsT => (&truth[2 * n1], mid + &(&t * lo)),
                    HbarReading::EvenQSquaredAsSSquared => (&truth[2 * n1], mid + &(&s2 * lo)),
                };
                checked += 1;
                if *lhs != rhs {
                    failures += 1;
                    first_failure.get_or_insert(n);
                }
            }
            HbarDiscrepancy {
                reading,
                checked,
                failures,
                first_failure,
            }
        })
        .collect()
}
