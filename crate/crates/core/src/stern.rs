//! Stern's diatomic sequence, its q-analogue, and the Calkin-Wilf
//! sequences built from them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::poly::{LaurentPoly, RatFunc};

/// A nonnegative rational number kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactRational {
    num: BigUint,
    den: BigUint,
}

impl ExactRational {
    pub fn new(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Result<Self, Error> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::ZeroRationalDenominator);
        }
        let g = num.gcd(&den);
        if g.is_zero() || g.is_one() {
            return Ok(Self { num, den });
        }
        Ok(Self {
            num: num / &g,
            den: den / g,
        })
    }

    pub fn num(&self) -> &BigUint {
        &self.num
    }

    pub fn den(&self) -> &BigUint {
        &self.den
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Accepts `r/s` or a bare integer `r`.
impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("expected a rational r/s, got {s:?}"));
        let parse = |t: &str| -> Result<BigUint, Error> {
            let t = t.trim();
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigUint>().map_err(|_| bad())
        };
        match s.split_once('/') {
            Some((r, d)) => ExactRational::new(parse(r)?, parse(d)?),
            None => ExactRational::new(parse(s)?, 1u32),
        }
    }
}

/// `fusc(n)`: `fusc(0) = 0`, `fusc(1) = 1`, `fusc(2n) = fusc(n)`,
/// `fusc(2n+1) = fusc(n) + fusc(n+1)`.
///
/// Runs over the bits of `n`, keeping `fusc(n) = a·fusc(m) + b·fusc(m+1)`
/// for the current tail `m`; constant stack for any `n`.
pub fn fusc(mut n: u64) -> u64 {
    let (mut a, mut b) = (1u64, 0u64);
    while n > 0 {
        if n & 1 == 0 {
            a += b;
        } else {
            b += a;
        }
        n >>= 1;
    }
    b
}

/// [`fusc`] for indices beyond `u64`.
pub fn fusc_big(n: &BigUint) -> BigUint {
    let (mut a, mut b) = (BigUint::one(), BigUint::zero());
    for i in 0..n.bits() {
        if n.bit(i) {
            b += &a;
        } else {
            a += &b;
        }
    }
    b
}

/// `(fusc_q(n), fusc_q(n+1))`, walking the binary expansion of `n` from the
/// top bit down.
fn fusc_q_pair(n: u64) -> (LaurentPoly, LaurentPoly) {
    if n == 0 {
        return (LaurentPoly::zero(), LaurentPoly::one());
    }
    let q = LaurentPoly::q();
    let q2 = LaurentPoly::monomial(1, 2);
    // (fusc_q(1), fusc_q(2))
    let (mut lo, mut hi) = (LaurentPoly::one(), q.clone());
    let top = 63 - n.leading_zeros();
    for bit in (0..top).rev() {
        let even = &q * &lo;
        let odd = &hi + &(&q2 * &lo);
        if n >> bit & 1 == 0 {
            // m -> 2m
            hi = odd;
            lo = even;
        } else {
            // m -> 2m + 1
            lo = odd;
            hi = &q * &hi;
        }
    }
    (lo, hi)
}

/// The q-Stern polynomial: `fusc_q(0) = 0`, `fusc_q(1) = 1`,
/// `fusc_q(2n) = q·fusc_q(n)`, `fusc_q(2n+1) = fusc_q(n+1) + q²·fusc_q(n)`.
pub fn fusc_q(n: u64) -> LaurentPoly {
    fusc_q_pair(n).0
}

/// `CW(n) = fusc(n) / fusc(n+1)` in lowest terms.
pub fn cw(n: u64) -> ExactRational {
    ExactRational::new(fusc(n), fusc(n + 1)).expect("fusc(n+1) > 0")
}

pub fn cw_big(n: &BigUint) -> ExactRational {
    ExactRational::new(fusc_big(n), fusc_big(&(n + 1u32))).expect("fusc(n+1) > 0")
}

/// `CW_q(n) = fusc_q(n) / fusc_q(n+1)`, with `CW_q(0) = 0`.
pub fn cw_q(n: u64) -> RatFunc {
    let (num, den) = fusc_q_pair(n);
    RatFunc::new(num, den).expect("fusc_q(n+1) is nonzero")
}

/// A bottom-up table of `fusc_q(0..=max)`, for sweeps that touch every
/// index. Build one per sweep; it is read-only afterwards.
#[derive(Clone, Debug)]
pub struct FuscQTable {
    values: Vec<LaurentPoly>,
}

impl FuscQTable {
    pub fn up_to(max: u64) -> Self {
        let q = LaurentPoly::q();
        let q2 = LaurentPoly::monomial(1, 2);
        let mut values: Vec<LaurentPoly> = Vec::with_capacity(max as usize + 1);
        for n in 0..=max as usize {
            let v = match n {
                0 => LaurentPoly::zero(),
                1 => LaurentPoly::one(),
                _ if n % 2 == 0 => &q * &values[n / 2],
                _ => &values[n / 2 + 1] + &(&q2 * &values[n / 2]),
            };
            values.push(v);
        }
        Self { values }
    }

    pub fn get(&self, n: u64) -> Option<&LaurentPoly> {
        self.values.get(n as usize)
    }

    pub fn max(&self) -> u64 {
        self.values.len() as u64 - 1
    }
}
