//! Continued fractions, the Calkin-Wilf index of a rational, and the
//! q-deformed rationals `[r/s]_q`.
//!
//! `[r/s]_q` is computed two ways: by evaluating the q-substituted
//! continued fraction ([`qdeform`]) and as a ratio of closure-set
//! polynomials of two oriented paths ([`qdeform_via_graph`]).

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::poly::{LaurentPoly, RatFunc};

/// `[a₁, a₂, …, a_m]` with `a₁ ≥ 0`, `aᵢ ≥ 1` for `i ≥ 2`, `m ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContinuedFraction {
    terms: Vec<u64>,
}

impl ContinuedFraction {
    pub fn new(terms: Vec<u64>) -> Result<Self, Error> {
        if terms.is_empty() {
            return Err(Error::InvariantViolation("continued fraction needs at least one term".into()));
        }
        if terms[1..].contains(&0) {
            return Err(Error::InvariantViolation(format!(
                "continued fraction terms after the first must be positive: {terms:?}"
            )));
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exact value as `(numerator, denominator)` in lowest terms.
    pub fn value(&self) -> (BigUint, BigUint) {
        let mut iter = self.terms.iter().rev();
        let mut num = BigUint::from(*iter.next().expect("nonempty"));
        let mut den = BigUint::from(1u32);
        for &a in iter {
            // a + den/num
            let next = BigUint::from(a) * &num + &den;
            den = num;
            num = next;
        }
        let g = num.gcd(&den);
        if g.is_zero() {
            return (num, den);
        }
        (num / &g, den / g)
    }

    /// True iff the value exceeds 1.
    pub fn exceeds_one(&self) -> bool {
        let a1 = self.terms[0];
        a1 >= 2 || (a1 == 1 && self.terms.len() >= 2)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// The Euclidean expansion of `r/s`; the last term is at least 2 whenever
/// there are two or more terms.
pub fn cf_expand(r: u64, s: u64) -> Result<ContinuedFraction, Error> {
    if s == 0 {
        return Err(Error::ZeroRationalDenominator);
    }
    let (mut a, mut b) = (r, s);
    let mut terms = Vec::new();
    loop {
        terms.push(a / b);
        let rem = a % b;
        if rem == 0 {
            break;
        }
        (a, b) = (b, rem);
    }
    ContinuedFraction::new(terms)
}

/// The odd-length representation of `r/s`.
pub fn cf_odd(r: u64, s: u64) -> Result<ContinuedFraction, Error> {
    let mut terms = cf_expand(r, s)?.terms;
    if terms.len() % 2 == 0 {
        let last = terms.last_mut().expect("nonempty");
        *last -= 1;
        terms.push(1);
    }
    ContinuedFraction::new(terms)
}

/// The unique `n` with `CW(n) = r/s`. Non-reduced input is reduced first.
///
/// From the odd-length expansion `[a₁, …, a_m]`, write `a₁` ones, `a₂`
/// zeros, `a₃` ones, …; the reversed bit string is the binary expansion
/// of `n`.
pub fn cw_index(r: u64, s: u64) -> Result<BigUint, Error> {
    if s == 0 {
        return Err(Error::ZeroRationalDenominator);
    }
    if r == 0 {
        return Ok(BigUint::zero());
    }
    let g = r.gcd(&s);
    let cf = cf_odd(r / g, s / g)?;
    let mut n = BigUint::zero();
    // The reversal puts the last run in the most significant position.
    for (i, &a) in cf.terms.iter().enumerate().rev() {
        let bit = u8::from(i % 2 == 0);
        for _ in 0..a {
            n = (n << 1u32) + BigUint::from(bit);
        }
    }
    Ok(n)
}

/// `[a₁, …, a_m]_q` for an arbitrary representation.
///
/// Level `i` contributes `[aᵢ]_q` (odd `i`) or `[aᵢ]_{q⁻¹}` (even `i`),
/// and the numerator sitting under level `i` is `q^{aᵢ}` (odd) or
/// `q^{-aᵢ}` (even). Evaluated from the bottom up.
pub fn qdeform_cf(cf: &ContinuedFraction) -> Result<RatFunc, Error> {
    let level = |i: usize| {
        let a = cf.terms[i];
        // i is 0-based, so even i is an odd position
        if i.is_multiple_of(2) {
            (LaurentPoly::qint(a), LaurentPoly::monomial(1, a as i64))
        } else {
            (LaurentPoly::qint(a).reverse_var(), LaurentPoly::monomial(1, -(a as i64)))
        }
    };
    let m = cf.len();
    let mut value = RatFunc::from_poly(level(m - 1).0);
    for i in (0..m - 1).rev() {
        let (head, numer) = level(i);
        value = RatFunc::from_poly(head).add(&value.recip()?.scale(&numer));
    }
    Ok(value)
}

/// `[r/s]_q` from the Euclidean expansion; `[0/s]_q = 0`.
pub fn qdeform(r: u64, s: u64) -> Result<RatFunc, Error> {
    if s == 0 {
        return Err(Error::ZeroRationalDenominator);
    }
    if r == 0 {
        return Ok(RatFunc::zero());
    }
    qdeform_cf(&cf_expand(r, s)?)
}

/// `[(r+s)/s]_q = q·[r/s]_q + 1`.
pub fn qdeform_shift_check(r: u64, s: u64) -> Result<bool, Error> {
    let lhs = qdeform(r + s, s)?;
    let rhs = qdeform(r, s)?.scale(&LaurentPoly::q()).add(&RatFunc::one());
    Ok(lhs == rhs)
}

/// Orientation of the arc between consecutive path vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// `v_{j+1} → v_j`
    Left,
    /// `v_j → v_{j+1}`
    Right,
}

/// A path `v₁ - v₂ - … - v_V` whose `V - 1` arcs each point left or right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientedPath {
    vertices: usize,
    arcs: Vec<Direction>,
}

impl OrientedPath {
    pub fn new(vertices: usize, arcs: Vec<Direction>) -> Result<Self, Error> {
        if arcs.len() + 1 != vertices.max(1) {
            return Err(Error::InvariantViolation(format!(
                "{vertices} vertices need {} arcs, got {}",
                vertices.saturating_sub(1),
                arcs.len()
            )));
        }
        Ok(Self { vertices, arcs })
    }

    pub fn empty() -> Self {
        Self {
            vertices: 0,
            arcs: Vec::new(),
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arcs(&self) -> &[Direction] {
        &self.arcs
    }

    /// Removes the `k` leftmost vertices (all of them if `k ≥ V`).
    pub fn drop_left(&self, k: usize) -> Self {
        if k >= self.vertices {
            return Self::empty();
        }
        Self {
            vertices: self.vertices - k,
            arcs: self.arcs[k..].to_vec(),
        }
    }

    /// Whether `members` (bit `j` for vertex `v_{j+1}`) is a closure set:
    /// no arc leaves it.
    pub fn is_closure_set(&self, members: u64) -> bool {
        self.arcs.iter().enumerate().all(|(j, dir)| {
            let (a, b) = (members >> j & 1 == 1, members >> (j + 1) & 1 == 1);
            match dir {
                Direction::Right => !a || b,
                Direction::Left => !b || a,
            }
        })
    }
}

/// The path for `[a₁, …, a_m]`: a path with `N = Σ aᵢ` edges, the first
/// `a₁` pointing left, the next `a₂` right, and so on, with both end
/// vertices deleted.
pub fn closure_graph(cf: &ContinuedFraction) -> Result<OrientedPath, Error> {
    if !cf.exceeds_one() {
        return Err(Error::UnsupportedDomain(format!(
            "the closure-set model needs a value greater than 1, got {cf}"
        )));
    }
    let edges: Vec<Direction> = cf
        .terms
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| {
            let dir = if i % 2 == 0 { Direction::Left } else { Direction::Right };
            std::iter::repeat_n(dir, a as usize)
        })
        .collect();
    let n = edges.len();
    // vertices v₁…v_{N-1}; the arc between v_j and v_{j+1} is edge j+1
    OrientedPath::new(n - 1, edges[1..n - 1].to_vec())
}

/// `f_G(q) = Σ_X q^{|X|}` over closure sets `X`, by a left-to-right pass
/// tracking whether the previous vertex is in `X`.
pub fn closure_poly(g: &OrientedPath) -> LaurentPoly {
    if g.vertices == 0 {
        return LaurentPoly::one();
    }
    let q = LaurentPoly::q();
    let (mut with_prev, mut without_prev) = (q.clone(), LaurentPoly::one());
    for dir in &g.arcs {
        let (take, skip) = match dir {
            // prev ∈ X forces cur ∈ X
            Direction::Right => (&with_prev + &without_prev, without_prev),
            // cur ∈ X forces prev ∈ X
            Direction::Left => (with_prev.clone(), &with_prev + &without_prev),
        };
        with_prev = &take * &q;
        without_prev = skip;
    }
    with_prev + without_prev
}

/// `[r/s]_q = f_G(q) / f_G'(q)`, where `G'` drops a further `a₁` vertices
/// from the left of `G`. Only defined here for `r/s > 1`.
pub fn qdeform_via_graph(r: u64, s: u64) -> Result<RatFunc, Error> {
    let cf = cf_expand(r, s)?;
    if !cf.exceeds_one() {
        return Err(Error::UnsupportedDomain(format!(
            "the closure-set model is only used for r/s > 1, got {r}/{s}"
        )));
    }
    let g = closure_graph(&cf)?;
    let g_prime = g.drop_left(cf.terms[0] as usize);
    RatFunc::new(closure_poly(&g), closure_poly(&g_prime))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stern::{cw, cw_big, cw_q};
    use proptest::prelude::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn brute_closure_poly(g: &OrientedPath) -> LaurentPoly {
        LaurentPoly::from_terms(
            (0..1u64 << g.vertices())
                .filter(|&x| g.is_closure_set(x))
                .map(|x| (x.count_ones() as i64, 1)),
        )
    }

    #[test]
    fn cf_examples() {
        assert_eq!(cf_expand(7, 3).unwrap().terms(), [2, 3]);
        assert_eq!(cf_expand(5, 1).unwrap().terms(), [5]);
        assert_eq!(cf_expand(5, 2).unwrap().terms(), [2, 2]);
        assert_eq!(cf_expand(3, 5).unwrap().terms(), [0, 1, 1, 2]);
        assert_eq!(cf_expand(1, 0), Err(Error::ZeroRationalDenominator));
        assert_eq!(cf_odd(7, 3).unwrap().terms(), [2, 2, 1]);
        assert_eq!(cf_odd(5, 2).unwrap().terms(), [2, 1, 1]);
        assert_eq!(cf_odd(3, 1).unwrap().terms(), [3]);
        assert!(ContinuedFraction::new(vec![]).is_err());
        assert!(ContinuedFraction::new(vec![1, 0]).is_err());
    }

    #[test]
    fn cf_values_round_trip() {
        for r in 1..=40u64 {
            for s in 1..=40u64 {
                let g = r.gcd(&s);
                let want = (BigUint::from(r / g), BigUint::from(s / g));
                assert_eq!(cf_expand(r, s).unwrap().value(), want);
                let odd = cf_odd(r, s).unwrap();
                assert_eq!(odd.len() % 2, 1);
                assert_eq!(odd.value(), want);
            }
        }
    }

    #[test]
    fn cw_index_examples() {
        assert_eq!(cw_index(7, 3).unwrap(), BigUint::from(19u32));
        assert_eq!(cw_index(1, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(cw_index(5, 2).unwrap(), BigUint::from(11u32));
        assert_eq!(cw_index(14, 6).unwrap(), BigUint::from(19u32));
        assert_eq!(cw_index(0, 4).unwrap(), BigUint::zero());
        // 100/1 lives at 2^100 - 1
        assert_eq!(cw_index(100, 1).unwrap(), (BigUint::from(1u32) << 100u32) - 1u32);
    }

    #[test]
    fn cw_index_round_trip() {
        for r in 1..=100u64 {
            for s in 1..=100u64 {
                if r.gcd(&s) != 1 {
                    continue;
                }
                let n = cw_index(r, s).unwrap();
                assert_eq!(cw_big(&n).to_string(), format!("{r}/{s}"));
            }
        }
    }

    #[test]
    fn qdeform_examples() {
        assert_eq!(qdeform(5, 2).unwrap(), rf("(1 + 2q + q^2 + q^3) / (1 + q)"));
        assert_eq!(qdeform(1, 1).unwrap(), RatFunc::one());
        assert_eq!(qdeform(2, 1).unwrap(), rf("1 + q"));
        assert!(qdeform(0, 3).unwrap().is_zero());
        assert_eq!(qdeform(1, 0).unwrap_err(), Error::ZeroRationalDenominator);
        assert_eq!(qdeform(5, 2).unwrap().to_string(), "(1 + 2q + q^2 + q^3) / (1 + q)");
    }

    #[test]
    fn qdeform_matches_q_calkin_wilf_table() {
        // [CW(n)]_q = q·CW_q(n) on the first rows
        for n in 1..=11u64 {
            let c = cw(n);
            let (r, s) = (c.num().to_u64_digits()[0], c.den().to_u64_digits()[0]);
            assert_eq!(qdeform(r, s).unwrap(), cw_q(n).scale(&LaurentPoly::q()), "n={n}");
        }
    }

    #[test]
    fn representation_independence() {
        for r in 1..=50u64 {
            for s in 1..=50u64 {
                let a = qdeform_cf(&cf_expand(r, s).unwrap()).unwrap();
                let b = qdeform_cf(&cf_odd(r, s).unwrap()).unwrap();
                assert_eq!(a, b, "{r}/{s}");
            }
        }
    }

    #[test]
    fn specialization_at_one() {
        for r in 1..=40u64 {
            for s in 1..=40u64 {
                let (a, b) = qdeform(r, s).unwrap().eval_at_one();
                assert_eq!(a * s, b * r, "{r}/{s}");
            }
        }
    }

    #[test]
    fn shift_check_examples() {
        assert!(qdeform_shift_check(1, 1).unwrap());
        assert!(qdeform_shift_check(5, 2).unwrap());
        assert!(qdeform_shift_check(7, 3).unwrap());
        for r in 1..=30 {
            for s in 1..=30 {
                assert!(qdeform_shift_check(r, s).unwrap());
            }
        }
    }

    #[test]
    fn closure_poly_examples() {
        let g = closure_graph(&ContinuedFraction::new(vec![2, 2]).unwrap()).unwrap();
        assert_eq!(g.vertices(), 3);
        assert_eq!(g.arcs(), [Direction::Left, Direction::Right]);
        assert_eq!(closure_poly(&g), "1 + 2q + q^2 + q^3".parse().unwrap());
        let single = OrientedPath::new(1, vec![]).unwrap();
        assert_eq!(closure_poly(&single), "1 + q".parse().unwrap());
        assert_eq!(closure_poly(&OrientedPath::empty()), LaurentPoly::one());
        assert_eq!(g.drop_left(2), single);
    }

    #[test]
    fn closure_graph_rejects_small_values() {
        let one = ContinuedFraction::new(vec![1]).unwrap();
        assert!(matches!(closure_graph(&one), Err(Error::UnsupportedDomain(_))));
        assert!(matches!(qdeform_via_graph(2, 3), Err(Error::UnsupportedDomain(_))));
        assert!(matches!(qdeform_via_graph(3, 3), Err(Error::UnsupportedDomain(_))));
    }

    #[test]
    fn graph_model_examples() {
        assert_eq!(qdeform_via_graph(5, 2).unwrap(), rf("(1 + 2q + q^2 + q^3) / (1 + q)"));
        assert_eq!(qdeform_via_graph(2, 1).unwrap(), qdeform(2, 1).unwrap());
        assert_eq!(qdeform_via_graph(7, 3).unwrap(), qdeform(7, 3).unwrap());
    }

    #[test]
    fn closure_poly_exhaustive_small_paths() {
        for v in 0..=10usize {
            let arcs = v.saturating_sub(1);
            for mask in 0..1u32 << arcs {
                let dirs = (0..arcs)
                    .map(|j| if mask >> j & 1 == 1 { Direction::Right } else { Direction::Left })
                    .collect();
                let g = OrientedPath::new(v, dirs).unwrap();
                assert_eq!(closure_poly(&g), brute_closure_poly(&g));
            }
        }
    }

    proptest! {
        #[test]
        fn closure_poly_matches_brute_force(v in 11usize..=14, mask in any::<u32>()) {
            let dirs = (0..v - 1)
                .map(|j| if mask >> j & 1 == 1 { Direction::Right } else { Direction::Left })
                .collect();
            let g = OrientedPath::new(v, dirs).unwrap();
            prop_assert_eq!(closure_poly(&g), brute_closure_poly(&g));
        }
    }
}
