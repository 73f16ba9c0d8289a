//! Products of the 2×2 matrices
//! `L = [[1, 0], [1, q⁻¹]]`, `R = [[q, 1], [0, 1]]` and their two-variable
//! versions `L′ = [[1, 0], [r, s]]`, `R′ = [[r, s], [0, 1]]`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Error;
use crate::hyperbinary::{bit_len, h_q, h_rs, BinaryExpansion};
use crate::poly::{BiPoly, LaurentPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Letter {
    L,
    R,
}

/// Drop the leading 1 of `β(n)`, read the rest backwards, `0 ↦ L`, `1 ↦ R`.
pub fn word_of(n: u64) -> Vec<Letter> {
    let beta = BinaryExpansion::of(n);
    beta.bits()
        .iter()
        .skip(1)
        .rev()
        .map(|&b| if b == 0 { Letter::L } else { Letter::R })
        .collect()
}

/// A 2×2 matrix of Laurent polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
    pub c: LaurentPoly,
    pub d: LaurentPoly,
}

impl Mat2 {
    pub fn new(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::one())
    }

    pub fn l() -> Self {
        Self::new(LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::one(), LaurentPoly::monomial(1, -1))
    }

    pub fn r() -> Self {
        Self::new(LaurentPoly::q(), LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::one())
    }

    pub fn of_letter(x: Letter) -> Self {
        match x {
            Letter::L => Self::l(),
            Letter::R => Self::r(),
        }
    }

    pub fn det(&self) -> LaurentPoly {
        &self.a * &self.d - &self.b * &self.c
    }

    /// `M·(1, 1)ᵀ`.
    pub fn row_sums(&self) -> (LaurentPoly, LaurentPoly) {
        (&self.a + &self.b, &self.c + &self.d)
    }

    /// The integer matrix at `q = 1`.
    pub fn eval_at_one(&self) -> [[BigInt; 2]; 2] {
        [
            [self.a.eval_at_one(), self.b.eval_at_one()],
            [self.c.eval_at_one(), self.d.eval_at_one()],
        ]
    }

    pub fn rows(&self) -> [[String; 2]; 2] {
        [
            [self.a.to_string(), self.b.to_string()],
            [self.c.to_string(), self.d.to_string()],
        ]
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}, {}]", self.a, self.b)?;
        write!(f, "[{}, {}]", self.c, self.d)
    }
}

/// A 2×2 matrix of polynomials in `r, s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiMat2 {
    pub a: BiPoly,
    pub b: BiPoly,
    pub c: BiPoly,
    pub d: BiPoly,
}

impl BiMat2 {
    pub fn new(a: BiPoly, b: BiPoly, c: BiPoly, d: BiPoly) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(BiPoly::one(), BiPoly::zero(), BiPoly::zero(), BiPoly::one())
    }

    pub fn l_prime() -> Self {
        Self::new(BiPoly::one(), BiPoly::zero(), BiPoly::x(), BiPoly::y())
    }

    pub fn r_prime() -> Self {
        Self::new(BiPoly::x(), BiPoly::y(), BiPoly::zero(), BiPoly::one())
    }

    pub fn of_letter(x: Letter) -> Self {
        match x {
            Letter::L => Self::l_prime(),
            Letter::R => Self::r_prime(),
        }
    }

    pub fn row_sums(&self) -> (BiPoly, BiPoly) {
        (&self.a + &self.b, &self.c + &self.d)
    }

    pub fn rows(&self) -> [[String; 2]; 2] {
        [
            [self.a.to_string(), self.b.to_string()],
            [self.c.to_string(), self.d.to_string()],
        ]
    }
}

impl Mul for &BiMat2 {
    type Output = BiMat2;

    fn mul(self, o: &BiMat2) -> BiMat2 {
        BiMat2::new(
            &(&self.a * &o.a) + &(&self.b * &o.c),
            &(&self.a * &o.b) + &(&self.b * &o.d),
            &(&self.c * &o.a) + &(&self.d * &o.c),
            &(&self.c * &o.b) + &(&self.d * &o.d),
        )
    }
}

impl fmt::Display for BiMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}, {}]", self.a, self.b)?;
        write!(f, "[{}, {}]", self.c, self.d)
    }
}

/// `M(n)`, the product of [`word_of`]`(n)` left to right; `M(1) = I`.
pub fn m_of(n: u64) -> Result<Mat2, Error> {
    if n == 0 {
        return Err(Error::NotApplicable("M(n) needs n >= 1".into()));
    }
    Ok(word_of(n)
        .into_iter()
        .fold(Mat2::identity(), |acc, x| &acc * &Mat2::of_letter(x)))
}

pub fn m_prime_of(n: u64) -> Result<BiMat2, Error> {
    if n == 0 {
        return Err(Error::NotApplicable("M'(n) needs n >= 1".into()));
    }
    Ok(word_of(n)
        .into_iter()
        .fold(BiMat2::identity(), |acc, x| &acc * &BiMat2::of_letter(x)))
}

/// `M(n)` from `h_q`: for `2^k ≤ n < 2^{k+1} − 1`, with `j` leading ones in
/// `β(n)` and `β(n′) = 1·b_{j+2}…b_{k+1}`,
///
/// ```text
/// [[q^{-k+2j-1} h_q(n′−1), q^{-k+1} h_q(n−2^k−1)],
///  [q^{-k+2j-2} h_q(n′),   q^{-k}   h_q(n−2^k)  ]]
/// ```
///
/// and for `n = 2^{k+1} − 1` the first column is `(q^k, 0)ᵀ`.
pub fn entries_formula(n: u64) -> Result<Mat2, Error> {
    if n == 0 {
        return Err(Error::NotApplicable("the entry formula needs n >= 1".into()));
    }
    let k = bit_len(n) as i64 - 1;
    let low = n as i64 - (1i64 << k);
    let second = |shift: i64, m: i64| h_q(m).shift(shift);
    let b = second(-k + 1, low - 1);
    let d = second(-k, low);
    if n.count_ones() as i64 == k + 1 {
        return Ok(Mat2::new(LaurentPoly::monomial(1, k), b, LaurentPoly::zero(), d));
    }
    let j = (n << n.leading_zeros()).leading_ones() as i64;
    let tail = k - j;
    let n_prime = (1i64 << tail) + (n as i64 & ((1i64 << tail) - 1));
    let a = h_q(n_prime - 1).shift(-k + 2 * j - 1);
    let c = h_q(n_prime).shift(-k + 2 * j - 2);
    Ok(Mat2::new(a, b, c, d))
}

/// `M(n)·(1, 1)ᵀ = (q^{-k} h_q(n−1), q^{-k-1} h_q(n))ᵀ` for `2^k ≤ n < 2^{k+1}`.
pub fn row_sum_check(n: u64) -> Result<bool, Error> {
    let k = bit_len(n) as i64 - 1;
    let (top, bottom) = m_of(n)?.row_sums();
    Ok(top == h_q(n as i64 - 1).shift(-k) && bottom == h_q(n as i64).shift(-k - 1))
}

/// `M′(n)·(1, 1)ᵀ = (H_rs(n−1), H_rs(n))ᵀ`.
pub fn m_prime_check(n: u64) -> Result<bool, Error> {
    let (top, bottom) = m_prime_of(n)?.row_sums();
    Ok(top == h_rs(n as i64 - 1) && bottom == h_rs(n as i64))
}

/// Closed forms of `h_q(n)` when `β(n) = 1^r` (giving `q^r`) or
/// `β(n) = 1^r 0 1^s` (giving `q^{r+s} + … + q^{2r+s}`).
pub fn bdcases(n: u64) -> Result<LaurentPoly, Error> {
    let beta = BinaryExpansion::of(n);
    let bits = beta.bits();
    let r = bits.iter().take_while(|&&b| b == 1).count();
    let rest = &bits[r..];
    if rest.is_empty() {
        return Ok(LaurentPoly::monomial(1, r as i64));
    }
    if rest[1..].iter().all(|&b| b == 1) {
        let s = rest.len() as i64 - 1;
        let r = r as i64;
        return Ok(LaurentPoly::from_terms((r + s..=2 * r + s).map(|e| (e, 1))));
    }
    Err(Error::NotApplicable(format!(
        "binary expansion {beta} is not of the form 1^r or 1^r 0 1^s"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperbinary::{h_q_enumerated, h_rs_enumerated};
    use crate::stern::fusc;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn m19() -> Mat2 {
        Mat2::new(p("q^-1 + 2 + q + q^2"), p("q^-2 + q^-1"), p("q^-1 + 1"), p("q^-2"))
    }

    #[test]
    fn word_examples() {
        use Letter::*;
        assert_eq!(word_of(19), [R, R, L, L]);
        assert!(word_of(1).is_empty());
        assert_eq!(word_of(2), [L]);
    }

    #[test]
    fn m_of_examples() {
        assert_eq!(m_of(19).unwrap(), m19());
        assert_eq!(m_of(1).unwrap(), Mat2::identity());
        assert_eq!(m_of(3).unwrap(), Mat2::r());
        assert!(m_of(0).is_err());
        assert_eq!(
            m_of(19).unwrap().to_string(),
            "[q^-1 + 2 + q + q^2, q^-2 + q^-1]\n[q^-1 + 1, q^-2]"
        );
    }

    #[test]
    fn determinants() {
        assert_eq!(Mat2::l().det(), p("q^-1"));
        assert_eq!(Mat2::r().det(), p("q"));
        for n in 1..=4096 {
            let w = word_of(n);
            let rs = w.iter().filter(|&&x| x == Letter::R).count() as i64;
            assert_eq!(m_of(n).unwrap().det(), LaurentPoly::monomial(1, 2 * rs - w.len() as i64));
        }
    }

    #[test]
    fn doubling_steps() {
        for n in 1..=4096 {
            let m = m_of(n).unwrap();
            assert_eq!(m_of(2 * n).unwrap(), &Mat2::l() * &m, "n={n}");
            assert_eq!(m_of(2 * n + 1).unwrap(), &Mat2::r() * &m, "n={n}");
        }
    }

    #[test]
    fn entries_formula_examples() {
        let f = entries_formula(19).unwrap();
        assert_eq!(f, m19());
        assert_eq!(f.a, h_q(10).shift(-3));
        assert_eq!(f.d, h_q(3).shift(-4));
        let seven = entries_formula(7).unwrap();
        assert_eq!((seven.a, seven.c), (p("q^2"), LaurentPoly::zero()));
        assert_eq!(entries_formula(1).unwrap(), Mat2::identity());
    }

    #[test]
    fn entries_formula_boundaries() {
        for k in 1..14u32 {
            for n in [(1u64 << (k + 1)) - 1, (1u64 << (k + 1)) - 2, 1u64 << k] {
                assert_eq!(entries_formula(n).unwrap(), m_of(n).unwrap(), "n={n}");
            }
        }
        for n in 1..=2048 {
            assert_eq!(entries_formula(n).unwrap(), m_of(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn row_sums() {
        assert!(row_sum_check(1).unwrap());
        assert!(row_sum_check(19).unwrap());
        let (top, bottom) = m19().row_sums();
        assert_eq!(top, h_q_enumerated(18).shift(-4));
        assert_eq!(bottom, h_q_enumerated(19).shift(-5));
        for n in 1..=2048 {
            assert!(row_sum_check(n).unwrap(), "n={n}");
            let [[a, b], [c, d]] = m_of(n).unwrap().eval_at_one();
            assert_eq!((a + b, c + d), (fusc(n).into(), fusc(n + 1).into()));
        }
    }

    #[test]
    fn m_prime_examples() {
        assert_eq!(m_prime_of(1).unwrap(), BiMat2::identity());
        let two = m_prime_of(2).unwrap();
        assert_eq!(two, BiMat2::l_prime());
        assert_eq!(two.row_sums(), (BiPoly::one(), h_rs_enumerated(2)));
        for n in 1..=1024 {
            assert!(m_prime_check(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn bdcases_examples() {
        for k in 1..12 {
            assert_eq!(bdcases((1 << k) - 1).unwrap(), LaurentPoly::monomial(1, k));
            let r = k - 1;
            let want = LaurentPoly::from_terms((r..=2 * r).map(|e| (e, 1)));
            assert_eq!(bdcases((1 << k) - 2).unwrap(), want);
        }
        assert_eq!(bdcases(6).unwrap(), p("q^2 + q^3 + q^4"));
        assert_eq!(bdcases(6).unwrap(), h_q_enumerated(6));
        assert!(matches!(bdcases(10), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn bdcases_matches_enumeration() {
        for n in 1..=4096 {
            if let Ok(v) = bdcases(n) {
                assert_eq!(v, h_q_enumerated(n), "n={n}");
            }
        }
    }
}
