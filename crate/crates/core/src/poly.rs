//! Exact polynomial arithmetic.
//!
//! * [`LaurentPoly`]: integer Laurent polynomials in one variable `q`.
//! * [`BiPoly`]: ordinary polynomials in two variables (default names `r`, `s`).
//! * [`RatFunc`]: unreduced quotients of Laurent polynomials, compared by
//!   cross-multiplication.
//!
//! Coefficients are [`BigInt`], so no operation can overflow.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A Laurent polynomial `Σ c_e q^e` with integer coefficients.
///
/// Stored sparsely; zero coefficients are never kept, so the zero
/// polynomial is the empty map and structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `coeff · q^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// The q-integer `[a]_q = 1 + q + ⋯ + q^{a-1}`; `[0]_q = 0`.
    pub fn qint(a: u64) -> Self {
        Self::from_terms((0..a as i64).map(|e| (e, 1)))
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The substitution `q → q⁻¹`.
    pub fn reverse_var(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// The value at `q = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        Self {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

/// Writes one monomial body (no sign) in the canonical format.
fn write_monomial(f: &mut fmt::Formatter<'_>, abs: &BigInt, vars: &[(&str, i64)]) -> fmt::Result {
    let nonconstant = vars.iter().any(|(_, e)| *e != 0);
    if !nonconstant || !abs.is_one() {
        write!(f, "{abs}")?;
    }
    for (name, e) in vars {
        match e {
            0 => {}
            1 => write!(f, "{name}")?,
            _ => write!(f, "{name}^{e}")?,
        }
    }
    Ok(())
}

fn write_signed_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (&'a BigInt, Vec<(&'a str, i64)>)>,
{
    let mut first = true;
    for (c, vars) in terms {
        let negative = c.is_negative();
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        write_monomial(f, &c.abs(), &vars)?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Canonical text: increasing exponents, e.g. `q^-1 + 2 + q + q^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(f, self.terms.iter().map(|(e, c)| (c, vec![("q", *e)])))
    }
}

/// Parses the canonical text format (and a little more: `*` between
/// coefficient and variable, arbitrary term order, optional spaces).
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse(format!("empty polynomial: {s:?}")));
        }
        let bad = || Error::Parse(format!("malformed polynomial: {s:?}"));
        let mut out = LaurentPoly::zero();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let negative = if let Some(r) = rest.strip_prefix('-') {
                rest = r;
                true
            } else if let Some(r) = rest.strip_prefix('+') {
                if first {
                    return Err(bad());
                }
                rest = r;
                false
            } else if first {
                false
            } else {
                return Err(bad());
            };
            first = false;
            let end = rest
                .char_indices()
                .skip(1)
                .find(|&(i, ch)| (ch == '+' || ch == '-') && !rest[..i].ends_with('^'))
                .map_or(rest.len(), |(i, _)| i);
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let digits_end = term.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(term.len());
            let (coeff_text, var_text) = term.split_at(digits_end);
            let mut coeff = if coeff_text.is_empty() {
                BigInt::one()
            } else {
                coeff_text.parse::<BigInt>().map_err(|_| bad())?
            };
            let var_text = var_text.strip_prefix('*').unwrap_or(var_text);
            let exp = if var_text.is_empty() {
                if coeff_text.is_empty() {
                    return Err(bad());
                }
                0
            } else {
                let after = var_text.strip_prefix('q').ok_or_else(bad)?;
                if after.is_empty() {
                    1
                } else {
                    after.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?
                }
            };
            if negative {
                coeff = -coeff;
            }
            out.add_term(exp, coeff);
        }
        Ok(out)
    }
}

/// A polynomial in two commuting variables with nonnegative exponents.
///
/// Used for `H_rs(n)` (variables `r`, `s`) and for the `(p₁, p₂)`
/// generating function (variables `s`, `t`); the names only matter for
/// display.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `coeff · x^ex · y^ey`.
    pub fn monomial(coeff: impl Into<BigInt>, ex: u32, ey: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((ex, ey), coeff.into());
        p
    }

    /// The first variable (`r` in the default naming).
    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// The second variable (`s` in the default naming).
    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    fn add_term(&mut self, key: (u32, u32), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, ex: u32, ey: u32) -> BigInt {
        self.terms.get(&(ex, ey)).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Substitutes `x → q^wx`, `y → q^wy`.
    pub fn specialize(&self, wx: i64, wy: i64) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .map(|((ex, ey), c)| (*ex as i64 * wx + *ey as i64 * wy, c.clone())),
        )
    }

    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Renders with explicit variable names.
    pub fn display_with<'a>(&'a self, x: &'a str, y: &'a str) -> impl fmt::Display + 'a {
        BiPolyDisplay { poly: self, x, y }
    }
}

struct BiPolyDisplay<'a> {
    poly: &'a BiPoly,
    x: &'a str,
    y: &'a str,
}

impl fmt::Display for BiPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(
            f,
            self.poly
                .terms
                .iter()
                .map(|((ex, ey), c)| (c, vec![(self.x, *ex as i64), (self.y, *ey as i64)])),
        )
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("r", "s").fmt(f)
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((ax, ay), ca) in &self.terms {
            for ((bx, by), cb) in &rhs.terms {
                out.add_term((ax + bx, ay + by), ca * cb);
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

/// A quotient `num / den` of Laurent polynomials.
///
/// Never reduced. Equality is decided by cross-multiplication, which is
/// exact and needs no polynomial GCD.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self { num, den })
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc {
            num: &self.num * &other.den + &other.num * &self.den,
            den: &self.den * &other.den,
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }

    pub fn recip(&self) -> Result<RatFunc, Error> {
        RatFunc::new(self.den.clone(), self.num.clone()).map_err(|_| Error::DivisionByZero)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, Error> {
        Ok(self.mul(&other.recip()?))
    }

    /// Multiplies the numerator by `p`.
    pub fn scale(&self, p: &LaurentPoly) -> RatFunc {
        RatFunc {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    /// Cross-multiplication test `num·other.den == other.num·den`.
    pub fn equivalent(&self, other: &RatFunc) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Display form: both parts multiplied by the same power of `q` so that
    /// no exponent is negative and at least one part has a constant term.
    pub fn canonical(&self) -> RatFunc {
        let lowest = [self.num.min_exp(), self.den.min_exp()].into_iter().flatten().min();
        match lowest {
            Some(e) if e != 0 => RatFunc {
                num: self.num.shift(-e),
                den: self.den.shift(-e),
            },
            _ => self.clone(),
        }
    }

    /// Values of numerator and denominator at `q = 1`.
    pub fn eval_at_one(&self) -> (BigInt, BigInt) {
        (self.num.eval_at_one(), self.den.eval_at_one())
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.equivalent(other)
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        write!(f, "({}) / ({})", c.num, c.den)
    }
}

impl FromStr for RatFunc {
    type Err = Error;

    /// Accepts `(NUM) / (DEN)` or a bare polynomial.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        if let Some((num, den)) = t.split_once('/') {
            let strip = |x: &str| -> String {
                let x = x.trim();
                x.strip_prefix('(').and_then(|y| y.strip_suffix(')')).unwrap_or(x).to_string()
            };
            RatFunc::new(strip(num).parse()?, strip(den).parse()?)
        } else {
            Ok(RatFunc::from_poly(t.parse()?))
        }
    }
}
