//! Exact scalar arithmetic over the Gaussian rationals Q(i).
//!
//! Every quantity in this crate is a [`GaussianRational`]: a complex number
//! whose real and imaginary parts are arbitrary-precision rationals in
//! canonical reduced form (positive denominator, gcd(|num|, den) = 1, zero
//! stored as 0/1). All equality is structural equality of canonical forms,
//! so identity checks are exact, never approximate.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Arbitrary-precision rational in canonical reduced form.
///
/// `Ratio<BigInt>` maintains the invariants this crate relies on: the
/// denominator is positive, numerator and denominator are coprime, and zero
/// is uniquely 0/1.
pub type Rational = Ratio<BigInt>;

/// Errors from scalar arithmetic and parsing.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum NumericError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at byte {position}: {message}")]
    ParseError { position: usize, message: String },
}

fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

// The num-rational operators reduce through bignum gcds even when both
// operands are integers, which turns linear work quadratic on large terms.
// These helpers keep the common integer case on the pure-bigint path;
// new_raw is sound there because denominator 1 is always canonical.

fn rat_add(a: &Rational, b: &Rational) -> Rational {
    if is_integer(a) && is_integer(b) {
        Ratio::new_raw(a.numer() + b.numer(), BigInt::one())
    } else {
        a + b
    }
}

fn rat_sub(a: &Rational, b: &Rational) -> Rational {
    if is_integer(a) && is_integer(b) {
        Ratio::new_raw(a.numer() - b.numer(), BigInt::one())
    } else {
        a - b
    }
}

fn rat_mul(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() || b.is_zero() {
        return Rational::zero();
    }
    if is_integer(a) && is_integer(b) {
        Ratio::new_raw(a.numer() * b.numer(), BigInt::one())
    } else {
        a * b
    }
}

/// Exact a/b for nonzero b.
fn rat_div(a: &Rational, b: &Rational) -> Rational {
    debug_assert!(!b.is_zero());
    if a.is_zero() {
        return Rational::zero();
    }
    if is_integer(b) {
        if b.numer().is_one() {
            return a.clone();
        }
        if (-b.numer()).is_one() {
            return -a.clone();
        }
    }
    if is_integer(a) && is_integer(b) {
        return Ratio::new(a.numer().clone(), b.numer().clone());
    }
    a / b
}

/// A complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    /// Real value n/d. Panics if `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        GaussianRational {
            re: Ratio::new(BigInt::from(n), BigInt::from(d)),
            im: Rational::zero(),
        }
    }

    /// Gaussian value (rn/rd) + (in_/id)·i. Panics on zero denominators.
    pub fn from_parts(rn: i64, rd: i64, in_: i64, id: i64) -> Self {
        GaussianRational {
            re: Ratio::new(BigInt::from(rn), BigInt::from(rd)),
            im: Ratio::new(BigInt::from(in_), BigInt::from(id)),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            re: Rational::one(),
            im: Rational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Squared modulus re² + im², a rational; zero iff the value is zero.
    pub fn norm(&self) -> Rational {
        rat_add(&rat_mul(&self.re, &self.re), &rat_mul(&self.im, &self.im))
    }

    /// Exact quotient. Fails iff `rhs` is zero.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, NumericError> {
        if rhs.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        if rhs.im.is_zero() {
            return Ok(GaussianRational {
                re: rat_div(&self.re, &rhs.re),
                im: rat_div(&self.im, &rhs.re),
            });
        }
        let n = rhs.norm();
        let num = self * &rhs.conjugate();
        Ok(GaussianRational {
            re: rat_div(&num.re, &n),
            im: rat_div(&num.im, &n),
        })
    }

    /// Exact reciprocal. Fails iff `self` is zero.
    pub fn checked_recip(&self) -> Result<Self, NumericError> {
        Self::one().checked_div(self)
    }

    /// Exact integer power by squaring; negative exponents invert.
    ///
    /// `0^0 = 1`; `0^e` for `e < 0` fails with `DivisionByZero`.
    pub fn int_pow(&self, exponent: i64) -> Result<Self, NumericError> {
        let base = if exponent < 0 {
            self.checked_recip()?
        } else {
            self.clone()
        };
        let mut e = exponent.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: rat_add(&self.re, &rhs.re),
            im: rat_add(&self.im, &rhs.im),
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: rat_sub(&self.re, &rhs.re),
            im: rat_sub(&self.im, &rhs.im),
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: rat_sub(&rat_mul(&self.re, &rhs.re), &rat_mul(&self.im, &rhs.im)),
            im: rat_add(&rat_mul(&self.re, &rhs.im), &rat_mul(&self.im, &rhs.re)),
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        &self * &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form, round-trippable through [`parse_scalar`].
///
/// Pure reals print as `n` or `n/d`; pure imaginaries as `ni`, `i`, `-i`;
/// mixed values as `re+imi` / `re-imi` with unit coefficients elided.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let imag_mag = self.im.abs();
        let unit = imag_mag.is_one();
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if self.re.is_zero() {
            if unit {
                return write!(f, "{}i", if self.im.is_negative() { "-" } else { "" });
            }
            return write!(
                f,
                "{}{}i",
                if self.im.is_negative() { "-" } else { "" },
                fmt_rational(&imag_mag)
            );
        }
        if unit {
            write!(f, "{}{}i", fmt_rational(&self.re), sign)
        } else {
            write!(f, "{}{}{}i", fmt_rational(&self.re), sign, fmt_rational(&imag_mag))
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::str::FromStr for GaussianRational {
    type Err = NumericError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

/// Format a scalar in the canonical grammar (same as `Display`).
pub fn format_scalar(x: &GaussianRational) -> String {
    x.to_string()
}

fn parse_err(position: usize, message: impl Into<String>) -> NumericError {
    NumericError::ParseError {
        position,
        message: message.into(),
    }
}

/// Parse an unsigned or leading-minus rational `[-]digits[/digits]`.
/// `offset` is the byte position of `text` within the original input.
fn parse_rational(text: &str, offset: usize, allow_sign: bool) -> Result<Rational, NumericError> {
    let (neg, body, body_off) = match text.strip_prefix('-') {
        Some(rest) if allow_sign => (true, rest, offset + 1),
        Some(_) => return Err(parse_err(offset, "unexpected sign")),
        None => (false, text, offset),
    };
    let (num_str, den_str, den_off) = match body.find('/') {
        Some(slash) => (
            &body[..slash],
            Some(&body[slash + 1..]),
            body_off + slash + 1,
        ),
        None => (body, None, 0),
    };
    if num_str.is_empty() || !num_str.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(body_off, "expected digits"));
    }
    let mut numer: BigInt = num_str.parse().expect("digits");
    if neg {
        numer = -numer;
    }
    let denom = match den_str {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_err(den_off, "expected digits after '/'"));
            }
            let denom: BigInt = d.parse().expect("digits");
            if denom.is_zero() {
                return Err(parse_err(den_off, "zero denominator"));
            }
            denom
        }
    };
    Ok(Ratio::new(numer, denom))
}

/// Parse an imaginary token: `i`, `-i` (when `allow_sign`), or `rational i`.
fn parse_imag(text: &str, offset: usize, allow_sign: bool) -> Result<Rational, NumericError> {
    let body = text
        .strip_suffix('i')
        .ok_or_else(|| parse_err(offset + text.len(), "expected trailing 'i'"))?;
    if body.is_empty() {
        return Ok(Rational::one());
    }
    if body == "-" {
        if allow_sign {
            return Ok(-Rational::one());
        }
        return Err(parse_err(offset, "unexpected sign"));
    }
    parse_rational(body, offset, allow_sign)
}

/// Parse the scalar grammar `real | imag | real sign imag` with no interior
/// whitespace, e.g. `3/2`, `-1+2i`, `1/3-5/7i`, `i`.
pub fn parse_scalar(text: &str) -> Result<GaussianRational, NumericError> {
    if text.is_empty() {
        return Err(parse_err(0, "empty scalar"));
    }
    // A sign past position 0 splits the real and imaginary parts.
    let split = text
        .char_indices()
        .skip(1)
        .find(|&(_, c)| c == '+' || c == '-')
        .map(|(i, c)| (i, c));
    match split {
        Some((i, sign)) => {
            let re = parse_rational(&text[..i], 0, true)?;
            let mut im = parse_imag(&text[i + 1..], i + 1, false)?;
            if sign == '-' {
                im = -im;
            }
            Ok(GaussianRational { re, im })
        }
        None => {
            if text.ends_with('i') {
                let im = parse_imag(text, 0, true)?;
                Ok(GaussianRational {
                    re: Rational::zero(),
                    im,
                })
            } else {
                let re = parse_rational(text, 0, true)?;
                Ok(GaussianRational {
                    re,
                    im: Rational::zero(),
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(rn: i64, rd: i64, in_: i64, id: i64) -> GaussianRational {
        GaussianRational::from_parts(rn, rd, in_, id)
    }

    fn is_canonical(r: &Rational) -> bool {
        use num_integer::Integer;
        r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
    }

    #[test]
    fn add_fractions() {
        assert_eq!(
            GaussianRational::from_ratio(1, 2) + GaussianRational::from_ratio(1, 3),
            GaussianRational::from_ratio(5, 6)
        );
    }

    #[test]
    fn add_conjugates() {
        assert_eq!(g(1, 2, 1, 2) + g(1, 2, -1, 2), GaussianRational::one());
    }

    #[test]
    fn mul_imaginary_unit() {
        assert_eq!(
            GaussianRational::i() * GaussianRational::i(),
            GaussianRational::from_int(-1)
        );
        assert_eq!(g(1, 1, 1, 1) * g(1, 1, -1, 1), GaussianRational::from_int(2));
    }

    #[test]
    fn div_examples() {
        // 1/i = -i
        assert_eq!(
            GaussianRational::one()
                .checked_div(&GaussianRational::i())
                .unwrap(),
            -GaussianRational::i()
        );
        // 2/(1+i) = 1-i, checked by re-multiplying
        let q = GaussianRational::from_int(2)
            .checked_div(&g(1, 1, 1, 1))
            .unwrap();
        assert_eq!(q, g(1, 1, -1, 1));
        assert_eq!(&q * &g(1, 1, 1, 1), GaussianRational::from_int(2));
    }

    #[test]
    fn div_by_zero() {
        assert_eq!(
            GaussianRational::one().checked_div(&GaussianRational::zero()),
            Err(NumericError::DivisionByZero)
        );
    }

    #[test]
    fn int_pow_examples() {
        assert_eq!(
            GaussianRational::from_int(-1).int_pow(7).unwrap(),
            GaussianRational::from_int(-1)
        );
        assert_eq!(
            GaussianRational::from_ratio(1, 2).int_pow(-3).unwrap(),
            GaussianRational::from_int(8)
        );
        assert_eq!(GaussianRational::zero().int_pow(0).unwrap(), GaussianRational::one());
        assert_eq!(
            GaussianRational::zero().int_pow(-1),
            Err(NumericError::DivisionByZero)
        );
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_scalar("3/2").unwrap(), GaussianRational::from_ratio(3, 2));
        assert_eq!(parse_scalar("-1+2i").unwrap(), g(-1, 1, 2, 1));
        assert_eq!(parse_scalar("1/3-5/7i").unwrap(), g(1, 3, -5, 7));
        assert_eq!(parse_scalar("i").unwrap(), GaussianRational::i());
        assert_eq!(parse_scalar("-i").unwrap(), -GaussianRational::i());
        assert_eq!(parse_scalar("2-i").unwrap(), g(2, 1, -1, 1));
        assert_eq!(parse_scalar("-2/3i").unwrap(), g(0, 1, -2, 3));
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in ["", "1+", "+1", "1++2i", "1+-2i", "1/0", "x", "1 + 2i", "2i+1"] {
            assert!(parse_scalar(bad).is_err(), "accepted {:?}", bad);
        }
    }

    #[test]
    fn display_canonical() {
        assert_eq!(GaussianRational::zero().to_string(), "0");
        assert_eq!(g(3, 2, 0, 1).to_string(), "3/2");
        assert_eq!(g(0, 1, -1, 1).to_string(), "-i");
        assert_eq!(g(-1, 1, 2, 1).to_string(), "-1+2i");
        assert_eq!(g(1, 3, -5, 7).to_string(), "1/3-5/7i");
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..=50, 1i64..=20)
            .prop_map(|(n, d)| Ratio::new(BigInt::from(n), BigInt::from(d)))
    }

    fn arb_scalar() -> impl Strategy<Value = GaussianRational> {
        (arb_rational(), arb_rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn results_stay_canonical(a in arb_scalar(), b in arb_scalar()) {
            for v in [&a + &b, &a * &b, -&a] {
                prop_assert!(is_canonical(v.re()));
                prop_assert!(is_canonical(v.im()));
            }
        }

        #[test]
        fn div_then_mul_round_trips(a in arb_scalar(), b in arb_scalar()) {
            prop_assume!(!b.is_zero());
            let q = (&a * &b).checked_div(&b).unwrap();
            prop_assert_eq!(q, a);
        }

        #[test]
        fn parse_format_round_trip(a in arb_scalar()) {
            let text = format_scalar(&a);
            prop_assert_eq!(parse_scalar(&text).unwrap(), a);
        }

        #[test]
        fn int_pow_matches_repeated_mul(a in arb_scalar(), e in 0i64..=64) {
            let mut expected = GaussianRational::one();
            for _ in 0..e {
                expected = &expected * &a;
            }
            prop_assert_eq!(a.int_pow(e).unwrap(), expected.clone());
            if !a.is_zero() {
                let inv = a.int_pow(-e).unwrap();
                prop_assert_eq!(&inv * &expected, GaussianRational::one());
            }
        }
    }
}
