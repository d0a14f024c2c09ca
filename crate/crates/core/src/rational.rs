//! The base field: arbitrary-precision rationals in canonical form.
//!
//! `BigRational` keeps gcd(|numerator|, denominator) = 1 and denominator > 0
//! after every operation, which is exactly the canonical form required here.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Rational from an integer pair. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Parses "p/q" or "p" with optional sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numer: BigInt = num_text
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{text}`")))?;
    let denom: BigInt = den_text
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{text}`")))?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{text}`")));
    }
    Ok(BigRational::new(numer, denom))
}

/// gcd of two integers as a nonnegative BigInt.
pub fn bigint_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num::integer::gcd(a.clone(), b.clone())
}

/// lcm of two positive integers.
pub fn bigint_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    num::integer::lcm(a.clone(), b.clone())
}

pub fn rational_one() -> Rational {
    BigRational::one()
}

pub fn rational_zero() -> Rational {
    BigRational::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-5").unwrap(), rat_int(-5));
        assert_eq!(parse_rational(" 7 / -2 ").unwrap(), rat(-7, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn canonical_form_after_arithmetic() {
        let a = rat(6, 4);
        assert_eq!(a.numer(), &BigInt::from(3));
        assert_eq!(a.denom(), &BigInt::from(2));
        let b = rat(1, 6) + rat(1, 3);
        assert_eq!(b, rat(1, 2));
    }

    /// Exactness cross-check against direct big-integer formulas.
    #[test]
    fn independent_bigint_check() {
        let cases = [
            ((3i64, 7i64), (5i64, 11i64)),
            ((-2, 9), (4, 15)),
            ((123456789, 1000), (-987654321, 999)),
        ];
        for ((p, q), (r, s)) in cases {
            let sum = rat(p, q) + rat(r, s);
            let num = BigInt::from(p) * BigInt::from(s) + BigInt::from(r) * BigInt::from(q);
            let den = BigInt::from(q) * BigInt::from(s);
            let g = bigint_gcd(&num, &den);
            let (mut num, mut den) = (num / &g, den / &g);
            if den.is_negative() {
                num = -num;
                den = -den;
            }
            assert_eq!(sum.numer(), &num);
            assert_eq!(sum.denom(), &den);
        }
    }
}
