//! The scalar type and a few helpers around it.
//!
//! Every quantity in this crate is an exact, always-reduced fraction with a
//! positive denominator. The textual form is `p/q`, with `/q` omitted when
//! `q = 1` (`-3/8`, `2`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction.
pub type Rational = BigRational;

/// `p/q` as a reduced rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `(-1)^e` for a signed integer exponent, decided by parity.
pub fn sign_pow(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        one()
    } else {
        -one()
    }
}

/// Renders `p/q`, omitting the denominator when it is one.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// Parses `p/q` or `p`. Rejects a zero denominator and anything with a
/// decimal point.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator: {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Larger of the bit lengths of numerator and denominator.
pub fn bit_len(x: &Rational) -> u64 {
    x.numer().bits().max(x.denom().bits())
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}
