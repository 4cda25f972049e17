//! Exact rational helpers. Rationals print as `p/q` in lowest terms with
//! `q > 0`, and integers print as `p`; this is also the wire format.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn format(value: &Rational) -> String {
    value.to_string()
}

pub fn parse(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    if let Some((p, q)) = trimmed.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| Error::Parse(format!("bad rational {trimmed:?}")))?;
        let q = BigInt::from_str(q.trim()).map_err(|_| Error::Parse(format!("bad rational {trimmed:?}")))?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {trimmed:?}")));
        }
        Ok(Rational::new(p, q))
    } else {
        let p = BigInt::from_str(trimmed).map_err(|_| Error::Parse(format!("bad rational {trimmed:?}")))?;
        Ok(Rational::from_integer(p))
    }
}

pub fn ceil_to_i64(value: &Rational) -> Result<i64> {
    value
        .ceil()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::Overflow(format(value)))
}

pub fn floor_to_i64(value: &Rational) -> Result<i64> {
    value
        .floor()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::Overflow(format(value)))
}

pub fn to_i64(value: &BigInt) -> Result<i64> {
    value.to_i64().ok_or_else(|| Error::Overflow(value.to_string()))
}

/// `ceil(a) - a`, the deficit used by the twisted sum of exponents.
pub fn ceil_deficit(value: &Rational) -> Rational {
    value.ceil() - value
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn is_positive(value: &Rational) -> bool {
    value.is_positive()
}
