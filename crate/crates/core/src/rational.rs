//! Small helpers around arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn half(n: i64) -> Q {
    q_frac(n, 2)
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// Numerator and denominator as machine integers (denominator positive).
pub fn to_pair(x: &Q) -> Result<(i64, i64)> {
    let n = x
        .numer()
        .to_i64()
        .ok_or_else(|| Error::Overflow(format!("numerator of {x}")))?;
    let d = x
        .denom()
        .to_i64()
        .ok_or_else(|| Error::Overflow(format!("denominator of {x}")))?;
    Ok((n, d))
}

/// Exact conversion of an integral rational to `i64`.
pub fn to_i64(x: &Q) -> Result<i64> {
    if !is_integer(x) {
        return Err(Error::NegativeCoefficient { what: format!("non-integral value {x}") });
    }
    x.numer().to_i64().ok_or_else(|| Error::Overflow(format!("{x}")))
}

/// Compact text form: `3`, `-1/2`.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn abs_q(x: &Q) -> Q {
    x.abs()
}
