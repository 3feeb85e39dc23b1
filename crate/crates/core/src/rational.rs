//! Exact rational helpers and the `"p/q"` string format used in documents and reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats an exact rational as `"p"` or `"p/q"` in lowest terms.
pub fn format(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Reads a rational from a JSON integer or a `"p/q"` string. Floats are rejected.
pub fn from_json(v: &Value, field: &str) -> Result<Rational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(int(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(BigInt::from(u)))
            } else {
                Err(Error::schema(field, "expected an exact integer, found a float"))
            }
        }
        Value::String(s) => {
            parse(s).ok_or_else(|| Error::schema(field, format!("cannot parse `{s}` as p/q")))
        }
        _ => Err(Error::schema(field, "expected an integer or a \"p/q\" string")),
    }
}

/// Reads an exact integer (JSON integer or integral string).
pub fn integer_from_json(v: &Value, field: &str) -> Result<Rational> {
    let r = from_json(v, field)?;
    if !r.is_integer() {
        return Err(Error::schema(field, "expected an integer"));
    }
    Ok(r)
}

pub fn to_i64(r: &Rational) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::NonIntegral(format(r)));
    }
    r.numer().to_i64().ok_or(Error::Overflow("integer conversion"))
}

/// Largest integer `n >= 0` with `weight * n^2 <= budget`. `weight` must be positive.
pub fn floor_sqrt_ratio(budget: &Rational, weight: &Rational) -> u64 {
    debug_assert!(weight.is_positive());
    if budget.is_negative() {
        return 0;
    }
    let bound = budget / weight;
    // integer floor of sqrt(bound)
    let floor = bound.floor().to_integer();
    let mut n = floor.sqrt();
    while (&n + BigInt::one()) * (&n + BigInt::one()) <= floor {
        n += 1;
    }
    while &n * &n > floor {
        n -= 1;
    }
    n.to_u64().unwrap_or(u64::MAX)
}
