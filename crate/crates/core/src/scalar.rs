//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ground field is the rationals.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

/// `(-1)^e` as a scalar.
pub fn sign(e: i64) -> Scalar {
    if e.rem_euclid(2) == 0 {
        one()
    } else {
        -one()
    }
}

/// Parses `"n"` or `"n/d"`. Decimal points and exponents are rejected.
pub fn parse(s: &str) -> Result<Scalar> {
    let bad = || Error::InvalidScalar(s.to_string());
    let t = s.trim();
    let int_part = |x: &str| -> Result<BigInt> {
        let x = x.trim();
        let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        x.parse::<BigInt>().map_err(|_| bad())
    };
    match t.split_once('/') {
        None => Ok(Scalar::from_integer(int_part(t)?)),
        Some((n, d)) => {
            let d = int_part(d)?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(int_part(n)?, d))
        }
    }
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise.
pub fn format(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn is_negative(c: &Scalar) -> bool {
    c.is_negative()
}
