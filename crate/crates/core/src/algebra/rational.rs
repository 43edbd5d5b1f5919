//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

/// Arbitrary precision rational, always in lowest terms with a positive denominator.
pub type BigRat = BigRational;

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// `n` or `n/d`.
pub fn format_rat(q: &BigRat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<BigRat, ParseError> {
    let bad = || ParseError::BadNumber(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() || d.is_negative() {
        return Err(bad());
    }
    Ok(BigRat::new(n, d))
}
