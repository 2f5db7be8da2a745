//! Exact rationals backed by arbitrary precision integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Formats as `p/q`, always with an explicit denominator.
pub fn fmt_pq(v: &Rational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// Parses `p/q` or a plain integer `p`.
pub fn parse_pq(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(format!("not a rational: `{text}`"));
    let text = text.trim();
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub fn is_nonnegative(v: &Rational) -> bool {
    !v.is_negative()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zero() -> Rational {
    Rational::zero()
}

/// Largest integer not exceeding `v`.
pub fn floor_to_u64(v: &Rational) -> Option<u64> {
    v.floor().to_integer().try_into().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_with_denominator() {
        assert_eq!(fmt_pq(&ratio(7, 2)), "7/2");
        assert_eq!(fmt_pq(&int(3)), "3/1");
        assert_eq!(fmt_pq(&ratio(4, -6)), "-2/3");
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!(parse_pq("1/4").unwrap(), ratio(1, 4));
        assert_eq!(parse_pq("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_pq("5").unwrap(), int(5));
        assert!(parse_pq("1/0").is_err());
        assert!(parse_pq("x").is_err());
    }

    #[test]
    fn floors() {
        assert_eq!(floor_to_u64(&ratio(140, 9)), Some(15));
        assert_eq!(floor_to_u64(&int(4)), Some(4));
    }
}
