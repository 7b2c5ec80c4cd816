//! Exact scalar arithmetic: arbitrary-precision rationals and the ring of
//! rational combinations of square roots of square-free positive integers.

pub mod factor;
pub mod interval;
pub mod radical;

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub use factor::{factor_bound, square_free_decompose, SquareFree, DEFAULT_FACTOR_BOUND};
pub use interval::round_half_away;
pub use radical::{normalize_root, RadicalNumber, Radicand};

/// Arbitrary-precision rational; always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Shorthand rational constructor for small values.
///
/// Panics on a zero denominator; intended for literals in code and tests.
pub fn rat(numerator: i64, denominator: i64) -> Rational {
    Rational::new(BigInt::from(numerator), BigInt::from(denominator))
}

/// Parses "n", "n/d", or "-n/d" with arbitrary-precision parts.
pub fn parse_rational(text: &str) -> Result<Rational> {
    const MAX_DIGITS: usize = 8192;
    let invalid = || Error::Parse(format!("invalid rational literal {text:?}"));
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    if num_text.len() > MAX_DIGITS || den_text.is_some_and(|d| d.len() > MAX_DIGITS) {
        return Err(Error::Parse("rational literal too long".into()));
    }
    let numerator: BigInt = num_text.trim().parse().map_err(|_| invalid())?;
    let denominator: BigInt = match den_text {
        Some(d) => d.trim().parse().map_err(|_| invalid())?,
        None => BigInt::from(1),
    };
    if denominator == BigInt::from(0) {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(numerator, denominator))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rational_accepts_common_forms() {
        assert_eq!(parse_rational("6").unwrap(), rat(6, 1));
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-1/4").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("4/-8").unwrap(), rat(-1, 2));
    }

    #[test]
    fn parse_rational_rejects_garbage() {
        for bad in ["", "x", "1/0", "1/", "/2", "1.5", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }
}
