//! Exact sign determination and correctly rounded decimal rendering through
//! rational interval enclosures.
//!
//! A nonzero radical number is bounded away from zero, so refining the
//! enclosure of each √r until the sum excludes zero always terminates; the
//! empty term set is the only representation of zero, so that case returns
//! immediately.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::radical::RadicalNumber;
use crate::exact::Rational;

/// Safety valve for the refinement loop; a canonical nonzero value decides
/// long before this.
const MAX_SQRT_BITS: usize = 1 << 22;

/// [lo, hi] enclosing √value with width 2^-bits, endpoints rational.
fn sqrt_enclosure(value: &BigUint, bits: usize) -> (Rational, Rational) {
    let scaled = value << (2 * bits);
    let root = scaled.sqrt();
    let denom = BigInt::from(BigUint::one() << bits);
    let lo = Rational::new(BigInt::from(root.clone()), denom.clone());
    let hi = Rational::new(BigInt::from(root + BigUint::one()), denom);
    (lo, hi)
}

impl RadicalNumber {
    /// Rational interval containing the value, with each radical enclosed
    /// to `bits` fractional bits.
    pub(crate) fn enclosure(&self, bits: usize) -> (Rational, Rational) {
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for (rad, coeff) in self.terms() {
            if rad.is_one() {
                lo += coeff;
                hi += coeff;
            } else {
                let (slo, shi) = sqrt_enclosure(&rad.value(), bits);
                if coeff.is_positive() {
                    lo += coeff * slo;
                    hi += coeff * shi;
                } else {
                    lo += coeff * shi;
                    hi += coeff * slo;
                }
            }
        }
        (lo, hi)
    }

    /// Exact sign: −1, 0, or +1.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        // Same-signed coefficients decide immediately: every √r is positive.
        let mut positives = false;
        let mut negatives = false;
        for (_, coeff) in self.terms() {
            if coeff.is_positive() {
                positives = true;
            } else {
                negatives = true;
            }
        }
        match (positives, negatives) {
            (true, false) => return 1,
            (false, true) => return -1,
            _ => {}
        }

        let mut bits = 32;
        while bits <= MAX_SQRT_BITS {
            let (lo, hi) = self.enclosure(bits);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            bits *= 2;
        }
        unreachable!("sign refinement exceeded {MAX_SQRT_BITS} bits on a canonical nonzero value")
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == 1
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == -1
    }

    /// Exact comparison.
    pub fn cmp_exact(&self, other: &Self) -> std::cmp::Ordering {
        (self - other).sign().cmp(&0)
    }

    /// Correctly rounded decimal string with `digits` fractional digits
    /// (round half away from zero; display only, never fed back into
    /// computation).
    pub fn to_decimal(&self, digits: u32) -> Result<String> {
        if digits == 0 {
            return Err(Error::InvalidParameter(
                "decimal rendering needs at least one digit".into(),
            ));
        }
        let scale = BigInt::from(10u32).pow(digits);
        let scaled_units = if let Some(q) = self.as_rational() {
            round_half_away(&(q * Rational::from_integer(scale.clone())))
        } else {
            // x·10^d is irrational, so it is never half-integral and the
            // rounded endpoints eventually agree.
            let mut bits = 64;
            loop {
                let (lo, hi) = self.enclosure(bits);
                let lo_units = round_half_away(&(lo * Rational::from_integer(scale.clone())));
                let hi_units = round_half_away(&(hi * Rational::from_integer(scale.clone())));
                if lo_units == hi_units {
                    break lo_units;
                }
                bits *= 2;
                if bits > MAX_SQRT_BITS {
                    unreachable!("decimal refinement exceeded {MAX_SQRT_BITS} bits");
                }
            }
        };
        let negative = scaled_units.is_negative();
        let magnitude = scaled_units.magnitude().clone();
        let base = BigUint::from(10u32).pow(digits);
        let integer_part = &magnitude / &base;
        let fraction = &magnitude % &base;
        let mut fraction_digits = fraction.to_string();
        while (fraction_digits.len() as u32) < digits {
            fraction_digits.insert(0, '0');
        }
        Ok(format!(
            "{}{}.{}",
            if negative { "-" } else { "" },
            integer_part,
            fraction_digits
        ))
    }
}

/// Nearest integer, ties away from zero.
pub fn round_half_away(q: &Rational) -> BigInt {
    let doubled = q.numer() * 2;
    let denom = q.denom();
    let adjusted = if q.is_negative() {
        doubled - denom
    } else {
        doubled + denom
    };
    adjusted / (denom * 2)
}
