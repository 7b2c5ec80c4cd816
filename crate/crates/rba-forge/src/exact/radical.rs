//! Exact arithmetic in the ring of rational linear combinations of square
//! roots of square-free positive integers.
//!
//! Every scalar in the crate is a [`RadicalNumber`]. The representation is
//! canonical: radicands are square-free (stored as their sorted prime
//! factorizations), no coefficient is zero, and two values are equal exactly
//! when their term maps are identical. Canonical form makes equality a
//! structural check and zero-testing trivial, which in turn makes the exact
//! sign routine total.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::factor::{factor_bound, square_free_decompose};
use crate::exact::Rational;

/// A square-free positive integer kept as its sorted list of prime factors.
///
/// Storing the factorization (rather than the product) lets radicand
/// products reduce without ever factoring again: common primes come out of
/// the root, the symmetric difference stays under it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Radicand(Vec<BigUint>);

impl Radicand {
    pub fn one() -> Self {
        Radicand(Vec::new())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn from_primes(primes: Vec<BigUint>) -> Self {
        debug_assert!(primes.windows(2).all(|w| w[0] < w[1]));
        Radicand(primes)
    }

    /// The square-free integer itself.
    pub fn value(&self) -> BigUint {
        self.0.iter().product()
    }

    pub fn primes(&self) -> &[BigUint] {
        &self.0
    }

    fn contains(&self, p: &BigUint) -> bool {
        self.0.binary_search(p).is_ok()
    }

    /// √a·√b = g·√r with g the gcd of the radicands and r their
    /// symmetric difference; r is square-free because a/g and b/g are
    /// coprime and square-free.
    fn mul(&self, other: &Radicand) -> (BigUint, Radicand) {
        let mut gcd = BigUint::one();
        let mut rest = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    rest.push(self.0[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    rest.push(other.0[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    gcd *= &self.0[i];
                    i += 1;
                    j += 1;
                }
            }
        }
        rest.extend_from_slice(&self.0[i..]);
        rest.extend_from_slice(&other.0[j..]);
        (gcd, Radicand(rest))
    }
}

/// An element Σ q_r √r of the real quadratic-radical ring, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RadicalNumber {
    terms: BTreeMap<Radicand, Rational>,
}

/// Canonicalizes √q for a nonnegative rational q as `coeff·√radicand` with
/// the radicand square-free; returns the radicand as a plain integer.
pub fn normalize_root(q: &Rational) -> Result<(Rational, BigUint)> {
    let (coeff, rad) = normalize_root_parts(q)?;
    Ok((coeff, rad.value()))
}

/// As [`normalize_root`], keeping the factored radicand.
pub(crate) fn normalize_root_parts(q: &Rational) -> Result<(Rational, Radicand)> {
    if q.is_negative() {
        return Err(Error::NegativeRadicand(q.clone()));
    }
    if q.is_zero() {
        return Ok((Rational::zero(), Radicand::one()));
    }
    // √(a/b) = √(ab)/b
    let a = q.numer().magnitude();
    let b = q.denom().magnitude();
    let decomposition = square_free_decompose(&(a * b), factor_bound())?;
    let coeff = Rational::new(BigInt::from(decomposition.square_root), q.denom().clone());
    Ok((coeff, Radicand::from_primes(decomposition.primes)))
}

impl RadicalNumber {
    pub fn zero() -> Self {
        RadicalNumber::default()
    }

    pub fn one() -> Self {
        RadicalNumber::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut value = RadicalNumber::zero();
        value.add_term(Radicand::one(), q);
        value
    }

    /// `coeff·√rad` for an arbitrary positive integer radicand.
    pub fn from_root(coeff: Rational, radicand: u64) -> Result<Self> {
        let sqrt = Self::sqrt_rational(&Rational::from_integer(BigInt::from(radicand)))?;
        Ok(&sqrt * &Self::from_rational(coeff))
    }

    /// Exact √q for a nonnegative rational.
    pub fn sqrt_rational(q: &Rational) -> Result<Self> {
        let (coeff, rad) = normalize_root_parts(q)?;
        let mut value = RadicalNumber::zero();
        value.add_term(rad, coeff);
        Ok(value)
    }

    pub(crate) fn from_terms(terms: impl IntoIterator<Item = (Radicand, Rational)>) -> Self {
        let mut value = RadicalNumber::zero();
        for (rad, coeff) in terms {
            value.add_term(rad, coeff);
        }
        value
    }

    fn add_term(&mut self, rad: Radicand, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(rad) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Radicand, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the value lies in ℚ.
    pub fn is_rational(&self) -> bool {
        match self.terms.len() {
            0 => true,
            1 => self.terms.keys().next().unwrap().is_one(),
            _ => false,
        }
    }

    pub fn is_integer(&self) -> bool {
        self.as_rational().is_some_and(|q| q.denom().is_one())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.is_rational() {
            return self.terms.values().next().cloned();
        }
        None
    }

    /// Rational part of the value (the coefficient of radicand 1).
    pub fn rational_part(&self) -> Rational {
        self.terms
            .get(&Radicand::one())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Least common multiple of the coefficient denominators (1 for zero).
    pub fn denominator_lcm(&self) -> BigUint {
        self.terms
            .values()
            .fold(BigUint::one(), |acc, q| acc.lcm(q.denom().magnitude()))
    }

    /// Largest coefficient denominator (1 for zero).
    pub fn max_denominator(&self) -> BigUint {
        self.terms
            .values()
            .map(|q| q.denom().magnitude().clone())
            .max()
            .unwrap_or_else(BigUint::one)
    }

    /// Sorted radicand values appearing in the term set, radicand 1 included.
    pub fn radicand_values(&self) -> Vec<BigUint> {
        self.terms.keys().map(Radicand::value).collect()
    }

    /// Flips the sign of √p in every term, for a prime p: the Galois
    /// conjugation of the ambient multiquadratic field over the subfield
    /// omitting p.
    fn conjugate_at(&self, p: &BigUint) -> Self {
        let terms = self.terms.iter().map(|(rad, coeff)| {
            if rad.contains(p) {
                (rad.clone(), -coeff)
            } else {
                (rad.clone(), coeff.clone())
            }
        });
        RadicalNumber::from_terms(terms)
    }

    fn first_irrational_prime(&self) -> Option<BigUint> {
        self.terms
            .keys()
            .find(|rad| !rad.is_one())
            .map(|rad| rad.primes()[0].clone())
    }

    /// Exact multiplicative inverse, computed by clearing one prime at a
    /// time with Galois conjugates until the denominator is rational.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut numerator = RadicalNumber::one();
        let mut denominator = self.clone();
        while let Some(p) = denominator.first_irrational_prime() {
            let conjugate = denominator.conjugate_at(&p);
            numerator = &numerator * &conjugate;
            denominator = &denominator * &conjugate;
        }
        // Linear independence of square roots of distinct square-free
        // integers over ℚ keeps the conjugate product nonzero.
        let q = denominator.as_rational().ok_or(Error::DivisionByZero)?;
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&numerator * &RadicalNumber::from_rational(q.recip()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    /// Division by a nonzero rational.
    pub fn div_rational(&self, q: &Rational) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &RadicalNumber::from_rational(q.recip()))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self * &RadicalNumber::from_rational(q.clone())
    }
}

impl fmt::Display for RadicalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (position, (rad, coeff)) in self.terms.iter().enumerate() {
            let magnitude = coeff.abs();
            if position == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if rad.is_one() {
                write!(f, "{}", magnitude)?;
            } else if magnitude.is_one() {
                write!(f, "sqrt({})", rad.value())?;
            } else {
                write!(f, "{}*sqrt({})", magnitude, rad.value())?;
            }
        }
        Ok(())
    }
}

impl Add for &RadicalNumber {
    type Output = RadicalNumber;
    fn add(self, rhs: &RadicalNumber) -> RadicalNumber {
        let mut out = self.clone();
        for (rad, coeff) in &rhs.terms {
            out.add_term(rad.clone(), coeff.clone());
        }
        out
    }
}

impl Sub for &RadicalNumber {
    type Output = RadicalNumber;
    fn sub(self, rhs: &RadicalNumber) -> RadicalNumber {
        let mut out = self.clone();
        for (rad, coeff) in &rhs.terms {
            out.add_term(rad.clone(), -coeff);
        }
        out
    }
}

impl Neg for &RadicalNumber {
    type Output = RadicalNumber;
    fn neg(self) -> RadicalNumber {
        let terms = self.terms.iter().map(|(r, q)| (r.clone(), -q));
        RadicalNumber::from_terms(terms)
    }
}

impl Mul for &RadicalNumber {
    type Output = RadicalNumber;
    fn mul(self, rhs: &RadicalNumber) -> RadicalNumber {
        let mut out = RadicalNumber::zero();
        for (rad_a, coeff_a) in &self.terms {
            for (rad_b, coeff_b) in &rhs.terms {
                let (gcd, rad) = rad_a.mul(rad_b);
                let coeff = coeff_a * coeff_b * Rational::from_integer(BigInt::from(gcd));
                out.add_term(rad, coeff);
            }
        }
        out
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for RadicalNumber {
            type Output = RadicalNumber;
            fn $method(self, rhs: RadicalNumber) -> RadicalNumber {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for RadicalNumber {
    type Output = RadicalNumber;
    fn neg(self) -> RadicalNumber {
        -&self
    }
}

impl std::iter::Sum for RadicalNumber {
    fn sum<I: Iterator<Item = RadicalNumber>>(iter: I) -> Self {
        iter.fold(RadicalNumber::zero(), |acc, x| &acc + &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn sqrt(n: u64) -> RadicalNumber {
        RadicalNumber::sqrt_rational(&Rational::from_integer(BigInt::from(n))).unwrap()
    }

    #[test]
    fn normalize_root_examples() {
        let (c, r) = normalize_root(&rat(2700, 1)).unwrap();
        assert_eq!((c, r), (rat(30, 1), BigUint::from(3u64)));
        let (c, r) = normalize_root(&rat(1, 1)).unwrap();
        assert_eq!((c, r), (rat(1, 1), BigUint::from(1u64)));
        let (c, r) = normalize_root(&rat(25, 6)).unwrap();
        assert_eq!((c, r), (rat(5, 6), BigUint::from(6u64)));
    }

    #[test]
    fn normalize_root_rejects_negative() {
        assert!(matches!(
            normalize_root(&rat(-1, 2)),
            Err(Error::NegativeRadicand(_))
        ));
    }

    #[test]
    fn sqrt_three_squares_to_three() {
        let s = sqrt(3);
        assert_eq!(&s * &s, RadicalNumber::from_integer(3));
    }

    #[test]
    fn difference_of_squares() {
        let one_plus = &RadicalNumber::one() + &sqrt(2);
        let minus_one_plus = &sqrt(2) - &RadicalNumber::one();
        assert_eq!(&one_plus * &minus_one_plus, RadicalNumber::one());
    }

    #[test]
    fn conjugate_sum_is_rational() {
        // (−1+5√3)/4 + (−1−5√3)/4 = −1/2
        let a = RadicalNumber::from_terms([
            (Radicand::one(), rat(-1, 4)),
            (Radicand::from_primes(vec![BigUint::from(3u64)]), rat(5, 4)),
        ]);
        let b = RadicalNumber::from_terms([
            (Radicand::one(), rat(-1, 4)),
            (Radicand::from_primes(vec![BigUint::from(3u64)]), rat(-5, 4)),
        ]);
        assert_eq!(&a + &b, RadicalNumber::from_rational(rat(-1, 2)));
    }

    #[test]
    fn mixed_radicand_product_reduces() {
        // √6·√10 = 2√15
        let p = &sqrt(6) * &sqrt(10);
        let expected = RadicalNumber::from_root(rat(2, 1), 15).unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn inverse_examples() {
        let one_plus = &RadicalNumber::one() + &sqrt(2);
        let inv = one_plus.inverse().unwrap();
        assert_eq!(inv, &sqrt(2) - &RadicalNumber::one());

        let two = RadicalNumber::from_integer(2);
        assert_eq!(
            two.inverse().unwrap(),
            RadicalNumber::from_rational(rat(1, 2))
        );

        // 1/(6+2√3) = (3−√3)/12
        let x = &RadicalNumber::from_integer(6) + &sqrt(3).scale(&rat(2, 1));
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, RadicalNumber::one());
        let expected = &RadicalNumber::from_rational(rat(1, 4)) - &sqrt(3).scale(&rat(1, 12));
        assert_eq!(inv, expected);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(matches!(
            RadicalNumber::zero().inverse(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn inverse_with_three_primes() {
        // forces the full conjugate cascade
        let x = &(&RadicalNumber::one() + &sqrt(2)) + &(&sqrt(3) + &sqrt(5));
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, RadicalNumber::one());
    }

    #[test]
    fn rationality_predicates() {
        // (5/√6)·√6 = 5
        let five_over_sqrt6 = RadicalNumber::from_integer(5).div(&sqrt(6)).unwrap();
        let product = &five_over_sqrt6 * &sqrt(6);
        assert!(product.is_rational());
        assert!(product.is_integer());
        assert_eq!(product, RadicalNumber::from_integer(5));

        assert!(!RadicalNumber::from_rational(rat(3, 2)).is_integer());
        assert!(RadicalNumber::from_rational(rat(3, 2)).is_rational());
    }

    #[test]
    fn denominator_queries() {
        let x = RadicalNumber::from_terms([
            (Radicand::one(), rat(-1, 4)),
            (Radicand::from_primes(vec![BigUint::from(3u64)]), rat(5, 4)),
        ]);
        assert_eq!(x.denominator_lcm(), BigUint::from(4u64));
        assert_eq!(x.max_denominator(), BigUint::from(4u64));

        let y = RadicalNumber::from_terms([
            (Radicand::one(), rat(1, 2)),
            (Radicand::from_primes(vec![BigUint::from(3u64)]), rat(1, 3)),
        ]);
        assert_eq!(y.denominator_lcm(), BigUint::from(6u64));
        assert_eq!(y.max_denominator(), BigUint::from(3u64));
    }

    #[test]
    fn display_formatting() {
        let x = RadicalNumber::from_terms([
            (Radicand::one(), rat(-1, 4)),
            (Radicand::from_primes(vec![BigUint::from(3u64)]), rat(5, 4)),
        ]);
        assert_eq!(x.to_string(), "-1/4 + 5/4*sqrt(3)");
        assert_eq!(RadicalNumber::zero().to_string(), "0");
    }
}
