//! Square-free factorization by bounded trial division.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// Trial-division bound, overridable through `RBA_FORGE_FACTOR_BOUND`.
/// Read once per process.
pub fn factor_bound() -> u64 {
    static BOUND: OnceLock<u64> = OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var("RBA_FORGE_FACTOR_BOUND")
            .ok()
            .and_then(|v| v.parse().ok())
            .filter(|&b| b >= 2)
            .unwrap_or(DEFAULT_FACTOR_BOUND)
    })
}

/// Decomposition `n = square_root² · Π primes` with the primes distinct,
/// so `Π primes` is the square-free part of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFree {
    pub square_root: BigUint,
    pub primes: Vec<BigUint>,
}

/// Splits a positive integer into a perfect square and a square-free part,
/// with the square-free part fully factored.
///
/// Trial division runs up to `bound`. A leftover cofactor is accepted when
/// it is certifiably prime (≤ bound²) or a perfect square; otherwise its
/// square-free part cannot be certified and the call fails.
pub fn square_free_decompose(n: &BigUint, bound: u64) -> Result<SquareFree> {
    if n.is_zero() {
        return Err(Error::InvalidParameter(
            "square-free decomposition of zero".into(),
        ));
    }
    let mut m = n.clone();
    let mut square_root = BigUint::one();
    let mut primes = Vec::new();

    let mut divisor: u64 = 2;
    let mut exceeded_bound = false;
    while m > BigUint::one() {
        if divisor > bound {
            exceeded_bound = true;
            break;
        }
        let d = BigUint::from(divisor);
        if &d * &d > m {
            break;
        }
        if (&m % divisor).is_zero() {
            let mut exponent = 0u64;
            while (&m % divisor).is_zero() {
                m /= divisor;
                exponent += 1;
            }
            square_root *= d.pow((exponent / 2) as u32);
            if exponent % 2 == 1 {
                primes.push(BigUint::from(divisor));
            }
        }
        divisor = if divisor == 2 { 3 } else { divisor + 2 };
    }

    if m > BigUint::one() {
        let sqrt = m.sqrt();
        if &sqrt * &sqrt == m {
            // leftover is a perfect square; contributes nothing square-free
            square_root *= sqrt;
        } else if !exceeded_bound || m <= BigUint::from(bound) * BigUint::from(bound) {
            // all prime factors of m exceed min(bound, √m), so m ≤ bound²
            // forces m prime
            primes.push(m);
        } else {
            return Err(Error::FactorBound { cofactor: m, bound });
        }
    }

    primes.sort();
    Ok(SquareFree {
        square_root,
        primes,
    })
}
