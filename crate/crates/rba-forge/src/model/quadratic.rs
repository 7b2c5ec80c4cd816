//! Quadratic behaviour of trace-zero elements in a standardized basis of
//! shape (1, 2): every such x satisfies
//! x² = κ(x)·b₀ + λ(x)·x + μ(x)·(𝐁⁺ − b₀ − x),
//! with closed-form coefficients in the degrees of the basis.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{RadicalNumber, Rational};
use crate::model::mat::MatrixBasis;
use crate::rba::DegreeMap;

/// Eigenvalues of the 2×2 component of x: a real pair expressible with a
/// single new square root, or a conjugate complex pair (recorded by the
/// square of its imaginary part, which stays rational).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EigenPair {
    Real {
        plus: RadicalNumber,
        minus: RadicalNumber,
    },
    Complex {
        real_part: Rational,
        imaginary_square: Rational,
    },
}

#[derive(Debug, Clone)]
pub struct QuadraticData {
    pub kappa: Rational,
    pub lambda: Rational,
    pub mu: Rational,
    /// δ(x).
    pub degree: Rational,
    pub eigenvalues: EigenPair,
}

/// Closed-form quadratic coefficients of x = Σ_{i≥1} k_i b_i (so τ(x) = 0)
/// in a standardized shape-(1, 2) basis with rational degrees, verified
/// against exact matrix arithmetic before returning.
///
/// κ(x) = k₁²δ₁ + k₂²δ₂ + 2k₃k₄δ₃,
/// μ(x) = ((n+1)δ(x)² − κ(x)(n−1)) / (n−1)²,
/// λ(x) = μ(x) − 2δ(x)/(n−1),
/// eigenvalue pair −δ(x)/(n−1) ± √(κ(x)n(n−1) − δ(x)²n)/(n−1).
pub fn quadratic_coeffs(
    basis: &MatrixBasis,
    delta: &DegreeMap,
    coords: &[Rational],
) -> Result<QuadraticData> {
    if basis.shape().sizes() != [1, 2] {
        return Err(Error::DimensionMismatch(
            "quadratic coefficients need a shape (1, 2) basis".into(),
        ));
    }
    if coords.len() != basis.len() || delta.len() != basis.len() {
        return Err(Error::DimensionMismatch(
            "coordinate and degree lengths must match the basis".into(),
        ));
    }
    if !coords[0].is_zero() {
        return Err(Error::InvalidParameter(
            "the identity coordinate must vanish (trace-zero element)".into(),
        ));
    }
    let degrees: Vec<Rational> = delta
        .values()
        .iter()
        .map(|v| {
            v.as_rational()
                .ok_or_else(|| Error::InvalidParameter("degrees must be rational".into()))
        })
        .collect::<Result<_>>()?;

    let order: Rational = degrees.iter().cloned().sum();
    let n_minus_1 = &order - Rational::one();
    let kappa = &coords[1] * &coords[1] * &degrees[1]
        + &coords[2] * &coords[2] * &degrees[2]
        + Rational::from_integer(2.into()) * &coords[3] * &coords[4] * &degrees[3];
    let degree_of_x: Rational = coords.iter().zip(&degrees).map(|(k, d)| k * d).sum();

    let n_plus_1 = &order + Rational::one();
    let square = &n_minus_1 * &n_minus_1;
    let mu = (&n_plus_1 * &degree_of_x * &degree_of_x - &kappa * &n_minus_1) / &square;
    let lambda = &mu - Rational::from_integer(2.into()) * &degree_of_x / &n_minus_1;

    // exact verification: x² = κ b₀ + λ x + μ (𝐁⁺ − b₀ − x)
    let x = basis
        .elements()
        .iter()
        .zip(
            &coords
                .iter()
                .map(|k| RadicalNumber::from_rational(k.clone()))
                .collect::<Vec<_>>()[..],
        )
        .map(|(e, k)| e.scale(k))
        .reduce(|a, b| a.add(&b))
        .expect("nonempty basis");
    let basis_sum = basis
        .elements()
        .iter()
        .cloned()
        .reduce(|a, b| a.add(&b))
        .expect("nonempty basis");
    let b0 = basis.element(0);
    let rest = basis_sum.sub(b0).sub(&x);
    let expected = b0
        .scale(&RadicalNumber::from_rational(kappa.clone()))
        .add(&x.scale(&RadicalNumber::from_rational(lambda.clone())))
        .add(&rest.scale(&RadicalNumber::from_rational(mu.clone())));
    if x.mul(&x) != expected {
        return Err(Error::Inconsistency(
            "trace-zero square identity failed; the basis is not a standardized \
             shape (1, 2) family member"
                .into(),
        ));
    }

    let discriminant = &kappa * &order * &n_minus_1 - &degree_of_x * &degree_of_x * &order;
    let eigenvalues = if discriminant.is_negative() {
        EigenPair::Complex {
            real_part: -&degree_of_x / &n_minus_1,
            imaginary_square: -&discriminant / &square,
        }
    } else {
        let root = RadicalNumber::sqrt_rational(&discriminant)?;
        let center = RadicalNumber::from_rational(-&degree_of_x / &n_minus_1);
        let offset = root.div_rational(&n_minus_1)?;
        EigenPair::Real {
            plus: &center + &offset,
            minus: &center - &offset,
        }
    };

    Ok(QuadraticData {
        kappa,
        lambda,
        mu,
        degree: degree_of_x,
        eigenvalues,
    })
}
