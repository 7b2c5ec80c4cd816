//! A basis of ℂ ⊕ M_m with positive degree map for every m ≥ 2, all
//! degrees equal to a chosen positive rational δ and order n = 1 + m²δ.
//! Structure constants land in ℚ(√m).
//!
//! The m² seed matrices B_ij = x·E_ij + y·J (with x = ±√(n/m) and
//! y = (−x ± 1/√m)/m²) satisfy the Gram and transpose conditions below but
//! sum to a multiple of J; reflecting each of them in the hyperplane
//! orthogonal to B + I fixes the sum condition without disturbing the
//! other two.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{RadicalNumber, Rational};
use crate::model::mat::{BlockMat, BlockShape, Mat, MatrixBasis};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmParams {
    pub m: usize,
    pub delta: Rational,
    /// Sign of x = ±√(n/m); the negative root is the default.
    pub sign_x: i8,
    /// Inner sign in y = (−x ± 1/√m)/m².
    pub sign_y: i8,
}

impl CmParams {
    pub fn new(m: usize, delta: Rational) -> Result<Self> {
        Self::with_signs(m, delta, -1, 1)
    }

    pub fn with_signs(m: usize, delta: Rational, sign_x: i8, sign_y: i8) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!(
                "component size must be at least 2, got {m}"
            )));
        }
        if delta <= Rational::from_integer(0.into()) {
            return Err(Error::InvalidParameter(format!(
                "degree must be positive, got {delta}"
            )));
        }
        if sign_x.abs() != 1 || sign_y.abs() != 1 {
            return Err(Error::InvalidParameter("signs must be ±1".into()));
        }
        Ok(CmParams {
            m,
            delta,
            sign_x,
            sign_y,
        })
    }

    /// n = 1 + m²δ.
    pub fn order(&self) -> Rational {
        Rational::one() + Rational::from_integer((self.m * self.m).into()) * &self.delta
    }
}

/// Pass/fail record of the three basis conditions for m² matrices B_i with
/// degrees δ_i and n = 1 + Σδ_i:
///
/// (a) (B_i, B_j) = δ_i(n−δ_i)m/(n−1) on the diagonal and −δ_iδ_jm/(n−1)
///     off it;
/// (b) transposition permutes the set, matching degrees, with exactly m
///     fixed points;
/// (c) Σ B_i = −I.
#[derive(Debug, Clone)]
pub struct P1Report {
    pub gram_ok: bool,
    pub gram_witness: Option<(usize, usize)>,
    pub transpose_ok: bool,
    pub transpose_perm: Option<Vec<usize>>,
    pub fixed_points: usize,
    pub sum_ok: bool,
}

impl P1Report {
    pub fn all_pass(&self) -> bool {
        self.gram_ok && self.transpose_ok && self.sum_ok
    }
}

pub fn check_p1_conditions(matrices: &[Mat], degrees: &[RadicalNumber]) -> Result<P1Report> {
    if matrices.is_empty() || matrices.len() != degrees.len() {
        return Err(Error::DimensionMismatch(
            "need one degree per matrix".into(),
        ));
    }
    let m = matrices[0].size();
    if matrices.iter().any(|b| b.size() != m) {
        return Err(Error::DimensionMismatch("matrices of mixed sizes".into()));
    }
    let order = &degrees.iter().cloned().sum::<RadicalNumber>() + &RadicalNumber::one();
    let n_minus_1 = &order - &RadicalNumber::one();
    if n_minus_1.is_zero() {
        return Err(Error::InvalidParameter("degenerate degree vector".into()));
    }
    let m_scalar = RadicalNumber::from_integer(m as i64);
    let ratio = m_scalar.div(&n_minus_1)?;

    let mut gram_ok = true;
    let mut gram_witness = None;
    'gram: for (i, left) in matrices.iter().enumerate() {
        for (j, right) in matrices.iter().enumerate() {
            let expected = if i == j {
                &(&degrees[i] * &(&order - &degrees[i])) * &ratio
            } else {
                -&(&(&degrees[i] * &degrees[j]) * &ratio)
            };
            if left.frobenius(right) != expected {
                gram_ok = false;
                gram_witness = Some((i, j));
                break 'gram;
            }
        }
    }

    let mut transpose_perm = Vec::with_capacity(matrices.len());
    let mut transpose_ok = true;
    for (i, matrix) in matrices.iter().enumerate() {
        let transposed = matrix.transpose();
        match matrices
            .iter()
            .position(|candidate| candidate == &transposed)
        {
            Some(j) if degrees[i] == degrees[j] => transpose_perm.push(j),
            _ => {
                transpose_ok = false;
                break;
            }
        }
    }
    let mut fixed_points = 0;
    if transpose_ok {
        // involutive by uniqueness of transpose partners
        fixed_points = transpose_perm
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i == j)
            .count();
        transpose_ok = fixed_points == m;
    }

    let sum = matrices
        .iter()
        .cloned()
        .reduce(|a, b| a.add(&b))
        .expect("nonempty");
    let sum_ok = sum == Mat::identity(m).neg();

    Ok(P1Report {
        gram_ok,
        gram_witness,
        transpose_ok,
        transpose_perm: transpose_ok.then_some(transpose_perm),
        fixed_points,
        sum_ok,
    })
}

/// The raw seed matrices B_ij = x·E_ij + y·J in row-major order.
pub fn cm_seed_matrices(params: &CmParams) -> Result<Vec<Mat>> {
    let m = params.m;
    let n = params.order();
    let x = RadicalNumber::sqrt_rational(&(&n / &Rational::from_integer(m.into())))?
        .scale(&Rational::from_integer(i64::from(params.sign_x).into()));
    // 1/√m = √m/m
    let inv_sqrt_m = RadicalNumber::sqrt_rational(&Rational::from_integer(m.into()))?
        .scale(&Rational::new(1.into(), m.into()));
    let y = (&inv_sqrt_m.scale(&Rational::from_integer(i64::from(params.sign_y).into())) - &x)
        .scale(&Rational::new(1.into(), (m * m).into()));

    let all_ones = Mat::ones(m).scale(&y);
    let mut seeds = Vec::with_capacity(m * m);
    for row in 0..m {
        for col in 0..m {
            seeds.push(Mat::elementary(m, row, col).scale(&x).add(&all_ones));
        }
    }
    Ok(seeds)
}

/// Reflection in the hyperplane orthogonal to B + I (B the matrix sum),
/// applied entrywise to the seed family.
pub fn cm_reflected_matrices(params: &CmParams) -> Result<Vec<Mat>> {
    let seeds = cm_seed_matrices(params)?;
    let m = params.m;
    let sum = seeds
        .iter()
        .cloned()
        .reduce(|a, b| a.add(&b))
        .expect("nonempty");
    let mirror = sum.add(&Mat::identity(m));
    let norm = mirror.frobenius(&mirror);
    let scale = RadicalNumber::from_integer(2).div(&norm)?;
    Ok(seeds
        .iter()
        .map(|b| {
            let coefficient = &mirror.frobenius(b) * &scale;
            b.sub(&mirror.scale(&coefficient))
        })
        .collect())
}

/// The basis {(1, I)} ∪ {(δ, B̃_ij)} of ℂ ⊕ M_m in shape (1, m). The three
/// basis conditions are re-checked exactly before returning; a failure
/// indicates a bug, not bad input.
pub fn cm_basis(params: &CmParams) -> Result<MatrixBasis> {
    let reflected = cm_reflected_matrices(params)?;
    let degrees = vec![RadicalNumber::from_rational(params.delta.clone()); reflected.len()];
    let report = check_p1_conditions(&reflected, &degrees)?;
    if !report.all_pass() {
        return Err(Error::Inconsistency(format!(
            "reflected family violates the basis conditions: {report:?}"
        )));
    }

    let shape = BlockShape::new(vec![1, params.m])?;
    let delta_scalar = Mat::diagonal(&[RadicalNumber::from_rational(params.delta.clone())]);
    let mut elements = vec![BlockMat::identity(&shape)];
    for matrix in reflected {
        elements.push(BlockMat::new(vec![delta_scalar.clone(), matrix]));
    }
    MatrixBasis::new(shape, elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn m2_seed_gram_values() {
        // (B_i, B_i) = (n−δ)/m = 2 and (B_i, B_j) = −δ/m = −1/2 at m=2, δ=1
        let params = CmParams::new(2, rat(1, 1)).unwrap();
        assert_eq!(params.order(), rat(5, 1));
        let seeds = cm_seed_matrices(&params).unwrap();
        assert_eq!(
            seeds[0].frobenius(&seeds[0]),
            RadicalNumber::from_integer(2)
        );
        assert_eq!(
            seeds[0].frobenius(&seeds[3]),
            RadicalNumber::from_rational(rat(-1, 2))
        );
    }

    #[test]
    fn seeds_pass_gram_and_transpose_but_not_sum() {
        let params = CmParams::new(3, rat(7, 1)).unwrap();
        let seeds = cm_seed_matrices(&params).unwrap();
        let degrees = vec![RadicalNumber::from_integer(7); 9];
        let report = check_p1_conditions(&seeds, &degrees).unwrap();
        assert!(report.gram_ok);
        assert!(report.transpose_ok);
        assert_eq!(report.fixed_points, 3);
        assert!(!report.sum_ok);
        // Σ B_ij = (x + m²y)·J = J/√3
        let sum = seeds.iter().cloned().reduce(|a, b| a.add(&b)).unwrap();
        let expected = Mat::ones(3).scale(
            &RadicalNumber::sqrt_rational(&rat(3, 1))
                .unwrap()
                .scale(&rat(1, 3)),
        );
        assert_eq!(sum, expected);
    }

    #[test]
    fn perturbed_family_fails_gram_with_witness() {
        let params = CmParams::new(3, rat(7, 1)).unwrap();
        let mut family = cm_reflected_matrices(&params).unwrap();
        let bumped = family[0].get(0, 0) + &RadicalNumber::one();
        family[0].set(0, 0, bumped);
        let degrees = vec![RadicalNumber::from_integer(7); 9];
        let report = check_p1_conditions(&family, &degrees).unwrap();
        assert!(!report.gram_ok);
        assert_eq!(report.gram_witness, Some((0, 0)));
    }

    #[test]
    fn reflected_family_passes_all_conditions() {
        let params = CmParams::new(3, rat(7, 1)).unwrap();
        let reflected = cm_reflected_matrices(&params).unwrap();
        let degrees = vec![RadicalNumber::from_integer(7); 9];
        let report = check_p1_conditions(&reflected, &degrees).unwrap();
        assert!(report.all_pass(), "{report:?}");
        // fixed points are exactly the diagonal-index matrices
        let perm = report.transpose_perm.unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let index = 3 * i + j;
                assert_eq!(perm[index] == index, i == j);
            }
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(CmParams::new(1, rat(1, 1)).is_err());
        assert!(CmParams::new(2, rat(0, 1)).is_err());
        assert!(CmParams::with_signs(2, rat(1, 1), 0, 1).is_err());
    }
}
