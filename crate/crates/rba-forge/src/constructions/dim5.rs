//! The family of standardized bases of ℂ ⊕ M₂ with positive degree map:
//! three positive rational degrees (δ₁, δ₂, δ₃) and three sign choices
//! parameterize every member, with order n = 1 + δ₁ + δ₂ + 2δ₃. The
//! structure constants have a closed form, built here alongside the matrix
//! realization so each can check the other.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{RadicalNumber, Rational};
use crate::model::mat::{BlockMat, BlockShape, Mat, MatrixBasis};
use crate::rba::{DegreeMap, InvolutionPerm, RbaPresentation, StructureTensor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dim5Params {
    pub delta1: Rational,
    pub delta2: Rational,
    pub delta3: Rational,
    /// Three sign choices, each ±1.
    pub signs: [i8; 3],
}

impl Dim5Params {
    pub fn new(
        delta1: Rational,
        delta2: Rational,
        delta3: Rational,
        signs: [i8; 3],
    ) -> Result<Self> {
        for (name, value) in [("δ1", &delta1), ("δ2", &delta2), ("δ3", &delta3)] {
            if *value <= Rational::from_integer(0.into()) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive, got {value}"
                )));
            }
        }
        if signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::InvalidParameter("signs must be ±1".into()));
        }
        Ok(Dim5Params {
            delta1,
            delta2,
            delta3,
            signs,
        })
    }

    /// n = 1 + δ₁ + δ₂ + 2δ₃.
    pub fn order(&self) -> Rational {
        Rational::one()
            + &self.delta1
            + &self.delta2
            + Rational::from_integer(2.into()) * &self.delta3
    }

    /// (1, δ₁, δ₂, δ₃, δ₃).
    pub fn degree_map(&self) -> DegreeMap {
        DegreeMap::new(vec![
            RadicalNumber::one(),
            RadicalNumber::from_rational(self.delta1.clone()),
            RadicalNumber::from_rational(self.delta2.clone()),
            RadicalNumber::from_rational(self.delta3.clone()),
            RadicalNumber::from_rational(self.delta3.clone()),
        ])
        .expect("identity degree is 1")
    }

    /// All eight sign choices over the same degrees.
    pub fn sign_family(&self) -> Vec<Dim5Params> {
        let mut family = Vec::with_capacity(8);
        for s1 in [1i8, -1] {
            for s2 in [1i8, -1] {
                for s3 in [1i8, -1] {
                    family.push(Dim5Params {
                        delta1: self.delta1.clone(),
                        delta2: self.delta2.clone(),
                        delta3: self.delta3.clone(),
                        signs: [s1, s2, s3],
                    });
                }
            }
        }
        family
    }
}

fn sign_rational(sign: i8) -> Rational {
    Rational::from_integer(i64::from(sign).into())
}

fn sqrt(q: &Rational) -> RadicalNumber {
    RadicalNumber::sqrt_rational(q).expect("radicand is nonnegative by construction")
}

/// The star permutation of the family: b₁, b₂ symmetric, b₃* = b₄.
pub fn dim5_star() -> InvolutionPerm {
    InvolutionPerm::new(vec![0, 1, 2, 4, 3]).expect("fixed involution")
}

/// Matrix realization in shape (1, 2). Writing n for the order and
/// Δ₁ = nδ₁(n−1−δ₁) (positive since n−1−δ₁ = δ₂+2δ₃):
///
/// b₁ = (δ₁, Diag(p, q)) with p, q = −δ₁/(n−1) ± ε₁√Δ₁/(n−1);
/// b₂ = (δ₂, [[v, w], [w, x]]) with v, x = −δ₂/(n−1) ∓ ε₁nδ₁δ₂/((n−1)√Δ₁)
///   and w = ε₂√(2nδ₂δ₃/((n−1)(n−1−δ₁)));
/// b₃ = (δ₃, [[r, s], [t, u]]) with r, u = −δ₃/(n−1) ∓ ε₁nδ₁δ₃/((n−1)√Δ₁),
///   s, t = −w/2 ± ε₃√(δ₃n/(2(n−1))); and b₄ = b₃ᵀ.
pub fn dim5_family(params: &Dim5Params) -> MatrixBasis {
    let n = params.order();
    let big_n = &n - Rational::one();
    let (d1, d2, d3) = (&params.delta1, &params.delta2, &params.delta3);
    let eps1 = sign_rational(params.signs[0]);
    let eps2 = sign_rational(params.signs[1]);
    let eps3 = sign_rational(params.signs[2]);

    let co_degree = &big_n - d1; // n − 1 − δ₁ = δ₂ + 2δ₃ > 0
    let disc = &n * d1 * &co_degree;
    let root = sqrt(&disc);
    let root_inverse = root.inverse().expect("discriminant is positive");

    let base1 = RadicalNumber::from_rational(-(d1 / &big_n));
    let spread1 = root.scale(&(&eps1 / &big_n));
    let b1_00 = &base1 + &spread1;
    let b1_11 = &base1 - &spread1;

    let base2 = RadicalNumber::from_rational(-(d2 / &big_n));
    let spread2 = root_inverse.scale(&(&eps1 * &n * d1 * d2 / &big_n));
    let b2_00 = &base2 - &spread2;
    let b2_11 = &base2 + &spread2;
    let two = Rational::from_integer(2.into());
    let b2_01 = sqrt(&(&two * &n * d2 * d3 / (&big_n * &co_degree))).scale(&eps2);

    let base3 = RadicalNumber::from_rational(-(d3 / &big_n));
    let spread3 = root_inverse.scale(&(&eps1 * &n * d1 * d3 / &big_n));
    let b3_00 = &base3 - &spread3;
    let b3_11 = &base3 + &spread3;
    let half_w = b2_01.scale(&Rational::new((-1).into(), 2.into()));
    let skew = sqrt(&(d3 * &n / (&two * &big_n))).scale(&eps3);
    let b3_01 = &half_w + &skew;
    let b3_10 = &half_w - &skew;

    let shape = BlockShape::new(vec![1, 2]).expect("fixed shape");
    let scalar = |q: &Rational| Mat::diagonal(&[RadicalNumber::from_rational(q.clone())]);
    let block3 = Mat::from_rows(vec![
        vec![b3_00.clone(), b3_01.clone()],
        vec![b3_10.clone(), b3_11.clone()],
    ])
    .expect("2×2");
    let elements = vec![
        BlockMat::identity(&shape),
        BlockMat::new(vec![scalar(d1), Mat::diagonal(&[b1_00, b1_11])]),
        BlockMat::new(vec![
            scalar(d2),
            Mat::from_rows(vec![vec![b2_00, b2_01.clone()], vec![b2_01, b2_11]]).expect("2×2"),
        ]),
        BlockMat::new(vec![scalar(d3), block3.clone()]),
        BlockMat::new(vec![scalar(d3), block3.transpose()]),
    ];
    MatrixBasis::new(shape, elements).expect("shapes agree")
}

/// The 26 distinct closed-form structure constants of a family member, in a
/// fixed order; entry 21 is shared by six tensor slots. Scanning uses this
/// directly since flag computations only see the distinct values.
struct TableEntries {
    values: [RadicalNumber; 26],
}

fn table_entries(params: &Dim5Params) -> TableEntries {
    let n = params.order();
    let one = Rational::one();
    let big_n = &n - &one; // n − 1
    let a = &n + &one; // n + 1
    let nn = &big_n * &big_n;
    let (d1, d2, d3) = (&params.delta1, &params.delta2, &params.delta3);
    let eps = sign_rational(params.signs[0] * params.signs[1] * params.signs[2]);
    // √(nδ₁δ₂) scaled by ε(n−1)
    let root = sqrt(&(&n * d1 * d2)).scale(&(&eps * &big_n));

    let rational = |q: Rational| RadicalNumber::from_rational(q);
    let mixed = |plain: Rational, radical: &RadicalNumber, scale: Rational| {
        &rational(plain) + &radical.scale(&scale)
    };

    let values = [
        // 0: λ111
        rational((&a * d1 * d1 - Rational::from_integer(3.into()) * &big_n * d1) / &nn),
        // 1: λ112 = λ113 = λ114
        rational((&a * d1 * d1 - &big_n * d1) / &nn),
        // 2: λ121 = λ211
        rational((&a * d1 * d2 - &big_n * d2) / &nn),
        // 3: λ122 = λ212
        rational((&a * d1 * d2 - &big_n * d1) / &nn),
        // 4: λ123 = λ214
        mixed(&a * d1 * d2 / &nn, &root, (&one / &nn).clone()),
        // 5: λ124 = λ213
        mixed(&a * d1 * d2 / &nn, &root, -(&one / &nn)),
        // 6: λ131 = λ141 = λ311 = λ411
        rational((&a * d1 * d3 - &big_n * d3) / &nn),
        // 7: λ132 = λ412
        mixed(&a * d1 * d3 / &nn, &root, d3 / (d2 * &nn)),
        // 8: λ133 = λ414
        mixed((&a * d1 * d3 - &big_n * d1) / &nn, &root, -(&one / &nn)),
        // 9: λ134 = λ143 = λ314 = λ413
        rational(&a * d1 * d3 / &nn),
        // 10: λ142 = λ312
        mixed(&a * d1 * d3 / &nn, &root, -(d3 / (d2 * &nn))),
        // 11: λ144 = λ313
        mixed(
            (&a * d1 * d3 - &big_n * d1) / &nn,
            &root,
            (&one / &nn).clone(),
        ),
        // 12: λ221 = λ223 = λ224
        rational((&a * d2 * d2 - &big_n * d2) / &nn),
        // 13: λ222
        rational((&a * d2 * d2 - Rational::from_integer(3.into()) * &big_n * d2) / &nn),
        // 14: λ231 = λ421
        mixed(&a * d2 * d3 / &nn, &root, -(d3 / (d1 * &nn))),
        // 15: λ232 = λ422 = λ242 = λ322
        rational((&a * d2 * d3 - &big_n * d3) / &nn),
        // 16: λ233 = λ424
        mixed(
            (&a * d2 * d3 - &big_n * d2) / &nn,
            &root,
            (&one / &nn).clone(),
        ),
        // 17: λ234 = λ423 = λ243 = λ324
        rational(&a * d2 * d3 / &nn),
        // 18: λ241 = λ321
        mixed(&a * d2 * d3 / &nn, &root, d3 / (d1 * &nn)),
        // 19: λ244 = λ323
        mixed((&a * d2 * d3 - &big_n * d2) / &nn, &root, -(&one / &nn)),
        // 20: λ331 = λ332 = λ334 = λ441 = λ442 = λ443
        rational(&a * d3 * d3 / &nn),
        // 21: λ333 = λ444 = λ343 = λ344 = λ433 = λ434
        rational((&a * d3 * d3 - Rational::from_integer(2.into()) * &big_n * d3) / &nn),
        // The coefficient of b_k in b₃b₄ and b₄b₃ carries a 1/δ_k from the
        // orthogonality of the basis, so the four entries below pair up by
        // target index, not by the printed cross-equalities (which hold
        // only when δ₁ = δ₂): the degree identity δ₃² = Σ_k λ_{34k} δ_k
        // forces the radical parts over δ₁ and δ₂ to cancel.
        // 22: λ341
        mixed(
            (&a * d3 * d3 - &big_n * d3) / &nn,
            &root,
            -(d3 / (d1 * &nn)),
        ),
        // 23: λ342
        mixed((&a * d3 * d3 - &big_n * d3) / &nn, &root, d3 / (d2 * &nn)),
        // 24: λ431
        mixed((&a * d3 * d3 - &big_n * d3) / &nn, &root, d3 / (d1 * &nn)),
        // 25: λ432
        mixed(
            (&a * d3 * d3 - &big_n * d3) / &nn,
            &root,
            -(d3 / (d2 * &nn)),
        ),
    ];
    TableEntries { values }
}

/// Slot assignment for indices 1..4; (i, j, k) → distinct-entry index.
const TABLE_SLOTS: [[[usize; 4]; 4]; 4] = [
    // i = 1
    [
        [0, 1, 1, 1],   // λ11k
        [2, 3, 4, 5],   // λ12k
        [6, 7, 8, 9],   // λ13k
        [6, 10, 9, 11], // λ14k
    ],
    // i = 2
    [
        [2, 3, 5, 4],     // λ21k
        [12, 13, 12, 12], // λ22k
        [14, 15, 16, 17], // λ23k
        [18, 15, 17, 19], // λ24k
    ],
    // i = 3
    [
        [6, 10, 11, 9],   // λ31k
        [18, 15, 19, 17], // λ32k
        [20, 20, 21, 20], // λ33k
        [22, 23, 21, 21], // λ34k
    ],
    // i = 4
    [
        [6, 7, 9, 8],     // λ41k
        [14, 15, 17, 16], // λ42k
        [24, 25, 21, 21], // λ43k
        [20, 20, 20, 21], // λ44k
    ],
];

/// The closed-form structure-constant tensor of a family member.
pub fn dim5_lambda_table(params: &Dim5Params) -> StructureTensor {
    let entries = table_entries(params);
    let mut tensor = StructureTensor::with_identity(4);
    tensor.set(1, 1, 0, RadicalNumber::from_rational(params.delta1.clone()));
    tensor.set(2, 2, 0, RadicalNumber::from_rational(params.delta2.clone()));
    tensor.set(3, 4, 0, RadicalNumber::from_rational(params.delta3.clone()));
    tensor.set(4, 3, 0, RadicalNumber::from_rational(params.delta3.clone()));
    for i in 1..5 {
        for j in 1..5 {
            for k in 1..5 {
                let slot = TABLE_SLOTS[i - 1][j - 1][k - 1];
                tensor.set(i, j, k, entries.values[slot].clone());
            }
        }
    }
    tensor
}

/// Closed-form table packaged with the family's star permutation.
pub fn dim5_presentation(params: &Dim5Params) -> RbaPresentation {
    RbaPresentation::new(dim5_lambda_table(params), dim5_star()).expect("sizes agree")
}

/// The distinct values determining the tensor's arithmetic flags: the 24
/// table entries together with the degrees (loop constants) and 1.
pub fn dim5_distinct_entries(params: &Dim5Params) -> Vec<RadicalNumber> {
    let mut values = table_entries(params).values.to_vec();
    values.push(RadicalNumber::one());
    values.push(RadicalNumber::from_rational(params.delta1.clone()));
    values.push(RadicalNumber::from_rational(params.delta2.clone()));
    values.push(RadicalNumber::from_rational(params.delta3.clone()));
    values
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::model::extract_structure_constants;
    use crate::rba::verify_rba;

    fn n25() -> Dim5Params {
        Dim5Params::new(rat(6, 1), rat(6, 1), rat(6, 1), [1, 1, 1]).unwrap()
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Dim5Params::new(rat(0, 1), rat(1, 1), rat(1, 1), [1, 1, 1]).is_err());
        assert!(Dim5Params::new(rat(1, 1), rat(1, 1), rat(1, 1), [2, 1, 1]).is_err());
    }

    #[test]
    fn n25_matrix_entries() {
        let basis = dim5_family(&n25());
        assert_eq!(n25().order(), rat(25, 1));
        // b₁ diagonal entries (−1 ± 5√3)/4
        let sqrt3 = RadicalNumber::sqrt_rational(&rat(3, 1)).unwrap();
        let expected_00 = &RadicalNumber::from_rational(rat(-1, 4)) + &sqrt3.scale(&rat(5, 4));
        let expected_11 = &RadicalNumber::from_rational(rat(-1, 4)) - &sqrt3.scale(&rat(5, 4));
        let b1 = basis.element(1);
        assert_eq!(b1.block(0).get(0, 0), &RadicalNumber::from_integer(6));
        assert_eq!(b1.block(1).get(0, 0), &expected_00);
        assert_eq!(b1.block(1).get(1, 1), &expected_11);
        assert!(b1.block(1).get(0, 1).is_zero());

        // b₂ off-diagonal 5/√6 = 5√6/6
        let b2 = basis.element(2);
        let expected_w = RadicalNumber::sqrt_rational(&rat(6, 1))
            .unwrap()
            .scale(&rat(5, 6));
        assert_eq!(b2.block(1).get(0, 1), &expected_w);
        assert_eq!(b2.block(1).get(1, 0), &expected_w);
        // diagonal (−3 ∓ 5√3)/12
        let expected_v = &RadicalNumber::from_rational(rat(-1, 4)) - &sqrt3.scale(&rat(5, 12));
        assert_eq!(b2.block(1).get(0, 0), &expected_v);

        // b₃ off-diagonal entries (−5√6 ± 15√2)/12
        let b3 = basis.element(3);
        let sqrt6 = RadicalNumber::sqrt_rational(&rat(6, 1)).unwrap();
        let sqrt2 = RadicalNumber::sqrt_rational(&rat(2, 1)).unwrap();
        let expected_s = &sqrt6.scale(&rat(-5, 12)) + &sqrt2.scale(&rat(15, 12));
        let expected_t = &sqrt6.scale(&rat(-5, 12)) - &sqrt2.scale(&rat(15, 12));
        assert_eq!(b3.block(1).get(0, 1), &expected_s);
        assert_eq!(b3.block(1).get(1, 0), &expected_t);
        // b₄ is the blockwise transpose
        assert_eq!(basis.element(4).block(1), &b3.block(1).transpose());
    }

    #[test]
    fn n25_table_is_a_rational_table_algebra_with_denominator_8() {
        let pres = dim5_presentation(&n25());
        let report = verify_rba(&pres).unwrap();
        assert!(report.passed, "{report:?}");
        assert!(report.flags.is_table_algebra);
        assert!(report.flags.is_rational);
        assert!(!report.flags.is_integral);
        assert_eq!(report.flags.max_denominator, 8u32.into());
        // λ111 = 7/8 at these parameters
        assert_eq!(
            pres.tensor.get(1, 1, 1),
            &RadicalNumber::from_rational(rat(7, 8))
        );
    }

    #[test]
    fn table_matches_extraction_at_n25() {
        let params = n25();
        let extracted = extract_structure_constants(&dim5_family(&params)).unwrap();
        assert_eq!(extracted.tensor, dim5_lambda_table(&params));
        assert_eq!(extracted.star, dim5_star());
    }

    #[test]
    fn generic_point_entries() {
        // λ134 = (n+1)δ₁δ₃/(n−1)² and λ331 = (n+1)δ₃²/(n−1)² at any parameters
        let params = Dim5Params::new(rat(3, 2), rat(5, 3), rat(7, 4), [-1, 1, -1]).unwrap();
        let n = params.order();
        let nn = (&n - rat(1, 1)) * (&n - rat(1, 1));
        let table = dim5_lambda_table(&params);
        let expected_134 = (&n + rat(1, 1)) * rat(3, 2) * rat(7, 4) / &nn;
        assert_eq!(
            table.get(1, 3, 4),
            &RadicalNumber::from_rational(expected_134)
        );
        let expected_331 = (&n + rat(1, 1)) * rat(7, 4) * rat(7, 4) / &nn;
        assert_eq!(
            table.get(3, 3, 1),
            &RadicalNumber::from_rational(expected_331.clone())
        );
        assert_eq!(table.get(3, 3, 2), table.get(3, 3, 1));
        assert_eq!(table.get(3, 3, 4), table.get(3, 3, 1));
    }

    #[test]
    fn degree_identities_hold() {
        // 1 + p + v + 2r = 0 and row sums against the degree map
        for signs in [[1i8, 1, 1], [-1, 1, -1], [1, -1, -1]] {
            let params = Dim5Params::new(rat(2, 1), rat(1, 3), rat(5, 2), signs).unwrap();
            let basis = dim5_family(&params);
            let block_sum = (0..5)
                .map(|i| basis.element(i).block(1).clone())
                .reduce(|a, b| a.add(&b))
                .unwrap();
            assert!(block_sum.is_zero(), "Σ B_i should vanish");
            let n = params.order();
            let trace_ratio = rat(-2, 1) / (&n - rat(1, 1));
            for i in 1..5 {
                let trace = basis.element(i).block(1).trace();
                let degree = basis.element(i).block(0).get(0, 0);
                assert_eq!(trace, degree.scale(&trace_ratio));
            }
        }
    }
}
