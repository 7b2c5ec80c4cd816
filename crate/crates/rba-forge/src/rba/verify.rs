use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rba::degree::degree_candidate;
use crate::rba::presentation::RbaPresentation;

/// One recorded axiom violation: the offending index tuple plus a rendering
/// of the values involved.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomFailure {
    pub indices: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomCheck {
    fn new(name: &'static str, failures: Vec<AxiomFailure>) -> Self {
        AxiomCheck {
            name,
            passed: failures.is_empty(),
            failures,
        }
    }
}

/// Structure-constant summary flags. `is_table_algebra` means nonnegative
/// entries together with a positive degree map recovered from the standard
/// candidate δ_i = λ_{ii*0}; non-standard bases of table algebras are not
/// detected (degree-map discovery beyond the candidate is a nonlinear
/// problem and out of scope).
#[derive(Debug, Clone, Serialize)]
pub struct TensorFlags {
    pub is_table_algebra: bool,
    pub is_rational: bool,
    pub is_integral: bool,
    pub nonnegative: bool,
    #[serde(serialize_with = "crate::rba::verify::biguint_as_string")]
    pub max_denominator: BigUint,
}

pub(crate) fn biguint_as_string<S: serde::Serializer>(
    value: &BigUint,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

/// Axiom-by-axiom verification result. Every failure is collected, not just
/// the first, and carries a concrete counterexample.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub checks: Vec<AxiomCheck>,
    pub flags: TensorFlags,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Checks the five defining axioms of a reality-based algebra on a
/// presentation:
///
/// 1. b₀ is a two-sided identity;
/// 2. associativity of the structure tensor;
/// 3. star compatibility λ_ijk = λ_{j* i* k*};
/// 4. λ_ij0 ≠ 0 exactly when j = i*;
/// 5. λ_{ii*0} = λ_{i*i0} with positive exact sign.
///
/// Realness of the constants holds by the scalar type.
pub fn verify_rba(pres: &RbaPresentation) -> Result<VerificationReport> {
    let n = pres.size();
    if pres.star.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "star on {} indices, tensor on {n}",
            pres.star.len()
        )));
    }
    let tensor = &pres.tensor;
    let star = &pres.star;

    let mut identity_failures = Vec::new();
    for j in 0..n {
        for k in 0..n {
            let expected = usize::from(j == k);
            for (i, jj, kk, value) in [
                (0, j, k, tensor.get(0, j, k)),
                (j, 0, k, tensor.get(j, 0, k)),
            ] {
                let ok = if expected == 1 {
                    value.is_one()
                } else {
                    value.is_zero()
                };
                if !ok {
                    identity_failures.push(AxiomFailure {
                        indices: vec![i, jj, kk],
                        detail: format!("λ[{i}][{jj}][{kk}] = {value}, expected {expected}"),
                    });
                }
            }
        }
    }

    // Associativity via sparse rows: Σ_m λ_ijm λ_mkl = Σ_m λ_jkm λ_iml.
    let nonzero_in_row: Vec<Vec<usize>> = (0..n * n)
        .map(|flat| {
            let (i, j) = (flat / n, flat % n);
            (0..n).filter(|&k| !tensor.get(i, j, k).is_zero()).collect()
        })
        .collect();
    let mut associativity_failures = Vec::new();
    let mut lhs = vec![crate::exact::RadicalNumber::zero(); n];
    let mut rhs = vec![crate::exact::RadicalNumber::zero(); n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for slot in lhs.iter_mut().chain(rhs.iter_mut()) {
                    *slot = crate::exact::RadicalNumber::zero();
                }
                for &m in &nonzero_in_row[i * n + j] {
                    let coeff = tensor.get(i, j, m);
                    for &l in &nonzero_in_row[m * n + k] {
                        lhs[l] = &lhs[l] + &(coeff * tensor.get(m, k, l));
                    }
                }
                for &m in &nonzero_in_row[j * n + k] {
                    let coeff = tensor.get(j, k, m);
                    for &l in &nonzero_in_row[i * n + m] {
                        rhs[l] = &rhs[l] + &(coeff * tensor.get(i, m, l));
                    }
                }
                for l in 0..n {
                    if lhs[l] != rhs[l] {
                        associativity_failures.push(AxiomFailure {
                            indices: vec![i, j, k, l],
                            detail: format!(
                                "(b{i}b{j})b{k} and b{i}(b{j}b{k}) differ at b{l}: {} vs {}",
                                lhs[l], rhs[l]
                            ),
                        });
                    }
                }
            }
        }
    }

    let mut star_failures = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let direct = tensor.get(i, j, k);
                let starred = tensor.get(star.apply(j), star.apply(i), star.apply(k));
                if direct != starred {
                    star_failures.push(AxiomFailure {
                        indices: vec![i, j, k],
                        detail: format!(
                            "λ[{i}][{j}][{k}] = {direct} but λ[{}][{}][{}] = {starred}",
                            star.apply(j),
                            star.apply(i),
                            star.apply(k)
                        ),
                    });
                }
            }
        }
    }

    let mut support_failures = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let value = tensor.get(i, j, 0);
            let should_be_nonzero = j == star.apply(i);
            if should_be_nonzero && value.is_zero() {
                support_failures.push(AxiomFailure {
                    indices: vec![i, j],
                    detail: format!("λ[{i}][{j}][0] = 0 although {j} = {i}*"),
                });
            }
            if !should_be_nonzero && !value.is_zero() {
                support_failures.push(AxiomFailure {
                    indices: vec![i, j],
                    detail: format!("λ[{i}][{j}][0] = {value} although {j} ≠ {i}*"),
                });
            }
        }
    }

    let mut positivity_failures = Vec::new();
    for i in 0..n {
        let si = star.apply(i);
        let forward = tensor.get(i, si, 0);
        let backward = tensor.get(si, i, 0);
        if forward != backward {
            positivity_failures.push(AxiomFailure {
                indices: vec![i, si],
                detail: format!("λ[{i}][{si}][0] = {forward} ≠ λ[{si}][{i}][0] = {backward}"),
            });
        }
        if forward.sign() != 1 {
            positivity_failures.push(AxiomFailure {
                indices: vec![i, si],
                detail: format!("λ[{i}][{si}][0] = {forward} is not positive"),
            });
        }
    }

    let checks = vec![
        AxiomCheck::new("identity", identity_failures),
        AxiomCheck::new("associativity", associativity_failures),
        AxiomCheck::new("star-compatibility", star_failures),
        AxiomCheck::new("identity-support", support_failures),
        AxiomCheck::new("loop-positivity", positivity_failures),
    ];
    let passed = checks.iter().all(|c| c.passed);

    let nonnegative = tensor.is_nonnegative();
    let positive_degree = passed
        && degree_candidate(pres)
            .map(|delta| delta.is_positive())
            .unwrap_or(false);
    let flags = TensorFlags {
        is_table_algebra: passed && nonnegative && positive_degree,
        is_rational: tensor.is_rational(),
        is_integral: tensor.is_integral(),
        nonnegative,
        max_denominator: tensor.max_denominator(),
    };

    Ok(VerificationReport {
        passed,
        checks,
        flags,
    })
}
