use crate::error::{Error, Result};
use crate::exact::RadicalNumber;
use crate::rba::presentation::RbaPresentation;

/// Values (δ₀ = 1, δ₁, …, δ_d) of a real linear character on the basis,
/// together with the order n = Σ δ_i it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMap {
    degrees: Vec<RadicalNumber>,
}

impl DegreeMap {
    pub fn new(degrees: Vec<RadicalNumber>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidParameter("empty degree vector".into()));
        }
        if !degrees[0].is_one() {
            return Err(Error::InvalidParameter(format!(
                "degree of the identity must be 1, got {}",
                degrees[0]
            )));
        }
        Ok(DegreeMap { degrees })
    }

    pub fn get(&self, i: usize) -> &RadicalNumber {
        &self.degrees[i]
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn values(&self) -> &[RadicalNumber] {
        &self.degrees
    }

    /// The order n = δ(𝐁⁺).
    pub fn order(&self) -> RadicalNumber {
        self.degrees.iter().cloned().sum()
    }

    /// Positive degree maps take exact sign +1 on every basis element.
    pub fn is_positive(&self) -> bool {
        self.degrees.iter().all(|v| v.sign() == 1)
    }

    /// δ applied to a coordinate vector.
    pub fn evaluate(&self, coords: &[RadicalNumber]) -> RadicalNumber {
        coords
            .iter()
            .zip(&self.degrees)
            .map(|(x, delta)| x * delta)
            .sum()
    }
}

/// Outcome of checking a candidate degree map against a presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeCheck {
    /// Homomorphism on the basis, star-symmetric, real-valued.
    pub valid: bool,
    /// All values strictly positive (meaningful only when `valid`).
    pub positive: bool,
}

/// Tests whether δ is an algebra homomorphism (δ_iδ_j = Σ_k λ_ijk δ_k for
/// all i, j) that is star-symmetric on the basis. Real-valuedness holds by
/// the scalar type. Zero values are allowed: linear characters of interest
/// may vanish on part of the basis.
pub fn verify_degree_map(pres: &RbaPresentation, delta: &DegreeMap) -> Result<DegreeCheck> {
    let n = pres.size();
    if delta.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "degree map on {} elements, presentation on {}",
            delta.len(),
            n
        )));
    }
    let mut valid = true;
    'outer: for i in 0..n {
        if delta.get(i) != delta.get(pres.star.apply(i)) {
            valid = false;
            break;
        }
        for j in 0..n {
            let product = delta.get(i) * delta.get(j);
            let expanded: RadicalNumber = pres
                .tensor
                .row(i, j)
                .iter()
                .zip(delta.values())
                .map(|(lambda, d)| lambda * d)
                .sum();
            if product != expanded {
                valid = false;
                break 'outer;
            }
        }
    }
    let positive = valid && delta.is_positive();
    Ok(DegreeCheck { valid, positive })
}

/// Proposes δ_i := λ_{ii*0} and keeps it only when the homomorphism test
/// passes; the guess recovers the degree map of any standard basis.
pub fn degree_candidate(pres: &RbaPresentation) -> Option<DegreeMap> {
    let candidate: Vec<RadicalNumber> = (0..pres.size())
        .map(|i| pres.tensor.get(i, pres.star.apply(i), 0).clone())
        .collect();
    let delta = DegreeMap::new(candidate).ok()?;
    match verify_degree_map(pres, &delta) {
        Ok(check) if check.valid => Some(delta),
        _ => None,
    }
}

/// Rescales the basis by c_i = δ_i / λ_{ii*0} (c₀ = 1) so that the new
/// presentation satisfies λ'_{ii*0} = δ'_i; returns it with the degree map
/// re-expressed on the rescaled basis (δ'_i = c_i δ_i).
pub fn standardize(
    pres: &RbaPresentation,
    delta: &DegreeMap,
) -> Result<(RbaPresentation, DegreeMap)> {
    let check = verify_degree_map(pres, delta)?;
    if !check.valid {
        return Err(Error::InvalidCharacter(
            "degree map fails the homomorphism test".into(),
        ));
    }
    if !check.positive {
        return Err(Error::InvalidParameter(
            "standardization needs a positive degree map".into(),
        ));
    }
    let n = pres.size();
    let mut scale = Vec::with_capacity(n);
    for i in 0..n {
        let loop_constant = pres.tensor.get(i, pres.star.apply(i), 0);
        if loop_constant.sign() != 1 {
            return Err(Error::InvalidParameter(format!(
                "λ[{i}][{}][0] is not positive; not a reality-based basis",
                pres.star.apply(i)
            )));
        }
        scale.push(delta.get(i).div(loop_constant)?);
    }

    let mut tensor = crate::rba::tensor::StructureTensor::zeros(pres.d());
    for (i, j, k, value) in pres.tensor.nonzero_entries() {
        let rescaled = (&(value * &scale[i]) * &scale[j]).div(&scale[k])?;
        tensor.set(i, j, k, rescaled);
    }
    let new_degrees = (0..n).map(|i| delta.get(i) * &scale[i]).collect();
    let standardized = RbaPresentation::new(tensor, pres.star.clone())?;
    Ok((standardized, DegreeMap::new(new_degrees)?))
}

/// The standard feasible trace τ(Σ x_i b_i) = n·x₀ with n the order of the
/// degree map.
pub fn standard_trace(delta: &DegreeMap, coords: &[RadicalNumber]) -> Result<RadicalNumber> {
    if coords.len() != delta.len() {
        return Err(Error::DimensionMismatch(format!(
            "coordinates on {} elements, degree map on {}",
            coords.len(),
            delta.len()
        )));
    }
    Ok(&delta.order() * &coords[0])
}
