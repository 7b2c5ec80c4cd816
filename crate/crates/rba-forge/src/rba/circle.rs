//! The circle product: gluing a second algebra onto the first through the
//! central idempotent of a real linear character.

use crate::error::{Error, Result};
use crate::exact::RadicalNumber;
use crate::rba::degree::{verify_degree_map, DegreeMap};
use crate::rba::involution::InvolutionPerm;
use crate::rba::presentation::RbaPresentation;
use crate::rba::tensor::StructureTensor;

/// Circle-product output. The construction is defined for a commutative
/// left factor with a degree map (a C-algebra); the commutativity
/// hypothesis is checked and reported rather than enforced.
#[derive(Debug, Clone)]
pub struct CircleProduct {
    pub presentation: RbaPresentation,
    /// Whether the left factor's tensor was commutative (the C-algebra
    /// hypothesis of the construction).
    pub left_factor_commutative: bool,
    /// Coordinates of the character idempotent used for the glued products.
    pub idempotent: Vec<RadicalNumber>,
}

fn is_commutative(tensor: &StructureTensor) -> bool {
    let n = tensor.size();
    (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| tensor.get(i, j, k) == tensor.get(j, i, k))))
}

/// Circle product on the disjoint union of the left basis and the right
/// basis minus its identity. The left character must verify as a real
/// linear character; its idempotent is recovered from the idempotent
/// character formula e_δ = (1/δ(𝐁⁺)) Σ_i (δ(b_i)/λ_{ii*0}) b_i, which
/// needs δ(𝐁⁺) ≠ 0.
pub fn circle_product(
    left: &RbaPresentation,
    left_character: &DegreeMap,
    right: &RbaPresentation,
) -> Result<CircleProduct> {
    let order = left_character.order();
    if order.is_zero() {
        return Err(Error::InvalidCharacter(
            "character sums to zero over the basis; supply the idempotent explicitly".into(),
        ));
    }
    let order_inverse = order.inverse()?;
    let mut idempotent = Vec::with_capacity(left.size());
    for i in 0..left.size() {
        let loop_constant = left.tensor.get(i, left.star.apply(i), 0);
        let coordinate = (&left_character.get(i).div(loop_constant)?) * &order_inverse;
        idempotent.push(coordinate);
    }
    circle_product_with_idempotent(left, left_character, &idempotent, right)
}

/// As [`circle_product`], with the character idempotent supplied directly
/// (required when δ(𝐁⁺) = 0, e.g. for projection characters that vanish on
/// part of the basis).
pub fn circle_product_with_idempotent(
    left: &RbaPresentation,
    left_character: &DegreeMap,
    idempotent: &[RadicalNumber],
    right: &RbaPresentation,
) -> Result<CircleProduct> {
    let check = verify_degree_map(left, left_character)?;
    if !check.valid {
        return Err(Error::InvalidCharacter(
            "left character fails the homomorphism test".into(),
        ));
    }
    if idempotent.len() != left.size() {
        return Err(Error::DimensionMismatch(format!(
            "idempotent on {} coordinates, left basis has {}",
            idempotent.len(),
            left.size()
        )));
    }
    let squared = left.tensor.multiply(idempotent, idempotent);
    if squared != idempotent {
        return Err(Error::InvalidCharacter(
            "supplied element is not idempotent in the left algebra".into(),
        ));
    }
    if !left_character.evaluate(idempotent).is_one() {
        return Err(Error::InvalidCharacter(
            "character does not take value 1 on its idempotent".into(),
        ));
    }

    let left_size = left.size(); // d_C + 1
    let right_size = right.size(); // h + 1
    let total = left_size + right_size - 1;
    let offset = left_size - 1; // right index k ≥ 1 lands at offset + k

    let mut tensor = StructureTensor::zeros(total - 1);
    // left × left keeps the left tensor
    for (i, j, k, value) in left.tensor.nonzero_entries() {
        tensor.set(i, j, k, value.clone());
    }
    // mixed products scale by the character: b_i c_j = c_j b_i = δ(b_i) c_j
    for i in 0..left_size {
        let scalar = left_character.get(i);
        if scalar.is_zero() {
            continue;
        }
        for j in 1..right_size {
            tensor.set(i, offset + j, offset + j, scalar.clone());
            tensor.set(offset + j, i, offset + j, scalar.clone());
        }
    }
    // right × right away from the starred partner keeps the right tensor
    // (its identity coefficient vanishes there)
    for i in 1..right_size {
        for j in 1..right_size {
            if j == right.star.apply(i) {
                continue;
            }
            for k in 1..right_size {
                let value = right.tensor.get(i, j, k);
                if !value.is_zero() {
                    tensor.set(offset + i, offset + j, offset + k, value.clone());
                }
            }
        }
    }
    // starred pairs split the identity coefficient across the idempotent:
    // c_i c_{i*} = β_{ii*0} e_δ + Σ_{k>0} β_{ii*k} c_k
    for i in 1..right_size {
        let i_star = right.star.apply(i);
        let identity_coefficient = right.tensor.get(i, i_star, 0);
        for (k, e_k) in idempotent.iter().enumerate() {
            if !e_k.is_zero() {
                tensor.set(offset + i, offset + i_star, k, identity_coefficient * e_k);
            }
        }
        for k in 1..right_size {
            let value = right.tensor.get(i, i_star, k);
            if !value.is_zero() {
                tensor.set(offset + i, offset + i_star, offset + k, value.clone());
            }
        }
    }

    let mut star_image = Vec::with_capacity(total);
    star_image.extend(left.star.image().iter().copied());
    star_image.extend((1..right_size).map(|i| offset + right.star.apply(i)));
    let star = InvolutionPerm::new(star_image)?;

    Ok(CircleProduct {
        presentation: RbaPresentation::new(tensor, star)?,
        left_factor_commutative: is_commutative(&left.tensor),
        idempotent: idempotent.to_vec(),
    })
}
