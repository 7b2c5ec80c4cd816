//! Rational bases for arbitrary finite-dimensional semisimple algebras,
//! assembled by induction on the simple components through circle
//! products, together with matrix realizations that let extraction
//! cross-check every glued presentation.

use crate::constructions::lift::rational_basis_mn;
use crate::error::{Error, Result};
use crate::exact::{rat, RadicalNumber};
use crate::model::extract::extract_structure_constants;
use crate::model::mat::{BlockMat, BlockShape, Mat, MatrixBasis};
use crate::rba::{circle_product, circle_product_with_idempotent, DegreeMap, RbaPresentation};

/// Realization of C₂ ∘ basis ≅ ℂ ⊕ A: a fresh scalar component carrying
/// +1 on the old identity and −1 on the adjoined group element, with the
/// original elements continuing in their own components. Element order
/// matches the circle product: b₀, the group element, then the old basis
/// minus its identity.
pub fn adjoin_scalar_component(basis: &MatrixBasis) -> MatrixBasis {
    let mut sizes = vec![1];
    sizes.extend_from_slice(basis.shape().sizes());
    let shape = BlockShape::new(sizes).expect("valid sizes");

    let scalar = |v: i64| Mat::diagonal(&[RadicalNumber::from_integer(v)]);
    let with_scalar = |v: i64, blocks: &[Mat]| {
        let mut all = vec![scalar(v)];
        all.extend_from_slice(blocks);
        BlockMat::new(all)
    };
    let identity_blocks = BlockMat::identity(basis.shape());

    let mut elements = Vec::with_capacity(basis.len() + 1);
    elements.push(with_scalar(1, identity_blocks.blocks()));
    elements.push(with_scalar(-1, identity_blocks.blocks()));
    for element in basis.elements().iter().skip(1) {
        let mut blocks = vec![scalar(0)];
        blocks.extend_from_slice(element.blocks());
        elements.push(BlockMat::new(blocks));
    }
    MatrixBasis::new(shape, elements).expect("shapes agree")
}

/// Realization of the attachment step: the scalar component of `left`
/// (which must be its component 0) is replaced by the full shape of
/// `right`, so left elements spread their scalar value as a multiple of
/// the identity over right's components and right elements land in those
/// components with zeros elsewhere. Element order matches
/// `circle_product(left, …, right)`.
pub fn attach_realization(left: &MatrixBasis, right: &MatrixBasis) -> Result<MatrixBasis> {
    if left.shape().sizes().first() != Some(&1) {
        return Err(Error::InvalidParameter(
            "attachment needs a scalar first component on the left".into(),
        ));
    }
    let mut sizes: Vec<usize> = right.shape().sizes().to_vec();
    sizes.extend_from_slice(&left.shape().sizes()[1..]);
    let shape = BlockShape::new(sizes)?;

    let mut elements = Vec::with_capacity(left.len() + right.len() - 1);
    for element in left.elements() {
        let scalar = element.block(0).get(0, 0).clone();
        let mut blocks: Vec<Mat> = right
            .shape()
            .sizes()
            .iter()
            .map(|&m| Mat::identity(m).scale(&scalar))
            .collect();
        blocks.extend(element.blocks()[1..].iter().cloned());
        elements.push(BlockMat::new(blocks));
    }
    for element in right.elements().iter().skip(1) {
        let mut blocks: Vec<Mat> = element.blocks().to_vec();
        blocks.extend(left.shape().sizes()[1..].iter().map(|&m| Mat::zeros(m)));
        elements.push(BlockMat::new(blocks));
    }
    MatrixBasis::new(shape, elements)
}

/// Presentation of a single component M_k (trivial for k = 1).
fn simple_presentation(k: usize) -> Result<RbaPresentation> {
    if k == 1 {
        Ok(RbaPresentation::trivial())
    } else {
        extract_structure_constants(&rational_basis_mn(k)?)
    }
}

fn simple_realization(k: usize) -> Result<MatrixBasis> {
    if k == 1 {
        let shape = BlockShape::new(vec![1])?;
        MatrixBasis::new(shape.clone(), vec![BlockMat::identity(&shape)])
    } else {
        rational_basis_mn(k)
    }
}

fn c2_trivial_character() -> DegreeMap {
    DegreeMap::new(vec![RadicalNumber::one(), RadicalNumber::one()]).expect("valid")
}

/// Circle-attaches `rest` to ℂ ⊕ M_k. The projection character of
/// ℂ ⊕ M_k is (1, −1, 0, …, 0) in the glued basis and sums to zero over
/// it, so its idempotent (b₀ − b₁)/2 is supplied explicitly.
fn attach(five_like: &RbaPresentation, rest: &RbaPresentation) -> Result<RbaPresentation> {
    let mut values = vec![RadicalNumber::zero(); five_like.size()];
    values[0] = RadicalNumber::one();
    values[1] = RadicalNumber::from_integer(-1);
    let projection = DegreeMap::new(values)?;
    let mut idempotent = vec![RadicalNumber::zero(); five_like.size()];
    idempotent[0] = RadicalNumber::from_rational(rat(1, 2));
    idempotent[1] = RadicalNumber::from_rational(rat(-1, 2));
    Ok(circle_product_with_idempotent(five_like, &projection, &idempotent, rest)?.presentation)
}

/// A rational presentation of ⊕_i M_{dims[i]}, by induction on the
/// components: a single component is a matrix-algebra basis; a leading
/// scalar component attaches the rest to the two-element group algebra;
/// a leading matrix component routes through ℂ ⊕ M_k and the projection
/// character that kills M_k.
pub fn semisimple_rational_rba(dims: &[usize]) -> Result<RbaPresentation> {
    let (&first, rest) = dims
        .split_first()
        .ok_or_else(|| Error::InvalidParameter("empty dimension list".into()))?;
    if first == 0 {
        return Err(Error::InvalidParameter("zero component dimension".into()));
    }
    if rest.is_empty() {
        return simple_presentation(first);
    }
    let rest_presentation = semisimple_rational_rba(rest)?;
    let c2 = RbaPresentation::c2_group_algebra();
    if first == 1 {
        Ok(circle_product(&c2, &c2_trivial_character(), &rest_presentation)?.presentation)
    } else {
        let five_like = circle_product(&c2, &c2_trivial_character(), &simple_presentation(first)?)?
            .presentation;
        attach(&five_like, &rest_presentation)
    }
}

/// Matrix realization mirroring [`semisimple_rational_rba`] element for
/// element; extraction of this basis reproduces the glued presentation
/// exactly.
pub fn semisimple_rational_realization(dims: &[usize]) -> Result<MatrixBasis> {
    let (&first, rest) = dims
        .split_first()
        .ok_or_else(|| Error::InvalidParameter("empty dimension list".into()))?;
    if first == 0 {
        return Err(Error::InvalidParameter("zero component dimension".into()));
    }
    if rest.is_empty() {
        return simple_realization(first);
    }
    let rest_realization = semisimple_rational_realization(rest)?;
    if first == 1 {
        Ok(adjoin_scalar_component(&rest_realization))
    } else {
        attach_realization(
            &adjoin_scalar_component(&simple_realization(first)?),
            &rest_realization,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rba::{verify_degree_map, verify_rba};

    #[test]
    fn single_component_is_the_matrix_basis() {
        let pres = semisimple_rational_rba(&[2]).unwrap();
        let direct = extract_structure_constants(&rational_basis_mn(2).unwrap()).unwrap();
        assert_eq!(pres, direct);
    }

    #[test]
    fn scalar_plus_m2_is_five_dimensional_and_rational() {
        let pres = semisimple_rational_rba(&[1, 2]).unwrap();
        assert_eq!(pres.size(), 5);
        let report = verify_rba(&pres).unwrap();
        assert!(report.passed, "{report:?}");
        assert!(report.flags.is_rational);
    }

    #[test]
    fn realization_extraction_matches_presentation() {
        for dims in [vec![1, 2], vec![1, 1, 2], vec![2, 2], vec![1, 3]] {
            let pres = semisimple_rational_rba(&dims).unwrap();
            let realization = semisimple_rational_realization(&dims).unwrap();
            let extracted = extract_structure_constants(&realization).unwrap();
            assert_eq!(extracted, pres, "dims {dims:?}");
        }
    }

    #[test]
    fn projection_character_verifies_but_cannot_be_positive() {
        // The unique linear character of ℂ ⊕ M_n takes the values
        // (1, −1, 0, …, 0) on the circle basis, so no degree map on this
        // basis is positive; the character itself still verifies.
        for dims in [vec![1, 2], vec![1, 1, 2]] {
            let pres = semisimple_rational_rba(&dims).unwrap();
            let realization = semisimple_rational_realization(&dims).unwrap();
            let delta = realization.projection_degree_map().unwrap();
            let check = verify_degree_map(&pres, &delta).unwrap();
            assert!(check.valid, "dims {dims:?}");
            assert!(!check.positive, "dims {dims:?}");
        }
    }

    #[test]
    fn empty_and_zero_dims_rejected() {
        assert!(semisimple_rational_rba(&[]).is_err());
        assert!(semisimple_rational_rba(&[2, 0]).is_err());
    }
}
