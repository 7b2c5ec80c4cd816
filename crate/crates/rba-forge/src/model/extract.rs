//! Recovering an abstract presentation from a matrix realization.

use crate::error::{Error, Result};
use crate::model::mat::MatrixBasis;
use crate::model::solve::solve_in_span;
use crate::rba::{InvolutionPerm, RbaPresentation, StructureTensor};

/// Reads the star permutation off the basis: i* is the index whose element
/// is the blockwise transpose of element i.
pub fn involution_on_indices(basis: &MatrixBasis) -> Result<InvolutionPerm> {
    let mut image = Vec::with_capacity(basis.len());
    for (i, element) in basis.elements().iter().enumerate() {
        let transposed = element.transpose();
        let partner = basis
            .elements()
            .iter()
            .position(|candidate| candidate == &transposed)
            .ok_or(Error::NotStarClosed { index: i })?;
        image.push(partner);
    }
    InvolutionPerm::new(image)
}

/// Expresses every pairwise product in the basis and packages the resulting
/// structure constants with the transpose involution.
///
/// Fails with `RankDeficient` when the elements are linearly dependent and
/// with `NotInSpan {i, j}` when the product of elements i and j leaves the
/// span.
pub fn extract_structure_constants(basis: &MatrixBasis) -> Result<RbaPresentation> {
    let star = involution_on_indices(basis)?;
    let count = basis.len();
    let flat_dim = basis.shape().flat_dim();

    // columns = flattened elements
    let flattened: Vec<Vec<crate::exact::RadicalNumber>> =
        basis.elements().iter().map(|e| e.flatten()).collect();
    let matrix_rows: Vec<Vec<crate::exact::RadicalNumber>> = (0..flat_dim)
        .map(|r| flattened.iter().map(|col| col[r].clone()).collect())
        .collect();

    let mut targets = Vec::with_capacity(count * count);
    for left in basis.elements() {
        for right in basis.elements() {
            targets.push(left.mul(right).flatten());
        }
    }

    let coordinates = match solve_in_span(&matrix_rows, &targets)? {
        Ok(coords) => coords,
        Err(offending) => {
            return Err(Error::NotInSpan {
                i: offending / count,
                j: offending % count,
            })
        }
    };

    let mut tensor = StructureTensor::zeros(count - 1);
    for (pair, coords) in coordinates.into_iter().enumerate() {
        let (i, j) = (pair / count, pair % count);
        for (k, value) in coords.into_iter().enumerate() {
            if !value.is_zero() {
                tensor.set(i, j, k, value);
            }
        }
    }
    RbaPresentation::new(tensor, star)
}
