//! Lifting a diagonal basis of ℂ^k to a basis of the full k×k matrix
//! algebra by adjoining the off-diagonal elementary matrices, and the
//! resulting rational bases of M_k for every k ≥ 2.
//!
//! The lift turns E_{jk}E_{kj} = E_{jj} into basis relations, so the loop
//! constants of the pair (E_{jk}, E_{kj}) are the identity coefficients of
//! E_{jj} and E_{kk} in the diagonal basis. The loop-constant symmetry
//! axiom therefore forces those coefficients to agree across j, which
//! holds exactly when every non-identity character row sums to zero (all
//! coefficients are then 1/k); identity-coefficient support additionally
//! needs the rows pairwise orthogonal. [`rational_basis_mn`] routes
//! through tables with both properties.

use crate::constructions::diagonal::{character_table_to_diag, diag_basis_small, CharacterTable};
use crate::error::{Error, Result};
use crate::exact::RadicalNumber;
use crate::model::mat::{BlockMat, BlockShape, Mat, MatrixBasis};

/// Re-embeds a diagonal basis (shape (1, …, 1), trivial involution) into
/// M_k and adjoins every off-diagonal elementary matrix. Element order:
/// the identity, the elementary matrices E_{ij} (i ≠ j) in row-major
/// order, then the remaining diagonal elements; the involution maps
/// E_{ij} ↦ E_{ji} and fixes the diagonal part.
pub fn lift_diag_to_full(diag: &MatrixBasis) -> Result<MatrixBasis> {
    let k = diag.shape().components();
    if diag.shape().sizes().iter().any(|&m| m != 1) {
        return Err(Error::InvalidParameter(
            "lift expects a diagonal basis in shape (1, …, 1)".into(),
        ));
    }
    if diag.len() != k {
        return Err(Error::DimensionMismatch(format!(
            "diagonal basis of ℂ^{k} must have {k} elements, got {}",
            diag.len()
        )));
    }
    if k < 2 {
        return Err(Error::InvalidParameter(
            "lift needs at least two diagonal components".into(),
        ));
    }
    // trivial involution is automatic for 1×1 blocks; the identity tuple
    // must come first
    if !diag
        .element(0)
        .blocks()
        .iter()
        .all(|b| b.get(0, 0).is_one())
    {
        return Err(Error::InvalidParameter(
            "first diagonal element must be the identity".into(),
        ));
    }

    let shape = BlockShape::new(vec![k])?;
    let mut elements = Vec::with_capacity(k * k);
    elements.push(BlockMat::identity(&shape));
    for row in 0..k {
        for col in 0..k {
            if row != col {
                elements.push(BlockMat::new(vec![Mat::elementary(k, row, col)]));
            }
        }
    }
    for i in 1..k {
        let values: Vec<RadicalNumber> = (0..k)
            .map(|c| diag.element(i).block(c).get(0, 0).clone())
            .collect();
        elements.push(BlockMat::new(vec![Mat::diagonal(&values)]));
    }
    MatrixBasis::new(shape, elements)
}

/// Rational character table whose non-identity rows sum to zero and are
/// pairwise orthogonal, making the lifted basis satisfy the loop-constant
/// axioms: the printed small tables for k = 2 and 4 (which already
/// qualify), staircase rows (1, …, 1, −i, 0, …) otherwise.
pub fn orthogonal_character_table(k: usize) -> Result<CharacterTable> {
    if k == 2 || k == 4 {
        return crate::constructions::diagonal::small_rational_character_table(k);
    }
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least two characters, got {k}"
        )));
    }
    let mut rows = Vec::with_capacity(k);
    rows.push(vec![RadicalNumber::one(); k]);
    for i in 1..k {
        let mut row = vec![RadicalNumber::zero(); k];
        for slot in row.iter_mut().take(i) {
            *slot = RadicalNumber::one();
        }
        row[i] = RadicalNumber::from_integer(-(i as i64));
        rows.push(row);
    }
    CharacterTable::new(rows)
}

/// A rational basis of the full matrix algebra M_k (blockwise-transpose
/// involution) for any k ≥ 2, lifted from a zero-row-sum orthogonal
/// diagonal basis. For k ∈ {2, 4} this is the lift of the small printed
/// tables; elsewhere those tables (and the affine-plane ones) have
/// primitive idempotents with unequal identity coefficients, which breaks
/// the loop-constant symmetry of the lift, so staircase tables are used
/// instead.
pub fn rational_basis_mn(k: usize) -> Result<MatrixBasis> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "rational matrix-algebra bases start at size 2, got {k}"
        )));
    }
    let diagonal = if k == 2 || k == 4 {
        diag_basis_small(k)?
    } else {
        character_table_to_diag(&orthogonal_character_table(k)?)?
    };
    lift_diag_to_full(&diagonal)
}
