//! Diagonal bases of the commutative algebra ℂ^k, presented through
//! character tables (first eigenmatrices): rows are basis elements,
//! columns are the irreducible characters.

use crate::error::{Error, Result};
use crate::exact::RadicalNumber;
use crate::model::mat::{BlockMat, BlockShape, Mat, MatrixBasis};
use crate::model::solve::rank;

/// First eigenmatrix of a commutative basis: p_{ij} = χ_j(b_i). Square,
/// with the identity row all ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    values: Vec<Vec<RadicalNumber>>,
}

impl CharacterTable {
    pub fn new(values: Vec<Vec<RadicalNumber>>) -> Result<Self> {
        let k = values.len();
        if k == 0 || values.iter().any(|row| row.len() != k) {
            return Err(Error::DimensionMismatch(
                "character table must be square".into(),
            ));
        }
        if !values[0].iter().all(RadicalNumber::is_one) {
            return Err(Error::InvalidParameter(
                "the identity row of a character table is all ones".into(),
            ));
        }
        Ok(CharacterTable { values })
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, element: usize, character: usize) -> &RadicalNumber {
        &self.values[element][character]
    }

    pub fn rows(&self) -> &[Vec<RadicalNumber>] {
        &self.values
    }
}

/// Realizes the table rows as diagonal matrices: b_i ↦ Diag(p_{i,0}, …),
/// one 1×1 block per character. Fails when the rows are dependent.
pub fn character_table_to_diag(table: &CharacterTable) -> Result<MatrixBasis> {
    let k = table.size();
    let table_rank = rank(table.rows());
    if table_rank < k {
        return Err(Error::RankDeficient {
            rank: table_rank,
            expected: k,
        });
    }
    let shape = BlockShape::new(vec![1; k])?;
    let elements = table
        .rows()
        .iter()
        .map(|row| {
            BlockMat::new(
                row.iter()
                    .map(|value| Mat::diagonal(std::slice::from_ref(value)))
                    .collect(),
            )
        })
        .collect();
    MatrixBasis::new(shape, elements)
}

fn ints(values: &[i64]) -> Vec<RadicalNumber> {
    values
        .iter()
        .map(|&v| RadicalNumber::from_integer(v))
        .collect()
}

/// Rational character tables in dimensions 2, 3, 4 coming from small
/// association schemes.
pub fn small_rational_character_table(k: usize) -> Result<CharacterTable> {
    let rows: Vec<Vec<RadicalNumber>> = match k {
        2 => vec![ints(&[1, 1]), ints(&[1, -1])],
        3 => vec![ints(&[1, 1, 1]), ints(&[1, -1, 1]), ints(&[2, 0, -2])],
        4 => vec![
            ints(&[1, 1, 1, 1]),
            ints(&[1, -1, -1, 1]),
            ints(&[1, -1, 1, -1]),
            ints(&[1, 1, -1, -1]),
        ],
        other => {
            return Err(Error::InvalidParameter(format!(
                "no small diagonal basis in dimension {other}; use the affine-plane family"
            )))
        }
    };
    CharacterTable::new(rows)
}

/// The diagonal bases of ℂ^k for k ∈ {2, 3, 4}:
/// {I₂, Diag(1,−1)}, {I₃, Diag(1,−1,1), Diag(2,0,−2)},
/// {I₄, Diag(1,−1,−1,1), Diag(1,−1,1,−1), Diag(1,1,−1,−1)}.
pub fn diag_basis_small(k: usize) -> Result<MatrixBasis> {
    character_table_to_diag(&small_rational_character_table(k)?)
}
