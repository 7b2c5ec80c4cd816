//! The affine-plane table algebra of order q: a (q+2)-dimensional symmetric
//! presentation with b_i² = (q−1)b₀ + (q−2)b_i and
//! b_i b_j = 𝐁⁺ − b₀ − b_i − b_j for i ≠ j, carrying a rational character
//! table. The underlying association scheme exists when q is a prime power,
//! but the table algebra is valid for every integer q ≥ 2.

use crate::constructions::diagonal::CharacterTable;
use crate::error::{Error, Result};
use crate::exact::RadicalNumber;
use crate::rba::{InvolutionPerm, RbaPresentation, StructureTensor};

pub fn affine_plane_ta(q: usize) -> Result<(RbaPresentation, CharacterTable)> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "affine-plane table algebra needs order ≥ 2, got {q}"
        )));
    }
    let size = q + 2;
    let q_minus_1 = RadicalNumber::from_integer(q as i64 - 1);
    let q_minus_2 = RadicalNumber::from_integer(q as i64 - 2);

    let mut tensor = StructureTensor::with_identity(size - 1);
    for i in 1..size {
        tensor.set(i, i, 0, q_minus_1.clone());
        tensor.set(i, i, i, q_minus_2.clone());
        for j in 1..size {
            if i == j {
                continue;
            }
            for k in 1..size {
                if k != i && k != j {
                    tensor.set(i, j, k, RadicalNumber::one());
                }
            }
        }
    }
    let presentation = RbaPresentation::new(tensor, InvolutionPerm::identity(size))?;

    let mut rows = Vec::with_capacity(size);
    rows.push(vec![RadicalNumber::one(); size]);
    for element in 1..size {
        let mut row = Vec::with_capacity(size);
        row.push(q_minus_1.clone());
        for character in 1..size {
            row.push(if character == element {
                q_minus_1.clone()
            } else {
                RadicalNumber::from_integer(-1)
            });
        }
        rows.push(row);
    }
    Ok((presentation, CharacterTable::new(rows)?))
}
