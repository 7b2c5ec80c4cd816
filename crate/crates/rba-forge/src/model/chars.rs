//! Character-theoretic verification of a matrix basis with positive degree
//! map: block-trace characters, central idempotent coordinates, and the
//! multiplicities of the standard feasible trace.

use crate::error::{Error, Result};
use crate::exact::RadicalNumber;
use crate::model::mat::{BlockMat, Mat, MatrixBasis};
use crate::model::solve::solve_in_span;
use crate::rba::DegreeMap;

/// Data of one irreducible character (one matrix component).
#[derive(Debug, Clone)]
pub struct CharacterInfo {
    pub component: usize,
    /// χ(1), the component size.
    pub dimension: usize,
    /// χ(b_i): block traces across the basis.
    pub values: Vec<RadicalNumber>,
    /// Multiplicity m_χ of χ in the standard feasible trace.
    pub multiplicity: RadicalNumber,
    /// Coordinates of the central idempotent e_χ in the basis.
    pub idempotent_coords: Vec<RadicalNumber>,
}

#[derive(Debug, Clone)]
pub struct CharacterData {
    pub order: RadicalNumber,
    pub characters: Vec<CharacterInfo>,
}

impl CharacterData {
    pub fn character(&self, component: usize) -> &CharacterInfo {
        &self.characters[component]
    }

    /// The character of largest dimension; handy for the two-component
    /// constructions where it is the unique matrix character.
    pub fn largest(&self) -> &CharacterInfo {
        self.characters
            .iter()
            .max_by_key(|c| c.dimension)
            .expect("at least one component")
    }
}

/// Computes block-trace characters and idempotent data, then checks the
/// classical identities for a basis with positive degree map δ:
///
/// - e_χ = (m_χ/n) Σ_i χ(b_i*)/λ_{ii*0} b_i with m_χ recovered from the
///   b₀-coordinate and asserted positive;
/// - orthogonality χ(e_ψ) = δ_{χψ} χ(1), evaluated through the solved
///   coordinates;
/// - the degree character appears among the components with m_δ = 1;
/// - n = Σ_χ m_χ χ(1).
pub fn character_data(basis: &MatrixBasis, delta: &DegreeMap) -> Result<CharacterData> {
    if delta.len() != basis.len() {
        return Err(Error::DimensionMismatch(format!(
            "degree map on {} elements, basis has {}",
            delta.len(),
            basis.len()
        )));
    }
    if !delta.is_positive() {
        return Err(Error::InvalidParameter(
            "character data needs a positive degree map".into(),
        ));
    }
    let star = crate::model::extract::involution_on_indices(basis)?;
    let order = delta.order();
    let order_inverse = order.inverse()?;
    let components = basis.shape().components();
    let count = basis.len();

    // One linear solve: idempotent tuples and the loop products b_i b_i*.
    let flattened: Vec<Vec<RadicalNumber>> = basis.elements().iter().map(|e| e.flatten()).collect();
    let matrix_rows: Vec<Vec<RadicalNumber>> = (0..basis.shape().flat_dim())
        .map(|r| flattened.iter().map(|col| col[r].clone()).collect())
        .collect();
    let mut targets = Vec::with_capacity(components + count);
    for c in 0..components {
        let blocks: Vec<Mat> = basis
            .shape()
            .sizes()
            .iter()
            .enumerate()
            .map(|(b, &m)| {
                if b == c {
                    Mat::identity(m)
                } else {
                    Mat::zeros(m)
                }
            })
            .collect();
        targets.push(BlockMat::new(blocks).flatten());
    }
    for (i, element) in basis.elements().iter().enumerate() {
        targets.push(element.mul(basis.element(star.apply(i))).flatten());
    }
    let solved = solve_in_span(&matrix_rows, &targets)?.map_err(|offending| {
        if offending < components {
            Error::CharacterTheory {
                component: offending,
                detail: "central idempotent lies outside the span of the basis".into(),
            }
        } else {
            Error::NotInSpan {
                i: offending - components,
                j: star.apply(offending - components),
            }
        }
    })?;
    let (idempotent_coords, loop_products) = solved.split_at(components);
    let loop_constants: Vec<RadicalNumber> = loop_products
        .iter()
        .map(|coords| coords[0].clone())
        .collect();

    let mut characters = Vec::with_capacity(components);
    for (c, coords) in idempotent_coords.iter().enumerate() {
        let dimension = basis.shape().sizes()[c];
        let values: Vec<RadicalNumber> = basis
            .elements()
            .iter()
            .map(|e| e.block(c).trace())
            .collect();
        // coordinate of b₀: (m_χ/n)·χ(b₀)/λ₀₀₀ = m_χ·χ(1)/n
        let chi_one = RadicalNumber::from_integer(dimension as i64);
        let multiplicity = &(&coords[0] * &order) * &chi_one.inverse()?;
        if multiplicity.sign() != 1 {
            return Err(Error::CharacterTheory {
                component: c,
                detail: format!("multiplicity {multiplicity} is not positive"),
            });
        }
        for i in 0..count {
            if loop_constants[i].is_zero() {
                return Err(Error::CharacterTheory {
                    component: c,
                    detail: format!("loop constant of element {i} vanishes"),
                });
            }
            let expected = (&(&multiplicity * &order_inverse) * &values[star.apply(i)])
                .div(&loop_constants[i])?;
            if coords[i] != expected {
                return Err(Error::CharacterTheory {
                    component: c,
                    detail: format!(
                        "idempotent coordinate {i} is {} but the character formula gives {expected}",
                        coords[i]
                    ),
                });
            }
        }
        characters.push(CharacterInfo {
            component: c,
            dimension,
            values,
            multiplicity,
            idempotent_coords: coords.clone(),
        });
    }

    // orthogonality through the solved coordinates
    for chi in &characters {
        for psi in &characters {
            let evaluated: RadicalNumber = psi
                .idempotent_coords
                .iter()
                .zip(&chi.values)
                .map(|(coef, value)| coef * value)
                .sum();
            let expected = if chi.component == psi.component {
                RadicalNumber::from_integer(chi.dimension as i64)
            } else {
                RadicalNumber::zero()
            };
            if evaluated != expected {
                return Err(Error::CharacterTheory {
                    component: chi.component,
                    detail: format!(
                        "χ_{}(e_{}) = {evaluated}, expected {expected}",
                        chi.component, psi.component
                    ),
                });
            }
        }
    }

    // the degree map is one of the characters, with multiplicity 1
    let degree_component = characters
        .iter()
        .find(|c| c.dimension == 1 && c.values == delta.values())
        .ok_or_else(|| Error::CharacterTheory {
            component: 0,
            detail: "degree map does not appear among the block characters".into(),
        })?;
    if !degree_component.multiplicity.is_one() {
        return Err(Error::CharacterTheory {
            component: degree_component.component,
            detail: format!(
                "degree character has multiplicity {}, expected 1",
                degree_component.multiplicity
            ),
        });
    }

    // trace decomposition at b₀: n = Σ m_χ χ(1)
    let total: RadicalNumber = characters
        .iter()
        .map(|c| &c.multiplicity * &RadicalNumber::from_integer(c.dimension as i64))
        .sum();
    if total != order {
        return Err(Error::CharacterTheory {
            component: 0,
            detail: format!("Σ m_χ·χ(1) = {total} differs from the order {order}"),
        });
    }

    Ok(CharacterData { order, characters })
}
