//! LaTeX rendering of scalars, matrices, bases, and structure-constant
//! tables (display only).

use num_bigint::BigUint;
use num_traits::{One, Signed};

use crate::exact::{RadicalNumber, Rational};
use crate::model::mat::{Mat, MatrixBasis};
use crate::rba::StructureTensor;

fn latex_rational_magnitude(q: &Rational) -> String {
    let magnitude = q.abs();
    if magnitude.denom().is_one() {
        magnitude.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", magnitude.numer(), magnitude.denom())
    }
}

/// Term-list rendering, e.g. `-\frac{1}{4} + \frac{5}{4}\sqrt{3}`.
pub fn latex_radical(value: &RadicalNumber) -> String {
    if value.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (position, (rad, coeff)) in value.terms().enumerate() {
        if position == 0 {
            if coeff.is_negative() {
                out.push('-');
            }
        } else if coeff.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let magnitude = latex_rational_magnitude(coeff);
        if rad.is_one() {
            out.push_str(&magnitude);
        } else {
            if magnitude != "1" {
                out.push_str(&magnitude);
            }
            out.push_str(&format!("\\sqrt{{{}}}", rad.value()));
        }
    }
    out
}

/// Matrix rendering with a common denominator factored out, mirroring the
/// usual display `\frac{1}{9}\begin{bmatrix} … \end{bmatrix}`.
pub fn latex_matrix(matrix: &Mat) -> String {
    let mut denominator = BigUint::one();
    for entry in matrix.entries() {
        denominator = num_integer::Integer::lcm(&denominator, &entry.denominator_lcm());
    }
    let scale = Rational::from_integer(denominator.clone().into());
    let mut out = String::new();
    if !denominator.is_one() {
        out.push_str(&format!("\\frac{{1}}{{{denominator}}}"));
    }
    out.push_str("\\begin{bmatrix} ");
    let n = matrix.size();
    for row in 0..n {
        for col in 0..n {
            let entry = if denominator.is_one() {
                matrix.get(row, col).clone()
            } else {
                matrix.get(row, col).scale(&scale)
            };
            out.push_str(&latex_radical(&entry));
            if col + 1 < n {
                out.push_str(" & ");
            }
        }
        if row + 1 < n {
            out.push_str(" \\\\ ");
        }
    }
    out.push_str(" \\end{bmatrix}");
    out
}

/// One line per element: `b_{i} = \left( block, block \right)`.
pub fn latex_basis(basis: &MatrixBasis) -> String {
    let mut out = String::new();
    for (index, element) in basis.elements().iter().enumerate() {
        out.push_str(&format!("b_{{{index}}} = \\left( "));
        for (position, block) in element.blocks().iter().enumerate() {
            if position > 0 {
                out.push_str(", ");
            }
            if block.size() == 1 {
                out.push_str(&latex_radical(block.get(0, 0)));
            } else {
                out.push_str(&latex_matrix(block));
            }
        }
        out.push_str(" \\right)\n");
    }
    out
}

/// Two-column array of the nonzero structure constants away from the
/// identity index, in the layout of a closed-form table.
pub fn latex_lambda_table(tensor: &StructureTensor) -> String {
    let entries: Vec<String> = tensor
        .nonzero_entries()
        .filter(|&(i, j, k, _)| i != 0 && j != 0 && k != 0)
        .map(|(i, j, k, value)| format!("\\lambda_{{{i}{j}{k}}} = {}", latex_radical(value)))
        .collect();
    let mut out = String::from("\\begin{array}{ll}\n");
    for pair in entries.chunks(2) {
        match pair {
            [left, right] => out.push_str(&format!("{left}, & {right}, \\\\\n")),
            [left] => out.push_str(&format!("{left} & \\\\\n")),
            _ => unreachable!(),
        }
    }
    out.push_str("\\end{array}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cm_basis, CmParams};
    use crate::exact::rat;

    #[test]
    fn radical_rendering() {
        let x = &RadicalNumber::sqrt_rational(&rat(3, 1))
            .unwrap()
            .scale(&rat(5, 4))
            - &RadicalNumber::from_rational(rat(1, 4));
        assert_eq!(latex_radical(&x), "-\\frac{1}{4} + \\frac{5}{4}\\sqrt{3}");
        assert_eq!(latex_radical(&RadicalNumber::zero()), "0");
        assert_eq!(
            latex_radical(&RadicalNumber::sqrt_rational(&rat(2, 1)).unwrap()),
            "\\sqrt{2}"
        );
    }

    #[test]
    fn matrix_rendering_factors_the_denominator() {
        // first reflected block of the m=3, δ=7 construction: the 1/9 comes out
        let basis = cm_basis(&CmParams::new(3, rat(7, 1)).unwrap()).unwrap();
        let rendered = latex_matrix(basis.element(1).block(1));
        assert!(
            rendered.starts_with("\\frac{1}{9}\\begin{bmatrix}"),
            "{rendered}"
        );
        assert!(rendered.contains("-1 - 16\\sqrt{3}"), "{rendered}");
        assert!(rendered.contains("& 8 &"), "{rendered}");
    }

    #[test]
    fn identity_needs_no_prefactor() {
        let rendered = latex_matrix(&Mat::identity(2));
        assert_eq!(rendered, "\\begin{bmatrix} 1 & 0 \\\\ 0 & 1 \\end{bmatrix}");
    }
}
