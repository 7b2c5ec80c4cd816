//! Fraction-free Gaussian elimination over the exact scalar ring.
//!
//! Pivots are chosen as the first row with a nonzero entry; magnitude
//! pivoting is pointless in exact arithmetic. The one-step fraction-free
//! update divides by the previous pivot, which is exact here, and keeps
//! coefficient growth under control for the radical-number entries.

use crate::error::{Error, Result};
use crate::exact::RadicalNumber;

/// Solves A·X = B for A square, given as rows; B holds one right-hand side
/// per column. Fails with `RankDeficient` when A is singular.
pub fn solve(
    a: &[Vec<RadicalNumber>],
    b: &[Vec<RadicalNumber>],
) -> Result<Vec<Vec<RadicalNumber>>> {
    let n = a.len();
    let width = b.first().map_or(0, Vec::len);
    assert!(a.iter().all(|row| row.len() == n), "A must be square");
    assert_eq!(b.len(), n, "B must have one row per equation");

    // augmented rows [A | B]
    let mut rows: Vec<Vec<RadicalNumber>> = a
        .iter()
        .zip(b)
        .map(|(left, right)| left.iter().chain(right).cloned().collect())
        .collect();

    let echelon = eliminate(&mut rows, n);
    if echelon.pivot_columns.len() < n {
        return Err(Error::RankDeficient {
            rank: echelon.pivot_columns.len(),
            expected: n,
        });
    }

    back_substitute(&rows, &echelon.pivot_columns, n, width)
}

/// Rank of a rectangular matrix.
pub fn rank(a: &[Vec<RadicalNumber>]) -> usize {
    if a.is_empty() {
        return 0;
    }
    let cols = a[0].len();
    let mut rows = a.to_vec();
    eliminate(&mut rows, cols).pivot_columns.len()
}

/// Result of expressing vectors in the column span of a tall matrix:
/// coordinates per input vector, or the index of the first vector that
/// falls outside the span.
pub struct SpanSolve {
    pub coordinates: Vec<Vec<RadicalNumber>>,
}

/// Solves M·x_j = v_j for a column matrix M (rows × cols, rows ≥ cols,
/// full column rank) and many targets. `RankDeficient` when the columns
/// are dependent; `NotInSpan` (with the target's index reported through
/// the error payload as i = j, j = 0) is raised by the caller instead,
/// so this returns the offending target index.
pub fn solve_in_span(
    matrix_rows: &[Vec<RadicalNumber>],
    targets: &[Vec<RadicalNumber>],
) -> Result<std::result::Result<Vec<Vec<RadicalNumber>>, usize>> {
    let rows = matrix_rows.len();
    let cols = matrix_rows.first().map_or(0, Vec::len);
    let width = targets.len();
    assert!(targets.iter().all(|t| t.len() == rows));

    let mut augmented: Vec<Vec<RadicalNumber>> = (0..rows)
        .map(|r| {
            matrix_rows[r]
                .iter()
                .cloned()
                .chain(targets.iter().map(|t| t[r].clone()))
                .collect()
        })
        .collect();

    let echelon = eliminate(&mut augmented, cols);
    if echelon.pivot_columns.len() < cols {
        return Err(Error::RankDeficient {
            rank: echelon.pivot_columns.len(),
            expected: cols,
        });
    }
    // consistency: rows below the pivots must be zero on every target
    for row in augmented.iter().skip(cols) {
        for (j, value) in row.iter().skip(cols).enumerate() {
            if !value.is_zero() {
                return Ok(Err(j));
            }
        }
    }
    let coordinates = back_substitute(&augmented, &echelon.pivot_columns, cols, width)?;
    Ok(Ok(transpose(coordinates)))
}

fn transpose(columns_as_rows: Vec<Vec<RadicalNumber>>) -> Vec<Vec<RadicalNumber>> {
    if columns_as_rows.is_empty() {
        return Vec::new();
    }
    let width = columns_as_rows[0].len();
    (0..width)
        .map(|j| columns_as_rows.iter().map(|row| row[j].clone()).collect())
        .collect()
}

struct Echelon {
    pivot_columns: Vec<usize>,
}

/// Bareiss-style forward elimination in place, limited to the first
/// `pivot_limit` columns; the rest of each row is carried along.
fn eliminate(rows: &mut [Vec<RadicalNumber>], pivot_limit: usize) -> Echelon {
    let mut pivot_columns = Vec::new();
    let mut previous_pivot = RadicalNumber::one();
    let mut next_row = 0;
    for col in 0..pivot_limit {
        let Some(pivot_row) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, pivot_row);
        let previous_inverse = previous_pivot
            .inverse()
            .expect("previous pivot is nonzero by construction");
        let pivot = rows[next_row][col].clone();
        for r in next_row + 1..rows.len() {
            if rows[r].iter().all(RadicalNumber::is_zero) {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in 0..rows[r].len() {
                let updated = &(&pivot * &rows[r][c]) - &(&factor * &rows[next_row][c]);
                rows[r][c] = &updated * &previous_inverse;
            }
        }
        previous_pivot = pivot;
        pivot_columns.push(col);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    Echelon { pivot_columns }
}

/// Back substitution on an echelon system with full column rank over the
/// first `cols` columns; returns the solution rows (one per unknown).
fn back_substitute(
    rows: &[Vec<RadicalNumber>],
    pivot_columns: &[usize],
    cols: usize,
    width: usize,
) -> Result<Vec<Vec<RadicalNumber>>> {
    debug_assert_eq!(pivot_columns.len(), cols);
    let mut solution = vec![vec![RadicalNumber::zero(); width]; cols];
    for (rank_index, &col) in pivot_columns.iter().enumerate().rev() {
        let row = &rows[rank_index];
        let pivot_inverse = row[col].inverse()?;
        for target in 0..width {
            let mut value = row[cols + target].clone();
            for later in col + 1..cols {
                if !row[later].is_zero() {
                    value = &value - &(&row[later] * &solution[later][target]);
                }
            }
            solution[col][target] = &value * &pivot_inverse;
        }
    }
    Ok(solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Rational};

    fn r(n: i64, d: i64) -> RadicalNumber {
        RadicalNumber::from_rational(rat(n, d))
    }

    #[test]
    fn solves_a_rational_system() {
        // x + 2y = 5, 3x + 4y = 6  →  x = −4, y = 9/2
        let a = vec![vec![r(1, 1), r(2, 1)], vec![r(3, 1), r(4, 1)]];
        let b = vec![vec![r(5, 1)], vec![r(6, 1)]];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x[0][0], r(-4, 1));
        assert_eq!(x[1][0], r(9, 2));
    }

    #[test]
    fn solves_with_radical_entries() {
        let sqrt2 = RadicalNumber::sqrt_rational(&Rational::from_integer(2.into())).unwrap();
        // (√2)x = 2 → x = √2
        let a = vec![vec![sqrt2.clone()]];
        let b = vec![vec![r(2, 1)]];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x[0][0], sqrt2);
    }

    #[test]
    fn singular_system_reports_rank() {
        let a = vec![vec![r(1, 1), r(2, 1)], vec![r(2, 1), r(4, 1)]];
        let b = vec![vec![r(0, 1)], vec![r(0, 1)]];
        match solve(&a, &b) {
            Err(Error::RankDeficient { rank, expected }) => {
                assert_eq!((rank, expected), (1, 2));
            }
            other => panic!("expected rank error, got {other:?}"),
        }
    }

    #[test]
    fn span_solve_flags_vectors_outside_the_span() {
        // span of (1, 0, 1) and (0, 1, 0) inside ℝ³
        let matrix = vec![
            vec![r(1, 1), r(0, 1)],
            vec![r(0, 1), r(1, 1)],
            vec![r(1, 1), r(0, 1)],
        ];
        let inside = vec![r(2, 1), r(3, 1), r(2, 1)];
        let outside = vec![r(1, 1), r(0, 1), r(0, 1)];
        let coords = solve_in_span(&matrix, std::slice::from_ref(&inside))
            .unwrap()
            .unwrap();
        assert_eq!(coords[0], vec![r(2, 1), r(3, 1)]);
        let offending = solve_in_span(&matrix, &[inside, outside])
            .unwrap()
            .unwrap_err();
        assert_eq!(offending, 1);
    }

    #[test]
    fn rank_of_rectangular_matrices() {
        let m = vec![
            vec![r(1, 1), r(1, 1), r(0, 1)],
            vec![r(0, 1), r(1, 1), r(1, 1)],
            vec![r(1, 1), r(2, 1), r(1, 1)],
        ];
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&[]), 0);
    }
}
