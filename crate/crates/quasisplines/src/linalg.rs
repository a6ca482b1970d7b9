//! Dense exact linear algebra over the rationals: rank and null spaces by
//! plain Gaussian elimination. Deliberately independent of the Gröbner
//! machinery; used for slice-dimension cross-checks.

use num_traits::Zero;

use crate::poly::polynomial::Rational;

/// Reduces in place to row echelon form; returns the pivot columns.
fn echelon(mat: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let rows = mat.len();
    let cols = mat.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(pivot_row) = (row..rows).find(|r| !mat[*r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, pivot_row);
        let inv = mat[row][col].recip();
        for c in col..cols {
            let v = &mat[row][c] * &inv;
            mat[row][c] = v;
        }
        for r in 0..rows {
            if r != row && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &mat[row][c];
                    mat[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank of a rational matrix.
pub fn rank(mat: &[Vec<Rational>]) -> usize {
    let mut m = mat.to_vec();
    echelon(&mut m).len()
}

/// A basis of the right null space { x : A·x = 0 }.
pub fn null_space(mat: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = mat.first().map(|r| r.len()).unwrap_or(0);
    let mut m = mat.to_vec();
    let pivots = echelon(&mut m);
    let mut basis = Vec::new();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    for f in free {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::from_integer(1.into());
        for (prow, pcol) in pivots.iter().enumerate() {
            // Row prow reads x_pcol + Σ coeffs · x_free = 0.
            v[*pcol] = -m[prow][f].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&[vec![q(1), q(0)], vec![q(0), q(1)]]), 2);
        assert_eq!(rank(&[vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(rank(&[vec![q(0), q(0)]]), 0);
    }

    #[test]
    fn null_space_solves() {
        let a = vec![vec![q(1), q(2), q(3)], vec![q(0), q(1), q(1)]];
        let ns = null_space(&a);
        assert_eq!(ns.len(), 1);
        for row in &a {
            let dot: Rational = row
                .iter()
                .zip(&ns[0])
                .map(|(r, x)| r * x)
                .fold(q(0), |acc, v| acc + v);
            assert!(dot.is_zero());
        }
    }
}
