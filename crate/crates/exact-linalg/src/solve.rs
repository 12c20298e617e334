//! Dense exact Gaussian elimination: inversion and small linear systems.
//!
//! Everything here works over reduced rationals, so elimination is exact and
//! rank decisions are decisive. All uses in this workspace stay well below a
//! few hundred rows, where dense elimination is the simplest correct choice.

use crate::{int, Scalar};
use num_traits::Zero;

/// Inverts the n×n matrix given by `entry(row, col)`. Returns `None` when
/// the matrix is rank-deficient.
#[allow(clippy::needless_range_loop)] // the eliminations touch two rows at once
pub fn invert_dense(n: usize, entry: impl Fn(usize, usize) -> Scalar) -> Option<Vec<Vec<Scalar>>> {
    // Augmented [A | I], reduced to [I | A^-1].
    let mut a: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut row: Vec<Scalar> = (0..n).map(|j| entry(i, j)).collect();
            row.extend((0..n).map(|j| if i == j { int(1) } else { int(0) }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = int(1) / a[col][col].clone();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..2 * n {
                    let delta = &a[col][c] * &factor;
                    a[r][c] -= delta;
                }
            }
        }
    }
    Some(a.into_iter().map(|mut row| row.split_off(n)).collect())
}

/// Outcome of solving a linear system exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveResult {
    /// The unique solution vector.
    Unique(Vec<Scalar>),
    /// No solution: some equation reduces to 0 = nonzero.
    Inconsistent,
    /// Consistent but with free variables; one particular solution is given
    /// (free variables set to zero).
    Underdetermined(Vec<Scalar>),
}

/// An exact linear system accumulated row by row.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    unknowns: usize,
    rows: Vec<(Vec<Scalar>, Scalar)>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> LinearSystem {
        LinearSystem {
            unknowns,
            rows: Vec::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    /// Adds the equation `sum coeffs[i]·x_i = rhs`.
    pub fn push(&mut self, coeffs: Vec<Scalar>, rhs: Scalar) {
        assert_eq!(coeffs.len(), self.unknowns, "equation width mismatch");
        self.rows.push((coeffs, rhs));
    }

    /// Adds a sparse equation given as `(unknown, coefficient)` pairs.
    pub fn push_sparse(&mut self, terms: impl IntoIterator<Item = (usize, Scalar)>, rhs: Scalar) {
        let mut coeffs = vec![int(0); self.unknowns];
        for (i, c) in terms {
            assert!(i < self.unknowns, "unknown index out of range");
            coeffs[i] += c;
        }
        self.rows.push((coeffs, rhs));
    }

    /// Row-reduces and classifies the system.
    #[allow(clippy::needless_range_loop)] // the eliminations touch two rows at once
    pub fn solve(&self) -> SolveResult {
        let n = self.unknowns;
        let mut a: Vec<Vec<Scalar>> = self
            .rows
            .iter()
            .map(|(row, rhs)| {
                let mut r = row.clone();
                r.push(rhs.clone());
                r
            })
            .collect();
        let m = a.len();
        let mut pivot_cols = Vec::new();
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..m).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, pivot);
            let inv = int(1) / a[rank][col].clone();
            for x in a[rank].iter_mut() {
                *x *= &inv;
            }
            for r in 0..m {
                if r != rank && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for c in col..=n {
                        let delta = &a[rank][c] * &factor;
                        a[r][c] -= delta;
                    }
                }
            }
            pivot_cols.push(col);
            rank += 1;
            if rank == m {
                break;
            }
        }
        for row in &a[rank..] {
            if !row[n].is_zero() {
                return SolveResult::Inconsistent;
            }
        }
        let mut solution = vec![int(0); n];
        for (r, &col) in pivot_cols.iter().enumerate() {
            solution[col] = a[r][n].clone();
        }
        if rank == n {
            SolveResult::Unique(solution)
        } else {
            SolveResult::Underdetermined(solution)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    #[test]
    fn inverts_a_rational_matrix_exactly() {
        // [[1, 1/2], [0, 2]] has inverse [[1, -1/4], [0, 1/2]].
        let data = [[int(1), ratio(1, 2)], [int(0), int(2)]];
        let inv = invert_dense(2, |i, j| data[i][j].clone()).unwrap();
        assert_eq!(inv[0], vec![int(1), ratio(-1, 4)]);
        assert_eq!(inv[1], vec![int(0), ratio(1, 2)]);
    }

    #[test]
    fn detects_rank_deficiency() {
        // Two equal rows.
        let data = [[int(1), int(2)], [int(1), int(2)]];
        assert!(invert_dense(2, |i, j| data[i][j].clone()).is_none());
    }

    #[test]
    fn classifies_systems() {
        let mut s = LinearSystem::new(2);
        s.push(vec![int(1), int(1)], int(3));
        s.push(vec![int(1), int(-1)], int(1));
        assert_eq!(s.solve(), SolveResult::Unique(vec![int(2), int(1)]));

        let mut s = LinearSystem::new(2);
        s.push(vec![int(1), int(1)], int(3));
        s.push(vec![int(2), int(2)], int(7));
        assert_eq!(s.solve(), SolveResult::Inconsistent);

        let mut s = LinearSystem::new(2);
        s.push(vec![int(1), int(1)], int(3));
        assert_eq!(s.solve(), SolveResult::Underdetermined(vec![int(3), int(0)]));
    }
}
