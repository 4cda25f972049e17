//! Dense Gaussian elimination over the rationals.

#![allow(clippy::needless_range_loop)]

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Reduces `rows` to row echelon form in place and returns the pivot columns.
fn echelon(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][col];
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n_rows {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for j in col..n_cols {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut work = rows.to_vec();
    echelon(&mut work).len()
}

/// Solves the square system `a x = b`; `None` when `a` is singular.
pub fn solve_square(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut aug);
    if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(aug.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

/// Determinant of a square rational matrix.
pub fn determinant(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        for i in col + 1..n {
            if !m[i][col].is_zero() {
                let factor = &m[i][col] / &m[col][col];
                for j in col..n {
                    let delta = &factor * &m[col][j];
                    m[i][j] -= delta;
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&mat(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]])), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn solves_facet_system() {
        let x = solve_square(&mat(&[&[2, 0], &[0, 3]]), &[int(1), int(1)]).unwrap();
        assert_eq!(x, vec![rat(1, 2), rat(1, 3)]);
        assert!(solve_square(&mat(&[&[1, 1], &[2, 2]]), &[int(1), int(1)]).is_none());
    }

    #[test]
    fn determinant_with_swap() {
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(determinant(&mat(&[&[2, 4], &[6, 8]])), int(-8));
    }
}
