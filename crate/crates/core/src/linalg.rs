//! Dense exact linear algebra over the rationals.
//!
//! Small matrices only (ambient dimensions are at most 16 in practice), so
//! plain Gauss-Jordan with first-nonzero pivoting is used throughout. The
//! pivot choice is deterministic, which keeps every downstream construction
//! reproducible.

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Rational::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    m
}

pub fn matmul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Matrix {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = zeros(rows, cols);
    for i in 0..rows {
        assert_eq!(a[i].len(), inner, "dimension mismatch in matmul");
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if !bk[j].is_zero() {
                    out[i][j] += &a[i][k] * &bk[j];
                }
            }
        }
    }
    out
}

pub fn transpose(a: &[Vec<Rational>]) -> Matrix {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut out = zeros(cols, rows);
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            out[j][i] = v.clone();
        }
    }
    out
}

/// Row-echelon reduction in place; returns the pivot columns.
fn row_reduce(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v = &*v / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..cols {
                    let t = &m[r][j] * &factor;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(a: &[Vec<Rational>]) -> usize {
    let mut m = a.to_vec();
    row_reduce(&mut m).len()
}

/// Inverse of a square matrix, or None when singular.
pub fn inverse(a: &[Vec<Rational>]) -> Option<Matrix> {
    let n = a.len();
    if n == 0 {
        return Some(Vec::new());
    }
    assert!(a.iter().all(|r| r.len() == n), "inverse of non-square matrix");
    let mut aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(identity(n)[i].iter().cloned());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Basis of the right nullspace { x : A x = 0 }, rows of the result.
///
/// Deterministic: free variables are processed in ascending column order.
pub fn nullspace(a: &[Vec<Rational>]) -> Matrix {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m = a.to_vec();
    let pivots = row_reduce(&mut m);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Stacks two row-matrices with equal column counts.
pub fn stack(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Matrix {
    let mut out = a.to_vec();
    out.extend_from_slice(b);
    out
}

/// Solves x * A = b for a row vector x given square invertible A.
pub fn solve_row(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    let inv = inverse(a).ok_or(Error::RankDeficient)?;
    Ok(matmul(&[b.to_vec()], &inv).remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&v| rat_int(v)).collect())
            .collect()
    }

    #[test]
    fn rank_and_inverse() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(rank(&a), 2);
        let inv = inverse(&a).unwrap();
        assert_eq!(matmul(&a, &inv), identity(2));
        assert_eq!(inv[0][0], rat_int(-2));
        assert_eq!(inv[0][1], rat_int(1));
        assert_eq!(inv[1][0], rat(3, 2));
        assert_eq!(inv[1][1], rat(-1, 2));

        let singular = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&singular), 1);
        assert!(inverse(&singular).is_none());
    }

    #[test]
    fn nullspace_annihilates() {
        let a = m(&[&[1, 0, 2, -1], &[0, 1, 1, 1]]);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                let dot: Rational = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
        assert_eq!(rank(&ns), 2);
    }

    #[test]
    fn solve_row_roundtrip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let b = vec![rat_int(5), rat_int(3)];
        let x = solve_row(&a, &b).unwrap();
        assert_eq!(matmul(&[x], &a).remove(0), b);
    }
}
