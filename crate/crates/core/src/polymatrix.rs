//! Matrices of multivariate polynomials: exact determinants and minors.
//!
//! Determinants use fraction-free Bareiss elimination; every division is
//! exact in the polynomial ring by the Sylvester identity, so no rational
//! functions ever appear.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;
use crate::rational::Rational;

#[derive(Debug, Clone)]
pub struct PolyMatrix {
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn from_rows(nvars: usize, rows: Vec<Vec<MultiPoly>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            for e in row {
                assert_eq!(e.nvars(), nvars, "variable count mismatch");
                entries.push(e);
            }
        }
        PolyMatrix {
            nvars,
            rows: nrows,
            cols: ncols,
            entries,
        }
    }

    /// Constant matrix embedded into an nvars-variable polynomial ring.
    pub fn from_rational_rows(nvars: usize, rows: &[Vec<Rational>]) -> Self {
        PolyMatrix::from_rows(
            nvars,
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|c| MultiPoly::constant(nvars, c.clone()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    /// Stacks `self` on top of `other`.
    pub fn stack(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch in stack");
        assert_eq!(self.nvars, other.nvars);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        PolyMatrix {
            nvars: self.nvars,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> PolyMatrix {
        let entries = row_idx
            .iter()
            .flat_map(|&i| col_idx.iter().map(move |&j| self.at(i, j).clone()))
            .collect();
        PolyMatrix {
            nvars: self.nvars,
            rows: row_idx.len(),
            cols: col_idx.len(),
            entries,
        }
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(MultiPoly::one(self.nvars));
        }
        let mut m: Vec<Vec<MultiPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut sign = false;
        let mut prev = MultiPoly::one(self.nvars);
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(MultiPoly::zero(self.nvars));
            };
            if p != k {
                m.swap(p, k);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .exact_div(&prev)
                        .expect("Bareiss division must be exact");
                }
                m[i][k] = MultiPoly::zero(self.nvars);
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if sign { -&det } else { det })
    }

    /// All size x size subdeterminants, row subsets outer and column subsets
    /// inner, both in lexicographic order. Duplicates are not removed.
    pub fn minors(&self, size: usize) -> Result<Vec<MultiPoly>> {
        if size == 0 || size > self.rows.min(self.cols) {
            return Err(Error::MinorSizeOutOfRange {
                size,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = Vec::new();
        for row_idx in (0..self.rows).combinations(size) {
            for col_idx in (0..self.cols).combinations(size) {
                out.push(self.submatrix(&row_idx, &col_idx).determinant()?);
            }
        }
        Ok(out)
    }
}

/// Determinant of a matrix of univariate polynomials.
pub fn unipoly_determinant(entries: Vec<Vec<crate::unipoly::UniPoly>>) -> crate::unipoly::UniPoly {
    let rows: Vec<Vec<MultiPoly>> = entries
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|f| MultiPoly::from_unipoly(1, 0, &f))
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(1, rows)
        .determinant()
        .expect("square by construction")
        .to_unipoly(0)
        .expect("univariate by construction")
}
