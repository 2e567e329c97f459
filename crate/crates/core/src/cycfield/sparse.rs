//! Row-compressed integer matrices. McKay, Cartan and fusion matrices are
//! mostly zero, so applying them through their nonzero pattern keeps exact
//! eigenvector checks cheap at the larger orders.

use num_complex::Complex64;

use super::matrix::RingMatrix;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, i64)>>,
}

impl SparseIntMatrix {
    pub fn from_dense(m: &RingMatrix<i64>) -> Self {
        let entries = (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a != 0)
                    .map(|(j, &a)| (j, a))
                    .collect()
            })
            .collect();
        SparseIntMatrix {
            rows: m.rows(),
            cols: m.cols(),
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    /// Nonzero entries of row i as (column, value).
    pub fn row(&self, i: usize) -> &[(usize, i64)] {
        &self.entries[i]
    }

    pub fn transpose(&self) -> Self {
        let mut entries = vec![Vec::new(); self.cols];
        for (i, row) in self.entries.iter().enumerate() {
            for &(j, a) in row {
                entries[j].push((i, a));
            }
        }
        SparseIntMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Column j as a dense vector.
    pub fn column(&self, j: usize) -> Vec<i64> {
        self.entries
            .iter()
            .map(|row| row.iter().find(|(c, _)| *c == j).map_or(0, |&(_, a)| a))
            .collect()
    }

    /// A·v.
    pub fn apply<S: Ring>(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(shape(self.rows, self.cols, v.len()));
        }
        let zero = v[0].zero_like();
        Ok(self
            .entries
            .iter()
            .map(|row| {
                row.iter().fold(zero.clone(), |acc, &(j, a)| {
                    if v[j].is_zero_elem() {
                        acc
                    } else {
                        acc.plus(&scaled(&v[j], a))
                    }
                })
            })
            .collect())
    }

    /// v·A.
    pub fn apply_left<S: Ring>(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.rows {
            return Err(shape(self.rows, self.cols, v.len()));
        }
        let mut out = vec![v[0].zero_like(); self.cols];
        for (vi, row) in v.iter().zip(&self.entries) {
            if vi.is_zero_elem() {
                continue;
            }
            for &(j, a) in row {
                out[j] = out[j].plus(&scaled(vi, a));
            }
        }
        Ok(out)
    }

    /// A·v in double precision.
    pub fn apply_complex(&self, v: &[Complex64]) -> Vec<Complex64> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&(j, a)| v[j] * a as f64).sum())
            .collect()
    }

    /// v·A in double precision.
    pub fn apply_left_complex(&self, v: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.cols];
        for (vi, row) in v.iter().zip(&self.entries) {
            for &(j, a) in row {
                out[j] += vi * a as f64;
            }
        }
        out
    }
}

fn scaled<S: Ring>(x: &S, a: i64) -> S {
    if a == 1 {
        x.clone()
    } else {
        x.scale_int(a)
    }
}

fn shape(rows: usize, cols: usize, len: usize) -> Error {
    Error::ShapeMismatch(format!("{rows}×{cols} sparse matrix against a vector of length {len}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_products_match_dense() {
        let m = RingMatrix::from_rows(vec![vec![0, 2, 0], vec![1, 0, -3], vec![0, 0, 5]]).unwrap();
        let s = SparseIntMatrix::from_dense(&m);
        assert_eq!(s.nnz(), 4);
        let v = vec![1i64, -2, 7];
        assert_eq!(s.apply(&v).unwrap(), m.apply(&v).unwrap());
        assert_eq!(s.apply_left(&v).unwrap(), m.apply_left(&v).unwrap());
        assert_eq!(s.column(2), vec![0, -3, 5]);
        let vc: Vec<Complex64> = v.iter().map(|&x| Complex64::new(x as f64, 0.0)).collect();
        let got = s.apply_complex(&vc);
        assert_eq!(got[1].re, -20.0);
        assert_eq!(s.apply_left_complex(&vc)[2].re, 41.0);
        assert!(s.apply(&[1i64]).is_err());
    }
}
