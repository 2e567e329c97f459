//! Double-precision shadows of exact objects, used by the numeric oracle.

use num_complex::Complex64;

use super::cyclotomic::CycNum;
use super::matrix::RingMatrix;

pub fn embed_vec(v: &[CycNum]) -> Vec<Complex64> {
    v.iter().map(CycNum::embed).collect()
}

pub fn embed_matrix(m: &RingMatrix<CycNum>) -> Vec<Vec<Complex64>> {
    (0..m.rows()).map(|i| embed_vec(m.row(i))).collect()
}

pub fn int_matrix_to_complex(m: &RingMatrix<i64>) -> Vec<Vec<Complex64>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|&x| Complex64::new(x as f64, 0.0)).collect())
        .collect()
}

pub fn complex_mat_vec(m: &[Vec<Complex64>], v: &[Complex64]) -> Vec<Complex64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn complex_vec_mat(v: &[Complex64], m: &[Vec<Complex64>]) -> Vec<Complex64> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| v.iter().zip(m).map(|(a, row)| a * row[j]).sum())
        .collect()
}

/// Largest modulus of any entry.
pub fn max_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Numeric rank by Gaussian elimination with partial pivoting; a pivot
/// smaller than `tol` times the largest entry counts as zero.
pub fn numeric_rank(rows: &[Vec<Complex64>], tol: f64) -> usize {
    let mut m: Vec<Vec<Complex64>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let scale = m
        .iter()
        .flat_map(|r| r.iter().map(|z| z.norm()))
        .fold(0.0, f64::max)
        .max(1.0);
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let (p, best) = (rank..nrows)
            .map(|i| (i, m[i][c].norm()))
            .fold((rank, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best <= tol * scale {
            continue;
        }
        m.swap(rank, p);
        let pivot = m[rank][c];
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[c] / pivot;
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x -= f * y;
            }
        }
        rank += 1;
    }
    rank
}
