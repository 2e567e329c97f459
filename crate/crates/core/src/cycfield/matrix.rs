//! Dense row-major matrices over a commutative ring.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::RingPoly;
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct RingMatrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn new(rows: usize, cols: usize, data: Vec<R>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}×{cols} matrix",
                data.len()
            )));
        }
        Ok(RingMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize, zero: &R) -> Self {
        RingMatrix {
            rows,
            cols,
            data: vec![zero.zero_like(); rows * cols],
        }
    }

    pub fn identity(n: usize, one: &R) -> Self {
        let zero = one.zero_like();
        let one = one.one_like();
        Self::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    /// Assemble from a rectangular grid of equally sized blocks.
    pub fn from_blocks(blocks: &[Vec<RingMatrix<R>>]) -> Result<Self> {
        let br = blocks.len();
        let bc = blocks.first().map_or(0, Vec::len);
        let (h, w) = blocks
            .first()
            .and_then(|row| row.first())
            .map(|b| (b.rows, b.cols))
            .ok_or_else(|| Error::ShapeMismatch("empty block grid".into()))?;
        if blocks
            .iter()
            .any(|row| row.len() != bc || row.iter().any(|b| b.rows != h || b.cols != w))
        {
            return Err(Error::ShapeMismatch("blocks of unequal size".into()));
        }
        Ok(Self::from_fn(br * h, bc * w, |i, j| {
            blocks[i / h][j / w].get(i % h, j % w).clone()
        }))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[R] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// The `size`×`size` block in block position (bi, bj).
    pub fn block(&self, bi: usize, bj: usize, size: usize) -> Self {
        Self::from_fn(size, size, |i, j| self.get(bi * size + i, bj * size + j).clone())
    }

    fn check_same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{what} of {}×{} and {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "sum")?;
        Ok(RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "difference")?;
        Ok(RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.minus(b)).collect(),
        })
    }

    /// Product; zero entries of the left factor are skipped, which makes the
    /// sparse McKay matrices cheap to multiply.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "product of {}×{} and {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = match self.data.first().or(other.data.first()) {
            Some(z) => z.zero_like(),
            None => return Ok(RingMatrix { rows: self.rows, cols: other.cols, data: Vec::new() }),
        };
        let mut out = vec![zero; self.rows * other.cols];
        for i in 0..self.rows {
            let out_row = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero_elem() {
                    continue;
                }
                for (o, b) in out_row.iter_mut().zip(other.row(k)) {
                    if !b.is_zero_elem() {
                        *o = o.plus(&a.times(b));
                    }
                }
            }
        }
        Ok(RingMatrix { rows: self.rows, cols: other.cols, data: out })
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::negated)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.map(|x| x.scale_int(k))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RingMatrix<S> {
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("power of a non-square matrix".into()));
        }
        let one = match self.data.first() {
            Some(x) => x.one_like(),
            None => return Ok(self.clone()),
        };
        let mut acc = Self::identity(self.rows, &one);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero_elem)
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}×{} matrix applied to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| dot(self.row(i), v, &v[0]))
            .collect())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "row vector of length {} times a {}×{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![v[0].zero_like(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero_elem() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero_elem() {
                    *o = o.plus(&vi.times(a));
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<R> {
        if !self.is_square() || self.rows == 0 {
            return Err(Error::ShapeMismatch("trace of a non-square or empty matrix".into()));
        }
        Ok((1..self.rows).fold(self.get(0, 0).clone(), |acc, i| acc.plus(self.get(i, i))))
    }

    /// Characteristic polynomial det(tI − A) by the division-free Berkowitz
    /// algorithm, so it works over any commutative ring.
    pub fn char_poly_small(&self) -> Result<RingPoly<R>> {
        const LIMIT: usize = 32;
        if !self.is_square() {
            return Err(Error::ShapeMismatch("characteristic polynomial of a non-square matrix".into()));
        }
        if self.rows == 0 || self.rows > LIMIT {
            return Err(Error::OutOfRange(format!(
                "characteristic polynomial supports dimensions 1..={LIMIT}, got {}",
                self.rows
            )));
        }
        let one = self.data[0].one_like();
        // Coefficients from the leading term down: [1, c_{m−1}, …, c_0].
        let mut vec = vec![one.clone()];
        for k in (0..self.rows).rev() {
            // Principal trailing submatrix starting at k; its top-left entry,
            // top row, left column, and the remaining block.
            let m = self.rows - k;
            let a = self.get(k, k);
            let row: Vec<R> = (k + 1..self.rows).map(|j| self.get(k, j).clone()).collect();
            let mut col: Vec<R> = (k + 1..self.rows).map(|i| self.get(i, k).clone()).collect();
            let mut diags = vec![one.clone(), a.negated()];
            for step in 0..m.saturating_sub(1) {
                if step > 0 {
                    col = (k + 1..self.rows)
                        .map(|i| {
                            let r: Vec<R> =
                                (k + 1..self.rows).map(|j| self.get(i, j).clone()).collect();
                            dot(&r, &col, &one)
                        })
                        .collect();
                }
                diags.push(dot(&row, &col, &one).negated());
            }
            // Lower-triangular Toeplitz (m+1)×m matrix times the previous vector.
            vec = (0..=m)
                .map(|i| {
                    (0..m.min(i + 1)).fold(one.zero_like(), |acc, j| {
                        acc.plus(&diags[i - j].times(&vec[j]))
                    })
                })
                .collect();
        }
        vec.reverse();
        Ok(RingPoly::new(vec))
    }
}

fn dot<R: Ring>(a: &[R], b: &[R], proto: &R) -> R {
    a.iter().zip(b).fold(proto.zero_like(), |acc, (x, y)| {
        if x.is_zero_elem() || y.is_zero_elem() {
            acc
        } else {
            acc.plus(&x.times(y))
        }
    })
}

impl<R: Field> RingMatrix<R> {
    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero_elem()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].inverse().expect("nonzero pivot is invertible");
            for x in m[r].iter_mut().skip(c) {
                *x = x.times(&inv);
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c].is_zero_elem() {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !p.is_zero_elem() {
                        *x = x.minus(&f.times(p));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let out = RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: m.into_iter().flatten().collect(),
        };
        (out, pivots)
    }

    /// Exact rank by forward elimination (no back-substitution needed).
    pub fn rank_over_field(&self) -> usize {
        let mut m = self.to_rows();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&i| !m[i][c].is_zero_elem()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = m[rank][c].inverse().expect("nonzero pivot is invertible");
            let pivot_row = m[rank].clone();
            for row in m.iter_mut().skip(rank + 1) {
                if row[c].is_zero_elem() {
                    continue;
                }
                let f = row[c].times(&inv);
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !p.is_zero_elem() {
                        *x = x.minus(&f.times(p));
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// A basis of {k : A·k = 0}, one vector per free column of the RREF.
    pub fn kernel_basis_over_field(&self) -> Vec<Vec<R>> {
        let Some(proto) = self.data.first() else {
            return Vec::new();
        };
        let zero = proto.zero_like();
        let one = proto.one_like();
        let (rref, pivots) = self.rref();
        let free = (0..self.cols).filter(|c| !pivots.contains(c));
        free.map(|f| {
            let mut v = vec![zero.clone(); self.cols];
            v[f] = one.clone();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = rref.get(i, f).negated();
            }
            v
        })
        .collect()
    }
}

impl RingMatrix<BigInt> {
    /// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
    pub fn rank_integer(&self) -> usize {
        let mut m = self.to_rows();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let pivot_row = m[rank].clone();
            let pivot = pivot_row[c].clone();
            for row in m.iter_mut().skip(rank + 1) {
                let f = row[c].clone();
                for (x, pr) in row.iter_mut().zip(&pivot_row).skip(c + 1) {
                    let num = &pivot * &*x - &f * pr;
                    let (quo, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss step must divide exactly");
                    *x = quo;
                }
                row[c] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }
}

impl RingMatrix<i64> {
    pub fn to_bigint(&self) -> RingMatrix<BigInt> {
        self.map(|&x| BigInt::from(x))
    }

    /// Exact rank of an integer matrix.
    pub fn rank_integer(&self) -> usize {
        self.to_bigint().rank_integer()
    }

    /// Apply this integer matrix to a column vector over any ring.
    pub fn apply<S: Ring>(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}×{} integer matrix applied to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, x)| **a != 0 && !x.is_zero_elem())
                    .fold(v[0].zero_like(), |acc, (&a, x)| {
                        acc.plus(&if a == 1 { x.clone() } else { x.scale_int(a) })
                    })
            })
            .collect())
    }

    /// Multiply a row vector over any ring by this integer matrix.
    pub fn apply_left<S: Ring>(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "row vector of length {} times a {}×{} integer matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![v[0].zero_like(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero_elem() {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                if a != 0 {
                    *o = o.plus(&if a == 1 { vi.clone() } else { vi.scale_int(a) });
                }
            }
        }
        Ok(out)
    }
}

impl<R: Ring> fmt::Debug for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RingMatrix {}×{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycfield::{make_context, CycNum};
    use num_rational::BigRational;

    fn zm(rows: &[&[i64]]) -> RingMatrix<i64> {
        RingMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn qm(rows: &[&[i64]]) -> RingMatrix<BigRational> {
        zm(rows).map(|&x| BigRational::from_integer(BigInt::from(x)))
    }

    #[test]
    fn shapes_are_checked() {
        let a = zm(&[&[1, 2, 3]]);
        assert!(a.mul(&a).is_err());
        assert!(a.add(&a.transpose()).is_err());
        assert!(RingMatrix::new(2, 2, vec![1i64, 2, 3]).is_err());
        assert!(RingMatrix::from_rows(vec![vec![1i64], vec![1, 2]]).is_err());
    }

    #[test]
    fn products_and_powers() {
        let z = zm(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(z.pow(3).unwrap(), RingMatrix::identity(3, &1));
        assert_eq!(z.mul(&z).unwrap(), z.transpose());
        assert!(z.commutator(&z.pow(2).unwrap()).unwrap().is_zero());
        assert_eq!(z.mul_vec(&[1, 2, 3]).unwrap(), vec![2, 3, 1]);
        assert_eq!(z.vec_mul(&[1, 2, 3]).unwrap(), vec![3, 1, 2]);
        assert_eq!(z.apply(&[1i64, 2, 3]).unwrap(), z.mul_vec(&[1, 2, 3]).unwrap());
        assert_eq!(z.apply_left(&[1i64, 2, 3]).unwrap(), z.vec_mul(&[1, 2, 3]).unwrap());
    }

    #[test]
    fn blocks_round_trip() {
        let i = RingMatrix::identity(2, &1i64);
        let o = RingMatrix::zeros(2, 2, &0i64);
        let m = RingMatrix::from_blocks(&[vec![o.clone(), i.clone()], vec![i.scale_int(2), o.clone()]]).unwrap();
        assert_eq!(m.block(0, 1, 2), i);
        assert_eq!(m.block(1, 0, 2), i.scale_int(2));
        assert_eq!(m.block(1, 1, 2), o);
    }

    #[test]
    fn rank_and_kernel_over_q() {
        let ones = qm(&[&[1, 1], &[1, 1]]);
        assert_eq!(ones.rank_over_field(), 1);
        let ker = ones.kernel_basis_over_field();
        assert_eq!(ker.len(), 1);
        assert!(ones.mul_vec(&ker[0]).unwrap().iter().all(Zero::is_zero));
        assert!(qm(&[&[1, 0], &[0, 1]]).kernel_basis_over_field().is_empty());
        let m = qm(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        assert_eq!(m.rank_over_field(), 2);
        let ker = m.kernel_basis_over_field();
        assert_eq!(ker.len(), 2);
        for k in &ker {
            assert!(m.mul_vec(k).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn bareiss_rank() {
        assert_eq!(zm(&[&[1, 1], &[1, 1]]).rank_integer(), 1);
        assert_eq!(zm(&[&[2, 0, 2], &[0, 3, 0], &[2, 3, 2]]).rank_integer(), 2);
        assert_eq!(zm(&[&[0, 0], &[0, 0]]).rank_integer(), 0);
        assert_eq!(zm(&[&[0, 2, 4], &[0, 1, 7], &[3, 5, 1]]).rank_integer(), 3);
    }

    #[test]
    fn char_poly_of_cyclic_shift() {
        let z = zm(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(z.char_poly_small().unwrap(), RingPoly::new(vec![-1, 0, 0, 1]));
        let a = zm(&[&[2, 1], &[1, 3]]);
        assert_eq!(a.char_poly_small().unwrap(), RingPoly::new(vec![5, -5, 1]));
        assert_eq!(zm(&[&[7]]).char_poly_small().unwrap(), RingPoly::new(vec![-7, 1]));
    }

    #[test]
    fn char_poly_over_cyclotomics_vanishes_on_matrix() {
        let ctx = make_context(5).unwrap();
        let q = |e| CycNum::root_power(&ctx, e);
        let a = RingMatrix::from_rows(vec![
            vec![q(1), q(0), CycNum::zero(&ctx)],
            vec![q(2), q(3).scale_int(2), q(4)],
            vec![CycNum::from_int(&ctx, 3), q(1), q(2)],
        ])
        .unwrap();
        let p = a.char_poly_small().unwrap();
        // Cayley–Hamilton.
        let mut acc = RingMatrix::zeros(3, 3, &CycNum::zero(&ctx));
        for (k, c) in p.coeffs().iter().enumerate() {
            acc = acc.add(&a.pow(k as u32).unwrap().scale(c)).unwrap();
        }
        assert!(acc.is_zero());
    }
}
