//! The fusion matrix N_V, V = V(2,0): tensor rules on the n(n+1)/2
//! projectives V(n,r), P(1,r), …, P(h,r), h = (n−1)/2, which stay
//! independent under the Cartan map. P(n−ℓ, ℓ+r) has the same image as
//! P(ℓ, r) and is identified with it.

use serde::Serialize;

use super::{cheb_argument, lambda_of, EigIndex};
use crate::chebyshev::{cheb_values, ChebKind};
use crate::cycfield::{CycNum, Ctx, RingMatrix, SparseIntMatrix};
use crate::dnrep::SimpleLabel;
use crate::grring::{cyclic_shift, projective_mckay_from_rules};

/// Basis labels in order: V(n,·) (stored as ℓ = n), then P(1,·), …, P(h,·).
pub fn fusion_basis_labels(n: usize) -> Vec<SimpleLabel> {
    let h = (n - 1) / 2;
    std::iter::once(n)
        .chain(1..=h)
        .flat_map(|ell| (0..n).map(move |r| SimpleLabel { ell, r }))
        .collect()
}

/// Position of a projective label in the fusion basis after the
/// identification P(ℓ, r) ≡ P(n−ℓ, ℓ+r) for ℓ > h.
fn fusion_position(n: usize, l: SimpleLabel) -> usize {
    let h = (n - 1) / 2;
    let (ell, r) = if l.ell == n || l.ell <= h {
        (l.ell, l.r)
    } else {
        // l = P(n−ℓ′, ℓ′+r′) with ℓ′ = n − ℓ.
        let lp = n - l.ell;
        (lp, (l.r + n - lp % n) % n)
    };
    let block = if ell == n { 0 } else { ell };
    block * n + r
}

/// N_V from the projective tensor rules, folded through the identification.
pub fn fusion_matrix_from_rules(n: usize) -> RingMatrix<i64> {
    let q = projective_mckay_from_rules(n);
    let basis = fusion_basis_labels(n);
    let dim = basis.len();
    let mut out = RingMatrix::zeros(dim, dim, &0i64);
    for (row, l) in basis.iter().enumerate() {
        let src = l.index(n);
        for (col, &c) in q.row(src).iter().enumerate() {
            if c != 0 {
                let j = fusion_position(n, SimpleLabel::from_index(n, col));
                let cur = *out.get(row, j);
                out.set(row, j, cur + c);
            }
        }
    }
    out
}

/// N_V written block by block: row V(n) = [0, I, 0, …]; row P(1) =
/// [2Z, 0, I, 0, …]; row P(ℓ), 1 < ℓ < h, has Z at P(ℓ−1) and I at P(ℓ+1);
/// row P(h) has Z at P(h−1) and Z^{h+1} at P(h). For n = 3 the last two
/// rules meet: row P(1) = [2Z, Z²].
pub fn fusion_matrix_block_form(n: usize) -> RingMatrix<i64> {
    let h = (n - 1) / 2;
    let z = cyclic_shift(n);
    let id = RingMatrix::identity(n, &1i64);
    let zero = RingMatrix::zeros(n, n, &0i64);
    let z_top = z.pow((h + 1) as u32).expect("square");
    let blocks: Vec<Vec<RingMatrix<i64>>> = (0..=h)
        .map(|bi| {
            (0..=h)
                .map(|bj| {
                    let mut m = zero.clone();
                    if bi == 0 && bj == 1 {
                        m = id.clone();
                    }
                    if bi == 1 && bj == 0 {
                        m = z.scale_int(2);
                    }
                    if bi >= 2 && bj + 1 == bi {
                        m = z.clone();
                    }
                    if bi >= 1 && bi < h && bj == bi + 1 {
                        m = id.clone();
                    }
                    if bi == h && bj == h {
                        m = m.add(&z_top).expect("same shape");
                    }
                    m
                })
                .collect()
        })
        .collect();
    RingMatrix::from_blocks(&blocks).expect("uniform blocks")
}

fn blocks_times(ctx: &Ctx, r: usize, sign: i64, coeffs: &[CycNum]) -> Vec<CycNum> {
    let n = ctx.n();
    coeffs
        .iter()
        .flat_map(|c| (0..n).map(move |m| c.mul_root_power(sign * 2 * (r * m) as i64)))
        .collect()
}

/// [v, q^rℒ_1 v, …, q^{hr}ℒ_h v] with v = [1, q^{2r}, q^{4r}, …].
pub fn fusion_right_eigvec(ctx: &Ctx, idx: EigIndex) -> Vec<CycNum> {
    let h = (ctx.n() - 1) / 2;
    let l = cheb_values(ChebKind::L, h, &cheb_argument(ctx, idx.j));
    let coeffs: Vec<CycNum> = (0..=h)
        .map(|k| {
            if k == 0 {
                CycNum::one(ctx)
            } else {
                l[k].mul_root_power((k * idx.r) as i64)
            }
        })
        .collect();
    blocks_times(ctx, idx.r, 1, &coeffs)
}

/// [q^{hr}𝒱_h w, …, q^r𝒱_1 w, w] with w = [1, q^{−2r}, q^{−4r}, …].
pub fn fusion_left_eigvec(ctx: &Ctx, idx: EigIndex) -> Vec<CycNum> {
    let h = (ctx.n() - 1) / 2;
    let v = cheb_values(ChebKind::V, h, &cheb_argument(ctx, idx.j));
    let coeffs: Vec<CycNum> = (0..=h)
        .rev()
        .map(|k| v[k].mul_root_power((k * idx.r) as i64))
        .collect();
    blocks_times(ctx, idx.r, -1, &coeffs)
}

#[derive(Debug, Clone, Serialize)]
pub struct FusionCertificate {
    pub index: EigIndex,
    pub lambda: CycNum,
    pub right: Vec<CycNum>,
    pub left: Vec<CycNum>,
    pub right_ok: bool,
    pub left_ok: bool,
}

impl FusionCertificate {
    pub fn new(ctx: &Ctx, nv: &SparseIntMatrix, idx: EigIndex) -> crate::error::Result<Self> {
        let lambda = lambda_of(ctx, idx);
        let right = fusion_right_eigvec(ctx, idx);
        let left = fusion_left_eigvec(ctx, idx);
        let right_ok = nv.apply(&right)?.iter().zip(&right).all(|(a, x)| *a == &lambda * x);
        let left_ok = nv.apply_left(&left)?.iter().zip(&left).all(|(a, x)| *a == &lambda * x);
        Ok(FusionCertificate {
            index: idx,
            lambda,
            right,
            left,
            right_ok,
            left_ok,
        })
    }

    pub fn holds(&self) -> bool {
        self.right_ok && self.left_ok
    }
}
