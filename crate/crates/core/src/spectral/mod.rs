//! Exact spectral theory of the McKay matrix M = M_{V(2,0)}, its projective
//! and fusion analogues, and the idempotent decomposition of the complexified
//! Grothendieck ring.
//!
//! Eigenvalues are λ_{j,r} = q^r(q^j + q^{−j}) for 0 ≤ j ≤ (n−1)/2, r ∈ Z_n;
//! every eigenvector family is written in closed form with Chebyshev
//! polynomials evaluated at q^j + q^{−j} and then checked exactly.

mod charpoly;
mod fusion;
mod gentrace;
mod idempotents;
pub mod oracle;

use serde::Serialize;

use crate::chebyshev::{cheb_values, ChebKind};
use crate::cycfield::{CycNum, Ctx, Ring, RingMatrix, SparseIntMatrix};
use crate::error::{Error, Result};

pub use charpoly::{block_charpoly, block_charpoly_berkowitz, block_matrix, multiplicity_check, MultiplicityReport};
pub use fusion::{
    fusion_basis_labels, fusion_left_eigvec, fusion_matrix_block_form, fusion_matrix_from_rules,
    fusion_right_eigvec, FusionCertificate,
};
pub use gentrace::{bcda_identity, gen_trace_combination, GenTraceCombination};
pub use idempotents::{
    eigenidem_check, groth_structure_check, slice_modulus, slice_mul, slice_to_simple, simple_to_slices,
    EigenIdemReport, GrothStructureReport, IdemEntry, IdempotentFamily,
};

/// Index (j, r) of the eigenvalue λ_{j,r}, with 0 ≤ j ≤ (n−1)/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EigIndex {
    pub j: usize,
    pub r: usize,
}

impl EigIndex {
    /// Normalize (j, r): λ_{−j,r} = λ_{j,r}, so j is folded into 0..=(n−1)/2.
    pub fn new(n: usize, j: i64, r: i64) -> Self {
        let nn = n as i64;
        let j = j.rem_euclid(nn) as usize;
        EigIndex {
            j: j.min(n - j),
            r: r.rem_euclid(nn) as usize,
        }
    }

    /// All n(n+1)/2 indices, j major.
    pub fn all(n: usize) -> Vec<EigIndex> {
        let h = (n - 1) / 2;
        (0..=h)
            .flat_map(|j| (0..n).map(move |r| EigIndex { j, r }))
            .collect()
    }

    /// The grouplike pair (i, k) = (j + r, j − r) whose simple trace vector is
    /// the right eigenvector for this index.
    pub fn to_grouplike(&self, n: usize) -> (usize, usize) {
        ((self.j + self.r) % n, (self.j + n - self.r) % n)
    }
}

impl std::fmt::Display for EigIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.j, self.r)
    }
}

/// The inverse of 2 modulo the odd number n.
pub fn half_mod(n: usize) -> usize {
    (n + 1) / 2
}

/// j = (i+k)/2, r = (i−k)/2 mod n, with j folded into 0..=(n−1)/2.
pub fn index_from_grouplike(n: usize, i: i64, k: i64) -> EigIndex {
    let h = half_mod(n) as i64;
    EigIndex::new(n, (i + k) * h, (i - k) * h)
}

/// q^j + q^{−j}, the argument of every Chebyshev factor.
pub fn cheb_argument(ctx: &Ctx, j: usize) -> CycNum {
    CycNum::root_power(ctx, j as i64) + CycNum::root_power(ctx, -(j as i64))
}

/// λ_{j,r} = q^r(q^j + q^{−j}).
pub fn lambda_of(ctx: &Ctx, idx: EigIndex) -> CycNum {
    cheb_argument(ctx, idx.j).mul_root_power(idx.r as i64)
}

/// Eigenvalue of M_{V(ℓ,s)} on the right eigenvector v_{j,r}:
/// q^{(ℓ−1+2s)r}𝒰_{ℓ−1}(q^j + q^{−j}).
pub fn general_eigvalue(ctx: &Ctx, idx: EigIndex, ell: usize, s: usize) -> CycNum {
    let u = cheb_values(ChebKind::U, ell - 1, &cheb_argument(ctx, idx.j));
    u[ell - 1].mul_root_power((ell as i64 - 1 + 2 * s as i64) * idx.r as i64)
}

/// Eigenvalue of the projective McKay matrix Q_{V(ℓ,s)} on the left
/// eigenvector v_{j,r}ᵀ: q^{(1−ℓ−2s)r}𝒰_{ℓ−1}(q^j + q^{−j}).
pub fn projective_eigvalue(ctx: &Ctx, idx: EigIndex, ell: usize, s: usize) -> CycNum {
    let u = cheb_values(ChebKind::U, ell - 1, &cheb_argument(ctx, idx.j));
    u[ell - 1].mul_root_power((1 - ell as i64 - 2 * s as i64) * idx.r as i64)
}

/// Block vector whose k-th block is coeff[k]·z, where z_m = q^{sign·2rm}.
fn block_vector(ctx: &Ctx, r: usize, sign: i64, coeffs: &[CycNum]) -> Vec<CycNum> {
    let n = ctx.n();
    let mut out = Vec::with_capacity(n * n);
    for c in coeffs {
        for m in 0..n {
            out.push(c.mul_root_power(sign * 2 * (r * m) as i64));
        }
    }
    out
}

fn u_values(ctx: &Ctx, j: usize) -> Vec<CycNum> {
    cheb_values(ChebKind::U, ctx.n(), &cheb_argument(ctx, j))
}

/// Block coefficients q^{kr}𝒰_k of v_{j,r}, k = 0..n−1.
fn right_coeffs(ctx: &Ctx, idx: EigIndex) -> Vec<CycNum> {
    let u = u_values(ctx, idx.j);
    (0..ctx.n())
        .map(|k| u[k].mul_root_power((k * idx.r) as i64))
        .collect()
}

/// v_{j,r}: block k is q^{kr}𝒰_k(q^j+q^{−j})·v_0 with v_0 = [1, q^{2r}, …].
pub fn right_eigvec(ctx: &Ctx, idx: EigIndex) -> Vec<CycNum> {
    block_vector(ctx, idx.r, 1, &right_coeffs(ctx, idx))
}

/// x_{j,r} for j ≠ 0: block k is
/// q^{kr}𝒰_k v_0 + q^{(k−1)r} Σ_{s=0}^{⌊(k−1)/2⌋} (k−2s)𝒰_{k−1−2s} v_0,
/// so that (M − λ)x = v_{j,r}.
pub fn gen_right_eigvec(ctx: &Ctx, idx: EigIndex) -> Result<Vec<CycNum>> {
    if idx.j == 0 {
        return Err(Error::InvalidArgument(
            "λ_{0,r} is a simple eigenvalue; no generalized eigenvector".into(),
        ));
    }
    let n = ctx.n();
    let u = u_values(ctx, idx.j);
    let r = idx.r as i64;
    let coeffs: Vec<CycNum> = (0..n)
        .map(|k| {
            let mut c = u[k].mul_root_power(k as i64 * r);
            if k >= 1 {
                let tail = (0..=(k - 1) / 2).fold(CycNum::zero(ctx), |acc, s| {
                    acc + u[k - 1 - 2 * s].scale_int((k - 2 * s) as i64)
                });
                c = c + tail.mul_root_power((k as i64 - 1) * r);
            }
            c
        })
        .collect();
    Ok(block_vector(ctx, idx.r, 1, &coeffs))
}

/// Block coefficients of w_{j,r} listed by k (before reversal):
/// w_0 itself, then q^{kr}ℒ_k(q^j+q^{−j}) for k ≥ 1.
fn left_coeffs(ctx: &Ctx, idx: EigIndex) -> Vec<CycNum> {
    let l = cheb_values(ChebKind::L, ctx.n(), &cheb_argument(ctx, idx.j));
    (0..ctx.n())
        .map(|k| {
            if k == 0 {
                CycNum::one(ctx)
            } else {
                l[k].mul_root_power((k * idx.r) as i64)
            }
        })
        .collect()
}

/// w_{j,r} as a row vector with blocks [w_{n−1}, …, w_1, w_0], where
/// w_0 = [1, q^{−2r}, q^{−4r}, …] is the left q^{2r}-eigenvector of Z and
/// w_k = q^{kr}ℒ_k(q^j+q^{−j})w_0.
pub fn left_eigvec(ctx: &Ctx, idx: EigIndex) -> Vec<CycNum> {
    let mut c = left_coeffs(ctx, idx);
    c.reverse();
    block_vector(ctx, idx.r, -1, &c)
}

/// y_{j,r} for j ≠ 0, blocks [y_{n−1}, …, y_0] with y_0 = w_0,
/// y_1 = q^r𝒰_1 w_0 + w_0 and
/// y_k = q^{kr}(𝒰_k − 𝒰_{k−2})w_0 + k q^{(k−1)r}𝒰_{k−1}w_0,
/// so that yM = λy + w_{j,r}.
pub fn gen_left_eigvec(ctx: &Ctx, idx: EigIndex) -> Result<Vec<CycNum>> {
    if idx.j == 0 {
        return Err(Error::InvalidArgument(
            "λ_{0,r} is a simple eigenvalue; no generalized eigenvector".into(),
        ));
    }
    let n = ctx.n();
    let u = u_values(ctx, idx.j);
    let r = idx.r as i64;
    let mut coeffs: Vec<CycNum> = (0..n)
        .map(|k| match k {
            0 => CycNum::one(ctx),
            1 => u[1].mul_root_power(r) + CycNum::one(ctx),
            _ => (&u[k] - &u[k - 2]).mul_root_power(k as i64 * r)
                + u[k - 1].scale_int(k as i64).mul_root_power((k as i64 - 1) * r),
        })
        .collect();
    coeffs.reverse();
    Ok(block_vector(ctx, idx.r, -1, &coeffs))
}

fn axpy_eq(lhs: &[CycNum], lambda: &CycNum, x: &[CycNum], extra: Option<&[CycNum]>) -> bool {
    lhs.iter().enumerate().all(|(i, a)| {
        let mut want = lambda * &x[i];
        if let Some(e) = extra {
            want = want + &e[i];
        }
        *a == want
    })
}

/// Exact eigenvector data for one index together with the outcome of each
/// defining relation.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralCertificate {
    pub index: EigIndex,
    pub lambda: CycNum,
    pub right: Vec<CycNum>,
    pub left: Vec<CycNum>,
    pub gen_right: Option<Vec<CycNum>>,
    pub gen_left: Option<Vec<CycNum>>,
    /// M·right = λ·right.
    pub right_ok: bool,
    /// left·M = λ·left.
    pub left_ok: bool,
    /// M·gen_right = λ·gen_right + right.
    pub gen_right_ok: Option<bool>,
    /// gen_left·M = λ·gen_left + left.
    pub gen_left_ok: Option<bool>,
}

impl SpectralCertificate {
    pub fn holds(&self) -> bool {
        self.right_ok && self.left_ok && self.gen_right_ok != Some(false) && self.gen_left_ok != Some(false)
    }
}

/// Build and check every eigenvector family for one index against M.
pub fn certificate(ctx: &Ctx, m: &SparseIntMatrix, idx: EigIndex) -> Result<SpectralCertificate> {
    let lambda = lambda_of(ctx, idx);
    let right = right_eigvec(ctx, idx);
    let left = left_eigvec(ctx, idx);
    let right_ok = axpy_eq(&m.apply(&right)?, &lambda, &right, None);
    let left_ok = axpy_eq(&m.apply_left(&left)?, &lambda, &left, None);
    let (gen_right, gen_left, gen_right_ok, gen_left_ok) = if idx.j == 0 {
        (None, None, None, None)
    } else {
        let x = gen_right_eigvec(ctx, idx)?;
        let y = gen_left_eigvec(ctx, idx)?;
        let xo = axpy_eq(&m.apply(&x)?, &lambda, &x, Some(&right));
        let yo = axpy_eq(&m.apply_left(&y)?, &lambda, &y, Some(&left));
        (Some(x), Some(y), Some(xo), Some(yo))
    };
    Ok(SpectralCertificate {
        index: idx,
        lambda,
        right,
        left,
        gen_right,
        gen_left,
        right_ok,
        left_ok,
        gen_right_ok,
        gen_left_ok,
    })
}

/// All n(n+1)/2 certificates for M = M_{V(2,0)}.
pub fn all_certificates(ctx: &Ctx, m: &SparseIntMatrix) -> Result<Vec<SpectralCertificate>> {
    EigIndex::all(ctx.n())
        .into_iter()
        .map(|idx| certificate(ctx, m, idx))
        .collect()
}

/// Rank of a family of vectors all lying in the q^{2r}-eigenspace of the
/// block shift diag(Z, …, Z) (acting on the right when `sign` is 1, on the
/// left when it is −1). Such a vector is determined by the first entry of
/// each block, so its rank is that of an n×n matrix. Returns None when some
/// vector is not of that shape.
fn block_family_rank(ctx: &Ctx, r: usize, sign: i64, vectors: &[&[CycNum]]) -> Option<usize> {
    let n = ctx.n();
    let mut rows = Vec::with_capacity(vectors.len());
    for v in vectors {
        let coeffs: Vec<CycNum> = (0..n).map(|k| v[k * n].clone()).collect();
        if block_vector(ctx, r, sign, &coeffs) != *v {
            return None;
        }
        rows.push(coeffs);
    }
    Some(RingMatrix::from_rows(rows).ok()?.rank_over_field())
}

/// Completeness of the certificate families: for each r, the n right
/// vectors {v_{j,r}} ∪ {x_{j,r}} span the q^{2r}-eigenspace of the block
/// shift, and likewise on the left. Together they give rank n² on each side.
#[derive(Debug, Clone, Serialize)]
pub struct CompletenessReport {
    pub right_rank: usize,
    pub left_rank: usize,
    pub target: usize,
}

impl CompletenessReport {
    pub fn holds(&self) -> bool {
        self.right_rank == self.target && self.left_rank == self.target
    }
}

pub fn completeness(ctx: &Ctx, certs: &[SpectralCertificate]) -> CompletenessReport {
    let n = ctx.n();
    let mut right_rank = 0;
    let mut left_rank = 0;
    for r in 0..n {
        let group: Vec<&SpectralCertificate> = certs.iter().filter(|c| c.index.r == r).collect();
        let rights: Vec<&[CycNum]> = group
            .iter()
            .flat_map(|c| std::iter::once(c.right.as_slice()).chain(c.gen_right.as_deref()))
            .collect();
        let lefts: Vec<&[CycNum]> = group
            .iter()
            .flat_map(|c| std::iter::once(c.left.as_slice()).chain(c.gen_left.as_deref()))
            .collect();
        right_rank += block_family_rank(ctx, r, 1, &rights).unwrap_or(0);
        left_rank += block_family_rank(ctx, r, -1, &lefts).unwrap_or(0);
    }
    CompletenessReport {
        right_rank,
        left_rank,
        target: n * n,
    }
}

fn dot(a: &[CycNum], b: &[CycNum]) -> CycNum {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(CycNum::zero(a[0].context()), |acc, (x, y)| acc + x * y)
}

/// Left·right pairing between the certificate families. Vectors from
/// different r pair to zero automatically (they are eigenvectors of the
/// block shift for different eigenvalues), so the pairing matrix is block
/// diagonal in r; each n×n block must be invertible. Pairings between
/// different eigenvalues are also required to vanish exactly.
#[derive(Debug, Clone, Serialize)]
pub struct PairingReport {
    pub blocks_invertible: bool,
    pub cross_terms_vanish: bool,
}

impl PairingReport {
    pub fn holds(&self) -> bool {
        self.blocks_invertible && self.cross_terms_vanish
    }
}

pub fn biorthogonality(ctx: &Ctx, certs: &[SpectralCertificate]) -> PairingReport {
    let n = ctx.n();
    let mut blocks_invertible = true;
    let mut cross_terms_vanish = true;
    for r in 0..n {
        let group: Vec<&SpectralCertificate> = certs.iter().filter(|c| c.index.r == r).collect();
        let tagged = |left: bool| -> Vec<(usize, &[CycNum])> {
            group
                .iter()
                .flat_map(|c| {
                    let (a, b) = if left {
                        (c.left.as_slice(), c.gen_left.as_deref())
                    } else {
                        (c.right.as_slice(), c.gen_right.as_deref())
                    };
                    std::iter::once((c.index.j, a)).chain(b.map(|x| (c.index.j, x)))
                })
                .collect()
        };
        let lefts = tagged(true);
        let rights = tagged(false);
        let rows: Vec<Vec<CycNum>> = lefts
            .iter()
            .map(|(jl, l)| {
                rights
                    .iter()
                    .map(|(jr, rv)| {
                        let p = dot(l, rv);
                        if jl != jr && !p.is_zero() {
                            cross_terms_vanish = false;
                        }
                        p
                    })
                    .collect()
            })
            .collect();
        let pairing = RingMatrix::from_rows(rows).expect("square pairing block");
        if pairing.rank_over_field() != lefts.len() {
            blocks_invertible = false;
        }
    }
    PairingReport {
        blocks_invertible,
        cross_terms_vanish,
    }
}

#[cfg(test)]
mod tests;
