//! Characteristic polynomial of M block by block.
//!
//! Conjugating the cyclic shift Z to D = diag(1, q, …, q^{n−1}) splits
//! tI − M into n independent n×n problems, one for each diagonal entry q^k
//! of D. Row reduction of one such block follows the recursion
//! 𝒰_m = t𝒰_{m−1} − q^k𝒰_{m−2} and leaves t𝒰_{n−1} − 2q^k𝒰_{n−2} − 2.

use serde::Serialize;

use super::{lambda_of, EigIndex};
use crate::chebyshev::p_n_bivariate;
use crate::cycfield::{CycNum, Ctx, Ring, RingMatrix, RingPoly};
use crate::error::Result;

fn t_poly(ctx: &Ctx) -> RingPoly<CycNum> {
    RingPoly::monomial(CycNum::one(ctx), 1)
}

/// The k-th diagonal block of the conjugated M: superdiagonal 1,
/// subdiagonal q^k, last row (2, 0, …, 0, 2q^k, 0).
pub fn block_matrix(ctx: &Ctx, k: usize) -> RingMatrix<CycNum> {
    let n = ctx.n();
    let d = CycNum::root_power(ctx, k as i64);
    RingMatrix::from_fn(n, n, |i, j| {
        if i + 1 < n {
            if j == i + 1 {
                CycNum::one(ctx)
            } else if j + 1 == i {
                d.clone()
            } else {
                CycNum::zero(ctx)
            }
        } else if j == 0 {
            CycNum::from_int(ctx, 2)
        } else if j + 2 == n {
            d.scale_int(2)
        } else {
            CycNum::zero(ctx)
        }
    })
}

/// det(tI − block_k) by the elimination recursion.
pub fn block_charpoly(ctx: &Ctx, k: usize) -> RingPoly<CycNum> {
    let n = ctx.n();
    let t = t_poly(ctx);
    let d = CycNum::root_power(ctx, k as i64);
    let mut u = vec![RingPoly::constant(CycNum::one(ctx)), t.clone()];
    for m in 2..n {
        let next = t.mul(&u[m - 1]).sub(&u[m - 2].scale(&d));
        u.push(next);
    }
    t.mul(&u[n - 1])
        .sub(&u[n - 2].scale(&d.scale_int(2)))
        .sub(&RingPoly::constant(CycNum::from_int(ctx, 2)))
}

/// det(tI − block_k) by the division-free Berkowitz algorithm.
pub fn block_charpoly_berkowitz(ctx: &Ctx, k: usize) -> Result<RingPoly<CycNum>> {
    block_matrix(ctx, k).char_poly_small()
}

/// p_n(t, q^k) specialized from the bivariate polynomial.
pub fn p_n_at(ctx: &Ctx, k: usize) -> Result<RingPoly<CycNum>> {
    Ok(p_n_bivariate(ctx.n())?.specialize_d(&CycNum::root_power(ctx, k as i64)))
}

/// Root structure of p_n(t, q^k): with q^k = q^{2r}, the root λ_{0,r} is
/// simple and λ_{j,r}, j ≥ 1, are double.
#[derive(Debug, Clone, Serialize)]
pub struct MultiplicityReport {
    pub k: usize,
    /// gcd(p, p′) = Π_{j≥1}(t − λ_{j,r}).
    pub repeated_part_ok: bool,
    /// p = (t − λ_{0,r})·gcd(p, p′)².
    pub factorization_ok: bool,
    /// λ_{0,r} is not a root of gcd(p, p′).
    pub simple_root_ok: bool,
}

impl MultiplicityReport {
    pub fn holds(&self) -> bool {
        self.repeated_part_ok && self.factorization_ok && self.simple_root_ok
    }
}

pub fn multiplicity_check(ctx: &Ctx, k: usize) -> Result<MultiplicityReport> {
    let n = ctx.n();
    let h = (n - 1) / 2;
    let r = (k * super::half_mod(n)) % n;
    let p = p_n_at(ctx, k)?;
    let g = p.gcd(&p.derivative());
    let linear = |j: usize| RingPoly::linear_root(&lambda_of(ctx, EigIndex { j, r }));
    let repeated = (1..=h).fold(RingPoly::constant(CycNum::one(ctx)), |acc, j| acc.mul(&linear(j)));
    let lambda0 = lambda_of(ctx, EigIndex { j: 0, r });
    Ok(MultiplicityReport {
        k,
        repeated_part_ok: g == repeated,
        factorization_ok: linear(0).mul(&g).mul(&g) == p,
        simple_root_ok: !g.eval(&lambda0).is_zero(),
    })
}
