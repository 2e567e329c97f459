//! Generalized eigenvectors of M assembled from simple trace vectors of the
//! non-grouplike elements b^i c^k d^ℓ a^ℓ.

use serde::Serialize;

use crate::cycfield::{CycNum, SparseIntMatrix};
use crate::dnrep::{quantum_integer, CharacterTable, Monomial};
use crate::error::{Error, Result};

/// T_ℓ = Tr_S(b^i c^k d^ℓ a^ℓ).
fn trace_vec(table: &CharacterTable, i: usize, k: usize, ell: usize) -> Result<Vec<CycNum>> {
    let n = table.ctx().n();
    Ok(table.trace_vector_s(Monomial::new(n, i as i64, k as i64, ell)?))
}

/// Check M·T_ℓ = (q^{ℓ+i} + q^{−ℓ−k})T_ℓ + [ℓ]²(1 − q^{−1})q^{1−ℓ−k}T_{ℓ−1}
/// (the last term absent for ℓ = 0).
pub fn bcda_identity(table: &CharacterTable, m: &SparseIntMatrix, i: usize, k: usize, ell: usize) -> Result<bool> {
    let ctx = table.ctx();
    let (il, kl, ll) = (i as i64, k as i64, ell as i64);
    let t = trace_vec(table, i, k, ell)?;
    let lhs = m.apply(&t)?;
    let mu = CycNum::root_power(ctx, ll + il) + CycNum::root_power(ctx, -ll - kl);
    let mut rhs: Vec<CycNum> = t.iter().map(|x| &mu * x).collect();
    if ell >= 1 {
        let qi = quantum_integer(ctx, ell);
        let c = (&qi * &qi) * (CycNum::one(ctx) - CycNum::root_power(ctx, -1));
        let c = c.mul_root_power(1 - ll - kl);
        let prev = trace_vec(table, i, k, ell - 1)?;
        for (r, p) in rhs.iter_mut().zip(&prev) {
            *r = &*r + &(&c * p);
        }
    }
    Ok(lhs == rhs)
}

/// The combination v = Σ_{ℓ=1}^{s} γ_ℓ T_ℓ with s = −(i+k) mod n,
/// γ_s = 1 and γ_ℓ = [ℓ+1]² q^{−1−ℓ+s} / ([ℓ][s−ℓ](q−1)) · γ_{ℓ+1},
/// together with the outcome of (M − λ)v ∈ span{T_0}, λ = q^i + q^{−k}.
#[derive(Debug, Clone, Serialize)]
pub struct GenTraceCombination {
    pub i: usize,
    pub k: usize,
    pub s: usize,
    pub lambda: CycNum,
    /// γ_1, …, γ_s.
    pub gammas: Vec<CycNum>,
    pub vector: Vec<CycNum>,
    /// The scalar c with (M − λ)v = c·T_0, when one exists.
    pub residual_coeff: Option<CycNum>,
}

impl GenTraceCombination {
    pub fn in_span(&self) -> bool {
        self.residual_coeff.is_some()
    }
}

pub fn gen_trace_combination(
    table: &CharacterTable,
    m: &SparseIntMatrix,
    i: usize,
    k: usize,
) -> Result<GenTraceCombination> {
    let ctx = table.ctx();
    let n = ctx.n();
    let (i, k) = (i % n, k % n);
    if (i + k) % n == 0 {
        return Err(Error::InvalidArgument(format!(
            "i + k ≡ 0 mod {n} for (i,k) = ({i},{k}); the combination is defined only off that line"
        )));
    }
    let s = n - (i + k) % n;
    let q_minus_one = CycNum::root_power(ctx, 1) - CycNum::one(ctx);
    let mut gammas = vec![CycNum::zero(ctx); s];
    gammas[s - 1] = CycNum::one(ctx);
    for ell in (1..s).rev() {
        let top = quantum_integer(ctx, ell + 1);
        let num = (&top * &top).mul_root_power(s as i64 - 1 - ell as i64);
        let den = &(&quantum_integer(ctx, ell) * &quantum_integer(ctx, s - ell)) * &q_minus_one;
        gammas[ell - 1] = &(&num * &den.invert()?) * &gammas[ell];
    }
    let mut vector = vec![CycNum::zero(ctx); n * n];
    for (ell, g) in (1..=s).zip(&gammas) {
        for (acc, x) in vector.iter_mut().zip(trace_vec(table, i, k, ell)?) {
            *acc = &*acc + &(g * &x);
        }
    }
    let lambda = CycNum::root_power(ctx, i as i64) + CycNum::root_power(ctx, -(k as i64));
    let mv = m.apply(&vector)?;
    let resid: Vec<CycNum> = mv.iter().zip(&vector).map(|(a, x)| a - &(&lambda * x)).collect();
    let base = trace_vec(table, i, k, 0)?;
    let residual_coeff = base
        .iter()
        .position(|b| !b.is_zero())
        .and_then(|p| {
            let c = &resid[p] * &base[p].invert().ok()?;
            resid
                .iter()
                .zip(&base)
                .all(|(x, b)| *x == &c * b)
                .then_some(c)
        });
    Ok(GenTraceCombination {
        i,
        k,
        s,
        lambda,
        gammas,
        vector,
        residual_coeff,
    })
}
