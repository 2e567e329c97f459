//! Simple modules V(ℓ, r), their characters, and simple/projective trace
//! vectors.

use serde::Serialize;

use super::pbw::{Mono, PbwAlgebra, PbwElem};
use super::{projective_composition, Monomial, SimpleLabel};
use crate::chebyshev::{cheb_eval, ChebKind};
use crate::cycfield::{CycNum, Ctx, Ring, RingMatrix};
use crate::error::{Error, Result};

/// Quantum integer [m] = 1 + q + … + q^{m−1}.
pub fn quantum_integer(ctx: &Ctx, m: usize) -> CycNum {
    (0..m as i64).fold(CycNum::zero(ctx), |acc, e| acc + CycNum::root_power(ctx, e))
}

fn check_binomial_range(ell: usize, i: usize) -> Result<()> {
    if i > ell {
        return Err(Error::OutOfRange(format!("quantum binomial index {i} exceeds {ell}")));
    }
    Ok(())
}

/// Gaussian binomial [ℓ choose i] via the division-free q-Pascal rule
/// [ℓ, i] = [ℓ−1, i−1] + q^i [ℓ−1, i].
pub fn quantum_binomial(ctx: &Ctx, ell: usize, i: usize) -> Result<CycNum> {
    check_binomial_range(ell, i)?;
    let mut row = vec![CycNum::one(ctx)];
    for l in 1..=ell {
        let mut next = Vec::with_capacity(l + 1);
        for j in 0..=l {
            let left = if j > 0 { row[j - 1].clone() } else { CycNum::zero(ctx) };
            let right = if j < l { row[j].mul_root_power(j as i64) } else { CycNum::zero(ctx) };
            next.push(left + right);
        }
        row = next;
    }
    Ok(row[i].clone())
}

/// [ℓ]! / ([i]! [ℓ−i]!), valid for ℓ < n where no quantum integer vanishes.
pub fn quantum_binomial_by_quotient(ctx: &Ctx, ell: usize, i: usize) -> Result<CycNum> {
    check_binomial_range(ell, i)?;
    if ell >= ctx.n() {
        return Err(Error::OutOfRange(format!(
            "quotient form needs ℓ < n = {} (got {ell})",
            ctx.n()
        )));
    }
    let fact = |m: usize| (1..=m).fold(CycNum::one(ctx), |acc, k| acc * quantum_integer(ctx, k));
    let den = fact(i) * fact(ell - i);
    Ok(fact(ell) * den.invert()?)
}

/// α_i(ℓ) = (q^i − 1)(1 − q^{i−ℓ})/(q − 1) = [i]·(1 − q^{i−ℓ}).
pub fn alpha(ctx: &Ctx, i: usize, ell: usize) -> CycNum {
    quantum_integer(ctx, i) * (CycNum::one(ctx) - CycNum::root_power(ctx, i as i64 - ell as i64))
}

/// Matrices of a, b, c, d on V(ℓ, r) in the basis v_1, …, v_ℓ; column j is
/// the image of v_{j+1}.
#[derive(Debug, Clone)]
pub struct ActionSet {
    pub label: SimpleLabel,
    pub mat_a: RingMatrix<CycNum>,
    pub mat_b: RingMatrix<CycNum>,
    pub mat_c: RingMatrix<CycNum>,
    pub mat_d: RingMatrix<CycNum>,
}

pub fn action_set(ctx: &Ctx, label: SimpleLabel) -> ActionSet {
    let ell = label.ell;
    let r = label.r as i64;
    let zero = CycNum::zero(ctx);
    let one = CycNum::one(ctx);
    let mat_a = RingMatrix::from_fn(ell, ell, |i, j| if i == j + 1 { one.clone() } else { zero.clone() });
    let mat_b = RingMatrix::from_fn(ell, ell, |i, j| {
        if i == j {
            CycNum::root_power(ctx, r + j as i64)
        } else {
            zero.clone()
        }
    });
    let mat_c = RingMatrix::from_fn(ell, ell, |i, j| {
        if i == j {
            CycNum::root_power(ctx, j as i64 + 1 - r - ell as i64)
        } else {
            zero.clone()
        }
    });
    // d.v_j = α_{j−1}(ℓ) v_{j−1}; with 0-based column j this is α_j at row j−1.
    let mat_d = RingMatrix::from_fn(ell, ell, |i, j| {
        if j == i + 1 {
            alpha(ctx, j, ell)
        } else {
            zero.clone()
        }
    });
    ActionSet { label, mat_a, mat_b, mat_c, mat_d }
}

impl ActionSet {
    fn ctx(&self) -> &Ctx {
        self.mat_a.data()[0].context()
    }

    /// Each defining relation of D_n, checked as an exact matrix identity.
    pub fn verify_relations(&self) -> Vec<(&'static str, bool)> {
        let ctx = self.ctx().clone();
        let n = ctx.n() as u32;
        let q = CycNum::root_power(&ctx, 1);
        let one = CycNum::one(&ctx);
        let ell = self.label.ell;
        let id = RingMatrix::identity(ell, &one);
        let (a, b, c, d) = (&self.mat_a, &self.mat_b, &self.mat_c, &self.mat_d);
        let m = |x: &RingMatrix<CycNum>, y: &RingMatrix<CycNum>| x.mul(y).expect("square");
        let q_times = |x: RingMatrix<CycNum>| x.scale(&q);
        vec![
            ("ba = qab", m(b, a) == q_times(m(a, b))),
            ("db = qbd", m(d, b) == q_times(m(b, d))),
            ("ca = qac", m(c, a) == q_times(m(a, c))),
            ("dc = qcd", m(d, c) == q_times(m(c, d))),
            ("bc = cb", m(b, c) == m(c, b)),
            (
                "da - qad = 1 - bc",
                m(d, a).sub(&q_times(m(a, d))).unwrap() == id.sub(&m(b, c)).unwrap(),
            ),
            ("a^n = 0 = d^n", a.pow(n).unwrap().is_zero() && d.pow(n).unwrap().is_zero()),
            ("b^n = 1 = c^n", b.pow(n).unwrap() == id && c.pow(n).unwrap() == id),
        ]
    }

    pub fn relations_hold(&self) -> bool {
        self.verify_relations().iter().all(|(_, ok)| *ok)
    }

    /// Matrix of the basis monomial a^α b^β c^γ d^δ.
    pub fn mono_matrix(&self, m: &Mono) -> RingMatrix<CycNum> {
        let p = |x: &RingMatrix<CycNum>, e: u16| x.pow(e as u32).expect("square");
        p(&self.mat_a, m.a)
            .mul(&p(&self.mat_b, m.b))
            .and_then(|x| x.mul(&p(&self.mat_c, m.c)))
            .and_then(|x| x.mul(&p(&self.mat_d, m.d)))
            .expect("square")
    }

    /// Matrix of an arbitrary element of D_n.
    pub fn act(&self, x: &PbwElem) -> RingMatrix<CycNum> {
        let ctx = self.ctx();
        let mut out = RingMatrix::zeros(self.label.ell, self.label.ell, &CycNum::zero(ctx));
        for (m, c) in x.terms() {
            out = out.add(&self.mono_matrix(m).scale(c)).expect("same shape");
        }
        out
    }
}

/// tr_{V(ℓ,r)}(b^i c^k d^t a^t) from the action matrices.
pub fn character(ctx: &Ctx, label: SimpleLabel, m: Monomial) -> CycNum {
    let acts = action_set(ctx, label);
    let p = |x: &RingMatrix<CycNum>, e: usize| x.pow(e as u32).expect("square");
    p(&acts.mat_b, m.i)
        .mul(&p(&acts.mat_c, m.k))
        .and_then(|x| x.mul(&p(&acts.mat_d, m.t)))
        .and_then(|x| x.mul(&p(&acts.mat_a, m.t)))
        .and_then(|x| x.trace())
        .expect("square")
}

/// Cached products ∏_{m=j}^{j+t−1} α_m(ℓ), the only non-monomial ingredient
/// of every character value, so that full trace vectors are cheap.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    ctx: Ctx,
    /// `alpha_prods[ℓ][t][j−1]` for 1 ≤ j ≤ ℓ − t.
    alpha_prods: Vec<Vec<Vec<CycNum>>>,
}

impl CharacterTable {
    pub fn new(ctx: &Ctx) -> Self {
        let n = ctx.n();
        let mut alpha_prods = vec![Vec::new()];
        for ell in 1..=n {
            let alphas: Vec<CycNum> = (0..ell).map(|i| alpha(ctx, i, ell)).collect();
            let mut by_t = Vec::with_capacity(ell);
            by_t.push(vec![CycNum::one(ctx); ell]);
            for t in 1..ell {
                let prev: &Vec<CycNum> = &by_t[t - 1];
                // ∏_{m=j}^{j+t−1} = (∏_{m=j}^{j+t−2}) · α_{j+t−1}
                let row = (1..=ell - t).map(|j| &prev[j - 1] * &alphas[j + t - 1]).collect();
                by_t.push(row);
            }
            alpha_prods.push(by_t);
        }
        CharacterTable { ctx: ctx.clone(), alpha_prods }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// tr_{V(ℓ,r)}(b^i c^k d^t a^t)
    ///   = Σ_{j=1}^{ℓ−t} q^{(r+j−1)i + (j−r−ℓ)k} ∏_{m=j}^{j+t−1} α_m(ℓ).
    pub fn character(&self, label: SimpleLabel, m: Monomial) -> CycNum {
        let SimpleLabel { ell, r } = label;
        if m.t >= ell {
            return CycNum::zero(&self.ctx);
        }
        let (r, i, k) = (r as i64, m.i as i64, m.k as i64);
        let ell_i = ell as i64;
        let prods = &self.alpha_prods[ell][m.t];
        (1..=ell - m.t).fold(CycNum::zero(&self.ctx), |acc, j| {
            let j_i = j as i64;
            acc + prods[j - 1].mul_root_power((r + j_i - 1) * i + (j_i - r - ell_i) * k)
        })
    }

    /// Trace of a basis monomial a^α b^β c^γ d^δ: zero unless α = δ, and then
    /// by cyclicity the trace of b^β c^γ d^α a^α.
    pub fn monomial_trace(&self, label: SimpleLabel, m: &Mono) -> CycNum {
        if m.a != m.d {
            return CycNum::zero(&self.ctx);
        }
        self.character(
            label,
            Monomial { i: m.b as usize, k: m.c as usize, t: m.a as usize },
        )
    }

    pub fn element_trace(&self, label: SimpleLabel, x: &PbwElem) -> CycNum {
        x.terms().fold(CycNum::zero(&self.ctx), |acc, (m, c)| {
            acc + c * &self.monomial_trace(label, m)
        })
    }

    /// [tr_{S}(b^i c^k d^t a^t)] over all simples S in lexicographic order.
    pub fn trace_vector_s(&self, m: Monomial) -> Vec<CycNum> {
        SimpleLabel::all(self.ctx.n()).map(|l| self.character(l, m)).collect()
    }

    pub fn trace_vector_mono(&self, m: &Mono) -> Vec<CycNum> {
        SimpleLabel::all(self.ctx.n()).map(|l| self.monomial_trace(l, m)).collect()
    }

    pub fn trace_vector_elem(&self, x: &PbwElem) -> Vec<CycNum> {
        SimpleLabel::all(self.ctx.n()).map(|l| self.element_trace(l, x)).collect()
    }
}

/// tr_{V(ℓ,r)}(b^i c^k d^t a^t) by the closed sum.
pub fn character_fast(ctx: &Ctx, label: SimpleLabel, m: Monomial) -> CycNum {
    CharacterTable::new(ctx).character(label, m)
}

/// Trace of a basis monomial on V(ℓ, r).
pub fn monomial_trace(ctx: &Ctx, label: SimpleLabel, m: &Mono) -> CycNum {
    CharacterTable::new(ctx).monomial_trace(label, m)
}

/// η_{ℓ,s}(b^i c^k) = Σ_{t=1}^{ℓ} q^{(s+t−1)i + (t−s−ℓ)k}.
pub fn grouplike_character_closed(ctx: &Ctx, label: SimpleLabel, i: i64, k: i64) -> CycNum {
    let (ell, s) = (label.ell as i64, label.r as i64);
    (1..=ell).fold(CycNum::zero(ctx), |acc, t| {
        acc + CycNum::root_power(ctx, (s + t - 1) * i + (t - s - ell) * k)
    })
}

/// The same character written as q^{(2s+ℓ−1)ρ} 𝒰_{ℓ−1}(q^j + q^{−j}) with
/// j = (i+k)/2 and ρ = (i−k)/2 in Z_n (2 is invertible because n is odd).
pub fn grouplike_character_chebyshev(ctx: &Ctx, label: SimpleLabel, i: i64, k: i64) -> CycNum {
    let n = ctx.n() as i64;
    let half = (n + 1) / 2;
    let j = ((i + k) * half).rem_euclid(n);
    let rho = ((i - k) * half).rem_euclid(n);
    let t = CycNum::root_power(ctx, j) + CycNum::root_power(ctx, -j);
    cheb_eval(ChebKind::U, label.ell - 1, &t)
        .mul_root_power((label.ell as i64 + 2 * label.r as i64 - 1) * rho)
}

/// Trace vector of b^i c^k d^t a^t on all simples.
pub fn trace_vector_s(ctx: &Ctx, m: Monomial) -> Vec<CycNum> {
    CharacterTable::new(ctx).trace_vector_s(m)
}

/// Trace vector of an arbitrary element on all simples, by normal ordering
/// and summing monomial traces.
pub fn trace_vector_s_pbw(alg: &PbwAlgebra, table: &CharacterTable, x: &PbwElem) -> Vec<CycNum> {
    debug_assert_eq!(alg.n(), table.ctx().n());
    table.trace_vector_elem(x)
}

/// Traces of b^i c^k on the indecomposable projectives, ordered by ℓ then r
/// (P(ℓ, r) for ℓ < n, then V(n, r)). Closed form: zero unless i + k ≡ 0,
/// otherwise 2n·q^{(2r+ℓ−1)i} for ℓ < n and n·q^{(2r−1)i} for ℓ = n.
pub fn trace_vector_p(ctx: &Ctx, i: i64, k: i64) -> Vec<CycNum> {
    let n = ctx.n();
    if (i + k).rem_euclid(n as i64) != 0 {
        return vec![CycNum::zero(ctx); n * n];
    }
    SimpleLabel::all(n)
        .map(|l| {
            let (ell, r) = (l.ell as i64, l.r as i64);
            if l.ell < n {
                CycNum::root_power(ctx, (2 * r + ell - 1) * i).scale_int(2 * n as i64)
            } else {
                CycNum::root_power(ctx, (2 * r - 1) * i).scale_int(n as i64)
            }
        })
        .collect()
}

/// The same vector summed over composition factors.
pub fn trace_vector_p_by_composition(ctx: &Ctx, i: i64, k: i64) -> Vec<CycNum> {
    let n = ctx.n();
    SimpleLabel::all(n)
        .map(|p| {
            projective_composition(n, p)
                .into_iter()
                .fold(CycNum::zero(ctx), |acc, (s, mult)| {
                    acc + grouplike_character_closed(ctx, s, i, k).scale_int(mult as i64)
                })
        })
        .collect()
}

/// Both sides of M_V·Tr_S(x) = Σ tr_V(x₍₂₎)·Tr_S(x₍₁₎).
#[derive(Debug, Clone, Serialize)]
pub struct CoproductTraceReport {
    pub lhs: Vec<CycNum>,
    pub rhs: Vec<CycNum>,
    pub coproduct_terms: usize,
    pub holds: bool,
}

/// Evaluate the McKay-matrix side with `mckay` = M_V and the coproduct side
/// by full expansion of Δ(x).
pub fn coproduct_trace_identity(
    alg: &PbwAlgebra,
    table: &CharacterTable,
    x: &PbwElem,
    v: SimpleLabel,
    mckay: &RingMatrix<i64>,
) -> Result<CoproductTraceReport> {
    let ctx = alg.ctx();
    let n = alg.n();
    let lhs = mckay.apply(&table.trace_vector_elem(x))?;
    let delta = alg.coproduct(x);
    let mut rhs = vec![CycNum::zero(ctx); n * n];
    for ((m1, m2), c) in delta.terms() {
        let weight = table.monomial_trace(v, m2);
        if weight.is_zero() {
            continue;
        }
        let weight = &weight * c;
        for (slot, t) in rhs.iter_mut().zip(table.trace_vector_mono(m1)) {
            if !t.is_zero() {
                *slot = &*slot + &(&t * &weight);
            }
        }
    }
    let holds = lhs == rhs;
    Ok(CoproductTraceReport { lhs, rhs, coproduct_terms: delta.len(), holds })
}
