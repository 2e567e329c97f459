//! Idempotents and the Jacobson radical of G_0^C(D_n).
//!
//! With E_u = (1/n)Σ_v q^{−uv}g^v, the complexified ring splits as
//! ⊕_u Q(q)[x]/f(x, q^u): g acts on the slice E_u as the scalar q^u. An
//! element living in one slice is stored as a polynomial of degree < n and
//! converted to the simple basis through the polynomial presentation.

use serde::Serialize;

use super::{lambda_of, EigIndex};
use crate::chebyshev::p_n_bivariate;
use crate::cycfield::{sparse_apply_int, CycInt, CycNum, Ctx, Field, IntBasis, Ring, RingMatrix, RingPoly, SparseIntMatrix};
use crate::error::{Error, Result};
use crate::grring::{GrothRing, PolyPres};

/// f(x, q^u) = p_n(x, q^u), the relation on the slice E_u.
pub fn slice_modulus(ctx: &Ctx, u: usize) -> Result<RingPoly<CycNum>> {
    Ok(p_n_bivariate(ctx.n())?.specialize_d(&CycNum::root_power(ctx, u as i64)))
}

/// Product in Q(q)[x]/(modulus).
pub fn slice_mul(
    a: &RingPoly<CycNum>,
    b: &RingPoly<CycNum>,
    modulus: &RingPoly<CycNum>,
) -> Result<RingPoly<CycNum>> {
    Ok(a.mul(b).div_rem_monic(modulus)?.1)
}

/// Simple-basis coordinates of P(x)·E_u: the presentation coefficient of
/// g^v x^e is (1/n) q^{−uv} [x^e]P.
pub fn slice_to_simple(ring: &GrothRing, ctx: &Ctx, u: usize, p: &RingPoly<CycNum>) -> Vec<CycNum> {
    let n = ctx.n();
    let inv_n = CycNum::from_int(ctx, n as i64).invert().expect("n ≠ 0");
    let mut pres = PolyPres::zero(n, &CycNum::zero(ctx));
    for (e, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let c = c * &inv_n;
        for v in 0..n {
            pres.set(v, e, c.mul_root_power(-((u * v) as i64)));
        }
    }
    ring.poly_to_simple(&pres)
}

/// Slice components of an element given in the simple basis: since
/// g^v E_u = q^{uv} E_u, the component on E_u is Σ_v q^{uv} c_{v,e} x^e.
pub fn simple_to_slices(ring: &GrothRing, ctx: &Ctx, coords: &[CycNum]) -> Vec<RingPoly<CycNum>> {
    let n = ctx.n();
    let pres = ring.simple_to_poly(coords);
    (0..n)
        .map(|u| {
            RingPoly::new(
                (0..n)
                    .map(|e| {
                        (0..n).fold(CycNum::zero(ctx), |acc, v| {
                            let c = pres.get(v, e);
                            if c.is_zero() {
                                acc
                            } else {
                                acc + c.mul_root_power((u * v) as i64)
                            }
                        })
                    })
                    .collect(),
            )
        })
        .collect()
}

fn exact_quotient(p: &RingPoly<CycNum>, root: &CycNum) -> Result<RingPoly<CycNum>> {
    let (q, r) = p.div_rem_monic(&RingPoly::linear_root(root))?;
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "{root} is not a root of the slice relation"
        )));
    }
    Ok(q)
}

/// One index (j, r) of the decomposition. Everything lives on the slice
/// E_{2r}.
#[derive(Debug, Clone)]
pub struct IdemEntry {
    pub index: EigIndex,
    pub slice: usize,
    pub lambda: CycNum,
    /// F_{j,r} = f(x, q^{2r})/(x − λ_{j,r}).
    pub f: RingPoly<CycNum>,
    /// G_{j,r} = f(x, q^{2r})/(x − λ_{j,r})², j ≠ 0.
    pub g: Option<RingPoly<CycNum>>,
    /// ϑ_{j,r} = (λ_j − λ_0)Π_{k≠j, k≥1}(λ_j − λ_k)², j ≠ 0.
    pub theta: Option<CycNum>,
    /// The scalar with G² − ϑG = νF, j ≠ 0.
    pub nu: Option<CycNum>,
    /// ξ_r^{−1}F_{0,r} for j = 0; G′_{j,r} = ϑ^{−1}(G − (ν/ϑ)F) otherwise.
    pub idempotent: RingPoly<CycNum>,
}

/// The full family E_u, F, G, ξ, ϑ, ν, G′ for one n.
#[derive(Debug, Clone)]
pub struct IdempotentFamily {
    ctx: Ctx,
    /// f(x, q^u) for u ∈ Z_n.
    pub moduli: Vec<RingPoly<CycNum>>,
    /// ξ_r = Π_{j≥1}(2q^r − λ_{j,r})².
    pub xi: Vec<CycNum>,
    /// Entries in [`EigIndex::all`] order.
    pub entries: Vec<IdemEntry>,
}

impl IdempotentFamily {
    pub fn new(ctx: &Ctx) -> Result<Self> {
        let n = ctx.n();
        let h = (n - 1) / 2;
        let moduli = (0..n).map(|u| slice_modulus(ctx, u)).collect::<Result<Vec<_>>>()?;
        let xi: Vec<CycNum> = (0..n)
            .map(|r| {
                let two_qr = CycNum::root_power(ctx, r as i64).scale_int(2);
                (1..=h).fold(CycNum::one(ctx), |acc, j| {
                    let d = &two_qr - &lambda_of(ctx, EigIndex { j, r });
                    acc * (&d * &d)
                })
            })
            .collect();
        let mut entries = Vec::with_capacity(n * (h + 1));
        for idx in EigIndex::all(n) {
            let slice = (2 * idx.r) % n;
            let modulus = &moduli[slice];
            let lambda = lambda_of(ctx, idx);
            let f = exact_quotient(modulus, &lambda)?;
            if idx.j == 0 {
                let xi_inv = xi[idx.r].invert()?;
                entries.push(IdemEntry {
                    index: idx,
                    slice,
                    lambda,
                    idempotent: f.scale(&xi_inv),
                    f,
                    g: None,
                    theta: None,
                    nu: None,
                });
                continue;
            }
            let g = exact_quotient(&f, &lambda)?;
            let lambda0 = lambda_of(ctx, EigIndex { j: 0, r: idx.r });
            let theta = (1..=h).filter(|&k| k != idx.j).fold(&lambda - &lambda0, |acc, k| {
                let d = &lambda - &lambda_of(ctx, EigIndex { j: k, r: idx.r });
                acc * (&d * &d)
            });
            let rest = slice_mul(&g, &g, modulus)?.sub(&g.scale(&theta));
            let nu = solve_multiple(&rest, &f).ok_or_else(|| {
                Error::Internal(format!("G² − ϑG is not a multiple of F at {idx}"))
            })?;
            let theta_inv = theta.invert()?;
            let idempotent = g.sub(&f.scale(&(&nu * &theta_inv))).scale(&theta_inv);
            entries.push(IdemEntry {
                index: idx,
                slice,
                lambda,
                f,
                g: Some(g),
                theta: Some(theta),
                nu: Some(nu),
                idempotent,
            });
        }
        Ok(IdempotentFamily {
            ctx: ctx.clone(),
            moduli,
            xi,
            entries,
        })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn entry(&self, idx: EigIndex) -> &IdemEntry {
        let n = self.ctx.n();
        &self.entries[idx.j * n + idx.r]
    }

    /// E_u in the simple basis.
    pub fn e_u(&self, ring: &GrothRing, u: usize) -> Vec<CycNum> {
        slice_to_simple(ring, &self.ctx, u, &RingPoly::constant(CycNum::one(&self.ctx)))
    }

    pub fn coords(&self, ring: &GrothRing, slice: usize, p: &RingPoly<CycNum>) -> Vec<CycNum> {
        slice_to_simple(ring, &self.ctx, slice, p)
    }
}

/// The scalar c with a = c·b, if one exists (b ≠ 0).
fn solve_multiple(a: &RingPoly<CycNum>, b: &RingPoly<CycNum>) -> Option<CycNum> {
    let p = b.coeffs().iter().position(|c| !c.is_zero())?;
    let c = a.coeff(p).unwrap_or_else(|| b.coeffs()[p].zero_like()).times(&b.coeffs()[p].inverse()?);
    (a.sub(&b.scale(&c)).is_zero()).then_some(c)
}

fn poly_rank(ctx: &Ctx, polys: &[&RingPoly<CycNum>]) -> usize {
    if polys.is_empty() {
        return 0;
    }
    let n = ctx.n();
    let rows: Vec<Vec<CycNum>> = polys
        .iter()
        .map(|p| (0..n).map(|e| p.coeff(e).unwrap_or_else(|| CycNum::zero(ctx))).collect())
        .collect();
    RingMatrix::from_rows(rows).expect("rectangular").rank_over_field()
}

/// Outcome of every structural check on the decomposition.
#[derive(Debug, Clone, Serialize)]
pub struct GrothStructureReport {
    /// Coordinates of each element map back to the same slice component.
    pub round_trip_ok: bool,
    /// Number of F_{j,r} with j ≠ 0 and the rank they span.
    pub radical_count: usize,
    pub radical_rank: usize,
    /// F_{j,r}F_{k,s} = 0 for all j, k ≠ 0 (including squares).
    pub radical_square_zero: bool,
    /// Number of ξ^{−1}F_{0,r} and G′_{j,r}.
    pub idempotent_count: usize,
    /// e² = e for each.
    pub idempotents_ok: bool,
    /// ee′ = 0 for distinct ones.
    pub orthogonal_ok: bool,
    /// Radical and idempotents together span the n²-dimensional ring.
    pub complement_rank: usize,
    /// The idempotents sum to 1.
    pub unit_ok: bool,
    /// GF = ϑF.
    pub gf_ok: bool,
    /// Coordinates of F are left eigenvectors of M; those of G are
    /// generalized left eigenvectors: u_G M = λu_G + u_F.
    pub left_eigen_ok: bool,
    /// Slice products agree with products in the polynomial presentation on
    /// the sampled elements.
    pub presentation_ok: bool,
    pub presentation_samples: usize,
}

impl GrothStructureReport {
    pub fn holds(&self, n: usize) -> bool {
        let h = (n - 1) / 2;
        self.round_trip_ok
            && self.radical_count == n * h
            && self.radical_rank == n * h
            && self.radical_square_zero
            && self.idempotent_count == n * (h + 1)
            && self.idempotents_ok
            && self.orthogonal_ok
            && self.complement_rank == n * n
            && self.unit_ok
            && self.gf_ok
            && self.left_eigen_ok
            && self.presentation_ok
    }
}

/// Check the decomposition. `samples` bounds how many entries get their
/// squares recomputed through the polynomial presentation (the slower
/// independent product).
pub fn groth_structure_check(
    ring: &GrothRing,
    family: &IdempotentFamily,
    m: &SparseIntMatrix,
    samples: usize,
) -> Result<GrothStructureReport> {
    let ctx = family.ctx();
    let n = ctx.n();
    let zero_poly = RingPoly::<CycNum>::zero();
    let one = RingPoly::constant(CycNum::one(ctx));

    let mut round_trip_ok = true;
    let mut left_eigen_ok = true;
    for e in &family.entries {
        let uf = family.coords(ring, e.slice, &e.f);
        let back = simple_to_slices(ring, ctx, &uf);
        round_trip_ok &= back
            .iter()
            .enumerate()
            .all(|(u, p)| if u == e.slice { *p == e.f } else { p.is_zero() });
        let fm = m.apply_left(&uf)?;
        left_eigen_ok &= fm.iter().zip(&uf).all(|(a, x)| *a == &e.lambda * x);
        if let Some(g) = &e.g {
            let ug = family.coords(ring, e.slice, g);
            let gm = m.apply_left(&ug)?;
            left_eigen_ok &= gm
                .iter()
                .zip(&ug)
                .zip(&uf)
                .all(|((a, x), y)| *a == &(&e.lambda * x) + y);
        }
    }

    let mut radical_rank = 0;
    let mut complement_rank = 0;
    let mut radical_square_zero = true;
    let mut idempotents_ok = true;
    let mut orthogonal_ok = true;
    let mut unit_ok = true;
    let mut gf_ok = true;
    for r in 0..n {
        let slice = (2 * r) % n;
        let modulus = &family.moduli[slice];
        let group: Vec<&IdemEntry> = family.entries.iter().filter(|e| e.index.r == r).collect();
        let radical: Vec<&RingPoly<CycNum>> =
            group.iter().filter(|e| e.index.j != 0).map(|e| &e.f).collect();
        let idems: Vec<&RingPoly<CycNum>> = group.iter().map(|e| &e.idempotent).collect();
        radical_rank += poly_rank(ctx, &radical);
        let all: Vec<&RingPoly<CycNum>> = radical.iter().chain(&idems).copied().collect();
        complement_rank += poly_rank(ctx, &all);
        for a in &radical {
            for b in &radical {
                radical_square_zero &= slice_mul(a, b, modulus)?.is_zero();
            }
        }
        for (x, a) in idems.iter().enumerate() {
            for (y, b) in idems.iter().enumerate() {
                let p = slice_mul(a, b, modulus)?;
                if x == y {
                    idempotents_ok &= p == **a;
                } else {
                    orthogonal_ok &= p == zero_poly;
                }
            }
        }
        let total = idems.iter().fold(RingPoly::zero(), |acc, p| acc.add(p));
        unit_ok &= total == one;
        for e in group.iter().filter(|e| e.index.j != 0) {
            let g = e.g.as_ref().expect("j ≠ 0");
            let theta = e.theta.as_ref().expect("j ≠ 0");
            gf_ok &= slice_mul(g, &e.f, modulus)? == e.f.scale(theta);
        }
    }

    let mut presentation_ok = true;
    let picks: Vec<&IdemEntry> = family
        .entries
        .iter()
        .filter(|e| e.index.r == 1 % n || n <= 3)
        .take(samples)
        .collect();
    for e in &picks {
        let modulus = &family.moduli[e.slice];
        for p in [&e.f, &e.idempotent] {
            let u = family.coords(ring, e.slice, p);
            let via_pres = ring.multiply_groth(&u, &u);
            let via_slice = family.coords(ring, e.slice, &slice_mul(p, p, modulus)?);
            presentation_ok &= via_pres == via_slice;
        }
    }

    Ok(GrothStructureReport {
        round_trip_ok,
        radical_count: family.entries.iter().filter(|e| e.index.j != 0).count(),
        radical_rank,
        radical_square_zero,
        idempotent_count: family.entries.len(),
        idempotents_ok,
        orthogonal_ok,
        complement_rank,
        unit_ok,
        gf_ok,
        left_eigen_ok,
        presentation_ok,
        presentation_samples: picks.len(),
    })
}

/// e_u² = c_u e_u for a coordinate row u that is a simultaneous left
/// eigenvector of every McKay matrix, with c_u = Σ_V β_V u_V and β_V the
/// eigenvalue of M_V.
#[derive(Debug, Clone, Serialize)]
pub struct EigenIdemReport {
    pub c_u: CycNum,
    /// Whether u·M_V = β_V u held for every V (only when requested).
    pub common_eigen: Option<bool>,
    /// e_u² = c_u e_u under the presentation product.
    pub square_ok: bool,
}

impl EigenIdemReport {
    pub fn holds(&self) -> bool {
        self.square_ok && self.common_eigen != Some(false)
    }
}

/// `mckays` are the sparse McKay matrices of all simples in label order.
/// β_V is read off one nonzero coordinate of u; with `verify_eigen` the full
/// row identity u·M_V = β_V u is checked too.
pub fn eigenidem_check(
    ring: &GrothRing,
    mckays: &[SparseIntMatrix],
    u: &[CycNum],
    verify_eigen: bool,
) -> Result<EigenIdemReport> {
    let p = u
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::InvalidArgument("zero coordinate row".into()))?;
    let ctx = u[p].context().clone();
    let up_inv = u[p].invert()?;
    let mut c_u = CycNum::zero(&ctx);
    let mut betas = Vec::with_capacity(mckays.len());
    for (mv, uv) in mckays.iter().zip(u) {
        let col = mv.column(p);
        let entry = u
            .iter()
            .zip(&col)
            .filter(|(_, &a)| a != 0)
            .fold(CycNum::zero(&ctx), |acc, (x, &a)| acc + x.scale_int(a));
        let beta = &entry * &up_inv;
        if !uv.is_zero() {
            c_u = c_u + &beta * uv;
        }
        betas.push(beta);
    }
    let (common, square_ok) = match integral_eigenidem(ring, mckays, u, &betas, &c_u, verify_eigen)? {
        Some(found) => found,
        None => {
            let mut common = true;
            if verify_eigen {
                for (mv, beta) in mckays.iter().zip(&betas) {
                    let row = mv.apply_left(u)?;
                    common &= row.iter().zip(u).all(|(a, x)| *a == beta * x);
                }
            }
            let sq = ring.multiply_groth(u, u);
            (common, sq.iter().zip(u).all(|(a, x)| *a == &c_u * x))
        }
    };
    Ok(EigenIdemReport {
        c_u,
        common_eigen: verify_eigen.then_some(common),
        square_ok,
    })
}

/// The eigenvector and square tests of [`eigenidem_check`] run on the
/// integral vector D·u in Z[q], D the common denominator: u·M_V = β_V u iff
/// (D u)·M_V = β_V (D u), and u² = c_u u iff (D u)² = (D c_u)(D u). Returns
/// None when something does not fit in machine words.
fn integral_eigenidem(
    ring: &GrothRing,
    mckays: &[SparseIntMatrix],
    u: &[CycNum],
    betas: &[CycNum],
    c_u: &CycNum,
    verify_eigen: bool,
) -> Result<Option<(bool, bool)>> {
    let basis = IntBasis::new(c_u.context());
    let Some((d, du)) = CycInt::clear_denominators(&basis, u) else {
        return Ok(None);
    };
    let mut common = true;
    if verify_eigen {
        for (mv, beta) in mckays.iter().zip(betas) {
            let Some(beta) = CycInt::from_cycnum(&basis, beta) else {
                return Ok(None);
            };
            let row = sparse_apply_int(mv, &du, true)?;
            let want: Vec<CycInt> = du.iter().map(|x| beta.times(x)).collect();
            if row.iter().chain(&want).any(CycInt::overflowed) {
                return Ok(None);
            }
            common &= row == want;
        }
    }
    let Some(dc) = CycInt::from_cycnum(&basis, &c_u.scale_bigint(&d)) else {
        return Ok(None);
    };
    let sq = ring.multiply_groth(&du, &du);
    let want: Vec<CycInt> = du.iter().map(|x| dc.times(x)).collect();
    if sq.iter().chain(&want).any(CycInt::overflowed) {
        return Ok(None);
    }
    Ok(Some((common, sq == want)))
}
