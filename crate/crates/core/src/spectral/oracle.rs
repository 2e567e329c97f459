//! Double-precision shadow of the spectral computations. Every closed form is
//! re-evaluated from scratch with q = e^{2πi/n} in floating point, compared
//! with the complex embedding of the exact result, and pushed through the
//! same integer matrices. Exact arithmetic and this oracle share no code
//! beyond the integer matrices themselves.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{EigIndex, SpectralCertificate};
use crate::cycfield::{CycNum, SparseIntMatrix};

/// q^e = e^{2πie/n}.
pub fn q_pow(n: usize, e: i64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * e.rem_euclid(n as i64) as f64 / n as f64)
}

/// λ_{j,r} in floating point.
pub fn lambda(n: usize, idx: EigIndex) -> Complex64 {
    q_pow(n, idx.r as i64) * (2.0 * (2.0 * PI * idx.j as f64 / n as f64).cos())
}

/// Values 𝒰_0..=𝒰_kmax (or another family, selected by its seeds) at t.
pub fn cheb(seed0: Complex64, seed1: Complex64, kmax: usize, t: Complex64) -> Vec<Complex64> {
    let mut out = vec![seed0, seed1];
    for k in 2..=kmax {
        let next = t * out[k - 1] - out[k - 2];
        out.push(next);
    }
    out.truncate(kmax + 1);
    out
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn t_of(n: usize, j: usize) -> Complex64 {
    Complex64::new(2.0 * (2.0 * PI * j as f64 / n as f64).cos(), 0.0)
}

fn blocks(n: usize, r: usize, sign: i64, coeffs: &[Complex64]) -> Vec<Complex64> {
    coeffs
        .iter()
        .flat_map(|c| (0..n).map(move |m| c * q_pow(n, sign * 2 * (r * m) as i64)))
        .collect()
}

/// v_{j,r} in floating point.
pub fn right_eigvec(n: usize, idx: EigIndex) -> Vec<Complex64> {
    let t = t_of(n, idx.j);
    let u = cheb(one(), t, n, t);
    let c: Vec<Complex64> = (0..n).map(|k| u[k] * q_pow(n, (k * idx.r) as i64)).collect();
    blocks(n, idx.r, 1, &c)
}

/// x_{j,r} in floating point: v + q^{−r} dv/dt, using d𝒰_k/dt = Σ (k−2s)𝒰_{k−1−2s}.
pub fn gen_right_eigvec(n: usize, idx: EigIndex) -> Vec<Complex64> {
    let t = t_of(n, idx.j);
    let u = cheb(one(), t, n, t);
    let c: Vec<Complex64> = (0..n)
        .map(|k| {
            let mut c = u[k] * q_pow(n, (k * idx.r) as i64);
            if k >= 1 {
                let d: Complex64 = (0..=(k - 1) / 2).map(|s| u[k - 1 - 2 * s] * (k - 2 * s) as f64).sum();
                c += d * q_pow(n, (k as i64 - 1) * idx.r as i64);
            }
            c
        })
        .collect();
    blocks(n, idx.r, 1, &c)
}

/// w_{j,r} in floating point, blocks [w_{n−1}, …, w_0].
pub fn left_eigvec(n: usize, idx: EigIndex) -> Vec<Complex64> {
    let t = t_of(n, idx.j);
    let l = cheb(Complex64::new(2.0, 0.0), t, n, t);
    let mut c: Vec<Complex64> = (0..n)
        .map(|k| if k == 0 { one() } else { l[k] * q_pow(n, (k * idx.r) as i64) })
        .collect();
    c.reverse();
    blocks(n, idx.r, -1, &c)
}

/// y_{j,r} in floating point, blocks [y_{n−1}, …, y_0].
pub fn gen_left_eigvec(n: usize, idx: EigIndex) -> Vec<Complex64> {
    let t = t_of(n, idx.j);
    let u = cheb(one(), t, n, t);
    let r = idx.r as i64;
    let mut c: Vec<Complex64> = (0..n)
        .map(|k| match k {
            0 => one(),
            1 => u[1] * q_pow(n, r) + one(),
            _ => {
                (u[k] - u[k - 2]) * q_pow(n, k as i64 * r)
                    + u[k - 1] * k as f64 * q_pow(n, (k as i64 - 1) * r)
            }
        })
        .collect();
    c.reverse();
    blocks(n, idx.r, -1, &c)
}

pub fn max_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// max |exact − approx| after embedding the exact vector.
pub fn distance(exact: &[CycNum], approx: &[Complex64]) -> f64 {
    if exact.len() != approx.len() {
        return f64::INFINITY;
    }
    exact
        .iter()
        .zip(approx)
        .map(|(a, b)| (a.embed() - b).norm())
        .fold(0.0, f64::max)
}

/// max |A·x − λx − e| (right action) or |x·A − λx − e| (left action).
pub fn residual(
    m: &SparseIntMatrix,
    x: &[Complex64],
    lambda: Complex64,
    extra: Option<&[Complex64]>,
    left: bool,
) -> f64 {
    let ax = if left { m.apply_left_complex(x) } else { m.apply_complex(x) };
    ax.iter()
        .enumerate()
        .map(|(i, a)| {
            let mut d = a - lambda * x[i];
            if let Some(e) = extra {
                d -= e[i];
            }
            d.norm()
        })
        .fold(0.0, f64::max)
}

/// Worst floating-point discrepancy for one certificate: the recomputed
/// vectors against the embedded exact ones, and the floating-point
/// eigen-equations against M.
pub fn certificate_residual(m: &SparseIntMatrix, cert: &SpectralCertificate) -> f64 {
    let n = (m.rows() as f64).sqrt().round() as usize;
    let idx = cert.index;
    let lam = lambda(n, idx);
    let v = right_eigvec(n, idx);
    let w = left_eigvec(n, idx);
    let mut worst = (cert.lambda.embed() - lam).norm();
    worst = worst.max(distance(&cert.right, &v));
    worst = worst.max(distance(&cert.left, &w));
    worst = worst.max(residual(m, &v, lam, None, false));
    worst = worst.max(residual(m, &w, lam, None, true));
    if let (Some(x), Some(y)) = (&cert.gen_right, &cert.gen_left) {
        let xf = gen_right_eigvec(n, idx);
        let yf = gen_left_eigvec(n, idx);
        worst = worst.max(distance(x, &xf));
        worst = worst.max(distance(y, &yf));
        worst = worst.max(residual(m, &xf, lam, Some(&v), false));
        worst = worst.max(residual(m, &yf, lam, Some(&w), true));
    }
    worst
}
