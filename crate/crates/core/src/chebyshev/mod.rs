//! Chebyshev polynomials in monic scaling (𝒰_k(t) = U_k(t/2) and friends),
//! the bivariate family 𝒰_k(t, D), and the block characteristic polynomial
//! p_n(t, D).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cycfield::{Ring, RingPoly};
use crate::error::{Error, Result};

/// The four Chebyshev families, all monic of degree k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ChebKind {
    /// Second kind: 𝒰_0 = 1, 𝒰_1 = t, 𝒰_k = t𝒰_{k−1} − 𝒰_{k−2}.
    U,
    /// Fourth kind: 𝒲_0 = 1, 𝒲_k = 𝒰_k + 𝒰_{k−1}.
    W,
    /// Modified (first kind doubled): ℒ_0 = 2, ℒ_1 = t, ℒ_k = tℒ_{k−1} − ℒ_{k−2}.
    L,
    /// Third kind: 𝒱_0 = 1, 𝒱_1 = t − 1, 𝒱_k = t𝒱_{k−1} − 𝒱_{k−2}, which is
    /// the recursion satisfied by 𝒰_k − 𝒰_{k−1}.
    V,
}

impl ChebKind {
    pub const ALL: [ChebKind; 4] = [ChebKind::U, ChebKind::W, ChebKind::L, ChebKind::V];

    /// Initial values (𝒦_0, 𝒦_1) as polynomials with coefficients (c0, c1)
    /// in the basis {1, t}.
    fn seeds(self) -> ([i64; 2], [i64; 2]) {
        match self {
            ChebKind::U => ([1, 0], [0, 1]),
            ChebKind::W => ([1, 0], [1, 1]),
            ChebKind::L => ([2, 0], [0, 1]),
            ChebKind::V => ([1, 0], [-1, 1]),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ChebKind::U => "U",
            ChebKind::W => "W",
            ChebKind::L => "L",
            ChebKind::V => "V",
        }
    }
}

impl std::str::FromStr for ChebKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "U" => Ok(ChebKind::U),
            "W" => Ok(ChebKind::W),
            "L" => Ok(ChebKind::L),
            "V" => Ok(ChebKind::V),
            _ => Err(Error::InvalidArgument(format!(
                "unknown Chebyshev kind `{s}` (expected U, W, L or V)"
            ))),
        }
    }
}

/// All four families share the three-term recursion K_k = t·K_{k−1} − K_{k−2};
/// they differ only in their seeds. This evaluates K_0, …, K_kmax at a point
/// of any ring.
pub fn cheb_values<R: Ring>(kind: ChebKind, kmax: usize, t: &R) -> Vec<R> {
    let ([a0, a1], [b0, b1]) = kind.seeds();
    let seed = |c0: i64, c1: i64| t.from_int_like(c0).plus(&t.scale_int(c1));
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(seed(a0, a1));
    if kmax >= 1 {
        out.push(seed(b0, b1));
    }
    for k in 2..=kmax {
        let next = t.times(&out[k - 1]).minus(&out[k - 2]);
        out.push(next);
    }
    out
}

/// K_k(t) evaluated at a ring element.
pub fn cheb_eval<R: Ring>(kind: ChebKind, k: usize, t: &R) -> R {
    cheb_values(kind, k, t).pop().expect("at least one value")
}

/// Integer coefficient vector of K_k(t).
pub fn cheb_poly(kind: ChebKind, k: usize) -> RingPoly<BigInt> {
    let t = RingPoly::new(vec![BigInt::zero(), BigInt::one()]);
    let ([a0, a1], [b0, b1]) = kind.seeds();
    let seed = |c0: i64, c1: i64| RingPoly::new(vec![BigInt::from(c0), BigInt::from(c1)]);
    let mut prev = seed(a0, a1);
    if k == 0 {
        return prev;
    }
    let mut cur = seed(b0, b1);
    for _ in 2..=k {
        let next = t.mul(&cur).sub(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Polynomial in t and D with integer coefficients, keyed by
/// (t-degree, D-degree).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(coeff: BigInt, t_deg: usize, d_deg: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, t_deg, d_deg);
        p
    }

    fn add_term(&mut self, coeff: BigInt, t_deg: usize, d_deg: usize) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((t_deg, d_deg)).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(t_deg, d_deg));
        }
    }

    pub fn coeff(&self, t_deg: usize, d_deg: usize) -> BigInt {
        self.terms.get(&(t_deg, d_deg)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigInt)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(c.clone(), a, b);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(-c, a, b);
        }
        out
    }

    /// Multiply by c·t^i·D^j.
    pub fn mul_monomial(&self, c: &BigInt, i: usize, j: usize) -> Self {
        let mut out = Self::zero();
        for ((a, b), x) in self.terms() {
            out.add_term(x * c, a + i, b + j);
        }
        out
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.0).max()
    }

    /// Substitute D := d, leaving a polynomial in t over the ring of `d`.
    pub fn specialize_d<R: Ring>(&self, d: &R) -> RingPoly<R> {
        let deg = self.t_degree().unwrap_or(0);
        let mut coeffs = vec![d.zero_like(); deg + 1];
        for ((a, b), c) in self.terms() {
            let term = d.pow_u(b as u64).times(&d.one_like().scale_int(bigint_to_i64(c)));
            coeffs[a] = coeffs[a].plus(&term);
        }
        RingPoly::new(coeffs)
    }

    /// Coefficients of the t^{n−2i}D^i terms, i = 0, 1, …, for a polynomial
    /// whose support lies on that diagonal (plus the constant −2 of p_n).
    pub fn diagonal_coeffs(&self, top: usize) -> Vec<BigInt> {
        (0..=top / 2).map(|i| self.coeff(top - 2 * i, i)).collect()
    }
}

fn bigint_to_i64(c: &BigInt) -> i64 {
    i64::try_from(c).expect("Chebyshev coefficient fits in i64 for supported degrees")
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in self.terms.iter().rev() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mut factors = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            match b {
                0 => {}
                1 => factors.push("D".into()),
                _ => factors.push(format!("D^{b}")),
            }
            match a {
                0 => {}
                1 => factors.push("t".into()),
                _ => factors.push(format!("t^{a}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// 𝒰_k(t, D) by the recursion 𝒰_k = t𝒰_{k−1} − D𝒰_{k−2}.
pub fn u_bivariate(k: usize) -> BivariatePoly {
    u_bivariate_all(k).pop().expect("nonempty")
}

fn u_bivariate_all(kmax: usize) -> Vec<BivariatePoly> {
    let one = BigInt::one();
    let mut out = vec![BivariatePoly::term(one.clone(), 0, 0)];
    if kmax >= 1 {
        out.push(BivariatePoly::term(one.clone(), 1, 0));
    }
    for k in 2..=kmax {
        let next = out[k - 1]
            .mul_monomial(&one, 1, 0)
            .sub(&out[k - 2].mul_monomial(&one, 0, 1));
        out.push(next);
    }
    out
}

/// 𝒰_k(t, D) = Σ_j (−1)^j C(k−j, j) t^{k−2j} D^j.
pub fn u_bivariate_closed(k: usize) -> BivariatePoly {
    let mut p = BivariatePoly::zero();
    for j in 0..=k / 2 {
        let c = binomial(BigInt::from(k - j), BigInt::from(j));
        p.add_term(if j % 2 == 0 { c } else { -c }, k - 2 * j, j);
    }
    p
}

fn check_odd(n: usize) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidOrder(n as i64));
    }
    Ok(())
}

/// p_n(t, D) = t𝒰_{n−1}(t, D) − 2D𝒰_{n−2}(t, D) − 2.
pub fn p_n_bivariate(n: usize) -> Result<BivariatePoly> {
    check_odd(n)?;
    let us = u_bivariate_all(n - 1);
    let one = BigInt::one();
    Ok(us[n - 1]
        .mul_monomial(&one, 1, 0)
        .sub(&us[n - 2].mul_monomial(&BigInt::from(2), 0, 1))
        .sub(&BivariatePoly::term(BigInt::from(2), 0, 0)))
}

/// Σ_i (−1)^i (n/(n−i)) C(n−i, i) D^i t^{n−2i} − 2.
pub fn p_n_closed(n: usize) -> Result<BivariatePoly> {
    check_odd(n)?;
    let mut p = BivariatePoly::term(BigInt::from(-2), 0, 0);
    for i in 0..=n / 2 {
        let num = BigInt::from(n) * binomial(BigInt::from(n - i), BigInt::from(i));
        let c = num / BigInt::from(n - i);
        p.add_term(if i % 2 == 0 { c } else { -c }, n - 2 * i, i);
    }
    Ok(p)
}

/// Whether p_n(t, 1) = (t − 2)·𝒲_h(t)² holds exactly, n = 2h + 1.
pub fn p_n_factor_check(n: usize) -> Result<bool> {
    check_odd(n)?;
    let h = (n - 1) / 2;
    let lhs = p_n_bivariate(n)?.specialize_d(&BigInt::one());
    let w = cheb_poly(ChebKind::W, h);
    let rhs = RingPoly::new(vec![BigInt::from(-2), BigInt::one()]).mul(&w.mul(&w));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests;
