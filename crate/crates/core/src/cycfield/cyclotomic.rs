//! The cyclotomic field Q(q) for a primitive n-th root of unity q, n odd.
//!
//! Elements are stored as an integer numerator vector in the power basis
//! `1, q, …, q^{φ(n)−1}` over one positive common denominator, always in
//! lowest terms. That makes the representation canonical, so equality is plain
//! coefficient comparison, and keeps most arithmetic in integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Shared, immutable description of Q(q) for one odd n ≥ 3.
#[derive(Debug)]
pub struct CyclotomicContext {
    n: usize,
    phi: Vec<BigInt>,
    degree: usize,
    /// `reduced_powers[e]` is q^e written in the power basis, for 0 ≤ e < n.
    reduced_powers: Vec<Vec<BigInt>>,
    /// `roots[e]` = exp(2πi·e/n).
    roots: Vec<Complex64>,
}

/// Handle to a cyclotomic context; cheap to clone and share across threads.
pub type Ctx = Arc<CyclotomicContext>;

/// Build Q(q) for odd n ≥ 3.
pub fn make_context(n: i64) -> Result<Ctx> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidOrder(n));
    }
    let n = n as usize;
    let phi = cyclotomic_polynomial(n);
    let degree = phi.len() - 1;

    let mut reduced_powers = Vec::with_capacity(n);
    let mut cur = vec![BigInt::zero(); degree];
    cur[0] = BigInt::one();
    for _ in 0..n {
        reduced_powers.push(cur.clone());
        // multiply by q: shift up, then fold the overflowing q^degree term
        let top = cur[degree - 1].clone();
        for i in (1..degree).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = BigInt::zero();
        if !top.is_zero() {
            for (c, p) in cur.iter_mut().zip(&phi) {
                *c -= &top * p;
            }
        }
    }

    let roots = (0..n)
        .map(|e| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / n as f64))
        .collect();

    Ok(Arc::new(CyclotomicContext {
        n,
        phi,
        degree,
        reduced_powers,
        roots,
    }))
}

impl CyclotomicContext {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Euler's totient of n, the dimension of Q(q) over Q.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of Φ_n, constant term first.
    pub fn phi(&self) -> &[BigInt] {
        &self.phi
    }

    /// Reduce an exponent into `0..n`.
    pub fn residue(&self, e: i64) -> usize {
        e.rem_euclid(self.n as i64) as usize
    }

    /// q^e in the power basis, for 0 ≤ e < n.
    pub(crate) fn reduced_power(&self, e: usize) -> &[BigInt] {
        &self.reduced_powers[e]
    }

    /// Reduce an integer polynomial in q (any length) to the power basis.
    fn reduce(&self, poly: &[BigInt]) -> Vec<BigInt> {
        let n = self.n;
        let d = self.degree;
        let mut folded: Vec<BigInt> = vec![BigInt::zero(); n];
        for (i, c) in poly.iter().enumerate() {
            if !c.is_zero() {
                folded[i % n] += c;
            }
        }
        let mut out: Vec<BigInt> = folded[..d].to_vec();
        for (e, c) in folded.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.reduced_powers[e]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        out
    }
}

/// Integer coefficients of the n-th cyclotomic polynomial, computed as
/// (xⁿ − 1) divided by Φ_d for every proper divisor d of n.
pub fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); n + 1];
    num[0] = -BigInt::one();
    num[n] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = exact_monic_div(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_monic_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// An element of Q(q) in canonical form.
#[derive(Clone)]
pub struct CycNum {
    ctx: Ctx,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    pub fn zero(ctx: &Ctx) -> Self {
        CycNum {
            ctx: ctx.clone(),
            num: vec![BigInt::zero(); ctx.degree],
            den: BigInt::one(),
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::from_int(ctx, 1)
    }

    pub fn from_int(ctx: &Ctx, k: i64) -> Self {
        Self::from_bigint(ctx, &BigInt::from(k))
    }

    pub fn from_bigint(ctx: &Ctx, k: &BigInt) -> Self {
        let mut x = Self::zero(ctx);
        x.num[0] = k.clone();
        x
    }

    pub fn from_rational(ctx: &Ctx, r: &BigRational) -> Self {
        let mut x = Self::zero(ctx);
        x.num[0] = r.numer().clone();
        x.den = r.denom().clone();
        x.normalize();
        x
    }

    /// q^e with e reduced mod n.
    pub fn root_power(ctx: &Ctx, e: i64) -> Self {
        CycNum {
            ctx: ctx.clone(),
            num: ctx.reduced_powers[ctx.residue(e)].clone(),
            den: BigInt::one(),
        }
    }

    /// Σ cᵢ qⁱ for integer cᵢ; any length is accepted and reduced.
    pub fn from_int_poly(ctx: &Ctx, coeffs: &[BigInt]) -> Self {
        CycNum {
            ctx: ctx.clone(),
            num: ctx.reduce(coeffs),
            den: BigInt::one(),
        }
    }

    /// Σ cᵢ qⁱ for rational cᵢ; any length is accepted and reduced.
    pub fn from_coeffs(ctx: &Ctx, coeffs: &[BigRational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut x = CycNum {
            ctx: ctx.clone(),
            num: ctx.reduce(&ints),
            den,
        };
        x.normalize();
        x
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n
    }

    /// Coordinates in the basis `1, q, …, q^{φ(n)−1}`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// The value as an integer, if it lies in Z.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    fn check_ctx(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.n == other.ctx.n,
            "mixing elements of Q(q) for n = {} and n = {}",
            self.ctx.n,
            other.ctx.n
        );
    }

    fn normalize(&mut self) {
        if self.den.is_one() {
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for c in &mut self.num {
                *c = &*c / &g;
            }
        }
    }

    fn add_signed(&self, other: &Self, subtract: bool) -> Self {
        self.check_ctx(other);
        let combine = |a: &BigInt, b: &BigInt| if subtract { a - b } else { a + b };
        let mut out = if self.den == other.den {
            CycNum {
                ctx: self.ctx.clone(),
                num: self.num.iter().zip(&other.num).map(|(a, b)| combine(a, b)).collect(),
                den: self.den.clone(),
            }
        } else {
            let l = self.den.lcm(&other.den);
            let fa = &l / &self.den;
            let fb = &l / &other.den;
            CycNum {
                ctx: self.ctx.clone(),
                num: self
                    .num
                    .iter()
                    .zip(&other.num)
                    .map(|(a, b)| combine(&(a * &fa), &(b * &fb)))
                    .collect(),
                den: l,
            }
        };
        out.normalize();
        out
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.add_signed(other, false)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_signed(other, true)
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.check_ctx(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let d = self.ctx.degree;
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out = CycNum {
            ctx: self.ctx.clone(),
            num: self.ctx.reduce(&prod),
            den: &self.den * &other.den,
        };
        out.normalize();
        out
    }

    pub fn neg_ref(&self) -> Self {
        CycNum {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    /// Multiply by q^e without a general product.
    pub fn mul_root_power(&self, e: i64) -> Self {
        let n = self.ctx.n;
        let s = self.ctx.residue(e);
        if s == 0 {
            return self.clone();
        }
        let mut shifted = vec![BigInt::zero(); n];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                shifted[(i + s) % n] = c.clone();
            }
        }
        CycNum {
            ctx: self.ctx.clone(),
            num: self.ctx.reduce(&shifted),
            den: self.den.clone(),
        }
    }

    pub fn scale_bigint(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut out = CycNum {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|c| c * k).collect(),
            den: self.den.clone(),
        };
        out.normalize();
        out
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut out = CycNum {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|c| c * r.numer()).collect(),
            den: &self.den * r.denom(),
        };
        out.normalize();
        out
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against Φ_n.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let to_q = |v: &[BigInt]| -> Vec<BigRational> {
            v.iter().map(|c| BigRational::from_integer(c.clone())).collect()
        };
        // Invariant: s_i · self ≡ r_i (mod Φ_n), working with the numerator only.
        let mut r0 = to_q(&self.ctx.phi);
        let mut r1 = trim_q(to_q(&self.num));
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while r1.len() > 1 {
            let (quot, rem) = div_rem_q(&r0, &r1);
            let s2 = sub_q(&s0, &mul_q(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant because Φ_n is irreducible.
        let c = r1[0].clone();
        let scale = BigRational::from_integer(self.den.clone()) / c;
        let coeffs: Vec<BigRational> = s1.iter().map(|x| x * &scale).collect();
        Ok(CycNum::from_coeffs(&self.ctx, &coeffs))
    }

    /// Image under the Galois automorphism q ↦ q^k (k coprime to n).
    pub fn galois(&self, k: i64) -> Self {
        let n = self.ctx.n;
        let k = self.ctx.residue(k);
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                out[(i * k) % n] += c;
            }
        }
        let mut x = CycNum {
            ctx: self.ctx.clone(),
            num: self.ctx.reduce(&out),
            den: self.den.clone(),
        };
        x.normalize();
        x
    }

    /// Complex conjugate, i.e. q ↦ q^{−1}.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Value under q ↦ exp(2πi/n) in double precision.
    pub fn embed(&self) -> Complex64 {
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        self.num
            .iter()
            .zip(&self.ctx.roots)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, z)| z * (c.to_f64().unwrap_or(f64::NAN) / den))
            .sum()
    }

    pub fn to_repr(&self) -> CycNumRepr {
        CycNumRepr {
            n: self.ctx.n,
            coeffs: self.coeffs().iter().map(ToString::to_string).collect(),
        }
    }
}

/// Largest precision, in decimal digits, that the double-precision embedding
/// can honour.
pub const MAX_EMBED_DIGITS: u32 = 15;

/// Evaluate `x` at q = exp(2πi/n). Precision beyond [`MAX_EMBED_DIGITS`] is
/// not available from the double-precision oracle and is rejected.
pub fn complex_embed(x: &CycNum, precision: u32) -> Result<Complex64> {
    if precision > MAX_EMBED_DIGITS {
        return Err(Error::InvalidArgument(format!(
            "requested {precision} digits; the embedding is accurate to at most {MAX_EMBED_DIGITS}"
        )));
    }
    Ok(x.embed())
}

fn trim_q(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn sub_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    let zero = BigRational::zero();
    trim_q(
        (0..len)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn mul_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_q(out)
}

fn div_rem_q(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() <= db {
        return (Vec::new(), trim_q(rem));
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] / lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (trim_q(quot), trim_q(rem))
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n == other.ctx.n && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycNum {}

impl std::hash::Hash for CycNum {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.n.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[n={}]({})", self.ctx.n, self)
    }
}

/// Human-readable polynomial in q, e.g. `-1 - q` or `1/3*q^2 + 2`.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if wrote {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let monomial = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            if monomial.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{monomial}")?;
            } else {
                write!(f, "{mag}*{monomial}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Serialized form: `{"n": 5, "coeffs": ["1", "-1/2", "0", "0"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycNumRepr {
    pub n: usize,
    pub coeffs: Vec<String>,
}

impl CycNumRepr {
    pub fn to_cycnum(&self, ctx: &Ctx) -> Result<CycNum> {
        if self.n != ctx.n {
            return Err(Error::InvalidArgument(format!(
                "element of Q(q) for n = {} used with n = {}",
                self.n, ctx.n
            )));
        }
        if self.coeffs.len() != ctx.degree {
            return Err(Error::InvalidArgument(format!(
                "expected {} coordinates, got {}",
                ctx.degree,
                self.coeffs.len()
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigRational>()
                    .map_err(|e| Error::InvalidArgument(format!("bad rational `{s}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CycNum::from_coeffs(ctx, &coeffs))
    }
}

impl Serialize for CycNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(s)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                self.$imp(rhs)
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                self.$imp(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                self.$imp(rhs)
            }
        }
        impl $tr<CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                self.$imp(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        self.neg_ref()
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        self.neg_ref()
    }
}

impl Ring for CycNum {
    fn zero_like(&self) -> Self {
        CycNum::zero(&self.ctx)
    }
    fn one_like(&self) -> Self {
        CycNum::one(&self.ctx)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub_ref(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn negated(&self) -> Self {
        self.neg_ref()
    }
    fn scale_int(&self, k: i64) -> Self {
        self.scale_bigint(&BigInt::from(k))
    }
    fn is_one_elem(&self) -> bool {
        self.is_one()
    }
}

impl Field for CycNum {
    fn inverse(&self) -> Option<Self> {
        self.invert().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials_small() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(9), ints(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(15), ints(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
    }

    #[test]
    fn context_rejects_bad_orders() {
        assert_eq!(make_context(4).unwrap_err(), Error::InvalidOrder(4));
        assert_eq!(make_context(1).unwrap_err(), Error::InvalidOrder(1));
        assert!(make_context(-3).is_err());
        assert!(make_context(4).unwrap_err().to_string().contains("n must be odd ≥ 3"));
    }

    #[test]
    fn degrees_are_totients() {
        for (n, phi) in [(3, 2), (5, 4), (7, 6), (9, 6), (11, 10), (13, 12), (15, 8), (21, 12)] {
            assert_eq!(make_context(n).unwrap().degree(), phi, "n = {n}");
        }
    }

    #[test]
    fn root_powers_reduce() {
        let c5 = make_context(5).unwrap();
        assert!(CycNum::root_power(&c5, 5).is_one());
        let c3 = make_context(3).unwrap();
        let q2 = CycNum::root_power(&c3, 2);
        assert_eq!(q2.numerators(), &ints(&[-1, -1])[..]);
        let c7 = make_context(7).unwrap();
        assert_eq!(CycNum::root_power(&c7, -1), CycNum::root_power(&c7, 6));
    }

    #[test]
    fn basic_field_identities() {
        let ctx = make_context(3).unwrap();
        let q = CycNum::root_power(&ctx, 1);
        let sum = &q + &CycNum::root_power(&ctx, 2);
        assert_eq!(sum, CycNum::from_int(&ctx, -1));
        let inv = q.invert().unwrap();
        assert!((&inv * &q).is_one());
        assert_eq!(CycNum::zero(&ctx).invert().unwrap_err(), Error::DivisionByZero);

        for n in [5i64, 9, 15] {
            let ctx = make_context(n).unwrap();
            let q = CycNum::root_power(&ctx, 1);
            let geometric = (0..n).fold(CycNum::zero(&ctx), |acc, e| acc + CycNum::root_power(&ctx, e));
            assert!((&(&q - &CycNum::one(&ctx)) * &geometric).is_zero());
        }
    }

    #[test]
    fn phi_vanishes_at_q() {
        for n in [3i64, 5, 7, 9, 11, 13, 15] {
            let ctx = make_context(n).unwrap();
            let v = CycNum::from_int_poly(&ctx, ctx.phi());
            assert!(v.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn rational_scalars_stay_in_lowest_terms() {
        let ctx = make_context(5).unwrap();
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let x = CycNum::root_power(&ctx, 2).scale_rational(&third);
        let y = x.scale_int(3);
        assert_eq!(y, CycNum::root_power(&ctx, 2));
        assert!(y.denominator().is_one());
        assert_eq!(
            CycNum::from_rational(&ctx, &BigRational::new(BigInt::from(6), BigInt::from(-4))).as_rational(),
            Some(BigRational::new(BigInt::from(-3), BigInt::from(2)))
        );
    }

    #[test]
    fn mul_root_power_agrees_with_product() {
        let ctx = make_context(9).unwrap();
        let x = CycNum::from_int_poly(&ctx, &ints(&[1, -2, 0, 5, 3, 0, -1]));
        for e in -10..10 {
            assert_eq!(x.mul_root_power(e), &x * &CycNum::root_power(&ctx, e));
        }
    }

    #[test]
    fn galois_and_conjugation() {
        let ctx = make_context(7).unwrap();
        let q = CycNum::root_power(&ctx, 1);
        assert_eq!(q.conj(), CycNum::root_power(&ctx, -1));
        assert_eq!(q.galois(3), CycNum::root_power(&ctx, 3));
        let t = &q + &q.conj();
        assert_eq!(t.conj(), t);
    }

    #[test]
    fn embedding_values() {
        let c3 = make_context(3).unwrap();
        let z = (CycNum::root_power(&c3, 1) + CycNum::root_power(&c3, 2)).embed();
        assert!((z.re + 1.0).abs() < 1e-12 && z.im.abs() < 1e-12);
        assert_eq!(CycNum::one(&c3).embed(), Complex64::new(1.0, 0.0));
        let c5 = make_context(5).unwrap();
        let g = (CycNum::root_power(&c5, 1) + CycNum::root_power(&c5, 4)).embed();
        assert!((g.re - 0.618_033_988_749_894_8).abs() < 1e-9 && g.im.abs() < 1e-9);
        assert!(complex_embed(&CycNum::one(&c5), 30).is_err());
    }

    #[test]
    fn display_and_repr_round_trip() {
        let ctx = make_context(3).unwrap();
        let q2 = CycNum::root_power(&ctx, 2);
        assert_eq!(q2.to_string(), "-1 - q");
        assert_eq!(CycNum::zero(&ctx).to_string(), "0");
        let x = q2.scale_rational(&BigRational::new(BigInt::from(2), BigInt::from(3)));
        assert_eq!(x.to_string(), "-2/3 - 2/3*q");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"n":3,"coeffs":["-2/3","-2/3"]}"#);
        let back: CycNumRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_cycnum(&ctx).unwrap(), x);
        let bad = CycNumRepr { n: 3, coeffs: vec!["1".into()] };
        assert!(bad.to_cycnum(&ctx).is_err());
    }
}
