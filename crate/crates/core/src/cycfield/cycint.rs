//! Algebraic integers of Z[q] with machine-word coefficients.
//!
//! Eigenvectors, McKay eigenvalues and denominator-cleared idempotent
//! coordinates all live in Z[q] with small coefficients. Working with `i64`
//! limbs in the same canonical power basis as [`CycNum`] avoids big-integer
//! allocation in the hot loops of the exact checks. Every operation is
//! overflow-checked: an overflow poisons the result (and everything computed
//! from it), so callers can fall back to [`CycNum`] instead of trusting a
//! wrapped value.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::cyclotomic::{CycNum, Ctx};
use super::ring::Ring;
use super::sparse::SparseIntMatrix;
use crate::error::{Error, Result};

/// Power-basis reduction data for Z[q] in machine words.
#[derive(Debug)]
pub struct IntBasis {
    ctx: Ctx,
    /// `powers[e]` is q^e in the power basis, for 0 ≤ e < n.
    powers: Vec<Vec<i64>>,
}

impl IntBasis {
    pub fn new(ctx: &Ctx) -> Arc<Self> {
        let powers = (0..ctx.n())
            .map(|e| {
                ctx.reduced_power(e)
                    .iter()
                    .map(|c| c.to_i64().expect("power-basis coefficients of q^e are small"))
                    .collect()
            })
            .collect();
        Arc::new(IntBasis { ctx: ctx.clone(), powers })
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn degree(&self) -> usize {
        self.ctx.degree()
    }
}

/// An element of Z[q] in the power basis `1, q, …, q^{φ(n)−1}`.
#[derive(Clone)]
pub struct CycInt {
    basis: Arc<IntBasis>,
    coeffs: Vec<i64>,
    overflowed: bool,
}

impl CycInt {
    pub fn zero(basis: &Arc<IntBasis>) -> Self {
        CycInt { basis: basis.clone(), coeffs: vec![0; basis.degree()], overflowed: false }
    }

    pub fn from_int(basis: &Arc<IntBasis>, k: i64) -> Self {
        let mut x = Self::zero(basis);
        x.coeffs[0] = k;
        x
    }

    /// q^e.
    pub fn root_power(basis: &Arc<IntBasis>, e: i64) -> Self {
        let s = basis.ctx.residue(e);
        CycInt { basis: basis.clone(), coeffs: basis.powers[s].clone(), overflowed: false }
    }

    /// The same number, if it is an algebraic integer whose coefficients fit.
    pub fn from_cycnum(basis: &Arc<IntBasis>, x: &CycNum) -> Option<Self> {
        if !x.denominator().is_one() {
            return None;
        }
        Self::from_numerators(basis, x.numerators())
    }

    fn from_numerators(basis: &Arc<IntBasis>, num: &[BigInt]) -> Option<Self> {
        let coeffs = num.iter().map(ToPrimitive::to_i64).collect::<Option<Vec<_>>>()?;
        Some(CycInt { basis: basis.clone(), coeffs, overflowed: false })
    }

    /// Scale a vector of field elements by the least common denominator D,
    /// returning D and the integral vector D·v (None if a coefficient
    /// overflows).
    pub fn clear_denominators(basis: &Arc<IntBasis>, v: &[CycNum]) -> Option<(BigInt, Vec<Self>)> {
        let d = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denominator()));
        let scaled = v
            .iter()
            .map(|x| {
                let f = &d / x.denominator();
                let num: Vec<BigInt> = x.numerators().iter().map(|c| c * &f).collect();
                Self::from_numerators(basis, &num)
            })
            .collect::<Option<Vec<_>>>()?;
        Some((d, scaled))
    }

    /// True if some operation leading to this value overflowed.
    pub fn overflowed(&self) -> bool {
        self.overflowed
    }

    /// The value in Q(q). Panics on a poisoned value.
    pub fn to_cycnum(&self) -> CycNum {
        assert!(!self.overflowed, "Z[q] coefficient overflow");
        let num: Vec<BigInt> = self.coeffs.iter().map(|&c| BigInt::from(c)).collect();
        CycNum::from_int_poly(&self.basis.ctx, &num)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Multiply by q^e without a general product.
    pub fn mul_root_power(&self, e: i64) -> Self {
        if self.overflowed {
            return self.clone();
        }
        let n = self.basis.n();
        let s = self.basis.ctx.residue(e);
        let mut shifted = vec![0i128; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            shifted[(i + s) % n] = c as i128;
        }
        self.reduced(&shifted)
    }

    fn poisoned(&self) -> Self {
        CycInt { basis: self.basis.clone(), coeffs: vec![0; self.basis.degree()], overflowed: true }
    }

    /// Build from checked coefficients; any `None` poisons the result.
    fn collect_checked(&self, coeffs: impl Iterator<Item = Option<i64>>) -> Self {
        match coeffs.collect::<Option<Vec<_>>>() {
            Some(coeffs) => CycInt { basis: self.basis.clone(), coeffs, overflowed: false },
            None => self.poisoned(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> Option<i64>) -> Self {
        if self.overflowed || other.overflowed {
            return self.poisoned();
        }
        self.collect_checked(self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f(a, b)))
    }

    /// Fold a residue-indexed polynomial (length n) into the power basis.
    fn reduced(&self, folded: &[i128]) -> Self {
        let d = self.basis.degree();
        let mut out: Vec<i128> = folded[..d].to_vec();
        for (e, &c) in folded.iter().enumerate().skip(d) {
            if c == 0 {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&self.basis.powers[e]) {
                match c.checked_mul(p as i128).and_then(|t| o.checked_add(t)) {
                    Some(v) => *o = v,
                    None => return self.poisoned(),
                }
            }
        }
        self.collect_checked(out.into_iter().map(|c| i64::try_from(c).ok()))
    }
}

/// A·v (v·A when `left`) for an integer matrix and a vector over Z[q],
/// accumulated in flat coefficient rows without per-entry allocation.
/// Overflow poisons the whole result.
pub fn sparse_apply_int(m: &SparseIntMatrix, v: &[CycInt], left: bool) -> Result<Vec<CycInt>> {
    let (inner, outer) = if left { (m.rows(), m.cols()) } else { (m.cols(), m.rows()) };
    if v.len() != inner {
        return Err(Error::ShapeMismatch(format!(
            "{}×{} sparse matrix against a vector of length {}",
            m.rows(),
            m.cols(),
            v.len()
        )));
    }
    let Some(first) = v.first() else {
        return Ok(Vec::new());
    };
    let d = first.basis.degree();
    let poisoned = |len| vec![first.poisoned(); len];
    if v.iter().any(CycInt::overflowed) {
        return Ok(poisoned(outer));
    }
    let mut acc = vec![0i64; outer * d];
    let mut add = |dst: usize, src: &CycInt, a: i64| -> Option<()> {
        let out = &mut acc[dst * d..(dst + 1) * d];
        for (o, &c) in out.iter_mut().zip(&src.coeffs) {
            *o = o.checked_add(c.checked_mul(a)?)?;
        }
        Some(())
    };
    let mut ok = Some(());
    for i in 0..m.rows() {
        for &(j, a) in m.row(i) {
            ok = ok.and_then(|_| if left { add(j, &v[i], a) } else { add(i, &v[j], a) });
        }
    }
    if ok.is_none() {
        return Ok(poisoned(outer));
    }
    Ok(acc
        .chunks(d)
        .map(|c| CycInt { basis: first.basis.clone(), coeffs: c.to_vec(), overflowed: false })
        .collect())
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        !self.overflowed
            && !other.overflowed
            && self.basis.n() == other.basis.n()
            && self.coeffs == other.coeffs
    }
}

impl Eq for CycInt {}

impl std::fmt::Debug for CycInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.overflowed {
            write!(f, "<overflow>")
        } else {
            write!(f, "{}", self.to_cycnum())
        }
    }
}

impl Ring for CycInt {
    fn zero_like(&self) -> Self {
        Self::zero(&self.basis)
    }

    fn one_like(&self) -> Self {
        Self::from_int(&self.basis, 1)
    }

    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }

    fn plus(&self, other: &Self) -> Self {
        self.zip_with(other, i64::checked_add)
    }

    fn minus(&self, other: &Self) -> Self {
        self.zip_with(other, i64::checked_sub)
    }

    fn times(&self, other: &Self) -> Self {
        if self.overflowed || other.overflowed {
            return self.poisoned();
        }
        let n = self.basis.n();
        let mut folded = vec![0i128; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    let k = (i + j) % n;
                    match folded[k].checked_add(a as i128 * b as i128) {
                        Some(v) => folded[k] = v,
                        None => return self.poisoned(),
                    }
                }
            }
        }
        self.reduced(&folded)
    }

    fn negated(&self) -> Self {
        if self.overflowed {
            return self.clone();
        }
        self.collect_checked(self.coeffs.iter().map(|c| c.checked_neg()))
    }

    fn scale_int(&self, k: i64) -> Self {
        if self.overflowed {
            return self.clone();
        }
        self.collect_checked(self.coeffs.iter().map(|c| c.checked_mul(k)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycfield::make_context;

    fn sample(ctx: &Ctx, seed: i64) -> CycNum {
        let coeffs: Vec<BigInt> =
            (0..ctx.degree() as i64).map(|i| BigInt::from((seed * 7 + i * i * 3) % 11 - 5)).collect();
        CycNum::from_int_poly(ctx, &coeffs)
    }

    #[test]
    fn arithmetic_matches_the_rational_field() {
        for n in [3i64, 9, 15] {
            let ctx = make_context(n).unwrap();
            let basis = IntBasis::new(&ctx);
            for s in 0..6 {
                let (x, y) = (sample(&ctx, s), sample(&ctx, s + 3));
                let (a, b) = (
                    CycInt::from_cycnum(&basis, &x).unwrap(),
                    CycInt::from_cycnum(&basis, &y).unwrap(),
                );
                assert_eq!(a.times(&b).to_cycnum(), x.mul_ref(&y));
                assert_eq!(a.plus(&b).to_cycnum(), x.add_ref(&y));
                assert_eq!(a.minus(&b).to_cycnum(), x.sub_ref(&y));
                assert_eq!(a.negated().to_cycnum(), x.neg_ref());
                assert_eq!(a.scale_int(-4).to_cycnum(), x.scale_int(-4));
                assert_eq!(a.mul_root_power(s + 5).to_cycnum(), x.mul_root_power(s + 5));
            }
            assert_eq!(CycInt::root_power(&basis, -1).to_cycnum(), CycNum::root_power(&ctx, -1));
        }
    }

    #[test]
    fn sparse_application_matches_the_generic_path() {
        let ctx = make_context(7).unwrap();
        let basis = IntBasis::new(&ctx);
        let m = crate::cycfield::RingMatrix::from_rows(vec![vec![0, 2, 0], vec![1, 0, -3], vec![4, 0, 5]]).unwrap();
        let m = SparseIntMatrix::from_dense(&m);
        let v: Vec<CycInt> =
            (0..3).map(|s| CycInt::from_cycnum(&basis, &sample(&ctx, s)).unwrap()).collect();
        assert_eq!(sparse_apply_int(&m, &v, false).unwrap(), m.apply(&v).unwrap());
        assert_eq!(sparse_apply_int(&m, &v, true).unwrap(), m.apply_left(&v).unwrap());
        assert!(sparse_apply_int(&m, &v[..2], true).is_err());
        let big = vec![CycInt::from_int(&basis, i64::MAX); 3];
        assert!(sparse_apply_int(&m, &big, false).unwrap().iter().all(CycInt::overflowed));
    }

    #[test]
    fn denominators_clear_to_their_lcm() {
        let ctx = make_context(5).unwrap();
        let basis = IntBasis::new(&ctx);
        let half = CycNum::from_int(&ctx, 1).scale_rational(&num_rational::BigRational::new(1.into(), 2.into()));
        let third = CycNum::root_power(&ctx, 2).scale_rational(&num_rational::BigRational::new(2.into(), 3.into()));
        assert!(CycInt::from_cycnum(&basis, &half).is_none());
        let (d, v) = CycInt::clear_denominators(&basis, &[half.clone(), third.clone()]).unwrap();
        assert_eq!(d, BigInt::from(6));
        assert_eq!(v[0].to_cycnum(), half.scale_int(6));
        assert_eq!(v[1].to_cycnum(), third.scale_int(6));
    }

    #[test]
    fn overflow_poisons_every_later_result() {
        let ctx = make_context(3).unwrap();
        let basis = IntBasis::new(&ctx);
        let one = CycInt::from_int(&basis, 1);
        let big = CycInt::from_int(&basis, i64::MAX);
        let bad = big.plus(&one);
        assert!(bad.overflowed());
        assert!(big.times(&big).overflowed());
        assert!(bad.times(&one.zero_like()).overflowed());
        assert!(one.minus(&bad).overflowed());
        assert_ne!(bad, bad.clone());
        assert!(!big.minus(&one).overflowed());
    }
}
