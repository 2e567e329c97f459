//! Dense univariate polynomials over a commutative ring.

use std::fmt;

use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of tⁱ; trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq)]
pub struct RingPoly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> RingPoly<R> {
    pub fn new(coeffs: Vec<R>) -> Self {
        let mut p = RingPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        RingPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// c·t^k.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The linear polynomial t − a.
    pub fn linear_root(a: &R) -> Self {
        Self::new(vec![a.negated(), a.one_like()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Ring::is_zero_elem) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of t^k (zero past the degree; `None` only if the polynomial
    /// is zero and no prototype element is available).
    pub fn coeff(&self, k: usize) -> Option<R> {
        match self.coeffs.get(k) {
            Some(c) => Some(c.clone()),
            None => self.coeffs.first().map(Ring::zero_like),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Ring::is_one_elem)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o = o.plus(s);
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        RingPoly {
            coeffs: self.coeffs.iter().map(Ring::negated).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero_elem() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.times(c)).collect())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.scale_int(k)).collect())
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![self.coeffs[0].zero_like(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RingPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let Some(c0) = self.coeffs.first() else {
            assert!(e > 0, "the zero polynomial carries no ring element to build 1 from");
            return Self::zero();
        };
        (0..e).fold(Self::constant(c0.one_like()), |acc, _| acc.mul(self))
    }

    /// Horner evaluation at `point`.
    pub fn eval(&self, point: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(point.zero_like(), |acc, c| acc.times(point).plus(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale_int(i as i64))
                .collect(),
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RingPoly<S> {
        RingPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Division with remainder by a divisor whose leading coefficient is one.
    /// Works over any ring.
    pub fn div_rem_monic(&self, divisor: &Self) -> Result<(Self, Self)> {
        if !divisor.is_monic() {
            return Err(Error::InvalidArgument("divisor is not monic".into()));
        }
        self.div_rem_with(divisor, |c| Some(c.clone()))
    }

    fn div_rem_with(
        &self,
        divisor: &Self,
        divide_by_lead: impl Fn(&R) -> Option<R>,
    ) -> Result<(Self, Self)> {
        let db = divisor
            .degree()
            .ok_or_else(|| Error::InvalidArgument("division by the zero polynomial".into()))?;
        let Some(da) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if da < db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![rem[0].zero_like(); da - db + 1];
        for i in (0..=da - db).rev() {
            let c = divide_by_lead(&rem[i + db])
                .ok_or_else(|| Error::InvalidArgument("leading coefficient not invertible".into()))?;
            if c.is_zero_elem() {
                continue;
            }
            for (j, bj) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].minus(&c.times(bj));
            }
            quot[i] = c;
        }
        rem.truncate(db);
        Ok((Self::new(quot), Self::new(rem)))
    }
}

impl<R: Field> RingPoly<R> {
    /// Division with remainder; the divisor's leading coefficient must be
    /// invertible (automatic over a field unless the divisor is zero).
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead_inv = divisor
            .leading()
            .ok_or_else(|| Error::InvalidArgument("division by the zero polynomial".into()))?
            .inverse()
            .ok_or_else(|| Error::InvalidArgument("leading coefficient not invertible".into()))?;
        self.div_rem_with(divisor, |c| Some(c.times(&lead_inv)))
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.inverse().expect("nonzero leading coefficient")),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = std::mem::replace(&mut b, r);
        }
        a.make_monic()
    }
}

impl<R: Ring> fmt::Debug for RingPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingPoly{:?}", self.coeffs)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for RingPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero_elem() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        Ok(())
    }
}
