//! Minimal commutative-ring and field abstractions shared by polynomials and
//! matrices.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative ring with identity whose elements carry enough context to
/// build their own zero and one (cyclotomic numbers need the field they live
/// in).
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;

    /// Multiply by a machine integer.
    fn scale_int(&self, k: i64) -> Self;

    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }

    /// The image of an integer under the unique ring map from Z.
    fn from_int_like(&self, k: i64) -> Self {
        self.one_like().scale_int(k)
    }

    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;

    fn divided(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.times(&inv))
    }
}

/// Machine integers; every operation is overflow-checked because a silent wrap
/// would corrupt a multiplicity.
impl Ring for i64 {
    fn zero_like(&self) -> Self {
        0
    }
    fn one_like(&self) -> Self {
        1
    }
    fn is_zero_elem(&self) -> bool {
        *self == 0
    }
    fn plus(&self, other: &Self) -> Self {
        self.checked_add(*other).expect("i64 overflow in addition")
    }
    fn minus(&self, other: &Self) -> Self {
        self.checked_sub(*other).expect("i64 overflow in subtraction")
    }
    fn times(&self, other: &Self) -> Self {
        self.checked_mul(*other).expect("i64 overflow in multiplication")
    }
    fn negated(&self) -> Self {
        self.checked_neg().expect("i64 overflow in negation")
    }
    fn scale_int(&self, k: i64) -> Self {
        self.times(&k)
    }
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scale_int(&self, k: i64) -> Self {
        self * BigInt::from(k)
    }
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scale_int(&self, k: i64) -> Self {
        self * BigRational::from_integer(BigInt::from(k))
    }
}

impl Field for BigRational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_by_squaring_matches_repeated_product() {
        assert_eq!(3i64.pow_u(0), 1);
        assert_eq!(3i64.pow_u(5), 243);
        let r = BigRational::new(BigInt::from(2), BigInt::from(3));
        assert_eq!(
            r.pow_u(3),
            BigRational::new(BigInt::from(8), BigInt::from(27))
        );
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn i64_overflow_is_loud() {
        let _ = i64::MAX.plus(&1);
    }

    #[test]
    fn rational_inverse() {
        let r = BigRational::new(BigInt::from(-4), BigInt::from(6));
        assert_eq!(r.inverse().unwrap(), BigRational::new(BigInt::from(-3), BigInt::from(2)));
        assert!(BigRational::zero().inverse().is_none());
    }
}
