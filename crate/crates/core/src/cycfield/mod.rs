//! Exact scalars and linear algebra: rationals, the cyclotomic field Q(q),
//! polynomials and dense matrices over a generic commutative ring.

mod cyclotomic;
mod cycint;
pub mod embed;
mod matrix;
mod poly;
mod ring;
mod sparse;

pub use cyclotomic::{
    complex_embed, cyclotomic_polynomial, make_context, CycNum, CycNumRepr, CyclotomicContext, Ctx,
    MAX_EMBED_DIGITS,
};
pub use cycint::{sparse_apply_int, CycInt, IntBasis};
pub use matrix::RingMatrix;
pub use num_bigint::BigInt;
pub use num_complex::Complex64;
pub use num_rational::BigRational;
pub use poly::RingPoly;
pub use ring::{Field, Ring};
pub use sparse::SparseIntMatrix;

/// q^e in the field of `ctx`.
pub fn root_power(ctx: &Ctx, e: i64) -> CycNum {
    CycNum::root_power(ctx, e)
}

#[cfg(test)]
mod proptests;
