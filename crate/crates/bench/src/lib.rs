//! Shared fixtures for the criterion benchmarks: deterministic field
//! elements and Grothendieck-ring vectors at a given order.

use mckay::cycfield::{BigInt, CycInt, IntBasis};
use mckay::{make_context, CycNum, Ctx};

/// Orders exercised by the scaling benchmarks.
pub const ORDERS: [usize; 4] = [5, 7, 9, 11];

pub fn context(n: usize) -> Ctx {
    make_context(n as i64).expect("benchmark orders are odd")
}

/// A dense element of Z[q] with small, seed-dependent coefficients.
pub fn element(ctx: &Ctx, seed: i64) -> CycNum {
    let coeffs: Vec<BigInt> =
        (0..ctx.degree() as i64).map(|i| BigInt::from((seed * 13 + i * i * 7) % 19 - 9)).collect();
    CycNum::from_int_poly(ctx, &coeffs)
}

/// The same element as a machine-word integer.
pub fn int_element(ctx: &Ctx, seed: i64) -> CycInt {
    CycInt::from_cycnum(&IntBasis::new(ctx), &element(ctx, seed)).expect("small coefficients")
}

/// A dense integer vector in the simple basis of G_0(D_n).
pub fn groth_vector(n: usize, seed: i64) -> Vec<i64> {
    (0..(n * n) as i64).map(|i| (seed + i * 5) % 7 - 3).collect()
}
