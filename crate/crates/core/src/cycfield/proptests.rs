use proptest::prelude::*;

use super::embed::{embed_matrix, numeric_rank};
use super::*;

const ORDERS: [i64; 6] = [3, 5, 7, 9, 11, 13];

fn cyc_strategy(n: i64) -> impl Strategy<Value = CycNum> {
    let ctx = make_context(n).unwrap();
    (
        prop::collection::vec(-6i64..=6, n as usize),
        1i64..=4,
    )
        .prop_map(move |(coeffs, den)| {
            let coeffs: Vec<BigRational> = coeffs
                .into_iter()
                .map(|c| BigRational::new(BigInt::from(c), BigInt::from(den)))
                .collect();
            CycNum::from_coeffs(&ctx, &coeffs)
        })
}

fn matrix3(n: i64) -> impl Strategy<Value = RingMatrix<CycNum>> {
    prop::collection::vec(cyc_strategy(n), 9).prop_map(|d| RingMatrix::new(3, 3, d).unwrap())
}

fn with_order<T: std::fmt::Debug>(
    f: impl Fn(i64) -> BoxedStrategy<T>,
) -> impl Strategy<Value = T> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(f)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(
        (x, y, z) in with_order(|n| (cyc_strategy(n), cyc_strategy(n), cyc_strategy(n)).boxed())
    ) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        // Canonical form: rebuilding from exported coordinates is the identity.
        let ctx = x.context().clone();
        prop_assert_eq!(CycNum::from_coeffs(&ctx, &(&x * &y).coeffs()), &x * &y);
        if !x.is_zero() {
            prop_assert!((&x * &x.invert().unwrap()).is_one());
        }
    }

    #[test]
    fn embedding_is_a_ring_map(
        (x, y) in with_order(|n| (cyc_strategy(n), cyc_strategy(n)).boxed())
    ) {
        prop_assert!(close((&x + &y).embed(), x.embed() + y.embed(), 1e-12));
        prop_assert!(close((&x * &y).embed(), x.embed() * y.embed(), 1e-12));
        prop_assert!(close((-&x).embed(), -x.embed(), 1e-12));
    }

    #[test]
    fn matrix_product_is_associative(
        (a, b, c) in with_order(|n| (matrix3(n), matrix3(n), matrix3(n)).boxed())
    ) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn exact_rank_matches_numeric_rank(
        (k, left, right) in with_order(|n| {
            (
                0usize..=4,
                prop::collection::vec(cyc_strategy(n), 16),
                prop::collection::vec(cyc_strategy(n), 16),
            ).boxed()
        })
    ) {
        // A 4×k times k×4 product has rank at most k.
        let ctx = left[0].context().clone();
        let zero = CycNum::zero(&ctx);
        let l = RingMatrix::from_fn(4, 4, |i, j| if j < k { left[4 * i + j].clone() } else { zero.clone() });
        let r = RingMatrix::new(4, 4, right).unwrap();
        let m = l.mul(&r).unwrap();
        let exact = m.rank_over_field();
        prop_assert!(exact <= k);
        prop_assert_eq!(exact, numeric_rank(&embed_matrix(&m), 1e-9));
        prop_assert_eq!(m.kernel_basis_over_field().len(), 4 - exact);
        for v in m.kernel_basis_over_field() {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(CycNum::is_zero));
        }
    }
}
