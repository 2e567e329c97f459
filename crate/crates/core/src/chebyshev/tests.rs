use super::*;
use crate::cycfield::{make_context, CycNum};

const ORDERS: [usize; 6] = [3, 5, 7, 9, 11, 13];

fn zpoly(c: &[i64]) -> RingPoly<BigInt> {
    RingPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
}

fn ints(c: &[i64]) -> Vec<BigInt> {
    c.iter().map(|&x| BigInt::from(x)).collect()
}

/// t = x + x⁻¹ with x = q^j.
fn t_of(ctx: &crate::cycfield::Ctx, j: i64) -> CycNum {
    CycNum::root_power(ctx, j) + CycNum::root_power(ctx, -j)
}

#[test]
fn low_degree_polynomials() {
    assert_eq!(cheb_poly(ChebKind::U, 0), zpoly(&[1]));
    assert_eq!(cheb_poly(ChebKind::U, 2), zpoly(&[-1, 0, 1]));
    assert_eq!(cheb_poly(ChebKind::L, 2), zpoly(&[-2, 0, 1]));
    assert_eq!(cheb_poly(ChebKind::W, 1), zpoly(&[1, 1]));
    assert_eq!(cheb_poly(ChebKind::V, 1), zpoly(&[-1, 1]));
    for kind in ChebKind::ALL {
        for k in 0..15 {
            let p = cheb_poly(kind, k);
            assert_eq!(p.degree(), Some(k), "{kind:?}_{k}");
            assert!(p.is_monic() || (kind == ChebKind::L && k == 0));
        }
    }
}

#[test]
fn values_at_two() {
    for k in 0..=12 {
        assert_eq!(cheb_eval(ChebKind::U, k, &2i64), k as i64 + 1);
        assert_eq!(cheb_eval(ChebKind::L, k, &2i64), 2);
        assert_eq!(cheb_eval(ChebKind::V, k, &2i64), 1);
        assert_eq!(cheb_eval(ChebKind::W, k, &2i64), 2 * k as i64 + 1);
    }
}

#[test]
fn evaluation_agrees_with_coefficients() {
    for kind in ChebKind::ALL {
        for k in 0..12 {
            let p = cheb_poly(kind, k);
            for t in -3i64..=3 {
                assert_eq!(p.eval(&BigInt::from(t)), BigInt::from(cheb_eval(kind, k, &t)));
            }
        }
    }
}

#[test]
fn kind_parsing() {
    assert_eq!("u".parse::<ChebKind>().unwrap(), ChebKind::U);
    assert_eq!("V".parse::<ChebKind>().unwrap(), ChebKind::V);
    assert!("T".parse::<ChebKind>().is_err());
}

#[test]
fn cross_family_identities() {
    let u = |k: usize| cheb_poly(ChebKind::U, k);
    for k in 1..=14 {
        assert_eq!(cheb_poly(ChebKind::W, k), u(k).add(&u(k - 1)), "W_{k}");
        assert_eq!(cheb_poly(ChebKind::V, k), u(k).sub(&u(k - 1)), "V_{k}");
        assert_eq!(
            cheb_poly(ChebKind::L, k),
            cheb_poly(ChebKind::V, k).add(&cheb_poly(ChebKind::V, k - 1)),
            "L_{k} as V sum"
        );
        if k >= 2 {
            assert_eq!(cheb_poly(ChebKind::L, k), u(k).sub(&u(k - 2)), "L_{k}");
        }
    }
}

/// The third-kind recursion with a plus sign, K_k = tK_{k−1} + K_{k−2} from
/// seeds 1, t − 1, is not compatible with 𝒱_k = 𝒰_k − 𝒰_{k−1}; the library
/// therefore uses the minus-sign recursion shared by all four families.
#[test]
fn plus_sign_third_kind_recursion_breaks_difference_identity() {
    let t = zpoly(&[0, 1]);
    let plus_v2 = t.mul(&zpoly(&[-1, 1])).add(&zpoly(&[1]));
    let diff_v2 = cheb_poly(ChebKind::U, 2).sub(&cheb_poly(ChebKind::U, 1));
    assert_ne!(plus_v2, diff_v2);
    assert_eq!(cheb_poly(ChebKind::V, 2), diff_v2);
}

#[test]
fn functional_equations_on_roots_of_unity() {
    for n in ORDERS {
        let ctx = make_context(n as i64).unwrap();
        for j in 0..n as i64 {
            let x = CycNum::root_power(&ctx, j);
            let xinv = CycNum::root_power(&ctx, -j);
            let t = &x + &xinv;
            let us = cheb_values(ChebKind::U, n + 1, &t);
            let ls = cheb_values(ChebKind::L, n + 1, &t);
            let ws = cheb_values(ChebKind::W, n + 1, &t);
            for k in 0..=n + 1 {
                let ke = k as i64;
                assert_eq!(
                    &us[k] * &(&x - &xinv),
                    CycNum::root_power(&ctx, j * (ke + 1)) - CycNum::root_power(&ctx, -j * (ke + 1)),
                    "U_{k}, n={n}, j={j}"
                );
                assert_eq!(
                    ls[k],
                    CycNum::root_power(&ctx, j * ke) + CycNum::root_power(&ctx, -j * ke),
                    "L_{k}, n={n}, j={j}"
                );
                assert_eq!(
                    (&ws[k] * &(&x - &CycNum::one(&ctx))).mul_root_power(j * ke),
                    CycNum::root_power(&ctx, j * (2 * ke + 1)) - CycNum::one(&ctx),
                    "W_{k}, n={n}, j={j}"
                );
            }
        }
    }
}

#[test]
fn vanishing_at_roots_of_unity() {
    let ctx = make_context(7).unwrap();
    for j in 1..=3 {
        let t = t_of(&ctx, j);
        assert!(cheb_eval(ChebKind::U, 6, &t).is_zero());
        assert!(cheb_eval(ChebKind::U, 7, &t).is_one());
    }
    let ctx5 = make_context(5).unwrap();
    assert_eq!(
        cheb_eval(ChebKind::L, 3, &t_of(&ctx5, 1)),
        CycNum::root_power(&ctx5, 3) + CycNum::root_power(&ctx5, -3)
    );
    for n in ORDERS {
        let ctx = make_context(n as i64).unwrap();
        let h = (n - 1) / 2;
        for j in 1..=h as i64 {
            let t = t_of(&ctx, j);
            assert!(cheb_eval(ChebKind::W, h, &t).is_zero(), "W_h root, n={n}, j={j}");
            assert_eq!(
                cheb_eval(ChebKind::V, h + 1, &t),
                cheb_eval(ChebKind::V, h - 1, &t),
                "V_(h±1), n={n}, j={j}"
            );
            assert_eq!(
                cheb_eval(ChebKind::L, h, &t),
                cheb_eval(ChebKind::L, h + 1, &t),
                "L_h = L_(h+1), n={n}, j={j}"
            );
        }
    }
}

#[test]
fn trigonometric_oracle() {
    // Independent route: 𝒰_k(2cos θ) = sin((k+1)θ)/sin θ, ℒ_k(2cos θ) = 2cos(kθ).
    for k in 0..20 {
        for theta in [0.3f64, 1.1, 2.5] {
            let t = 2.0 * theta.cos();
            let u = cheb_poly(ChebKind::U, k);
            let l = cheb_poly(ChebKind::L, k);
            let eval = |p: &RingPoly<BigInt>| {
                p.coeffs()
                    .iter()
                    .rev()
                    .fold(0.0, |acc, c| acc * t + i64::try_from(c).unwrap() as f64)
            };
            let want_u = ((k + 1) as f64 * theta).sin() / theta.sin();
            assert!((eval(&u) - want_u).abs() < 1e-6 * (1.0 + want_u.abs()));
            let want_l = 2.0 * (k as f64 * theta).cos();
            assert!((eval(&l) - want_l).abs() < 1e-6);
        }
    }
}

#[test]
fn bivariate_small_cases() {
    assert_eq!(u_bivariate(0), BivariatePoly::term(BigInt::one(), 0, 0));
    let u2 = u_bivariate(2);
    assert_eq!(u2.coeff(2, 0), BigInt::from(1));
    assert_eq!(u2.coeff(0, 1), BigInt::from(-1));
    assert_eq!(u2.to_string(), "t^2 - D");
    // Oracle: expand (tU₃ − DU₂) by hand from U₃ = t³ − 2Dt.
    let u4 = u_bivariate(4);
    assert_eq!(u4.to_string(), "t^4 - 3*D*t^2 + D^2");
    for k in 0..=30 {
        assert_eq!(u_bivariate(k), u_bivariate_closed(k), "k = {k}");
        assert_eq!(
            u_bivariate(k).specialize_d(&BigInt::one()),
            cheb_poly(ChebKind::U, k),
            "D = 1 specialization, k = {k}"
        );
    }
}

#[test]
fn block_polynomial_table() {
    let table: [(usize, &[i64]); 6] = [
        (3, &[1, -3]),
        (5, &[1, -5, 5]),
        (7, &[1, -7, 14, -7]),
        (9, &[1, -9, 27, -30, 9]),
        (11, &[1, -11, 44, -77, 55, -11]),
        (13, &[1, -13, 65, -156, 182, -91, 13]),
    ];
    for (n, diag) in table {
        let p = p_n_bivariate(n).unwrap();
        assert_eq!(p.diagonal_coeffs(n), ints(diag), "n = {n}");
        assert_eq!(p.coeff(0, 0), BigInt::from(-2), "constant, n = {n}");
        assert_eq!(p.terms().count(), diag.len() + 1, "no stray terms, n = {n}");
        assert_eq!(p, p_n_closed(n).unwrap(), "closed form, n = {n}");
    }
    assert_eq!(p_n_bivariate(3).unwrap().to_string(), "t^3 - 3*D*t - 2");
    assert!(p_n_bivariate(4).is_err());
    assert!(p_n_closed(1).is_err());
}

#[test]
fn block_polynomial_factors() {
    for n in ORDERS.into_iter().chain([15, 17, 21]) {
        assert!(p_n_factor_check(n).unwrap(), "n = {n}");
    }
    // n = 3: (t − 2)(t + 1)².
    let p = p_n_bivariate(3).unwrap().specialize_d(&BigInt::one());
    assert_eq!(p, zpoly(&[-2, 1]).mul(&zpoly(&[1, 1]).pow(2)));
    assert!(p_n_factor_check(6).is_err());
}
