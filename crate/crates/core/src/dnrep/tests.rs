use super::*;
use crate::cycfield::{make_context, Ctx, CycNum, Ring};

const ORDERS: [usize; 6] = [3, 5, 7, 9, 11, 13];

fn q(ctx: &Ctx, e: i64) -> CycNum {
    CycNum::root_power(ctx, e)
}

fn ctx(n: usize) -> Ctx {
    make_context(n as i64).unwrap()
}

#[test]
fn label_indexing_round_trips() {
    for n in ORDERS {
        for (idx, l) in SimpleLabel::all(n).enumerate() {
            assert_eq!(l.index(n), idx);
            assert_eq!(SimpleLabel::from_index(n, idx), l);
        }
    }
    assert_eq!(SimpleLabel::new(5, 2, -1).unwrap(), SimpleLabel { ell: 2, r: 4 });
    assert!(SimpleLabel::new(5, 0, 0).is_err());
    assert!(SimpleLabel::new(5, 6, 0).is_err());
    assert_eq!(SimpleLabel { ell: 3, r: 1 }.to_string(), "V(3,1)");
}

#[test]
fn duals_and_projective_covers() {
    for n in ORDERS {
        let mut total = 0;
        for l in SimpleLabel::all(n) {
            assert_eq!(dual_label(n, dual_label(n, l)), l, "duality is an involution");
            total += projective_dimension(n, l) * l.ell;
            let comp = projective_composition(n, l);
            if l.ell == n {
                assert_eq!(comp, vec![(l, 1)]);
            } else {
                assert_eq!(comp.len(), 2);
                assert_eq!(comp[1].0.ell, n - l.ell);
                assert_eq!(projective_dimension(n, l), 2 * n);
            }
        }
        // Σ dim P(S)·dim S = dim D_n.
        assert_eq!(total, n.pow(4), "n = {n}");
    }
    // V(1,0) is the trivial module, self-dual; V(2,0)* = V(2,−1).
    assert_eq!(dual_label(5, SimpleLabel { ell: 1, r: 0 }), SimpleLabel { ell: 1, r: 0 });
    assert_eq!(dual_label(5, SimpleLabel { ell: 2, r: 0 }), SimpleLabel { ell: 2, r: 4 });
}

#[test]
fn quantum_scalars() {
    let c = ctx(7);
    assert_eq!(quantum_integer(&c, 3), q(&c, 0) + q(&c, 1) + q(&c, 2));
    assert!(quantum_integer(&c, 7).is_zero());
    // Hand expansion: [4 choose 2] = 1 + q + 2q² + q³ + q⁴.
    let want = q(&c, 0) + q(&c, 1) + q(&c, 2).scale_int(2) + q(&c, 3) + q(&c, 4);
    assert_eq!(quantum_binomial(&c, 4, 2).unwrap(), want);
    for n in [5, 7, 9] {
        let c = ctx(n);
        for ell in 0..n {
            for i in 0..=ell {
                assert_eq!(
                    quantum_binomial(&c, ell, i).unwrap(),
                    quantum_binomial_by_quotient(&c, ell, i).unwrap(),
                    "n={n}, [{ell} choose {i}]"
                );
            }
        }
        // [n choose i] vanishes for 0 < i < n.
        for i in 1..n {
            assert!(quantum_binomial(&c, n, i).unwrap().is_zero());
        }
    }
    assert!(quantum_binomial(&c, 2, 3).is_err());
    assert!(quantum_binomial_by_quotient(&c, 7, 1).is_err());
    // α_1(2) = 1 − q⁻¹, α_0(ℓ) = α_ℓ(ℓ) = 0.
    assert_eq!(alpha(&c, 1, 2), q(&c, 0) - q(&c, -1));
    assert!(alpha(&c, 0, 4).is_zero());
    assert!(alpha(&c, 4, 4).is_zero());
}

#[test]
fn simple_modules_satisfy_all_relations() {
    for n in ORDERS {
        let c = ctx(n);
        let ells: Vec<usize> = if n <= 7 { (1..=n).collect() } else { vec![1, 2, n / 2, n - 1, n] };
        for ell in ells {
            for r in [0, 1, n - 1] {
                let acts = action_set(&c, SimpleLabel { ell, r });
                for (name, ok) in acts.verify_relations() {
                    assert!(ok, "{name} fails on V({ell},{r}), n={n}");
                }
            }
        }
    }
}

#[test]
fn small_modules_explicitly() {
    let c = ctx(5);
    let triv = action_set(&c, SimpleLabel { ell: 1, r: 0 });
    assert!(triv.mat_a.is_zero() && triv.mat_d.is_zero());
    assert!(triv.mat_b.get(0, 0).is_one() && triv.mat_c.get(0, 0).is_one());
    let v = action_set(&c, SimpleLabel { ell: 2, r: 0 });
    assert_eq!(v.mat_b.get(0, 0), &q(&c, 0));
    assert_eq!(v.mat_b.get(1, 1), &q(&c, 1));
    assert_eq!(v.mat_c.get(0, 0), &q(&c, -1));
    assert_eq!(v.mat_c.get(1, 1), &q(&c, 0));
    assert_eq!(v.mat_d.get(0, 1), &(q(&c, 0) - q(&c, -1)));
}

#[test]
fn pbw_commutation_rules() {
    let c = ctx(5);
    let alg = PbwAlgebra::new(&c);
    let ba = alg.word("ba").unwrap();
    assert_eq!(ba.len(), 1);
    assert_eq!(ba.coeff(&Mono::new(1, 1, 0, 0)), Some(&q(&c, 1)));
    // da = q·ad + 1 − bc.
    let da = alg.word("da").unwrap();
    assert_eq!(da.len(), 3);
    assert_eq!(da.coeff(&Mono::new(1, 0, 0, 1)), Some(&q(&c, 1)));
    assert_eq!(da.coeff(&Mono::ONE), Some(&q(&c, 0)));
    assert_eq!(da.coeff(&Mono::new(0, 1, 1, 0)), Some(&-q(&c, 0)));
    assert!(alg.pow(&alg.generator('a').unwrap(), 5).is_zero());
    assert!(alg.pow(&alg.generator('d').unwrap(), 5).is_zero());
    assert_eq!(alg.pow(&alg.generator('b').unwrap(), 5), alg.one());
    assert_eq!(alg.word("bc").unwrap(), alg.word("cb").unwrap());
    assert!(alg.generator('x').is_err());
    assert!(alg.monomial(5, 0, 0, 0).is_err());
}

#[test]
fn pbw_product_matches_matrices() {
    // Oracle: the action matrices of every simple module multiply
    // independently of the normal-ordering rules.
    for n in [3, 5] {
        let c = ctx(n);
        let alg = PbwAlgebra::new(&c);
        let sample = alg.sample_monomials(12);
        let modules: Vec<_> = SimpleLabel::all(n).map(|l| action_set(&c, l)).collect();
        for m1 in &sample {
            for m2 in &sample {
                let x = PbwElem::single(*m1, q(&c, 0));
                let y = PbwElem::single(*m2, q(&c, 0));
                let xy = alg.mul(&x, &y);
                for acts in &modules {
                    assert_eq!(
                        acts.act(&xy),
                        acts.act(&x).mul(&acts.act(&y)).unwrap(),
                        "n={n}, {m1}·{m2} on {}",
                        acts.label
                    );
                }
            }
        }
    }
}

#[test]
fn pbw_product_is_associative() {
    let c = ctx(5);
    let alg = PbwAlgebra::new(&c);
    let sample = alg.sample_monomials(8);
    for m1 in &sample {
        for m2 in &sample {
            for m3 in &sample[..4] {
                let [x, y, z] = [m1, m2, m3].map(|m| PbwElem::single(*m, q(&c, 0)));
                assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
            }
        }
    }
}

#[test]
fn coproduct_of_generators() {
    let c = ctx(5);
    let alg = PbwAlgebra::new(&c);
    let one = q(&c, 0);
    let g = |ch| alg.generator(ch).unwrap();
    let b = Mono::new(0, 1, 0, 0);
    assert_eq!(alg.coproduct(&g('b')), Tensor2::single((b, b), one.clone()));
    let mut dd = Tensor2::single((Mono::new(0, 0, 0, 1), Mono::new(0, 0, 1, 0)), one.clone());
    dd.add_term((Mono::ONE, Mono::new(0, 0, 0, 1)), one.clone());
    assert_eq!(alg.coproduct(&g('d')), dd);
    // Δ(a²) = a²⊗b² + (1+q)·a⊗ab + 1⊗a².
    let mut a2 = Tensor2::single((Mono::new(2, 0, 0, 0), Mono::new(0, 2, 0, 0)), one.clone());
    a2.add_term((Mono::new(1, 0, 0, 0), Mono::new(1, 1, 0, 0)), q(&c, 0) + q(&c, 1));
    a2.add_term((Mono::ONE, Mono::new(2, 0, 0, 0)), one);
    assert_eq!(alg.coproduct(&alg.word("aa").unwrap()), a2);
}

#[test]
fn coproduct_of_powers_is_q_binomial() {
    for n in [5, 7] {
        let c = ctx(n);
        let alg = PbwAlgebra::new(&c);
        for ell in 0..n {
            let mut want = Tensor2::zero();
            for i in 0..=ell {
                want.add_term(
                    (
                        Mono::new((ell - i) as u16, 0, 0, 0),
                        Mono::new(i as u16, (ell - i) as u16, 0, 0),
                    ),
                    quantum_binomial(&c, ell, i).unwrap(),
                );
            }
            let a_pow = alg.monomial(ell, 0, 0, 0).unwrap();
            assert_eq!(alg.coproduct(&a_pow), want, "n={n}, ℓ={ell}");
        }
    }
}

#[test]
fn hopf_axioms_on_sample() {
    for n in [3, 5] {
        let c = ctx(n);
        let alg = PbwAlgebra::new(&c);
        let sample = alg.sample_monomials(20);
        for m in &sample {
            let x = PbwElem::single(*m, q(&c, 0));
            let dx = alg.coproduct(&x);
            assert_eq!(alg.delta_left(&dx), alg.delta_right(&dx), "coassociativity at {m}");
            assert_eq!(alg.counit_left(&dx), x, "(ε⊗id)Δ at {m}");
            assert_eq!(alg.counit_right(&dx), x, "(id⊗ε)Δ at {m}");
        }
        for m1 in &sample[..10] {
            for m2 in &sample[..10] {
                let x = PbwElem::single(*m1, q(&c, 0));
                let y = PbwElem::single(*m2, q(&c, 0));
                assert_eq!(
                    alg.coproduct(&alg.mul(&x, &y)),
                    alg.tensor_mul(&alg.coproduct(&x), &alg.coproduct(&y)),
                    "Δ multiplicative at {m1}·{m2}"
                );
                assert_eq!(alg.counit(&alg.mul(&x, &y)), alg.counit(&x) * alg.counit(&y));
            }
        }
    }
}

#[test]
fn characters_two_routes() {
    for n in [3, 5] {
        let c = ctx(n);
        let table = CharacterTable::new(&c);
        for l in SimpleLabel::all(n) {
            for i in 0..n as i64 {
                for k in 0..n as i64 {
                    for t in 0..n {
                        let m = Monomial::new(n, i, k, t).unwrap();
                        assert_eq!(character(&c, l, m), table.character(l, m), "n={n} {l} {m:?}");
                    }
                }
            }
        }
    }
    let c = ctx(7);
    let table = CharacterTable::new(&c);
    for l in SimpleLabel::all(7).step_by(3) {
        for (i, k, t) in [(1, 2, 1), (3, 0, 2), (6, 5, 3), (0, 0, 6)] {
            let m = Monomial::new(7, i, k, t).unwrap();
            assert_eq!(character(&c, l, m), table.character(l, m), "{l} {m:?}");
            assert_eq!(character_fast(&c, l, m), table.character(l, m));
        }
    }
}

#[test]
fn grouplike_characters() {
    for n in ORDERS {
        let c = ctx(n);
        for l in SimpleLabel::all(n) {
            for (i, k) in [(0, 0), (1, 0), (0, 1), (2, n as i64 - 1), (3, 4)] {
                let closed = grouplike_character_closed(&c, l, i, k);
                assert_eq!(closed, grouplike_character_chebyshev(&c, l, i, k), "n={n} {l} ({i},{k})");
                assert_eq!(
                    closed,
                    CharacterTable::new(&c).character(l, Monomial::grouplike(n, i, k)),
                    "n={n} {l}"
                );
            }
        }
    }
    let c = ctx(5);
    for s in 0..5 {
        for (i, k) in [(1, 3), (2, 2)] {
            assert_eq!(
                grouplike_character_closed(&c, SimpleLabel { ell: 1, r: s }, i, k),
                q(&c, s as i64 * (i - k))
            );
        }
    }
    assert_eq!(
        grouplike_character_closed(&c, SimpleLabel { ell: 2, r: 0 }, 2, 1),
        q(&c, 2) + q(&c, -1)
    );
}

#[test]
fn trace_vectors_on_simples() {
    for n in [3, 5, 7] {
        let c = ctx(n);
        let alg = PbwAlgebra::new(&c);
        let table = CharacterTable::new(&c);
        for i in 0..n as i64 {
            for k in 0..n as i64 {
                // Tr_S(b^i c^k) = Tr_S(b^{−k} c^{−i}).
                assert_eq!(
                    trace_vector_s(&c, Monomial::grouplike(n, i, k)),
                    trace_vector_s(&c, Monomial::grouplike(n, -k, -i)),
                    "n={n} ({i},{k})"
                );
                for t in [1, n - 1] {
                    let m = Monomial::new(n, i, k, t).unwrap();
                    assert_eq!(
                        table.trace_vector_s(m),
                        trace_vector_s_pbw(&alg, &table, &alg.bcda(m)),
                        "normal-ordered route, n={n} {m:?}"
                    );
                }
            }
        }
        // Unbalanced monomials are traceless.
        assert!(table.trace_vector_mono(&Mono::new(1, 2, 0, 0)).iter().all(CycNum::is_zero));
    }
}

#[test]
fn projective_trace_vectors() {
    for n in ORDERS {
        let c = ctx(n);
        for i in 0..n as i64 {
            for k in [-i, 1 - i, 2] {
                assert_eq!(
                    trace_vector_p(&c, i, k),
                    trace_vector_p_by_composition(&c, i, k),
                    "n={n} ({i},{k})"
                );
            }
        }
        assert!(trace_vector_p(&c, 1, 0).iter().all(CycNum::is_zero));
    }
}

#[test]
fn projective_trace_rows_for_order_three() {
    let c = ctx(3);
    let row = |v: &[(i64, i64)]| -> Vec<CycNum> { v.iter().map(|&(m, e)| q(&c, e).scale_int(m)).collect() };
    let reference = [
        row(&[(6, 0), (6, 0), (6, 0), (6, 0), (6, 0), (6, 0), (3, 0), (3, 0), (3, 0)]),
        row(&[(6, 0), (6, 1), (6, 2), (6, 2), (6, 0), (6, 1), (3, 1), (3, 2), (3, 0)]),
        row(&[(6, 0), (6, 2), (6, 1), (6, 1), (6, 0), (6, 2), (3, 2), (3, 1), (3, 0)]),
    ];
    let computed: Vec<_> = (0..3).map(|i| trace_vector_p(&c, i, -i)).collect();
    for p in &reference {
        assert!(computed.contains(p), "reference row {p:?} is a projective trace vector");
    }
    // The row with entries 6, 6q, 6q² in its first block is b²c⁻²'s.
    assert_eq!(computed[2], reference[1]);
    assert_eq!(computed[1], reference[2]);
}

#[test]
fn grouplike_character_needs_the_doubled_weight_exponent() {
    // With ρ = (i−k)/2 and j = (i+k)/2, the prefactor is q^{(2s+ℓ−1)ρ}; the
    // variant q^{(ℓ+s−1)ρ} agrees only when sρ ≡ 0.
    use crate::chebyshev::{cheb_eval, ChebKind};
    let n = 3;
    let c = ctx(n);
    let l = SimpleLabel { ell: 1, r: 1 };
    let (i, k) = (1i64, 0i64);
    let half = 2i64; // 2⁻¹ mod 3
    let (j, rho) = ((i + k) * half, (i - k) * half);
    let t = q(&c, j) + q(&c, -j);
    let variant = cheb_eval(ChebKind::U, 0, &t).mul_root_power((l.ell as i64 + l.r as i64 - 1) * rho);
    let actual = grouplike_character_closed(&c, l, i, k);
    assert_eq!(actual, q(&c, 1));
    assert_ne!(variant, actual);
    assert_eq!(grouplike_character_chebyshev(&c, l, i, k), actual);
}
