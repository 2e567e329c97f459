use super::*;
use crate::chebyshev::p_n_bivariate;
use crate::cycfield::{make_context, CycNum, Ring, RingPoly};
use crate::dnrep::{trace_vector_p, trace_vector_s, CharacterTable, Monomial, SimpleLabel};
use crate::grring::{cartan_matrix, mckay_block_form, projective_dims, simple_dims, GrothRing};

const ORDERS: [usize; 6] = [3, 5, 7, 9, 11, 13];

fn mckay(n: usize) -> SparseIntMatrix {
    SparseIntMatrix::from_dense(&mckay_block_form(n))
}

fn ints(ctx: &Ctx, v: &[i64]) -> Vec<CycNum> {
    v.iter().map(|&x| CycNum::from_int(ctx, x)).collect()
}

/// (coefficient, exponent of q) pairs, scaled by 1/den.
fn qvec(ctx: &Ctx, den: i64, v: &[(i64, i64)]) -> Vec<CycNum> {
    let inv = CycNum::from_int(ctx, den).invert().unwrap();
    v.iter()
        .map(|&(c, e)| CycNum::from_int(ctx, c).mul_root_power(e) * &inv)
        .collect()
}

#[test]
fn index_maps_are_mutually_inverse() {
    for n in ORDERS {
        assert_eq!(EigIndex::all(n).len(), n * (n + 1) / 2);
        for idx in EigIndex::all(n) {
            let (i, k) = idx.to_grouplike(n);
            assert_eq!(index_from_grouplike(n, i as i64, k as i64), idx, "n={n} {idx}");
        }
        // Every grouplike pair lands on some index, and (i,k), (−k,−i) agree.
        for i in 0..n as i64 {
            for k in 0..n as i64 {
                assert_eq!(index_from_grouplike(n, i, k), index_from_grouplike(n, -k, -i));
            }
        }
    }
}

#[test]
fn eigenvalues_are_pairwise_distinct() {
    for n in ORDERS {
        let ctx = make_context(n as i64).unwrap();
        let lams: std::collections::HashSet<CycNum> =
            EigIndex::all(n).into_iter().map(|i| lambda_of(&ctx, i)).collect();
        assert_eq!(lams.len(), n * (n + 1) / 2, "n={n}");
    }
    let ctx = make_context(5).unwrap();
    assert_eq!(lambda_of(&ctx, EigIndex { j: 0, r: 0 }), CycNum::from_int(&ctx, 2));
    // (i,k) = (1,0): λ = q + 1.
    let idx = index_from_grouplike(5, 1, 0);
    assert_eq!(lambda_of(&ctx, idx), CycNum::root_power(&ctx, 1) + CycNum::one(&ctx));
}

#[test]
fn certificates_hold_for_every_index() {
    for n in ORDERS {
        let ctx = make_context(n as i64).unwrap();
        let m = mckay(n);
        let certs = all_certificates(&ctx, &m).unwrap();
        for c in &certs {
            assert!(c.holds(), "n={n} {}: {:?}", c.index, (c.right_ok, c.left_ok, c.gen_right_ok, c.gen_left_ok));
            assert_eq!(c.gen_right.is_some(), c.index.j != 0);
            assert!(oracle::certificate_residual(&m, c) < 1e-9, "oracle n={n} {}", c.index);
        }
        let comp = completeness(&ctx, &certs);
        assert!(comp.holds(), "n={n} {comp:?}");
        if n <= 7 {
            assert!(biorthogonality(&ctx, &certs).holds(), "n={n}");
        }
    }
}

#[test]
fn dimension_vectors_are_the_trivial_eigenvectors() {
    for n in ORDERS {
        let ctx = make_context(n as i64).unwrap();
        let idx = EigIndex { j: 0, r: 0 };
        assert_eq!(right_eigvec(&ctx, idx), ints(&ctx, &simple_dims(n)));
        let inv_n = CycNum::from_int(&ctx, n as i64).invert().unwrap();
        let p: Vec<CycNum> = projective_dims(n).iter().map(|&x| CycNum::from_int(&ctx, x) * &inv_n).collect();
        assert_eq!(left_eigvec(&ctx, idx), p);
    }
}

#[test]
fn last_block_vanishes_off_the_simple_eigenvalues() {
    for n in ORDERS {
        let ctx = make_context(n as i64).unwrap();
        for idx in EigIndex::all(n).into_iter().filter(|i| i.j != 0) {
            let v = right_eigvec(&ctx, idx);
            assert!(v[(n - 1) * n..].iter().all(CycNum::is_zero), "n={n} {idx}");
        }
    }
}

#[test]
fn generalized_vectors_are_rejected_at_j_zero() {
    let ctx = make_context(5).unwrap();
    assert!(gen_right_eigvec(&ctx, EigIndex { j: 0, r: 2 }).is_err());
    assert!(gen_left_eigvec(&ctx, EigIndex { j: 0, r: 2 }).is_err());
}

#[test]
fn generalized_right_vector_n3_by_hand() {
    // n = 3, (j,r) = (1,0): λ = −1; apply M twice to reach zero.
    let ctx = make_context(3).unwrap();
    let m = mckay(3);
    let idx = EigIndex { j: 1, r: 0 };
    let x = gen_right_eigvec(&ctx, idx).unwrap();
    let lam = lambda_of(&ctx, idx);
    assert_eq!(lam, CycNum::from_int(&ctx, -1));
    let shift = |v: &[CycNum]| -> Vec<CycNum> {
        m.apply(v).unwrap().iter().zip(v).map(|(a, b)| a - &(&lam * b)).collect()
    };
    let once = shift(&x);
    assert_eq!(once, right_eigvec(&ctx, idx));
    assert!(shift(&once).iter().all(CycNum::is_zero));
    // Blocks: x_0 = v_0, x_1 = 𝒰_1 v_0 + v_0 = 0·v_0 with 𝒰_1(−1) = −1.
    assert_eq!(&x[..3], &ints(&ctx, &[1, 1, 1])[..]);
    assert_eq!(&x[3..6], &ints(&ctx, &[0, 0, 0])[..]);
}

#[test]
fn simple_trace_vectors_are_right_eigenvectors() {
    for n in ORDERS {
        let ctx = make_context(n as i64).unwrap();
        for i in 0..n as i64 {
            for k in 0..n as i64 {
                let idx = index_from_grouplike(n, i, k);
                let tr = trace_vector_s(&ctx, Monomial::grouplike(n, i, k));
                assert_eq!(tr, right_eigvec(&ctx, idx), "n={n} (i,k)=({i},{k})");
            }
        }
    }
}

#[test]
fn mckay_matrices_of_all_simples_share_the_eigenvectors() {
    for n in [3, 5, 7] {
        let ctx = make_context(n as i64).unwrap();
        let ring = GrothRing::new(n).unwrap();
        let mats = ring.all_mckay_sparse();
        let proj: Vec<SparseIntMatrix> = SimpleLabel::all(n)
            .map(|l| SparseIntMatrix::from_dense(&ring.projective_mckay(l)))
            .collect();
        for idx in EigIndex::all(n) {
            let v = right_eigvec(&ctx, idx);
            let w = left_eigvec(&ctx, idx);
            for (l, (mv, qv)) in SimpleLabel::all(n).zip(mats.iter().zip(&proj)) {
                let mu = general_eigvalue(&ctx, idx, l.ell, l.r);
                let scaled = |x: &[CycNum]| x.iter().map(|a| &mu * a).collect::<Vec<_>>();
                assert_eq!(mv.apply(&v).unwrap(), scaled(&v), "n={n} {idx} {l} right");
                assert_eq!(mv.apply_left(&w).unwrap(), scaled(&w), "n={n} {idx} {l} left");
                let nu = projective_eigvalue(&ctx, idx, l.ell, l.r);
                let vq: Vec<CycNum> = v.iter().map(|a| &nu * a).collect();
                assert_eq!(qv.apply_left(&v).unwrap(), vq, "n={n} {idx} {l} projective");
            }
        }
    }
}

#[test]
fn general_eigenvalue_special_cases() {
    let ctx = make_context(7).unwrap();
    for idx in EigIndex::all(7) {
        assert_eq!(general_eigvalue(&ctx, idx, 2, 0), lambda_of(&ctx, idx));
        if idx.j == 0 {
            for (ell, s) in [(1, 3), (4, 2), (7, 6)] {
                let want = CycNum::from_int(&ctx, ell as i64)
                    .mul_root_power((ell as i64 - 1 + 2 * s as i64) * idx.r as i64);
                assert_eq!(general_eigvalue(&ctx, idx, ell, s), want);
            }
        }
    }
}

#[test]
fn cartan_image_of_an_eigenvector_is_a_projective_eigenvector() {
    for n in [3, 5, 7, 9] {
        let ctx = make_context(n as i64).unwrap();
        let ring = GrothRing::new(n).unwrap();
        let c = SparseIntMatrix::from_dense(&cartan_matrix(n));
        let q = SparseIntMatrix::from_dense(&ring.projective_mckay(SimpleLabel { ell: 2, r: 0 }));
        for idx in EigIndex::all(n) {
            let cv = c.apply(&right_eigvec(&ctx, idx)).unwrap();
            let lam = lambda_of(&ctx, idx);
            let want: Vec<CycNum> = cv.iter().map(|a| &lam * a).collect();
            assert_eq!(q.apply(&cv).unwrap(), want, "n={n} {idx}");
        }
    }
}

#[test]
fn block_charpoly_three_routes() {
    for n in ORDERS {
        let ctx = make_context(n as i64).unwrap();
        let pn = p_n_bivariate(n).unwrap();
        let mut degree = 0;
        for k in 0..n {
            let rec = block_charpoly(&ctx, k);
            assert_eq!(rec, pn.specialize_d(&CycNum::root_power(&ctx, k as i64)), "n={n} k={k}");
            if n <= 9 {
                assert_eq!(rec, block_charpoly_berkowitz(&ctx, k).unwrap(), "Berkowitz n={n} k={k}");
            }
            degree += rec.degree().unwrap();
            assert!(multiplicity_check(&ctx, k).unwrap().holds(), "n={n} k={k}");
        }
        assert_eq!(degree, n * n);
    }
    // n = 7 written out.
    let ctx = make_context(7).unwrap();
    for k in 0..7 {
        let d = |e: i64, c: i64| CycNum::from_int(&ctx, c).mul_root_power(e * k as i64);
        let z = CycNum::zero(&ctx);
        let want = RingPoly::new(vec![
            CycNum::from_int(&ctx, -2),
            d(3, -7),
            z.clone(),
            d(2, 14),
            z.clone(),
            d(1, -7),
            z,
            CycNum::one(&ctx),
        ]);
        assert_eq!(block_charpoly(&ctx, k), want);
    }
    // n = 3, k = 0: (t − 2)(t + 1)².
    let ctx = make_context(3).unwrap();
    let want = RingPoly::new(ints(&ctx, &[-2, 1]))
        .mul(&RingPoly::new(ints(&ctx, &[1, 1])))
        .mul(&RingPoly::new(ints(&ctx, &[1, 1])));
    assert_eq!(block_charpoly(&ctx, 0), want);
}

#[test]
fn bcda_identity_and_generalized_trace_vectors() {
    for n in [3, 5, 7] {
        let ctx = make_context(n as i64).unwrap();
        let table = CharacterTable::new(&ctx);
        let m = mckay(n);
        for i in 0..n {
            for k in 0..n {
                for ell in 0..n {
                    assert!(bcda_identity(&table, &m, i, k, ell).unwrap(), "n={n} ({i},{k}) ℓ={ell}");
                }
                if (i + k) % n == 0 {
                    assert!(gen_trace_combination(&table, &m, i, k).is_err());
                    continue;
                }
                let g = gen_trace_combination(&table, &m, i, k).unwrap();
                assert!(g.in_span(), "n={n} ({i},{k})");
                assert!(g.gammas.last().unwrap().is_one());
                assert_eq!(g.gammas.len(), g.s);
            }
        }
    }
}

#[test]
fn generalized_trace_vector_n3_lies_in_the_generalized_eigenspace() {
    let ctx = make_context(3).unwrap();
    let table = CharacterTable::new(&ctx);
    let m = mckay(3);
    let g = gen_trace_combination(&table, &m, 1, 0).unwrap();
    assert_eq!(g.s, 2);
    let shift = |v: &[CycNum]| -> Vec<CycNum> {
        m.apply(v).unwrap().iter().zip(v).map(|(a, b)| a - &(&g.lambda * b)).collect()
    };
    let once = shift(&g.vector);
    assert!(once.iter().any(|x| !x.is_zero()), "a genuine generalized eigenvector");
    assert!(shift(&once).iter().all(CycNum::is_zero));
}

#[test]
fn fusion_matrix_two_routes_and_eigenvectors() {
    for n in ORDERS {
        let ctx = make_context(n as i64).unwrap();
        let nv = fusion_matrix_from_rules(n);
        assert_eq!(nv, fusion_matrix_block_form(n), "n={n}");
        let sparse = SparseIntMatrix::from_dense(&nv);
        for idx in EigIndex::all(n) {
            let c = FusionCertificate::new(&ctx, &sparse, idx).unwrap();
            assert!(c.holds(), "n={n} {idx}: {:?}", (c.right_ok, c.left_ok));
        }
    }
    let n3 = fusion_matrix_block_form(3);
    assert_eq!(n3.row(3), vec![0, 2, 0, 0, 0, 1]);
    assert_eq!(n3.row(0), vec![0, 0, 0, 1, 0, 0]);
}

#[test]
fn idempotent_family_structure() {
    for n in [3, 5, 7] {
        let ctx = make_context(n as i64).unwrap();
        let ring = GrothRing::new(n).unwrap();
        let fam = IdempotentFamily::new(&ctx).unwrap();
        let rep = groth_structure_check(&ring, &fam, &mckay(n), 4).unwrap();
        assert!(rep.holds(n), "n={n} {rep:?}");
        // E_u are orthogonal idempotents summing to one.
        let one = {
            let mut v = vec![CycNum::zero(&ctx); n * n];
            v[0] = CycNum::one(&ctx);
            v
        };
        let mut total = vec![CycNum::zero(&ctx); n * n];
        for u in 0..n {
            let e = fam.e_u(&ring, u);
            assert_eq!(ring.multiply_groth(&e, &e), e, "E_{u}² = E_{u}");
            total = total.iter().zip(&e).map(|(a, b)| a + b).collect();
        }
        assert_eq!(total, one);
    }
}

#[test]
fn eigen_idempotent_constants() {
    for n in [3, 5] {
        let ctx = make_context(n as i64).unwrap();
        let ring = GrothRing::new(n).unwrap();
        let fam = IdempotentFamily::new(&ctx).unwrap();
        let mats = ring.all_mckay_sparse();
        for e in &fam.entries {
            let u = fam.coords(&ring, e.slice, &e.idempotent);
            let rep = eigenidem_check(&ring, &mats, &u, true).unwrap();
            if e.index.j == 0 {
                assert!(rep.holds(), "n={n} {}", e.index);
                assert!(rep.c_u.is_one());
            } else {
                // x·G′ = λG′ + ϑ⁻¹F: not a simultaneous eigenvector.
                assert_eq!(rep.common_eigen, Some(false), "n={n} {}", e.index);
                let u = fam.coords(&ring, e.slice, &e.f);
                let rep = eigenidem_check(&ring, &mats, &u, true).unwrap();
                assert!(rep.holds());
                assert!(rep.c_u.is_zero());
            }
        }
    }
}

#[test]
fn n3_idempotent_values() {
    let ctx = make_context(3).unwrap();
    let ring = GrothRing::new(3).unwrap();
    let fam = IdempotentFamily::new(&ctx).unwrap();
    let q = |e: i64| CycNum::root_power(&ctx, e);
    for r in 0..3i64 {
        assert_eq!(fam.xi[r as usize], q(2 * r).scale_int(9));
        let e1 = fam.entry(EigIndex { j: 1, r: r as usize });
        assert_eq!(e1.theta.as_ref().unwrap(), &q(r).scale_int(-3));
        assert!(e1.nu.as_ref().unwrap().is_one());
        // ξ⁻¹F_{0,r} = (1/9)(q^r x² + 2q^{2r}x + 1).
        let e0 = fam.entry(EigIndex { j: 0, r: r as usize });
        assert_eq!(
            e0.idempotent,
            RingPoly::new(qvec(&ctx, 9, &[(1, 0), (2, 2 * r), (1, r)]))
        );
        // Coordinates f_{1,r} and g_{1,r}.
        let f1 = fam.coords(&ring, e1.slice, &e1.f);
        let want_f = qvec(
            &ctx,
            3,
            &[(-1, 2 * r), (-1, 0), (-1, r), (-1, r), (-1, 2 * r), (-1, 0), (1, 0), (1, r), (1, 2 * r)],
        );
        assert_eq!(f1, want_f, "f_1,{r}");
        let g1 = fam.coords(&ring, e1.slice, e1.g.as_ref().unwrap());
        let want_g = qvec(
            &ctx,
            3,
            &[(-2, r), (-2, 2 * r), (-2, 0), (1, 0), (1, r), (1, 2 * r), (0, 0), (0, 0), (0, 0)],
        );
        assert_eq!(g1, want_g, "g_1,{r}");
        // 27·ξ⁻¹F_{0,r} has coordinates [2, 2q^r, 2q^{2r}, 2q^{2r}, 2, 2q^r, q^r, q^{2r}, 1];
        // three times that is the projective trace vector of b^{−r}c^{r}.
        let f0 = fam.coords(&ring, e0.slice, &e0.idempotent);
        let want_f0 = qvec(
            &ctx,
            27,
            &[(2, 0), (2, r), (2, 2 * r), (2, 2 * r), (2, 0), (2, r), (1, r), (1, 2 * r), (1, 0)],
        );
        assert_eq!(f0, want_f0);
        let scaled: Vec<CycNum> = f0.iter().map(|x| x.scale_int(81)).collect();
        assert_eq!(scaled, trace_vector_p(&ctx, -r, r));
    }
}

#[test]
fn projective_trace_vectors_are_left_eigenvectors() {
    for n in [3, 5, 7] {
        let ctx = make_context(n as i64).unwrap();
        let m = mckay(n);
        for i in 0..n as i64 {
            let t = trace_vector_p(&ctx, i, -i);
            let lam = CycNum::root_power(&ctx, -i).scale_int(2);
            let want: Vec<CycNum> = t.iter().map(|x| &lam * x).collect();
            assert_eq!(m.apply_left(&t).unwrap(), want, "n={n} i={i}");
        }
    }
}

#[test]
fn oracle_matches_exact_embedding() {
    let ctx = make_context(11).unwrap();
    assert!((CycNum::root_power(&ctx, 3).embed() - oracle::q_pow(11, 3)).norm() < 1e-12);
    for idx in EigIndex::all(11) {
        assert!((lambda_of(&ctx, idx).embed() - oracle::lambda(11, idx)).norm() < 1e-12);
    }
    // A corrupted vector is caught.
    let m = mckay(5);
    let ctx = make_context(5).unwrap();
    let mut cert = certificate(&ctx, &m, EigIndex { j: 1, r: 2 }).unwrap();
    cert.right[3] = &cert.right[3] + &CycNum::one(&ctx);
    assert!(oracle::certificate_residual(&m, &cert) > 0.5);
}

#[test]
fn chebyshev_argument_values() {
    // ℒ_k(q^j + q^{−j}) = q^{jk} + q^{−jk}.
    let ctx = make_context(9).unwrap();
    for j in 0..5 {
        let l = cheb_values(ChebKind::L, 9, &cheb_argument(&ctx, j));
        for (k, lk) in l.iter().enumerate() {
            let jk = (j * k) as i64;
            assert_eq!(*lk, CycNum::root_power(&ctx, jk) + CycNum::root_power(&ctx, -jk));
        }
    }
}
