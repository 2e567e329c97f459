//! The Grothendieck ring G_0(D_n) ≅ Z[g, x]/⟨gⁿ − 1, f(x, g)⟩ with
//! g = [V(1,1)] and x = [V(2,0)], the Cartan map, and every McKay-type
//! matrix (simple, closed-form, projective).

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::ToPrimitive;

use crate::chebyshev::{u_bivariate, BivariatePoly};
use crate::cycfield::{Ring, RingMatrix, SparseIntMatrix};
use crate::dnrep::{dual_label, projective_composition, projective_dimension, SimpleLabel};
use crate::error::{Error, Result};

/// An element of Z[g]/(gⁿ − 1)[x] truncated to x-degree < n, stored as an
/// n×n grid indexed by (power of g, power of x).
#[derive(Debug, Clone, PartialEq)]
pub struct PolyPres<R: Ring> {
    n: usize,
    data: Vec<R>,
}

impl<R: Ring> PolyPres<R> {
    pub fn zero(n: usize, proto: &R) -> Self {
        PolyPres {
            n,
            data: vec![proto.zero_like(); n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficient of g^gp x^xp.
    pub fn get(&self, gp: usize, xp: usize) -> &R {
        &self.data[gp * self.n + xp]
    }

    pub fn set(&mut self, gp: usize, xp: usize, v: R) {
        self.data[gp * self.n + xp] = v;
    }

    fn add_at(&mut self, gp: usize, xp: usize, v: &R) {
        let i = gp * self.n + xp;
        self.data[i] = self.data[i].plus(v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero_elem)
    }

    /// Multiply by g^s.
    pub fn shift_g(&self, s: usize) -> Self {
        let n = self.n;
        let mut out = Self::zero(n, &self.data[0]);
        for gp in 0..n {
            for xp in 0..n {
                out.set((gp + s) % n, xp, self.get(gp, xp).clone());
            }
        }
        out
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> PolyPres<S> {
        PolyPres {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }
}

/// Structure data of G_0(D_n) for one n.
#[derive(Debug, Clone)]
pub struct GrothRing {
    n: usize,
    /// `f[ℓ−1]` = [V(ℓ, 0)] as a polynomial in x and g.
    f: Vec<PolyPres<i64>>,
    /// `relation[i]` is the coefficient of gⁱ x^{n−2i} in f(x, g) (the
    /// constant −2 is separate).
    relation: Vec<i64>,
    /// `products[ℓ1−1][ℓ2−1]` = [V(ℓ1,0)]·[V(ℓ2,0)] in the simple basis.
    products: Vec<Vec<Vec<i64>>>,
}

fn binom_i64(a: usize, b: usize) -> i64 {
    binomial(BigInt::from(a), BigInt::from(b))
        .to_i64()
        .expect("binomial fits in i64")
}

fn check_odd(n: usize) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidOrder(n as i64));
    }
    Ok(())
}

/// f_{ℓ−1}(x, g) = Σ_i (−1)^i C(ℓ−1−i, i) gⁱ x^{ℓ−1−2i} = [V(ℓ, 0)], closed form.
pub fn f_seq(n: usize, ell: usize) -> Result<PolyPres<i64>> {
    check_odd(n)?;
    if ell == 0 || ell > n {
        return Err(Error::OutOfRange(format!("ℓ = {ell} must lie in 1..={n}")));
    }
    let mut p = PolyPres::zero(n, &0i64);
    let k = ell - 1;
    for i in 0..=k / 2 {
        let c = binom_i64(k - i, i);
        p.set(i % n, k - 2 * i, if i % 2 == 0 { c } else { -c });
    }
    Ok(p)
}

/// f(x, g) = Σ_i (−1)^i (n/(n−i)) C(n−i, i) gⁱ x^{n−2i} − 2, closed form, as
/// a bivariate polynomial with D standing for g.
pub fn minimal_relation(n: usize) -> Result<BivariatePoly> {
    crate::chebyshev::p_n_closed(n)
}

/// f(x, g) = f_n − g·f_{n−2} − 2 assembled from the 𝒰(x, g) recursion.
pub fn minimal_relation_recursive(n: usize) -> Result<BivariatePoly> {
    check_odd(n)?;
    let fn_ = u_bivariate(n);
    let fn2 = u_bivariate(n - 2).mul_monomial(&BigInt::from(1), 0, 1);
    Ok(fn_.sub(&fn2).sub(&BivariatePoly::term(BigInt::from(2), 0, 0)))
}

impl GrothRing {
    pub fn new(n: usize) -> Result<Self> {
        check_odd(n)?;
        let f = (1..=n).map(|ell| f_seq(n, ell)).collect::<Result<Vec<_>>>()?;
        let relation = (0..=n / 2)
            .map(|i| {
                let c = (BigInt::from(n) * binomial(BigInt::from(n - i), BigInt::from(i)))
                    / BigInt::from(n - i);
                let c = c.to_i64().expect("relation coefficient fits in i64");
                if i % 2 == 0 { c } else { -c }
            })
            .collect();
        let mut ring = GrothRing { n, f, relation, products: Vec::new() };
        ring.products = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| ring.poly_to_simple(&ring.multiply(&ring.f[a], &ring.f[b])))
                    .collect()
            })
            .collect();
        Ok(ring)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f_seq(&self, ell: usize) -> &PolyPres<i64> {
        &self.f[ell - 1]
    }

    /// Product in the presentation: convolve, then eliminate x^k for k ≥ n
    /// with xⁿ = 2 − Σ_{i≥1} relation[i]·gⁱ x^{n−2i}.
    pub fn multiply<R: Ring>(&self, a: &PolyPres<R>, b: &PolyPres<R>) -> PolyPres<R> {
        let n = self.n;
        let proto = a.data[0].zero_like();
        let mut raw: Vec<Vec<R>> = vec![vec![proto.clone(); n]; 2 * n - 1];
        for ga in 0..n {
            for xa in 0..n {
                let ca = a.get(ga, xa);
                if ca.is_zero_elem() {
                    continue;
                }
                for gb in 0..n {
                    for xb in 0..n {
                        let cb = b.get(gb, xb);
                        if cb.is_zero_elem() {
                            continue;
                        }
                        let slot = &mut raw[xa + xb][(ga + gb) % n];
                        *slot = slot.plus(&ca.times(cb));
                    }
                }
            }
        }
        for k in (n..2 * n - 1).rev() {
            let top = std::mem::replace(&mut raw[k], vec![proto.clone(); n]);
            if top.iter().all(Ring::is_zero_elem) {
                continue;
            }
            let base = k - n;
            for (gp, c) in top.iter().enumerate() {
                if c.is_zero_elem() {
                    continue;
                }
                let slot = &mut raw[base][gp];
                *slot = slot.plus(&c.scale_int(2));
                for (i, &ri) in self.relation.iter().enumerate().skip(1) {
                    let slot = &mut raw[k - 2 * i][(gp + i) % n];
                    *slot = slot.minus(&c.scale_int(ri));
                }
            }
        }
        let mut out = PolyPres::zero(n, &proto);
        for (xp, row) in raw.into_iter().take(n).enumerate() {
            for (gp, c) in row.into_iter().enumerate() {
                out.set(gp, xp, c);
            }
        }
        out
    }

    /// Σ e_{(ℓ,r)} g^r f_{ℓ−1}(x, g).
    pub fn simple_to_poly<R: Ring>(&self, e: &[R]) -> PolyPres<R> {
        let n = self.n;
        let mut out = PolyPres::zero(n, &e[0]);
        for (idx, c) in e.iter().enumerate() {
            if c.is_zero_elem() {
                continue;
            }
            let l = SimpleLabel::from_index(n, idx);
            let f = &self.f[l.ell - 1];
            for gp in 0..n {
                for xp in 0..l.ell {
                    let fc = *f.get(gp, xp);
                    if fc != 0 {
                        out.add_at((gp + l.r) % n, xp, &c.scale_int(fc));
                    }
                }
            }
        }
        out
    }

    /// Inverse of [`Self::simple_to_poly`]: f_{ℓ−1} is monic of x-degree ℓ−1, so
    /// peel off the top x-degree repeatedly.
    pub fn poly_to_simple<R: Ring>(&self, p: &PolyPres<R>) -> Vec<R> {
        let n = self.n;
        let mut rem = p.clone();
        let mut out = vec![p.data[0].zero_like(); n * n];
        for k in (0..n).rev() {
            for s in 0..n {
                let c = rem.get(s, k).clone();
                if c.is_zero_elem() {
                    continue;
                }
                out[SimpleLabel { ell: k + 1, r: s }.index(n)] = c.clone();
                let f = &self.f[k];
                for gp in 0..n {
                    for xp in 0..=k {
                        let fc = *f.get(gp, xp);
                        if fc != 0 {
                            let i = ((gp + s) % n) * n + xp;
                            rem.data[i] = rem.data[i].minus(&c.scale_int(fc));
                        }
                    }
                }
            }
        }
        debug_assert!(rem.is_zero());
        out
    }

    /// Product of arbitrary elements given in the simple basis.
    pub fn multiply_groth<R: Ring>(&self, a: &[R], b: &[R]) -> Vec<R> {
        self.poly_to_simple(&self.multiply(&self.simple_to_poly(a), &self.simple_to_poly(b)))
    }

    /// [V(L1)]·[V(L2)] in the simple basis.
    pub fn multiply_simples(&self, l1: SimpleLabel, l2: SimpleLabel) -> Vec<i64> {
        let n = self.n;
        let base = &self.products[l1.ell - 1][l2.ell - 1];
        let shift = l1.r + l2.r;
        let mut out = vec![0i64; n * n];
        for (idx, &c) in base.iter().enumerate() {
            if c != 0 {
                let l = SimpleLabel::from_index(n, idx);
                out[SimpleLabel { ell: l.ell, r: (l.r + shift) % n }.index(n)] = c;
            }
        }
        out
    }

    /// M_{ij} = [S_i ⊗ V : S_j] for V = V(ℓ, s).
    pub fn mckay_matrix(&self, v: SimpleLabel) -> RingMatrix<i64> {
        let n = self.n;
        let rows: Vec<Vec<i64>> = SimpleLabel::all(n).map(|l| self.multiply_simples(l, v)).collect();
        RingMatrix::from_rows(rows).expect("square")
    }

    /// Sparse M_V for every simple V, in label order.
    pub fn all_mckay_sparse(&self) -> Vec<SparseIntMatrix> {
        SimpleLabel::all(self.n)
            .map(|l| SparseIntMatrix::from_dense(&self.mckay_matrix(l)))
            .collect()
    }

    /// Q_V = M_{V*}ᵀ.
    pub fn projective_mckay(&self, v: SimpleLabel) -> RingMatrix<i64> {
        self.mckay_matrix(dual_label(self.n, v)).transpose()
    }
}

/// The n×n cyclic permutation Z with Z[i][i+1] = 1.
pub fn cyclic_shift(n: usize) -> RingMatrix<i64> {
    RingMatrix::from_fn(n, n, |i, j| i64::from(j == (i + 1) % n))
}

/// Z^{(s)} = diag(Z^s, …, Z^s), n blocks.
pub fn z_block(n: usize, s: i64) -> RingMatrix<i64> {
    let s = s.rem_euclid(n as i64) as usize;
    RingMatrix::from_fn(n * n, n * n, |i, j| {
        i64::from(i / n == j / n && j % n == (i % n + s) % n)
    })
}

/// M = M_{V(2,0)} written down block by block from the tensor rules
/// V(ℓ,r)⊗V = V(ℓ+1,r) ⊕ V(ℓ−1,r+1) and V(n,r)⊗V ≅ P(n−1,r+1):
/// I on the block superdiagonal, Z on the block subdiagonal, and last block
/// row [2I, 0, …, 0, 2Z, 0].
pub fn mckay_block_form(n: usize) -> RingMatrix<i64> {
    let z = cyclic_shift(n);
    let id = RingMatrix::identity(n, &1i64);
    let zero = RingMatrix::zeros(n, n, &0i64);
    let blocks: Vec<Vec<RingMatrix<i64>>> = (0..n)
        .map(|bi| {
            (0..n)
                .map(|bj| {
                    if bi + 1 < n {
                        if bj == bi + 1 {
                            id.clone()
                        } else if bj + 1 == bi {
                            z.clone()
                        } else {
                            zero.clone()
                        }
                    } else if bj == 0 {
                        id.scale_int(2)
                    } else if bj == n - 2 {
                        z.scale_int(2)
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        })
        .collect();
    RingMatrix::from_blocks(&blocks).expect("uniform blocks")
}

/// M_{(ℓ,s)} = Σ_i (−1)^i C(ℓ−1−i, i) Z^{(i+s)} M^{ℓ−1−2i}.
pub fn mckay_matrix_closed(n: usize, v: SimpleLabel) -> RingMatrix<i64> {
    let m = mckay_block_form(n);
    let k = v.ell - 1;
    let mut powers = vec![RingMatrix::identity(n * n, &1i64)];
    for e in 1..=k {
        powers.push(powers[e - 1].mul(&m).expect("square"));
    }
    let mut acc = RingMatrix::zeros(n * n, n * n, &0i64);
    for i in 0..=k / 2 {
        let c = binom_i64(k - i, i);
        let c = if i % 2 == 0 { c } else { -c };
        let term = z_block(n, (i + v.r) as i64).mul(&powers[k - 2 * i]).expect("square");
        acc = acc.add(&term.scale_int(c)).expect("same shape");
    }
    acc
}

/// C_{ij} = [P_i : S_j], rows ordered like the simples (P(ℓ,r) ↔ V(ℓ,r)).
pub fn cartan_matrix(n: usize) -> RingMatrix<i64> {
    let rows = SimpleLabel::all(n)
        .map(|p| {
            let mut row = vec![0i64; n * n];
            for (s, m) in projective_composition(n, p) {
                row[s.index(n)] += m as i64;
            }
            row
        })
        .collect();
    RingMatrix::from_rows(rows).expect("square")
}

/// Exact rank of the Cartan matrix by fraction-free elimination.
pub fn cartan_rank(n: usize) -> usize {
    cartan_matrix(n).rank_integer()
}

/// [P(ℓ,r)] − [P(n−ℓ, ℓ+r)] for 1 ≤ ℓ ≤ (n−1)/2, r ∈ Z_n, as coordinate
/// vectors over the projective labels.
pub fn cartan_kernel_basis(n: usize) -> Vec<Vec<i64>> {
    let h = (n - 1) / 2;
    let mut out = Vec::with_capacity(n * h);
    for ell in 1..=h {
        for r in 0..n {
            let mut v = vec![0i64; n * n];
            v[SimpleLabel { ell, r }.index(n)] += 1;
            v[SimpleLabel { ell: n - ell, r: (ell + r) % n }.index(n)] -= 1;
            out.push(v);
        }
    }
    out
}

/// Q_{V(2,0)} written from the projective tensor rules:
/// V(n,r)⊗V ≅ P(n−1,r+1); P(1,r)⊗V ≅ P(2,r) ⊕ 2V(n,r+1);
/// P(ℓ,r)⊗V ≅ P(ℓ+1,r) ⊕ P(ℓ−1,r+1) for 2 ≤ ℓ < n−1;
/// P(n−1,r)⊗V ≅ P(n−2,r+1) ⊕ 2V(n,r).
pub fn projective_mckay_from_rules(n: usize) -> RingMatrix<i64> {
    let idx = |ell: usize, r: usize| SimpleLabel { ell, r: r % n }.index(n);
    let mut q = RingMatrix::zeros(n * n, n * n, &0i64);
    let mut bump = |row: usize, col: usize, by: i64| {
        let cur = *q.get(row, col);
        q.set(row, col, cur + by);
    };
    for r in 0..n {
        bump(idx(n, r), idx(n - 1, r + 1), 1);
        for ell in 1..n {
            let row = idx(ell, r);
            if ell == 1 {
                bump(row, idx(2, r), 1);
                bump(row, idx(n, r + 1), 2);
            }
            if ell == n - 1 {
                bump(row, idx(n - 2, r + 1), 1);
                bump(row, idx(n, r), 2);
            }
            if (2..n - 1).contains(&ell) {
                bump(row, idx(ell + 1, r), 1);
                bump(row, idx(ell - 1, r + 1), 1);
            }
        }
    }
    q
}

/// Dimensions of the simples in lexicographic order (the vector s).
pub fn simple_dims(n: usize) -> Vec<i64> {
    SimpleLabel::all(n).map(|l| l.ell as i64).collect()
}

/// Dimensions of the indecomposable projectives (the vector p).
pub fn projective_dims(n: usize) -> Vec<i64> {
    SimpleLabel::all(n).map(|l| projective_dimension(n, l) as i64).collect()
}

/// dim D_n counted over the PBW basis: α, δ ∈ 0..n and β, γ ∈ Z_n.
pub fn pbw_dimension(n: usize) -> u64 {
    (n as u64).pow(4)
}
