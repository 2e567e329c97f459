//! D_n in the PBW basis a^α b^β c^γ d^δ (0 ≤ α, δ < n; β, γ ∈ Z_n) with
//! exact multiplication, coproduct and counit.
//!
//! Normal ordering only ever needs to move d's past a's. Every other
//! generator pair q-commutes. So the whole multiplication is driven by a
//! table of normal-ordered expansions of d^δ a^α, built once per n from
//! d·a^m = q·a·(d·a^{m−1}) + a^{m−1}(1 − q^{2(m−1)} bc).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cycfield::{CycNum, Ctx};
use crate::error::{Error, Result};

/// Exponents of the normal-ordered monomial a^a b^b c^c d^d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Mono {
    pub a: u16,
    pub b: u16,
    pub c: u16,
    pub d: u16,
}

impl Mono {
    pub const ONE: Mono = Mono { a: 0, b: 0, c: 0, d: 0 };

    pub fn new(a: u16, b: u16, c: u16, d: u16) -> Self {
        Mono { a, b, c, d }
    }
}

impl std::fmt::Display for Mono {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        for (sym, e) in [("a", self.a), ("b", self.b), ("c", self.c), ("d", self.d)] {
            match e {
                0 => {}
                1 => parts.push(sym.to_string()),
                _ => parts.push(format!("{sym}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Finite linear combination of basis keys with coefficients in Q(q).
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<K: Ord + Clone> {
    terms: BTreeMap<K, CycNum>,
}

/// An element of D_n.
pub type PbwElem = LinComb<Mono>;
/// An element of D_n ⊗ D_n.
pub type Tensor2 = LinComb<(Mono, Mono)>;
/// An element of D_n ⊗ D_n ⊗ D_n.
pub type Tensor3 = LinComb<(Mono, Mono, Mono)>;

impl<K: Ord + Clone> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(key: K, coeff: CycNum) -> Self {
        let mut x = Self::zero();
        x.add_term(key, coeff);
        x
    }

    pub fn add_term(&mut self, key: K, coeff: CycNum) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c = &*c + &coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &CycNum)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, key: &K) -> Option<&CycNum> {
        self.terms.get(key)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        let mut out = Self::zero();
        for (k, c) in self.terms() {
            out.add_term(k.clone(), c * s);
        }
        out
    }
}

impl<K: Ord + Clone + std::fmt::Debug> std::fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(k, v)| (k, v.to_string())))
            .finish()
    }
}

impl std::fmt::Display for PbwElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(m, c)| format!("({c})·{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Multiplication and Hopf structure of D_n for one n.
#[derive(Debug)]
pub struct PbwAlgebra {
    ctx: Ctx,
    n: usize,
    /// `da_table[δ][α]` is d^δ a^α in normal order.
    da_table: Vec<Vec<Vec<(Mono, CycNum)>>>,
    /// Δ(a^α) and Δ(d^δ) for 0 ≤ α, δ < n.
    delta_a_pow: Vec<Tensor2>,
    delta_d_pow: Vec<Tensor2>,
}

impl PbwAlgebra {
    pub fn new(ctx: &Ctx) -> Self {
        let n = ctx.n();
        let mut alg = PbwAlgebra {
            ctx: ctx.clone(),
            n,
            da_table: Vec::new(),
            delta_a_pow: Vec::new(),
            delta_d_pow: Vec::new(),
        };
        alg.da_table = alg.build_da_table();
        let one = CycNum::one(ctx);
        let unit = Tensor2::single((Mono::ONE, Mono::ONE), one.clone());
        let delta_a = {
            let mut t = Tensor2::single((Mono::new(1, 0, 0, 0), Mono::new(0, 1, 0, 0)), one.clone());
            t.add_term((Mono::ONE, Mono::new(1, 0, 0, 0)), one.clone());
            t
        };
        let delta_d = {
            let mut t = Tensor2::single((Mono::new(0, 0, 0, 1), Mono::new(0, 0, 1, 0)), one.clone());
            t.add_term((Mono::ONE, Mono::new(0, 0, 0, 1)), one);
            t
        };
        let mut pa = vec![unit.clone()];
        let mut pd = vec![unit];
        for e in 1..n {
            pa.push(alg.tensor_mul(&pa[e - 1], &delta_a));
            pd.push(alg.tensor_mul(&pd[e - 1], &delta_d));
        }
        alg.delta_a_pow = pa;
        alg.delta_d_pow = pd;
        alg
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn q(&self, e: i64) -> CycNum {
        CycNum::root_power(&self.ctx, e)
    }

    fn build_da_table(&self) -> Vec<Vec<Vec<(Mono, CycNum)>>> {
        let n = self.n;
        let one = CycNum::one(&self.ctx);
        // d·a^m for 0 ≤ m < n.
        let mut d_a: Vec<BTreeMap<Mono, CycNum>> = Vec::with_capacity(n);
        d_a.push(BTreeMap::from([(Mono::new(0, 0, 0, 1), one.clone())]));
        for m in 1..n {
            let mut next = PbwElem::zero();
            for (mono, c) in &d_a[m - 1] {
                next.add_term(Mono { a: mono.a + 1, ..*mono }, c.mul_root_power(1));
            }
            let am1 = (m - 1) as u16;
            next.add_term(Mono::new(am1, 0, 0, 0), one.clone());
            next.add_term(Mono::new(am1, 1, 1, 0), -self.q(2 * (m as i64 - 1)));
            d_a.push(next.terms);
        }
        // d^δ a^α by repeatedly multiplying by d on the left.
        let mut table = vec![vec![Vec::new(); n]; n];
        for alpha in 0..n {
            let mut cur = PbwElem::single(Mono::new(alpha as u16, 0, 0, 0), one.clone());
            table[0][alpha] = cur.terms().map(|(m, c)| (*m, c.clone())).collect();
            for delta in 1..n {
                let mut next = PbwElem::zero();
                for (m, c) in cur.terms() {
                    for (dm, dc) in &d_a[m.a as usize] {
                        let w = dm.d + m.d;
                        if w as usize >= n {
                            continue;
                        }
                        let exp = dm.d as i64 * (m.b as i64 + m.c as i64);
                        next.add_term(
                            Mono {
                                a: dm.a,
                                b: ((dm.b + m.b) as usize % n) as u16,
                                c: ((dm.c + m.c) as usize % n) as u16,
                                d: w,
                            },
                            (dc * c).mul_root_power(exp),
                        );
                    }
                }
                table[delta][alpha] = next.terms().map(|(m, c)| (*m, c.clone())).collect();
                cur = next;
            }
        }
        table
    }

    /// The basis element a^α b^β c^γ d^δ (β, γ reduced mod n).
    pub fn monomial(&self, a: usize, b: i64, c: i64, d: usize) -> Result<PbwElem> {
        if a >= self.n || d >= self.n {
            return Err(Error::OutOfRange(format!(
                "a- and d-exponents must be < n = {} (got {a}, {d})",
                self.n
            )));
        }
        let m = Mono::new(
            a as u16,
            self.ctx.residue(b) as u16,
            self.ctx.residue(c) as u16,
            d as u16,
        );
        Ok(PbwElem::single(m, CycNum::one(&self.ctx)))
    }

    pub fn one(&self) -> PbwElem {
        PbwElem::single(Mono::ONE, CycNum::one(&self.ctx))
    }

    pub fn scalar(&self, c: CycNum) -> PbwElem {
        PbwElem::single(Mono::ONE, c)
    }

    /// One of the generators `a`, `b`, `c`, `d`.
    pub fn generator(&self, g: char) -> Result<PbwElem> {
        match g {
            'a' => self.monomial(1, 0, 0, 0),
            'b' => self.monomial(0, 1, 0, 0),
            'c' => self.monomial(0, 0, 1, 0),
            'd' => self.monomial(0, 0, 0, 1),
            _ => Err(Error::InvalidArgument(format!("unknown generator `{g}`"))),
        }
    }

    /// Product of generators spelled as a word, e.g. `"bcda"`.
    pub fn word(&self, w: &str) -> Result<PbwElem> {
        w.chars()
            .filter(|c| !c.is_whitespace())
            .try_fold(self.one(), |acc, g| Ok(self.mul(&acc, &self.generator(g)?)))
    }

    /// b^i c^k d^t a^t in normal order.
    pub fn bcda(&self, m: super::Monomial) -> PbwElem {
        let g = PbwElem::single(
            Mono::new(0, m.i as u16, m.k as u16, 0),
            CycNum::one(&self.ctx),
        );
        let da = self.da_elem(m.t, m.t);
        self.mul(&g, &da)
    }

    fn da_elem(&self, delta: usize, alpha: usize) -> PbwElem {
        let mut x = PbwElem::zero();
        for (m, c) in &self.da_table[delta][alpha] {
            x.add_term(*m, c.clone());
        }
        x
    }

    /// Product of two basis monomials.
    pub fn mul_mono(&self, m1: &Mono, m2: &Mono) -> Vec<(Mono, CycNum)> {
        let n = self.n;
        let mut out = Vec::new();
        for (t, c) in &self.da_table[m1.d as usize][m2.a as usize] {
            let a = m1.a + t.a;
            let d = t.d + m2.d;
            if a as usize >= n || d as usize >= n {
                continue;
            }
            let exp = t.a as i64 * (m1.b as i64 + m1.c as i64) + t.d as i64 * (m2.b as i64 + m2.c as i64);
            out.push((
                Mono {
                    a,
                    b: ((m1.b + t.b + m2.b) as usize % n) as u16,
                    c: ((m1.c + t.c + m2.c) as usize % n) as u16,
                    d,
                },
                c.mul_root_power(exp),
            ));
        }
        out
    }

    pub fn mul(&self, x: &PbwElem, y: &PbwElem) -> PbwElem {
        let mut out = PbwElem::zero();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                let c12 = c1 * c2;
                for (m, c) in self.mul_mono(m1, m2) {
                    out.add_term(m, &c * &c12);
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &PbwElem, e: u32) -> PbwElem {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// Product in D_n ⊗ D_n.
    pub fn tensor_mul(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((l1, r1), c1) in x.terms() {
            for ((l2, r2), c2) in y.terms() {
                let left = self.mul_mono(l1, l2);
                if left.is_empty() {
                    continue;
                }
                let right = self.mul_mono(r1, r2);
                let c12 = c1 * c2;
                for (lm, lc) in &left {
                    let lc = lc * &c12;
                    for (rm, rc) in &right {
                        out.add_term((*lm, *rm), &lc * rc);
                    }
                }
            }
        }
        out
    }

    /// Δ(a^α b^β c^γ d^δ) = Δ(a)^α · (b^β c^γ ⊗ b^β c^γ) · Δ(d)^δ.
    pub fn coproduct_mono(&self, m: &Mono) -> Tensor2 {
        let g = Mono::new(0, m.b, m.c, 0);
        let middle = Tensor2::single((g, g), CycNum::one(&self.ctx));
        let left = self.tensor_mul(&self.delta_a_pow[m.a as usize], &middle);
        self.tensor_mul(&left, &self.delta_d_pow[m.d as usize])
    }

    pub fn coproduct(&self, x: &PbwElem) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (m, c) in x.terms() {
            out = out.add(&self.coproduct_mono(m).scale(c));
        }
        out
    }

    /// ε(a) = ε(d) = 0, ε(b) = ε(c) = 1.
    pub fn counit(&self, x: &PbwElem) -> CycNum {
        x.terms()
            .filter(|(m, _)| m.a == 0 && m.d == 0)
            .fold(CycNum::zero(&self.ctx), |acc, (_, c)| acc + c)
    }

    fn counit_mono(m: &Mono) -> bool {
        m.a == 0 && m.d == 0
    }

    /// (ε ⊗ id)(x).
    pub fn counit_left(&self, x: &Tensor2) -> PbwElem {
        let mut out = PbwElem::zero();
        for ((l, r), c) in x.terms() {
            if Self::counit_mono(l) {
                out.add_term(*r, c.clone());
            }
        }
        out
    }

    /// (id ⊗ ε)(x).
    pub fn counit_right(&self, x: &Tensor2) -> PbwElem {
        let mut out = PbwElem::zero();
        for ((l, r), c) in x.terms() {
            if Self::counit_mono(r) {
                out.add_term(*l, c.clone());
            }
        }
        out
    }

    /// (Δ ⊗ id)(x).
    pub fn delta_left(&self, x: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((l, r), c) in x.terms() {
            for ((l1, l2), c2) in self.coproduct_mono(l).terms() {
                out.add_term((*l1, *l2, *r), c * c2);
            }
        }
        out
    }

    /// (id ⊗ Δ)(x).
    pub fn delta_right(&self, x: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((l, r), c) in x.terms() {
            for ((r1, r2), c2) in self.coproduct_mono(r).terms() {
                out.add_term((*l, *r1, *r2), c * c2);
            }
        }
        out
    }

    /// A deterministic spread of basis monomials: mostly a/d-balanced ones
    /// (the only ones with nonzero traces) plus a few unbalanced ones.
    pub fn sample_monomials(&self, count: usize) -> Vec<Mono> {
        let n = self.n;
        (0..count)
            .map(|s| {
                let a = (3 * s + 1) % n;
                let b = (5 * s + 2) % n;
                let c = (7 * s + 3) % n;
                let d = if s % 5 == 4 { (a + 1 + s % 3) % n } else { a };
                Mono::new(a as u16, b as u16, c as u16, d as u16)
            })
            .collect()
    }
}
