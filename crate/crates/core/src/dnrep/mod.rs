//! The algebra D_n: its PBW basis and Hopf structure, the simple modules
//! V(ℓ, r) with explicit action matrices, projective composition data,
//! characters and trace vectors.

mod pbw;
mod simple;

use serde::Serialize;

use crate::error::{Error, Result};

pub use pbw::{LinComb, Mono, PbwAlgebra, PbwElem, Tensor2, Tensor3};
pub use simple::{
    action_set, alpha, character, character_fast, coproduct_trace_identity,
    grouplike_character_chebyshev, grouplike_character_closed, monomial_trace, quantum_binomial,
    quantum_binomial_by_quotient, quantum_integer, trace_vector_p, trace_vector_p_by_composition,
    trace_vector_s, trace_vector_s_pbw, ActionSet, CharacterTable, CoproductTraceReport,
};

/// Label (ℓ, r) of the simple module V(ℓ, r): 1 ≤ ℓ ≤ n, r ∈ Z_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SimpleLabel {
    pub ell: usize,
    pub r: usize,
}

impl SimpleLabel {
    /// Build a label, reducing r mod n.
    pub fn new(n: usize, ell: usize, r: i64) -> Result<Self> {
        if ell == 0 || ell > n {
            return Err(Error::OutOfRange(format!("ℓ = {ell} must lie in 1..={n}")));
        }
        Ok(SimpleLabel {
            ell,
            r: r.rem_euclid(n as i64) as usize,
        })
    }

    /// Position in the lexicographic order (ℓ first, then r).
    pub fn index(&self, n: usize) -> usize {
        (self.ell - 1) * n + self.r
    }

    pub fn from_index(n: usize, idx: usize) -> Self {
        SimpleLabel {
            ell: idx / n + 1,
            r: idx % n,
        }
    }

    /// All n² labels in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = SimpleLabel> {
        (0..n * n).map(move |i| SimpleLabel::from_index(n, i))
    }
}

impl std::fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "V({},{})", self.ell, self.r)
    }
}

/// The dual of V(ℓ, r) is V(ℓ, 1 − r − ℓ).
pub fn dual_label(n: usize, label: SimpleLabel) -> SimpleLabel {
    SimpleLabel::new(n, label.ell, 1 - label.r as i64 - label.ell as i64).expect("valid ℓ")
}

/// Composition factors of the projective cover of V(ℓ, r), with
/// multiplicity: {V(ℓ,r)×2, V(n−ℓ, r+ℓ)×2} for ℓ < n, {V(n,r)} for ℓ = n.
pub fn projective_composition(n: usize, label: SimpleLabel) -> Vec<(SimpleLabel, usize)> {
    if label.ell == n {
        vec![(label, 1)]
    } else {
        let partner = SimpleLabel::new(n, n - label.ell, (label.r + label.ell) as i64).expect("valid ℓ");
        vec![(label, 2), (partner, 2)]
    }
}

/// Dimension of the projective cover of V(ℓ, r): 2n for ℓ < n, n for ℓ = n.
pub fn projective_dimension(n: usize, label: SimpleLabel) -> usize {
    projective_composition(n, label)
        .iter()
        .map(|(l, m)| l.ell * m)
        .sum()
}

/// The element b^i c^k d^t a^t of D_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Monomial {
    pub i: usize,
    pub k: usize,
    pub t: usize,
}

impl Monomial {
    /// Build b^i c^k d^t a^t with i, k reduced mod n and 0 ≤ t < n.
    pub fn new(n: usize, i: i64, k: i64, t: usize) -> Result<Self> {
        if t >= n {
            return Err(Error::OutOfRange(format!("t = {t} must be < n = {n}")));
        }
        Ok(Monomial {
            i: i.rem_euclid(n as i64) as usize,
            k: k.rem_euclid(n as i64) as usize,
            t,
        })
    }

    /// The grouplike b^i c^k.
    pub fn grouplike(n: usize, i: i64, k: i64) -> Self {
        Self::new(n, i, k, 0).expect("t = 0 is always valid")
    }
}

#[cfg(test)]
mod tests;
