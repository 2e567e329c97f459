//! Per-n state shared by the checks of one suite run. Every expensive
//! object is built at most once, on first use, and then read concurrently.

use std::sync::{Arc, OnceLock};

use crate::cycfield::{make_context, CycInt, Ctx, IntBasis, SparseIntMatrix};
use crate::dnrep::{CharacterTable, PbwAlgebra, SimpleLabel};
use crate::error::{Error, Result};
use crate::grring::{mckay_block_form, GrothRing};
use crate::spectral::{all_certificates, IdempotentFamily, SpectralCertificate};

type Cached<T> = OnceLock<std::result::Result<T, Error>>;

fn cached<T>(cell: &Cached<T>, build: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(build).as_ref().map_err(Clone::clone)
}

pub struct SuiteContext {
    n: usize,
    ctx: Ctx,
    ring: OnceLock<GrothRing>,
    mckay: OnceLock<SparseIntMatrix>,
    all_mckay: OnceLock<Vec<SparseIntMatrix>>,
    table: OnceLock<CharacterTable>,
    pbw: OnceLock<PbwAlgebra>,
    certs: Cached<Vec<SpectralCertificate>>,
    family: Cached<IdempotentFamily>,
    basis: OnceLock<Arc<IntBasis>>,
    integral_certs: Cached<Vec<Option<IntegralPair>>>,
}

/// Denominator-cleared right and left eigenvectors in Z[q].
pub struct IntegralPair {
    pub right: Vec<CycInt>,
    pub left: Vec<CycInt>,
}

impl SuiteContext {
    pub fn new(n: usize) -> Result<Self> {
        let ctx = make_context(n as i64)?;
        GrothRing::new(n)?;
        Ok(SuiteContext {
            n,
            ctx,
            ring: OnceLock::new(),
            mckay: OnceLock::new(),
            all_mckay: OnceLock::new(),
            table: OnceLock::new(),
            pbw: OnceLock::new(),
            certs: OnceLock::new(),
            family: OnceLock::new(),
            basis: OnceLock::new(),
            integral_certs: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn ring(&self) -> &GrothRing {
        self.ring
            .get_or_init(|| GrothRing::new(self.n).expect("n validated in SuiteContext::new"))
    }

    /// M = M_{V(2,0)} from the block form.
    pub fn mckay(&self) -> &SparseIntMatrix {
        self.mckay
            .get_or_init(|| SparseIntMatrix::from_dense(&mckay_block_form(self.n)))
    }

    /// M_V for every simple V, in label order.
    pub fn all_mckay(&self) -> &[SparseIntMatrix] {
        self.all_mckay.get_or_init(|| self.ring().all_mckay_sparse())
    }

    pub fn mckay_of(&self, label: SimpleLabel) -> &SparseIntMatrix {
        &self.all_mckay()[label.index(self.n)]
    }

    pub fn table(&self) -> &CharacterTable {
        self.table.get_or_init(|| CharacterTable::new(&self.ctx))
    }

    pub fn pbw(&self) -> &PbwAlgebra {
        self.pbw.get_or_init(|| PbwAlgebra::new(&self.ctx))
    }

    /// Spectral certificates for every (j, r), j major.
    pub fn certs(&self) -> Result<&[SpectralCertificate]> {
        cached(&self.certs, || all_certificates(&self.ctx, self.mckay())).map(Vec::as_slice)
    }

    pub fn basis(&self) -> &Arc<IntBasis> {
        self.basis.get_or_init(|| IntBasis::new(&self.ctx))
    }

    /// The certificates' eigenvectors scaled into Z[q], where they fit in
    /// machine words; aligned with [`Self::certs`].
    pub fn integral_certs(&self) -> Result<&[Option<IntegralPair>]> {
        cached(&self.integral_certs, || {
            let basis = self.basis();
            Ok(self
                .certs()?
                .iter()
                .map(|c| {
                    let (_, right) = CycInt::clear_denominators(basis, &c.right)?;
                    let (_, left) = CycInt::clear_denominators(basis, &c.left)?;
                    Some(IntegralPair { right, left })
                })
                .collect())
        })
        .map(Vec::as_slice)
    }

    pub fn family(&self) -> Result<&IdempotentFamily> {
        cached(&self.family, || IdempotentFamily::new(&self.ctx))
    }
}
