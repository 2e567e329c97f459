//! Exact representation theory of the Drinfeld double D_n of the Taft
//! algebra: cyclotomic arithmetic, Chebyshev families, simple modules and
//! the PBW basis, the Grothendieck ring, closed-form spectra of the McKay,
//! Cartan and fusion matrices, and verification suites over all of it.

pub mod chebyshev;
pub mod cycfield;
pub mod dnrep;
pub mod error;
pub mod grring;
pub mod spectral;
pub mod verify;

pub use cycfield::{make_context, Complex64, CycNum, Ctx, RingMatrix, RingPoly, SparseIntMatrix};
pub use dnrep::{Monomial, SimpleLabel};
pub use error::{Error, Result};
pub use grring::GrothRing;
pub use spectral::EigIndex;
pub use verify::{run_suite, SuiteReport};
