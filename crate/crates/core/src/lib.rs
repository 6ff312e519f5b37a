//! Exact, finite-scale verification of enriched functor-category constructions.

pub mod adjoint;
pub mod basecat;
pub mod coherence;
pub mod ends;
pub mod error;
pub mod fincat;
pub mod funcat;
pub mod linalg;
pub mod report;
pub mod samples;
pub mod suites;
pub mod yoneda;

pub use basecat::{Base, Caps, FinSet, FinVect, SetMap};
pub use ends::{Bifunctor, CoendResult, EndResult};
pub use error::{Error, Result};
pub use fincat::{CatFunctor, FinCat, FinCatPresentation};
pub use funcat::{MFunctor, NatTrans};
pub use linalg::Matrix;
pub use report::{Check, Label, Report};

/// A functor into finite sets.
pub type SetFunctor = MFunctor<SetMap>;
/// A functor into finite-dimensional spaces over `F_p`.
pub type VectFunctor = MFunctor<Matrix>;
