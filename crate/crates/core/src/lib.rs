//! Exact algebra kernels over the Gaussian rationals: scalars, dense matrices,
//! Hopf algebras given by structure constants, rewriting presentations and
//! Nichols algebra ranks.

pub mod hopf;
pub mod linalg;
pub mod nichols;
pub mod presentation;
pub mod scalar;
pub mod sparse;

pub use hopf::{FDHopf, HopfReport};
pub use linalg::Mat;
pub use scalar::GaussRat;
