//! Exact arithmetic over Q and the linear algebra everything else is built on.
//!
//! Dense matrices are used for the small canonical computations (subspace
//! equality, kernels of pairing matrices). The sparse [`Echelon`] handles the
//! large, very sparse systems that show up in free resolutions.

mod matrix;
mod rational;
pub mod sparse;
mod subspace;

pub use matrix::{kernel, rank, rref, Matrix, Rref};
pub use rational::{ParseRationalError, Rational};
pub use sparse::{Echelon, Insertion, SparseVec};
pub use subspace::Subspace;
