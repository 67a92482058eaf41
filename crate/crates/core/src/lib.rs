//! Macaulay inverse systems for Artinian Gorenstein local algebras over Q.
//!
//! The crate computes apolar ideals, Hilbert functions, Iarrobino symmetric
//! decompositions and Poincaré series of algebras `A = S/Ann(F)`, where
//! `S = Q[[x_1..x_n]]` acts on `P = Q[y_1..y_n]` by contraction. Every series
//! prediction can be checked against an independent Betti-number oracle that
//! resolves the residue field over the finite-dimensional algebra.
//!
//! Module map:
//! - [`exact`]: rationals, dense RREF/kernels, subspaces, sparse echelon forms
//! - [`poly`]: sparse multivariate polynomials, graded pieces, parser
//! - [`apolar`]: contraction, inverse systems, annihilators, splitting lemmas
//! - [`artin`]: finite local algebras, filtrations, symmetric decompositions
//! - [`growth`]: Macaulay representations, O-sequences, Gotzmann persistence
//! - [`poincare`]: series, the resolution oracle, reduction formulas, classifiers
//! - [`random`]: seeded instance generators
//! - [`suites`]: the named verification suites driven by the CLI

pub mod apolar;
pub mod artin;
mod error;
pub mod exact;
pub mod growth;
pub mod poincare;
pub mod poly;
pub mod random;
pub mod suites;

pub use error::{Error, Result};
pub use exact::{Matrix, Rational, Subspace};
pub use poly::{Monomial, Polynomial};

/// A Hilbert function `H(0), H(1), ...`.
pub type HilbertVector = Vec<usize>;
