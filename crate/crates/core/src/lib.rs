//! Exact constructions around Manin triples.
//!
//! Everything is computed over [`Rational`] with dense matrices, so every
//! identity is checked by exact equality. The crate is `no_std` and only
//! needs `alloc`.
//!
//! Layout, bottom-up:
//!
//! - [`matrix`]: rationals, dense matrices, rref, kernels, inverses.
//! - [`lie`]: Lie algebras by structure constants, forms, subspaces, maps.
//! - [`report`]: check reports with witnesses.
//! - [`cps`]: complex product structures {E, J, F} and gauge transformations.
//! - [`manin`]: Manin triples, the dressing action and extended O-operators.
//! - [`twilled`]: twilled extensions, the twisted double and its ideals.
//! - [`rmatrix`]: r-matrices, CYBE, factorizability and classical doubles.
//! - [`reverse`]: the construction starting from anti-isomorphic pairs.
//! - [`fixtures`]: small named algebras (sl₂, aff(1), Heisenberg, ...).

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod action;
pub mod cps;
mod error;
pub mod fixtures;
pub mod lie;
pub mod manin;
pub mod matrix;
pub mod report;
pub mod reverse;
pub mod rmatrix;
pub mod twilled;

pub use error::Error;
pub use lie::{BilinearForm, LieAlgebra, LinearMap, Subspace};
pub use matrix::{Matrix, Rational};
pub use report::{Check, Failure, Report};

pub type Result<T> = core::result::Result<T, Error>;
