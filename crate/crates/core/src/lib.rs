//! Exact computational engine for 0-Schur algebras: orbit arithmetic on
//! integer matrices, idempotent and ideal structure, and projective-module
//! invariants.

// indexed loops over matrices and tables are the house style here
#![allow(clippy::needless_range_loop)]

pub mod acceptance;
pub mod algebra;
pub mod combinatorics;
pub mod error;
pub mod linalg;
pub mod modules;
pub mod orbits;
pub mod quiver;
pub mod relations;

pub use algebra::{AlgebraElement, SchurAlgebra};
pub use combinatorics::{Composition, Decomposition, ProjectiveClass};
pub use error::{Error, Result};
pub use orbits::OrbitMatrix;
