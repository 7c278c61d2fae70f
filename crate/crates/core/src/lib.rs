//! Exact computations with free Poisson algebras, their colimits, and the
//! Poisson bialgebras and Hopf algebras freely generated from coalgebras.

pub mod bialgebra;
pub mod coalgebra;
pub mod cli;
pub mod colimits;
pub mod error;
pub mod expr;
pub mod hopf;
pub mod lie;
pub mod linear;
pub mod poisson;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use linear::{Scalar, SparseVec, SubspaceBasis};
pub use poisson::{Ambient, Monomial, PoissElt, Poly};
