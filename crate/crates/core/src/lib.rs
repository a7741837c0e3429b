//! Finite Coxeter groups of types A, B and D as signed permutations, with
//! their group algebras, descent algebras, shuffle and standardization
//! products, quasisymmetric series and 0-Hecke representations.
//!
//! The `examples/` directory holds one runnable program per capability.

pub mod cli;
pub mod coxeter;
pub mod descent;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod maps;
pub mod series;
pub mod shuffle;
pub mod subset;
pub mod vector;
pub mod verify;

pub use coxeter::{CoxeterSystem, Element, Family, Side};
pub use error::{Error, Result};
pub use subset::{Composition, SubsetMask};
pub use vector::FormalVector;
