//! Finite groups, Chermak-Delgado lattices and finite lattice analysis.

pub mod bitset;
pub mod cd;
pub mod error;
pub mod group;
pub mod lattice;
pub mod zoo;

pub use error::{Error, Result};
