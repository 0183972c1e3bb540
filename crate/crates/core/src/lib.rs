//! Fixed loci of involutions on moduli of G-Higgs bundles over an elliptic
//! curve, reduced to Weyl-group combinatorics and integer lattice algebra.

pub mod error;
pub mod lattice;
pub mod phase;
pub mod rootdatum;
pub mod weyl;
pub mod involutions;
pub mod elliptic;
pub mod torusfix;
pub mod moduli;
pub mod cli;

pub use error::{Error, Result};
