//! Exact computer algebra for the conformal algebra o(n,2), its scalar
//! singleton, Moyal-Weyl realizations of Howe dual pairs and higher-spin
//! algebras.

pub mod checks;
pub mod cli;
pub mod error;
pub mod conformal;
pub mod exactcore;
pub mod liealg;
pub mod verma;
pub mod superweyl;
pub mod verify;
pub mod weyl;
pub mod youngdim;

pub use error::{Error, Result};
