//! Exact intersection homology of stratified simplicial pseudomanifolds.
//!
//! The crate computes allowable-chain intersection homology for arbitrary
//! perversities over the rationals, decides whether inclusion-induced maps
//! extend across singular strata by examining link maps, repairs cycles by
//! cone surgery, and evaluates the formula-level machinery around projective
//! cones, Gysin sequences, Hard Lefschetz and Chern-Mather classes.

pub mod cli;
pub mod complex;
pub mod conecalc;
pub mod corpus;
mod error;
pub mod exactla;
pub mod ichains;
pub mod surgery;

pub use error::{Error, Result};
