//! Stratified simplicial complexes, perversities and chains.
//!
//! A [`StratifiedComplex`] is a finite simplicial complex with a descending
//! filtration by closed subcomplexes. Vertex ids are positions in the vertex
//! list; that order is also the orientation convention, so a simplex listed
//! in another order carries the sign of the sorting permutation.

mod chain;
mod constructions;
mod perversity;
mod simplex;
mod simplicial;
mod stratification;
mod validate;

pub use chain::Chain;
pub use constructions::{
    barycenter_name, barycentric_subdivide, cone, link, subdivide_chain, suspension,
};
pub use perversity::Perversity;
pub use simplex::{permutation_sign, Simplex};
pub use simplicial::SimplicialComplex;
pub use stratification::{FiltrationMember, Stratification, StratifiedComplex};
pub use validate::{validate, ValidationReport, Violation};
