//! Exact sparse linear algebra over the rationals.
//!
//! Everything in the crate that is a rank, a kernel, a solve or a homology
//! group bottoms out here. There is no floating point anywhere: vanishing and
//! isomorphism claims are decided exactly.

mod echelon;
mod homology;
mod matrix;

pub(crate) use echelon::kernel_with_free;
pub use echelon::{
    image_basis, inverse, kernel_basis, pivot_columns, rank, satisfies, solve, solve_many,
};
pub use homology::{
    homology_dims, induced_map_on_homology, ChainComplexMatrices, GradedDims, HomologyBasis,
};
pub use matrix::{
    axpy, from_dense, parse_rational, q, ratio, scaled, to_dense, Rational, RationalMatrix,
    SparseVector,
};
