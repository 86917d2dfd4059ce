//! Allowable chains and intersection homology.
//!
//! All degrees are homological chain degrees. Bases of intersection chain
//! groups and of their homology follow the pivot convention of
//! [`crate::exactla`], so induced matrices and class coordinates are the
//! same on every run.

mod allowable;
mod chains;
mod flag;
mod fundamental;
mod lift;
mod maps;
mod table;

pub use allowable::{first_violation, is_allowable, is_intersection_chain, simplex_is_allowable};
pub use chains::{intersection_chain_complex, IntersectionChains};
pub use flag::{flag_classes, FlagClass, FlagInput};
pub use fundamental::fundamental_class;
pub use lift::{lift_class, lift_class_between, Lift};
pub use maps::{induced_ih_map, link_map, LinkMap};
pub use table::{ih_betti, verify_cone_formula, ConeFormulaReport, IhTable};
