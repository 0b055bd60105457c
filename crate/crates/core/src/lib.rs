//! Autotopism groups of partial Latin rectangles.
//!
//! Every solver reduces the rectangle first (dropping empty rows, empty
//! columns and unused symbols), computes the autotopisms of what is left and
//! multiplies the order back up by the matching factorials.

pub mod aut;
pub mod bench;
pub mod budget;
pub mod error;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod group;
pub mod invariants;
pub mod methods;
pub mod perm;
pub mod plr;
pub mod search;
pub mod text;

pub use budget::Limits;
pub use error::{AtopError, PlrError};
pub use group::AutotopismGroup;
pub use invariants::{InvariantKind, InvariantTable};
pub use methods::{compute_atop, requires_computation, Family, MethodSpec};
pub use perm::Permutation;
pub use plr::{Entry, Isotopism, PartialLatinRectangle};
