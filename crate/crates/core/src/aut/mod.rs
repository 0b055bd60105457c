//! Automorphisms of vertex-colored graphs by partition refinement.

mod partition;
mod search;

pub use partition::{equitable_refinement, OrderedPartition};
pub use search::{
    automorphisms, automorphisms_within, group_structure, orbits, orbits_within, AutomorphismList,
    GroupStructure,
};
