//! Combinatorial models of the classical types: signed permutations,
//! noncrossing closures on a circle, and the translation to group elements.

pub mod closure;
pub mod model;
pub mod signed;

pub use closure::{is_noncrossing, nc_closure, partition_to_perm, Circle, Kind};
pub use model::{
    antiexceedance_positions, antiexceedances, nontrivial_cycle_count, reflection_below_d, reflection_length, AexcDomain,
    AexcStat, FastProjector, PermModel,
};
pub use signed::SignedPerm;
