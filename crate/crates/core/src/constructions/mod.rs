//! Explicit perturbation constructions on full-group elements and
//! homomorphisms.

mod periodic;
mod perturb;
mod splice;
mod towers;

pub use periodic::{orbits_within_blocks, periodic_truncate, Truncation};
pub use perturb::{
    build_corefree_perturbation, build_folner_perturbation, build_ht_perturbation, tau_for_word,
    CoreFreeConstruction, FolnerConstruction, HtConstruction,
};
pub use splice::{extend_partial, splice};
pub use towers::{disjoint_support_partition, first_return, rokhlin_base};
