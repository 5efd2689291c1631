//! Diagnostics on concrete actions.

mod folner;
mod realize;
mod stability;
mod sweep;
mod transitivity;

pub use folner::{boundary_ratio, folner_search, FolnerSearch};
pub use realize::{core_check, realizes_tau_fraction};
pub use stability::{ball_stability_check, StabilityCheck};
pub use sweep::{genericity_sweep, sample_perturbation, Property};
pub use transitivity::{
    generates_classwise_symmetric, transitivity_degree, ClasswiseSymmetry, StabilizerChain, SYMMETRIC_GUARD,
    TRANSITIVITY_GUARD,
};
