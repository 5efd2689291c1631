//! Finite-scale laboratory for actions of free groups inside full groups of
//! measured equivalence relations.

pub mod actions;
pub mod analysis;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod finite_model;
pub mod free_words;
pub mod rational;
pub mod report;
pub mod rng;

pub use error::{Error, Result};
