//! Extremal problems for Hamiltonicity-type properties in `K_{r+1}`-free graphs.
//!
//! Everything here is allocation-only (`alloc`), so the crate builds without `std`.
//! IO, parallel drivers and the command line live in the companion `kfree` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bits;
pub mod canon;
pub mod conditions;
pub mod constructions;
pub mod enumeration;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod properties;
pub mod verify;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, Labeling};
pub use graph::{Graph, GraphError, PartSizes, MAX_VERTICES};
pub use properties::PropertyKind;
