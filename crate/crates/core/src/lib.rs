//! Resolvable Golomb rulers and the resolvable symmetric configurations they
//! generate.
//!
//! The crate covers plain and modular rulers with their verifiers and bounds,
//! the classical constructions (primitive-root sets, Welch Costas arrays, a
//! cubic family), exhaustive searches, rulers over finite groups, finite
//! fields with their orthogonal latin squares, and the configuration
//! machinery: development, verification, affine completion and host
//! assignment for progressive dinner parties.

pub mod configurations;
pub mod constructions;
pub mod data;
pub mod error;
pub mod existence;
pub mod fields;
pub mod groups;
pub mod numtheory;
pub mod rulers;
pub mod search;

pub use configurations::{Configuration, HostAssignment, Resolution};
pub use error::{Error, Result};
pub use existence::{Authority, ExistenceRecord, Status};
pub use groups::{FiniteGroup, GroupRuler, Subgroup};
pub use rulers::{ModularRuler, Ruler};
pub use search::{SearchOutcome, SearchStatus};
