//! Finite soft topological spaces.
//!
//! Soft sets over a finite universe `U` and parameter set `A` are stored as
//! `n·m`-bit characteristic matrices. On top of that this crate provides soft
//! topologies, the semiopen/semiclosed structure with its semi-interior and
//! semi-closure operators, soft functions and their continuity classes,
//! covers, semicompactness, semiconnectedness, the semi-separation axioms,
//! and an explorer that checks a registry of claims over generated corpora.

pub mod analysis;
mod bits;
pub mod error;
pub mod explorer;
pub mod files;
pub mod fixtures;
pub mod limits;
pub mod rng;
pub mod maps;
pub mod semi;
pub mod signature;
pub mod softset;
pub mod topology;

pub use error::{Error, Result};
pub use maps::SoftFunction;
pub use semi::{SemiClassification, SemiVerdict};
pub use signature::SpaceSignature;
pub use softset::{enumerate_soft_sets, intersection, point_in, union, Membership, SoftPoint, SoftSet};
pub use topology::{from_subbasis, SoftTopology, TopologyViolation};
