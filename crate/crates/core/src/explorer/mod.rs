//! Corpus generation and the claim suite.

pub mod case;
pub mod claims;
pub mod corpus;
pub mod generate;
pub mod suite;

pub use claims::{registry, Claim, ClaimKind, Failure, Side};
pub use corpus::{Corpus, Manifest};
pub use generate::{enumerate_topologies, random_topology, CorpusSpec, Mode};
