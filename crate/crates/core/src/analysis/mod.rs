//! Decision procedures on whole spaces: covers and semicompactness,
//! semiconnectedness, and the semi-separation axioms.

pub mod compactness;
pub mod connectedness;
pub mod cover;
pub mod separation;

pub use compactness::{is_semicompact, SemicompactReport};
pub use connectedness::{find_semiseparation, Separation};
pub use cover::{analyze_cover, minimum_cover, CoverReport};
pub use separation::{
    axiom_report, check_axiom, check_axiom_all, seminormal_characterization, Axiom, AxiomReport,
    AxiomVerdict, Witness,
};
