//! Small reference spaces used by tests, docs and the CLI.
//!
//! * example space: `U = {h1,h2,h3}`, `A = {e1,e2}`, `τ = {Φ_A, U_A, F1}` with
//!   `F1 = (e1↦{h1,h2}, e2↦{h1})`;
//! * indiscrete space on `U = {h1,h2}`, `A = {e1}`;
//! * discrete space on `U = {h1,h2}`, `A = {e1}`.

use std::sync::Arc;

use crate::signature::SpaceSignature;
use crate::softset::SoftSet;
use crate::topology::SoftTopology;

pub fn example_signature() -> Arc<SpaceSignature> {
    Arc::new(SpaceSignature::standard(3, 2).expect("static signature"))
}

/// `F1 = (e1↦{h1,h2}, e2↦{h1})` over the example signature.
pub fn example_f1() -> SoftSet {
    SoftSet::parse_literal(&example_signature(), r#"{"e1":["h1","h2"],"e2":["h1"]}"#)
        .expect("static literal")
}

pub fn example_space() -> SoftTopology {
    let sig = example_signature();
    SoftTopology::validate(
        &sig,
        [SoftSet::null(&sig), SoftSet::absolute(&sig), example_f1()],
    )
    .expect("example topology is valid")
}

pub fn pair_signature() -> Arc<SpaceSignature> {
    Arc::new(SpaceSignature::standard(2, 1).expect("static signature"))
}

pub fn indiscrete_space() -> SoftTopology {
    SoftTopology::indiscrete(&pair_signature())
}

pub fn discrete_space() -> SoftTopology {
    SoftTopology::discrete(&pair_signature()).expect("2 bits is under any cap")
}
