use thiserror::Error;

use crate::topology::TopologyViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("signature mismatch between soft sets")]
    SignatureMismatch,

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("malformed literal: {0}")]
    MalformedLiteral(String),

    #[error("intersection of an empty collection is undefined")]
    EmptyIntersection,

    #[error("lattice has {bits} bits, above the configured cap of {cap}")]
    BitCapExceeded { bits: u32, cap: u32 },

    #[error("generated topology exceeds {cap} open sets")]
    TopologyTooLarge { cap: usize },

    #[error("soft set is not contained in the space's carrier")]
    OutsideCarrier,

    #[error("soft set is not open: {0}")]
    NotOpen(String),

    #[error("{0}")]
    Violation(TopologyViolation),

    #[error("invalid soft function: {0}")]
    InvalidFunction(String),

    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("corpus bounds exceeded: {0}")]
    BoundsExceeded(String),

    #[error("corpus manifest: {0}")]
    Manifest(String),

    #[error("fingerprint mismatch: manifest says {expected}, files hash to {actual}")]
    FingerprintMismatch { expected: String, actual: String },

    #[error("asserted invariant {claim} violated on instance {instance}: {detail}")]
    InvariantViolated {
        claim: String,
        instance: String,
        detail: String,
    },

    #[error("claims never evaluated: {0}")]
    CoverageGap(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable name of the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidSignature(_) => "invalid-signature",
            Error::SignatureMismatch => "signature-mismatch",
            Error::UnknownLabel(_) => "unknown-label",
            Error::MalformedLiteral(_) => "malformed-literal",
            Error::EmptyIntersection => "empty-intersection",
            Error::BitCapExceeded { .. } => "bit-cap",
            Error::TopologyTooLarge { .. } => "topology-too-large",
            Error::OutsideCarrier => "outside-carrier",
            Error::NotOpen(_) => "not-open",
            Error::Violation(_) => "axiom-violation",
            Error::InvalidFunction(_) => "invalid-function",
            Error::UnknownAxiom(_) => "unknown-axiom",
            Error::UnknownClaim(_) => "unknown-claim",
            Error::BoundsExceeded(_) => "bounds",
            Error::Manifest(_) => "manifest",
            Error::FingerprintMismatch { .. } => "fingerprint-mismatch",
            Error::InvariantViolated { .. } => "invariant",
            Error::CoverageGap(_) => "coverage-gap",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}
