//! Soft topologies: axiom validation, interior and closure, subspaces, bases.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::bits::{self, ones, submasks};
use crate::error::{Error, Result};
use crate::limits;
use crate::semi::SemiFamilies;
use crate::signature::SpaceSignature;
use crate::softset::{SoftPoint, SoftSet};

/// The first axiom a candidate family breaks, with the sets that show it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyViolation {
    MissingNull,
    MissingCarrier,
    OutsideCarrier { set: SoftSet },
    UnionNotOpen { left: SoftSet, right: SoftSet },
    IntersectionNotOpen { left: SoftSet, right: SoftSet },
}

impl TopologyViolation {
    /// Short stable name of the violated axiom.
    pub fn axiom(&self) -> &'static str {
        match self {
            Self::MissingNull | Self::MissingCarrier => "contains-null-and-whole",
            Self::OutsideCarrier { .. } => "within-carrier",
            Self::UnionNotOpen { .. } => "closed-under-union",
            Self::IntersectionNotOpen { .. } => "closed-under-intersection",
        }
    }
}

impl fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axiom {} violated: ", self.axiom())?;
        match self {
            Self::MissingNull => write!(f, "null soft set is not open"),
            Self::MissingCarrier => write!(f, "whole space is not open"),
            Self::OutsideCarrier { set } => write!(f, "{set} lies outside the carrier"),
            Self::UnionNotOpen { left, right } => {
                write!(f, "union of {left} and {right} is not open")
            }
            Self::IntersectionNotOpen { left, right } => {
                write!(f, "intersection of {left} and {right} is not open")
            }
        }
    }
}

/// A validated soft topology `(U_A, τ)`.
///
/// The whole space is the `carrier`: `U_A` for ordinary spaces, a soft subset
/// of it for subspaces. Complements, closures and points are taken relative
/// to the carrier. Closed sets are not stored; they are complements of opens.
#[derive(Clone)]
pub struct SoftTopology {
    sig: Arc<SpaceSignature>,
    carrier: u64,
    opens: Vec<u64>,
    index: HashSet<u64>,
    /// Minimal open set around each carrier bit, indexed by bit position.
    neighbourhoods: Vec<u64>,
    pub(crate) semi_cache: OnceLock<Arc<SemiFamilies>>,
}

impl SoftTopology {
    /// Validates `opens` as a topology on `U_A`.
    pub fn validate<I>(sig: &Arc<SpaceSignature>, opens: I) -> Result<Self>
    where
        I: IntoIterator<Item = SoftSet>,
    {
        Self::validate_with_carrier(sig, &SoftSet::absolute(sig), opens)
    }

    /// Validates `opens` as a topology whose whole space is `carrier`.
    pub fn validate_with_carrier<I>(sig: &Arc<SpaceSignature>, carrier: &SoftSet, opens: I) -> Result<Self>
    where
        I: IntoIterator<Item = SoftSet>,
    {
        let carrier_bits = own_bits(sig, carrier)?;
        let mut family = Vec::new();
        for set in opens {
            let b = own_bits(sig, &set)?;
            if !bits::subset(b, carrier_bits) {
                return Err(Error::Violation(TopologyViolation::OutsideCarrier { set }));
            }
            family.push(b);
        }
        family.sort_unstable();
        family.dedup();
        let index: HashSet<u64> = family.iter().copied().collect();
        if !index.contains(&0) {
            return Err(Error::Violation(TopologyViolation::MissingNull));
        }
        if !index.contains(&carrier_bits) {
            return Err(Error::Violation(TopologyViolation::MissingCarrier));
        }
        let neighbourhoods = compute_neighbourhoods(sig, carrier_bits, &family);
        if !fast_accept(carrier_bits, &family, &neighbourhoods) {
            if let Some(v) = pairwise_violation(sig, &family, &index) {
                return Err(Error::Violation(v));
            }
        }
        Ok(Self::assemble(sig, carrier_bits, family, index, neighbourhoods))
    }

    /// Builds from a family already known to satisfy the axioms.
    pub(crate) fn from_bits_trusted(sig: &Arc<SpaceSignature>, carrier: u64, mut family: Vec<u64>) -> Self {
        family.sort_unstable();
        family.dedup();
        let index: HashSet<u64> = family.iter().copied().collect();
        let neighbourhoods = compute_neighbourhoods(sig, carrier, &family);
        debug_assert!(index.contains(&0) && index.contains(&carrier));
        Self::assemble(sig, carrier, family, index, neighbourhoods)
    }

    fn assemble(
        sig: &Arc<SpaceSignature>,
        carrier: u64,
        opens: Vec<u64>,
        index: HashSet<u64>,
        neighbourhoods: Vec<u64>,
    ) -> Self {
        Self {
            sig: Arc::clone(sig),
            carrier,
            opens,
            index,
            neighbourhoods,
            semi_cache: OnceLock::new(),
        }
    }

    /// `{Φ_A, U_A}`.
    pub fn indiscrete(sig: &Arc<SpaceSignature>) -> Self {
        Self::from_bits_trusted(sig, sig.full_mask(), vec![0, sig.full_mask()])
    }

    /// Every soft set is open.
    pub fn discrete(sig: &Arc<SpaceSignature>) -> Result<Self> {
        limits::check_bits(sig.cells() as u32)?;
        Ok(Self::from_bits_trusted(
            sig,
            sig.full_mask(),
            submasks(sig.full_mask()).collect(),
        ))
    }

    pub fn signature(&self) -> &Arc<SpaceSignature> {
        &self.sig
    }

    pub fn carrier(&self) -> SoftSet {
        SoftSet::from_bits_unchecked(&self.sig, self.carrier)
    }

    pub fn carrier_bits(&self) -> u64 {
        self.carrier
    }

    /// Whether the whole space is `U_A`.
    pub fn is_full(&self) -> bool {
        self.carrier == self.sig.full_mask()
    }

    /// Number of cells in the carrier.
    pub fn lattice_bits(&self) -> u32 {
        self.carrier.count_ones()
    }

    /// Open sets in canonical order.
    pub fn opens(&self) -> Vec<SoftSet> {
        self.opens.iter().map(|&b| self.wrap(b)).collect()
    }

    pub fn open_bits(&self) -> &[u64] {
        &self.opens
    }

    /// Number of open sets.
    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens.is_empty()
    }

    pub(crate) fn wrap(&self, bits: u64) -> SoftSet {
        SoftSet::from_bits_unchecked(&self.sig, bits)
    }

    /// Checks signature and carrier membership and returns the raw bits.
    pub(crate) fn own(&self, g: &SoftSet) -> Result<u64> {
        let b = own_bits(&self.sig, g)?;
        if !bits::subset(b, self.carrier) {
            return Err(Error::OutsideCarrier);
        }
        Ok(b)
    }

    pub fn is_open(&self, g: &SoftSet) -> Result<bool> {
        Ok(self.is_open_bits(self.own(g)?))
    }

    pub fn is_closed(&self, g: &SoftSet) -> Result<bool> {
        Ok(self.is_closed_bits(self.own(g)?))
    }

    pub fn is_open_bits(&self, g: u64) -> bool {
        self.index.contains(&g)
    }

    pub fn is_closed_bits(&self, g: u64) -> bool {
        bits::subset(g, self.carrier) && self.index.contains(&(self.carrier & !g))
    }

    /// Complement relative to the carrier.
    pub fn complement(&self, g: &SoftSet) -> Result<SoftSet> {
        Ok(self.wrap(self.complement_bits(self.own(g)?)))
    }

    pub fn complement_bits(&self, g: u64) -> u64 {
        self.carrier & !g
    }

    /// Closed sets in canonical order.
    pub fn closed_bits(&self) -> Vec<u64> {
        let mut closed: Vec<u64> = self.opens.iter().map(|&o| self.complement_bits(o)).collect();
        closed.sort_unstable();
        closed
    }

    /// Largest open subset.
    pub fn interior(&self, g: &SoftSet) -> Result<SoftSet> {
        Ok(self.wrap(self.interior_bits(self.own(g)?)))
    }

    /// Smallest closed superset.
    pub fn closure(&self, g: &SoftSet) -> Result<SoftSet> {
        Ok(self.wrap(self.closure_bits(self.own(g)?)))
    }

    /// A cell is interior iff its minimal open neighbourhood stays inside `g`.
    pub fn interior_bits(&self, g: u64) -> u64 {
        ones(self.carrier)
            .filter(|&p| bits::subset(self.neighbourhoods[p as usize], g))
            .fold(0, |acc, p| acc | (1u64 << p))
    }

    /// A cell is adherent iff its minimal open neighbourhood meets `g`.
    pub fn closure_bits(&self, g: u64) -> u64 {
        ones(self.carrier)
            .filter(|&p| self.neighbourhoods[p as usize] & g != 0)
            .fold(0, |acc, p| acc | (1u64 << p))
    }

    /// Smallest open superset of `g` (inside the carrier).
    pub fn open_hull_bits(&self, g: u64) -> u64 {
        ones(g & self.carrier).fold(0, |acc, p| acc | self.neighbourhoods[p as usize])
    }

    /// Union of all open subsets of `g`.
    pub fn interior_by_definition_bits(&self, g: u64) -> u64 {
        self.opens
            .iter()
            .filter(|&&o| bits::subset(o, g))
            .fold(0, |acc, &o| acc | o)
    }

    /// Intersection of all closed supersets of `g`.
    pub fn closure_by_definition_bits(&self, g: u64) -> u64 {
        self.opens
            .iter()
            .map(|&o| self.complement_bits(o))
            .filter(|&c| bits::subset(g, c))
            .fold(self.carrier, |acc, c| acc & c)
    }

    /// Minimal open set containing the point.
    pub fn neighbourhood(&self, p: &SoftPoint) -> Result<SoftSet> {
        let b = self.own(&p.as_soft_set())?;
        Ok(self.wrap(self.neighbourhoods[b.trailing_zeros() as usize]))
    }

    /// Soft points of the carrier in canonical order.
    pub fn points(&self) -> Vec<SoftPoint> {
        self.point_bits()
            .map(|b| SoftPoint::from_cell(&self.sig, self.sig.bit_cell(b.trailing_zeros())))
            .collect()
    }

    /// Single-cell masks of the carrier in canonical (descending bit) order.
    pub fn point_bits(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.sig.cells())
            .map(|c| self.sig.cell_bit(c))
            .filter(|&b| b & self.carrier != 0)
    }

    /// Subspace topology `{O ∩̃ carrier | O ∈ τ}`.
    pub fn subspace(&self, carrier: &SoftSet) -> Result<SoftTopology> {
        let c = own_bits(&self.sig, carrier)? & self.carrier;
        Ok(self.subspace_bits(c))
    }

    pub(crate) fn subspace_bits(&self, carrier: u64) -> SoftTopology {
        let family = self.opens.iter().map(|&o| o & carrier).collect();
        Self::from_bits_trusted(&self.sig, carrier, family)
    }

    /// Whether every open set is a union of members of `basis`.
    ///
    /// `Φ_A` is always the empty union.
    pub fn is_basis(&self, basis: &[SoftSet]) -> Result<bool> {
        let mut members = Vec::with_capacity(basis.len());
        for b in basis {
            let bits = self.own(b)?;
            if !self.is_open_bits(bits) {
                return Err(Error::NotOpen(b.to_literal()));
            }
            members.push(bits);
        }
        Ok(self.opens.iter().all(|&o| {
            members
                .iter()
                .filter(|&&b| bits::subset(b, o))
                .fold(0, |acc, &b| acc | b)
                == o
        }))
    }

    /// Canonical text encoding: labels, carrier and sorted open codes.
    pub fn encoding(&self) -> String {
        let cells = self.sig.cells();
        let code = |b: u64| format!("{:0width$b}", b, width = cells);
        let opens: Vec<String> = self.opens.iter().map(|&o| code(o)).collect();
        format!(
            "U={};A={};C={};O={}",
            self.sig.universe().join(","),
            self.sig.parameters().join(","),
            code(self.carrier),
            opens.join(",")
        )
    }
}

impl PartialEq for SoftTopology {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.opens == other.opens && *self.sig == *other.sig
    }
}

impl Eq for SoftTopology {}

impl fmt::Debug for SoftTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SoftTopology")
            .field("carrier", &self.carrier())
            .field("opens", &self.opens())
            .finish()
    }
}

fn own_bits(sig: &Arc<SpaceSignature>, g: &SoftSet) -> Result<u64> {
    if Arc::ptr_eq(sig, g.signature()) || **sig == **g.signature() {
        Ok(g.bits())
    } else {
        Err(Error::SignatureMismatch)
    }
}

fn compute_neighbourhoods(sig: &SpaceSignature, carrier: u64, family: &[u64]) -> Vec<u64> {
    let mut nbhd = vec![0u64; sig.cells()];
    for p in ones(carrier) {
        let bit = 1u64 << p;
        nbhd[p as usize] = family
            .iter()
            .filter(|&&o| o & bit != 0)
            .fold(carrier, |acc, &o| acc & o);
    }
    nbhd
}

/// Sufficient test for large families: a family that is as large as the
/// Alexandrov topology of its own neighbourhood preorder equals it.
fn fast_accept(carrier: u64, family: &[u64], nbhd: &[u64]) -> bool {
    let cells = carrier.count_ones();
    if family.len() <= 2048 || cells > 24 {
        return false;
    }
    let upsets = submasks(carrier)
        .filter(|&s| ones(s).all(|p| bits::subset(nbhd[p as usize], s)))
        .count();
    upsets == family.len()
}

fn pairwise_violation(
    sig: &Arc<SpaceSignature>,
    family: &[u64],
    index: &HashSet<u64>,
) -> Option<TopologyViolation> {
    let wrap = |b| SoftSet::from_bits_unchecked(sig, b);
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if !index.contains(&(a | b)) {
                return Some(TopologyViolation::UnionNotOpen {
                    left: wrap(a),
                    right: wrap(b),
                });
            }
        }
    }
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if !index.contains(&(a & b)) {
                return Some(TopologyViolation::IntersectionNotOpen {
                    left: wrap(a),
                    right: wrap(b),
                });
            }
        }
    }
    None
}

/// Smallest topology on `U_A` containing `seeds`.
///
/// Fails when the result would exceed `max_opens` members.
pub fn from_subbasis_capped(sig: &Arc<SpaceSignature>, seeds: &[SoftSet], max_opens: usize) -> Result<SoftTopology> {
    let full = sig.full_mask();
    let mut seed_bits = Vec::with_capacity(seeds.len());
    for s in seeds {
        seed_bits.push(own_bits(sig, s)?);
    }
    seed_bits.sort_unstable();
    seed_bits.dedup();

    // finite intersections of seeds, with U_A as the empty intersection
    let mut meets: HashSet<u64> = HashSet::from([full]);
    for &s in &seed_bits {
        let new: Vec<u64> = meets.iter().map(|&m| m & s).collect();
        meets.extend(new);
        if meets.len() > max_opens {
            return Err(Error::TopologyTooLarge { cap: max_opens });
        }
    }

    // arbitrary unions of those, with Φ_A as the empty union
    let mut base: Vec<u64> = meets.into_iter().collect();
    base.sort_unstable();
    let mut opens: HashSet<u64> = HashSet::from([0]);
    for &b in &base {
        let new: Vec<u64> = opens.iter().map(|&o| o | b).collect();
        opens.extend(new);
        if opens.len() > max_opens {
            return Err(Error::TopologyTooLarge { cap: max_opens });
        }
    }
    Ok(SoftTopology::from_bits_trusted(sig, full, opens.into_iter().collect()))
}

/// [`from_subbasis_capped`] with the cap at `2^bit_cap` members.
pub fn from_subbasis(sig: &Arc<SpaceSignature>, seeds: &[SoftSet]) -> Result<SoftTopology> {
    from_subbasis_capped(sig, seeds, 1usize << limits::bit_cap())
}
