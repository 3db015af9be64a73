//! One corpus instance prepared for claim evaluation: its semi families,
//! the soft sets and carriers the checks quantify over, and the maps
//! leaving it.

use std::sync::{Arc, OnceLock};

use crate::analysis::compactness::{is_semicompact, SemicompactReport};
use crate::analysis::separation::{axiom_report, AxiomReport};
use crate::bits::submasks;
use crate::error::Result;
use crate::maps::{classify_map, MapClassification, SoftFunction};
use crate::rng::{seed_from, SplitMix64};
use crate::semi::{semi_families, SemiFamilies};
use crate::softset::SoftSet;
use crate::topology::SoftTopology;

/// Carriers up to this many cells are quantified over every soft set.
pub const ALL_SETS_MAX_CELLS: u32 = 8;
/// Soft sets drawn when the carrier is larger.
pub const SAMPLED_SETS: usize = 128;
/// Pair loops visit every pair up to this many members, a sample beyond.
pub const ALL_PAIRS_MAX: usize = 64;
pub const SAMPLED_PAIRS: usize = 4096;
/// Subspace carriers: all nonnull ones up to this many cells, else a sample.
pub const ALL_CARRIERS_MAX_CELLS: u32 = 4;
pub const SAMPLED_CARRIERS: usize = 16;

/// A soft function out of the instance with its target and classification.
#[derive(Debug, Clone)]
pub struct MapCase {
    pub function: SoftFunction,
    pub target: SoftTopology,
    pub class: MapClassification,
    /// Soft sets of the target the checks quantify over.
    pub target_sets: Vec<u64>,
}

impl MapCase {
    pub fn new(function: SoftFunction, source: &SoftTopology, target: SoftTopology) -> Result<Self> {
        let class = classify_map(&function, source, &target)?;
        let target_sets = quantified_sets(&target);
        Ok(Self {
            function,
            target,
            class,
            target_sets,
        })
    }

    pub fn image_of_whole(&self, source: &SoftTopology) -> u64 {
        self.function.image_bits(source.carrier_bits())
    }
}

fn quantified_sets(t: &SoftTopology) -> Vec<u64> {
    let carrier = t.carrier_bits();
    if carrier.count_ones() <= ALL_SETS_MAX_CELLS {
        return submasks(carrier).collect();
    }
    let mut rng = SplitMix64::new(seed_from(&t.encoding()) ^ 0x5E75);
    let mut sets: Vec<u64> = (0..SAMPLED_SETS - 2).map(|_| rng.next_u64() & carrier).collect();
    sets.push(0);
    sets.push(carrier);
    sets.sort_unstable();
    sets.dedup();
    sets
}

/// Every ordered pair when the list is short, a seeded sample otherwise.
pub fn pairs_of(items: &[u64], seed: u64) -> Vec<(u64, u64)> {
    if items.len() <= ALL_PAIRS_MAX {
        return items
            .iter()
            .flat_map(|&a| items.iter().map(move |&b| (a, b)))
            .collect();
    }
    let mut rng = SplitMix64::new(seed);
    let n = items.len() as u64;
    (0..SAMPLED_PAIRS)
        .map(|_| (items[rng.below(n) as usize], items[rng.below(n) as usize]))
        .collect()
}

/// Up to `cap` sets `K` with `lo ⊆ K ⊆ hi`, ascending.
pub fn between(lo: u64, hi: u64, cap: usize) -> Vec<u64> {
    submasks(hi & !lo).take(cap).map(|s| s | lo).collect()
}

/// A subspace carrier with its semi-separation report.
#[derive(Debug, Clone)]
pub struct Subspace {
    pub carrier: u64,
    pub space: SoftTopology,
    pub axioms: AxiomReport,
}

pub struct Case<'a> {
    pub space: &'a SoftTopology,
    pub maps: &'a [MapCase],
    pub fam: Arc<SemiFamilies>,
    pub sets: Vec<u64>,
    pub carriers: Vec<u64>,
    pub seed: u64,
    axioms: OnceLock<AxiomReport>,
    compactness: OnceLock<SemicompactReport>,
    subspaces: OnceLock<Vec<Subspace>>,
}

impl<'a> Case<'a> {
    pub fn new(space: &'a SoftTopology, maps: &'a [MapCase]) -> Result<Self> {
        let fam = semi_families(space)?;
        let seed = seed_from(&space.encoding());
        let carrier = space.carrier_bits();
        let carriers = if carrier.count_ones() <= ALL_CARRIERS_MAX_CELLS {
            submasks(carrier).skip(1).collect()
        } else {
            let mut rng = SplitMix64::new(seed ^ 0xCA77);
            let mut c: Vec<u64> = (0..SAMPLED_CARRIERS)
                .map(|_| rng.next_u64() & carrier)
                .filter(|&v| v != 0)
                .collect();
            c.push(carrier);
            c.sort_unstable();
            c.dedup();
            c
        };
        Ok(Self {
            space,
            maps,
            fam,
            sets: quantified_sets(space),
            carriers,
            seed,
            axioms: OnceLock::new(),
            compactness: OnceLock::new(),
            subspaces: OnceLock::new(),
        })
    }

    pub fn rng(&self, stream: u64) -> SplitMix64 {
        SplitMix64::new(self.seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }

    pub fn carrier(&self) -> u64 {
        self.space.carrier_bits()
    }

    pub fn wrap(&self, bits: u64) -> SoftSet {
        self.space.wrap(bits)
    }

    pub fn axioms(&self) -> &AxiomReport {
        self.axioms
            .get_or_init(|| axiom_report(self.space).expect("families already computed"))
    }

    pub fn compactness(&self) -> &SemicompactReport {
        self.compactness
            .get_or_init(|| is_semicompact(self.space).expect("families already computed"))
    }

    pub fn subspaces(&self) -> &[Subspace] {
        self.subspaces.get_or_init(|| {
            self.carriers
                .iter()
                .map(|&v| {
                    let space = self.space.subspace_bits(v);
                    let axioms = axiom_report(&space).expect("subspace fits under the cap");
                    Subspace {
                        carrier: v,
                        space,
                        axioms,
                    }
                })
                .collect()
        })
    }
}
