//! Corpus generation: every topology on small signatures, or seeded random
//! ones built from sampled subbases.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits;
use crate::rng::SplitMix64;
use crate::signature::SpaceSignature;
use crate::softset::SoftSet;
use crate::topology::{from_subbasis, SoftTopology};

/// Exhaustive enumeration is limited to this many lattice bits.
pub const EXHAUSTIVE_MAX_BITS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusSpec {
    pub max_n: usize,
    pub max_m: usize,
    pub max_bits: usize,
    pub mode: Mode,
    pub seed: u64,
    pub count: usize,
    pub density: f64,
}

impl CorpusSpec {
    /// All signatures with `n ≤ max_n`, `m ≤ max_m`, `n·m ≤ max_bits`.
    pub fn exhaustive(max_n: usize, max_m: usize, max_bits: usize) -> Self {
        Self {
            max_n,
            max_m,
            max_bits,
            mode: Mode::Exhaustive,
            seed: 0,
            count: 0,
            density: 0.0,
        }
    }

    /// `count` random topologies on the `n × m` standard signature.
    pub fn random(n: usize, m: usize, count: usize, seed: u64, density: f64) -> Self {
        Self {
            max_n: n,
            max_m: m,
            max_bits: n * m,
            mode: Mode::Random,
            seed,
            count,
            density,
        }
    }

    /// Standard signatures in the bounds, by lattice size then `n`.
    pub fn signatures(&self) -> Vec<Arc<SpaceSignature>> {
        let mut dims: Vec<(usize, usize)> = (1..=self.max_n)
            .flat_map(|n| (1..=self.max_m).map(move |m| (n, m)))
            .filter(|&(n, m)| n * m <= self.max_bits)
            .collect();
        dims.sort_by_key(|&(n, m)| (n * m, n));
        dims.into_iter()
            .map(|(n, m)| Arc::new(SpaceSignature::standard(n, m).expect("nonzero dims")))
            .collect()
    }

    pub fn generate(&self) -> Result<Vec<SoftTopology>> {
        match self.mode {
            Mode::Exhaustive => {
                if self.max_bits > EXHAUSTIVE_MAX_BITS {
                    return Err(Error::BoundsExceeded(format!(
                        "exhaustive mode allows at most {EXHAUSTIVE_MAX_BITS} lattice bits, got {}",
                        self.max_bits
                    )));
                }
                let mut out = Vec::new();
                for sig in self.signatures() {
                    out.extend(enumerate_topologies(&sig)?);
                }
                Ok(out)
            }
            Mode::Random => {
                if !(0.0..=1.0).contains(&self.density) {
                    return Err(Error::BoundsExceeded(format!(
                        "density {} is outside [0, 1]",
                        self.density
                    )));
                }
                let sig = Arc::new(SpaceSignature::standard(self.max_n, self.max_m)?);
                let mut master = SplitMix64::new(self.seed);
                (0..self.count)
                    .map(|_| random_topology(&sig, master.next_u64(), self.density))
                    .collect()
            }
        }
    }
}

/// Every topology on `sig` exactly once, ordered by sorted open codes.
///
/// Topologies on a finite set correspond one-to-one to preorders on its
/// points (the open sets are the up-closed sets), so the enumeration walks
/// all reflexive relations on the cells and keeps the transitive ones.
pub fn enumerate_topologies(sig: &Arc<SpaceSignature>) -> Result<Vec<SoftTopology>> {
    let k = sig.cells();
    if k > EXHAUSTIVE_MAX_BITS {
        return Err(Error::BoundsExceeded(format!(
            "exhaustive mode allows at most {EXHAUSTIVE_MAX_BITS} lattice bits, got {k}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let mut families: Vec<Vec<u64>> = Vec::new();
    for code in 0u64..1 << pairs.len() {
        // up[i]: bit positions j with i ≤ j
        let mut up: Vec<u64> = (0..k).map(|i| 1u64 << i).collect();
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if code >> b & 1 == 1 {
                up[i] |= 1 << j;
            }
        }
        let transitive = (0..k).all(|i| {
            crate::bits::ones(up[i]).all(|j| crate::bits::subset(up[j as usize], up[i]))
        });
        if !transitive {
            continue;
        }
        let opens: Vec<u64> = crate::bits::submasks(sig.full_mask())
            .filter(|&s| crate::bits::ones(s).all(|i| crate::bits::subset(up[i as usize], s)))
            .collect();
        families.push(opens);
    }
    families.sort();
    Ok(families
        .into_iter()
        .map(|f| SoftTopology::from_bits_trusted(sig, sig.full_mask(), f))
        .collect())
}

/// Seeded random topology: `⌈density · 2^bits⌉` distinct soft sets drawn
/// uniformly (Floyd's sampling over SplitMix64), closed into a topology.
///
/// Density 0 gives the indiscrete space, density 1 the discrete one.
pub fn random_topology(sig: &Arc<SpaceSignature>, seed: u64, density: f64) -> Result<SoftTopology> {
    let bits = sig.cells() as u32;
    limits::check_bits(bits)?;
    let total = 1u64 << bits;
    let density = density.clamp(0.0, 1.0);
    let k = ((density * total as f64).ceil() as u64).min(total);
    let mut rng = SplitMix64::new(seed);
    let mut chosen = BTreeSet::new();
    for j in total - k..total {
        let t = rng.below(j + 1);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    let seeds: Vec<SoftSet> = chosen
        .into_iter()
        .map(|b| SoftSet::from_bits(sig, b))
        .collect::<Result<_>>()?;
    from_subbasis(sig, &seeds)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_on_tiny_signatures() {
        let count = |n, m| enumerate_topologies(&Arc::new(SpaceSignature::standard(n, m).unwrap())).unwrap().len();
        assert_eq!(count(1, 1), 1);
        assert_eq!(count(2, 1), 4);
        assert_eq!(count(1, 2), 4);
        assert_eq!(count(3, 1), 29);
        assert_eq!(count(2, 2), 355);
    }

    #[test]
    fn enumeration_contains_both_extremes() {
        let sig = Arc::new(SpaceSignature::standard(2, 1).unwrap());
        let all = enumerate_topologies(&sig).unwrap();
        let discrete = SoftTopology::discrete(&sig).unwrap();
        assert!(all.contains(&SoftTopology::indiscrete(&sig)));
        assert!(all.contains(&discrete));
        assert!(enumerate_topologies(&Arc::new(SpaceSignature::standard(5, 1).unwrap())).is_err());
    }

    #[test]
    fn exhaustive_spec_orders_signatures() {
        let spec = CorpusSpec::exhaustive(4, 4, 4);
        let dims: Vec<(usize, usize)> = spec.signatures().iter().map(|s| (s.n(), s.m())).collect();
        assert_eq!(dims, vec![(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (1, 4), (2, 2), (4, 1)]);
        assert_eq!(spec.generate().unwrap().len(), 1132);
        assert!(CorpusSpec::exhaustive(5, 1, 5).generate().is_err());
    }

    #[test]
    fn random_extremes_and_determinism() {
        let sig = Arc::new(SpaceSignature::standard(3, 2).unwrap());
        assert_eq!(random_topology(&sig, 1, 0.0).unwrap(), SoftTopology::indiscrete(&sig));
        assert_eq!(random_topology(&sig, 1, 1.0).unwrap(), SoftTopology::discrete(&sig).unwrap());
        let a = random_topology(&sig, 99, 0.05).unwrap();
        let b = random_topology(&sig, 99, 0.05).unwrap();
        assert_eq!(a.encoding(), b.encoding());
        let spec = CorpusSpec::random(3, 2, 20, 42, 0.05);
        let x: Vec<String> = spec.generate().unwrap().iter().map(|t| t.encoding()).collect();
        let y: Vec<String> = spec.generate().unwrap().iter().map(|t| t.encoding()).collect();
        assert_eq!(x, y);
        assert!(CorpusSpec::random(3, 2, 1, 0, 1.5).generate().is_err());
    }
}
