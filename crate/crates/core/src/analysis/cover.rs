//! Covers, minimum subcovers and the finite intersection property.

use crate::bits::{ones, subset};
use crate::error::{Error, Result};
use crate::semi;
use crate::softset::SoftSet;
use crate::topology::SoftTopology;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub is_cover: bool,
    pub is_semiopen_cover: bool,
    /// Indices into the family of a smallest subfamily that still covers.
    pub minimal_subcover: Option<Vec<usize>>,
    pub fip_holds: bool,
    /// Indices of a smallest subfamily with null intersection.
    pub fip_violation: Option<Vec<usize>>,
}

/// Exact minimum set cover of `target` by members of `family`.
///
/// Branch and bound: the greedy cover is the first incumbent; a node is cut
/// when the sets already chosen plus `⌈uncovered / widest remaining set⌉`
/// cannot beat it; branching is on the uncovered cell with the fewest
/// covering sets, trying wider sets first, ties by encoding then index.
/// Returns indices in ascending order, or `None` when the family does not
/// cover `target`.
pub fn minimum_cover(target: u64, family: &[u64]) -> Option<Vec<usize>> {
    let reach = family.iter().fold(0, |acc, &s| acc | s);
    if !subset(target, reach) {
        return None;
    }
    let mut solver = Solver {
        family,
        best: greedy_cover(target, family),
        chosen: Vec::new(),
    };
    solver.search(target);
    let mut best = solver.best;
    best.sort_unstable();
    Some(best)
}

fn greedy_cover(target: u64, family: &[u64]) -> Vec<usize> {
    let mut uncovered = target;
    let mut chosen = Vec::new();
    while uncovered != 0 {
        let (i, _) = family
            .iter()
            .enumerate()
            .map(|(i, &s)| (i, (s & uncovered).count_ones()))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("target is reachable");
        chosen.push(i);
        uncovered &= !family[i];
    }
    chosen
}

struct Solver<'a> {
    family: &'a [u64],
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl Solver<'_> {
    fn search(&mut self, uncovered: u64) {
        if uncovered == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        let widest = self
            .family
            .iter()
            .map(|&s| (s & uncovered).count_ones())
            .max()
            .unwrap_or(0);
        if widest == 0 {
            return;
        }
        let lower = uncovered.count_ones().div_ceil(widest) as usize;
        if self.chosen.len() + lower >= self.best.len() {
            return;
        }
        let (cell, _) = ones(uncovered)
            .map(|p| (p, self.family.iter().filter(|&&s| s >> p & 1 == 1).count()))
            .min_by_key(|&(p, c)| (c, std::cmp::Reverse(p)))
            .expect("uncovered is nonzero");
        let mut options: Vec<usize> = (0..self.family.len())
            .filter(|&i| self.family[i] >> cell & 1 == 1)
            .collect();
        options.sort_by_key(|&i| {
            (
                std::cmp::Reverse((self.family[i] & uncovered).count_ones()),
                self.family[i],
                i,
            )
        });
        for i in options {
            self.chosen.push(i);
            self.search(uncovered & !self.family[i]);
            self.chosen.pop();
        }
    }
}

/// Smallest subfamily whose intersection inside `carrier` is null, if any.
///
/// A finite family has the finite intersection property exactly when its
/// own intersection is nonnull, so this is `None` iff the property holds.
pub fn fip_violation(carrier: u64, family: &[u64]) -> Option<Vec<usize>> {
    let complements: Vec<u64> = family.iter().map(|&s| carrier & !s).collect();
    minimum_cover(carrier, &complements)
}

pub fn has_fip(carrier: u64, family: &[u64]) -> bool {
    family.iter().fold(carrier, |acc, &s| acc & s) != 0
}

pub fn analyze_cover(t: &SoftTopology, carrier: &SoftSet, family: &[SoftSet]) -> Result<CoverReport> {
    let sig = t.signature();
    if **carrier.signature() != **sig || family.iter().any(|g| **g.signature() != **sig) {
        return Err(Error::SignatureMismatch);
    }
    let target = carrier.bits();
    let bits: Vec<u64> = family.iter().map(SoftSet::bits).collect();
    let is_cover = subset(target, bits.iter().fold(0, |acc, &s| acc | s));
    let is_semiopen_cover = is_cover
        && bits
            .iter()
            .all(|&g| subset(g, t.carrier_bits()) && semi::is_semiopen_bits(t, g));
    let minimal_subcover = if is_cover { minimum_cover(target, &bits) } else { None };
    let fip_violation = fip_violation(target, &bits);
    Ok(CoverReport {
        is_cover,
        is_semiopen_cover,
        minimal_subcover,
        fip_holds: fip_violation.is_none(),
        fip_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::semi::enumerate_soss;

    fn brute_force(target: u64, family: &[u64]) -> Option<usize> {
        (0u32..1 << family.len())
            .filter(|mask| {
                let u = ones(u64::from(*mask)).fold(0, |acc, i| acc | family[i as usize]);
                subset(target, u)
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
    }

    #[test]
    fn small_instances_match_brute_force() {
        let mut rng = crate::rng::SplitMix64::new(11);
        for _ in 0..300 {
            let k = 1 + rng.below(9) as usize;
            let family: Vec<u64> = (0..k).map(|_| rng.below(1 << 10)).collect();
            let target = (1 << 10) - 1;
            let got = minimum_cover(target, &family);
            assert_eq!(got.as_ref().map(Vec::len), brute_force(target, &family));
            if let Some(idx) = got {
                let u = idx.iter().fold(0, |acc, &i| acc | family[i]);
                assert!(subset(target, u));
            }
        }
    }

    #[test]
    fn empty_target_needs_nothing() {
        assert_eq!(minimum_cover(0, &[]), Some(vec![]));
        assert_eq!(minimum_cover(1, &[]), None);
    }

    #[test]
    fn fixture_covers() {
        let t = fixtures::example_space();
        let sig = t.signature();
        let whole = SoftSet::absolute(sig);

        let r = analyze_cover(&t, &whole, &[whole.clone()]).unwrap();
        assert!(r.is_cover && r.is_semiopen_cover);
        assert_eq!(r.minimal_subcover, Some(vec![0]));

        let soss = enumerate_soss(&t).unwrap();
        let r = analyze_cover(&t, &whole, &soss).unwrap();
        assert!(r.is_semiopen_cover);
        let min = r.minimal_subcover.unwrap();
        assert_eq!(min.len(), 1);
        assert!(soss[min[0]].is_absolute());
        // Φ_A is a member, so the intersection is null
        assert!(!r.fip_holds);
        assert_eq!(r.fip_violation.map(|v| v.len()), Some(1));

        let r = analyze_cover(&t, &whole, &[fixtures::example_f1()]).unwrap();
        assert!(!r.is_cover);
        assert_eq!(r.minimal_subcover, None);
        assert!(r.fip_holds);
    }

    #[test]
    fn fip_violation_is_smallest() {
        let sig = fixtures::example_signature();
        let lit = |s: &str| SoftSet::parse_literal(&sig, s).unwrap().bits();
        let family = [
            lit(r#"{"e1":["h1","h2"]}"#),
            lit(r#"{"e1":["h2","h3"]}"#),
            lit(r#"{"e1":["h1","h3"]}"#),
            lit(r#"{"e1":["h1"],"e2":["h1"]}"#),
        ];
        let full = sig.full_mask();
        assert!(!has_fip(full, &family));
        let v = fip_violation(full, &family).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v.iter().fold(full, |acc, &i| acc & family[i]), 0);
        assert!(has_fip(full, &family[..1]));
    }
}
