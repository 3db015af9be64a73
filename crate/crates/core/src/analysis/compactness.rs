//! Semicompactness and its two intersection characterizations.
//!
//! Every cover of a finite space is finite, so every instance here is
//! semicompact. What the report adds is a mechanical check of the two
//! equivalent forms:
//!
//! * every subfamily of `SCSS` with the finite intersection property has a
//!   nonnull intersection;
//! * every family of soft sets with the finite intersection property has
//!   `⋂ sscl G ≠ Φ`.

use crate::bits::ones;
use crate::error::Result;
use crate::limits;
use crate::rng::{seed_from, SplitMix64};
use crate::semi::{self, semi_families};
use crate::softset::SoftSet;
use crate::topology::SoftTopology;

/// Families up to this size are checked over every subfamily.
pub const EXHAUSTIVE_FAMILY: usize = 12;
/// Random subfamilies drawn when the family is larger.
pub const SAMPLED_FAMILIES: usize = 2048;
/// Largest random family for the semi-closure form.
const SAMPLED_FAMILY_SIZE: u64 = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterizationCheck {
    pub holds: bool,
    /// All subfamilies were visited (as opposed to a seeded sample).
    pub exhaustive: bool,
    pub families_checked: u64,
    /// Families with the property whose (semi-closed) intersection was null.
    pub counterexample: Option<Vec<SoftSet>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemicompactReport {
    pub semicompact: bool,
    pub note: &'static str,
    pub fip_characterization: CharacterizationCheck,
    pub sscl_characterization: CharacterizationCheck,
}

pub const FINITE_NOTE: &str = "finite space: every semiopen cover is already finite";

/// `fip[mask]` for every subfamily mask, by dynamic programming over masks:
/// a family has the property iff its own intersection is nonnull and every
/// family with one member removed has it too.
pub(crate) fn fip_table(carrier: u64, family: &[u64]) -> (Vec<u64>, Vec<bool>) {
    let size = 1usize << family.len();
    let mut inter = vec![carrier; size];
    let mut fip = vec![true; size];
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        inter[mask] = inter[mask & (mask - 1)] & family[low];
        fip[mask] = inter[mask] != 0
            && ones(mask as u64).all(|i| fip[mask & !(1 << i)]);
    }
    (inter, fip)
}

fn sample_subfamily(rng: &mut SplitMix64, len: usize) -> Vec<usize> {
    let picked: Vec<usize> = (0..len).filter(|_| rng.coin()).collect();
    if picked.is_empty() {
        vec![rng.below(len as u64) as usize]
    } else {
        picked
    }
}

fn check_semiclosed_fip(t: &SoftTopology, scss: &[u64], rng: &mut SplitMix64) -> CharacterizationCheck {
    let carrier = t.carrier_bits();
    let wrap = |idx: &[usize]| idx.iter().map(|&i| t.wrap(scss[i])).collect::<Vec<_>>();
    if scss.len() <= EXHAUSTIVE_FAMILY {
        let (inter, fip) = fip_table(carrier, scss);
        let bad = (1..inter.len()).find(|&m| fip[m] && inter[m] == 0);
        return CharacterizationCheck {
            holds: bad.is_none(),
            exhaustive: true,
            families_checked: (inter.len() - 1) as u64,
            counterexample: bad.map(|m| {
                wrap(&ones(m as u64).map(|i| i as usize).collect::<Vec<_>>())
            }),
        };
    }
    let mut counterexample = None;
    for _ in 0..SAMPLED_FAMILIES {
        let idx = sample_subfamily(rng, scss.len());
        let members: Vec<u64> = idx.iter().map(|&i| scss[i]).collect();
        let (inter, fip) = if members.len() <= EXHAUSTIVE_FAMILY {
            let (inter, fip) = fip_table(carrier, &members);
            (inter[inter.len() - 1], fip[fip.len() - 1])
        } else {
            // the family's own intersection decides the property
            let i = members.iter().fold(carrier, |acc, &s| acc & s);
            (i, i != 0)
        };
        if fip && inter == 0 {
            counterexample = Some(wrap(&idx));
            break;
        }
    }
    CharacterizationCheck {
        holds: counterexample.is_none(),
        exhaustive: false,
        families_checked: SAMPLED_FAMILIES as u64,
        counterexample,
    }
}

fn check_sscl_form(t: &SoftTopology, rng: &mut SplitMix64) -> CharacterizationCheck {
    let carrier = t.carrier_bits();
    let cells: Vec<u32> = ones(carrier).collect();
    let mut counterexample = None;
    for _ in 0..SAMPLED_FAMILIES {
        let size = 1 + rng.below(SAMPLED_FAMILY_SIZE) as usize;
        let family: Vec<u64> = (0..size)
            .map(|_| {
                cells
                    .iter()
                    .filter(|_| rng.coin())
                    .fold(0, |acc, &p| acc | 1 << p)
            })
            .collect();
        let (_, fip) = fip_table(carrier, &family);
        if !fip[fip.len() - 1] {
            continue;
        }
        let closed = family
            .iter()
            .fold(carrier, |acc, &g| acc & semi::sscl_bits(t, g));
        if closed == 0 {
            counterexample = Some(family.iter().map(|&g| t.wrap(g)).collect());
            break;
        }
    }
    CharacterizationCheck {
        holds: counterexample.is_none(),
        exhaustive: false,
        families_checked: SAMPLED_FAMILIES as u64,
        counterexample,
    }
}

/// Always semicompact; both characterizations are evaluated and reported.
///
/// Sampling is seeded from the space's encoding, so reports are reproducible.
pub fn is_semicompact(t: &SoftTopology) -> Result<SemicompactReport> {
    limits::check_bits(t.lattice_bits())?;
    let fam = semi_families(t)?;
    let mut rng = SplitMix64::new(seed_from(&t.encoding()));
    let fip_characterization = check_semiclosed_fip(t, &fam.semiclosed, &mut rng);
    let sscl_characterization = check_sscl_form(t, &mut rng);
    Ok(SemicompactReport {
        semicompact: true,
        note: FINITE_NOTE,
        fip_characterization,
        sscl_characterization,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fip_table_matches_definition() {
        let family = [0b1100u64, 0b0110, 0b0011, 0b1110];
        let (inter, fip) = fip_table(0b1111, &family);
        for mask in 1..16usize {
            let members: Vec<u64> = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| family[i]).collect();
            let expect = (1..1usize << members.len()).all(|sub| {
                (0..members.len())
                    .filter(|i| sub >> i & 1 == 1)
                    .fold(0b1111, |acc, i| acc & members[i])
                    != 0
            });
            assert_eq!(fip[mask], expect, "mask {mask:b}");
            assert_eq!(fip[mask], inter[mask] != 0);
        }
    }

    #[test]
    fn fixtures_are_semicompact_with_both_forms() {
        for t in [fixtures::indiscrete_space(), fixtures::example_space(), fixtures::discrete_space()] {
            let r = is_semicompact(&t).unwrap();
            assert!(r.semicompact);
            assert!(r.fip_characterization.holds);
            assert!(r.sscl_characterization.holds);
        }
        let r = is_semicompact(&fixtures::example_space()).unwrap();
        assert!(r.fip_characterization.exhaustive);
        assert_eq!(r.fip_characterization.families_checked, (1 << 9) - 1);
    }

    #[test]
    fn reports_are_reproducible() {
        let t = crate::topology::SoftTopology::discrete(&crate::signature::SpaceSignature::standard(2, 2).unwrap().into()).unwrap();
        let a = is_semicompact(&t).unwrap();
        let b = is_semicompact(&t).unwrap();
        assert_eq!(a, b);
        assert!(!a.fip_characterization.exhaustive);
    }
}
