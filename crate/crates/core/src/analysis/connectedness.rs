//! Semiconnectedness: separations of the carrier by semiopen sets.

use crate::error::Result;
use crate::semi::semi_families;
use crate::softset::SoftSet;
use crate::topology::SoftTopology;

/// Two disjoint nonnull sets whose union is the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub first: SoftSet,
    pub second: SoftSet,
}

/// Orders the pair so the part holding the carrier's first cell comes first.
fn separation(t: &SoftTopology, g: u64) -> Separation {
    let h = t.carrier_bits() & !g;
    // disjoint parts of the carrier: the larger word holds the earlier cell
    let (a, b) = if g > h { (g, h) } else { (h, g) };
    Separation {
        first: t.wrap(a),
        second: t.wrap(b),
    }
}

fn proper(t: &SoftTopology, g: u64) -> bool {
    g != 0 && g != t.carrier_bits()
}

/// First `G` in `SOSS` order, other than `Φ` and the carrier, whose
/// complement is semiopen too.
pub fn find_semiseparation(t: &SoftTopology) -> Result<Option<Separation>> {
    let fam = semi_families(t)?;
    Ok(fam
        .semiopen
        .iter()
        .find(|&&g| proper(t, g) && fam.is_semiopen(t.complement_bits(g)))
        .map(|&g| separation(t, g)))
}

/// Nonnull proper sets that are both semiopen and semiclosed.
pub fn semi_clopen_sets(t: &SoftTopology) -> Result<Vec<SoftSet>> {
    let fam = semi_families(t)?;
    Ok(fam
        .semiopen
        .iter()
        .filter(|&&g| proper(t, g) && fam.is_semiclosed(g))
        .map(|&g| t.wrap(g))
        .collect())
}

pub fn is_semiconnected(t: &SoftTopology) -> Result<bool> {
    Ok(find_semiseparation(t)?.is_none())
}

/// Separation by two open sets.
pub fn find_open_separation(t: &SoftTopology) -> Option<Separation> {
    t.open_bits()
        .iter()
        .find(|&&g| proper(t, g) && t.is_open_bits(t.complement_bits(g)))
        .map(|&g| separation(t, g))
}

/// Oracle: searches pairs of semiopen sets straight from the definition.
pub fn find_semiseparation_by_pairs(t: &SoftTopology) -> Result<Option<Separation>> {
    let fam = semi_families(t)?;
    let carrier = t.carrier_bits();
    for &g in &fam.semiopen {
        for &h in &fam.semiopen {
            if g != 0 && h != 0 && g & h == 0 && g | h == carrier {
                return Ok(Some(separation(t, g)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures() {
        assert!(find_semiseparation(&fixtures::indiscrete_space()).unwrap().is_none());
        assert!(find_semiseparation(&fixtures::example_space()).unwrap().is_none());

        let dis = fixtures::discrete_space();
        let s = find_semiseparation(&dis).unwrap().unwrap();
        assert_eq!(s.first.to_literal(), r#"{"e1":["h1"]}"#);
        assert_eq!(s.second.to_literal(), r#"{"e1":["h2"]}"#);
        assert_eq!(find_open_separation(&dis), Some(s.clone()));
        assert_eq!(find_semiseparation_by_pairs(&dis).unwrap(), Some(s));
        assert_eq!(semi_clopen_sets(&dis).unwrap().len(), 2);
        assert!(semi_clopen_sets(&fixtures::example_space()).unwrap().is_empty());
    }

    #[test]
    fn subspace_carrier_is_respected() {
        let dis = fixtures::discrete_space();
        let sub = dis
            .subspace(&SoftSet::parse_literal(dis.signature(), r#"{"e1":["h2"]}"#).unwrap())
            .unwrap();
        assert!(is_semiconnected(&sub).unwrap());
    }
}
