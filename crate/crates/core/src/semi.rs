//! Semiopen and semiclosed soft sets, semi-interior and semi-closure.
//!
//! The operators here use closed forms over interior and closure:
//!
//! * `G` semiopen   ⟺ `G ⊆ cl(int G)`, witness `int G`;
//! * `G` semiclosed ⟺ `int(cl G) ⊆ G`, witness `cl G`;
//! * `ssint G = G ∩ cl(int G)`;
//! * `sscl G  = G ∪ int(cl G)`.
//!
//! [`definitional`] evaluates the same notions straight from the
//! definitions (witness search over opens or closed sets, unions and
//! intersections over the enumerated families). The two must agree on every
//! space; the test suites and the claim registry check that they do.

use std::sync::Arc;

use crate::bits::{self, submasks};
use crate::error::Result;
use crate::limits;
use crate::softset::SoftSet;
use crate::topology::SoftTopology;

/// Outcome of a semiopen or semiclosed test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiVerdict {
    pub holds: bool,
    /// Open `H` with `H ⊆ G ⊆ cl H`, or closed `K` with `int K ⊆ G ⊆ K`.
    pub witness: Option<SoftSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiClassification {
    pub is_open: bool,
    pub is_closed: bool,
    pub is_semiopen: bool,
    pub is_semiclosed: bool,
    pub semiopen_witness: Option<SoftSet>,
    pub semiclosed_witness: Option<SoftSet>,
}

/// Semiopen and semiclosed families of one space, canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiFamilies {
    pub semiopen: Vec<u64>,
    pub semiclosed: Vec<u64>,
}

impl SemiFamilies {
    pub fn is_semiopen(&self, g: u64) -> bool {
        self.semiopen.binary_search(&g).is_ok()
    }

    pub fn is_semiclosed(&self, g: u64) -> bool {
        self.semiclosed.binary_search(&g).is_ok()
    }
}

pub(crate) fn is_semiopen_bits(t: &SoftTopology, g: u64) -> bool {
    bits::subset(g, t.closure_bits(t.interior_bits(g)))
}

pub(crate) fn is_semiclosed_bits(t: &SoftTopology, g: u64) -> bool {
    bits::subset(t.interior_bits(t.closure_bits(g)), g)
}

pub(crate) fn ssint_bits(t: &SoftTopology, g: u64) -> u64 {
    g & t.closure_bits(t.interior_bits(g))
}

pub(crate) fn sscl_bits(t: &SoftTopology, g: u64) -> u64 {
    g | t.interior_bits(t.closure_bits(g))
}

pub fn is_semiopen(t: &SoftTopology, g: &SoftSet) -> Result<SemiVerdict> {
    let g = t.own(g)?;
    let holds = is_semiopen_bits(t, g);
    Ok(SemiVerdict {
        holds,
        witness: holds.then(|| t.wrap(t.interior_bits(g))),
    })
}

pub fn is_semiclosed(t: &SoftTopology, g: &SoftSet) -> Result<SemiVerdict> {
    let g = t.own(g)?;
    let holds = is_semiclosed_bits(t, g);
    Ok(SemiVerdict {
        holds,
        witness: holds.then(|| t.wrap(t.closure_bits(g))),
    })
}

pub fn classify(t: &SoftTopology, g: &SoftSet) -> Result<SemiClassification> {
    let open = is_semiopen(t, g)?;
    let closed = is_semiclosed(t, g)?;
    Ok(SemiClassification {
        is_open: t.is_open(g)?,
        is_closed: t.is_closed(g)?,
        is_semiopen: open.holds,
        is_semiclosed: closed.holds,
        semiopen_witness: open.witness,
        semiclosed_witness: closed.witness,
    })
}

/// Largest semiopen subset.
pub fn ssint(t: &SoftTopology, g: &SoftSet) -> Result<SoftSet> {
    Ok(t.wrap(ssint_bits(t, t.own(g)?)))
}

/// Smallest semiclosed superset.
pub fn sscl(t: &SoftTopology, g: &SoftSet) -> Result<SoftSet> {
    Ok(t.wrap(sscl_bits(t, t.own(g)?)))
}

/// Both families, computed once per topology and cached on it.
pub fn semi_families(t: &SoftTopology) -> Result<Arc<SemiFamilies>> {
    if let Some(f) = t.semi_cache.get() {
        return Ok(Arc::clone(f));
    }
    limits::check_bits(t.lattice_bits())?;
    let carrier = t.carrier_bits();
    let mut semiopen = Vec::new();
    let mut semiclosed = Vec::new();
    for g in submasks(carrier) {
        if is_semiopen_bits(t, g) {
            semiopen.push(g);
        }
        if is_semiclosed_bits(t, g) {
            semiclosed.push(g);
        }
    }
    let families = Arc::new(SemiFamilies {
        semiopen,
        semiclosed,
    });
    // a racing writer computed the same value
    let _ = t.semi_cache.set(Arc::clone(&families));
    Ok(families)
}

/// `SOSS(U)_A` in canonical order.
pub fn enumerate_soss(t: &SoftTopology) -> Result<Vec<SoftSet>> {
    Ok(semi_families(t)?.semiopen.iter().map(|&b| t.wrap(b)).collect())
}

/// `SCSS(U)_A` in canonical order.
pub fn enumerate_scss(t: &SoftTopology) -> Result<Vec<SoftSet>> {
    Ok(semi_families(t)?.semiclosed.iter().map(|&b| t.wrap(b)).collect())
}

/// Straight-from-the-definition evaluation, used as the oracle.
///
/// Interior and closure here are the unions of open subsets and
/// intersections of closed supersets, not the neighbourhood shortcuts the
/// topology uses.
pub mod definitional {
    use super::*;

    pub(crate) fn semiopen_witness_bits(t: &SoftTopology, g: u64) -> Option<u64> {
        t.open_bits()
            .iter()
            .copied()
            .find(|&h| bits::subset(h, g) && bits::subset(g, t.closure_by_definition_bits(h)))
    }

    pub(crate) fn semiclosed_witness_bits(t: &SoftTopology, g: u64) -> Option<u64> {
        t.closed_bits()
            .into_iter()
            .find(|&k| bits::subset(t.interior_by_definition_bits(k), g) && bits::subset(g, k))
    }

    pub fn is_semiopen(t: &SoftTopology, g: &SoftSet) -> Result<SemiVerdict> {
        let w = semiopen_witness_bits(t, t.own(g)?);
        Ok(SemiVerdict {
            holds: w.is_some(),
            witness: w.map(|b| t.wrap(b)),
        })
    }

    pub fn is_semiclosed(t: &SoftTopology, g: &SoftSet) -> Result<SemiVerdict> {
        let w = semiclosed_witness_bits(t, t.own(g)?);
        Ok(SemiVerdict {
            holds: w.is_some(),
            witness: w.map(|b| t.wrap(b)),
        })
    }

    pub fn semiopen_family_bits(t: &SoftTopology) -> Result<Vec<u64>> {
        limits::check_bits(t.lattice_bits())?;
        let opens = t.open_bits();
        let closures: Vec<u64> = opens.iter().map(|&h| t.closure_by_definition_bits(h)).collect();
        Ok(submasks(t.carrier_bits())
            .filter(|&g| {
                opens
                    .iter()
                    .zip(&closures)
                    .any(|(&h, &cl)| bits::subset(h, g) && bits::subset(g, cl))
            })
            .collect())
    }

    pub fn semiclosed_family_bits(t: &SoftTopology) -> Result<Vec<u64>> {
        limits::check_bits(t.lattice_bits())?;
        let closed = t.closed_bits();
        let interiors: Vec<u64> = closed.iter().map(|&k| t.interior_by_definition_bits(k)).collect();
        Ok(submasks(t.carrier_bits())
            .filter(|&g| {
                closed
                    .iter()
                    .zip(&interiors)
                    .any(|(&k, &int)| bits::subset(int, g) && bits::subset(g, k))
            })
            .collect())
    }

    pub fn enumerate_soss(t: &SoftTopology) -> Result<Vec<SoftSet>> {
        Ok(semiopen_family_bits(t)?.into_iter().map(|b| t.wrap(b)).collect())
    }

    pub fn enumerate_scss(t: &SoftTopology) -> Result<Vec<SoftSet>> {
        Ok(semiclosed_family_bits(t)?.into_iter().map(|b| t.wrap(b)).collect())
    }

    /// Union of the semiopen subsets listed in `semiopen`.
    pub fn ssint_over(semiopen: &[u64], g: u64) -> u64 {
        semiopen
            .iter()
            .filter(|&&s| bits::subset(s, g))
            .fold(0, |acc, &s| acc | s)
    }

    /// Intersection of the semiclosed supersets listed in `semiclosed`.
    pub fn sscl_over(semiclosed: &[u64], carrier: u64, g: u64) -> u64 {
        semiclosed
            .iter()
            .filter(|&&s| bits::subset(g, s))
            .fold(carrier, |acc, &s| acc & s)
    }

    pub fn ssint(t: &SoftTopology, g: &SoftSet) -> Result<SoftSet> {
        let g = t.own(g)?;
        Ok(t.wrap(ssint_over(&semiopen_family_bits(t)?, g)))
    }

    pub fn sscl(t: &SoftTopology, g: &SoftSet) -> Result<SoftSet> {
        let g = t.own(g)?;
        Ok(t.wrap(sscl_over(&semiclosed_family_bits(t)?, t.carrier_bits(), g)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::softset::enumerate_soft_sets;

    fn lit(t: &SoftTopology, s: &str) -> SoftSet {
        SoftSet::parse_literal(t.signature(), s).unwrap()
    }

    #[test]
    fn null_and_whole_are_semi_everything() {
        for t in [
            fixtures::example_space(),
            fixtures::indiscrete_space(),
            fixtures::discrete_space(),
        ] {
            let sig = t.signature().clone();
            for g in [SoftSet::null(&sig), SoftSet::absolute(&sig)] {
                assert!(is_semiopen(&t, &g).unwrap().holds);
                assert!(is_semiclosed(&t, &g).unwrap().holds);
                assert!(definitional::is_semiopen(&t, &g).unwrap().holds);
                assert!(definitional::is_semiclosed(&t, &g).unwrap().holds);
            }
        }
    }

    #[test]
    fn semiopen_not_open_in_example() {
        let t = fixtures::example_space();
        let g = lit(&t, r#"{"e1":["h1","h2"],"e2":["h1","h2"]}"#);
        let v = is_semiopen(&t, &g).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, Some(fixtures::example_f1()));
        let d = definitional::is_semiopen(&t, &g).unwrap();
        assert_eq!(d.witness, Some(fixtures::example_f1()));
        assert!(!t.is_open(&g).unwrap());

        let g0 = lit(&t, r#"{"e1":["h1"]}"#);
        assert!(!is_semiopen(&t, &g0).unwrap().holds);
        assert!(!definitional::is_semiopen(&t, &g0).unwrap().holds);
    }

    #[test]
    fn semiclosed_not_closed_in_example() {
        let t = fixtures::example_space();
        let k = lit(&t, r#"{"e1":["h3"],"e2":["h3"]}"#);
        let v = is_semiclosed(&t, &k).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, Some(fixtures::example_f1().complement()));
        assert!(!t.is_closed(&k).unwrap());
        assert!(definitional::is_semiclosed(&t, &k).unwrap().holds);

        let f1 = fixtures::example_f1();
        assert!(!is_semiclosed(&t, &f1).unwrap().holds);
        assert!(!definitional::is_semiclosed(&t, &f1).unwrap().holds);
        for c in t.closed_bits() {
            let c = t.wrap(c);
            let v = is_semiclosed(&t, &c).unwrap();
            assert!(v.holds);
            assert_eq!(v.witness, Some(c));
        }
    }

    #[test]
    fn families_of_fixtures() {
        let ind = fixtures::indiscrete_space();
        let sig = ind.signature().clone();
        assert_eq!(
            enumerate_soss(&ind).unwrap(),
            vec![SoftSet::null(&sig), SoftSet::absolute(&sig)]
        );

        let dis = fixtures::discrete_space();
        assert_eq!(
            enumerate_soss(&dis).unwrap(),
            enumerate_soft_sets(dis.signature()).unwrap().collect::<Vec<_>>()
        );

        let ex = fixtures::example_space();
        let soss = enumerate_soss(&ex).unwrap();
        assert_eq!(soss.len(), 9);
        let f1 = fixtures::example_f1();
        assert!(soss[0].is_null());
        assert!(soss[1..].iter().all(|s| f1.is_subset(s).unwrap()));
        assert_eq!(definitional::enumerate_soss(&ex).unwrap(), soss);
        let scss: Vec<SoftSet> = soss.iter().map(|s| s.complement()).rev().collect();
        assert_eq!(enumerate_scss(&ex).unwrap(), scss);
        assert_eq!(definitional::enumerate_scss(&ex).unwrap(), scss);
    }

    #[test]
    fn semi_operators_on_example() {
        let t = fixtures::example_space();
        let sig = t.signature().clone();
        let g0 = lit(&t, r#"{"e1":["h1"]}"#);
        assert!(ssint(&t, &g0).unwrap().is_null());
        assert!(sscl(&t, &g0).unwrap().is_absolute());
        assert!(definitional::ssint(&t, &g0).unwrap().is_null());
        assert!(definitional::sscl(&t, &g0).unwrap().is_absolute());
        assert!(ssint(&t, &SoftSet::absolute(&sig)).unwrap().is_absolute());
        assert!(sscl(&t, &SoftSet::null(&sig)).unwrap().is_null());
        for s in enumerate_soss(&t).unwrap() {
            assert_eq!(ssint(&t, &s).unwrap(), s);
        }
        for s in enumerate_scss(&t).unwrap() {
            assert_eq!(sscl(&t, &s).unwrap(), s);
        }
    }

    #[test]
    fn cache_is_reused() {
        let t = fixtures::example_space();
        let a = semi_families(&t).unwrap();
        let b = semi_families(&t).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
