//! Soft functions between soft topological spaces.
//!
//! A soft function is a pair of total maps `p: U → V` (points) and
//! `q: A → B` (parameters). It acts on soft sets by
//!
//! * image:    `f(F)(b) = ⋃ { p(F(a)) : q(a) = b }`
//! * preimage: `f⁻¹(G)(a) = p⁻¹(G(q(a)))`
//!
//! Both reduce to a map between characteristic-matrix cells,
//! `(a, x) ↦ (q(a), p(x))`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::bits::ones;
use crate::error::{Error, Result};
use crate::semi::{self, semi_families};
use crate::signature::SpaceSignature;
use crate::softset::SoftSet;
use crate::topology::SoftTopology;

#[derive(Clone, PartialEq, Eq)]
pub struct SoftFunction {
    source: Arc<SpaceSignature>,
    target: Arc<SpaceSignature>,
    point_map: Vec<usize>,
    param_map: Vec<usize>,
    /// Target cell bit for each source bit position.
    cell_image: Vec<u64>,
}

impl SoftFunction {
    pub fn new(
        source: &Arc<SpaceSignature>,
        target: &Arc<SpaceSignature>,
        point_map: Vec<usize>,
        param_map: Vec<usize>,
    ) -> Result<Self> {
        if point_map.len() != source.n() {
            return Err(Error::InvalidFunction(format!(
                "point map has {} entries for {} universe elements",
                point_map.len(),
                source.n()
            )));
        }
        if param_map.len() != source.m() {
            return Err(Error::InvalidFunction(format!(
                "parameter map has {} entries for {} parameters",
                param_map.len(),
                source.m()
            )));
        }
        if point_map.iter().any(|&y| y >= target.n()) || param_map.iter().any(|&b| b >= target.m()) {
            return Err(Error::InvalidFunction("map leaves the target signature".into()));
        }
        let mut cell_image = vec![0u64; source.cells()];
        for a in 0..source.m() {
            for x in 0..source.n() {
                let bit = source.cell_bit(source.cell(a, x));
                cell_image[bit.trailing_zeros() as usize] =
                    target.cell_bit(target.cell(param_map[a], point_map[x]));
            }
        }
        Ok(Self {
            source: Arc::clone(source),
            target: Arc::clone(target),
            point_map,
            param_map,
            cell_image,
        })
    }

    pub fn identity(sig: &Arc<SpaceSignature>) -> Self {
        Self::new(sig, sig, (0..sig.n()).collect(), (0..sig.m()).collect())
            .expect("identity is total")
    }

    /// Builds from label maps such as `{"h1": "h2", ...}`; both must be total.
    pub fn from_label_maps(
        source: &Arc<SpaceSignature>,
        target: &Arc<SpaceSignature>,
        point_map: &BTreeMap<String, String>,
        param_map: &BTreeMap<String, String>,
    ) -> Result<Self> {
        fn resolve(
            domain: &[String],
            map: &BTreeMap<String, String>,
            lookup: impl Fn(&str) -> Option<usize>,
            domain_index: impl Fn(&str) -> Option<usize>,
        ) -> Result<Vec<usize>> {
            if let Some(extra) = map.keys().find(|k| domain_index(k).is_none()) {
                return Err(Error::UnknownLabel(extra.clone()));
            }
            domain
                .iter()
                .map(|label| {
                    let to = map.get(label).ok_or_else(|| {
                        Error::InvalidFunction(format!("`{label}` is not mapped"))
                    })?;
                    lookup(to).ok_or_else(|| Error::UnknownLabel(to.clone()))
                })
                .collect()
        }
        let points = resolve(
            source.universe(),
            point_map,
            |l| target.element_index(l),
            |l| source.element_index(l),
        )?;
        let params = resolve(
            source.parameters(),
            param_map,
            |l| target.parameter_index(l),
            |l| source.parameter_index(l),
        )?;
        Self::new(source, target, points, params)
    }

    pub fn point_label_map(&self) -> BTreeMap<String, String> {
        self.point_map
            .iter()
            .enumerate()
            .map(|(x, &y)| (self.source.universe()[x].clone(), self.target.universe()[y].clone()))
            .collect()
    }

    pub fn param_label_map(&self) -> BTreeMap<String, String> {
        self.param_map
            .iter()
            .enumerate()
            .map(|(a, &b)| {
                (self.source.parameters()[a].clone(), self.target.parameters()[b].clone())
            })
            .collect()
    }

    pub fn source(&self) -> &Arc<SpaceSignature> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SpaceSignature> {
        &self.target
    }

    pub fn point_map(&self) -> &[usize] {
        &self.point_map
    }

    pub fn param_map(&self) -> &[usize] {
        &self.param_map
    }

    pub fn image_bits(&self, f: u64) -> u64 {
        ones(f).fold(0, |acc, p| acc | self.cell_image[p as usize])
    }

    pub fn preimage_bits(&self, g: u64) -> u64 {
        self.cell_image
            .iter()
            .enumerate()
            .filter(|(_, &t)| t & g != 0)
            .fold(0, |acc, (p, _)| acc | (1u64 << p))
    }

    pub fn image(&self, f: &SoftSet) -> Result<SoftSet> {
        if **f.signature() != *self.source {
            return Err(Error::SignatureMismatch);
        }
        Ok(SoftSet::from_bits_unchecked(&self.target, self.image_bits(f.bits())))
    }

    pub fn preimage(&self, g: &SoftSet) -> Result<SoftSet> {
        if **g.signature() != *self.target {
            return Err(Error::SignatureMismatch);
        }
        Ok(SoftSet::from_bits_unchecked(&self.source, self.preimage_bits(g.bits())))
    }

    /// `f(U_A) = U_B`, i.e. both component maps are onto.
    pub fn is_surjective(&self) -> bool {
        self.image_bits(self.source.full_mask()) == self.target.full_mask()
    }
}

impl std::fmt::Debug for SoftFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SoftFunction")
            .field("point_map", &self.point_label_map())
            .field("param_map", &self.param_label_map())
            .finish()
    }
}

/// One continuity-type flag; a failing flag names the offending set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapVerdict {
    pub holds: bool,
    pub witness: Option<SoftSet>,
}

impl MapVerdict {
    fn from_failure(failure: Option<SoftSet>) -> Self {
        Self {
            holds: failure.is_none(),
            witness: failure,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapClassification {
    /// Preimages of opens are open.
    pub continuous: MapVerdict,
    /// Preimages of opens are semiopen.
    pub semicontinuous: MapVerdict,
    /// Preimages of semiopen sets are semiopen.
    pub irresolute: MapVerdict,
    /// Images of opens are semiopen.
    pub semiopen_map: MapVerdict,
    /// Images of closed sets are semiclosed.
    pub semiclosed_map: MapVerdict,
}

fn check_spaces(f: &SoftFunction, src: &SoftTopology, tgt: &SoftTopology) -> Result<()> {
    if **src.signature() != *f.source || **tgt.signature() != *f.target {
        return Err(Error::SignatureMismatch);
    }
    if !src.is_full() || !tgt.is_full() {
        return Err(Error::InvalidFunction(
            "soft functions act between spaces on the whole lattice".into(),
        ));
    }
    Ok(())
}

/// Evaluates all five classes by exhaustive quantification.
pub fn classify_map(f: &SoftFunction, src: &SoftTopology, tgt: &SoftTopology) -> Result<MapClassification> {
    check_spaces(f, src, tgt)?;
    let target_soss = semi_families(tgt)?;
    let wrap_t = |b| SoftSet::from_bits_unchecked(&f.target, b);
    let wrap_s = |b| SoftSet::from_bits_unchecked(&f.source, b);

    let continuous = tgt
        .open_bits()
        .iter()
        .find(|&&o| !src.is_open_bits(f.preimage_bits(o)))
        .map(|&o| wrap_t(o));
    let semicontinuous = tgt
        .open_bits()
        .iter()
        .find(|&&o| !semi::is_semiopen_bits(src, f.preimage_bits(o)))
        .map(|&o| wrap_t(o));
    let irresolute = target_soss
        .semiopen
        .iter()
        .find(|&&s| !semi::is_semiopen_bits(src, f.preimage_bits(s)))
        .map(|&s| wrap_t(s));
    let semiopen_map = src
        .open_bits()
        .iter()
        .find(|&&o| !target_soss.is_semiopen(f.image_bits(o)))
        .map(|&o| wrap_s(o));
    let semiclosed_map = src
        .closed_bits()
        .into_iter()
        .find(|&c| !target_soss.is_semiclosed(f.image_bits(c)))
        .map(wrap_s);

    Ok(MapClassification {
        continuous: MapVerdict::from_failure(continuous),
        semicontinuous: MapVerdict::from_failure(semicontinuous),
        irresolute: MapVerdict::from_failure(irresolute),
        semiopen_map: MapVerdict::from_failure(semiopen_map),
        semiclosed_map: MapVerdict::from_failure(semiclosed_map),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::softset::enumerate_soft_sets;

    fn collapse_params() -> SoftFunction {
        let src = fixtures::example_signature();
        let tgt = Arc::new(SpaceSignature::standard(3, 1).unwrap());
        SoftFunction::new(&src, &tgt, vec![0, 1, 2], vec![0, 0]).unwrap()
    }

    #[test]
    fn identity_image_and_preimage() {
        let sig = fixtures::example_signature();
        let id = SoftFunction::identity(&sig);
        for g in enumerate_soft_sets(&sig).unwrap() {
            assert_eq!(id.image(&g).unwrap(), g);
            assert_eq!(id.preimage(&g).unwrap(), g);
        }
        assert!(id.is_surjective());
    }

    #[test]
    fn collapsing_parameters() {
        let f = collapse_params();
        let img = f.image(&fixtures::example_f1()).unwrap();
        assert_eq!(img.to_literal(), r#"{"e1":["h1","h2"]}"#);
        let g = SoftSet::parse_literal(f.target(), r#"{"e1":["h1"]}"#).unwrap();
        assert_eq!(
            f.preimage(&g).unwrap().to_literal(),
            r#"{"e1":["h1"],"e2":["h1"]}"#
        );
        assert!(f.preimage(&SoftSet::absolute(f.target())).unwrap().is_absolute());
        assert!(f.image(&SoftSet::null(f.source())).unwrap().is_null());
    }

    #[test]
    fn constant_point_map() {
        let src = fixtures::example_signature();
        let tgt = fixtures::example_signature();
        let f = SoftFunction::new(&src, &tgt, vec![0, 0, 0], vec![1, 1]).unwrap();
        let img = f.image(&fixtures::example_f1()).unwrap();
        assert_eq!(img.to_literal(), r#"{"e1":[],"e2":["h1"]}"#);
        assert!(!f.is_surjective());
    }

    #[test]
    fn label_maps_must_be_total_and_known() {
        let src = fixtures::example_signature();
        let tgt = fixtures::pair_signature();
        let pm: BTreeMap<String, String> =
            [("h1", "h1"), ("h2", "h2"), ("h3", "h2")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        let qm: BTreeMap<String, String> =
            [("e1", "e1"), ("e2", "e1")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        let f = SoftFunction::from_label_maps(&src, &tgt, &pm, &qm).unwrap();
        assert_eq!(f.point_label_map(), pm);
        assert_eq!(f.param_label_map(), qm);

        let mut partial = pm.clone();
        partial.remove("h3");
        assert!(SoftFunction::from_label_maps(&src, &tgt, &partial, &qm).is_err());
        let mut bad = pm.clone();
        bad.insert("h1".into(), "h9".into());
        assert!(matches!(
            SoftFunction::from_label_maps(&src, &tgt, &bad, &qm),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn identity_is_in_every_class() {
        for t in [fixtures::example_space(), fixtures::indiscrete_space(), fixtures::discrete_space()] {
            let id = SoftFunction::identity(t.signature());
            let c = classify_map(&id, &t, &t).unwrap();
            assert!(c.continuous.holds);
            assert!(c.semicontinuous.holds);
            assert!(c.irresolute.holds);
            assert!(c.semiopen_map.holds);
            assert!(c.semiclosed_map.holds);
        }
    }

    #[test]
    fn into_indiscrete_and_from_discrete() {
        let src = fixtures::example_space();
        let tgt = fixtures::indiscrete_space();
        let f = SoftFunction::new(src.signature(), tgt.signature(), vec![0, 1, 1], vec![0, 0]).unwrap();
        let c = classify_map(&f, &src, &tgt).unwrap();
        assert!(c.semicontinuous.holds && c.irresolute.holds);

        let dis = fixtures::discrete_space();
        let g = SoftFunction::new(dis.signature(), src.signature(), vec![2, 0], vec![1]).unwrap();
        let c = classify_map(&g, &dis, &src).unwrap();
        assert!(c.semicontinuous.holds && c.continuous.holds && c.irresolute.holds);
    }

    #[test]
    fn failing_flags_carry_witnesses() {
        // identity from the indiscrete space onto the discrete one
        let ind = fixtures::indiscrete_space();
        let dis = fixtures::discrete_space();
        let id = SoftFunction::identity(ind.signature());
        let c = classify_map(&id, &ind, &dis).unwrap();
        assert!(!c.continuous.holds);
        assert!(!c.semicontinuous.holds);
        let w = c.semicontinuous.witness.unwrap();
        assert!(dis.is_open(&w).unwrap() && !ind.is_open(&w).unwrap());
        assert!(c.semiopen_map.holds);
        // and backwards: opens of the discrete space are not semiopen in the indiscrete one
        let c = classify_map(&id, &dis, &ind).unwrap();
        assert!(c.continuous.holds);
        assert!(!c.semiopen_map.holds);
        assert!(!c.semiclosed_map.holds);
    }
}
