//! The claim registry.
//!
//! Each claim is a statement checked instance by instance. Asserted
//! invariants must hold everywhere; a failure means a bug in this crate.
//! Claims under test are searched for counterexamples and reported
//! either way.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::analysis::connectedness::{find_open_separation, find_semiseparation, find_semiseparation_by_pairs, semi_clopen_sets};
use crate::analysis::cover::{analyze_cover, fip_violation, has_fip, minimum_cover};
use crate::analysis::separation::{definitional as axiom_oracle, seminormal_characterization, Axiom, Witness};
use crate::bits::{ones, subset};
use crate::error::{Error, Result};
use crate::explorer::case::{between, pairs_of, Case, MapCase};
use crate::fixtures;
use crate::maps::MapVerdict;
use crate::semi::{self, definitional, semi_families};
use crate::softset::{self, SoftSet};
use crate::topology::{from_subbasis, SoftTopology};

/// Witnesses kept per claim per instance.
pub const WITNESS_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClaimKind {
    #[serde(rename = "asserted-invariant")]
    Asserted,
    #[serde(rename = "under-test")]
    UnderTest,
}

impl ClaimKind {
    pub fn name(self) -> &'static str {
        match self {
            ClaimKind::Asserted => "asserted-invariant",
            ClaimKind::UnderTest => "under-test",
        }
    }
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which space a witness set lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Source,
    Target,
}

/// One failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub detail: String,
    /// Index of the map among the instance's map cases.
    pub map: Option<usize>,
    pub sets: Vec<(String, Side, SoftSet)>,
}

impl Failure {
    pub fn new(detail: impl Into<String>) -> Self {
        Self {
            detail: detail.into(),
            map: None,
            sets: Vec::new(),
        }
    }

    fn on_map(mut self, i: usize) -> Self {
        self.map = Some(i);
        self
    }

    fn src(mut self, label: &str, set: SoftSet) -> Self {
        self.sets.push((label.to_string(), Side::Source, set));
        self
    }

    fn tgt(mut self, label: &str, set: SoftSet) -> Self {
        self.sets.push((label.to_string(), Side::Target, set));
        self
    }

    fn witness(mut self, w: &Witness, side: Side) -> Self {
        for (label, set) in w.parts() {
            self.sets.push((label.to_string(), side, set));
        }
        self
    }

    /// Same failure up to the map's position in the list.
    pub fn same_as(&self, other: &Failure) -> bool {
        self.detail == other.detail
            && self.map.is_some() == other.map.is_some()
            && self.sets.len() == other.sets.len()
            && self
                .sets
                .iter()
                .zip(&other.sets)
                .all(|(a, b)| a.0 == b.0 && a.1 == b.1 && a.2.to_literal() == b.2.to_literal())
    }
}

/// Result of one claim on one instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub hypotheses: u64,
    pub refutations: u64,
    pub failures: Vec<Failure>,
}

impl Outcome {
    fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.hypotheses += 1;
        if !ok {
            self.refutations += 1;
            if self.failures.len() < WITNESS_CAP {
                self.failures.push(failure());
            }
        }
    }
}

type Check = fn(&Case, &mut Outcome);

pub struct Claim {
    pub id: &'static str,
    pub kind: ClaimKind,
    pub statement: &'static str,
    pub scope: &'static str,
    check: Check,
}

impl Claim {
    pub fn evaluate(&self, case: &Case) -> Outcome {
        let mut out = Outcome::default();
        (self.check)(case, &mut out);
        out
    }
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).field("kind", &self.kind).finish()
    }
}

const SETS: &str = "every soft set of the carrier (seeded sample of 128 above 8 cells)";
const PAIRS: &str = "ordered pairs of quantified soft sets (seeded sample of 4096 above 64 sets)";
const MAPS: &str = "identity, a seeded self-map and seeded maps into the next corpus instance";
const AXIOM_SCOPE: &str = "witnesses re-checked up to 64 semiopen sets; decisions compared with direct quantification up to 16";
const SUBSPACES: &str = "nonnull subspace carriers (all up to 4 cells, else a seeded sample of 16 plus the whole space)";

macro_rules! claim {
    ($id:expr, $kind:ident, $statement:expr, $scope:expr, $check:expr) => {
        Claim {
            id: $id,
            kind: ClaimKind::$kind,
            statement: $statement,
            scope: $scope,
            check: $check,
        }
    };
}

static REGISTRY: &[Claim] = &[
    // implementation invariants
    claim!("I.core.lattice", Asserted, "union and intersection are associative, commutative, absorptive and distributive; complements obey De Morgan; inclusion is a partial order; membership is monotone", "seeded triples of quantified soft sets", check_lattice),
    claim!("I.core.points", Asserted, "every soft set is the union of its soft points", SETS, check_point_decomposition),
    claim!("I.top.kuratowski", Asserted, "interior and closure obey the Kuratowski laws, are dual, and agree with their definitions", SETS, check_kuratowski),
    claim!("I.top.subbasis", Asserted, "the topology generated from any seed family validates and contains the seeds; the opens regenerate the space", "four seeded seed families per instance", check_subbasis),
    claim!("I.top.subspace", Asserted, "subspaces validate and a subspace of a subspace is the subspace on the intersected carrier", SUBSPACES, check_subspaces),
    claim!("I.semi.oracle", Asserted, "closed-form semiopen/semiclosed tests, ssint and sscl agree with the witness-search definitions", SETS, check_semi_oracle),
    claim!("I.semi.families", Asserted, "SCSS is exactly the set of complements of SOSS", "whole families", check_families_dual),
    claim!("I.maps.preimage", Asserted, "preimage preserves unions, intersections and complements; image is monotone and sends null to null", MAPS, check_preimage_homomorphism),
    claim!("I.maps.classes", Asserted, "continuous and irresolute maps are semicontinuous", MAPS, check_map_classes),
    claim!("I.analysis.cover", Asserted, "the minimum subcover covers, has brute-force minimum size, and loses coverage when any member is dropped; FIP violations have null intersection", "four seeded families of up to 12 semiopen sets", check_covers),
    claim!("I.analysis.semiseparation", Asserted, "the complement-based semiseparation search agrees with the pairwise search", "every instance", check_semiseparation_oracle),
    // semiopen and semiclosed sets
    claim!("D2.1", Asserted, "G is semiopen iff some open H has H ⊆ G ⊆ cl H, and semiclosed iff some closed K has int K ⊆ G ⊆ K; returned witnesses satisfy this", SETS, check_semi_witnesses),
    claim!("R2.3", Asserted, "open sets are semiopen and closed sets are semiclosed", "all opens and closed sets", check_open_semiopen),
    claim!("R2.3.conv-open", UnderTest, "every semiopen set is open", "all of SOSS", check_converse_open),
    claim!("R2.3.conv-closed", UnderTest, "every semiclosed set is closed", "all of SCSS", check_converse_closed),
    claim!("E2.2", UnderTest, "in the example space, F1 witnesses G semiopen with cl F1 = F1, and F1^c witnesses K semiclosed", "the example space only", check_worked_example),
    claim!("R2.4", Asserted, "null and whole space are semiopen and semiclosed", "every instance", check_extremes),
    claim!("T2.5", Asserted, "unions of semiopen sets are semiopen", "pairs of SOSS and the whole family", check_semiopen_unions),
    claim!("R2.6", Asserted, "intersections of semiclosed sets are semiclosed", "pairs of SCSS and the whole family", check_semiclosed_intersections),
    claim!("T2.7", Asserted, "G semiopen and G ⊆ K ⊆ cl G imply K semiopen", "SOSS members, up to 64 K each", check_semiopen_sandwich),
    claim!("T2.8", Asserted, "F semiclosed and int F ⊆ K ⊆ F imply K semiclosed", "SCSS members, up to 64 K each", check_semiclosed_sandwich),
    claim!("T2.9", Asserted, "G is semiopen iff each of its points lies in a semiopen subset of G", SETS, check_point_characterization),
    claim!("D2.10", Asserted, "sscl G is the smallest semiclosed superset and ssint G the largest semiopen subset", SETS, check_semi_operators_extremal),
    claim!("T2.11.i", Asserted, "G semiclosed iff G = sscl G", SETS, check_2_11_i),
    claim!("T2.11.ii", Asserted, "G semiopen iff G = ssint G", SETS, check_2_11_ii),
    claim!("T2.11.iii", Asserted, "(sscl G)^c = ssint(G^c)", SETS, check_2_11_iii),
    claim!("T2.11.iv", Asserted, "(ssint G)^c = sscl(G^c)", SETS, check_2_11_iv),
    claim!("T2.11.v", Asserted, "G ⊆ K implies ssint G ⊆ ssint K", PAIRS, check_2_11_v),
    claim!("T2.11.vi", Asserted, "G ⊆ K implies sscl G ⊆ sscl K", PAIRS, check_2_11_vi),
    claim!("T2.11.vii", Asserted, "sscl of null is null and sscl of the whole space is the whole space", "every instance", check_2_11_vii),
    claim!("T2.11.viii", Asserted, "ssint of null is null and ssint of the whole space is the whole space", "every instance", check_2_11_viii),
    claim!("T2.11.ix", UnderTest, "sscl(G ∪ K) = sscl G ∪ sscl K", PAIRS, check_2_11_ix),
    claim!("T2.11.x", UnderTest, "ssint(G ∩ K) = ssint G ∩ ssint K", PAIRS, check_2_11_x),
    claim!("T2.11.xi", Asserted, "sscl(G ∩ K) ⊆ sscl G ∩ sscl K", PAIRS, check_2_11_xi),
    claim!("T2.11.xii", UnderTest, "ssint(G ∪ K) ⊆ ssint G ∪ ssint K, read as printed", PAIRS, check_2_11_xii),
    claim!("T2.11.xii.dual", Asserted, "ssint G ∪ ssint K ⊆ ssint(G ∪ K)", PAIRS, check_2_11_xii_dual),
    claim!("T2.11.xiii", Asserted, "sscl(sscl G) = sscl G", SETS, check_2_11_xiii),
    claim!("T2.11.xiv", Asserted, "ssint(ssint G) = ssint G", SETS, check_2_11_xiv),
    claim!("T2.12", Asserted, "G semiclosed, int(cl G) ⊆ G, G^c ⊆ cl(int G^c), and G^c semiopen are equivalent", SETS, check_four_way),
    // soft functions
    claim!("D3.1", Asserted, "map classes agree with direct quantification over opens, semiopen and closed sets, and their witnesses violate the class", MAPS, check_map_definitions),
    claim!("R3.2.a", Asserted, "f is semicontinuous iff preimages of closed sets are semiclosed", MAPS, check_closed_preimages),
    claim!("R3.2.b", UnderTest, "semicontinuous maps are irresolute", MAPS, check_semicontinuous_irresolute),
    claim!("T3.3.fwd", Asserted, "f semicontinuous implies f(sscl F) ⊆ cl f(F) for every F", MAPS, check_3_3_forward),
    claim!("T3.3", UnderTest, "f semicontinuous iff f(sscl F) ⊆ cl f(F) for every F", MAPS, check_3_3),
    claim!("T3.4", UnderTest, "f semicontinuous iff int(f⁻¹(H)) ⊆ ssint(f⁻¹(H)) for every H, read as printed", MAPS, check_3_4),
    claim!("T3.4.alt", UnderTest, "f semicontinuous iff f⁻¹(int H) ⊆ ssint(f⁻¹(H)) for every H", MAPS, check_3_4_alt),
    claim!("T3.5.fwd", Asserted, "f semiopen implies f(int F) ⊆ ssint f(F) for every F", MAPS, check_3_5_forward),
    claim!("T3.5", UnderTest, "f semiopen iff f(int F) ⊆ ssint f(F) for every F", MAPS, check_3_5),
    claim!("T3.6", Asserted, "for f semiopen, K and closed F ⊇ f⁻¹(K), H = f(F^c)^c is semiclosed with K ⊆ H and f⁻¹(H) ⊆ F", "maps as above; up to 64 K and 64 closed F per map", check_3_6),
    claim!("T3.7", UnderTest, "f semiclosed iff sscl f(F) ⊆ f(cl F) for every F", MAPS, check_3_7),
    // semicompactness
    claim!("D4.1", Asserted, "semicompact iff the cover by all semiopen sets has a finite subcover", "every instance", check_semicompact_definition),
    claim!("D4.2", Asserted, "a family has the FIP iff every nonempty subfamily has nonnull intersection", "32 seeded families of up to 6 soft sets", check_fip_definition),
    claim!("R4.3", Asserted, "compact spaces are semicompact", "every instance (finite, so both hold)", check_compact_semicompact),
    claim!("T4.4", Asserted, "semiclosed families with the FIP have nonnull intersection", "all SCSS subfamilies up to 12 members, else 2048 seeded subfamilies", check_4_4),
    claim!("T4.5", Asserted, "families with the FIP have nonnull intersection of semi-closures", "2048 seeded families of up to 5 soft sets", check_4_5),
    claim!("T4.6", UnderTest, "semicontinuous images of semicompact spaces are compact", MAPS, check_4_6),
    claim!("T4.7", UnderTest, "semiclosed subspaces of semicompact spaces are semicompact", SUBSPACES, check_4_7),
    // semiconnectedness
    claim!("D5.1", Asserted, "a reported semiseparation consists of disjoint nonnull semiopen sets whose union is the carrier", "every instance", check_semiseparation_definition),
    claim!("D5.2", Asserted, "semiconnected iff no semiseparation exists", "every instance", check_semiconnected_definition),
    claim!("T5.3", UnderTest, "a semiconnected subspace lies inside one part of any semiseparation", "up to 8 semiseparations against every quantified subspace", check_5_3),
    claim!("T5.4", UnderTest, "V semiconnected and V ⊆ K ⊆ cl V imply K semiconnected", "quantified subspaces, up to 16 K each", check_5_4),
    claim!("T5.5", Asserted, "a semiseparation exists iff a nonnull proper set is both semiopen and semiclosed", "every instance", check_5_5),
    claim!("T5.6", Asserted, "semicontinuous images of semiconnected spaces have no open separation", MAPS, check_5_6),
    claim!("T5.7", Asserted, "irresolute images of semiconnected spaces are semiconnected", MAPS, check_5_7),
    // semi-separation axioms
    claim!("D6.1", Asserted, "semi-T0 decisions and witnesses match the definition", AXIOM_SCOPE, check_d6_1),
    claim!("E6.2", Asserted, "discrete spaces are semi-T0", "discrete instances", check_6_2),
    claim!("T6.3", UnderTest, "subspaces of semi-T0 spaces are semi-T0", SUBSPACES, check_6_3),
    claim!("D6.4", Asserted, "semi-T1 decisions and witnesses match the definition", AXIOM_SCOPE, check_d6_4),
    claim!("T6.5", Asserted, "if every soft point is semiclosed the space is semi-T1", "every instance", check_6_5),
    claim!("T6.6", UnderTest, "subspaces of semi-T1 spaces are semi-T1", SUBSPACES, check_6_6),
    claim!("D6.7", Asserted, "semi-T2 decisions and witnesses match the definition", AXIOM_SCOPE, check_d6_7),
    claim!("T6.8", UnderTest, "subspaces of semi-T2 spaces are semi-T2", SUBSPACES, check_6_8),
    claim!("D6.9", Asserted, "semiregular and semi-T3 decisions and witnesses match the definition", AXIOM_SCOPE, check_d6_9),
    claim!("R6.10", UnderTest, "subspaces of semi-T3 spaces are semi-T3", SUBSPACES, check_6_10),
    claim!("R6.11", Asserted, "semi-T3 implies semi-T2 implies semi-T1 implies semi-T0", "every instance", check_6_11),
    claim!("T6.12", UnderTest, "semicompact semi-T2 spaces are semi-T3", "every instance", check_6_12),
    claim!("D6.13", Asserted, "seminormal and semi-T4 decisions and witnesses match the definition", AXIOM_SCOPE, check_d6_13),
    claim!("R6.14", Asserted, "semi-T4 implies semi-T3", "every instance", check_6_14),
    claim!("T6.15", Asserted, "seminormal iff every semiclosed F inside a semiopen G has a semiopen H ⊇ F with sscl H ⊆ G, failing on the same pair", "every instance", check_6_15),
    claim!("T6.16", UnderTest, "surjective irresolute semiopen images of seminormal spaces are seminormal", MAPS, check_6_16),
    claim!("T6.16.open", UnderTest, "under the same hypotheses, disjoint semiclosed sets of the image are separated by disjoint open sets", MAPS, check_6_16_open),
    claim!("T6.17", UnderTest, "semiclosed subspaces of seminormal spaces are seminormal", SUBSPACES, check_6_17),
    claim!("T6.18", UnderTest, "semicompact semi-T2 spaces are seminormal", "every instance", check_6_18),
];

pub fn registry() -> &'static [Claim] {
    REGISTRY
}

pub fn find(id: &str) -> Result<&'static Claim> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Claims in registry order; `None` selects all of them.
pub fn select(ids: Option<&[String]>) -> Result<Vec<&'static Claim>> {
    match ids {
        None => Ok(REGISTRY.iter().collect()),
        Some(ids) => {
            for id in ids {
                find(id)?;
            }
            Ok(REGISTRY.iter().filter(|c| ids.iter().any(|i| i == c.id)).collect())
        }
    }
}

// ---- helpers ------------------------------------------------------------

fn ssint(c: &Case, g: u64) -> u64 {
    semi::ssint_bits(c.space, g)
}

fn sscl(c: &Case, g: u64) -> u64 {
    semi::sscl_bits(c.space, g)
}

fn comp(c: &Case, g: u64) -> u64 {
    c.carrier() & !g
}

fn pairs(c: &Case) -> Vec<(u64, u64)> {
    pairs_of(&c.sets, c.seed ^ 0x9A1)
}

fn for_sets(c: &Case, out: &mut Outcome, detail: &str, ok: impl Fn(u64) -> bool) {
    for &g in &c.sets {
        out.check(ok(g), || Failure::new(detail).src("G", c.wrap(g)));
    }
}

fn for_pairs(c: &Case, out: &mut Outcome, detail: &str, ok: impl Fn(u64, u64) -> bool) {
    for (g, k) in pairs(c) {
        out.check(ok(g, k), || Failure::new(detail).src("G", c.wrap(g)).src("K", c.wrap(k)));
    }
}

fn for_maps(c: &Case, mut each: impl FnMut(usize, &MapCase)) {
    for (i, m) in c.maps.iter().enumerate() {
        each(i, m);
    }
}

fn holds(c: &Case, a: Axiom) -> bool {
    c.axioms().holds(a)
}

// ---- implementation invariants -------------------------------------------

fn check_lattice(c: &Case, out: &mut Outcome) {
    let sig = c.space.signature();
    let mut rng = c.rng(1);
    let n = c.sets.len() as u64;
    for _ in 0..64 {
        let pick = |r: &mut crate::rng::SplitMix64| c.wrap(c.sets[r.below(n) as usize]);
        let (a, b, k) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let u = |x: &SoftSet, y: &SoftSet| x.union(y).expect("shared signature");
        let i = |x: &SoftSet, y: &SoftSet| x.intersection(y).expect("shared signature");
        let sub = |x: &SoftSet, y: &SoftSet| x.is_subset(y).expect("shared signature");
        let family = [a.clone(), b.clone(), k.clone()];
        let ok = u(&a, &b) == u(&b, &a)
            && i(&a, &b) == i(&b, &a)
            && u(&u(&a, &b), &k) == u(&a, &u(&b, &k))
            && i(&i(&a, &b), &k) == i(&a, &i(&b, &k))
            && u(&a, &i(&a, &b)) == a
            && i(&a, &u(&a, &b)) == a
            && i(&a, &u(&b, &k)) == u(&i(&a, &b), &i(&a, &k))
            && u(&a, &i(&b, &k)) == i(&u(&a, &b), &u(&a, &k))
            && u(&a, &b).complement() == i(&a.complement(), &b.complement())
            && softset::union(sig, &family).expect("shared signature").complement()
                == softset::intersection(family.iter().map(SoftSet::complement).collect::<Vec<_>>().iter())
                    .expect("nonempty family")
            && sub(&a, &a)
            && (!(sub(&a, &b) && sub(&b, &a)) || a.encoding() == b.encoding())
            && (!(sub(&a, &b) && sub(&b, &k)) || sub(&a, &k))
            && (!sub(&a, &b) || a.points().all(|p| softset::point_in(&p, &b).expect("shared signature")));
        out.check(ok, || Failure::new("lattice law fails").src("A", a.clone()).src("B", b.clone()).src("C", k.clone()));
    }
}

fn check_point_decomposition(c: &Case, out: &mut Outcome) {
    let sig = c.space.signature();
    for_sets(c, out, "G differs from the union of its points", |g| {
        let set = c.wrap(g);
        let points: Vec<SoftSet> = set.points().map(|p| p.as_soft_set()).collect();
        softset::union(sig, &points).expect("shared signature") == set
    });
}

fn check_kuratowski(c: &Case, out: &mut Outcome) {
    let t = c.space;
    for_sets(c, out, "interior/closure law fails", |g| {
        let int = t.interior_bits(g);
        let cl = t.closure_bits(g);
        cl == comp(c, t.interior_bits(comp(c, g)))
            && subset(int, g)
            && subset(g, cl)
            && t.interior_bits(int) == int
            && t.closure_bits(cl) == cl
            && int == t.interior_by_definition_bits(g)
            && cl == t.closure_by_definition_bits(g)
            && t.is_open_bits(int)
            && t.is_closed_bits(cl)
    });
    for_pairs(c, out, "interior or closure is not monotone", |g, k| {
        !subset(g, k) || (subset(t.interior_bits(g), t.interior_bits(k)) && subset(t.closure_bits(g), t.closure_bits(k)))
    });
}

fn check_subbasis(c: &Case, out: &mut Outcome) {
    let t = c.space;
    if !t.is_full() {
        return;
    }
    let sig = t.signature();
    let mut rng = c.rng(2);
    let n = c.sets.len() as u64;
    for _ in 0..4 {
        let size = rng.below(4);
        let seeds: Vec<SoftSet> = (0..size).map(|_| c.wrap(c.sets[rng.below(n) as usize])).collect();
        let generated = from_subbasis(sig, &seeds);
        let ok = generated.as_ref().is_ok_and(|g| {
            SoftTopology::validate(sig, g.opens()).is_ok() && seeds.iter().all(|s| g.is_open_bits(s.bits()))
        });
        out.check(ok, || {
            seeds.iter().fold(Failure::new("generated topology is invalid or misses a seed"), |f, s| {
                f.src("seed", s.clone())
            })
        });
    }
    let regenerated = from_subbasis(sig, &t.opens());
    out.check(regenerated.is_ok_and(|r| r == *t), || Failure::new("opens do not regenerate the space"));
}

fn check_subspaces(c: &Case, out: &mut Outcome) {
    let t = c.space;
    let sig = t.signature();
    for &v in &c.carriers {
        let sub = t.subspace_bits(v);
        let valid = SoftTopology::validate_with_carrier(sig, &c.wrap(v), sub.opens()).is_ok();
        out.check(valid, || Failure::new("subspace fails the axioms").src("V", c.wrap(v)));
        for &w in c.carriers.iter().take(8) {
            let nested = sub.subspace_bits(w & v);
            out.check(nested == t.subspace_bits(v & w), || {
                Failure::new("nested subspace differs").src("V", c.wrap(v)).src("W", c.wrap(w))
            });
        }
    }
}

/// Families from witness search, only where they are cheap to enumerate.
fn definitional_families(c: &Case) -> Option<(Vec<u64>, Vec<u64>)> {
    if c.carrier().count_ones() > 10 {
        return None;
    }
    Some((
        definitional::semiopen_family_bits(c.space).ok()?,
        definitional::semiclosed_family_bits(c.space).ok()?,
    ))
}

fn check_semi_oracle(c: &Case, out: &mut Outcome) {
    let t = c.space;
    let families = definitional_families(c);
    if let Some((open, closed)) = &families {
        out.check(*open == c.fam.semiopen && *closed == c.fam.semiclosed, || {
            Failure::new("enumerated families differ from witness search")
        });
    }
    for_sets(c, out, "closed form and definition disagree", |g| {
        let same_tests = semi::is_semiopen_bits(t, g) == definitional::semiopen_witness_bits(t, g).is_some()
            && semi::is_semiclosed_bits(t, g) == definitional::semiclosed_witness_bits(t, g).is_some();
        let same_ops = match &families {
            Some((open, closed)) => {
                ssint(c, g) == definitional::ssint_over(open, g)
                    && sscl(c, g) == definitional::sscl_over(closed, c.carrier(), g)
            }
            None => true,
        };
        same_tests && same_ops
    });
}

fn check_semi_witnesses(c: &Case, out: &mut Outcome) {
    let t = c.space;
    for_sets(c, out, "witness sandwich fails", |g| {
        let v = semi::classify(t, &c.wrap(g)).expect("set is in the carrier");
        let open_ok = match &v.semiopen_witness {
            Some(h) => {
                let h = h.bits();
                t.is_open_bits(h) && subset(h, g) && subset(g, t.closure_bits(h))
            }
            None => !v.is_semiopen,
        };
        let closed_ok = match &v.semiclosed_witness {
            Some(k) => {
                let k = k.bits();
                t.is_closed_bits(k) && subset(t.interior_bits(k), g) && subset(g, k)
            }
            None => !v.is_semiclosed,
        };
        open_ok && closed_ok && (!v.is_open || v.is_semiopen) && (!v.is_closed || v.is_semiclosed)
    });
}

fn check_families_dual(c: &Case, out: &mut Outcome) {
    let mut complements: Vec<u64> = c.fam.semiopen.iter().map(|&g| comp(c, g)).collect();
    complements.sort_unstable();
    out.check(complements == c.fam.semiclosed, || Failure::new("SCSS is not the complement family of SOSS"));
}

fn check_preimage_homomorphism(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        let f = &m.function;
        let full_t = m.target.carrier_bits();
        let full_s = c.carrier();
        let ok_ends = f.preimage_bits(full_t) == full_s && f.preimage_bits(0) == 0 && f.image_bits(0) == 0;
        out.check(ok_ends, || Failure::new("preimage or image misplaces an extreme set").on_map(i));
        let union_all = m.target_sets.iter().fold(0, |acc, &h| acc | h);
        let pre_union = m.target_sets.iter().fold(0, |acc, &h| acc | f.preimage_bits(h));
        out.check(f.preimage_bits(union_all) == pre_union, || Failure::new("preimage misses a family union").on_map(i));
        for (a, b) in pairs_of(&m.target_sets, c.seed ^ 0x9A2) {
            let ok = f.preimage_bits(a | b) == f.preimage_bits(a) | f.preimage_bits(b)
                && f.preimage_bits(a & b) == f.preimage_bits(a) & f.preimage_bits(b)
                && f.preimage_bits(full_t & !a) == full_s & !f.preimage_bits(a);
            out.check(ok, || {
                Failure::new("preimage is not a Boolean homomorphism")
                    .on_map(i)
                    .tgt("A", m.target.wrap(a))
                    .tgt("B", m.target.wrap(b))
            });
        }
        for (g, k) in pairs(c) {
            let ok = !subset(g, k) || subset(f.image_bits(g), f.image_bits(k));
            out.check(ok, || Failure::new("image is not monotone").on_map(i).src("G", c.wrap(g)).src("K", c.wrap(k)));
        }
    });
}

fn check_map_classes(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        let k = &m.class;
        out.check(!k.irresolute.holds || k.semicontinuous.holds, || {
            Failure::new("irresolute but not semicontinuous").on_map(i)
        });
        out.check(!k.continuous.holds || k.semicontinuous.holds, || {
            Failure::new("continuous but not semicontinuous").on_map(i)
        });
    });
}

fn brute_force_min_cover(target: u64, family: &[u64]) -> Option<usize> {
    (0u64..1 << family.len())
        .filter(|&mask| subset(target, ones(mask).fold(0, |acc, i| acc | family[i as usize])))
        .map(|mask| mask.count_ones() as usize)
        .min()
}

fn check_covers(c: &Case, out: &mut Outcome) {
    let mut rng = c.rng(3);
    let soss = &c.fam.semiopen;
    let carrier = c.carrier();
    for _ in 0..4 {
        let size = 1 + rng.below(12) as usize;
        let family: Vec<u64> = (0..size).map(|_| soss[rng.below(soss.len() as u64) as usize]).collect();
        let sets: Vec<SoftSet> = family.iter().map(|&g| c.wrap(g)).collect();
        let report = analyze_cover(c.space, &c.wrap(carrier), &sets).expect("shared signature");
        let cover_ok = match &report.minimal_subcover {
            Some(idx) => {
                let covers = |skip: Option<usize>| {
                    subset(carrier, idx.iter().filter(|&&i| Some(i) != skip).fold(0, |acc, &i| acc | family[i]))
                };
                report.is_cover
                    && report.is_semiopen_cover
                    && covers(None)
                    && idx.iter().all(|&i| !covers(Some(i)))
                    && Some(idx.len()) == brute_force_min_cover(carrier, &family)
            }
            None => !report.is_cover && brute_force_min_cover(carrier, &family).is_none(),
        };
        let fip_ok = match &report.fip_violation {
            Some(idx) => idx.iter().fold(carrier, |acc, &i| acc & family[i]) == 0 && !report.fip_holds,
            None => family.iter().fold(carrier, |acc, &g| acc & g) != 0 && report.fip_holds,
        };
        out.check(cover_ok && fip_ok, || {
            sets.iter().fold(Failure::new("cover report is wrong"), |f, s| f.src("member", s.clone()))
        });
    }
}

fn check_semiseparation_oracle(c: &Case, out: &mut Outcome) {
    let fast = find_semiseparation(c.space).expect("families already computed");
    let slow = find_semiseparation_by_pairs(c.space).expect("families already computed");
    out.check(fast == slow, || Failure::new("semiseparation searches disagree"));
}

// ---- definitions ------------------------------------------------------------

fn check_map_definitions(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        let f = &m.function;
        let target_fam = semi_families(&m.target).expect("target fits under the cap");
        let source_closed = c.space.closed_bits();
        let pre_fails = |h: u64, ok: &dyn Fn(u64) -> bool| !ok(f.preimage_bits(h));
        let continuous = |h: u64| pre_fails(h, &|g| c.space.is_open_bits(g));
        let semicontinuous = |h: u64| pre_fails(h, &|g| c.fam.is_semiopen(g));
        let semiopen_map = |g: u64| !target_fam.is_semiopen(f.image_bits(g));
        let semiclosed_map = |g: u64| !target_fam.is_semiclosed(f.image_bits(g));
        let rows: [(&str, &MapVerdict, Vec<u64>, &dyn Fn(u64) -> bool); 5] = [
            ("continuous", &m.class.continuous, m.target.open_bits().to_vec(), &continuous),
            ("semicontinuous", &m.class.semicontinuous, m.target.open_bits().to_vec(), &semicontinuous),
            ("irresolute", &m.class.irresolute, target_fam.semiopen.clone(), &semicontinuous),
            ("semiopen map", &m.class.semiopen_map, c.space.open_bits().to_vec(), &semiopen_map),
            ("semiclosed map", &m.class.semiclosed_map, source_closed, &semiclosed_map),
        ];
        for (name, verdict, domain, fails) in rows {
            let direct = !domain.iter().any(|&g| fails(g));
            let witness_ok = verdict.witness.as_ref().map_or(verdict.holds, |w| !verdict.holds && fails(w.bits()));
            out.check(verdict.holds == direct && witness_ok, || {
                Failure::new(format!("{name} classification disagrees with its definition")).on_map(i)
            });
        }
    });
}

fn check_semicompact_definition(c: &Case, out: &mut Outcome) {
    let covered = minimum_cover(c.carrier(), &c.fam.semiopen).is_some();
    out.check(covered == c.compactness().semicompact, || Failure::new("semicompactness disagrees with the SOSS cover"));
}

fn check_fip_definition(c: &Case, out: &mut Outcome) {
    let mut rng = c.rng(4);
    let n = c.sets.len() as u64;
    let carrier = c.carrier();
    for _ in 0..32 {
        let size = 1 + rng.below(6) as usize;
        let family: Vec<u64> = (0..size).map(|_| c.sets[rng.below(n) as usize]).collect();
        let brute = (1u64..1 << size).all(|mask| ones(mask).fold(carrier, |acc, j| acc & family[j as usize]) != 0);
        let ok = has_fip(carrier, &family) == brute && fip_violation(carrier, &family).is_none() == brute;
        out.check(ok, || {
            family.iter().fold(Failure::new("FIP decision disagrees with subfamily intersections"), |f, &g| {
                f.src("member", c.wrap(g))
            })
        });
    }
}

fn check_semiseparation_definition(c: &Case, out: &mut Outcome) {
    let Some(sep) = find_semiseparation(c.space).expect("families already computed") else {
        return;
    };
    let (g, h) = (sep.first.bits(), sep.second.bits());
    let ok = g != 0 && h != 0 && g & h == 0 && g | h == c.carrier() && c.fam.is_semiopen(g) && c.fam.is_semiopen(h);
    out.check(ok, || Failure::new("reported semiseparation is not one").src("part", sep.first.clone()).src("part", sep.second.clone()));
}

fn check_semiconnected_definition(c: &Case, out: &mut Outcome) {
    let sep = find_semiseparation(c.space).expect("families already computed");
    out.check(holds(c, Axiom::Semiconnected) == sep.is_none(), || Failure::new("semiconnectedness disagrees with the semiseparation search"));
}

/// Is there a disjoint pair `G ⊇ a`, `H ⊇ b` of semiopen sets?
fn separable(c: &Case, a: u64, b: u64) -> bool {
    let so = &c.fam.semiopen;
    so.iter().filter(|&&g| subset(a, g)).any(|&g| so.iter().any(|&h| subset(b, h) && g & h == 0))
}

/// Does `w` violate the definition of `axiom` directly?
fn violates(c: &Case, axiom: Axiom, w: &Witness) -> bool {
    let so = &c.fam.semiopen;
    let splits = |p: u64, q: u64| so.iter().any(|&g| g & p != 0 && g & q == 0);
    match (axiom, w) {
        (Axiom::SemiT0, Witness::Points(p, q)) => {
            let (p, q) = (p.bit(), q.bit());
            p != q && !splits(p, q) && !splits(q, p)
        }
        (Axiom::SemiT1 | Axiom::SemiT3 | Axiom::SemiT4, Witness::Points(p, q)) => {
            let (p, q) = (p.bit(), q.bit());
            p != q && (!splits(p, q) || !splits(q, p))
        }
        (Axiom::SemiT2, Witness::Points(p, q)) => p.bit() != q.bit() && !separable(c, p.bit(), q.bit()),
        (Axiom::Semiregular | Axiom::SemiT3, Witness::PointSet(p, f)) => {
            let (p, f) = (p.bit(), f.bits());
            c.fam.is_semiclosed(f) && p & f == 0 && !separable(c, p, f)
        }
        (Axiom::Seminormal | Axiom::SemiT4, Witness::Sets(f, k)) => {
            let (f, k) = (f.bits(), k.bits());
            c.fam.is_semiclosed(f) && c.fam.is_semiclosed(k) && f & k == 0 && !separable(c, f, k)
        }
        _ => false,
    }
}

fn check_axiom_definition(c: &Case, out: &mut Outcome, axioms: &[Axiom]) {
    if c.fam.semiopen.len() > 64 {
        return;
    }
    for &a in axioms {
        let verdict = c.axioms().get(a);
        let ok = match verdict.witness() {
            Some(w) => !verdict.holds && violates(c, a, w),
            None => verdict.holds,
        };
        out.check(ok, || {
            let f = Failure::new(format!("{a} witness does not violate the definition"));
            match verdict.witness() {
                Some(w) => f.witness(w, Side::Source),
                None => f,
            }
        });
        if c.fam.semiopen.len() <= 16 {
            let oracle = axiom_oracle::holds(c.space, a).expect("families already computed");
            out.check(verdict.holds == oracle, || Failure::new(format!("{a} decision disagrees with direct quantification")));
        }
    }
}

fn check_d6_1(c: &Case, out: &mut Outcome) {
    check_axiom_definition(c, out, &[Axiom::SemiT0]);
}

fn check_d6_4(c: &Case, out: &mut Outcome) {
    check_axiom_definition(c, out, &[Axiom::SemiT1]);
}

fn check_d6_7(c: &Case, out: &mut Outcome) {
    check_axiom_definition(c, out, &[Axiom::SemiT2]);
}

fn check_d6_9(c: &Case, out: &mut Outcome) {
    check_axiom_definition(c, out, &[Axiom::Semiregular, Axiom::SemiT3]);
}

fn check_d6_13(c: &Case, out: &mut Outcome) {
    check_axiom_definition(c, out, &[Axiom::Seminormal, Axiom::SemiT4]);
}

// ---- semiopen and semiclosed sets ------------------------------------------

fn check_open_semiopen(c: &Case, out: &mut Outcome) {
    for &o in c.space.open_bits() {
        out.check(c.fam.is_semiopen(o), || Failure::new("open set is not semiopen").src("G", c.wrap(o)));
    }
    for k in c.space.closed_bits() {
        out.check(c.fam.is_semiclosed(k), || Failure::new("closed set is not semiclosed").src("K", c.wrap(k)));
    }
}

fn check_converse_open(c: &Case, out: &mut Outcome) {
    for &g in &c.fam.semiopen {
        out.check(c.space.is_open_bits(g), || Failure::new("semiopen but not open").src("G", c.wrap(g)));
    }
}

fn check_converse_closed(c: &Case, out: &mut Outcome) {
    for &k in &c.fam.semiclosed {
        out.check(c.space.is_closed_bits(k), || Failure::new("semiclosed but not closed").src("K", c.wrap(k)));
    }
}

fn check_worked_example(c: &Case, out: &mut Outcome) {
    let example = fixtures::example_space();
    if c.space.encoding() != example.encoding() {
        return;
    }
    let t = c.space;
    let lit = |s: &str| SoftSet::parse_literal(t.signature(), s).expect("static literal").bits();
    let f1 = fixtures::example_f1().bits();
    let g = lit(r#"{"e1":["h1","h2"],"e2":["h1"]}"#);
    let k = lit(r#"{"e1":["h3"],"e2":["h3"]}"#);
    let cl_f1 = t.closure_bits(f1);
    out.check(subset(f1, g) && subset(g, cl_f1), || Failure::new("F1 does not witness G semiopen").src("G", c.wrap(g)));
    out.check(cl_f1 == f1, || Failure::new("cl F1 differs from F1").src("F1", c.wrap(f1)).src("cl F1", c.wrap(cl_f1)));
    let f1c = comp(c, f1);
    out.check(subset(t.interior_bits(f1c), k) && subset(k, f1c), || {
        Failure::new("F1^c does not witness K semiclosed").src("K", c.wrap(k))
    });
}

fn check_extremes(c: &Case, out: &mut Outcome) {
    for g in [0, c.carrier()] {
        out.check(c.fam.is_semiopen(g) && c.fam.is_semiclosed(g), || {
            Failure::new("extreme set is not semiopen and semiclosed").src("G", c.wrap(g))
        });
    }
}

fn check_semiopen_unions(c: &Case, out: &mut Outcome) {
    for (a, b) in pairs_of(&c.fam.semiopen, c.seed ^ 0x9A3) {
        out.check(c.fam.is_semiopen(a | b), || {
            Failure::new("union of semiopen sets is not semiopen").src("G", c.wrap(a)).src("K", c.wrap(b))
        });
    }
    let all = c.fam.semiopen.iter().fold(0, |acc, &g| acc | g);
    out.check(c.fam.is_semiopen(all), || Failure::new("union of SOSS is not semiopen"));
}

fn check_semiclosed_intersections(c: &Case, out: &mut Outcome) {
    for (a, b) in pairs_of(&c.fam.semiclosed, c.seed ^ 0x9A4) {
        out.check(c.fam.is_semiclosed(a & b), || {
            Failure::new("intersection of semiclosed sets is not semiclosed").src("F", c.wrap(a)).src("K", c.wrap(b))
        });
    }
    let all = c.fam.semiclosed.iter().fold(c.carrier(), |acc, &g| acc & g);
    out.check(c.fam.is_semiclosed(all), || Failure::new("intersection of SCSS is not semiclosed"));
}

fn capped(items: &[u64], cap: usize, seed: u64) -> Vec<u64> {
    if items.len() <= cap {
        return items.to_vec();
    }
    let mut rng = crate::rng::SplitMix64::new(seed);
    (0..cap).map(|_| items[rng.below(items.len() as u64) as usize]).collect()
}

fn check_semiopen_sandwich(c: &Case, out: &mut Outcome) {
    for g in capped(&c.fam.semiopen, 64, c.seed ^ 0x9A5) {
        for k in between(g, c.space.closure_bits(g), 64) {
            out.check(c.fam.is_semiopen(k), || {
                Failure::new("set between G and cl G is not semiopen").src("G", c.wrap(g)).src("K", c.wrap(k))
            });
        }
    }
}

fn check_semiclosed_sandwich(c: &Case, out: &mut Outcome) {
    for f in capped(&c.fam.semiclosed, 64, c.seed ^ 0x9A6) {
        for k in between(c.space.interior_bits(f), f, 64) {
            out.check(c.fam.is_semiclosed(k), || {
                Failure::new("set between int F and F is not semiclosed").src("F", c.wrap(f)).src("K", c.wrap(k))
            });
        }
    }
}

fn check_point_characterization(c: &Case, out: &mut Outcome) {
    for_sets(c, out, "point characterization disagrees with semiopenness", |g| {
        let by_points = ones(g).all(|p| {
            c.fam.semiopen.iter().any(|&h| h >> p & 1 == 1 && subset(h, g))
        });
        by_points == c.fam.is_semiopen(g)
    });
}

fn check_semi_operators_extremal(c: &Case, out: &mut Outcome) {
    for_sets(c, out, "sscl or ssint is not extremal", |g| {
        let cl = sscl(c, g);
        let int = ssint(c, g);
        c.fam.is_semiclosed(cl)
            && subset(g, cl)
            && c.fam.semiclosed.iter().all(|&s| !subset(g, s) || subset(cl, s))
            && c.fam.is_semiopen(int)
            && subset(int, g)
            && c.fam.semiopen.iter().all(|&s| !subset(s, g) || subset(s, int))
    });
}

fn check_2_11_i(c: &Case, out: &mut Outcome) {
    for_sets(c, out, "semiclosedness differs from G = sscl G", |g| c.fam.is_semiclosed(g) == (sscl(c, g) == g));
}

fn check_2_11_ii(c: &Case, out: &mut Outcome) {
    for_sets(c, out, "semiopenness differs from G = ssint G", |g| c.fam.is_semiopen(g) == (ssint(c, g) == g));
}

fn check_2_11_iii(c: &Case, out: &mut Outcome) {
    for_sets(c, out, "(sscl G)^c differs from ssint(G^c)", |g| comp(c, sscl(c, g)) == ssint(c, comp(c, g)));
}

fn check_2_11_iv(c: &Case, out: &mut Outcome) {
    for_sets(c, out, "(ssint G)^c differs from sscl(G^c)", |g| comp(c, ssint(c, g)) == sscl(c, comp(c, g)));
}

fn check_2_11_v(c: &Case, out: &mut Outcome) {
    for_pairs(c, out, "ssint is not monotone", |g, k| !subset(g, k) || subset(ssint(c, g), ssint(c, k)));
}

fn check_2_11_vi(c: &Case, out: &mut Outcome) {
    for_pairs(c, out, "sscl is not monotone", |g, k| !subset(g, k) || subset(sscl(c, g), sscl(c, k)));
}

fn check_2_11_vii(c: &Case, out: &mut Outcome) {
    out.check(sscl(c, 0) == 0 && sscl(c, c.carrier()) == c.carrier(), || Failure::new("sscl moves an extreme set"));
}

fn check_2_11_viii(c: &Case, out: &mut Outcome) {
    out.check(ssint(c, 0) == 0 && ssint(c, c.carrier()) == c.carrier(), || Failure::new("ssint moves an extreme set"));
}

fn check_2_11_ix(c: &Case, out: &mut Outcome) {
    for_pairs(c, out, "sscl(G ∪ K) differs from sscl G ∪ sscl K", |g, k| sscl(c, g | k) == sscl(c, g) | sscl(c, k));
}

fn check_2_11_x(c: &Case, out: &mut Outcome) {
    for_pairs(c, out, "ssint(G ∩ K) differs from ssint G ∩ ssint K", |g, k| ssint(c, g & k) == ssint(c, g) & ssint(c, k));
}

fn check_2_11_xi(c: &Case, out: &mut Outcome) {
    for_pairs(c, out, "sscl(G ∩ K) is not inside sscl G ∩ sscl K", |g, k| subset(sscl(c, g & k), sscl(c, g) & sscl(c, k)));
}

fn check_2_11_xii(c: &Case, out: &mut Outcome) {
    for_pairs(c, out, "ssint(G ∪ K) is not inside ssint G ∪ ssint K", |g, k| subset(ssint(c, g | k), ssint(c, g) | ssint(c, k)));
}

fn check_2_11_xii_dual(c: &Case, out: &mut Outcome) {
    for_pairs(c, out, "ssint G ∪ ssint K is not inside ssint(G ∪ K)", |g, k| subset(ssint(c, g) | ssint(c, k), ssint(c, g | k)));
}

fn check_2_11_xiii(c: &Case, out: &mut Outcome) {
    for_sets(c, out, "sscl is not idempotent", |g| sscl(c, sscl(c, g)) == sscl(c, g));
}

fn check_2_11_xiv(c: &Case, out: &mut Outcome) {
    for_sets(c, out, "ssint is not idempotent", |g| ssint(c, ssint(c, g)) == ssint(c, g));
}

fn check_four_way(c: &Case, out: &mut Outcome) {
    let t = c.space;
    for_sets(c, out, "the four forms of semiclosedness disagree", |g| {
        let gc = comp(c, g);
        let forms = [
            definitional::semiclosed_witness_bits(t, g).is_some(),
            subset(t.interior_bits(t.closure_bits(g)), g),
            subset(gc, t.closure_bits(t.interior_bits(gc))),
            definitional::semiopen_witness_bits(t, gc).is_some(),
        ];
        forms.iter().all(|&f| f == forms[0])
    });
}

// ---- soft functions ---------------------------------------------------------

fn check_closed_preimages(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        let bad = m
            .target
            .closed_bits()
            .into_iter()
            .find(|&k| !c.fam.is_semiclosed(m.function.preimage_bits(k)));
        out.check(m.class.semicontinuous.holds == bad.is_none(), || {
            let f = Failure::new("semicontinuity differs from the closed-set form").on_map(i);
            match bad {
                Some(k) => f.tgt("K", m.target.wrap(k)),
                None => f,
            }
        });
    });
}

fn check_semicontinuous_irresolute(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        if !m.class.semicontinuous.holds {
            return;
        }
        out.check(m.class.irresolute.holds, || {
            let f = Failure::new("semicontinuous but not irresolute").on_map(i);
            match &m.class.irresolute.witness {
                Some(w) => f.tgt("H", w.clone()),
                None => f,
            }
        });
    });
}

/// First `F` with `f(sscl F) ⊄ cl f(F)`.
fn sscl_image_failure(c: &Case, m: &MapCase) -> Option<u64> {
    let f = &m.function;
    c.sets
        .iter()
        .copied()
        .find(|&g| !subset(f.image_bits(sscl(c, g)), m.target.closure_bits(f.image_bits(g))))
}

fn check_3_3_forward(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        if !m.class.semicontinuous.holds {
            return;
        }
        let bad = sscl_image_failure(c, m);
        out.check(bad.is_none(), || {
            Failure::new("f(sscl F) is not inside cl f(F)").on_map(i).src("F", c.wrap(bad.unwrap_or(0)))
        });
    });
}

/// Records an iff between a map class and a quantified condition.
fn check_iff(out: &mut Outcome, i: usize, class: &MapVerdict, side: Side, condition_failure: Option<Failure>) {
    out.check(class.holds == condition_failure.is_none(), || {
        let f = condition_failure.unwrap_or_else(|| {
            let f = Failure::new("condition holds but the map is not in the class");
            match (&class.witness, side) {
                (Some(w), Side::Source) => f.src("G", w.clone()),
                (Some(w), Side::Target) => f.tgt("H", w.clone()),
                (None, _) => f,
            }
        });
        f.on_map(i)
    });
}

fn check_3_3(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        let failure = sscl_image_failure(c, m).map(|g| {
            Failure::new("f(sscl F) is not inside cl f(F)").src("F", c.wrap(g))
        });
        check_iff(out, i, &m.class.semicontinuous, Side::Target, failure);
    });
}

fn check_3_4(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        let f = &m.function;
        let failure = m.target_sets.iter().copied().find(|&h| {
            let pre = f.preimage_bits(h);
            !subset(c.space.interior_bits(pre), ssint(c, pre))
        });
        let failure = failure.map(|h| Failure::new("int f⁻¹(H) is not inside ssint f⁻¹(H)").tgt("H", m.target.wrap(h)));
        check_iff(out, i, &m.class.semicontinuous, Side::Target, failure);
    });
}

fn check_3_4_alt(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        let f = &m.function;
        let failure = m.target_sets.iter().copied().find(|&h| {
            !subset(f.preimage_bits(m.target.interior_bits(h)), ssint(c, f.preimage_bits(h)))
        });
        let failure = failure.map(|h| Failure::new("f⁻¹(int H) is not inside ssint f⁻¹(H)").tgt("H", m.target.wrap(h)));
        check_iff(out, i, &m.class.semicontinuous, Side::Target, failure);
    });
}

fn interior_image_failure(c: &Case, m: &MapCase) -> Option<u64> {
    let f = &m.function;
    c.sets.iter().copied().find(|&g| {
        !subset(
            f.image_bits(c.space.interior_bits(g)),
            semi::ssint_bits(&m.target, f.image_bits(g)),
        )
    })
}

fn check_3_5_forward(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        if !m.class.semiopen_map.holds {
            return;
        }
        let bad = interior_image_failure(c, m);
        out.check(bad.is_none(), || {
            Failure::new("f(int F) is not inside ssint f(F)").on_map(i).src("F", c.wrap(bad.unwrap_or(0)))
        });
    });
}

fn check_3_5(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        let failure = interior_image_failure(c, m)
            .map(|g| Failure::new("f(int F) is not inside ssint f(F)").src("F", c.wrap(g)));
        check_iff(out, i, &m.class.semiopen_map, Side::Source, failure);
    });
}

fn check_3_6(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        if !m.class.semiopen_map.holds {
            return;
        }
        let f = &m.function;
        let target_fam = semi_families(&m.target).expect("target fits under the cap");
        let full_t = m.target.carrier_bits();
        let closed = capped(&c.space.closed_bits(), 64, c.seed ^ 0x9A7);
        for k in capped(&m.target_sets, 64, c.seed ^ 0x9A8) {
            let pre = f.preimage_bits(k);
            for &cf in closed.iter().filter(|&&cf| subset(pre, cf)) {
                let h = full_t & !f.image_bits(comp(c, cf));
                let ok = target_fam.is_semiclosed(h) && subset(k, h) && subset(f.preimage_bits(h), cf);
                out.check(ok, || {
                    Failure::new("constructed H fails")
                        .on_map(i)
                        .tgt("K", m.target.wrap(k))
                        .src("F", c.wrap(cf))
                        .tgt("H", m.target.wrap(h))
                });
            }
        }
    });
}

fn check_3_7(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        let f = &m.function;
        let failure = c
            .sets
            .iter()
            .copied()
            .find(|&g| !subset(semi::sscl_bits(&m.target, f.image_bits(g)), f.image_bits(c.space.closure_bits(g))))
            .map(|g| Failure::new("sscl f(F) is not inside f(cl F)").src("F", c.wrap(g)));
        check_iff(out, i, &m.class.semiclosed_map, Side::Source, failure);
    });
}

// ---- semicompactness ---------------------------------------------------------

fn check_compact_semicompact(c: &Case, out: &mut Outcome) {
    let compact = minimum_cover(c.carrier(), c.space.open_bits()).is_some();
    out.check(!compact || c.compactness().semicompact, || Failure::new("compact but not semicompact"));
}

fn check_4_4(c: &Case, out: &mut Outcome) {
    let check = &c.compactness().fip_characterization;
    out.check(check.holds, || {
        check
            .counterexample
            .iter()
            .flatten()
            .fold(Failure::new("semiclosed family with the FIP has null intersection"), |f, s| f.src("member", s.clone()))
    });
}

fn check_4_5(c: &Case, out: &mut Outcome) {
    let check = &c.compactness().sscl_characterization;
    out.check(check.holds, || {
        check
            .counterexample
            .iter()
            .flatten()
            .fold(Failure::new("family with the FIP has null intersection of semi-closures"), |f, s| f.src("member", s.clone()))
    });
}

fn check_4_6(c: &Case, out: &mut Outcome) {
    if !c.compactness().semicompact {
        return;
    }
    for_maps(c, |i, m| {
        if !m.class.semicontinuous.holds {
            return;
        }
        let image = m.image_of_whole(c.space);
        let sub = m.target.subspace_bits(image);
        out.check(minimum_cover(image, sub.open_bits()).is_some(), || {
            Failure::new("open cover of the image has no finite subcover").on_map(i)
        });
    });
}

fn check_4_7(c: &Case, out: &mut Outcome) {
    if !c.compactness().semicompact {
        return;
    }
    for s in c.subspaces() {
        if !c.fam.is_semiclosed(s.carrier) {
            continue;
        }
        let sub_fam = semi_families(&s.space).expect("subspace fits under the cap");
        let ok = s.axioms.holds(Axiom::Semicompact) && minimum_cover(s.carrier, &sub_fam.semiopen).is_some();
        out.check(ok, || Failure::new("semiclosed subspace is not semicompact").src("V", c.wrap(s.carrier)));
    }
}

// ---- semiconnectedness -------------------------------------------------------

fn semiseparations(c: &Case, cap: usize) -> Vec<(u64, u64)> {
    let carrier = c.carrier();
    c.fam
        .semiopen
        .iter()
        .copied()
        .filter(|&g| g != 0 && g != carrier && c.fam.is_semiopen(carrier & !g))
        .map(|g| (g, carrier & !g))
        .filter(|&(g, h)| g > h)
        .take(cap)
        .collect()
}

fn check_5_3(c: &Case, out: &mut Outcome) {
    let seps = semiseparations(c, 8);
    if seps.is_empty() {
        return;
    }
    for s in c.subspaces() {
        if !s.axioms.holds(Axiom::Semiconnected) {
            continue;
        }
        for &(h, g) in &seps {
            out.check(subset(s.carrier, h) || subset(s.carrier, g), || {
                Failure::new("semiconnected subspace meets both parts")
                    .src("V", c.wrap(s.carrier))
                    .src("H", c.wrap(h))
                    .src("G", c.wrap(g))
            });
        }
    }
}

fn check_5_4(c: &Case, out: &mut Outcome) {
    for s in c.subspaces() {
        if !s.axioms.holds(Axiom::Semiconnected) {
            continue;
        }
        for k in between(s.carrier, c.space.closure_bits(s.carrier), 16) {
            let sub = c.space.subspace_bits(k);
            let sep = find_semiseparation(&sub).expect("subspace fits under the cap");
            out.check(sep.is_none(), || {
                let f = Failure::new("K between V and cl V is not semiconnected")
                    .src("V", c.wrap(s.carrier))
                    .src("K", c.wrap(k));
                match sep {
                    Some(p) => f.src("part", p.first).src("part", p.second),
                    None => f,
                }
            });
        }
    }
}

fn check_5_5(c: &Case, out: &mut Outcome) {
    let sep = find_semiseparation(c.space).expect("families already computed");
    let clopen = semi_clopen_sets(c.space).expect("families already computed");
    out.check(sep.is_some() == !clopen.is_empty(), || Failure::new("separation and semi-clopen detectors disagree"));
}

fn check_5_6(c: &Case, out: &mut Outcome) {
    if !holds(c, Axiom::Semiconnected) {
        return;
    }
    for_maps(c, |i, m| {
        if !m.class.semicontinuous.holds {
            return;
        }
        let sub = m.target.subspace_bits(m.image_of_whole(c.space));
        let sep = find_open_separation(&sub);
        out.check(sep.is_none(), || {
            let f = Failure::new("image has an open separation").on_map(i);
            match sep {
                Some(p) => f.tgt("part", p.first).tgt("part", p.second),
                None => f,
            }
        });
    });
}

fn check_5_7(c: &Case, out: &mut Outcome) {
    if !holds(c, Axiom::Semiconnected) {
        return;
    }
    for_maps(c, |i, m| {
        if !m.class.irresolute.holds {
            return;
        }
        let sub = m.target.subspace_bits(m.image_of_whole(c.space));
        let sep = find_semiseparation(&sub).expect("subspace fits under the cap");
        out.check(sep.is_none(), || {
            let f = Failure::new("image has a semiseparation").on_map(i);
            match sep {
                Some(p) => f.tgt("part", p.first).tgt("part", p.second),
                None => f,
            }
        });
    });
}

// ---- semi-separation axioms ----------------------------------------------------

fn verdict_failure(c: &Case, detail: &str, a: Axiom) -> Failure {
    let f = Failure::new(detail);
    match c.axioms().get(a).witness() {
        Some(w) => f.witness(w, Side::Source),
        None => f,
    }
}

fn check_6_2(c: &Case, out: &mut Outcome) {
    let cells = c.carrier().count_ones();
    if cells >= 64 || c.space.len() as u64 != 1u64 << cells {
        return;
    }
    out.check(holds(c, Axiom::SemiT0), || verdict_failure(c, "discrete space is not semi-T0", Axiom::SemiT0));
}

fn check_heredity(c: &Case, out: &mut Outcome, a: Axiom) {
    if !holds(c, a) {
        return;
    }
    for s in c.subspaces() {
        out.check(s.axioms.holds(a), || {
            let f = Failure::new(format!("subspace is not {a}")).src("V", c.wrap(s.carrier));
            match s.axioms.get(a).witness() {
                Some(w) => f.witness(w, Side::Source),
                None => f,
            }
        });
    }
}

fn check_6_3(c: &Case, out: &mut Outcome) {
    check_heredity(c, out, Axiom::SemiT0);
}

fn check_6_5(c: &Case, out: &mut Outcome) {
    let ctx = crate::analysis::separation::SeparationContext::new(c.space).expect("families already computed");
    if !ctx.points_semiclosed() {
        return;
    }
    out.check(holds(c, Axiom::SemiT1), || verdict_failure(c, "points are semiclosed but the space is not semi-T1", Axiom::SemiT1));
}

fn check_6_6(c: &Case, out: &mut Outcome) {
    check_heredity(c, out, Axiom::SemiT1);
}

fn check_6_8(c: &Case, out: &mut Outcome) {
    check_heredity(c, out, Axiom::SemiT2);
}

fn check_6_10(c: &Case, out: &mut Outcome) {
    check_heredity(c, out, Axiom::SemiT3);
}

fn check_implication(c: &Case, out: &mut Outcome, from: Axiom, to: Axiom) {
    if holds(c, from) {
        out.check(holds(c, to), || verdict_failure(c, &format!("{from} but not {to}"), to));
    }
}

fn check_6_11(c: &Case, out: &mut Outcome) {
    check_implication(c, out, Axiom::SemiT3, Axiom::SemiT2);
    check_implication(c, out, Axiom::SemiT2, Axiom::SemiT1);
    check_implication(c, out, Axiom::SemiT1, Axiom::SemiT0);
}

fn check_6_12(c: &Case, out: &mut Outcome) {
    if holds(c, Axiom::Semicompact) {
        check_implication(c, out, Axiom::SemiT2, Axiom::SemiT3);
    }
}

fn check_6_14(c: &Case, out: &mut Outcome) {
    check_implication(c, out, Axiom::SemiT4, Axiom::SemiT3);
}

fn check_6_15(c: &Case, out: &mut Outcome) {
    let characterization = seminormal_characterization(c.space).expect("families already computed");
    let verdict = c.axioms().get(Axiom::Seminormal);
    let same = match (&characterization, verdict.witness()) {
        (None, None) => true,
        (Some((f, g)), Some(Witness::Sets(f2, k))) => {
            f == f2 && g.bits() == comp(c, k.bits())
        }
        _ => false,
    };
    out.check(same, || {
        let f = Failure::new("characterization and seminormality disagree");
        match characterization {
            Some((a, b)) => f.src("F", a).src("G", b),
            None => f,
        }
    });
}

fn target_seminormal(m: &MapCase) -> Option<Witness> {
    crate::analysis::separation::check_axiom(&m.target, Axiom::Seminormal)
        .expect("target fits under the cap")
        .witnesses
        .into_iter()
        .next()
}

fn invariance_hypothesis(c: &Case, m: &MapCase) -> bool {
    holds(c, Axiom::Seminormal)
        && m.function.is_surjective()
        && m.class.irresolute.holds
        && m.class.semiopen_map.holds
}

fn check_6_16(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        if !invariance_hypothesis(c, m) {
            return;
        }
        let w = target_seminormal(m);
        out.check(w.is_none(), || {
            let f = Failure::new("image space is not seminormal").on_map(i);
            match &w {
                Some(w) => f.witness(w, Side::Target),
                None => f,
            }
        });
    });
}

fn check_6_16_open(c: &Case, out: &mut Outcome) {
    for_maps(c, |i, m| {
        if !invariance_hypothesis(c, m) {
            return;
        }
        let fam = semi_families(&m.target).expect("target fits under the cap");
        let bad = fam.semiclosed.iter().find_map(|&l| {
            fam.semiclosed
                .iter()
                .find(|&&k| l & k == 0 && m.target.open_hull_bits(l) & m.target.open_hull_bits(k) != 0)
                .map(|&k| (l, k))
        });
        out.check(bad.is_none(), || {
            let (l, k) = bad.unwrap_or((0, 0));
            Failure::new("disjoint semiclosed sets have no disjoint open neighbourhoods")
                .on_map(i)
                .tgt("L", m.target.wrap(l))
                .tgt("M", m.target.wrap(k))
        });
    });
}

fn check_6_17(c: &Case, out: &mut Outcome) {
    if !holds(c, Axiom::Seminormal) {
        return;
    }
    for s in c.subspaces() {
        if !c.fam.is_semiclosed(s.carrier) {
            continue;
        }
        out.check(s.axioms.holds(Axiom::Seminormal), || {
            let f = Failure::new("semiclosed subspace is not seminormal").src("V", c.wrap(s.carrier));
            match s.axioms.get(Axiom::Seminormal).witness() {
                Some(w) => f.witness(w, Side::Source),
                None => f,
            }
        });
    }
}

fn check_6_18(c: &Case, out: &mut Outcome) {
    if holds(c, Axiom::Semicompact) {
        check_implication(c, out, Axiom::SemiT2, Axiom::Seminormal);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique_and_selectable() {
        let ids: HashSet<&str> = registry().iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), registry().len());
        let picked = select(Some(&["T2.11.ix".to_string(), "R2.3".to_string()])).unwrap();
        assert_eq!(picked.iter().map(|c| c.id).collect::<Vec<_>>(), vec!["R2.3", "T2.11.ix"]);
        assert!(matches!(select(Some(&["T9.9".to_string()])), Err(Error::UnknownClaim(_))));
    }

    #[test]
    fn converse_witnesses_on_the_example() {
        let t = fixtures::example_space();
        let case = Case::new(&t, &[]).unwrap();
        let out = find("R2.3.conv-open").unwrap().evaluate(&case);
        let literals: Vec<String> = out.failures.iter().map(|f| f.sets[0].2.to_literal()).collect();
        assert!(literals.contains(&r#"{"e1":["h1","h2"],"e2":["h1","h2"]}"#.to_string()));
        let out = find("R2.3.conv-closed").unwrap().evaluate(&case);
        let literals: Vec<String> = out.failures.iter().map(|f| f.sets[0].2.to_literal()).collect();
        assert!(literals.contains(&r#"{"e1":["h3"],"e2":["h3"]}"#.to_string()));
    }

    #[test]
    fn printed_direction_of_xii_fails_on_two_indiscrete_points() {
        let t = fixtures::indiscrete_space();
        let case = Case::new(&t, &[]).unwrap();
        assert!(find("T2.11.xii").unwrap().evaluate(&case).refutations > 0);
        assert_eq!(find("T2.11.xii.dual").unwrap().evaluate(&case).refutations, 0);
    }

    #[test]
    fn asserted_claims_hold_on_fixtures() {
        for t in [fixtures::example_space(), fixtures::indiscrete_space(), fixtures::discrete_space()] {
            let case = Case::new(&t, &[]).unwrap();
            for claim in registry().iter().filter(|c| c.kind == ClaimKind::Asserted) {
                let out = claim.evaluate(&case);
                assert_eq!(out.refutations, 0, "{} on {}: {:?}", claim.id, t.encoding(), out.failures);
            }
        }
    }
}
