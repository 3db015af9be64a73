//! Semi-separation axioms decided by exhaustive quantification.
//!
//! Points are the singleton soft points inside the carrier; two points are
//! distinct when they sit at different cells. Each decision reduces to a
//! few precomputed quantities:
//!
//! * `M(p) = ⋂ {S ∈ SOSS : p ∈ S}`: some semiopen set holds `p` but not
//!   `q` iff `q ∉ M(p)`;
//! * `D(S) = ssint(carrier − S)`, the largest semiopen set disjoint from `S`:
//!   semiopen `S ∋ p` and `H ⊇ X` can be chosen disjoint iff `X ⊆ D(S)`
//!   for some semiopen `S ∋ p`;
//! * `D` is antitone, so only inclusion-minimal candidates `S` matter.

use std::fmt;
use std::str::FromStr;

use crate::analysis::connectedness::{find_semiseparation, Separation};
use crate::bits::{ones, subset};
use crate::error::{Error, Result};
use crate::semi::{self, semi_families, SemiFamilies};
use crate::softset::{SoftPoint, SoftSet};
use crate::topology::SoftTopology;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    SemiT0,
    SemiT1,
    SemiT2,
    Semiregular,
    SemiT3,
    Seminormal,
    SemiT4,
    Semiconnected,
    Semicompact,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::SemiT0,
        Axiom::SemiT1,
        Axiom::SemiT2,
        Axiom::Semiregular,
        Axiom::SemiT3,
        Axiom::Seminormal,
        Axiom::SemiT4,
        Axiom::Semiconnected,
        Axiom::Semicompact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::SemiT0 => "semi_T0",
            Axiom::SemiT1 => "semi_T1",
            Axiom::SemiT2 => "semi_T2",
            Axiom::Semiregular => "semiregular",
            Axiom::SemiT3 => "semi_T3",
            Axiom::Seminormal => "seminormal",
            Axiom::SemiT4 => "semi_T4",
            Axiom::Semiconnected => "semiconnected",
            Axiom::Semicompact => "semicompact",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAxiom(s.to_string()))
    }
}

/// Why an axiom fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// No semiopen set separates the two points in the required way.
    Points(SoftPoint, SoftPoint),
    /// A point outside a semiclosed set that cannot be separated from it.
    PointSet(SoftPoint, SoftSet),
    /// Two disjoint semiclosed sets that cannot be separated.
    Sets(SoftSet, SoftSet),
    /// Disjoint nonnull semiopen sets covering the carrier.
    Semiseparation(SoftSet, SoftSet),
}

impl Witness {
    /// Labelled members in a fixed order, for reports.
    pub fn parts(&self) -> Vec<(&'static str, SoftSet)> {
        match self {
            Witness::Points(p, q) => vec![("point", p.as_soft_set()), ("point", q.as_soft_set())],
            Witness::PointSet(p, f) => vec![("point", p.as_soft_set()), ("set", f.clone())],
            Witness::Sets(f, k) => vec![("set", f.clone()), ("set", k.clone())],
            Witness::Semiseparation(g, h) => vec![("set", g.clone()), ("set", h.clone())],
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Witness::Points(..) => "points",
            Witness::PointSet(..) => "point_set",
            Witness::Sets(..) => "sets",
            Witness::Semiseparation(..) => "semiseparation",
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind())?;
        for (label, set) in self.parts() {
            write!(f, " {label}={set}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub holds: bool,
    /// First failure in canonical order, or every failure when requested.
    pub witnesses: Vec<Witness>,
}

impl AxiomVerdict {
    pub fn witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub verdicts: Vec<AxiomVerdict>,
}

impl AxiomReport {
    pub fn get(&self, axiom: Axiom) -> &AxiomVerdict {
        self.verdicts
            .iter()
            .find(|v| v.axiom == axiom)
            .expect("report covers every axiom")
    }

    pub fn holds(&self, axiom: Axiom) -> bool {
        self.get(axiom).holds
    }
}

/// Precomputed semi-structure of one space.
pub struct SeparationContext<'a> {
    t: &'a SoftTopology,
    fam: std::sync::Arc<SemiFamilies>,
    /// Carrier cells as bit positions, canonical (cell) order.
    points: Vec<u32>,
}

impl<'a> SeparationContext<'a> {
    pub fn new(t: &'a SoftTopology) -> Result<Self> {
        let fam = semi_families(t)?;
        // highest bit is the first cell
        let mut points: Vec<u32> = ones(t.carrier_bits()).collect();
        points.reverse();
        Ok(Self { t, fam, points })
    }

    fn point(&self, pos: u32) -> SoftPoint {
        let sig = self.t.signature();
        SoftPoint::from_cell(sig, sig.bit_cell(pos))
    }

    fn disjoint_part(&self, s: u64) -> u64 {
        semi::ssint_bits(self.t, self.t.carrier_bits() & !s)
    }

    /// Inclusion-minimal semiopen supersets of `base`.
    fn minimal_semiopen_over(&self, base: u64) -> Vec<u64> {
        let mut over: Vec<u64> = self
            .fam
            .semiopen
            .iter()
            .copied()
            .filter(|&s| subset(base, s))
            .collect();
        over.sort_by_key(|s| (s.count_ones(), *s));
        let mut minimal: Vec<u64> = Vec::new();
        for s in over {
            if !minimal.iter().any(|&m| subset(m, s)) {
                minimal.push(s);
            }
        }
        minimal
    }

    /// `M(p)` for every point.
    fn kernels(&self) -> Vec<u64> {
        self.points
            .iter()
            .map(|&p| {
                self.fam
                    .semiopen
                    .iter()
                    .filter(|&&s| s >> p & 1 == 1)
                    .fold(self.t.carrier_bits(), |acc, &s| acc & s)
            })
            .collect()
    }

    fn finish(axiom: Axiom, witnesses: Vec<Witness>) -> AxiomVerdict {
        AxiomVerdict {
            axiom,
            holds: witnesses.is_empty(),
            witnesses,
        }
    }

    pub fn semi_t0(&self, all: bool) -> AxiomVerdict {
        let kernels = self.kernels();
        let mut out = Vec::new();
        'outer: for (i, &p) in self.points.iter().enumerate() {
            for (j, &q) in self.points.iter().enumerate().skip(i + 1) {
                let p_only = kernels[i] >> q & 1 == 0;
                let q_only = kernels[j] >> p & 1 == 0;
                if !p_only && !q_only {
                    out.push(Witness::Points(self.point(p), self.point(q)));
                    if !all {
                        break 'outer;
                    }
                }
            }
        }
        Self::finish(Axiom::SemiT0, out)
    }

    /// Witness `(p, q)`: every semiopen set holding `p` holds `q`.
    pub fn semi_t1(&self, all: bool) -> AxiomVerdict {
        let kernels = self.kernels();
        let mut out = Vec::new();
        'outer: for (i, &p) in self.points.iter().enumerate() {
            for &q in &self.points {
                if q != p && kernels[i] >> q & 1 == 1 {
                    out.push(Witness::Points(self.point(p), self.point(q)));
                    if !all {
                        break 'outer;
                    }
                }
            }
        }
        Self::finish(Axiom::SemiT1, out)
    }

    pub fn semi_t2(&self, all: bool) -> AxiomVerdict {
        let reach: Vec<u64> = self
            .points
            .iter()
            .map(|&p| {
                self.minimal_semiopen_over(1 << p)
                    .into_iter()
                    .fold(0, |acc, s| acc | self.disjoint_part(s))
            })
            .collect();
        let mut out = Vec::new();
        'outer: for (i, &p) in self.points.iter().enumerate() {
            for &q in self.points.iter().skip(i + 1) {
                if reach[i] >> q & 1 == 0 {
                    out.push(Witness::Points(self.point(p), self.point(q)));
                    if !all {
                        break 'outer;
                    }
                }
            }
        }
        Self::finish(Axiom::SemiT2, out)
    }

    pub fn semiregular(&self, all: bool) -> AxiomVerdict {
        let mut out = Vec::new();
        'outer: for &p in &self.points {
            let candidates: Vec<u64> = self
                .minimal_semiopen_over(1 << p)
                .into_iter()
                .map(|s| self.disjoint_part(s))
                .collect();
            for &f in &self.fam.semiclosed {
                if f >> p & 1 == 0 && !candidates.iter().any(|&d| subset(f, d)) {
                    out.push(Witness::PointSet(self.point(p), self.t.wrap(f)));
                    if !all {
                        break 'outer;
                    }
                }
            }
        }
        Self::finish(Axiom::Semiregular, out)
    }

    pub fn seminormal(&self, all: bool) -> AxiomVerdict {
        let mut out = Vec::new();
        'outer: for &f in &self.fam.semiclosed {
            let candidates: Vec<u64> = self
                .minimal_semiopen_over(f)
                .into_iter()
                .map(|s| self.disjoint_part(s))
                .collect();
            for &k in &self.fam.semiclosed {
                if f & k == 0 && !candidates.iter().any(|&d| subset(k, d)) {
                    out.push(Witness::Sets(self.t.wrap(f), self.t.wrap(k)));
                    if !all {
                        break 'outer;
                    }
                }
            }
        }
        Self::finish(Axiom::Seminormal, out)
    }

    fn conjunction(axiom: Axiom, first: AxiomVerdict, second: AxiomVerdict, all: bool) -> AxiomVerdict {
        let mut witnesses = first.witnesses;
        if all || witnesses.is_empty() {
            witnesses.extend(second.witnesses);
        }
        Self::finish(axiom, witnesses)
    }

    pub fn check(&self, axiom: Axiom, all: bool) -> Result<AxiomVerdict> {
        Ok(match axiom {
            Axiom::SemiT0 => self.semi_t0(all),
            Axiom::SemiT1 => self.semi_t1(all),
            Axiom::SemiT2 => self.semi_t2(all),
            Axiom::Semiregular => self.semiregular(all),
            Axiom::SemiT3 => {
                Self::conjunction(axiom, self.semiregular(all), self.semi_t1(all), all)
            }
            Axiom::Seminormal => self.seminormal(all),
            Axiom::SemiT4 => {
                Self::conjunction(axiom, self.seminormal(all), self.semi_t1(all), all)
            }
            Axiom::Semiconnected => {
                let w = find_semiseparation(self.t)?
                    .map(|Separation { first, second }| Witness::Semiseparation(first, second));
                Self::finish(axiom, w.into_iter().collect())
            }
            Axiom::Semicompact => Self::finish(axiom, Vec::new()),
        })
    }

    /// For every semiclosed `F` inside a semiopen `G` there is a semiopen
    /// `H ⊇ F` with `sscl H ⊆ G`. Returns the first failing `(F, G)`.
    pub fn seminormal_characterization(&self) -> Option<(SoftSet, SoftSet)> {
        let carrier = self.t.carrier_bits();
        for &f in &self.fam.semiclosed {
            let closures: Vec<u64> = self
                .minimal_semiopen_over(f)
                .into_iter()
                .map(|h| semi::sscl_bits(self.t, h))
                .collect();
            for &k in &self.fam.semiclosed {
                if f & k != 0 {
                    continue;
                }
                let g = carrier & !k;
                if !closures.iter().any(|&c| subset(c, g)) {
                    return Some((self.t.wrap(f), self.t.wrap(g)));
                }
            }
        }
        None
    }

    /// Every singleton point of the carrier is semiclosed.
    pub fn points_semiclosed(&self) -> bool {
        self.points.iter().all(|&p| self.fam.is_semiclosed(1 << p))
    }
}

pub fn check_axiom(t: &SoftTopology, axiom: Axiom) -> Result<AxiomVerdict> {
    SeparationContext::new(t)?.check(axiom, false)
}

/// Like [`check_axiom`] but lists every failing tuple.
pub fn check_axiom_all(t: &SoftTopology, axiom: Axiom) -> Result<AxiomVerdict> {
    SeparationContext::new(t)?.check(axiom, true)
}

pub fn axiom_report(t: &SoftTopology) -> Result<AxiomReport> {
    let ctx = SeparationContext::new(t)?;
    let verdicts = Axiom::ALL
        .iter()
        .map(|&a| ctx.check(a, false))
        .collect::<Result<_>>()?;
    Ok(AxiomReport { verdicts })
}

/// `Ok(None)` when the characterization holds, else the failing `(F, G)`.
pub fn seminormal_characterization(t: &SoftTopology) -> Result<Option<(SoftSet, SoftSet)>> {
    Ok(SeparationContext::new(t)?.seminormal_characterization())
}

/// Straight-from-the-definition checks over explicit semiopen pairs; slow,
/// used as the oracle for the decision procedures above.
pub mod definitional {
    use super::*;

    fn pairs_separate(fam: &SemiFamilies, x: u64, y: u64) -> bool {
        fam.semiopen.iter().any(|&s| {
            subset(x, s)
                && fam
                    .semiopen
                    .iter()
                    .any(|&h| subset(y, h) && s & h == 0)
        })
    }

    pub fn holds(t: &SoftTopology, axiom: Axiom) -> Result<bool> {
        let fam = semi_families(t)?;
        let pts: Vec<u64> = ones(t.carrier_bits()).map(|p| 1u64 << p).collect();
        let distinct = || {
            pts.iter()
                .flat_map(|&p| pts.iter().map(move |&q| (p, q)))
                .filter(|(p, q)| p != q)
        };
        let one_sided = |p: u64, q: u64| {
            fam.semiopen.iter().any(|&s| s & p != 0 && s & q == 0)
        };
        let t1 = distinct().all(|(p, q)| one_sided(p, q));
        let regular = pts.iter().all(|&p| {
            fam.semiclosed
                .iter()
                .filter(|&&f| f & p == 0)
                .all(|&f| pairs_separate(&fam, p, f))
        });
        let normal = fam.semiclosed.iter().all(|&f| {
            fam.semiclosed
                .iter()
                .filter(|&&k| f & k == 0)
                .all(|&k| pairs_separate(&fam, f, k))
        });
        Ok(match axiom {
            Axiom::SemiT0 => distinct().all(|(p, q)| one_sided(p, q) || one_sided(q, p)),
            Axiom::SemiT1 => t1,
            Axiom::SemiT2 => distinct().all(|(p, q)| pairs_separate(&fam, p, q)),
            Axiom::Semiregular => regular,
            Axiom::SemiT3 => regular && t1,
            Axiom::Seminormal => normal,
            Axiom::SemiT4 => normal && t1,
            Axiom::Semiconnected => {
                crate::analysis::connectedness::find_semiseparation_by_pairs(t)?.is_none()
            }
            Axiom::Semicompact => true,
        })
    }
}
