//! Running the claim registry over a corpus, rendering reports, and writing
//! and replaying witness bundles.
//!
//! Instances are evaluated in parallel and merged in corpus order, so the
//! report does not depend on the worker count.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::explorer::case::{Case, MapCase};
use crate::explorer::claims::{self, Claim, ClaimKind, Failure, Outcome, Side};
use crate::explorer::corpus::{fingerprint_of, instance_name, Corpus};
use crate::files::{read_function, read_space, write_json, write_space, FunctionFile, SpaceRef};
use crate::maps::SoftFunction;
use crate::rng::{seed_from, SplitMix64};
use crate::softset::SoftSet;
use crate::topology::SoftTopology;

/// Conventions every report states up front.
pub const SEMANTICS: &str = "f(F)(q(a)) = union of p(F(a)) over a with that image; \
f^-1(G)(a) = p^-1(G(q(a))); disjoint means null intersection; \
soft points are single cells, membership by inclusion";

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// `None` runs the whole registry.
    pub claims: Option<Vec<String>>,
    pub jobs: usize,
    /// Witnesses kept per claim across the corpus.
    pub witness_cap: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            claims: None,
            jobs: 1,
            witness_cap: claims::WITNESS_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds,
    Refuted,
    /// No instance met the hypotheses.
    Exhausted,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Refuted => "refuted",
            Status::Exhausted => "exhausted-zero-hypotheses",
        }
    }
}

/// A failure together with everything needed to rebuild it.
#[derive(Debug, Clone)]
pub struct WitnessRecord {
    pub instance: usize,
    pub instance_name: String,
    pub failure: Failure,
    pub space: SoftTopology,
    pub map: Option<(SoftFunction, SoftTopology)>,
}

#[derive(Debug, Clone)]
pub struct ClaimRecord {
    pub claim: &'static Claim,
    /// Instances where at least one hypothesis held.
    pub instances: u64,
    pub hypotheses: u64,
    pub refutations: u64,
    pub witnesses: Vec<WitnessRecord>,
}

impl ClaimRecord {
    pub fn status(&self) -> Status {
        if self.refutations > 0 {
            Status::Refuted
        } else if self.hypotheses == 0 {
            Status::Exhausted
        } else {
            Status::Holds
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub instances: usize,
    pub fingerprint: String,
    pub records: Vec<ClaimRecord>,
}

/// The maps each instance is checked against: identity, a seeded self-map,
/// a seeded map into the next instance and, where sizes allow, a seeded
/// surjection onto it. Spaces that are not on the whole lattice get none.
pub fn maps_for(spaces: &[SoftTopology], i: usize) -> Result<Vec<MapCase>> {
    let source = &spaces[i];
    if !source.is_full() {
        return Ok(Vec::new());
    }
    let sig = source.signature();
    let mut rng = SplitMix64::new(seed_from(&source.encoding()) ^ 0x3A95);
    let mut out = vec![MapCase::new(SoftFunction::identity(sig), source, source.clone())?];
    out.push(MapCase::new(random_map(&mut rng, source, source), source, source.clone())?);
    let next = &spaces[(i + 1) % spaces.len()];
    if next.is_full() {
        out.push(MapCase::new(random_map(&mut rng, source, next), source, next.clone())?);
        if let Some(f) = random_surjection(&mut rng, source, next) {
            out.push(MapCase::new(f, source, next.clone())?);
        }
    }
    Ok(out)
}

fn random_map(rng: &mut SplitMix64, s: &SoftTopology, t: &SoftTopology) -> SoftFunction {
    let (ss, ts) = (s.signature(), t.signature());
    let points = (0..ss.n()).map(|_| rng.below(ts.n() as u64) as usize).collect();
    let params = (0..ss.m()).map(|_| rng.below(ts.m() as u64) as usize).collect();
    SoftFunction::new(ss, ts, points, params).expect("indices drawn in range")
}

/// Onto map: a random arrangement hitting every target label, padded randomly.
fn onto(rng: &mut SplitMix64, from: usize, to: usize) -> Vec<usize> {
    let mut map: Vec<usize> = (0..from).map(|x| if x < to { x } else { rng.below(to as u64) as usize }).collect();
    for k in (1..from).rev() {
        map.swap(k, rng.below(k as u64 + 1) as usize);
    }
    map
}

fn random_surjection(rng: &mut SplitMix64, s: &SoftTopology, t: &SoftTopology) -> Option<SoftFunction> {
    let (ss, ts) = (s.signature(), t.signature());
    if ss.n() < ts.n() || ss.m() < ts.m() {
        return None;
    }
    let points = onto(rng, ss.n(), ts.n());
    let params = onto(rng, ss.m(), ts.m());
    Some(SoftFunction::new(ss, ts, points, params).expect("indices drawn in range"))
}

fn evaluate_instance(spaces: &[SoftTopology], i: usize, selected: &[&'static Claim]) -> Result<Vec<Outcome>> {
    let maps = maps_for(spaces, i)?;
    let case = Case::new(&spaces[i], &maps)?;
    Ok(selected.iter().map(|c| c.evaluate(&case)).collect())
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Io(std::io::Error::other(e)))
}

pub fn run_claim_suite(corpus: &Corpus, opts: &SuiteOptions) -> Result<SuiteReport> {
    let selected = claims::select(opts.claims.as_deref())?;
    let spaces = &corpus.instances;
    if spaces.is_empty() && !selected.is_empty() {
        let ids: Vec<&str> = selected.iter().map(|c| c.id).collect();
        return Err(Error::CoverageGap(ids.join(",")));
    }
    let outcomes: Vec<Result<Vec<Outcome>>> = pool(opts.jobs)?.install(|| {
        (0..spaces.len())
            .into_par_iter()
            .map(|i| evaluate_instance(spaces, i, &selected))
            .collect()
    });
    let mut records: Vec<ClaimRecord> = selected
        .iter()
        .map(|&claim| ClaimRecord {
            claim,
            instances: 0,
            hypotheses: 0,
            refutations: 0,
            witnesses: Vec::new(),
        })
        .collect();
    for (i, per_claim) in outcomes.into_iter().enumerate() {
        let per_claim = per_claim?;
        let mut maps: Option<Vec<MapCase>> = None;
        for (record, outcome) in records.iter_mut().zip(per_claim) {
            record.hypotheses += outcome.hypotheses;
            record.refutations += outcome.refutations;
            record.instances += u64::from(outcome.hypotheses > 0);
            for failure in outcome.failures {
                if record.witnesses.len() >= opts.witness_cap {
                    break;
                }
                let map = match failure.map {
                    Some(k) => {
                        let maps = match &mut maps {
                            Some(m) => m,
                            None => maps.insert(maps_for(spaces, i)?),
                        };
                        Some((maps[k].function.clone(), maps[k].target.clone()))
                    }
                    None => None,
                };
                record.witnesses.push(WitnessRecord {
                    instance: i,
                    instance_name: instance_name(&spaces[i]),
                    failure,
                    space: spaces[i].clone(),
                    map,
                });
            }
        }
    }
    Ok(SuiteReport {
        instances: spaces.len(),
        fingerprint: fingerprint_of(spaces),
        records,
    })
}

impl SuiteReport {
    /// The first refuted asserted invariant, as an error.
    pub fn check_invariants(&self) -> Result<()> {
        for r in &self.records {
            if r.claim.kind == ClaimKind::Asserted && r.refutations > 0 {
                let w = r.witnesses.first();
                return Err(Error::InvariantViolated {
                    claim: r.claim.id.to_string(),
                    instance: w.map_or_else(String::new, |w| w.instance_name.clone()),
                    detail: w.map_or_else(String::new, |w| w.failure.detail.clone()),
                });
            }
        }
        Ok(())
    }

    pub fn get(&self, id: &str) -> Option<&ClaimRecord> {
        self.records.iter().find(|r| r.claim.id == id)
    }

    fn counts(&self) -> [usize; 3] {
        let count = |s| self.records.iter().filter(|r| r.status() == s).count();
        [count(Status::Holds), count(Status::Refuted), count(Status::Exhausted)]
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "semantics: {SEMANTICS}");
        let _ = writeln!(out, "corpus instances={} fingerprint={}", self.instances, self.fingerprint);
        for r in &self.records {
            let _ = writeln!(
                out,
                "{} kind={} status={} instances={} hypotheses={} refutations={}",
                r.claim.id,
                r.claim.kind,
                r.status().name(),
                r.instances,
                r.hypotheses,
                r.refutations
            );
            let _ = writeln!(out, "  scope: {}", r.claim.scope);
            for (n, w) in r.witnesses.iter().enumerate() {
                let _ = write!(out, "  witness bundle={}/{} instance={}", r.claim.id, n + 1, w.instance_name);
                if let Some(k) = w.failure.map {
                    let _ = write!(out, " map={k}");
                }
                let _ = write!(out, " detail=\"{}\"", w.failure.detail);
                for (label, side, set) in &w.failure.sets {
                    let _ = write!(out, " {label}@{}={set}", side_name(*side));
                }
                out.push('\n');
            }
        }
        let [holds, refuted, exhausted] = self.counts();
        let _ = writeln!(
            out,
            "summary claims={} holds={holds} refuted={refuted} exhausted={exhausted}",
            self.records.len()
        );
        out
    }

    /// One JSON record per line: header, one per claim, summary.
    pub fn render_json(&self) -> String {
        let mut lines = vec![json!({
            "semantics": SEMANTICS,
            "corpus": {"instances": self.instances, "fingerprint": self.fingerprint},
        })];
        for r in &self.records {
            let witnesses: Vec<Value> = r
                .witnesses
                .iter()
                .enumerate()
                .map(|(n, w)| {
                    json!({
                        "bundle": format!("{}/{}", r.claim.id, n + 1),
                        "instance": w.instance_name,
                        "map": w.failure.map,
                        "detail": w.failure.detail,
                        "sets": set_entries(&w.failure),
                    })
                })
                .collect();
            lines.push(json!({
                "claim": r.claim.id,
                "kind": r.claim.kind.name(),
                "statement": r.claim.statement,
                "scope": r.claim.scope,
                "status": r.status().name(),
                "instances": r.instances,
                "hypotheses": r.hypotheses,
                "refutations": r.refutations,
                "witnesses": witnesses,
            }));
        }
        let [holds, refuted, exhausted] = self.counts();
        lines.push(json!({
            "summary": {"claims": self.records.len(), "holds": holds, "refuted": refuted, "exhausted": exhausted},
        }));
        lines.iter().map(|v| format!("{v}\n")).collect()
    }

    /// Writes `<dir>/<claim>/<n>/` for every kept witness.
    pub fn write_bundles(&self, dir: &Path) -> Result<usize> {
        let mut written = 0;
        for r in &self.records {
            for (n, w) in r.witnesses.iter().enumerate() {
                write_bundle(&dir.join(r.claim.id).join((n + 1).to_string()), r.claim, w)?;
                written += 1;
            }
        }
        Ok(written)
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Source => "source",
        Side::Target => "target",
    }
}

fn set_entries(f: &Failure) -> Vec<SetEntry> {
    f.sets
        .iter()
        .map(|(label, side, set)| SetEntry {
            label: label.clone(),
            side: *side,
            set: set.to_json(),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetEntry {
    pub label: String,
    pub side: Side,
    pub set: Value,
}

pub const BUNDLE_SPACE: &str = "space.json";
pub const BUNDLE_TARGET: &str = "target.json";
pub const BUNDLE_FUNCTION: &str = "function.json";
pub const BUNDLE_WITNESS: &str = "witness.json";

/// `witness.json` of a bundle.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessFile {
    pub claim: String,
    pub kind: ClaimKind,
    pub statement: String,
    pub instance: String,
    pub detail: String,
    pub space: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub function: Option<String>,
    pub sets: Vec<SetEntry>,
}

fn write_bundle(dir: &Path, claim: &Claim, w: &WitnessRecord) -> Result<()> {
    fs::create_dir_all(dir)?;
    write_space(&dir.join(BUNDLE_SPACE), &w.space)?;
    let function = match &w.map {
        Some((f, target)) => {
            write_space(&dir.join(BUNDLE_TARGET), target)?;
            let file = FunctionFile::new(
                f,
                SpaceRef::Path(BUNDLE_SPACE.into()),
                SpaceRef::Path(BUNDLE_TARGET.into()),
            );
            write_json(&dir.join(BUNDLE_FUNCTION), &file)?;
            Some(BUNDLE_FUNCTION.to_string())
        }
        None => None,
    };
    let file = WitnessFile {
        claim: claim.id.to_string(),
        kind: claim.kind,
        statement: claim.statement.to_string(),
        instance: w.instance_name.clone(),
        detail: w.failure.detail.clone(),
        space: BUNDLE_SPACE.to_string(),
        function,
        sets: set_entries(&w.failure),
    };
    write_json(&dir.join(BUNDLE_WITNESS), &file)
}

#[derive(Debug, Clone)]
pub struct ReplayOutcome {
    pub claim: &'static Claim,
    pub recorded: Failure,
    /// The claim fails again on the bundle with the recorded witness.
    pub reproduced: bool,
    pub refutations: u64,
}

/// Re-runs the bundle's claim on its space (and function) alone.
pub fn replay(dir: &Path) -> Result<ReplayOutcome> {
    let text = fs::read_to_string(dir.join(BUNDLE_WITNESS))?;
    let file: WitnessFile = serde_json::from_str(&text)?;
    let claim = claims::find(&file.claim)?;
    let (space, maps) = match &file.function {
        Some(f) => {
            let loaded = read_function(&dir.join(f))?;
            let map = MapCase::new(loaded.function, &loaded.source, loaded.target)?;
            (loaded.source, vec![map])
        }
        None => (read_space(&dir.join(&file.space))?, Vec::new()),
    };
    let mut recorded = Failure::new(file.detail.clone());
    if file.function.is_some() {
        recorded.map = Some(0);
    }
    for entry in &file.sets {
        let sig = match entry.side {
            Side::Source => space.signature(),
            Side::Target => maps
                .first()
                .map(|m| m.target.signature())
                .ok_or_else(|| Error::Manifest("target-side set without a function".into()))?,
        };
        recorded.sets.push((entry.label.clone(), entry.side, SoftSet::from_json(sig, &entry.set)?));
    }
    let case = Case::new(&space, &maps)?;
    let outcome = claim.evaluate(&case);
    let reproduced = outcome.failures.iter().any(|f| f.same_as(&recorded));
    Ok(ReplayOutcome {
        claim,
        recorded,
        reproduced,
        refutations: outcome.refutations,
    })
}
