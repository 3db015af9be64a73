//! The seven acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p softtopo-cli --test acceptance -- --nocapture`
//! to see the lines.

use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, Output};
use std::time::Instant;

use softtopo::analysis::cover::minimum_cover;
use softtopo::explorer::claims::registry;
use softtopo::explorer::corpus::Corpus;
use softtopo::explorer::generate::CorpusSpec;
use softtopo::explorer::suite::{replay, run_claim_suite, Status, SuiteOptions};
use softtopo::explorer::ClaimKind;
use softtopo::fixtures::{example_f1, example_space};
use softtopo::rng::SplitMix64;
use softtopo::semi::{self, definitional};
use softtopo::{SoftSet, SoftTopology};

const G_CONVERSE: &str = r#"{"e1":["h1","h2"],"e2":["h1","h2"]}"#;
const K_CONVERSE: &str = r#"{"e1":["h3"],"e2":["h3"]}"#;

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(2, |n| n.get()).max(2)
}

fn softtopo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_softtopo"))
        .arg("--no-banner")
        .args(args)
        .env_remove("SOFTTOPO_BITCAP")
        .output()
        .expect("binary runs")
}

/// Every topology up to 4 lattice bits plus 500 random 6-bit ones at
/// mixed subbasis densities.
fn acceptance_corpus() -> Corpus {
    let mut spaces = CorpusSpec::exhaustive(4, 4, 4).generate().unwrap();
    for (k, density) in [0.02, 0.05, 0.1, 0.2, 0.4].into_iter().enumerate() {
        spaces.extend(CorpusSpec::random(3, 2, 100, 1000 + k as u64, density).generate().unwrap());
    }
    Corpus::new(None, spaces)
}

fn all_sets(t: &SoftTopology) -> Vec<SoftSet> {
    softtopo::enumerate_soft_sets(t.signature()).unwrap().collect()
}

fn oracle_equivalence(corpus: &Corpus) -> String {
    let start = Instant::now();
    let mut checks = 0u64;
    for t in &corpus.instances {
        for g in all_sets(t) {
            assert_eq!(semi::is_semiopen(t, &g).unwrap().holds, definitional::is_semiopen(t, &g).unwrap().holds);
            assert_eq!(semi::is_semiclosed(t, &g).unwrap().holds, definitional::is_semiclosed(t, &g).unwrap().holds);
            assert_eq!(semi::ssint(t, &g).unwrap(), definitional::ssint(t, &g).unwrap(), "{}", t.encoding());
            assert_eq!(semi::sscl(t, &g).unwrap(), definitional::sscl(t, &g).unwrap(), "{}", t.encoding());
            checks += 4;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 60.0, "took {secs:.1}s");
    format!("{} spaces, {checks} fast/definitional comparisons, {secs:.1}s", corpus.len())
}

fn tier_a(corpus: &Corpus) -> String {
    let asserted: Vec<String> = registry()
        .iter()
        .filter(|c| c.kind == ClaimKind::Asserted)
        .map(|c| c.id.to_string())
        .collect();
    let opts = SuiteOptions {
        claims: Some(asserted.clone()),
        jobs: jobs(),
        ..SuiteOptions::default()
    };
    let report = run_claim_suite(corpus, &opts).unwrap();
    report.check_invariants().unwrap();
    let hypotheses: u64 = report.records.iter().map(|r| r.hypotheses).sum();
    format!("{} asserted claims, {hypotheses} checks, 0 violations", asserted.len())
}

fn converse_refutation() -> String {
    let o = softtopo(&["suite", "FIX-EX", "--claims", "R2.3.conv-open,R2.3.conv-closed"]);
    assert_eq!(o.status.code(), Some(0));
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.contains("R2.3.conv-open kind=under-test status=refuted"), "{out}");
    assert!(out.contains("R2.3.conv-closed kind=under-test status=refuted"), "{out}");
    assert!(out.contains(&format!("detail=\"semiopen but not open\" G@source={G_CONVERSE}")), "{out}");
    assert!(out.contains(&format!("detail=\"semiclosed but not closed\" K@source={K_CONVERSE}")), "{out}");

    // the same witnesses survive a bundle round trip
    let dir = tempfile::tempdir().unwrap();
    let o = softtopo(&[
        "suite",
        "FIX-EX",
        "--claims",
        "R2.3.conv-open,R2.3.conv-closed",
        "--witnesses",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut replayed = 0;
    for claim in ["R2.3.conv-open", "R2.3.conv-closed"] {
        for entry in fs::read_dir(dir.path().join(claim)).unwrap() {
            assert!(replay(&entry.unwrap().path()).unwrap().reproduced);
            replayed += 1;
        }
    }
    format!("G={G_CONVERSE} semiopen not open, K={K_CONVERSE} semiclosed not closed, {replayed} bundles replayed")
}

fn fixture_facts() -> String {
    let ex = example_space();
    let f1 = example_f1();
    let g0 = SoftSet::parse_literal(ex.signature(), r#"{"e1":["h1"],"e2":[]}"#).unwrap();
    assert!(ex.closure(&f1).unwrap().is_absolute());
    assert!(ex.interior(&f1.complement()).unwrap().is_null());
    // definitional closure and interior: extremal closed superset and open subset
    let closed: Vec<SoftSet> = ex.opens().iter().map(SoftSet::complement).collect();
    let cl_def = softtopo::intersection(closed.iter().filter(|k| f1.is_subset(k).unwrap())).unwrap();
    assert!(cl_def.is_absolute());
    let int_def = softtopo::union(
        ex.signature(),
        &ex.opens().into_iter().filter(|o| o.is_subset(&f1.complement()).unwrap()).collect::<Vec<_>>(),
    )
    .unwrap();
    assert!(int_def.is_null());
    assert_eq!(semi::enumerate_soss(&ex).unwrap().len(), 9);
    assert_eq!(definitional::enumerate_soss(&ex).unwrap().len(), 9);
    assert!(semi::sscl(&ex, &g0).unwrap().is_absolute());
    assert!(definitional::sscl(&ex, &g0).unwrap().is_absolute());
    assert!(semi::ssint(&ex, &g0).unwrap().is_null());
    assert!(definitional::ssint(&ex, &g0).unwrap().is_null());
    "cl(F1)=U, int(F1^c)=Φ, |SOSS|=9, sscl(G0)=U, ssint(G0)=Φ by both paths".to_string()
}

/// Every numbered statement of the sections on semiopen sets, soft
/// functions, semicompactness, semiconnectedness and semi-separation.
const NUMBERED: &[&str] = &[
    "D2.1", "E2.2", "R2.3", "R2.4", "T2.5", "R2.6", "T2.7", "T2.8", "T2.9", "D2.10", "T2.11", "T2.12",
    "D3.1", "R3.2", "T3.3", "T3.4", "T3.5", "T3.6", "T3.7",
    "D4.1", "D4.2", "R4.3", "T4.4", "T4.5", "T4.6", "T4.7",
    "D5.1", "D5.2", "T5.3", "T5.4", "T5.5", "T5.6", "T5.7",
    "D6.1", "E6.2", "T6.3", "D6.4", "T6.5", "T6.6", "D6.7", "T6.8", "D6.9", "R6.10", "R6.11", "T6.12",
    "D6.13", "R6.14", "T6.15", "T6.16", "T6.17", "T6.18",
];

fn statement_of(id: &str) -> &str {
    // "T2.11.ix" -> "T2.11"; "R2.3.conv-open" -> "R2.3"
    match id.match_indices('.').nth(1) {
        Some((i, _)) => &id[..i],
        None => id,
    }
}

fn registry_coverage() -> String {
    for id in NUMBERED {
        assert!(registry().iter().any(|c| statement_of(c.id) == *id), "{id} missing from the registry");
    }
    for c in registry() {
        assert!(c.id.starts_with("I.") || NUMBERED.contains(&statement_of(c.id)), "{} is unnumbered", c.id);
    }
    let corpus = Corpus::generate(&CorpusSpec::exhaustive(4, 4, 4)).unwrap();
    let opts = SuiteOptions {
        jobs: jobs(),
        ..SuiteOptions::default()
    };
    let report = run_claim_suite(&corpus, &opts).unwrap();
    report.check_invariants().unwrap();
    assert_eq!(report.records.len(), registry().len());
    let dir = tempfile::tempdir().unwrap();
    report.write_bundles(dir.path()).unwrap();
    let (mut refuted, mut held, mut exhausted, mut replayed) = (0, 0, 0, 0);
    for r in &report.records {
        assert!(!r.claim.scope.is_empty());
        match r.status() {
            Status::Refuted => {
                assert_eq!(r.claim.kind, ClaimKind::UnderTest, "{}", r.claim.id);
                assert!(!r.witnesses.is_empty());
                for n in 1..=r.witnesses.len() {
                    let outcome = replay(&dir.path().join(r.claim.id).join(n.to_string())).unwrap();
                    assert!(outcome.reproduced, "{} bundle {n} does not replay", r.claim.id);
                    replayed += 1;
                }
                refuted += 1;
            }
            Status::Holds => held += 1,
            Status::Exhausted => exhausted += 1,
        }
    }
    format!(
        "{} numbered statements, {} claims evaluated on {} spaces: {held} hold, {refuted} refuted, {exhausted} with zero hypotheses, {replayed} bundles replayed",
        NUMBERED.len(),
        report.records.len(),
        corpus.len()
    )
}

fn fingerprint(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout)
        .split_whitespace()
        .find_map(|f| f.strip_prefix("fingerprint=").map(str::to_string))
        .expect("gen prints a fingerprint")
}

fn determinism() -> String {
    let dir = tempfile::tempdir().unwrap();
    let gen = |name: &str| {
        let path = dir.path().join(name);
        let o = softtopo(&["gen", "--count", "200", "--seed", "42", "--density", "0.3", "-o", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        (path, fingerprint(&o))
    };
    let (a, fa) = gen("a");
    let (_, fb) = gen("b");
    assert_eq!(fa, fb);
    let suite = |corpus: &Path, jobs: usize, format: &str| {
        let o = softtopo(&["--format", format, "suite", corpus.to_str().unwrap(), "--jobs", &jobs.to_string()]);
        assert_eq!(o.status.code(), Some(0));
        o.stdout
    };
    let n = jobs();
    assert_eq!(suite(&a, 1, "text"), suite(&a, n, "text"));
    assert_eq!(suite(&a, 1, "json"), suite(&a, n, "json"));
    format!("fingerprint {} twice; text and json reports identical with 1 and {n} workers", &fa[..16])
}

fn subcover_exactness() -> String {
    let mut rng = SplitMix64::new(0x5E7C_0BE2);
    let start = Instant::now();
    let mut covered = 0;
    for _ in 0..100 {
        let bits = 4 + rng.below(13) as u32;
        let universe = (1u64 << bits) - 1;
        let size = 1 + rng.below(12) as usize;
        let family: Vec<u64> = (0..size).map(|_| rng.next_u64() & rng.next_u64() & universe).collect();
        let target = if rng.coin() { universe } else { rng.next_u64() & universe };
        let brute = (0u64..1 << size)
            .filter(|&mask| {
                let reach = (0..size).filter(|i| mask >> i & 1 == 1).fold(0, |acc, i| acc | family[i]);
                target & !reach == 0
            })
            .map(u64::count_ones)
            .min();
        let found = minimum_cover(target, &family).map(|c| c.len() as u32);
        assert_eq!(found, brute);
        covered += usize::from(found.is_some());
    }
    format!("100 instances ({covered} coverable) match brute force in {:.2}s", start.elapsed().as_secs_f64())
}

#[test]
fn acceptance() {
    let corpus = acceptance_corpus();
    let criteria: [(&str, Box<dyn Fn() -> String + '_>); 7] = [
        ("oracle equivalence", Box::new(|| oracle_equivalence(&corpus))),
        ("tier-A invariants", Box::new(|| tier_a(&corpus))),
        ("converse refutation", Box::new(converse_refutation)),
        ("fixture facts", Box::new(fixture_facts)),
        ("registry coverage", Box::new(registry_coverage)),
        ("determinism", Box::new(determinism)),
        ("minimal subcover exactness", Box::new(subcover_exactness)),
    ];
    let mut failed = Vec::new();
    for (n, (name, run)) in criteria.iter().enumerate() {
        match catch_unwind(AssertUnwindSafe(run)) {
            Ok(summary) => println!("acceptance {} PASS {name}: {summary}", n + 1),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("acceptance {} FAIL {name}: {msg}", n + 1);
                failed.push(n + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
