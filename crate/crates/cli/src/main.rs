//! `softtopo`: load, query and check finite soft topological spaces.
//!
//! Exit codes: 0 success or property holds, 1 property fails or a witness
//! reproduces, 2 invalid input, 3 an asserted invariant failed.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use softtopo::analysis::separation::{axiom_report, AxiomVerdict};
use softtopo::explorer::corpus::{Corpus, MANIFEST};
use softtopo::explorer::generate::{CorpusSpec, EXHAUSTIVE_MAX_BITS};
use softtopo::explorer::suite::{replay, run_claim_suite, SuiteOptions};
use softtopo::explorer::ClaimKind;
use softtopo::files::{read_function, read_set_arg, SpaceFile};
use softtopo::limits::{set_bit_cap, BIT_CAP_ENV};
use softtopo::maps::{classify_map, MapVerdict};
use softtopo::{fixtures, semi, Error, Result, SoftSet, SoftTopology};

#[derive(Parser)]
#[command(name = "softtopo", version, about = "Finite soft topological spaces: semiopen structure, maps, axioms and claim checking")]
struct Cli {
    /// Output records as text lines or one JSON object per line.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Do not print the version banner on stderr.
    #[arg(long, global = true)]
    no_banner: bool,
    /// Lattice bit cap; defaults to $SOFTTOPO_BITCAP or 16.
    #[arg(long, global = true)]
    bitcap: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SetQuery {
    /// Space file, or one of FIX-EX, FIX-IND, FIX-DIS.
    space: String,
    /// Soft-set literal or @file.
    #[arg(long)]
    set: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check the topology axioms for a space file.
    Validate { space: String },
    /// Open, closed, semiopen and semiclosed status of a soft set.
    Classify(SetQuery),
    Closure(SetQuery),
    Interior(SetQuery),
    /// Semi-closure.
    Sscl(SetQuery),
    /// Semi-interior.
    Ssint(SetQuery),
    /// Semi-separation axioms, semiconnectedness and semicompactness.
    Axioms { space: String },
    /// Continuity classes of a soft function file.
    MapCheck { function: PathBuf },
    /// Run the claim registry over a corpus directory or a single space.
    Suite {
        target: String,
        /// Comma-separated claim ids; all claims by default.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Where to write witness bundles; defaults to <corpus>/witnesses.
        #[arg(long)]
        witnesses: Option<PathBuf>,
    },
    /// Generate a corpus directory.
    Gen {
        #[arg(long, default_value_t = 3)]
        universe: usize,
        #[arg(long, default_value_t = 2)]
        params: usize,
        /// Every topology with at most --max-bits lattice bits.
        #[arg(long, conflicts_with_all = ["count", "seed", "density"])]
        exhaustive: bool,
        #[arg(long, default_value_t = EXHAUSTIVE_MAX_BITS, requires = "exhaustive")]
        max_bits: usize,
        #[arg(long, required_unless_present = "exhaustive")]
        count: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Re-run a witness bundle's claim on its own files.
    Replay { dir: PathBuf },
}

/// Buffered output plus the exit code it implies.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn new() -> Self {
        Self {
            text: String::new(),
            code: 0,
        }
    }

    fn line(&mut self, line: impl AsRef<str>) {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error[usage]: {first}");
            return ExitCode::from(2);
        }
    };
    if !cli.no_banner {
        eprintln!("softtopo {}", env!("CARGO_PKG_VERSION"));
    }
    let cap = match cli.bitcap {
        Some(cap) => Some(cap),
        None => match std::env::var(BIT_CAP_ENV) {
            Ok(v) => match v.trim().parse() {
                Ok(cap) => Some(cap),
                Err(_) => {
                    eprintln!("error[usage]: {BIT_CAP_ENV} must be a non-negative integer, got `{v}`");
                    return ExitCode::from(2);
                }
            },
            Err(_) => None,
        },
    };
    if let Some(cap) = cap {
        set_bit_cap(cap);
    }
    let mut out = Output::new();
    let result = run(&cli, &mut out);
    print!("{}", out.text);
    match result {
        Ok(()) => ExitCode::from(out.code),
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            eprintln!("error[{}]: {msg}", e.kind());
            ExitCode::from(if matches!(e, Error::InvariantViolated { .. }) { 3 } else { 2 })
        }
    }
}

fn load_space(arg: &str) -> Result<SoftTopology> {
    match arg {
        "FIX-EX" => Ok(fixtures::example_space()),
        "FIX-IND" => Ok(fixtures::indiscrete_space()),
        "FIX-DIS" => Ok(fixtures::discrete_space()),
        path => {
            let text = fs::read_to_string(path)?;
            let file: SpaceFile = serde_json::from_str(&text)?;
            file.to_topology()
        }
    }
}

fn literal(set: &SoftSet) -> String {
    set.to_literal()
}

fn opt_literal(set: &Option<SoftSet>) -> String {
    set.as_ref().map_or_else(|| "-".to_string(), literal)
}

fn opt_json(set: &Option<SoftSet>) -> Value {
    set.as_ref().map_or(Value::Null, SoftSet::to_json)
}

fn run(cli: &Cli, out: &mut Output) -> Result<()> {
    let json_mode = cli.format == Format::Json;
    match &cli.command {
        Command::Validate { space } => validate(space, json_mode, out),
        Command::Classify(q) => {
            let t = load_space(&q.space)?;
            let g = read_set_arg(t.signature(), &q.set)?;
            let c = semi::classify(&t, &g)?;
            if json_mode {
                out.line(
                    json!({
                        "set": g.to_json(),
                        "open": c.is_open,
                        "closed": c.is_closed,
                        "semiopen": c.is_semiopen,
                        "semiclosed": c.is_semiclosed,
                        "semiopen_witness": opt_json(&c.semiopen_witness),
                        "semiclosed_witness": opt_json(&c.semiclosed_witness),
                    })
                    .to_string(),
                );
            } else {
                out.line(format!(
                    "set={} open={} closed={} semiopen={} semiclosed={} semiopen_witness={} semiclosed_witness={}",
                    literal(&g),
                    c.is_open,
                    c.is_closed,
                    c.is_semiopen,
                    c.is_semiclosed,
                    opt_literal(&c.semiopen_witness),
                    opt_literal(&c.semiclosed_witness)
                ));
            }
            Ok(())
        }
        Command::Closure(q) => operator(q, "closure", json_mode, out, |t, g| t.closure(g)),
        Command::Interior(q) => operator(q, "interior", json_mode, out, |t, g| t.interior(g)),
        Command::Sscl(q) => operator(q, "sscl", json_mode, out, semi::sscl),
        Command::Ssint(q) => operator(q, "ssint", json_mode, out, semi::ssint),
        Command::Axioms { space } => {
            let t = load_space(space)?;
            let report = axiom_report(&t)?;
            for v in &report.verdicts {
                out.line(axiom_line(v, json_mode));
            }
            Ok(())
        }
        Command::MapCheck { function } => map_check(function, json_mode, out),
        Command::Suite {
            target,
            claims,
            jobs,
            witnesses,
        } => suite(target, claims.clone(), *jobs, witnesses.as_deref(), json_mode, out),
        Command::Gen {
            universe,
            params,
            exhaustive,
            max_bits,
            count,
            seed,
            density,
            out: dir,
        } => {
            let spec = if *exhaustive {
                CorpusSpec::exhaustive(*universe, *params, *max_bits)
            } else {
                CorpusSpec::random(*universe, *params, count.unwrap_or(0), *seed, *density)
            };
            let corpus = Corpus::generate(&spec)?;
            let manifest = corpus.export(dir)?;
            if json_mode {
                out.line(json!({"instances": manifest.instances.len(), "fingerprint": manifest.fingerprint}).to_string());
            } else {
                out.line(format!("instances={} fingerprint={}", manifest.instances.len(), manifest.fingerprint));
            }
            Ok(())
        }
        Command::Replay { dir } => {
            let r = replay(dir)?;
            if json_mode {
                out.line(
                    json!({
                        "claim": r.claim.id,
                        "kind": r.claim.kind.name(),
                        "reproduced": r.reproduced,
                        "refutations": r.refutations,
                        "detail": r.recorded.detail,
                    })
                    .to_string(),
                );
            } else {
                out.line(format!(
                    "claim={} kind={} reproduced={} refutations={} detail=\"{}\"",
                    r.claim.id, r.claim.kind, r.reproduced, r.refutations, r.recorded.detail
                ));
            }
            out.code = match (r.reproduced, r.claim.kind) {
                (false, _) => 0,
                (true, ClaimKind::UnderTest) => 1,
                (true, ClaimKind::Asserted) => 3,
            };
            Ok(())
        }
    }
}

fn validate(space: &str, json_mode: bool, out: &mut Output) -> Result<()> {
    match load_space(space) {
        Ok(t) => {
            if json_mode {
                out.line(json!({"valid": true, "opens": t.len(), "encoding": t.encoding()}).to_string());
            } else {
                out.line(format!("valid=true opens={} encoding={}", t.len(), t.encoding()));
            }
            Ok(())
        }
        Err(Error::Violation(v)) => {
            if json_mode {
                out.line(json!({"valid": false, "axiom": v.axiom(), "detail": v.to_string()}).to_string());
            } else {
                out.line(format!("valid=false axiom={} detail=\"{v}\"", v.axiom()));
            }
            Err(Error::Violation(v))
        }
        Err(e) => Err(e),
    }
}

fn operator(
    q: &SetQuery,
    name: &str,
    json_mode: bool,
    out: &mut Output,
    op: impl Fn(&SoftTopology, &SoftSet) -> Result<SoftSet>,
) -> Result<()> {
    let t = load_space(&q.space)?;
    let g = read_set_arg(t.signature(), &q.set)?;
    let r = op(&t, &g)?;
    if json_mode {
        out.line(json!({"operator": name, "set": g.to_json(), "result": r.to_json()}).to_string());
    } else {
        out.line(literal(&r));
    }
    Ok(())
}

fn axiom_line(v: &AxiomVerdict, json_mode: bool) -> String {
    let verdict = if v.holds { "holds" } else { "fails" };
    let witness = v.witness();
    if json_mode {
        let parts: Vec<Value> = witness
            .map(|w| w.parts().into_iter().map(|(label, set)| json!({"label": label, "set": set.to_json()})).collect())
            .unwrap_or_default();
        json!({
            "axiom": v.axiom.name(),
            "verdict": verdict,
            "witness": witness.map(|w| json!({"kind": w.kind(), "parts": parts})),
        })
        .to_string()
    } else {
        let witness = witness.map_or_else(|| "-".to_string(), ToString::to_string);
        format!("{} {verdict} {witness}", v.axiom.name())
    }
}

fn map_check(path: &Path, json_mode: bool, out: &mut Output) -> Result<()> {
    let loaded = read_function(path)?;
    let c = classify_map(&loaded.function, &loaded.source, &loaded.target)?;
    let rows: [(&str, &MapVerdict); 5] = [
        ("continuous", &c.continuous),
        ("semicontinuous", &c.semicontinuous),
        ("irresolute", &c.irresolute),
        ("semiopen_map", &c.semiopen_map),
        ("semiclosed_map", &c.semiclosed_map),
    ];
    for (name, v) in rows {
        if json_mode {
            out.line(json!({"class": name, "holds": v.holds, "witness": opt_json(&v.witness)}).to_string());
        } else {
            out.line(format!("{name} {} {}", v.holds, opt_literal(&v.witness)));
        }
    }
    let surjective = loaded.function.is_surjective();
    if json_mode {
        out.line(json!({"class": "surjective", "holds": surjective, "witness": Value::Null}).to_string());
    } else {
        out.line(format!("surjective {surjective} -"));
    }
    Ok(())
}

fn suite(
    target: &str,
    claims: Option<Vec<String>>,
    jobs: usize,
    witnesses: Option<&Path>,
    json_mode: bool,
    out: &mut Output,
) -> Result<()> {
    let dir = Path::new(target);
    let is_corpus = dir.join(MANIFEST).is_file();
    let corpus = if is_corpus {
        Corpus::import(dir)?
    } else {
        Corpus::single(load_space(target)?)
    };
    let opts = SuiteOptions {
        claims,
        jobs,
        ..SuiteOptions::default()
    };
    let report = run_claim_suite(&corpus, &opts)?;
    out.line(if json_mode { report.render_json() } else { report.render_text() }.trim_end());
    let bundle_dir = match witnesses {
        Some(d) => Some(d.to_path_buf()),
        None if is_corpus => {
            let d = dir.join("witnesses");
            if d.exists() {
                fs::remove_dir_all(&d)?;
            }
            Some(d)
        }
        None => None,
    };
    if let Some(d) = bundle_dir {
        report.write_bundles(&d)?;
    }
    report.check_invariants()
}
