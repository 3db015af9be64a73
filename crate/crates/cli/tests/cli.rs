//! End-to-end behaviour of the `softtopo` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn softtopo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_softtopo"))
        .arg("--no-banner")
        .args(args)
        .env_remove("SOFTTOPO_BITCAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const G: &str = r#"{"e1":["h1","h2"],"e2":["h1","h2"]}"#;

fn write_space(dir: &Path, name: &str, universe: &str, opens: &str) -> String {
    let path = dir.join(name);
    fs::write(
        &path,
        format!(r#"{{"signature":{{"universe":{universe},"parameters":["e1"]}},"opens":{opens}}}"#),
    )
    .unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn classify_example_set() {
    let o = softtopo(&["classify", "FIX-EX", "--set", G]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("semiopen=true") && out.contains("open=false"), "{out}");
}

#[test]
fn set_files_and_literals_are_interchangeable() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.json");
    fs::write(&file, G).unwrap();
    let at = format!("@{}", file.display());
    for cmd in ["classify", "closure", "interior", "sscl", "ssint"] {
        let a = softtopo(&[cmd, "FIX-EX", "--set", G]);
        let b = softtopo(&[cmd, "FIX-EX", "--set", &at]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(stdout(&a), stdout(&b), "{cmd}");
    }
    let o = softtopo(&["sscl", "FIX-EX", "--set", r#"{"e1":["h1"],"e2":[]}"#]);
    assert_eq!(stdout(&o).trim(), r#"{"e1":["h1","h2","h3"],"e2":["h1","h2","h3"]}"#);
}

#[test]
fn validate_reports_missing_union() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_space(
        dir.path(),
        "bad.json",
        r#"["h1","h2","h3"]"#,
        r#"[{"e1":[]},{"e1":["h1","h2","h3"]},{"e1":["h1"]},{"e1":["h2"]}]"#,
    );
    let o = softtopo(&["validate", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("valid=false axiom=closed-under-union"));
    assert!(stderr(&o).starts_with("error[axiom-violation]: "));
    assert_eq!(stderr(&o).lines().count(), 1);

    let good = write_space(dir.path(), "good.json", r#"["h1","h2"]"#, r#"[{"e1":[]},{"e1":["h1","h2"]}]"#);
    let o = softtopo(&["validate", &good]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid=true"));
}

#[test]
fn errors_are_single_prefixed_lines() {
    let cases: [&[&str]; 5] = [
        &["classify", "FIX-EX", "--set", r#"{"e9":["h1"]}"#],
        &["classify", "FIX-EX", "--set", "{"],
        &["suite", "FIX-EX", "--claims", "T9.9"],
        &["axioms", "/nonexistent/space.json"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = softtopo(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = stderr(&o);
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.starts_with("error["), "{err}");
    }
}

#[test]
fn bitcap_environment_variable_applies() {
    let o = Command::new(env!("CARGO_BIN_EXE_softtopo"))
        .args(["--no-banner", "axioms", "FIX-EX"])
        .env("SOFTTOPO_BITCAP", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[bit-cap]"));
    let o = softtopo(&["--bitcap", "4", "axioms", "FIX-EX"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn axioms_one_line_each() {
    let o = softtopo(&["axioms", "FIX-IND"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 9);
    assert!(lines[0].starts_with("semi_T0 fails points point="));
    assert_eq!(lines[8], "semicompact holds -");
    let o = softtopo(&["--format", "json", "axioms", "FIX-DIS"]);
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("axiom").is_some());
    }
}

#[test]
fn banner_goes_to_stderr_only() {
    let with = Command::new(env!("CARGO_BIN_EXE_softtopo"))
        .args(["classify", "FIX-EX", "--set", G])
        .output()
        .unwrap();
    let without = softtopo(&["classify", "FIX-EX", "--set", G]);
    assert_eq!(with.stdout, without.stdout);
    assert!(String::from_utf8_lossy(&with.stderr).starts_with("softtopo "));
    assert!(without.stderr.is_empty());
}

#[test]
fn map_check_on_a_function_file() {
    let dir = tempfile::tempdir().unwrap();
    let fun = dir.path().join("f.json");
    fs::write(
        &fun,
        r#"{"source":{"signature":{"universe":["h1","h2"],"parameters":["e1"]},"opens":[{"e1":[]},{"e1":["h1"]},{"e1":["h2"]},{"e1":["h1","h2"]}]},
            "target":{"signature":{"universe":["h1","h2"],"parameters":["e1"]},"opens":[{"e1":[]},{"e1":["h1","h2"]}]},
            "point_map":{"h1":"h2","h2":"h1"},"param_map":{"e1":"e1"}}"#,
    )
    .unwrap();
    let o = softtopo(&["map-check", fun.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("continuous true -"));
    assert!(out.contains("irresolute true -"));
    assert!(out.contains("semiopen_map false "));
    assert!(out.contains("surjective true -"));
}

#[test]
fn suite_writes_replayable_bundles() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("c");
    let o = softtopo(&["gen", "--exhaustive", "--max-bits", "2", "-o", corpus.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("instances=9 fingerprint="));
    let o = softtopo(&["suite", corpus.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let bundle = corpus.join("witnesses").join("T2.11.xii").join("1");
    assert!(bundle.join("witness.json").is_file() && bundle.join("space.json").is_file());
    let o = softtopo(&["replay", bundle.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("reproduced=true"));

    let maps = corpus.join("witnesses").join("R3.2.b");
    if maps.exists() {
        let first = maps.join("1");
        assert!(first.join("function.json").is_file() && first.join("target.json").is_file());
        let o = softtopo(&["replay", first.to_str().unwrap()]);
        assert!(stdout(&o).contains("reproduced=true"));
    }
}

#[test]
fn json_suite_records_parse() {
    let o = softtopo(&["--format", "json", "suite", "FIX-EX", "--claims", "R2.3,T2.11.ix"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[1]["claim"], "R2.3");
    assert_eq!(lines[1]["status"], "holds");
}
