use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn irslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_irslab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn lean(dir: &TempDir, name: &str, log2: &str, seed: &str) -> std::path::PathBuf {
    let path = dir.path().join(name);
    let out = irslab(&["gen", "hom", "--model", "lean-aperiodic", "--rank", "2", "--seed", seed, "--log2", log2, "--out", p(&path)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn gen_hom_is_deterministic() {
    let args = ["gen", "hom", "--model", "lean-aperiodic", "--rank", "2", "--seed", "7", "--log2", "6"];
    let a = irslab(&args);
    let b = irslab(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let other = irslab(&["gen", "hom", "--model", "lean-aperiodic", "--rank", "2", "--seed", "8", "--log2", "6"]);
    assert_ne!(a.stdout, other.stdout);
    let json: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(json["rank"], 2);
    assert_eq!(json["gens"][0][63], 0);
}

#[test]
fn gen_space_layouts() {
    let out = irslab(&["gen", "space", "--log2", "4", "--classes", "blocks:2"]);
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["classes"].as_array().unwrap().len(), 4);
    assert_eq!(json["filtration_log2_levels"], 2);
    assert_eq!(irslab(&["gen", "space", "--classes", "bogus"]).status.code(), Some(2));
}

#[test]
fn ht_then_realize_is_one() {
    let dir = TempDir::new().unwrap();
    let alpha = lean(&dir, "a.json", "7", "7");
    let beta = dir.path().join("b.json");
    let out = irslab(&["construct", "ht", "--hom", p(&alpha), "--m", "2", "--tau", "1 0", "--epsilon", "3/5", "--out", p(&beta)]);
    assert!(out.status.success());
    assert_eq!(report(&out)["passed"], true);
    let out = irslab(&["analyze", "realize", "--hom", p(&beta), "--m", "2", "--tau", "1 0"]);
    assert!(out.status.success());
    assert_eq!(report(&out)["outputs"]["fraction"], "1/1");
}

#[test]
fn failing_check_exits_nonzero() {
    let dir = TempDir::new().unwrap();
    let alpha = lean(&dir, "a.json", "6", "1");
    let out = irslab(&["analyze", "realize", "--hom", p(&alpha), "--m", "2", "--tau", "1,0", "--radius", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["passed"], false);
    assert_eq!(r["outputs"]["fraction"], "0/1");
}

#[test]
fn irs_defect_is_zero() {
    let dir = TempDir::new().unwrap();
    let alpha = lean(&dir, "a.json", "8", "3");
    let csv = dir.path().join("irs.csv");
    let out = irslab(&["analyze", "irs", "--hom", p(&alpha), "--radius", "2", "--csv", p(&csv)]);
    assert!(out.status.success());
    assert_eq!(report(&out)["outputs"]["invariance_defect"], "0/1");
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("trace_hex,weight_numerator,weight_denominator\n"));
}

#[test]
fn export_round_trip() {
    let dir = TempDir::new().unwrap();
    let alpha = lean(&dir, "a.json", "5", "9");
    let once = dir.path().join("once.json");
    let twice = dir.path().join("twice.json");
    assert!(irslab(&["export", "--hom", p(&alpha), "--format", "json", "--out", p(&once)]).status.success());
    assert!(irslab(&["export", "--hom", p(&once), "--format", "json", "--out", p(&twice)]).status.success());
    let a = std::fs::read(&alpha).unwrap();
    assert_eq!(a, std::fs::read(&once).unwrap());
    assert_eq!(a, std::fs::read(&twice).unwrap());

    let dot = dir.path().join("ball.dot");
    assert!(irslab(&["export", "--hom", p(&alpha), "--format", "dot", "--radius", "1", "--out", p(&dot)]).status.success());
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("digraph"));
}

#[test]
fn constructions_report_passing_checks() {
    let dir = TempDir::new().unwrap();
    let alpha = lean(&dir, "a.json", "10", "4");
    let out_path = dir.path().join("out.json");
    let runs: Vec<Vec<&str>> = vec![
        vec!["construct", "periodic", "--level", "3"],
        vec!["construct", "folner", "--epsilon", "1/4", "--sizes", "4,8"],
        vec!["construct", "corefree", "--word", "s1 s2^-1 s2^-1", "--epsilon", "1/4"],
        vec!["construct", "splice", "--generator", "2", "--set", "1,2,3,40", "--seed", "5"],
    ];
    for run in runs {
        let mut args = run.clone();
        args.extend(["--hom", p(&alpha), "--out", p(&out_path)]);
        let out = irslab(&args);
        assert!(out.status.success(), "{run:?}: {}", String::from_utf8_lossy(&out.stdout));
        let r = report(&out);
        assert!(r["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    }
    let out = irslab(&["construct", "corefree", "--hom", p(&alpha), "--word", "s2^-1 s1 s2", "--epsilon", "1/4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_small_diagnostics() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("s3.json");
    // classes {0,1,2} and {3,4,5}; Sym(3) on each
    let hom = r#"{"n_atoms":6,"rank":2,"gens":[[1,2,0,4,5,3],[1,0,2,4,3,5]],
        "space":{"n_atoms":6,"classes":[[0,1,2],[3,4,5]],"filtration_log2_levels":null}}"#;
    std::fs::write(&path, hom).unwrap();
    let r = report(&irslab(&["analyze", "degree", "--hom", p(&path), "--atom", "4"]));
    assert_eq!(r["outputs"]["degree"], 3);
    let r = report(&irslab(&["analyze", "symmetric", "--hom", p(&path)]));
    assert_eq!(r["outputs"]["symmetric"], true);
    let r = report(&irslab(&["analyze", "index", "--hom", p(&path)]));
    assert_eq!(r["outputs"]["distribution"]["3"], "1/1");
    let out = irslab(&["analyze", "core", "--hom", p(&path), "--word", "s1^3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["outputs"]["trivial_orbit_mass"], "1/1");
    let out = irslab(&["analyze", "stability", "--hom", p(&path), "--other", p(&path)]);
    assert_eq!(report(&out)["outputs"]["observed"], "0/1");
}

#[test]
fn sweep_is_reproducible_across_workers() {
    let dir = TempDir::new().unwrap();
    let alpha = lean(&dir, "a.json", "6", "2");
    let args = ["sweep", "--hom", p(&alpha), "--epsilon", "1/2", "--samples", "12", "--property", "realizes:2:1,0:10", "--seed", "3"];
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_irslab"))
            .args(args)
            .env("IRSLAB_WORKERS", workers)
            .output()
            .unwrap()
    };
    let a = run("1");
    let b = run("8");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let out = irslab(&["sweep", "--hom", p(&alpha), "--epsilon", "1/2", "--samples", "3", "--property", "always", "--seed", "3"]);
    assert_eq!(report(&out)["outputs"]["fraction"], "1/1");
}
