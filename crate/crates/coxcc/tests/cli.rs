//! End-to-end checks of the `coxcc` binary: exit codes, the JSON report
//! envelope, and the documented command examples.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use coxcc::report::{RunReport, VerdictJson};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coxcc"))
}

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

fn scratch(label: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("coxcc-cli-{label}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn classify_corpus_groups() {
    let out = bin().arg("classify").arg(corpus("ex91.cox")).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("irreducible"));
    assert!(text.contains("word hyperbolic: false"));
    assert!(text.contains("(IC): holds"));

    let out = bin().arg("classify").arg(corpus("ex92.cox")).output().unwrap();
    assert!(stdout_of(&out).contains("word hyperbolic: true"));

    let out = bin().arg("classify").arg(corpus("ex93.cox")).output().unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("admits convex cocompact reflection representation: true"));
    assert!(text.contains("peripheral: U = {s1,s2,s3}"));
}

#[test]
fn classify_json_round_trips() {
    let out = bin().arg("classify").arg(corpus("ex93.cox")).arg("--json").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: RunReport = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report.command, "classify");
    let text = serde_json::to_string(&report).unwrap();
    let back: RunReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report, back);
}

#[test]
fn parse_errors_exit_2() {
    let dir = scratch("parse");
    let bad = dir.join("bad.cox");
    std::fs::write(&bad, "2\n1 2 4\n2 1 5\n").unwrap();
    let out = bin().arg("classify").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let missing = dir.join("missing.cox");
    let out = bin().arg("classify").arg(&missing).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decide_pipeline_and_validation_exit_3() {
    let dir = scratch("decide");
    // A generic build on ex93 decides convex cocompact.
    let out = bin()
        .arg("build")
        .arg(corpus("ex93.cox"))
        .args(["--flavor", "generic", "--out"])
        .arg(dir.join("gen"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = bin()
        .arg("decide")
        .arg(corpus("ex93.cox"))
        .arg(dir.join("gen.cartan"))
        .arg("--json")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: RunReport = serde_json::from_str(&stdout_of(&out)).unwrap();
    let verdict: VerdictJson = serde_json::from_value(report.outputs.clone()).unwrap();
    assert!(verdict.cc && !verdict.scc);
    // Round trip of the verdict payload.
    let text = serde_json::to_string(&verdict).unwrap();
    let back: VerdictJson = serde_json::from_str(&text).unwrap();
    assert_eq!(verdict, back);

    // An incompatible matrix is a validation failure (exit 3) naming the clause.
    let bad = dir.join("bad.cartan");
    std::fs::write(
        &bad,
        "{\"n\":2,\"coxeter\":\"2\\n1 2 inf\\n\",\"entries\":[[2,-1],[-1,2]]}",
    )
    .unwrap();
    let cox2 = dir.join("pair.cox");
    std::fs::write(&cox2, "2\n1 2 inf\n").unwrap();
    let out = bin().arg("decide").arg(&cox2).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("≥ 4"));

    // Mismatched pair is also a validation failure.
    let out = bin().arg("decide").arg(corpus("ex91.cox")).arg(dir.join("gen.cartan")).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn build_flavor_errors() {
    let dir = scratch("build");
    // Rank exceeds the requested dimension.
    let a2 = dir.join("a2.cox");
    std::fs::write(&a2, "2\n1 2 3\n").unwrap();
    let out = bin()
        .arg("build")
        .arg(&a2)
        .args(["--flavor", "tits", "--n", "1", "--out"])
        .arg(dir.join("a2"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rank"));

    // Zero-type semisimple rejection: the Tits point of Ã1.
    let a1t = dir.join("a1t.cox");
    std::fs::write(&a1t, "2\n1 2 inf\n").unwrap();
    let out = bin()
        .arg("build")
        .arg(&a1t)
        .args(["--flavor", "tits", "--out"])
        .arg(dir.join("a1t"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("non-semisimple"));

    // atilde at a = 1 is the zero-type point.
    let tri = dir.join("tri.cox");
    std::fs::write(&tri, "3\n1 2 3\n2 3 3\n1 3 3\n").unwrap();
    let out = bin()
        .arg("build")
        .arg(&tri)
        .args(["--flavor", "atilde", "--a", "1", "--out"])
        .arg(dir.join("tri"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    // atilde at a = 2 works and checks the zigzag identity.
    let out = bin()
        .arg("build")
        .arg(&tri)
        .args(["--flavor", "atilde", "--a", "2", "--out"])
        .arg(dir.join("tri"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout_of(&out).contains("zigzag identity: ok"));
}

#[test]
fn tile_renders_deterministically_and_rejects_dim_2() {
    let dir = scratch("tile");
    let out = bin()
        .arg("build")
        .arg(corpus("fig5.cox"))
        .args(["--flavor", "deformed", "--lambda", "1,2=0.5", "--lambda", "2,3=0.5", "--n", "3", "--out"])
        .arg(dir.join("fig5"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    for svg in ["one.svg", "two.svg"] {
        let out = bin()
            .arg("tile")
            .arg(corpus("fig5.cox"))
            .arg(dir.join("fig5.cartan"))
            .args(["--depth", "5", "--out"])
            .arg(dir.join(svg))
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        assert!(stdout_of(&out).contains("Σ ⊂ interior: true"));
    }
    let one = std::fs::read(dir.join("one.svg")).unwrap();
    let two = std::fs::read(dir.join("two.svg")).unwrap();
    assert_eq!(one, two);

    // depth 0 draws only the fundamental tile.
    let out = bin()
        .arg("tile")
        .arg(corpus("fig5.cox"))
        .arg(dir.join("fig5.cartan"))
        .args(["--depth", "0", "--out"])
        .arg(dir.join("zero.svg"))
        .output()
        .unwrap();
    assert!(stdout_of(&out).contains("1 orbit elements"));

    // A 2-dimensional representation cannot be rendered.
    let pair_cox = dir.join("pair.cox");
    std::fs::write(&pair_cox, "2\n1 2 inf\n").unwrap();
    let out = bin()
        .arg("build")
        .arg(&pair_cox)
        .args(["--flavor", "deformed", "--lambda", "1,2=1", "--out"])
        .arg(dir.join("pair"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = bin()
        .arg("tile")
        .arg(&pair_cox)
        .arg(dir.join("pair.cartan"))
        .args(["--depth", "3", "--out"])
        .arg(dir.join("pair.svg"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported dimension"));
}

#[test]
fn corpus_materializes_parameterized_templates() {
    let dir = scratch("corpus");
    let out = bin()
        .arg("corpus")
        .arg("ex92")
        .args(["--x", "1", "--y", "1", "--out"])
        .arg(dir.join("e92"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    // The materialized pair reproduces the boundary verdict with the
    // named witness pair.
    let out = bin()
        .arg("decide")
        .arg(dir.join("e92.cox"))
        .arg(dir.join("e92.cartan"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("cc: false"));
    assert!(text.contains("pair (s4, s5)"));

    let out = bin()
        .arg("corpus")
        .arg("nope")
        .args(["--out"])
        .arg(dir.join("x"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn examples_and_sweep() {
    let out = bin().arg("examples").output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout_of(&out);
    assert!(text.contains("[PASS]"));
    assert!(!text.contains("[FAIL]"));

    let dir = scratch("sweep");
    let out = bin()
        .arg("examples")
        .args(["--sweep", "ex93:x=0.5:2:0.5", "--out"])
        .arg(dir.join("sweep.csv"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout_of(&out);
    // Ordered by parameter; the x = 1 point is the non-CC locus.
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("x=")).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("x=0.5") && lines[0].contains("cc=true"));
    assert!(lines[1].starts_with("x=1.0") && lines[1].contains("cc=false"));
    assert!(lines[3].starts_with("x=2.0") && lines[3].contains("cc=true"));
    let csv = std::fs::read_to_string(dir.join("sweep.csv")).unwrap();
    assert!(csv.starts_with("param,value,cc,scc\n"));
    assert_eq!(csv.lines().count(), 5);
}
