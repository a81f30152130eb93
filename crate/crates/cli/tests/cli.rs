//! End-to-end checks of the binary: emitted fixtures validate cleanly and
//! deterministically, corrupted files fail naming the broken check, garbage
//! input exits 2, and compute output round-trips through validate.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::Instant;

use algebroid::descriptor::descriptor_from_hopf;
use algebroid::fixtures::corrupted_variants;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_algebroid"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

fn emit_fixture(dir: &Path, name: &str, field: &str) -> PathBuf {
    let out = dir.join(format!("{name}_{field}.json"));
    let output = run(&[
        "fixture",
        name,
        "--field",
        field,
        "--emit",
        "--out",
        path_str(&out),
    ]);
    assert!(
        output.status.success(),
        "fixture emission failed: {output:?}"
    );
    out
}

#[test]
fn cli_acceptance() {
    let start = Instant::now();
    let dir = tempfile::tempdir().expect("tempdir");

    let emitted = [
        ("z2", "q", vec!["base", "regular", "trivial", "sign"]),
        ("groupoid2", "q", vec!["base", "col1", "col2", "regular"]),
        ("groupoid2", "7", vec!["base", "col1", "col2", "regular"]),
        ("env-ut2", "q", vec!["base", "regular"]),
    ];

    for (name, field, modules) in &emitted {
        let file = emit_fixture(dir.path(), name, field);

        // validate: exit 0 and deterministic byte-for-byte output.
        let v1 = run(&["validate", path_str(&file)]);
        assert_eq!(
            v1.status.code(),
            Some(0),
            "validate {name}/{field}: {}",
            String::from_utf8_lossy(&v1.stdout)
        );
        let v2 = run(&["validate", path_str(&file)]);
        assert_eq!(
            v1.stdout, v2.stdout,
            "validate output must be deterministic"
        );
        let report: serde_json::Value = serde_json::from_slice(&v1.stdout).expect("report JSON");
        assert!(report.as_array().is_some_and(|a| !a.is_empty()));

        // gv-check over the module set: exit 0, deterministic.
        let mut args = vec!["gv-check", path_str(&file)];
        args.extend(modules.iter().copied());
        let g1 = run(&args);
        assert_eq!(
            g1.status.code(),
            Some(0),
            "gv-check {name}/{field}: {}",
            String::from_utf8_lossy(&g1.stdout)
        );
        let g2 = run(&args);
        assert_eq!(
            g1.stdout, g2.stdout,
            "gv-check output must be deterministic"
        );

        // gv-check with no modules runs the structure checks only.
        let g3 = run(&["gv-check", path_str(&file)]);
        assert_eq!(g3.status.code(), Some(0));
    }

    // Corrupted descriptors exit 1 and the report names the broken check.
    for variant in corrupted_variants() {
        let file = dir.path().join(format!("corrupt_{}.json", variant.name));
        let desc = descriptor_from_hopf(&variant.hopf, &[]);
        std::fs::write(&file, desc.to_json()).expect("write corrupted descriptor");
        let out = run(&["validate", path_str(&file)]);
        assert_eq!(
            out.status.code(),
            Some(1),
            "corrupt {} should exit 1",
            variant.name
        );
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).expect("report JSON");
        let first_failure = report
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["passed"] == serde_json::Value::Bool(false))
            .unwrap_or_else(|| panic!("corrupt {}: no failing entry", variant.name));
        assert_eq!(
            first_failure["check"].as_str().unwrap(),
            variant.target,
            "corrupt {}",
            variant.name
        );
    }

    // Malformed JSON exits 2.
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{ not json").unwrap();
    let out = run(&["validate", path_str(&junk)]);
    assert_eq!(out.status.code(), Some(2));

    // Unknown references exit 2.
    let dangling = dir.path().join("dangling.json");
    std::fs::write(
        &dangling,
        r#"{"algebras": {}, "hopf_algebroids": {"main": {"base": "A", "total": "H",
            "alpha": {"rows": 0, "cols": 0, "entries": []},
            "beta": {"rows": 0, "cols": 0, "entries": []},
            "delta_lift": {"rows": 0, "cols": 0, "entries": []},
            "counit": {"rows": 0, "cols": 0, "entries": []},
            "antipode": {"rows": 0, "cols": 0, "entries": []}}}}"#,
    )
    .unwrap();
    let out = run(&["validate", path_str(&dangling)]);
    assert_eq!(out.status.code(), Some(2));

    // Unknown compute ops are usage errors (exit 2, from clap).
    let z2 = dir.path().join("z2_q.json");
    let out = run(&["compute", path_str(&z2), "frobnicate", "base"]);
    assert_eq!(out.status.code(), Some(2));

    // compute output for module-producing ops re-parses and re-validates.
    let out = run(&["compute", path_str(&z2), "tensor", "regular", "sign"]);
    assert_eq!(out.status.code(), Some(0));
    let tensor_file = dir.path().join("tensor_out.json");
    std::fs::write(&tensor_file, &out.stdout).unwrap();
    let out = run(&["validate", path_str(&tensor_file)]);
    assert_eq!(out.status.code(), Some(0), "compute output re-validates");

    // dual of the sign module has action matrix [-1] at g.
    let out = run(&["compute", path_str(&z2), "dual", "sign"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        value["modules"]["result"]["action"][1][1]["entries"][0][0],
        "-1"
    );

    // --checks narrows the report.
    let g2file = dir.path().join("groupoid2_q.json");
    let out = run(&["validate", path_str(&g2file), "--checks", "counit*"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for entry in report.as_array().unwrap() {
        assert!(entry["check"].as_str().unwrap().starts_with("counit"));
    }

    // --report-file duplicates stdout into a file.
    let report_path = dir.path().join("report.json");
    let out = run(&[
        "validate",
        path_str(&g2file),
        "--report-file",
        path_str(&report_path),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read(&report_path).unwrap();
    assert_eq!(&written[..], &out.stdout[..out.stdout.len() - 1]); // stdout has trailing newline

    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "CLI acceptance run took {elapsed:?}, budget is 30 s"
    );
    println!("criterion 9 (CLI validate/gv-check/compute round trips, {elapsed:.2?}): PASS");
}
