//! The command-line contract: exit codes, JSON shape and determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::Arc;

use flatlab::dsl::parse_problem;
use flatlab::fiber::tor1_dim;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn flatlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    flatlab(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(flatlab(args).stdout).unwrap()
}

fn analyze_json(name: &str) -> serde_json::Value {
    let f = fixture(name);
    let out = stdout(&["analyze", f.to_str().unwrap(), "--json", "-"]);
    serde_json::from_str(&out).unwrap()
}

#[test]
fn verdict_exit_codes() {
    let cases = [
        ("dual_numbers.flat", 10),
        ("truncated_line.flat", 10),
        ("free_rank2.flat", 0),
        ("unit_relation.flat", 0),
        ("graded_free.flat", 0),
        ("graded_eps_x0.flat", 10),
        ("conic.flat", 0),
        ("node_truncated.flat", 11),
        ("not_local.flat", 2),
    ];
    for (name, expected) in cases {
        let f = fixture(name);
        assert_eq!(code(&["analyze", f.to_str().unwrap()]), expected, "{name}");
    }
    assert_eq!(code(&["analyze", "/nonexistent/problem.flat"]), 2);
}

#[test]
fn dual_numbers_report() {
    let v = analyze_json("dual_numbers.flat");
    assert_eq!(v["verdict"], "NotFlat");
    assert_eq!(v["witness"]["kind"], "neighborhood");
    assert_eq!(v["witness"]["n"], 1);
    assert_eq!(v["profile"][1]["varpi"], "1/2");
    assert_eq!(v["tor"]["dim"], 1);
    assert_eq!(v["oracle_agreement"], true);
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn graded_report_polynomials() {
    let v = analyze_json("graded_eps_x0.flat");
    assert_eq!(v["polynomials"][0]["coeffs"], serde_json::json!(["1/1", "1/1"]));
    assert_eq!(v["polynomials"][1]["coeffs"], serde_json::json!(["1/1", "1/2"]));
    assert_eq!(v["profile"], serde_json::json!([]));
}

#[test]
fn json_is_deterministic_apart_from_timing() {
    let strip = |mut v: serde_json::Value| {
        v.as_object_mut().unwrap().remove("timing_ms");
        serde_json::to_string(&v).unwrap()
    };
    for name in ["truncated_line.flat", "graded_eps_x0.flat", "unit_relation.flat"] {
        assert_eq!(strip(analyze_json(name)), strip(analyze_json(name)), "{name}");
    }
    let dir = tempfile::tempdir().unwrap();
    let f = fixture("truncated_line.flat");
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    code(&["analyze", f.to_str().unwrap(), "--json", a.to_str().unwrap()]);
    code(&["analyze", f.to_str().unwrap(), "--json", b.to_str().unwrap()]);
    let read = |p: &Path| {
        let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        strip(v)
    };
    assert_eq!(read(&a), read(&b));
}

#[test]
fn varpi_row_for_truncated_line() {
    let f = fixture("truncated_line.flat");
    let out = stdout(&["varpi", f.to_str().unwrap(), "--n", "2"]);
    assert!(out.contains("2\t3\t2\t2/3\n"), "{out}");
}

#[test]
fn tor_hilbert_enum_and_export() {
    let f = fixture("truncated_line.flat");
    let f = f.to_str().unwrap();
    assert!(stdout(&["tor", f]).contains("Tor_1(A/(y), M) = 1"));
    assert!(stdout(&["tor", f, "--ideal", "y^2"]).contains("= 1"));
    assert_eq!(code(&["tor", f, "--ideal", "y +"]), 2);

    let g = fixture("graded_eps_x0.flat");
    let h = stdout(&["hilbert", g.to_str().unwrap(), "--n", "1", "--window", "0..4"]);
    assert!(h.starts_with("m\th\n0\t2\n1\t3\n2\t4\n3\t5\n4\t6\n"), "{h}");
    assert_eq!(code(&["hilbert", g.to_str().unwrap(), "--n", "1", "--window", "0..1"]), 2);

    let e = fixture("free_rank2.flat");
    let listing = stdout(&["enum-ideals", e.to_str().unwrap(), "--colength", "2"]);
    assert!(listing.starts_with("2 monomial ideals of colength 2\n"), "{listing}");

    let m2 = stdout(&["export", f, "--dialect", "m2"]);
    let expected: Vec<&str> = m2.lines().filter_map(|l| l.split("expected ").nth(1)).collect();
    assert_eq!(expected, ["1", "2", "2", "1"]);
    assert!(stdout(&["export", f, "--dialect", "singular"]).contains("qring A = std(J);"));
    assert_eq!(code(&["export", f, "--dialect", "maple"]), 2);
}

#[test]
fn corpus_exit_codes_match_the_tor_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    assert_eq!(code(&["gen-corpus", "--seed", "11", "--count", "24", "--out", out]), 0);
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["seed"], 11);
    for entry in manifest["files"].as_array().unwrap() {
        let path = dir.path().join(entry["file"].as_str().unwrap());
        let text = std::fs::read_to_string(&path).unwrap();
        let inst = parse_problem(&text).unwrap().build().unwrap();
        let m = inst.module.unwrap();
        let alg = Arc::clone(m.algebra());
        let expected = if tor1_dim(&m, &alg.maximal_ideal()) == 0 { 0 } else { 10 };
        assert_eq!(code(&["analyze", path.to_str().unwrap()]), expected, "{}", path.display());
    }
}

#[test]
fn gen_corpus_is_seeded() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        code(&["gen-corpus", "--count", "5", "--out", d.path().to_str().unwrap()]);
    }
    for i in 0..5 {
        let name = format!("case-{i:04}.flat");
        assert_eq!(
            std::fs::read(a.path().join(&name)).unwrap(),
            std::fs::read(b.path().join(&name)).unwrap()
        );
    }
}
