use std::path::PathBuf;
use std::process::Command;

use knotorder_cli::schema::Schema;
use knotorder_cli::{run, EXIT_INDETERMINATE, EXIT_INPUT, EXIT_OK};
use knotorder_core::knot::{two_bridge_presentation, KnotFile, KnotRecord};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .display()
        .to_string()
}

fn corpus_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(data(""))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();
    files
}

fn json(args: &[&str]) -> (i32, Value) {
    let argv: Vec<String> = ["knotorder", "--format", "json"].iter().chain(args).map(|s| s.to_string()).collect();
    let out = run(argv);
    let v: Value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", out.stdout));
    assert_eq!(v["exit_code"], out.code);
    (out.code, v)
}

fn text(args: &[&str]) -> knotorder_cli::Output {
    run(std::iter::once("knotorder").chain(args.iter().copied()))
}

#[test]
fn schemas_compile_and_accept_the_corpus() {
    for s in Schema::ALL {
        let v: Value = serde_json::from_str(s.source()).unwrap();
        assert!(jsonschema::meta::is_valid(&v), "{}", s.name());
    }
    for path in corpus_files() {
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        Schema::KnotFile.validate(&v).unwrap();
    }
}

#[test]
fn corpus_files_round_trip() {
    for path in corpus_files() {
        let raw = std::fs::read_to_string(&path).unwrap();
        let file = KnotFile::from_json(&raw).unwrap();
        let normalized = file.normalized().unwrap();
        assert_eq!(normalized, file, "{}", path.display());
        assert_eq!(KnotFile::from_json(&normalized.to_json()).unwrap(), file);
        assert_eq!(normalized.to_json().trim_end(), raw.trim_end(), "{}", path.display());
    }
}

#[test]
fn emitted_certificates_match_their_schemas() {
    let (code, v) = json(&["order2", &data("8_13.json")]);
    assert_eq!(code, EXIT_OK);
    Schema::ObstructionReport.validate(&v["result"]).unwrap();
    assert_eq!(v["result"]["verdict"], "obstructed");

    let (_, v) = json(&["order2", &data("T_2.json")]);
    Schema::ObstructionReport.validate(&v["result"]).unwrap();
    assert_ne!(v["result"]["verdict"], "obstructed");

    for (k, n) in [("3", "2"), ("4", "6"), ("25", "10")] {
        let (code, v) = json(&["lens", "infinite-order", "--k", k, "--n", n]);
        assert_eq!(code, EXIT_OK);
        Schema::OrderCertificate.validate(&v["result"]).unwrap();
    }
    for pairs in ["3:2,4:2", "4:3,7:2", "3:2"] {
        let (code, v) = json(&["lens", "independence", "--pairs", pairs]);
        assert_eq!(code, EXIT_OK);
        Schema::IndependenceCertificate.validate(&v["result"]).unwrap();
    }
}

#[test]
fn identical_invocations_give_identical_payloads() {
    let cases: [&[&str]; 6] = [
        &["alex", &data("8_13.json")],
        &["twisted", &data("8_13.json"), "--cover", "2", "--modulus", "29", "--character", "1"],
        &["cover-homology", &data("T_3.json"), "--n", "3"],
        &["metabolizers", &data("trefoil.json")],
        &["order2", &data("T_2.json")],
        &["lens", "sigma", "--k", "7", "--r", "11"],
    ];
    for args in cases {
        let (_, a) = json(args);
        let (_, b) = json(args);
        assert_eq!(a["result"].to_string(), b["result"].to_string(), "{args:?}");
        assert_eq!(a["inputs_sha256"], b["inputs_sha256"]);
        assert_eq!(text(args).stdout, text(args).stdout);
    }
}

#[test]
fn input_hash_covers_file_contents() {
    let (_, a) = json(&["alex", &data("T_2.json")]);
    let (_, b) = json(&["alex", &data("T_3.json")]);
    assert_ne!(a["inputs_sha256"], b["inputs_sha256"]);
    assert_eq!(a["inputs_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn input_errors_exit_with_two() {
    let (code, v) = json(&["alex", "/nonexistent/knot.json"]);
    assert_eq!(code, EXIT_INPUT);
    assert_eq!(v["error"]["kind"], "io");
    assert!(v["error"]["message"].as_str().unwrap().contains("file not found"));
    assert!(v.get("result").is_none());

    let out = text(&["alex", "/nonexistent/knot.json"]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("file not found"));
    assert!(out.stdout.is_empty());

    for args in [
        &["frobnicate"][..],
        &["lens", "sigma", "--k", "3"],
        &["lens", "sigma", "--k", "2", "--r", "1"],
        &["lens", "infinite-order", "--k", "3", "--n", "3"],
        &["lens", "independence", "--pairs", "3:2,3:4"],
        &["twisted", &data("8_13.json"), "--cover", "2", "--modulus", "29", "--character", "1,2"],
        &["twist-knot", "--k", "0"],
        &["fox-milnor", "--poly", "1,x"],
    ] {
        let (code, v) = json(args);
        assert_eq!(code, EXIT_INPUT, "{args:?}");
        assert!(v["error"]["kind"].is_string(), "{args:?}");
    }
    let (_, v) = json(&["frobnicate"]);
    assert_eq!(v["error"]["kind"], "usage");
}

#[test]
fn malformed_knot_files_are_rejected() {
    let dir = std::env::temp_dir().join(format!("knotorder-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        ("garbage.json", "not json", "parse"),
        ("extra.json", r#"{"name": "x", "colour": "red"}"#, "schema"),
        (
            "mismatch.json",
            r#"{"name": "x", "presentation": {"generators": 2, "relators": ["x1 x2 x1 X2 X1 X2"]}, "seifert": [[-1, 1], [0, 2]]}"#,
            "inconsistent",
        ),
    ];
    for (name, body, kind) in cases {
        let path = dir.join(name);
        std::fs::write(&path, body).unwrap();
        let (code, v) = json(&["alex", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_INPUT, "{name}");
        assert_eq!(v["error"]["kind"], kind, "{name}: {v}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn undecided_obstructions_exit_with_three() {
    let rec = KnotRecord::new("T(2,13)", None, Some(two_bridge_presentation(13, 1).unwrap()), None).unwrap();
    let path = std::env::temp_dir().join(format!("knotorder-torus-{}.json", std::process::id()));
    std::fs::write(&path, KnotFile::from_record(&rec, None).to_json()).unwrap();
    let (code, v) = json(&["order2", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, EXIT_INDETERMINATE);
    Schema::ObstructionReport.validate(&v["result"]).unwrap();
    assert_eq!(v["result"]["verdict"], "inconclusive");
    assert_eq!(v["result"]["indeterminate"], true);
}

#[test]
fn text_output_reads_naturally() {
    let out = text(&["lens", "sigma", "--k", "3", "--r", "6"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("1/13"), "{}", out.stdout);

    let out = text(&["alex", &data("trefoil.json")]);
    assert!(out.stdout.contains("1 - t + t^2"), "{}", out.stdout);

    let out = text(&["order2", &data("8_13.json")]);
    assert!(out.stdout.contains("obstructed"), "{}", out.stdout);

    let out = text(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    for cmd in ["alex", "twisted", "cover-homology", "metabolizers", "order2", "lens", "fox-milnor", "twist-knot"] {
        assert!(out.stdout.contains(cmd), "{cmd}");
    }
}

#[test]
fn binary_honours_the_exit_code_contract() {
    let bin = env!("CARGO_BIN_EXE_knotorder");
    let ok = Command::new(bin).args(["lens", "sigma", "--k", "3", "--r", "6"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("1/13"));

    let missing = Command::new(bin).args(["alex", "/nonexistent/knot.json"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(EXIT_INPUT));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("file not found"));

    let unknown = Command::new(bin).arg("frobnicate").output().unwrap();
    assert_eq!(unknown.status.code(), Some(EXIT_INPUT));
}
