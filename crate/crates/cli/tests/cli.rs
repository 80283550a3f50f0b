use std::fs;
use std::process::{Command, Output};

use parabolic_cli::{parse_basis_document, BasisDocument};

fn parabolic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parabolic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn construct_prints_a_parseable_document() {
    let out = parabolic(&["construct", "--type", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = parse_basis_document(&stdout(&out)).unwrap();
    assert_eq!((doc.n, doc.basis.len()), (3, 7));

    let out = parabolic(&["construct", "--type", "(1,3)", "--kind", "coideal"]);
    let doc = parse_basis_document(&stdout(&out)).unwrap();
    assert_eq!((doc.n, doc.basis.len()), (4, 3));
}

#[test]
fn construct_rejects_bad_types() {
    assert_eq!(
        parabolic(&["construct", "--type", "1,0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        parabolic(&["construct", "--type", "1,2", "--n", "4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn analyze_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let gens = dir.path().join("gens.json");
    fs::write(
        &gens,
        r#"{"n": 3, "field": "Q", "basis": [[["0","1","0"],["0","0","0"],["0","0","0"]],
                                             [["0","0","0"],["0","0","0"],["0","1","0"]]]}"#,
    )
    .unwrap();
    let closure = dir.path().join("closure.json");
    let out = parabolic(&[
        "analyze",
        "closure",
        "--input",
        gens.to_str().unwrap(),
        "--output",
        closure.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = parse_basis_document(&fs::read_to_string(&closure).unwrap()).unwrap();
    // I, e12, e32 and nothing else: e12·e32 = e32·e12 = 0.
    assert_eq!(doc.basis.len(), 3);

    let blocks = parabolic(&["analyze", "blocks", "--input", closure.to_str().unwrap()]);
    assert_eq!(
        stdout(&blocks),
        "dim = 3\nradical_dim = 2\nsemisimple_dim = 1\nblock_sizes = 1\n"
    );
    let para = parabolic(&[
        "analyze",
        "is-parabolic",
        "--input",
        closure.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&para), "parabolic = false\n");

    let perp = parabolic(&["analyze", "perp", "--input", closure.to_str().unwrap()]);
    let perp_path = dir.path().join("perp.json");
    fs::write(&perp_path, stdout(&perp)).unwrap();
    let coideal = parabolic(&[
        "analyze",
        "is-coideal",
        "--input",
        perp_path.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&coideal), "coideal = true\ndim = 6\n");
}

#[test]
fn analyze_reports_document_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"n": 1, "field": "Q", "basis": [[["1/0"]]]}"#).unwrap();
    let out = parabolic(&["analyze", "perp", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("basis[0][0][0]") && err.contains("zero denominator"),
        "{err}"
    );

    let missing = dir.path().join("missing.json");
    let out = parabolic(&["analyze", "perp", "--input", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let not_algebra = dir.path().join("line.json");
    fs::write(
        &not_algebra,
        r#"{"n": 2, "field": "Q", "basis": [[["0","1"],["0","0"]]]}"#,
    )
    .unwrap();
    let out = parabolic(&[
        "analyze",
        "radical",
        "--input",
        not_algebra.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = parabolic(&["verify", "--suite", "min-coideal", "--n", "2..3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).ends_with("result = PASS\n"));

    // With no term budget the exhaustive nil check cannot decide anything.
    let starved = parabolic(&[
        "verify",
        "--suite",
        "gerstenhaber",
        "--n",
        "3",
        "--budget",
        "0",
    ]);
    assert_eq!(starved.status.code(), Some(1));
    assert!(stdout(&starved).contains("result = FAIL"));

    assert_eq!(
        parabolic(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        parabolic(&["verify", "--suite", "schur", "--n", "7"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(parabolic(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let args = [
        "verify",
        "--suite",
        "max-subalgebra",
        "--n",
        "2..4",
        "--seed",
        "7",
        "--trials",
        "40",
    ];
    let first = parabolic(&args);
    let mut with_output = args.to_vec();
    with_output.extend(["--output", path.to_str().unwrap()]);
    let second = parabolic(&with_output);
    assert_eq!(second.status.code(), Some(0));
    assert!(second.stdout.is_empty());
    assert_eq!(stdout(&first), fs::read_to_string(&path).unwrap());
    assert!(stdout(&first).contains("[max-subalgebra/n4/max-proper-unital-dim]"));
}

#[test]
fn seed_is_recorded_in_the_report() {
    let a = parabolic(&[
        "verify",
        "--suite",
        "gerstenhaber",
        "--n",
        "2",
        "--seed",
        "1",
        "--trials",
        "8",
    ]);
    let b = parabolic(&[
        "verify",
        "--suite",
        "gerstenhaber",
        "--n",
        "2",
        "--seed",
        "2",
        "--trials",
        "8",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert!(stdout(&a).contains("seed = 1\n"));
    assert!(stdout(&b).contains("seed = 2\n"));
}

#[test]
fn document_round_trip_through_binary_output() {
    let out = parabolic(&["construct", "--type", "2,1,1"]);
    let text = stdout(&out);
    let doc = parse_basis_document(&text).unwrap();
    let again = BasisDocument::new(doc.n, doc.basis.clone()).to_json() + "\n";
    assert_eq!(again, text);
}
