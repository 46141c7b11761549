use std::io::Write as _;
use std::process::Command;

use kelpbed::cli::run;
use kelpbed::verify::{verify, verify_with, VerifyConfig};
use kelpbed_core::BiwordMatrix;

const X: &str = "4\n0 0 0 0\n1 0 1 0\n0 0 3 0\n0 1 0 0\n";
const Y: &str = "4\n0 0 1 1\n0 0 0 1\n1 0 0 0\n0 0 0 0\n";
const XY: &str = "4\n0 0 0 0\n0 0 1 0\n0 0 0 1\n1 0 0 0\n";

fn file(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::File::create(&path)
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
    path.to_str().unwrap().to_string()
}

/// Run in-process; returns (status, stdout, stderr).
fn kelpbed(args: &[&str], stdin: &str) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["kelpbed"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn star_and_phi_on_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let (x, y) = (file(&dir, "x", X), file(&dir, "y", Y));
    assert_eq!(
        kelpbed(&["star", &x, &y], ""),
        (0, XY.to_string(), String::new())
    );
    assert_eq!(kelpbed(&["star", &x, "-"], Y).1, XY);

    let (_, px, _) = kelpbed(&["phi", &x], "");
    assert_eq!(
        px,
        "5\n0 1 2 6 6\n0 1 2 6 6\n0 0 1 4 4\n0 0 1 1 1\n0 0 0 0 0\n"
    );
    let (_, py, _) = kelpbed(&["phi", &y], "");
    let (px, py) = (file(&dir, "px", &px), file(&dir, "py", &py));
    let expected = "5\n0 1 1 2 3\n0 1 1 2 3\n0 1 1 1 2\n0 1 1 1 1\n0 0 0 0 0\n";
    assert_eq!(kelpbed(&["dprod", &px, &py], "").1, expected);
    assert_eq!(kelpbed(&["dprod", &px, &py, "--fast"], "").1, expected);
    assert_eq!(kelpbed(&["phi-inv", "-"], expected).1, XY);
}

#[test]
fn star_on_biwords_with_trace() {
    let dir = tempfile::tempdir().unwrap();
    let x = file(&dir, "x", "2 2 3 3 3 4\n1 3 3 3 3 2\n");
    let y = file(&dir, "y", "1 1 2 3\n3 4 4 1\n");
    let (code, out, _) = kelpbed(&["star", "--biword", "4", "--trace", &x, &y], "");
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "# pair 1: (4,2) (3,1)\n# pair 2: (3,3) (2,4)\n# pair 3: (2,1) (1,3)\n2 3 4\n3 4 1\n"
    );
    let (code, _, err) = kelpbed(&["star", "--biword", "3", &x, &y], "");
    assert_eq!(code, 1);
    assert!(err.contains("letter 4"), "{err}");
}

#[test]
fn series_output_forms() {
    let (code, out, _) = kelpbed(&["series", "--norm", "l11-inf", "--trunc", "8"], "");
    assert_eq!(code, 0);
    assert_eq!(out, "1\n1\n3\n5\n11\n17\n34\n52\n94\n");
    let (_, out, _) = kelpbed(
        &[
            "series", "--norm", "max", "--n", "2", "--trunc", "3", "--csv",
        ],
        "",
    );
    assert_eq!(out, "1,4,10,20\n");
    let (_, out, _) = kelpbed(
        &[
            "series",
            "--norm",
            "l11-inf",
            "--trunc",
            "8",
            "--partial-sums",
            "--csv",
        ],
        "",
    );
    assert_eq!(out, "1,2,5,10,21,38,72,124,218\n");
    assert_eq!(kelpbed(&["series", "--norm", "max"], "").0, 2);
    assert_eq!(kelpbed(&["series", "--norm", "l11", "--n", "0"], "").0, 1);
    let (_, out, _) = kelpbed(&["series", "--norm", "l11-inf"], "");
    assert_eq!(out.lines().count(), 33);
}

#[test]
fn check_and_exit_codes() {
    let ok = "3\n0 1 1\n0 1 1\n0 0 0\n";
    assert_eq!(
        kelpbed(&["check", "-"], ok),
        (0, "monge: yes\nsimple: yes\n".into(), String::new())
    );
    let (code, out, _) = kelpbed(&["check", "-"], "3\n8 5 6\n7 3 1\n13 5 1\n");
    assert_eq!(code, 0);
    assert!(out.starts_with("monge: yes\nsimple: no\n"));
    let (code, _, err) = kelpbed(&["check", "-"], "3\n0 0 0\n0 1 0\n0 0 0\n");
    assert_eq!(code, 1);
    assert!(err.contains("rows 1-2, columns 1-2"), "{err}");
    assert_eq!(err.lines().count(), 1);
    assert_eq!(kelpbed(&["check", "-"], "2\n1 2\n").0, 2);
    assert_eq!(kelpbed(&["check", "-"], "1\n99999999999\n").0, 2);
    assert_eq!(kelpbed(&["phi-inv", "-"], "2\n1 0\n0 0\n").0, 1);
    assert_eq!(kelpbed(&["dprod", "-", "-"], "1\n1\n").0, 2);
    assert_eq!(kelpbed(&["bogus"], "").0, 2);
    assert_eq!(kelpbed(&["phi", "/nonexistent/file"], "").0, 1);
}

#[test]
fn enumerate_outputs_blank_separated_matrices() {
    let (code, out, _) = kelpbed(&["enumerate", "--n", "2", "--k", "1", "--norm", "max"], "");
    assert_eq!(code, 0);
    assert_eq!(out.split("\n\n").count(), 4);
    let (_, out, _) = kelpbed(
        &[
            "enumerate",
            "--n",
            "3",
            "--k",
            "2",
            "--norm",
            "l11",
            "--at-most",
        ],
        "",
    );
    assert_eq!(out.split("\n\n").count(), 1 + 1 + 3);
    let (_, out, _) = kelpbed(&["enumerate", "--k", "4", "--norm", "l11-inf"], "");
    assert_eq!(out.split("\n\n").count(), 11);
    assert_eq!(
        kelpbed(
            &[
                "enumerate",
                "--n",
                "2",
                "--k",
                "9",
                "--norm",
                "max",
                "--cap",
                "3"
            ],
            ""
        )
        .0,
        1
    );
}

#[test]
fn oracle_bound_from_environment() {
    // The in-process runner reads the variable; exercise it through the binary.
    let bin = env!("CARGO_BIN_EXE_kelpbed");
    let out = Command::new(bin)
        .args(["enumerate", "--k", "13", "--norm", "l11-inf"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin)
        .env("KELPBED_ORACLE_BOUND", "13")
        .args(["enumerate", "--k", "13", "--norm", "l11-inf"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(bin)
        .env("KELPBED_ORACLE_BOUND", "lots")
        .args(["verify", "--trials", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn biject_both_directions() {
    let m = "4\n2 0 0 1\n0 1 1 2\n1 1 3 1\n0 0 0 3\n";
    let (code, out, _) = kelpbed(&["biject", "-"], m);
    assert_eq!(code, 0);
    assert!(out.starts_with("k: 77\npi: (12[3], 9[2], 6[2], 6[3]^3, 4[1]^2, 4[2], 4[3]^3, "));
    let pi = out
        .lines()
        .nth(1)
        .unwrap()
        .strip_prefix("pi: ")
        .unwrap()
        .to_string();
    let (_, back, _) = kelpbed(&["biject", "--inverse", &pi], "");
    assert!(back.ends_with(m), "{back}");
    assert_eq!(kelpbed(&["biject", "--inverse", "(4[4])"], "").0, 1);
    assert_eq!(kelpbed(&["biject", "--inverse", "4[1"], "").0, 2);
}

#[test]
fn decompose_prints_both_parts() {
    let (code, out, _) = kelpbed(&["decompose", "-"], "3\n8 5 6\n7 3 1\n13 5 1\n");
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "# simple part\n3\n0 5 10\n0 4 6\n0 0 0\n\n# sum part\n3\n8 0 -4\n7 -1 -5\n13 5 1\n"
    );
    assert_eq!(kelpbed(&["decompose", "-"], "2\n1 0\n0 1\n").0, 1);
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "verify",
        "--trials",
        "40",
        "--n",
        "4",
        "--max-entry",
        "3",
        "--seed",
        "11",
    ];
    let first = kelpbed(&args, "");
    assert_eq!(first.0, 0);
    assert_eq!(first, kelpbed(&args, ""));
    assert!(first.1.contains("isomorphism: 40 passed, 0 failed"));
    let (code, out, _) = kelpbed(&["verify", "--trials", "0"], "");
    assert_eq!(code, 0);
    assert!(out.contains("isomorphism: 0 passed, 0 failed"));
}

#[test]
fn corrupted_star_is_caught() {
    let config = VerifyConfig {
        trials: 200,
        ..Default::default()
    };
    assert!(verify(&config).all_passed());
    // Fusing (a,b),(c,d) into (a,c) instead of (a,d).
    let wrong_fusion = |x: &BiwordMatrix, y: &BiwordMatrix| {
        let t = kelpbed_core::demazure::star_trace(x, y)?;
        let mut out = BiwordMatrix::zero(x.n())?;
        for (a, b) in &t.pairs {
            out.add_kelp(kelpbed_core::Kelp::new(a.top, b.top));
        }
        Ok(out)
    };
    let report = verify_with(&config, &wrong_fusion);
    assert!(!report.all_passed());
    assert!(report.checks[0].failed > 0);
    // Swapping the factors.
    let swapped = |x: &BiwordMatrix, y: &BiwordMatrix| kelpbed_core::demazure::star(y, x);
    assert!(!verify_with(&config, &swapped).all_passed());
}
