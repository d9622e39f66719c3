use std::path::PathBuf;
use std::process::Command;

use toric_whitney::cli::problem::parse_problem_str;
use toric_whitney::cli::report::{render_text, Report};
use toric_whitney::cli::{run, verify_report, CliError, Command as Cmd, RunOptions};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_toric-whitney")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn analyze_lists_three_compact_faces() {
    let input = data("plane_quartic.json");
    let (code, out) = bin(&["analyze", "--input", input.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(code, 0);
    let r = Report::from_json(&out).unwrap();
    assert_eq!(r.analysis.unwrap().nondegeneracy.faces.len(), 3);
}

#[test]
fn family_is_equisingular() {
    for f in ["determinantal_q5.json", "determinantal_q6.json"] {
        let input = data(f);
        let (code, out) = bin(&["family", "--input", input.to_str().unwrap()]);
        assert_eq!(code, 0, "{f}");
        assert!(out.contains("verdict: Whitney equisingular"), "{out}");
    }
}

#[test]
fn exit_codes() {
    let bad = scratch("bad.json");
    std::fs::write(&bad, "{ \"variety\": { \"sigma_rays\": [[0, 1], [2, -1]] }, \"polynomial\": \"z1 +* z2\" }").unwrap();
    assert_eq!(bin(&["faces", "--input", bad.to_str().unwrap()]).0, 1);
    std::fs::write(&bad, "not a problem").unwrap();
    assert_eq!(bin(&["faces", "--input", bad.to_str().unwrap()]).0, 1);
    assert_eq!(bin(&["faces"]).0, 1);
    assert_eq!(bin(&["frobnicate"]).0, 1);
    let tame = data("c3_not_tame.json");
    assert_eq!(bin(&["tame", "--input", tame.to_str().unwrap()]).0, 2);
    let fam = data("not_admissible.json");
    assert_eq!(bin(&["family", "--input", fam.to_str().unwrap()]).0, 2);
}

#[test]
fn parse_errors_carry_positions() {
    let text = r#"{ "variety": { "sigma_rays": [[0, 1], [2, -1]] }, "polynomial": "z1 + z7" }"#;
    let Err(CliError::Parse(msg)) = parse_problem_str(text) else { panic!("z7 is not a variable") };
    assert!(msg.contains("z7") && msg.contains("1:6"), "{msg}");
    let text = r#"{ "variety": { "sigma_rays": [[0, 1], [2, -1]] }, "polynomial": "1 + z1" }"#;
    assert!(matches!(parse_problem_str(text), Err(CliError::Newton(_))));
    let text = r#"{ "variety": { "sigma_rays": [[0, 1], [2, -1]] }, "polynomial": "z1", "family": "z1" }"#;
    assert!(parse_problem_str(text).is_err());
    let text = r#"{ "variety": { "sigma_rays": [[0, 1], [2, -1]] }, "polinomial": "z1" }"#;
    assert!(parse_problem_str(text).is_err());
}

#[test]
fn report_file_round_trips_and_witnesses_replay() {
    let input = data("four_generators.json");
    let report = scratch("four_generators.report.json");
    let (code, out) = bin(&["analyze", "--input", input.to_str().unwrap(), "--report", report.to_str().unwrap(), "--seed", "7"]);
    assert_eq!(code, 2);
    let text = std::fs::read_to_string(&report).unwrap();
    let r = Report::from_json(&text).unwrap();
    assert_eq!(r.to_json(), text);
    assert_eq!(render_text(&r), out);
    assert_eq!(r.seed, 7);
    let (n, failures) = verify_report(&text).unwrap();
    assert!(n >= 1 && failures.is_empty());
    let (code, out) = bin(&["--verify-witness", report.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");

    // a tampered witness is caught
    let tampered = text.replacen("\"2/5\"", "\"3/5\"", 1);
    assert_ne!(tampered, text);
    let bad = scratch("tampered.report.json");
    std::fs::write(&bad, tampered).unwrap();
    assert_eq!(bin(&["--verify-witness", bad.to_str().unwrap()]).0, 2);
}

#[test]
fn identical_runs_give_identical_reports() {
    let input = data("c3_not_tame.json");
    let a = bin(&["analyze", "--input", input.to_str().unwrap(), "--format", "structured"]);
    let b = bin(&["analyze", "--input", input.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(a, b);
}

#[test]
fn oracles_agree_on_every_data_file() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let mut files: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    for f in files {
        let p = parse_problem_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
        let opts = RunOptions { oracle: true, ..Default::default() };
        for cmd in [Cmd::Dual, Cmd::Hilbert, Cmd::Faces, Cmd::Nondeg, Cmd::Tame, Cmd::Analyze] {
            let Ok(r) = run(cmd, &p, &opts) else { continue };
            for o in &r.oracle {
                assert!(o.agrees, "{}: {:?}: {} {}", f.display(), cmd, o.name, o.detail);
            }
        }
    }
}

#[test]
fn stratify_on_a_family() {
    let input = data("determinantal_q5.json");
    let (code, out) = bin(&["stratify", "--input", input.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(code, 0);
    let r = Report::from_json(&out).unwrap();
    let mut labels: Vec<String> = r.stratification.unwrap().iter().map(|s| s.label()).collect();
    labels.sort();
    assert_eq!(labels, ["A_{1,2,3,4,5,6}", "A_{1}", "B_{1,2,3,4,5,6}", "B_{1}", "C_{6}", "C_∅"]);
}
