use std::fs;
use std::process::{Command, Output};

use bohr_core::case::Case;
use bohr_core::theorems::{InequalityReport, Verdict};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bohr-majorant")).args(args).output().unwrap()
}

fn run_env(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bohr-majorant"))
        .args(args)
        .env("BOHR_MAJORANT_THREADS", threads)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn reports(o: &Output) -> Vec<InequalityReport> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn verify_bohr_holds_with_margin() {
    let o = run(&["verify", "bohr", "--function", "moebius:0.5", "--r", "0.3333"]);
    assert_eq!(o.status.code(), Some(0));
    let reps = reports(&o);
    assert_eq!(reps.len(), 1);
    assert_eq!(reps[0].verdict, Verdict::Holds);
    assert!((reps[0].margin.unwrap() - 0.2).abs() < 1e-3);
}

#[test]
fn verify_subordination_reports_equality() {
    let o = run(&["verify", "subordination", "--h", "poly:1,1", "--phi", "blaschke:[]", "--r", "0.3333"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["verdict"], "holds");
    assert_eq!(v["equality"], true);
}

#[test]
fn verify_failure_exits_two_and_replays() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w.json");
    let o = run(&[
        "verify", "bohr", "--function", "moebius:0.95", "--r", "0.35", "--witness-out", witness.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let first = &reports(&o)[0];
    assert_eq!(first.verdict, Verdict::Fails);

    let case: Case = serde_json::from_str(&fs::read_to_string(&witness).unwrap()).unwrap();
    assert_eq!(&case, &first.witness);
    let again = run(&["verify", "--replay", witness.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(2));
    let second = &reports(&again)[0];
    assert_eq!(second.verdict, first.verdict);
    assert_eq!(second.margin.map(f64::to_bits), first.margin.map(f64::to_bits));

    // a full report is accepted as a witness file too
    let report_file = dir.path().join("report.json");
    fs::write(&report_file, stdout(&o)).unwrap();
    let third = run(&["verify", "--replay", report_file.to_str().unwrap()]);
    assert_eq!(reports(&third)[0], *first);
}

#[test]
fn verify_csv_and_multiple_radii() {
    let o = run(&["verify", "bohr", "--f", "moebius:0.9", "--r", "0.2,0.5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "theorem,r,verdict,margin");
    assert!(lines[1].starts_with("bohr,0.2,holds,"));
    assert!(lines[2].starts_with("bohr,0.5,fails,"));
}

#[test]
fn verify_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    let o = run(&["verify", "bohr", "--function", "const:0.5", "--r", "0.9", "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(fs::read_to_string(out).unwrap().lines().count(), 1);
}

#[test]
fn spec_files_and_json_specs() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("phi.json");
    fs::write(&good, r#"{"variant":"blaschke","params":[[0.5,0.1]],"rotation":0.3,"degree":64}"#).unwrap();
    let o = run(&["verify", "subordination", "--h", "poly:1,-1,0.5", "--phi", good.to_str().unwrap(), "--r", "0.25"]);
    assert_eq!(o.status.code(), Some(0));

    let inline = run(&["verify", "bohr", "--function", r#"{"variant":"moebius","params":[0.5],"degree":64}"#, "--r", "0.3"]);
    assert_eq!(inline.status.code(), Some(0));

    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"variant":"moebius","params":[1.5],"degree":64}"#).unwrap();
    let o = run(&["verify", "bohr", "--function", bad.to_str().unwrap(), "--r", "0.3"]);
    assert_eq!(o.status.code(), Some(65));

    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "not a witness").unwrap();
    assert_eq!(run(&["verify", "--replay", garbage.to_str().unwrap()]).status.code(), Some(65));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["verify", "bohr", "--r", "0.3"]).status.code(), Some(64));
    assert_eq!(run(&["verify", "bohr", "--function", "moebius:2", "--r", "0.3"]).status.code(), Some(64));
    assert_eq!(run(&["verify", "bohr", "--function", "moebius:0.5", "--r", "1.2"]).status.code(), Some(64));
    assert_eq!(run(&["verify", "bohr", "--function", "moebius:0.5"]).status.code(), Some(64));
    assert_eq!(run(&["verify", "nonsense", "--r", "0.3"]).status.code(), Some(64));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(
        run(&["verify", "de-branges", "--h", "poly:0,1,3", "--phi", "blaschke:[]", "--k", "1", "--mode", "sup", "--r", "0.5"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(run_env(&["show", "koebe"], "zero").status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn radius_examples() {
    let o = run(&["radius", "bohr", "--function", "moebius:0.999", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let exact = 1.0 / (1.0 + 2.0 * 0.999);
    assert!(v["radius_low"].as_f64().unwrap() <= exact && exact <= v["radius_high"].as_f64().unwrap());
    assert!((v["radius_low"].as_f64().unwrap() - 0.333556).abs() < 1e-6);

    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    let o = run(&["radius", "rogosinski", "--function", "moebius:0.9", "--k", "1", "--witness-out", w.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[0.52631578"));
    let replay = run(&["verify", "--replay", w.to_str().unwrap()]);
    assert_eq!(replay.status.code(), Some(2));

    let o = run(&["radius", "bohr", "--function", "const:0.5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("never fails"));
}

#[test]
fn sharpness_examples() {
    let o = run(&["sharpness", "bohr", "--r", "0.35", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["param"], 0.95);
    assert!((v["report"]["lhs"]["lower"].as_f64().unwrap() - 1.00113).abs() < 1e-5);

    let o = run(&["sharpness", "bohr", "--r", "0.3333333333333333", "--format", "json"]);
    assert_eq!(stdout(&o).trim(), "null");
}

#[test]
fn show_prints_series_json() {
    let o = run(&["show", "koebe", "--degree", "3"]);
    assert_eq!(stdout(&o).trim(), r#"{"degree":3,"coeffs":[[0.0,0.0],[1.0,0.0],[2.0,0.0],[3.0,0.0]]}"#);
}

#[test]
fn suite_is_deterministic_across_thread_counts() {
    let args = ["suite", "--seed", "42", "--cases", "40"];
    let one = run_env(&args, "1");
    let four = run_env(&args, "4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, run(&args).stdout);
    let csv = stdout(&one);
    assert!(csv.starts_with("theorem,r,holds,fails,inconclusive\n"));
    for line in csv.lines().skip(1) {
        assert_eq!(line.split(',').nth(3), Some("0"), "{line}");
    }
}

#[test]
fn suite_beyond_radius_fails() {
    let dir = tempfile::tempdir().unwrap();
    let failures = dir.path().join("f.jsonl");
    let o = run(&["suite", "--seed", "42", "--cases", "100", "--r-extra", "0.4", "--failures-out", failures.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let csv = stdout(&o);
    let bohr_fails: usize = csv
        .lines()
        .filter(|l| l.starts_with("bohr,0.4,") || l.starts_with("schwarz-majorant,0.4,"))
        .map(|l| l.split(',').nth(3).unwrap().parse::<usize>().unwrap())
        .sum();
    assert!(bohr_fails > 0, "{csv}");
    let first = fs::read_to_string(failures).unwrap();
    let rep: InequalityReport = serde_json::from_str(first.lines().next().unwrap()).unwrap();
    assert_eq!(rep.witness.evaluate().unwrap(), rep);
}
