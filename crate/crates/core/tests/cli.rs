use std::process::{Command, Output};

fn pcflap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcflap")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&pcflap(&["eval", "D", "--nu", "0", "--z", "2"])).trim(), "0.36787944117144233");
    assert_eq!(stdout(&pcflap(&["eval", "erfc", "--x", "0"])).trim(), "1");
    let two: f64 =
        stdout(&pcflap(&["eval", "2f1", "--a", "1", "--b", "1.5", "--c", "1.5", "--z", "0.5"])).trim().parse().unwrap();
    assert!((two - 2.0).abs() < 1e-14);
    let neg = pcflap(&["eval", "D", "--nu", "-1", "--z", "-1"]);
    assert!(neg.status.success());
}

#[test]
fn list_filters_by_kind() {
    let all = stdout(&pcflap(&["list"]));
    assert!(all.contains("T41-CORRECTED"));
    let direct = stdout(&pcflap(&["list", "--kind", "direct_integral"]));
    assert!(direct.contains("C361-REP") && !direct.contains("T41-CORRECTED"));
    let red = stdout(&pcflap(&["list", "--kind", "reduction"]));
    assert!(red.contains("R-PCF-RECURRENCE"));
}

#[test]
fn verify_exit_codes() {
    let neg = pcflap(&["verify", "--case", "NEG-T41"]);
    assert_eq!(neg.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&neg.stdout).unwrap();
    assert!(report.as_array().unwrap().iter().any(|r| r["verdict"] == "fail"));

    let ok = pcflap(&["verify", "--case", "T31-DIFF-HALF", "--tol", "1e-8"]);
    assert_eq!(ok.status.code(), Some(0));

    let tight = pcflap(&["verify", "--case", "T31-DIFF-HALF", "--tol", "1e-16"]);
    assert_eq!(tight.status.code(), Some(1));

    assert_eq!(pcflap(&["verify", "--case", "NOPE"]).status.code(), Some(2));
    assert_eq!(pcflap(&["verify", "--case", "R-*", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(pcflap(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn grid_file_and_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.txt");
    std::fs::write(&grid, "# id mu nu x y p\nR-PCF-ERFC 0 -1 0.5 0 1\nR-PCF-ERFC 0 -1 1.5 0 1\n").unwrap();
    let out = dir.path().join("report.csv");
    let o = pcflap(&[
        "verify",
        "--grid",
        grid.to_str().unwrap(),
        "--format",
        "csv",
        "--out",
        out.to_str().unwrap(),
        "--jobs",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert!(lines[0].starts_with("id,kind,mu,nu,x,y,p,"));
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("R-PCF-ERFC,reduction,"));
    assert!(dir.path().join("report.csv.timing.json").exists());
}
