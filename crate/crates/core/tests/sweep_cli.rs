use std::path::Path;
use std::process::{Command, Output};

use qgrav::sweep::{parse_spec, presets, run_sweep, Param};

fn qgrav(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgrav")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn field(report: &str, key: &str) -> f64 {
    report
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("no {key} in {report}"))
        .parse()
        .unwrap()
}

const SPEC: &str = r#"
[sweep]
parameter = "t2"
min = 0.6
max = 1.0
count = 5

[fixed]
r = 1.0

[[column]]
scheme = "mz_squeezed"

[[column]]
scheme = "simulated:su11_joint"
label = "su11_sim"
"#;

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn phase_reports_geometry() {
    let out = qgrav(&["phase", "--set", "L=5000"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout(&out);
    assert!((field(&report, "g") - 9.8).abs() < 1e-9);
    let psi = field(&report, "psi");
    assert!((psi / field(&report, "psi_closed_form") - 1.0).abs() < 1e-6);
}

#[test]
fn sens_matches_library() {
    let out = qgrav(&["sens", "--scheme", "sql"]);
    assert_eq!(out.status.code(), Some(0));
    assert!((field(&stdout(&out), "dg_over_g") - 9.3046e-5).abs() < 1e-8);
    let out = qgrav(&["sens", "--scheme", "simulated:su11_single", "--set", "t1=0.9"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("method = simulated"));
}

#[test]
fn validation_errors_exit_two() {
    for args in [
        &["sens", "--scheme", "nope"][..],
        &["sens", "--scheme", "sql", "--set", "t9=1"],
        &["sens", "--scheme", "mz_squeezed", "--set", "t2=1.5"],
        &["sweep", "--preset", "fig9"],
        &["crossover", "--a", "sql", "--b", "mz_squeezed", "--param", "q", "--min", "0.5", "--max", "1"],
        &["sens"],
    ] {
        let out = qgrav(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn runtime_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("missing").join("x.csv");
    let out = qgrav(&["sweep", "--preset", "fig3", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("x.csv"));
    let out = qgrav(&[
        "crossover", "--a", "sql", "--b", "effective_sql", "--param", "t2", "--min", "0.5", "--max", "0.9",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("no sign change"));
}

#[test]
fn crossover_subcommand() {
    let out = qgrav(&[
        "crossover", "--a", "su11_joint", "--b", "mz_squeezed", "--param", "t2", "--min", "0.5", "--max", "1", "--set",
        "r=1",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report = stdout(&out);
    assert!((field(&report, "t2") - 0.9184).abs() < 1e-3);
    assert!(report.contains("better_below = su11_joint"));
}

#[test]
fn spec_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let spec_path = write(dir.path(), "spec.toml", SPEC);
    let csv_path = dir.path().join("out.csv");
    let out = qgrav(&["sweep", &spec_path, "--out", csv_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    let table = run_sweep(&parse_spec(SPEC).unwrap()).unwrap();
    let mut rdr = csv::Reader::from_path(&csv_path).unwrap();
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["t2", "n_sig", "mz_squeezed", "su11_sim"]);
    let mut rows = 0;
    for (rec, row) in rdr.records().zip(&table.rows) {
        let parsed: Vec<f64> = rec.unwrap().iter().map(|f| f.parse().unwrap()).collect();
        for (a, b) in parsed.iter().zip(table.record(row)) {
            assert!(((a - b) / b).abs() <= 1e-12);
        }
        rows += 1;
    }
    assert_eq!(rows, 5);
}

#[test]
fn stdout_and_file_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig5b.csv");
    let to_file = qgrav(&["sweep", "--preset", "fig5b", "--out", path.to_str().unwrap()]);
    assert_eq!(to_file.status.code(), Some(0));
    let to_stdout = qgrav(&["sweep", "--preset", "fig5b"]);
    assert_eq!(std::fs::read(&path).unwrap(), to_stdout.stdout);
}

#[test]
fn bad_spec_files_name_path_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let degenerate = SPEC.replace("min = 0.6", "min = 1.0").replace("count = 5", "count = 2");
    let path = write(dir.path(), "degenerate.toml", &degenerate);
    let out = qgrav(&["sweep", &path]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("degenerate.toml") && err.contains("sweep.min/max"), "{err}");

    let swept_fixed = SPEC.replace("r = 1.0", "t2 = 0.9");
    let path = write(dir.path(), "fixed.toml", &swept_fixed);
    let err = stderr(&qgrav(&["sweep", &path]));
    assert!(err.contains("line 9, fixed.t2"), "{err}");

    let out = qgrav(&["sweep", dir.path().join("absent.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sweep_columns_are_ordered_by_grid() {
    let table = run_sweep(&presets::preset("fig5a").unwrap()).unwrap();
    assert_eq!(table.swept, Param::T1);
    assert!(table.rows.windows(2).all(|w| w[0].swept < w[1].swept));
    assert!(table.rows.iter().all(|r| r.values.len() == 4));
}
