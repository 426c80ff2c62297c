// Copyright 2026 The diskcyl authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! End-to-end runs of the `diskcyl` binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diskcyl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_the_simplified_law() {
    let out = run(&["eval", "--gap", "0.01", "--alpha", "0", "--option", "Csimp"]);
    assert!(out.status.success());
    let value: f64 = stdout(&out).trim().parse().unwrap();
    assert!((value / -411.233517 - 1.0).abs() < 1e-8, "{value}");
}

#[test]
fn eval_rejects_option_a_for_parallel_axes() {
    let out = run(&["eval", "--gap", "0.01", "--alpha", "0", "--option", "A"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parallel"));
}

#[test]
fn eval_pair_is_attractive_for_negative_k() {
    let out = run(&[
        "eval", "--pair", "--gap", "0.001", "--alpha", "1.0", "--k", "-1", "--option", "B",
    ]);
    assert!(out.status.success());
    let value: f64 = stdout(&out).trim().parse().unwrap();
    assert!(value < 0.0);
}

#[test]
fn sweep_separation_writes_one_row_per_point_and_option() {
    let out = run(&[
        "sweep-separation",
        "--alpha",
        "0.5",
        "--from",
        "1e-3",
        "--to",
        "1e-1",
        "--points",
        "4",
        "--option",
        "B",
        "--option",
        "Csimp",
        "--with-analytic-ref",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().unwrap().clone();
    assert_eq!(header.len(), diskcyl::sweep::CSV_HEADER.len());
    assert_eq!(reader.records().count(), 8);
}

#[test]
fn sweeps_are_byte_identical_across_runs() {
    let args = ["sweep-angle", "--g-over-R", "1e-3", "--option", "C"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn compare_options_covers_every_option() {
    let out = run(&["compare-options", "--alpha", "1.2", "--g-over-R", "1e-2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for option in ["A", "B", "C", "Csimp"] {
        assert!(
            text.lines()
                .skip(1)
                .any(|l| l.split(',').any(|f| f == option)),
            "{option} missing"
        );
    }
}

#[test]
fn config_file_supplies_defaults() {
    let dir = std::env::temp_dir().join(format!("diskcyl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scenario.txt");
    std::fs::write(&path, "m = 6\nk = -1\nalpha = 0\ng_over_R = 0.01\n").unwrap();
    let csv_path = dir.join("out.csv");
    let out = run(&[
        "compare-options",
        "--config",
        path.to_str().unwrap(),
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let written = std::fs::read_to_string(&csv_path).unwrap();
    assert_eq!(written.lines().count(), 5);
    // alpha = 0 from the file makes option A singular
    let a_row = written.lines().find(|l| l.contains(",A,")).unwrap();
    assert!(a_row.ends_with("parallel_singularity"), "{a_row}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bad_input_exits_with_code_two() {
    assert_eq!(run(&["verify", "--criterion", "42"]).status.code(), Some(2));
    assert_eq!(
        run(&["eval", "--gap", "-1", "--alpha", "0.3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn verify_passing_criterion_exits_zero() {
    let out = run(&["verify", "--criterion", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("criterion 2 PASS"));
}

#[test]
fn verify_reports_known_failure_with_exit_one() {
    let out = run(&["verify", "--criterion", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("criterion 6 FAIL"));
}
