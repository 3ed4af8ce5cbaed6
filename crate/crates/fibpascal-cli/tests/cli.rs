//! Behavioral tests for the command-line interface: exit codes, output
//! shapes, golden files, and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fibpascal"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn assert_matches_golden(args: &[&str], name: &str) {
    let actual = stdout_of(args);
    let expected = std::fs::read_to_string(golden_path(name))
        .unwrap_or_else(|e| panic!("golden file {name}: {e}"));
    assert_eq!(actual, expected, "output of {args:?} diverged from {name}");
}

#[test]
fn fib_single_method_values() {
    assert_eq!(stdout_of(&["fib", "--index", "11", "--method", "novel"]), "89\n");
    assert_eq!(stdout_of(&["fib", "--index", "1", "--method", "matrix"]), "1\n");
}

#[test]
fn fib_all_prints_seven_agreeing_lines() {
    let out = stdout_of(&["fib", "--index", "15", "--method", "all"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines.iter().all(|l| *l == "610"), "{lines:?}");
}

#[test]
fn exit_codes_contract() {
    // 2: argument errors
    assert_eq!(run(&["fib", "--index", "0", "--method", "novel"]).status.code(), Some(2));
    assert_eq!(run(&["fib", "--index", "5", "--method", "warp"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--max", "0"]).status.code(), Some(2));
    assert_eq!(run(&["bench", "--max", "0", "--methods", "doubling"]).status.code(), Some(2));
    assert_eq!(run(&["bench", "--max", "4", "--reps", "0"]).status.code(), Some(2));
    assert_eq!(run(&["render", "--mode", "novel", "--k", "4", "--rows", "3"]).status.code(), Some(2));
    assert_eq!(run(&["render", "--mode", "novel", "--rows", "9"]).status.code(), Some(2));
    assert_eq!(run(&["pattern", "--k", "3", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(run(&["fib", "--index", "2000000", "--method", "doubling"]).status.code(), Some(2));
    // 0: success
    assert_eq!(run(&["verify", "--max", "1"]).status.code(), Some(0));
    assert_eq!(run(&["fib", "--index", "90", "--method", "all"]).status.code(), Some(0));
}

#[test]
fn verify_reports_seven_suites() {
    let out = stdout_of(&["verify", "--max", "25"]);
    let parsed: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(parsed["ok"], serde_json::Value::Bool(true));
    assert_eq!(parsed["suites"].as_array().expect("suite array").len(), 7);
    assert_eq!(parsed["max"], 25);
}

#[test]
fn pattern_json_golden_files() {
    for k in ["0", "2", "4", "9", "10", "14"] {
        assert_matches_golden(
            &["pattern", "--k", k, "--format", "json"],
            &format!("pattern_k{k}.json"),
        );
        assert_matches_golden(
            &["pattern", "--k", k, "--format", "csv"],
            &format!("pattern_k{k}.csv"),
        );
    }
}

#[test]
fn render_golden_files() {
    for k in [0u64, 2, 4, 9, 10, 14] {
        assert_matches_golden(
            &[
                "render",
                "--mode",
                "novel",
                "--k",
                &k.to_string(),
                "--rows",
                &(k + 2).to_string(),
            ],
            &format!("render_novel_k{k}.txt"),
        );
    }
    assert_matches_golden(
        &["render", "--mode", "novel", "--k", "4", "--rows", "6", "--format", "svg"],
        "render_novel_k4.svg",
    );
    assert_matches_golden(
        &["render", "--mode", "classical", "--rows", "6", "--format", "svg"],
        "render_classical_rows6.svg",
    );
    assert_matches_golden(
        &["render", "--mode", "classical", "--rows", "6"],
        "render_classical_rows6.txt",
    );
    assert_matches_golden(
        &["render", "--mode", "novel", "--k", "4", "--rows", "8", "--cell-numbers"],
        "render_novel_k4_numbers.txt",
    );
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let cases: [&[&str]; 4] = [
        &["pattern", "--k", "10", "--format", "json"],
        &["render", "--mode", "novel", "--k", "10", "--rows", "12", "--format", "svg"],
        &["render", "--mode", "classical", "--rows", "9"],
        &["verify", "--max", "10"],
    ];
    for args in cases {
        let first = run(args);
        let second = run(args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn pattern_csv_round_trips() {
    let out = stdout_of(&["pattern", "--k", "14", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("row,col,weight"));
    let mut cells = Vec::new();
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 3, "line {line:?}");
        cells.push((
            fields[0].parse::<u64>().unwrap(),
            fields[1].parse::<u64>().unwrap(),
            fields[2].to_string(),
        ));
    }
    let mut sorted = cells.clone();
    sorted.sort();
    assert_eq!(cells, sorted, "cells are row-major");
    assert_eq!(cells.len(), 7);
}

#[test]
fn bench_csv_shape_and_agreement() {
    let out = stdout_of(&["bench", "--max", "10", "--methods", "doubling,novel", "--reps", "3"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("method,index,ns_median,digits,digest"));
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(rows.len(), 20);
    for row in &rows {
        assert_eq!(row.len(), 5);
        row[1].parse::<u64>().unwrap();
        row[2].parse::<u128>().unwrap();
        row[3].parse::<usize>().unwrap();
    }
    // Same digest for every method at the same index.
    for index in 1..=10u64 {
        let digests: Vec<&String> = rows
            .iter()
            .filter(|r| r[1] == index.to_string())
            .map(|r| &r[4])
            .collect();
        assert_eq!(digests.len(), 2);
        assert_eq!(digests[0], digests[1], "index {index}");
    }
}

#[test]
fn bench_digest_at_index_50() {
    let out = stdout_of(&["bench", "--max", "50", "--methods", "doubling", "--reps", "1"]);
    let row50 = out.lines().last().unwrap();
    assert_eq!(row50.split(',').nth(3), Some("11"), "digit count of F_50");
    assert_eq!(row50.split(',').nth(4), Some("12586269025"));
}

#[test]
fn out_flag_writes_identical_bytes() {
    let dir = std::env::temp_dir().join("fibpascal-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pattern_k9.json");
    let on_stdout = stdout_of(&["pattern", "--k", "9", "--format", "json"]);
    let out = run(&[
        "pattern",
        "--k",
        "9",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty(), "file mode keeps stdout quiet");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), on_stdout);
    std::fs::remove_file(&path).ok();
}

#[test]
fn derive_json_is_sound() {
    for (m, value) in [("1", "1"), ("10", "55"), ("16", "987")] {
        let out = stdout_of(&["derive", "--m", m]);
        let parsed: serde_json::Value = serde_json::from_str(&out).expect("valid json");
        assert_eq!(parsed["m"].to_string(), m);
        assert_eq!(parsed["value"], value);
        assert_eq!(parsed["oracle"], value);
        assert_eq!(parsed["soundness"], "pass");
        let coeffs = parsed["coefficients"].as_array().unwrap();
        assert_eq!(coeffs.len() as u64, parsed["row"].as_u64().unwrap() + 1);
    }
}

/// Minimal well-formedness check: every open tag closes in order, one root
/// element, attributes quoted. Enough to catch structural breakage in the
/// hand-assembled SVG.
fn assert_well_formed_xml(doc: &str) {
    let mut stack: Vec<String> = Vec::new();
    let mut roots = 0;
    let mut rest = doc.trim_start();
    if let Some(stripped) = rest.strip_prefix("<?xml") {
        rest = stripped.split_once("?>").expect("closed prolog").1;
    }
    let mut chars = rest.char_indices().peekable();
    while let Some((i, ch)) = chars.next() {
        if ch != '<' {
            continue;
        }
        let close = rest[i..].find('>').map(|j| i + j).expect("closed tag");
        let tag = &rest[i + 1..close];
        if let Some(name) = tag.strip_prefix('/') {
            let open = stack.pop().unwrap_or_else(|| panic!("stray </{name}>"));
            assert_eq!(open, name, "mismatched close tag");
            if stack.is_empty() {
                roots += 1;
            }
        } else if !tag.ends_with('/') {
            let name = tag.split_whitespace().next().expect("tag name");
            stack.push(name.to_string());
        }
        while chars.peek().is_some_and(|&(j, _)| j <= close) {
            chars.next();
        }
    }
    assert!(stack.is_empty(), "unclosed tags: {stack:?}");
    assert_eq!(roots, 1, "exactly one root element");
}

#[test]
fn svg_is_well_formed_with_exact_cell_count() {
    for rows in [1u64, 4, 6, 9] {
        let out = stdout_of(&["render", "--mode", "classical", "--rows", &rows.to_string(), "--format", "svg"]);
        assert_well_formed_xml(&out);
        let rects = out.matches("<rect ").count() as u64;
        assert_eq!(rects, rows * (rows + 1) / 2, "rows={rows}");
        let groups = out.matches("<g ").count() as u64;
        assert_eq!(groups, rows, "one group per row");
    }
    // k = 7 (odd): row 7 carries −1, row 8 carries +½.
    let novel7 = stdout_of(&["render", "--mode", "novel", "--k", "7", "--rows", "9", "--format", "svg"]);
    assert_well_formed_xml(&novel7);
    assert_eq!(novel7.matches("<rect ").count(), 45);
    for class in ["w_neg1", "w_poshalf", "w_zero"] {
        assert!(novel7.contains(&format!("cell {class}")), "{class} missing");
    }
    // k = 4 (even): row 4 carries +1, row 5 carries −½.
    let novel4 = stdout_of(&["render", "--mode", "novel", "--k", "4", "--rows", "6", "--format", "svg"]);
    for class in ["w_pos1", "w_neghalf", "w_zero"] {
        assert!(novel4.contains(&format!("cell {class}")), "{class} missing");
    }
}
