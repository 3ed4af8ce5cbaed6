//! The `verify` subcommand: seven cross-verification suites swept to a
//! caller-chosen bound, reported as JSON with per-suite pass counts.

use serde::Serialize;

use fibpascal::{
    check_binet_from_cosine, check_reversal_symmetry, derive_identity, evaluate_pattern,
    fib, fib_doubling, fib_novel, rows, synthesize_pattern, FibMethod,
};

use crate::CmdError;

#[derive(Serialize)]
struct SuiteOut {
    name: &'static str,
    checks: u64,
    passed: u64,
}

#[derive(Serialize)]
struct FailureOut {
    suite: &'static str,
    index: u64,
    expected: String,
    actual: String,
}

#[derive(Serialize)]
struct VerifyOut {
    max: u64,
    suites: Vec<SuiteOut>,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<FailureOut>,
}

struct SuiteFailure {
    index: u64,
    expected: String,
    actual: String,
}

type SuiteResult = Result<u64, (u64, SuiteFailure)>;
type SuiteFn = fn(u64) -> SuiteResult;

pub fn cmd_verify(max: u64, max_rows: u64) -> Result<String, CmdError> {
    if max < 1 {
        return Err(CmdError::usage("--max must be at least 1"));
    }
    if max + 1 > max_rows {
        return Err(CmdError::usage(format!(
            "verification sweeps need rows up to {}, above --max-rows {max_rows}",
            max + 1
        )));
    }

    let suites: [(&'static str, SuiteFn); 7] = [
        ("engine_agreement", suite_engine_agreement),
        ("reversal_symmetry", suite_reversal_symmetry),
        ("pattern_evaluation", suite_pattern_evaluation),
        ("pattern_formula_equivalence", suite_pattern_formula_equivalence),
        ("pascal_reduction", suite_pascal_reduction),
        ("binet_cosine_equivalence", suite_binet_cosine),
        ("derivation_soundness", suite_derivation),
    ];

    let mut out = VerifyOut { max, suites: Vec::new(), ok: true, failure: None };
    for (name, suite) in suites {
        match suite(max) {
            Ok(checks) => out.suites.push(SuiteOut { name, checks, passed: checks }),
            Err((passed, failure)) => {
                out.suites.push(SuiteOut { name, checks: passed + 1, passed });
                out.ok = false;
                out.failure = Some(FailureOut {
                    suite: name,
                    index: failure.index,
                    expected: failure.expected,
                    actual: failure.actual,
                });
                break;
            }
        }
    }

    let json = serde_json::to_string(&out)
        .map_err(|e| CmdError::verification(format!("json encoding failed: {e}")))?;
    if out.ok {
        Ok(format!("{json}\n"))
    } else {
        println!("{json}");
        let failure = out.failure.expect("failure recorded");
        Err(CmdError::verification(format!(
            "suite {} failed at index {}: expected {}, got {}",
            failure.suite, failure.index, failure.expected, failure.actual
        )))
    }
}

fn engine_err(index: u64, err: fibpascal::Error) -> (u64, SuiteFailure) {
    (
        0,
        SuiteFailure {
            index,
            expected: "exact value".into(),
            actual: err.to_string(),
        },
    )
}

fn suite_engine_agreement(max: u64) -> SuiteResult {
    let mut passed = 0;
    for m in 1..=max {
        let oracle = fib(m, FibMethod::Recurrence).map_err(|e| engine_err(m, e))?;
        for method in FibMethod::ALL {
            let value = fib(m, method).map_err(|e| engine_err(m, e))?;
            if value != oracle {
                return Err((
                    passed,
                    SuiteFailure {
                        index: m,
                        expected: oracle.to_string(),
                        actual: format!("{value} ({method})"),
                    },
                ));
            }
        }
        passed += 1;
    }
    Ok(passed)
}

fn suite_reversal_symmetry(max: u64) -> SuiteResult {
    let mut passed = 0;
    for k in 0..=max {
        if !check_reversal_symmetry(k) {
            return Err((
                passed,
                SuiteFailure {
                    index: k,
                    expected: "equal basis sums".into(),
                    actual: "unequal basis sums".into(),
                },
            ));
        }
        passed += 1;
    }
    Ok(passed)
}

fn suite_pattern_evaluation(max: u64) -> SuiteResult {
    let mut passed = 0;
    for k in 0..=max {
        let value = evaluate_pattern(&synthesize_pattern(k)).map_err(|e| engine_err(k, e))?;
        let oracle = fib_doubling(k + 1).map_err(|e| engine_err(k, e))?;
        if value != oracle {
            return Err((
                passed,
                SuiteFailure { index: k, expected: oracle.to_string(), actual: value.to_string() },
            ));
        }
        passed += 1;
    }
    Ok(passed)
}

fn suite_pattern_formula_equivalence(max: u64) -> SuiteResult {
    let mut passed = 0;
    for k in 0..=max {
        let pattern_value =
            evaluate_pattern(&synthesize_pattern(k)).map_err(|e| engine_err(k, e))?;
        let formula_value = fib_novel(k + 1).map_err(|e| engine_err(k, e))?;
        if pattern_value != formula_value {
            return Err((
                passed,
                SuiteFailure {
                    index: k,
                    expected: formula_value.to_string(),
                    actual: pattern_value.to_string(),
                },
            ));
        }
        passed += 1;
    }
    Ok(passed)
}

fn suite_pascal_reduction(max: u64) -> SuiteResult {
    let mut passed = 0;
    for (k, row) in rows().take((max + 1) as usize).enumerate() {
        let k = k as u64;
        let reduced = fibpascal::reduce_to_row(&synthesize_pattern(k));
        let value = reduced.dot_value(&row).map_err(|e| engine_err(k, e))?;
        let oracle = fib_doubling(k + 1).map_err(|e| engine_err(k, e))?;
        if value != oracle {
            return Err((
                passed,
                SuiteFailure { index: k, expected: oracle.to_string(), actual: value.to_string() },
            ));
        }
        passed += 1;
    }
    Ok(passed)
}

fn suite_binet_cosine(max: u64) -> SuiteResult {
    let report = check_binet_from_cosine(1, max).map_err(|e| engine_err(0, e))?;
    match report.first_mismatch {
        None => Ok(report.checked),
        Some((m, binet, cosine)) => Err((
            report.checked - 1,
            SuiteFailure { index: m, expected: binet.to_string(), actual: cosine.to_string() },
        )),
    }
}

fn suite_derivation(max: u64) -> SuiteResult {
    let mut passed = 0;
    for (n, row) in rows().take((max + 1) as usize).enumerate().skip(1) {
        let m = n as u64;
        let derived = derive_identity(m).map_err(|e| engine_err(m, e))?;
        let value = derived.dot_value(&row).map_err(|e| engine_err(m, e))?;
        let oracle = fib_doubling(m).map_err(|e| engine_err(m, e))?;
        if value != oracle {
            return Err((
                passed,
                SuiteFailure { index: m, expected: oracle.to_string(), actual: value.to_string() },
            ));
        }
        passed += 1;
    }
    Ok(passed)
}
