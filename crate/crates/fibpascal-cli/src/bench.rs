//! The `bench` subcommand: wall-clock comparison of the engines as
//! algorithms, with value agreement asserted before any timing is
//! reported. Correctness precedes performance: a digest disagreement
//! aborts with exit code 3.

use std::time::Instant;

use fibpascal::{fib, BigInt, FibMethod};

use crate::{parse_methods, CmdError, Limits};

pub fn cmd_bench(
    max: u64,
    method_names: &[String],
    reps: u64,
    limits: &Limits,
) -> Result<String, CmdError> {
    if max < 1 {
        return Err(CmdError::usage("--max must be at least 1"));
    }
    if reps < 1 {
        return Err(CmdError::usage("--reps must be at least 1"));
    }
    if max > limits.max_index {
        return Err(CmdError::usage(format!(
            "--max {max} exceeds --max-index {}",
            limits.max_index
        )));
    }
    let methods = parse_methods(method_names)?;

    let mut out = String::from("method,index,ns_median,digits,digest\n");
    for index in 1..=max {
        let mut records: Vec<BenchRecord> = Vec::with_capacity(methods.len());
        for &method in &methods {
            records.push(BenchRecord::measure(method, index, reps)?);
        }
        // Agreement across methods comes before any timing is reported.
        let (ref_digits, ref_digest) = (records[0].digits, records[0].digest.clone());
        for record in &mut records {
            record.agree = record.digits == ref_digits && record.digest == ref_digest;
        }
        if let Some(bad) = records.iter().find(|r| !r.agree) {
            return Err(CmdError::verification(format!(
                "digest disagreement at index {index}: {} gave {}, {} gave {}",
                records[0].method, ref_digest, bad.method, bad.digest,
            )));
        }
        for record in &records {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                record.method, record.index, record.ns_median, record.digits, record.digest
            ));
        }
    }
    Ok(out)
}

/// One measured (method, index) sample of the benchmark report.
struct BenchRecord {
    method: FibMethod,
    index: u64,
    ns_median: u128,
    digits: usize,
    digest: String,
    agree: bool,
}

impl BenchRecord {
    fn measure(method: FibMethod, index: u64, reps: u64) -> Result<Self, CmdError> {
        let mut times: Vec<u128> = Vec::with_capacity(reps as usize);
        let mut value: Option<BigInt> = None;
        for _ in 0..reps {
            let start = Instant::now();
            let v = fib(index, method).map_err(CmdError::verification)?;
            times.push(start.elapsed().as_nanos());
            value.get_or_insert(v);
        }
        times.sort_unstable();
        let ns_median = times[times.len() / 2];
        let value = value.expect("at least one rep ran");
        Ok(BenchRecord {
            method,
            index,
            ns_median,
            digits: value.to_string().len(),
            digest: digest(&value),
            agree: false,
        })
    }
}

/// Compact value fingerprint: the full decimal when short, otherwise the
/// first and last eight digits. Together with the digit count this still
/// catches disagreements at large indices without megabyte CSV rows.
fn digest(value: &BigInt) -> String {
    let decimal = value.to_string();
    if decimal.len() <= 16 {
        decimal
    } else {
        format!("{}..{}", &decimal[..8], &decimal[decimal.len() - 8..])
    }
}
