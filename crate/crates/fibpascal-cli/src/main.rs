//! Command-line front end for the fibpascal library.
//!
//! Exit codes: 0 success, 2 argument/usage error, 3 verification failure.
//! All output is deterministic for identical arguments, except the
//! wall-clock timing column of `bench`.

mod bench;
mod render;
mod verify;

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fibpascal::{
    derivation_pattern_coherence, derive_identity, fib, fib_doubling, pascal_row_with_cap,
    synthesize_pattern, FibMethod,
};

const EXIT_USAGE: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fibpascal",
    about = "Exact Fibonacci identities over Pascal's triangle",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    limits: Limits,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Limits {
    /// Refuse Pascal rows above this index.
    #[arg(long, global = true, default_value_t = 100_000, value_name = "N")]
    max_rows: u64,

    /// Refuse Fibonacci indices above this value.
    #[arg(long, global = true, default_value_t = 1_000_000, value_name = "N")]
    max_index: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one Fibonacci number with a chosen engine (or all seven).
    Fib {
        /// Index m of F_m (1-based, F_1 = F_2 = 1).
        #[arg(long)]
        index: u64,
        /// Engine name, or "all" for one line per engine.
        #[arg(long, default_value = "doubling")]
        method: String,
    },
    /// Run the cross-verification suites up to an index bound.
    Verify {
        /// Largest index/row swept by each suite.
        #[arg(long)]
        max: u64,
    },
    /// Emit the weight pattern for F_{k+1} as JSON or CSV.
    Pattern {
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum)]
        format: PatternFormat,
    },
    /// Draw the classical or novel pattern as ASCII or SVG.
    Render {
        #[arg(long, value_enum)]
        mode: RenderMode,
        /// Pattern target k (novel mode only).
        #[arg(long)]
        k: Option<u64>,
        /// Number of triangle rows to draw.
        #[arg(long)]
        rows: u64,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
        /// Print binomial values inside cells when they fit.
        #[arg(long, default_value_t = false)]
        cell_numbers: bool,
    },
    /// Mechanically derive the row-m binomial identity and report it.
    Derive {
        #[arg(long)]
        m: u64,
    },
    /// Time the engines against each other and emit a CSV report.
    Bench {
        /// Benchmark every index from 1 to this bound.
        #[arg(long)]
        max: u64,
        /// Comma-separated engine names.
        #[arg(long, value_delimiter = ',', default_value = "doubling,novel")]
        methods: Vec<String>,
        /// Timing repetitions per (method, index); the median is reported.
        #[arg(long, default_value_t = 1)]
        reps: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PatternFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderMode {
    Classical,
    Novel,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

/// Failures that map to specific exit codes.
enum CmdError {
    Usage(String),
    Verification(String),
}

impl CmdError {
    fn usage(msg: impl Display) -> Self {
        CmdError::Usage(msg.to_string())
    }

    fn verification(msg: impl Display) -> Self {
        CmdError::Verification(msg.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli.command, &cli.limits);
    match result {
        Ok(output) => {
            if let Err(err) = emit(&output, cli.out.as_deref()) {
                eprintln!("error: {err}");
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::SUCCESS
        }
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CmdError::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_VERIFICATION)
        }
    }
}

fn emit(output: &str, out: Option<&std::path::Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, output),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(output.as_bytes())?;
            lock.flush()
        }
    }
}

fn run(command: &Command, limits: &Limits) -> Result<String, CmdError> {
    match command {
        Command::Fib { index, method } => cmd_fib(*index, method, limits),
        Command::Verify { max } => verify::cmd_verify(*max, limits.max_rows),
        Command::Pattern { k, format } => cmd_pattern(*k, *format, limits),
        Command::Render { mode, k, rows, format, cell_numbers } => {
            let spec = render::RenderSpec::from_args(*mode, *k, *rows, *format, *cell_numbers)?;
            render::cmd_render(&spec, limits.max_rows)
        }
        Command::Derive { m } => cmd_derive(*m, limits),
        Command::Bench { max, methods, reps } => bench::cmd_bench(*max, methods, *reps, limits),
    }
}

fn parse_methods(raw: &[String]) -> Result<Vec<FibMethod>, CmdError> {
    let mut methods = Vec::new();
    for name in raw {
        let method: FibMethod = name
            .parse()
            .map_err(|_| CmdError::usage(format!("unknown method '{name}'")))?;
        if !methods.contains(&method) {
            methods.push(method);
        }
    }
    if methods.is_empty() {
        return Err(CmdError::usage("at least one method is required"));
    }
    Ok(methods)
}

fn check_index(index: u64, limits: &Limits) -> Result<(), CmdError> {
    if index < 1 {
        return Err(CmdError::usage("index must be at least 1"));
    }
    if index > limits.max_index {
        return Err(CmdError::usage(format!(
            "index {index} exceeds --max-index {}",
            limits.max_index
        )));
    }
    Ok(())
}

fn cmd_fib(index: u64, method: &str, limits: &Limits) -> Result<String, CmdError> {
    check_index(index, limits)?;
    if method == "all" {
        let mut lines = String::new();
        let mut values = Vec::new();
        for m in FibMethod::ALL {
            let value = fib(index, m).map_err(CmdError::verification)?;
            lines.push_str(&value.to_string());
            lines.push('\n');
            values.push(value);
        }
        if values.windows(2).any(|w| w[0] != w[1]) {
            // Values are printed before the failure so the disagreement
            // is visible in the output.
            print!("{lines}");
            return Err(CmdError::verification(format!(
                "engines disagree at index {index}"
            )));
        }
        Ok(lines)
    } else {
        let method: FibMethod = method
            .parse()
            .map_err(|_| CmdError::usage(format!("unknown method '{method}'")))?;
        let value = fib(index, method).map_err(CmdError::verification)?;
        Ok(format!("{value}\n"))
    }
}

#[derive(Serialize)]
struct PatternCellOut {
    row: u64,
    col: u64,
    weight: String,
}

#[derive(Serialize)]
struct PatternOut {
    k: u64,
    target_index: u64,
    value: String,
    cells: Vec<PatternCellOut>,
}

fn cmd_pattern(k: u64, format: PatternFormat, limits: &Limits) -> Result<String, CmdError> {
    if k + 1 > limits.max_rows {
        return Err(CmdError::usage(format!(
            "pattern rows {k}..{} exceed --max-rows {}",
            k + 1,
            limits.max_rows
        )));
    }
    let pattern = synthesize_pattern(k);
    let value = fibpascal::evaluate_pattern(&pattern).map_err(CmdError::verification)?;
    match format {
        PatternFormat::Json => {
            let out = PatternOut {
                k,
                target_index: pattern.target_index(),
                value: value.to_string(),
                cells: pattern
                    .cells()
                    .map(|(row, col, w)| PatternCellOut { row, col, weight: w.to_string() })
                    .collect(),
            };
            let json = serde_json::to_string(&out)
                .map_err(|e| CmdError::verification(format!("json encoding failed: {e}")))?;
            Ok(format!("{json}\n"))
        }
        PatternFormat::Csv => {
            let mut out = String::from("row,col,weight\n");
            for (row, col, w) in pattern.cells() {
                out.push_str(&format!("{row},{col},{w}\n"));
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct DeriveOut {
    m: u64,
    row: u64,
    coefficients: Vec<String>,
    value: String,
    oracle: String,
    soundness: String,
    coherence: String,
}

fn cmd_derive(m: u64, limits: &Limits) -> Result<String, CmdError> {
    check_index(m, limits)?;
    if m > limits.max_rows {
        return Err(CmdError::usage(format!(
            "derivation row {m} exceeds --max-rows {}",
            limits.max_rows
        )));
    }
    let derived = derive_identity(m).map_err(CmdError::verification)?;
    let row = pascal_row_with_cap(m, limits.max_rows).map_err(CmdError::usage)?;
    let value = derived.dot_value(&row).map_err(CmdError::verification)?;
    let oracle = fib_doubling(m).map_err(CmdError::verification)?;
    let sound = value == oracle;
    let coherence = derivation_pattern_coherence(m).map_err(CmdError::verification)?;
    let out = DeriveOut {
        m,
        row: derived.row(),
        coefficients: derived.coeffs().iter().map(|c| c.to_string()).collect(),
        value: value.to_string(),
        oracle: oracle.to_string(),
        soundness: if sound { "pass".into() } else { "fail".into() },
        coherence: if coherence.coefficients_equal {
            "coefficients_equal".into()
        } else if coherence.value_equal {
            "value_equal_coefficients_differ".into()
        } else {
            "value_mismatch".into()
        },
    };
    let json = serde_json::to_string(&out)
        .map_err(|e| CmdError::verification(format!("json encoding failed: {e}")))?;
    if !sound || !coherence.value_equal {
        println!("{json}");
        return Err(CmdError::verification(format!(
            "derivation soundness failed at m={m}: derived {value}, oracle {oracle}"
        )));
    }
    Ok(format!("{json}\n"))
}
