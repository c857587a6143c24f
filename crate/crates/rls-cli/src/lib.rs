//! Batch driver: parses a run configuration, dispatches one command, and writes
//! CSV tables plus a `manifest.json` into the output directory.
//!
//! Exit codes: 0 success, 1 invalid input, 2 solver failure (near-exceptional
//! energy or numerical breakdown), 3 I/O error.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::Value;

use crate::commands::{run_at, run_scan, CommandKind, Run};
use crate::config::{load_config, LambdaSpec, RunConfig};
use crate::error::CliError;
use crate::output::{num, write_results, Manifest, OutputEntry, Table, SCHEMA_VERSION};

#[derive(Parser, Debug)]
#[command(name = "rls", version, about = "Relativistic Lippmann-Schwinger scattering driver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Run configuration (TOML).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory; overrides `output.dir`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for sweeps; falls back to RLS_THREADS, then `solver.threads`, then 1.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Single energy overriding `solver.lambda`.
    #[arg(long, global = true, allow_negative_numbers = true)]
    lambda: Option<f64>,
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form Green's kernel against the FFT convolution reference.
    KernelCheck,
    /// Solve the modified equation and export φ at the volume nodes.
    Solve,
    /// Scattering-amplitude tables and the far-field check.
    Amplitude,
    /// Energetic S-matrix: spectrum, unitarity defect, Hilbert–Schmidt norm.
    Smatrix,
    /// Amplitudes rebuilt from eigenvalues and eigenvectors of S, against direct values.
    Reconstruct,
    /// Radial phase shifts, partial-wave amplitudes, and comparison with S.
    PartialWave,
    /// Smallest singular value of the system over the λ list.
    ExceptionalScan,
    /// Run a command at every λ of the list, in parallel.
    Sweep {
        #[arg(value_enum)]
        target: CommandKind,
    },
}

fn thread_count(flag: Option<usize>, cfg: &RunConfig) -> Result<usize, CliError> {
    let n = match flag {
        Some(n) => n,
        None => match std::env::var("RLS_THREADS") {
            Ok(v) => v.trim().parse().map_err(|_| CliError::Validation(format!("RLS_THREADS must be a positive integer, got {v:?}")))?,
            Err(_) => cfg.solver.threads.unwrap_or(1),
        },
    };
    if n == 0 {
        return Err(CliError::Validation("thread count must be positive".into()));
    }
    Ok(n)
}

fn suffixed(runs: &mut [Run]) {
    for (i, r) in runs.iter_mut().enumerate() {
        for (name, _) in r.tables.iter_mut() {
            *name = format!("{name}_{i:03}");
        }
    }
}

fn finish_names(runs: &mut [Run]) {
    for r in runs.iter_mut() {
        for (name, _) in r.tables.iter_mut() {
            name.push_str(".csv");
        }
    }
}

fn sweep_summary(runs: &[Run]) -> Table {
    let keys: Vec<String> = runs
        .first()
        .map(|r| r.diagnostics.iter().filter(|(_, v)| v.is_number()).map(|(k, _)| k.clone()).collect())
        .unwrap_or_default();
    let mut header = vec!["lambda".to_string()];
    header.extend(keys.iter().cloned());
    let mut t = Table { header, rows: vec![] };
    for r in runs {
        let mut row = vec![num(r.lambda.unwrap_or(f64::NAN))];
        row.extend(keys.iter().map(|k| match r.diagnostics.get(k) {
            Some(Value::Number(n)) => n.to_string(),
            _ => String::new(),
        }));
        t.push(row);
    }
    t
}

fn execute(cli: Cli) -> Result<(), CliError> {
    let path = cli.config.ok_or_else(|| CliError::Validation("--config PATH is required".into()))?;
    let mut cfg = load_config(&path)?;
    if let Some(l) = cli.lambda {
        cfg.solver.lambda = LambdaSpec::One(l);
        cfg.validate()?;
    }
    let out = cli.out.unwrap_or_else(|| PathBuf::from(&cfg.output.dir));
    let threads = thread_count(cli.threads, &cfg)?;
    let lambdas = cfg.lambdas();
    let verbose = cli.verbose;
    let log = |msg: String| {
        if verbose {
            eprintln!("{msg}");
        }
    };

    let (name, mut runs, summary) = match cli.command {
        Command::ExceptionalScan | Command::Sweep { target: CommandKind::ExceptionalScan } => {
            log(format!("exceptional-scan over {} energies", lambdas.len()));
            ("exceptional-scan".to_string(), vec![run_scan(&cfg, &lambdas)?], None)
        }
        Command::Sweep { target } => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| CliError::Io(e.to_string()))?;
            log(format!("sweep {} over {} energies on {threads} threads", target.name(), lambdas.len()));
            let results: Vec<Result<Run, CliError>> = pool.install(|| {
                lambdas
                    .par_iter()
                    .map(|&l| {
                        let r = run_at(target, &cfg, l);
                        log(format!("  lambda = {l}: {}", if r.is_ok() { "done" } else { "failed" }));
                        r
                    })
                    .collect()
            });
            let mut indexed: Vec<(f64, Result<Run, CliError>)> = lambdas.iter().cloned().zip(results).collect();
            indexed.sort_by(|a, b| a.0.total_cmp(&b.0));
            let mut runs = Vec::with_capacity(indexed.len());
            for (_, r) in indexed {
                runs.push(r?);
            }
            suffixed(&mut runs);
            let summary = sweep_summary(&runs);
            (format!("sweep {}", target.name()), runs, Some(summary))
        }
        other => {
            let kind = match other {
                Command::KernelCheck => CommandKind::KernelCheck,
                Command::Solve => CommandKind::Solve,
                Command::Amplitude => CommandKind::Amplitude,
                Command::Smatrix => CommandKind::Smatrix,
                Command::Reconstruct => CommandKind::Reconstruct,
                _ => CommandKind::PartialWave,
            };
            if lambdas.len() != 1 {
                return Err(CliError::Validation(format!(
                    "{} takes one energy but the config lists {}; use `sweep {}` or --lambda",
                    kind.name(),
                    lambdas.len(),
                    kind.name()
                )));
            }
            log(format!("{} at lambda = {}", kind.name(), lambdas[0]));
            (kind.name().to_string(), vec![run_at(kind, &cfg, lambdas[0])?], None)
        }
    };

    finish_names(&mut runs);
    let mut tables: Vec<(String, Table)> = vec![];
    let mut outputs = vec![];
    let mut diagnostics = BTreeMap::new();
    let mut timings = BTreeMap::new();
    let single = runs.len() == 1;
    for r in runs {
        outputs.push(OutputEntry { lambda: r.lambda, files: r.tables.iter().map(|(n, _)| n.clone()).collect() });
        let key = r.lambda.map(num).unwrap_or_else(|| "scan".into());
        timings.insert(key.clone(), r.seconds);
        if single {
            diagnostics = r.diagnostics;
        } else {
            diagnostics.insert(key, Value::Object(r.diagnostics.into_iter().collect()));
        }
        tables.extend(r.tables);
    }
    if let Some(s) = summary {
        outputs.push(OutputEntry { lambda: None, files: vec!["sweep.csv".into()] });
        tables.push(("sweep.csv".into(), s));
    }
    let manifest = Manifest { schema_version: SCHEMA_VERSION, command: name, config: cfg, outputs, diagnostics, timings_s: timings };
    let paths = write_results(&out, &manifest, &tables)?;
    log(format!("wrote {} files to {}", paths.len(), out.display()));
    Ok(())
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run_command<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
