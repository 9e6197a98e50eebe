//! Command-line front end: certify solution-curve prefixes, expand
//! branches, compute degree/Noether bounds, and run job batches.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use curvecert::{parse_rat, Verdict};
use curvecert_cli::{report, text};

use report::{BatchEntry, BatchReport, BatchSummary, Manifest, SystemFile, SCHEMA};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(
    name = "curvecert",
    version,
    about = "Certify non-isolated polynomial-system solutions from truncated Puiseux data"
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Seed reserved for randomized property harnesses; certification
    /// itself is deterministic and ignores it.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the certificates for one job file.
    Certify {
        /// Path to a job JSON file.
        job: PathBuf,
    },
    /// Expand the branches of a plane curve at a point.
    Expand {
        /// Polynomial expression, e.g. "x2^2 - x1^3".
        #[arg(long)]
        poly: String,
        /// Comma-separated variable names; the first is the parameter.
        #[arg(long, default_value = "x1,x2")]
        vars: String,
        /// Expansion center xi1 (rational, `p` or `p/q`).
        #[arg(long, default_value = "0")]
        center: String,
        /// Fiber coordinate y0 with q(center, y0) = 0.
        #[arg(long, default_value = "0")]
        y0: String,
        /// Required residual order of every returned branch.
        #[arg(long)]
        precision: String,
        /// Recursion cap for non-squarefree pathologies.
        #[arg(long, default_value_t = 64)]
        max_depth: usize,
    },
    /// Compute all applicable Noether/degree upper bounds for a system.
    Bounds {
        /// Path to a system JSON file ({schema, variables, system}).
        system: PathBuf,
    },
    /// Run every job in a manifest or directory.
    Batch {
        /// Manifest JSON ({schema, jobs: [{name, path}]}) or a
        /// directory of *.json job files.
        manifest: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    };
    ExitCode::from(code as u8)
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Certify { job } => {
            let started = std::time::Instant::now();
            let report = report::run_job_file(job)?;
            emit(cli.format, &report, text::certify_text)?;
            note_timing(cli.format, started);
            Ok(report.verdict.exit_code())
        }
        Command::Expand {
            poly,
            vars,
            center,
            y0,
            precision,
            max_depth,
        } => {
            let started = std::time::Instant::now();
            let variables: Vec<String> =
                vars.split(',').map(|s| s.trim().to_string()).collect();
            let center = parse_rat(center).context("--center")?;
            let y0 = parse_rat(y0).context("--y0")?;
            let precision = parse_rat(precision).context("--precision")?;
            let report = report::expand_pipeline(
                poly, &variables, &center, &y0, &precision, *max_depth,
            )?;
            emit(cli.format, &report, text::expand_text)?;
            note_timing(cli.format, started);
            Ok(0)
        }
        Command::Bounds { system } => {
            let started = std::time::Instant::now();
            let raw = std::fs::read(system)
                .with_context(|| format!("reading system file {}", system.display()))?;
            let file: SystemFile =
                serde_json::from_slice(&raw).context("malformed system JSON")?;
            let report = report::bounds_pipeline(&raw, &file)?;
            emit(cli.format, &report, text::bounds_text)?;
            note_timing(cli.format, started);
            Ok(0)
        }
        Command::Batch { manifest } => {
            let started = std::time::Instant::now();
            let report = run_batch(manifest)?;
            let had_errors = report.summary.errors > 0;
            emit(cli.format, &report, text::batch_text)?;
            note_timing(cli.format, started);
            Ok(if had_errors { 1 } else { 0 })
        }
    }
}

fn emit<T: serde::Serialize>(
    format: Format,
    report: &T,
    render: impl Fn(&T) -> String,
) -> Result<()> {
    match format {
        Format::Json => {
            let json = serde_json::to_string_pretty(report).context("serializing report")?;
            println!("{json}");
        }
        Format::Text => {
            println!("{}", render(report));
        }
    }
    Ok(())
}

fn note_timing(format: Format, started: std::time::Instant) {
    // Timing stays out of the JSON payload so reports are byte-stable.
    if format == Format::Text {
        eprintln!("elapsed: {:?}", started.elapsed());
    }
}

/// Jobs named by a manifest or discovered in a directory, run in
/// parallel with deterministic name-ordered output.
fn run_batch(path: &Path) -> Result<BatchReport> {
    let mut entries: Vec<(String, PathBuf)> = Vec::new();
    if path.is_dir() {
        for entry in std::fs::read_dir(path)
            .with_context(|| format!("reading directory {}", path.display()))?
        {
            let entry = entry?;
            let p = entry.path();
            if p.extension().is_some_and(|e| e == "json") {
                let name = p
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| p.display().to_string());
                entries.push((name, p));
            }
        }
    } else {
        let raw = std::fs::read(path)
            .with_context(|| format!("reading manifest {}", path.display()))?;
        let manifest: Manifest =
            serde_json::from_slice(&raw).context("malformed manifest JSON")?;
        if manifest.schema != SCHEMA {
            anyhow::bail!("unsupported schema {:?} (expected \"1\")", manifest.schema);
        }
        let base = path.parent().unwrap_or(Path::new("."));
        for job in manifest.jobs {
            entries.push((job.name, base.join(job.path)));
        }
    }
    entries.sort_by(|(a, _), (b, _)| a.cmp(b));

    let mut results: Vec<BatchEntry> = entries
        .par_iter()
        .map(|(name, job_path)| match report::run_job_file(job_path) {
            Ok(report) => BatchEntry {
                name: name.clone(),
                status: "ok".to_string(),
                verdict: Some(report.verdict),
                error: None,
                report: Some(report),
            },
            Err(err) => BatchEntry {
                name: name.clone(),
                status: "error".to_string(),
                verdict: None,
                error: Some(format!("{err:#}")),
                report: None,
            },
        })
        .collect();
    results.sort_by(|a, b| a.name.cmp(&b.name));

    let mut summary = BatchSummary {
        total: results.len(),
        ..BatchSummary::default()
    };
    for r in &results {
        match r.verdict {
            Some(Verdict::Certified) => summary.certified += 1,
            Some(Verdict::Inconclusive) => summary.inconclusive += 1,
            Some(Verdict::PreconditionViolated) => summary.precondition_violated += 1,
            None => summary.errors += 1,
        }
    }
    Ok(BatchReport {
        schema: SCHEMA.to_string(),
        command: "batch".to_string(),
        jobs: results,
        summary,
    })
}
