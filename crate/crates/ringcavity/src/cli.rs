//! Command-line front end: `point` evaluates one parameter set and prints a
//! report; `sweep` runs a grid and writes CSV/JSON results plus a
//! reproduction manifest.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::config::{default_config, parse_config, RunConfig};
use crate::entanglement::{REPORT_PAIRS, REPORT_TRIPLES};
use crate::error::{Error, Result};
use crate::linalg::{lyapunov_residual, solve_lyapunov, stability, symplectic_eigenvalues};
use crate::model::build_system;
use crate::report::{manifest_json, sweep_csv, sweep_json, PointReport};
use crate::sweep::{run_sweep, Quantity};

/// Success (and a dynamically stable point in `point` mode).
pub const EXIT_OK: i32 = 0;
/// Usage, configuration, or I/O error.
pub const EXIT_USAGE: i32 = 1;
/// `point` mode: the configured operating point is dynamically unstable.
pub const EXIT_UNSTABLE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "ringcavity",
    version,
    about = "Steady-state entanglement of a ring cavity with two movable mirrors and an atomic ensemble"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one parameter set: derived quantities, stability, and all
    /// pairwise/tripartite negativities.
    Point {
        /// Configuration file; omitted means the shipped defaults.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Sweep one parameter over a grid and write results plus a manifest.
    Sweep {
        /// Configuration file with a sweep section.
        #[arg(long)]
        config: PathBuf,
        /// Output file; the manifest lands next to it as <stem>.manifest.json.
        #[arg(long)]
        out: PathBuf,
        /// Output encoding.
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

fn load_config(path: Option<&Path>) -> Result<RunConfig> {
    match path {
        None => default_config(),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::Config(format!("{}: {e}", p.display())))?;
            parse_config(&text)
        }
    }
}

/// Evaluate a point configuration into a rendered report and an exit code
/// (0 stable, 2 unstable).
pub fn run_point(config_path: Option<&Path>) -> Result<(String, i32)> {
    let cfg = load_config(config_path)?;
    if cfg.sweep.is_some() {
        return Err(Error::Config(
            "point mode does not accept sweep keys; use the sweep command".into(),
        ));
    }
    let (derived, drift, diffusion) = build_system(&cfg.params)?;
    let stability_report = stability(&drift.a)?;
    if !stability_report.stable {
        let report = PointReport {
            derived,
            stability: stability_report,
            pairs: None,
            triples: None,
            residual: None,
            min_symplectic: None,
        };
        return Ok((report.render(), EXIT_UNSTABLE));
    }
    let v = solve_lyapunov(&drift.a, &diffusion.d)?;
    let pairs = REPORT_PAIRS
        .iter()
        .map(|&(a, b)| {
            let q = Quantity::Pair(a, b);
            Ok((q.label(), evaluate(&q, &v)?))
        })
        .collect::<Result<Vec<_>>>()?;
    // of the four triple labels, E_a|m1,op and E_a|m2,op coincide by the
    // mechanical symmetry; report the three distinct values
    let triples = [REPORT_TRIPLES[0], REPORT_TRIPLES[1], REPORT_TRIPLES[3]]
        .iter()
        .map(|&(a, b, c)| {
            let q = Quantity::Triple(a, b, c);
            Ok((q.label(), evaluate(&q, &v)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let report = PointReport {
        derived,
        residual: Some(lyapunov_residual(&drift.a, &diffusion.d, &v)),
        min_symplectic: Some(symplectic_eigenvalues(&v)?[0]),
        stability: stability_report,
        pairs: Some(pairs),
        triples: Some(triples),
    };
    Ok((report.render(), EXIT_OK))
}

fn evaluate(q: &Quantity, v: &crate::linalg::CovarianceMatrix) -> Result<f64> {
    use crate::entanglement::{
        log_negativity_pair, tripartite_negativity, ModePartition,
    };
    Ok(match *q {
        Quantity::Pair(a, b) => log_negativity_pair(v, ModePartition::pair(a, b)?)?.value,
        Quantity::Triple(a, b, c) => {
            tripartite_negativity(v, ModePartition::tripartite(a, b, c)?)?.value
        }
        Quantity::OneVsTwo { single, rest } => {
            crate::entanglement::log_negativity_one_vs_two(
                v,
                ModePartition::one_vs_two(single, rest.0, rest.1)?,
            )?
            .value
        }
    })
}

/// Run a sweep configuration and write the results file plus its manifest.
/// Returns a one-line summary for stdout.
pub fn run_sweep_command(
    config_path: &Path,
    out_path: &Path,
    format: OutputFormat,
) -> Result<String> {
    let cfg = load_config(Some(config_path))?;
    let Some(spec) = cfg.sweep else {
        return Err(Error::Config(
            "sweep mode requires sweep keys (sweep_axis, sweep_min, sweep_max, sweep_count)"
                .into(),
        ));
    };
    let started = Instant::now();
    let rows = run_sweep(&spec)?;
    let duration_s = started.elapsed().as_secs_f64();
    let content = match format {
        OutputFormat::Csv => sweep_csv(&spec, &rows),
        OutputFormat::Json => sweep_json(&spec, &rows),
    };
    std::fs::write(out_path, content)
        .map_err(|e| Error::Config(format!("{}: {e}", out_path.display())))?;
    let manifest_path = out_path.with_extension("manifest.json");
    std::fs::write(&manifest_path, manifest_json(&cfg.raw, &spec, duration_s))
        .map_err(|e| Error::Config(format!("{}: {e}", manifest_path.display())))?;
    Ok(format!(
        "wrote {} rows to {} (manifest: {})\n",
        rows.len(),
        out_path.display(),
        manifest_path.display()
    ))
}

/// Full CLI entry point; returns the process exit code. Usage errors exit 1
/// (clap's default usage code is remapped); `--help`/`--version` exit 0.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Point { config } => run_point(config.as_deref()),
        Command::Sweep {
            config,
            out,
            format,
        } => run_sweep_command(&config, &out, format).map(|text| (text, EXIT_OK)),
    };
    match outcome {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
