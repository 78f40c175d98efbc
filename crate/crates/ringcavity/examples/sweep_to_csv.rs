//! Drive the file-output pipeline from code: parse a sweep configuration,
//! run it, and write the CSV plus its reproduction manifest exactly as the
//! command-line `sweep` subcommand would.

use ringcavity::config::parse_config;
use ringcavity::report::{manifest_json, sweep_csv};
use ringcavity::sweep::run_sweep;

const SWEEP_CONFIG: &str = "
temperature_k = 1e-4
sweep_axis = T
sweep_min = 1e-5
sweep_max = 1e-3
sweep_count = 12
sweep_scale = logarithmic
sweep_quantities = E_m1_a, E_m1_op, T_am1op
";

fn main() -> ringcavity::Result<()> {
    let cfg = parse_config(SWEEP_CONFIG)?;
    let spec = cfg.sweep.expect("config declares a sweep");

    let started = std::time::Instant::now();
    let rows = run_sweep(&spec)?;
    let duration_s = started.elapsed().as_secs_f64();

    let out_dir = std::env::temp_dir();
    let csv_path = out_dir.join("ringcavity_sweep.csv");
    let manifest_path = out_dir.join("ringcavity_sweep.manifest.json");
    std::fs::write(&csv_path, sweep_csv(&spec, &rows))?;
    std::fs::write(&manifest_path, manifest_json(&cfg.raw, &spec, duration_s))?;

    println!("wrote {} rows to {}", rows.len(), csv_path.display());
    println!("manifest: {}", manifest_path.display());
    println!("\nfirst lines of the CSV:");
    for line in sweep_csv(&spec, &rows).lines().take(4) {
        println!("  {line}");
    }
    Ok(())
}
