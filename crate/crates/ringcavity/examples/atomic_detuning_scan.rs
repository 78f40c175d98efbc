//! Where in atomic detuning the tripartite correlations live: scan Δ_a in
//! units of the mechanical frequency and track the two mixed tripartite
//! measures, printing the location and height of their maxima.

use ringcavity::config::default_config;
use ringcavity::entanglement::Mode;
use ringcavity::sweep::{run_sweep, Quantity, SweepAxis, SweepScale, SweepSpec};

fn main() -> ringcavity::Result<()> {
    let mut base = default_config()?.params;
    base.pump_power = 10e-3;
    base.squeeze_r = 0.1;
    base.temperature = 1e-4;

    let spec = SweepSpec {
        base,
        axis: SweepAxis::DeltaA,
        min: -2.0,
        max: 2.0,
        count: 81,
        scale: SweepScale::Linear,
        quantities: vec![
            Quantity::Triple(Mode::M1, Mode::M2, Mode::A),
            Quantity::Triple(Mode::A, Mode::M1, Mode::Op),
        ],
        // axis values are multiples of omega_m
        normalize_axis: true,
    };

    println!(
        "{:>10}  {:>10}  {:>10}",
        "Delta_a/wm", "T_m1m2a", "T_am1op"
    );
    let rows = run_sweep(&spec)?;
    for row in &rows {
        match &row.values {
            Some(v) => println!("{:>10.3}  {:>10.6}  {:>10.6}", row.axis_value, v[0], v[1]),
            None => println!("{:>10.3}  (unstable)", row.axis_value),
        }
    }

    for (idx, label) in [(0, "T_m1m2a"), (1, "T_am1op")] {
        let peak = rows
            .iter()
            .filter_map(|r| r.values.as_ref().map(|v| (r.axis_value, v[idx])))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("at least one stable grid point");
        println!(
            "{label} peaks at Delta_a = {:.3} omega_m with value {:.6}",
            peak.0, peak.1
        );
    }
    Ok(())
}
