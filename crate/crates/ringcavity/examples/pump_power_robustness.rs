//! Pump power buys thermal robustness: at half-resonant cavity detuning,
//! sweep the bath temperature at two drive powers and compare how long the
//! purely mechanical and the atom-mixed tripartite correlations survive.

use ringcavity::config::default_config;
use ringcavity::entanglement::Mode;
use ringcavity::sweep::{run_sweep, Quantity, SweepAxis, SweepScale, SweepSpec};

fn survival_temperature(rows: &[(f64, f64)]) -> Option<f64> {
    rows.windows(2)
        .find(|w| w[0].1 > 0.0 && w[1].1 == 0.0)
        .map(|w| 0.5 * (w[0].0 + w[1].0))
}

fn main() -> ringcavity::Result<()> {
    let mut base = default_config()?.params;
    base.delta = 0.5 * base.omega_m;
    base.squeeze_r = 0.1;

    for power_mw in [5.0, 15.0] {
        base.pump_power = power_mw / 1e3;
        let spec = SweepSpec {
            base,
            axis: SweepAxis::T,
            min: 1e-5,
            max: 2e-3,
            count: 200,
            scale: SweepScale::Linear,
            quantities: vec![
                Quantity::Triple(Mode::M1, Mode::M2, Mode::Op),
                Quantity::Triple(Mode::A, Mode::M1, Mode::Op),
            ],
            normalize_axis: false,
        };
        let rows = run_sweep(&spec)?;
        println!("P = {power_mw} mW:");
        for (idx, label) in [(0, "T_m1m2op"), (1, "T_am1op")] {
            let curve: Vec<(f64, f64)> = rows
                .iter()
                .filter_map(|r| r.values.as_ref().map(|v| (r.axis_value, v[idx])))
                .collect();
            println!("  {label} at T = 1e-5 K: {:.6}", curve[0].1);
            match survival_temperature(&curve) {
                Some(t) => println!("  {label} survives up to T ~ {:.3e} K", t),
                None => println!("  {label} still finite at T = 2e-3 K"),
            }
        }
    }
    Ok(())
}
