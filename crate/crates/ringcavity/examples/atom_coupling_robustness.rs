//! Stronger atom-field coupling extends how far in temperature the
//! tripartite correlations persist: repeat a temperature sweep at three
//! couplings and compare the survival points.

use std::f64::consts::PI;

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
    base.squeeze_r = 0.6;

    for g_a_mhz in [4.0, 8.0, 12.0] {
        base.g_a = g_a_mhz * PI * 1e6;
        let spec = SweepSpec {
            base,
            axis: SweepAxis::T,
            min: 1e-5,
            max: 3e-3,
            count: 150,
            scale: SweepScale::Linear,
            quantities: vec![
                Quantity::Triple(Mode::A, Mode::M1, Mode::Op),
                Quantity::Triple(Mode::M1, Mode::M2, Mode::A),
            ],
            normalize_axis: false,
        };
        let rows = run_sweep(&spec)?;
        println!("G_a = {g_a_mhz}pi MHz:");
        for (idx, label) in [(0, "T_am1op"), (1, "T_m1m2a")] {
            let curve: Vec<(f64, f64)> = rows
                .iter()
                .filter_map(|r| r.values.as_ref().map(|v| (r.axis_value, v[idx])))
                .collect();
            println!("  {label} at T = 1e-5 K: {:.6}", curve[0].1);
            let peak = curve
                .iter()
                .copied()
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .expect("at least one stable grid point");
            match survival_temperature(&curve) {
                Some(t) => println!("  {label} survives up to T ~ {:.3e} K", t),
                None if peak.1 == 0.0 => {
                    println!("  {label} is zero over the whole range")
                }
                None => println!("  {label} still finite at T = 3e-3 K"),
            }
        }
    }
    Ok(())
}
