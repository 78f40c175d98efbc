//! Thermal robustness of the mirror-field entanglement: sweep the bath
//! temperature with and without drive squeezing and report where the
//! negativity dies out.

use ringcavity::config::default_config;
use ringcavity::entanglement::Mode;
use ringcavity::sweep::{run_sweep, Quantity, SweepAxis, SweepScale, SweepSpec};

/// Last grid temperature with a strictly positive value, and the first one
/// where the quantity has collapsed to zero.
fn vanishing_point(rows: &[(f64, f64)]) -> Option<(f64, f64)> {
    rows.windows(2)
        .find(|w| w[0].1 > 0.0 && w[1].1 == 0.0)
        .map(|w| (w[0].0, w[1].0))
}

fn main() -> ringcavity::Result<()> {
    let mut base = default_config()?.params;
    for r in [0.0, 0.1] {
        base.squeeze_r = r;
        let spec = SweepSpec {
            base,
            axis: SweepAxis::T,
            min: 1e-5,
            max: 8e-4,
            count: 80,
            scale: SweepScale::Linear,
            quantities: vec![Quantity::Pair(Mode::M1, Mode::Op)],
            normalize_axis: false,
        };
        let rows: Vec<(f64, f64)> = run_sweep(&spec)?
            .into_iter()
            .filter_map(|row| row.values.map(|v| (row.axis_value, v[0])))
            .collect();

        println!("r = {r}:");
        println!("  E_m1_op at T = 1e-5 K: {:.6}", rows[0].1);
        match vanishing_point(&rows) {
            Some((last, first)) => println!(
                "  vanishes between T = {:.3e} K and T = {:.3e} K",
                last, first
            ),
            None => println!("  still finite at T = 8e-4 K"),
        }
    }
    Ok(())
}
