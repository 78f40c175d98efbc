//! How the injected drive squeezing reshapes the steady-state entanglement:
//! sweep the squeezing strength r at fixed temperature and print the
//! mirror-atom, mirror-field, and field-atom negativities side by side.

use ringcavity::config::default_config;
use ringcavity::entanglement::Mode;
use ringcavity::sweep::{run_sweep, Quantity, SweepAxis, SweepScale, SweepSpec};

fn main() -> ringcavity::Result<()> {
    let spec = SweepSpec {
        base: default_config()?.params,
        axis: SweepAxis::R,
        min: 0.0,
        max: 1.2,
        count: 25,
        scale: SweepScale::Linear,
        quantities: vec![
            Quantity::Pair(Mode::M1, Mode::A),
            Quantity::Pair(Mode::M1, Mode::Op),
            Quantity::Pair(Mode::Op, Mode::A),
        ],
        normalize_axis: false,
    };

    println!("{:>8}  {:>10}  {:>10}  {:>10}", "r", "E_m1_a", "E_m1_op", "E_op_a");
    for row in run_sweep(&spec)? {
        match row.values {
            Some(v) => println!(
                "{:>8.3}  {:>10.6}  {:>10.6}  {:>10.6}",
                row.axis_value, v[0], v[1], v[2]
            ),
            None => println!("{:>8.3}  (unstable)", row.axis_value),
        }
    }
    Ok(())
}
