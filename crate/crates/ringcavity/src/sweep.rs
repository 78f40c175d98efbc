//! One-dimensional parameter sweeps: substitute each grid value into a base
//! parameter set, solve for the steady state, and evaluate the requested
//! entanglement quantities. Grid points are independent and evaluated in
//! parallel; results are merged in grid order so output is deterministic.

use rayon::prelude::*;

use crate::entanglement::{
    clip_noise, log_negativity_one_vs_two, log_negativity_pair, tripartite_negativity, Mode,
    ModePartition, REPORT_PAIRS, REPORT_TRIPLES,
};
use crate::error::{Error, Result};
use crate::linalg::{solve_lyapunov, stability};
use crate::model::build_system;
use crate::params::PhysicalParams;

/// The parameter a sweep varies. Axis values are in the parameter's native
/// SI units (kelvin, watts, rad/s, radians); `Delta_a` may instead be swept
/// in units of ω_m via [`SweepSpec::normalize_axis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    /// Bath temperature `T` (K).
    T,
    /// Squeezing strength `r` (dimensionless).
    R,
    /// Pump power `P` (W).
    P,
    /// Atomic detuning `Delta_a` (rad/s, or units of ω_m when normalized).
    DeltaA,
    /// Atom-field coupling `G_a` (rad/s).
    GA,
    /// Cavity detuning `Delta` (rad/s).
    Delta,
    /// Mirror opening angle `theta` (rad).
    Theta,
    /// Squeezing phase `phi` (rad).
    Phi,
}

impl SweepAxis {
    pub const ALL: [SweepAxis; 8] = [
        SweepAxis::T,
        SweepAxis::R,
        SweepAxis::P,
        SweepAxis::DeltaA,
        SweepAxis::GA,
        SweepAxis::Delta,
        SweepAxis::Theta,
        SweepAxis::Phi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepAxis::T => "T",
            SweepAxis::R => "r",
            SweepAxis::P => "P",
            SweepAxis::DeltaA => "Delta_a",
            SweepAxis::GA => "G_a",
            SweepAxis::Delta => "Delta",
            SweepAxis::Theta => "theta",
            SweepAxis::Phi => "phi",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidAxis(s.to_string()))
    }
}

/// Grid spacing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepScale {
    Linear,
    Logarithmic,
}

/// An entanglement quantity a sweep can evaluate, identified by a fixed
/// label (`E_m1_a`, `T_am1op`, `E_a_vs_m1op`, …) in CSV headers and configs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    /// Pairwise logarithmic negativity, label `E_<a>_<b>`.
    Pair(Mode, Mode),
    /// One-vs-two logarithmic negativity, label `E_<single>_vs_<b><c>`.
    OneVsTwo { single: Mode, rest: (Mode, Mode) },
    /// Tripartite negativity, label `T_<a><b><c>`.
    Triple(Mode, Mode, Mode),
}

impl Quantity {
    pub fn label(&self) -> String {
        match *self {
            Quantity::Pair(a, b) => format!("E_{}_{}", a.label(), b.label()),
            Quantity::OneVsTwo { single, rest } => {
                format!("E_{}_vs_{}{}", single.label(), rest.0.label(), rest.1.label())
            }
            Quantity::Triple(a, b, c) => {
                format!("T_{}{}{}", a.label(), b.label(), c.label())
            }
        }
    }

    /// Inverse of [`Quantity::label`] over all distinct mode selections.
    pub fn parse(s: &str) -> Result<Self> {
        for a in Mode::ALL {
            for b in Mode::ALL {
                if a == b {
                    continue;
                }
                let q = Quantity::Pair(a, b);
                if q.label() == s {
                    return Ok(q);
                }
                for c in Mode::ALL {
                    if c == a || c == b {
                        continue;
                    }
                    for q in [
                        Quantity::Triple(a, b, c),
                        Quantity::OneVsTwo { single: a, rest: (b, c) },
                    ] {
                        if q.label() == s {
                            return Ok(q);
                        }
                    }
                }
            }
        }
        Err(Error::InvalidQuantity(s.to_string()))
    }

    /// The canonical reporting set: all 6 pairs and all 4 triple labels.
    pub fn all_reported() -> Vec<Quantity> {
        let mut out: Vec<Quantity> = REPORT_PAIRS
            .iter()
            .map(|&(a, b)| Quantity::Pair(a, b))
            .collect();
        out.extend(
            REPORT_TRIPLES
                .iter()
                .map(|&(a, b, c)| Quantity::Triple(a, b, c)),
        );
        out
    }

    fn evaluate(&self, v: &crate::linalg::CovarianceMatrix) -> Result<f64> {
        let value = match *self {
            Quantity::Pair(a, b) => {
                log_negativity_pair(v, ModePartition::pair(a, b)?)?.value
            }
            Quantity::OneVsTwo { single, rest } => {
                log_negativity_one_vs_two(v, ModePartition::one_vs_two(single, rest.0, rest.1)?)?
                    .value
            }
            Quantity::Triple(a, b, c) => {
                tripartite_negativity(v, ModePartition::tripartite(a, b, c)?)?.value
            }
        };
        Ok(clip_noise(value))
    }
}

/// A one-dimensional sweep over a single parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub base: PhysicalParams,
    pub axis: SweepAxis,
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub scale: SweepScale,
    pub quantities: Vec<Quantity>,
    /// Interpret axis values as multiples of ω_m (Delta_a only).
    pub normalize_axis: bool,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |reason: String| Error::Config(reason);
        if !(self.min.is_finite() && self.max.is_finite()) {
            return Err(bad("sweep bounds must be finite".into()));
        }
        if self.min >= self.max {
            return Err(bad(format!(
                "sweep_min ({}) must be below sweep_max ({})",
                self.min, self.max
            )));
        }
        if self.count < 2 {
            return Err(bad(format!(
                "sweep_count must be at least 2, got {}",
                self.count
            )));
        }
        if self.scale == SweepScale::Logarithmic && self.min <= 0.0 {
            return Err(bad(format!(
                "logarithmic sweep requires sweep_min > 0, got {}",
                self.min
            )));
        }
        if self.normalize_axis && self.axis != SweepAxis::DeltaA {
            return Err(bad(format!(
                "normalize_axis applies only to the Delta_a axis, not {}",
                self.axis.name()
            )));
        }
        if self.quantities.is_empty() {
            return Err(bad("sweep_quantities must name at least one quantity".into()));
        }
        Ok(())
    }

    /// The full grid, from integer indices in closed form — no accumulated
    /// floating-point increments, so endpoints and rerun determinism are
    /// exact.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.count;
        (0..n)
            .map(|k| {
                let frac = k as f64 / (n - 1) as f64;
                match self.scale {
                    SweepScale::Linear => self.min + (self.max - self.min) * frac,
                    SweepScale::Logarithmic => {
                        (self.min.ln() + (self.max.ln() - self.min.ln()) * frac).exp()
                    }
                }
            })
            .collect()
    }

    /// Base parameters with the axis value substituted in.
    fn at(&self, axis_value: f64) -> PhysicalParams {
        let mut p = self.base;
        match self.axis {
            SweepAxis::T => p.temperature = axis_value,
            SweepAxis::R => p.squeeze_r = axis_value,
            SweepAxis::P => p.pump_power = axis_value,
            SweepAxis::DeltaA => {
                p.delta_a = if self.normalize_axis {
                    axis_value * p.omega_m
                } else {
                    axis_value
                }
            }
            SweepAxis::GA => p.g_a = axis_value,
            SweepAxis::Delta => p.delta = axis_value,
            SweepAxis::Theta => p.theta = axis_value,
            SweepAxis::Phi => p.squeeze_phi = axis_value,
        }
        p
    }
}

/// One evaluated grid point. `values` is aligned with the spec's quantity
/// list and present exactly when the point is dynamically stable.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub axis_value: f64,
    pub stable: bool,
    pub values: Option<Vec<f64>>,
}

fn evaluate_point(spec: &SweepSpec, axis_value: f64) -> Result<SweepRow> {
    let attach = |source: Error| Error::SweepPoint {
        axis_value,
        source: Box::new(source),
    };
    let p = spec.at(axis_value);
    p.validate().map_err(attach)?;
    let (_, drift, diffusion) = build_system(&p).map_err(attach)?;
    if !stability(&drift.a).map_err(attach)?.stable {
        return Ok(SweepRow {
            axis_value,
            stable: false,
            values: None,
        });
    }
    let v = solve_lyapunov(&drift.a, &diffusion.d).map_err(attach)?;
    let values = spec
        .quantities
        .iter()
        .map(|q| q.evaluate(&v).map_err(attach))
        .collect::<Result<Vec<f64>>>()?;
    Ok(SweepRow {
        axis_value,
        stable: true,
        values: Some(values),
    })
}

/// Evaluate the sweep. Unstable grid points come back flagged rather than
/// failing the run; parameter-validation and numerical errors abort with the
/// offending axis value attached.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let grid = spec.grid();
    let rows: Vec<Result<SweepRow>> = grid
        .par_iter()
        .map(|&x| evaluate_point(spec, x))
        .collect();
    rows.into_iter().collect()
}
