//! Steady-state quantum correlations of a driven ring cavity containing two
//! movable mirrors and an atomic ensemble.
//!
//! The crate maps a set of physical parameters (pump power, mirror mass,
//! mechanical frequency, decay rates, couplings, bath temperature, drive
//! squeezing) to the stationary 8×8 covariance matrix of the fluctuation
//! quadratures (δq₁, δp₁, δq₂, δp₂, δX, δY, δx, δy) — two mechanical modes,
//! the cavity field, and the collective atomic mode — and from it computes
//! bipartite and tripartite logarithmic negativities.
//!
//! Pipeline: [`params::derive`] resolves derived quantities and the
//! steady-state amplitudes, [`model::build_system`] assembles the linearized
//! drift and diffusion matrices, [`linalg::solve_lyapunov`] solves
//! AV + VAᵀ = −D for the covariance matrix, and [`entanglement`] extracts
//! negativities from mode reductions. [`sweep`] evaluates these quantities
//! over one-dimensional parameter grids, and [`cli`]/[`config`]/[`report`]
//! wrap everything in a file-driven command-line interface.
//!
//! ```
//! use ringcavity::config::default_config;
//! use ringcavity::entanglement::{log_negativity_pair, Mode, ModePartition};
//! use ringcavity::linalg::solve_lyapunov;
//! use ringcavity::model::build_system;
//!
//! let params = default_config()?.params;
//! let (_derived, drift, diffusion) = build_system(&params)?;
//! let v = solve_lyapunov(&drift.a, &diffusion.d)?;
//! let pair = ModePartition::pair(Mode::M1, Mode::A)?;
//! let e = log_negativity_pair(&v, pair)?;
//! assert!(e.value > 0.0);
//! # Ok::<(), ringcavity::Error>(())
//! ```

pub mod cli;
pub mod config;
pub mod constants;
pub mod entanglement;
pub mod error;
pub mod linalg;
pub mod model;
pub mod params;
pub mod report;
pub mod sweep;

#[cfg(test)]
pub(crate) mod test_util;

pub use error::{Error, Result};
pub use params::{derive, DerivedParams, PhysicalParams};
