//! Physical input parameters and the derived quantities of the linearized model.
//!
//! All inputs are SI: watts, meters, kilograms, kelvin, rad/s. Unit conversion
//! from lab-friendly units (mW, ng, mm, ...) happens once, in the config layer.

use std::f64::consts::SQRT_2;

use nalgebra::Complex;

use crate::constants::{C_LIGHT, HBAR, K_B};
use crate::error::{Error, Result};

pub type Complex64 = Complex<f64>;

/// Laboratory inputs for the four-mode system: two movable mirrors, the
/// cavity field, and the atomic ensemble.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Pump laser power, W.
    pub pump_power: f64,
    /// Laser wavelength, m.
    pub wavelength: f64,
    /// Mirror effective mass, kg (both mirrors equal).
    pub mass: f64,
    /// Mechanical angular frequency, rad/s (both mirrors equal).
    pub omega_m: f64,
    /// Cavity amplitude decay rate, rad/s.
    pub kappa: f64,
    /// Mechanical damping rate, rad/s.
    pub gamma_m: f64,
    /// Atomic decay rate, rad/s.
    pub gamma_a: f64,
    /// Atom-cavity coupling strength, rad/s.
    pub g_a: f64,
    /// Incidence angle on the movable mirrors, rad.
    pub theta: f64,
    /// Cavity length, m.
    pub length: f64,
    /// Bath temperature, K.
    pub temperature: f64,
    /// Squeezing strength of the optical input, dimensionless.
    pub squeeze_r: f64,
    /// Squeezing phase of the optical input, rad.
    pub squeeze_phi: f64,
    /// Effective cavity detuning, rad/s.
    pub delta: f64,
    /// Atomic detuning, rad/s.
    pub delta_a: f64,
}

impl PhysicalParams {
    /// Check every domain invariant; errors name the offending field.
    pub fn validate(&self) -> Result<()> {
        let checks: [(&'static str, f64); 15] = [
            ("pump_power", self.pump_power),
            ("wavelength", self.wavelength),
            ("mass", self.mass),
            ("omega_m", self.omega_m),
            ("kappa", self.kappa),
            ("gamma_m", self.gamma_m),
            ("gamma_a", self.gamma_a),
            ("g_a", self.g_a),
            ("theta", self.theta),
            ("length", self.length),
            ("temperature", self.temperature),
            ("squeeze_r", self.squeeze_r),
            ("squeeze_phi", self.squeeze_phi),
            ("delta", self.delta),
            ("delta_a", self.delta_a),
        ];
        for (name, v) in checks {
            if !v.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    reason: format!("must be finite, got {v}"),
                });
            }
        }
        let positive: [(&'static str, f64); 7] = [
            ("wavelength", self.wavelength),
            ("mass", self.mass),
            ("omega_m", self.omega_m),
            ("kappa", self.kappa),
            ("gamma_m", self.gamma_m),
            ("gamma_a", self.gamma_a),
            ("length", self.length),
        ];
        for (name, v) in positive {
            if v <= 0.0 {
                return Err(Error::InvalidParameter {
                    name,
                    reason: format!("must be > 0, got {v}"),
                });
            }
        }
        let nonnegative: [(&'static str, f64); 4] = [
            ("pump_power", self.pump_power),
            ("temperature", self.temperature),
            ("squeeze_r", self.squeeze_r),
            ("g_a", self.g_a),
        ];
        for (name, v) in nonnegative {
            if v < 0.0 {
                return Err(Error::InvalidParameter {
                    name,
                    reason: format!("must be >= 0, got {v}"),
                });
            }
        }
        if !(0.0..std::f64::consts::PI).contains(&self.theta) {
            return Err(Error::InvalidParameter {
                name: "theta",
                reason: format!("must satisfy 0 <= theta < pi, got {}", self.theta),
            });
        }
        Ok(())
    }
}

/// Quantities computed once from [`PhysicalParams`] and consumed by the model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    /// Laser angular frequency 2πc/λ, rad/s.
    pub omega_l: f64,
    /// Cavity resonance angular frequency, rad/s. Set equal to `omega_l`:
    /// only the wavelength is known, and the detuning is an independent input.
    pub omega_r: f64,
    /// Drive amplitude √(κP/(ħω_L)), rad/s.
    pub e_l: f64,
    /// Single-photon optomechanical coupling (ω_r/L)√(ħ/(mω_m)), rad/s.
    pub g0: f64,
    /// Geometric factor cos²(θ/2) from the ring geometry, dimensionless.
    pub cos2: f64,
    /// Steady-state intracavity amplitude, dimensionless.
    pub a_s: Complex64,
    /// Effective optomechanical coupling √2·G₀·|a_s|, rad/s. The drive phase
    /// is chosen so the steady amplitude is effectively real, hence |a_s|.
    pub g: f64,
    /// Thermal phonon occupancy of the mechanical baths, dimensionless.
    pub n_th: f64,
    /// Squeezed-bath occupancy N = sinh²r, dimensionless.
    pub squeeze_n: f64,
    /// Squeezed-bath correlation M = sinh r·cosh r·e^{iφ}, dimensionless.
    pub squeeze_m: Complex64,
}

/// Compute every derived quantity. Pure: equal inputs give bitwise-equal outputs.
pub fn derive(p: &PhysicalParams) -> Result<DerivedParams> {
    p.validate()?;
    let omega_l = 2.0 * std::f64::consts::PI * C_LIGHT / p.wavelength;
    let omega_r = omega_l;
    let e_l = (p.kappa * p.pump_power / (HBAR * omega_l)).sqrt();
    let g0 = (omega_r / p.length) * (HBAR / (p.mass * p.omega_m)).sqrt();
    let cos2 = (p.theta / 2.0).cos().powi(2);
    // a_s = E_L / (κ + iΔ + G_a²/(γ_a + iΔ_a))
    let chi_a = Complex64::new(p.gamma_a, p.delta_a);
    let denom = Complex64::new(p.kappa, p.delta) + Complex64::new(p.g_a * p.g_a, 0.0) / chi_a;
    let a_s = Complex64::new(e_l, 0.0) / denom;
    let g = SQRT_2 * g0 * a_s.norm();
    // T = 0 is the n_th = 0 limit; never evaluate the divergent exponential.
    let n_th = if p.temperature == 0.0 {
        0.0
    } else {
        1.0 / (HBAR * p.omega_m / (K_B * p.temperature)).exp_m1()
    };
    let sh = p.squeeze_r.sinh();
    let ch = p.squeeze_r.cosh();
    let squeeze_n = sh * sh;
    let squeeze_m = Complex64::from_polar(sh * ch, p.squeeze_phi);
    Ok(DerivedParams {
        omega_l,
        omega_r,
        e_l,
        g0,
        cos2,
        a_s,
        g,
        n_th,
        squeeze_n,
        squeeze_m,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    // frozen oracle values keep every digit the oracle printed
    #![allow(clippy::excessive_precision)]

    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    // Reference operating point used throughout the test suite: 35 mW pump,
    // 1064 nm, 10 ng mirrors at 2π×10 MHz, millimeter cavity, MHz-scale decay
    // rates, atoms on the lower mechanical sideband.
    pub(crate) fn base() -> PhysicalParams {
        PhysicalParams {
            pump_power: 35e-3,
            wavelength: 1064e-9,
            mass: 10e-12,
            omega_m: 2.0 * PI * 1e7,
            kappa: PI * 1e7,
            gamma_m: 2.0 * PI * 1e2,
            gamma_a: PI * 1e7,
            g_a: 12.0 * PI * 1e6,
            theta: PI / 3.0,
            length: 1e-3,
            temperature: 1e-6,
            squeeze_r: 0.0,
            squeeze_phi: 0.0,
            delta: 2.0 * PI * 1e7,
            delta_a: -2.0 * PI * 1e7,
        }
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn zero_temperature_gives_zero_occupancy() {
        let p = PhysicalParams {
            temperature: 0.0,
            ..base()
        };
        assert_eq!(derive(&p).unwrap().n_th, 0.0);
    }

    #[test]
    fn no_squeezing_gives_zero_bath_moments() {
        let d = derive(&base()).unwrap();
        assert_eq!(d.squeeze_n, 0.0);
        assert_eq!(d.squeeze_m, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn thermal_occupancy_matches_oracle() {
        // independently computed: n_th(ω_m = 2π×10⁷, T = 10⁻⁴ K)
        let p = PhysicalParams {
            temperature: 1e-4,
            ..base()
        };
        let d = derive(&p).unwrap();
        assert!(rel(d.n_th, 0.0083043733888619846) < 1e-12);
    }

    #[test]
    fn single_photon_coupling_matches_oracle() {
        let d = derive(&base()).unwrap();
        assert!(rel(d.g0, 725.28231771859362) < 1e-12);
    }

    #[test]
    fn drive_amplitude_matches_oracle() {
        let d = derive(&base()).unwrap();
        assert!(rel(d.e_l, 2426841463692.335) < 1e-12);
    }

    #[test]
    fn steady_amplitude_and_coupling_match_oracle() {
        let d = derive(&base()).unwrap();
        assert!(rel(d.a_s.re, 11995.149535621293) < 1e-12);
        assert!(rel(d.a_s.im, -23990.299071242585) < 1e-12);
        assert!(rel(d.a_s.norm(), 26821.969761924247) < 1e-12);
        assert!(rel(d.g, 27511404.093824226) < 1e-12);
        assert!(rel(d.g * d.cos2, 20633553.070368174) < 1e-12);
    }

    #[test]
    fn derive_is_pure() {
        let p = PhysicalParams {
            squeeze_r: 0.7,
            squeeze_phi: 1.3,
            temperature: 2.4e-4,
            ..base()
        };
        let a = derive(&p).unwrap();
        let b = derive(&p).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_negative_temperature() {
        let p = PhysicalParams {
            temperature: -1.0,
            ..base()
        };
        let err = derive(&p).unwrap_err();
        assert!(err.to_string().contains("temperature"));
    }

    #[test]
    fn rejects_non_finite_input() {
        let p = PhysicalParams {
            kappa: f64::NAN,
            ..base()
        };
        assert!(derive(&p).is_err());
        let p = PhysicalParams {
            delta: f64::INFINITY,
            ..base()
        };
        assert!(derive(&p).is_err());
    }

    #[test]
    fn rejects_theta_out_of_range() {
        let p = PhysicalParams {
            theta: PI,
            ..base()
        };
        assert!(derive(&p).is_err());
        let p = PhysicalParams {
            theta: -0.1,
            ..base()
        };
        assert!(derive(&p).is_err());
    }

    proptest! {
        #[test]
        fn squeeze_moment_identity(r in 0.0..5.0f64, phi in 0.0..(2.0 * PI)) {
            // |M|² = N(N+1) is an analytic identity of sinh/cosh
            let p = PhysicalParams { squeeze_r: r, squeeze_phi: phi, ..base() };
            let d = derive(&p).unwrap();
            let lhs = d.squeeze_m.norm_sqr();
            let rhs = d.squeeze_n * (d.squeeze_n + 1.0);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1e-300));
        }

        #[test]
        fn decoupled_atoms_reduce_steady_amplitude(
            kappa_scale in 0.1..10.0f64,
            delta_scale in -2.0..2.0f64,
        ) {
            // with G_a = 0 the atomic susceptibility drops out of a_s
            let p = PhysicalParams {
                g_a: 0.0,
                kappa: kappa_scale * PI * 1e7,
                delta: delta_scale * 2.0 * PI * 1e7,
                ..base()
            };
            let d = derive(&p).unwrap();
            let bare = Complex64::new(d.e_l, 0.0) / Complex64::new(p.kappa, p.delta);
            prop_assert!((d.a_s - bare).norm() <= 1e-12 * bare.norm());
        }
    }
}
