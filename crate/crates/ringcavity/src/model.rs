//! Linearized dynamics: drift matrix A, diffusion matrix D, and the classical
//! steady state, in the quadrature basis (δq₁, δp₁, δq₂, δp₂, δX, δY, δx, δy).
//!
//! Entries are SI angular frequencies (rad/s); 8×8 problems need no
//! nondimensionalization for conditioning at these magnitudes.

use nalgebra::DMatrix;

use crate::error::Result;
use crate::params::{derive, Complex64, DerivedParams, PhysicalParams};

/// Dimension of the fluctuation state: 4 modes × 2 quadratures.
pub const DIM: usize = 8;

/// Drift matrix of u̇ = Au + n, 8×8, rad/s.
#[derive(Debug, Clone, PartialEq)]
pub struct DriftMatrix {
    pub a: DMatrix<f64>,
}

/// Diffusion (noise-correlation) matrix of the Lyapunov equation, 8×8, rad/s.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffusionMatrix {
    pub d: DMatrix<f64>,
}

/// Classical steady-state amplitudes around which the dynamics is linearized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    /// Mirror 1 position, dimensionless quadrature units.
    pub q1: f64,
    /// Mirror 1 momentum (zero in steady state).
    pub p1: f64,
    /// Mirror 2 position; equals −q1 by mirror antisymmetry.
    pub q2: f64,
    /// Mirror 2 momentum (zero in steady state).
    pub p2: f64,
    /// Atomic mode amplitude.
    pub c: Complex64,
    /// Intracavity field amplitude.
    pub a: Complex64,
}

/// Build the drift matrix.
///
/// Layout (g ≡ G·cos²(θ/2), all rates rad/s):
///
/// ```text
///      q₁    p₁    q₂    p₂    X     Y     x     y
/// q₁ [  0    ω_m    0     0     0     0     0     0 ]
/// p₁ [ −ω_m −γ_m    0     0    −g     0     0     0 ]
/// q₂ [  0     0     0    ω_m    0     0     0     0 ]
/// p₂ [  0     0   −ω_m  −γ_m    g     0     0     0 ]
/// X  [  0     0     0     0    −κ     Δ     0    G_a]
/// Y  [ −g     0     g     0    −Δ    −κ   −G_a    0 ]
/// x  [  0     0     0     0     0    G_a  −γ_a   Δ_a]
/// y  [  0     0     0     0   −G_a    0   −Δ_a  −γ_a]
/// ```
///
/// The two mirrors see the radiation pressure with opposite signs (ring
/// geometry), which is why the relative mechanical mode couples to light
/// while the center of mass decouples.
pub fn build_drift(p: &PhysicalParams, d: &DerivedParams) -> DriftMatrix {
    let g = d.g * d.cos2;
    let mut a = DMatrix::<f64>::zeros(DIM, DIM);
    a[(0, 1)] = p.omega_m;
    a[(1, 0)] = -p.omega_m;
    a[(1, 1)] = -p.gamma_m;
    a[(1, 4)] = -g;
    a[(2, 3)] = p.omega_m;
    a[(3, 2)] = -p.omega_m;
    a[(3, 3)] = -p.gamma_m;
    a[(3, 4)] = g;
    a[(4, 4)] = -p.kappa;
    a[(4, 5)] = p.delta;
    a[(4, 7)] = p.g_a;
    a[(5, 0)] = -g;
    a[(5, 2)] = g;
    a[(5, 4)] = -p.delta;
    a[(5, 5)] = -p.kappa;
    a[(5, 6)] = -p.g_a;
    a[(6, 5)] = p.g_a;
    a[(6, 6)] = -p.gamma_a;
    a[(6, 7)] = p.delta_a;
    a[(7, 4)] = -p.g_a;
    a[(7, 6)] = -p.delta_a;
    a[(7, 7)] = -p.gamma_a;
    DriftMatrix { a }
}

/// Build the diffusion matrix.
///
/// Mechanical momenta carry thermal noise γ_m(2n_th+1); the optical block
/// carries the squeezed-input correlators through N and M; the atomic block
/// is vacuum noise γ_a. Positions (q₁, q₂) are noiseless.
pub fn build_diffusion(p: &PhysicalParams, d: &DerivedParams) -> DiffusionMatrix {
    let mut m = DMatrix::<f64>::zeros(DIM, DIM);
    let mech = p.gamma_m * (2.0 * d.n_th + 1.0);
    m[(1, 1)] = mech;
    m[(3, 3)] = mech;
    m[(4, 4)] = 2.0 * p.kappa * (d.squeeze_m.re + d.squeeze_n + 0.5);
    m[(4, 5)] = 2.0 * p.kappa * d.squeeze_m.im;
    m[(5, 4)] = m[(4, 5)];
    m[(5, 5)] = 2.0 * p.kappa * (-d.squeeze_m.re + d.squeeze_n + 0.5);
    m[(6, 6)] = p.gamma_a;
    m[(7, 7)] = p.gamma_a;
    DiffusionMatrix { d: m }
}

/// Closed-form steady state. The radiation-pressure displacements of the two
/// mirrors are exactly opposite, so their static cavity-length shifts cancel.
pub fn steady_state(p: &PhysicalParams, d: &DerivedParams) -> SteadyState {
    let q1 = -d.g0 * d.cos2 * d.a_s.norm_sqr() / p.omega_m;
    let c = Complex64::new(0.0, -p.g_a) * d.a_s / Complex64::new(p.gamma_a, p.delta_a);
    SteadyState {
        q1,
        p1: 0.0,
        q2: -q1,
        p2: 0.0,
        c,
        a: d.a_s,
    }
}

/// Convenience: validate, derive, and build both matrices in one call.
pub fn build_system(p: &PhysicalParams) -> Result<(DerivedParams, DriftMatrix, DiffusionMatrix)> {
    let d = derive(p)?;
    let a = build_drift(p, &d);
    let dm = build_diffusion(p, &d);
    Ok((d, a, dm))
}
