//! Generic small-dense numerical kernels: Hurwitz stability test, Lyapunov
//! solve via Kronecker vectorization, symplectic-spectrum extraction, and an
//! independent time-integration oracle used to cross-check the solver.

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::{Error, Result};

/// Relative asymmetry tolerated when constructing a covariance matrix.
const SYMMETRY_TOL: f64 = 1e-10;

/// Relative tolerance for conjugate pairing of the symplectic spectrum.
const PAIRING_TOL: f64 = 1e-8;

/// Frobenius-norm ceiling past which the integrator declares divergence.
const DIVERGENCE_LIMIT: f64 = 1e12;

/// Real symmetric matrix of symmetrized quadrature second moments
/// (vacuum variance = ½ per quadrature). Symmetrized on construction;
/// asymmetry beyond tolerance is an error, not silently averaged away.
#[derive(Debug, Clone, PartialEq)]
pub struct CovarianceMatrix {
    v: DMatrix<f64>,
}

impl CovarianceMatrix {
    /// Validate (square, finite, symmetric to 1e-10 relative) and symmetrize.
    pub fn new(v: DMatrix<f64>) -> Result<Self> {
        if v.nrows() != v.ncols() {
            return Err(Error::NotSquare(v.nrows(), v.ncols()));
        }
        if !v.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let scale = v.amax().max(f64::MIN_POSITIVE);
        let mut asym = 0.0f64;
        for i in 0..v.nrows() {
            for j in (i + 1)..v.ncols() {
                asym = asym.max((v[(i, j)] - v[(j, i)]).abs());
            }
        }
        if asym / scale > SYMMETRY_TOL {
            return Err(Error::NonSymmetric(asym / scale));
        }
        let vt = v.transpose();
        Ok(Self { v: (v + vt) * 0.5 })
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.v
    }

    pub fn dim(&self) -> usize {
        self.v.nrows()
    }

    pub fn into_inner(self) -> DMatrix<f64> {
        self.v
    }
}

/// Outcome of the Hurwitz test on a drift matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    /// True iff every eigenvalue real part is below −ε_stab.
    pub stable: bool,
    /// Largest eigenvalue real part, rad/s.
    pub max_real_part: f64,
    /// Full spectrum, sorted by real part then imaginary part.
    pub eigenvalues: Vec<Complex<f64>>,
}

/// Relative stability margin: an absolute threshold would be meaningless
/// across SI magnitudes of ~10⁷ rad/s.
fn eps_stab(a: &DMatrix<f64>) -> f64 {
    1e-6 * a.amax()
}

/// Hurwitz stability test via the eigenvalue spectrum.
pub fn stability(a: &DMatrix<f64>) -> Result<StabilityReport> {
    if a.nrows() != a.ncols() {
        return Err(Error::NotSquare(a.nrows(), a.ncols()));
    }
    if !a.iter().all(|x| x.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut eigenvalues: Vec<Complex<f64>> = a.complex_eigenvalues().iter().copied().collect();
    eigenvalues.sort_by(|x, y| (x.re, x.im).partial_cmp(&(y.re, y.im)).unwrap());
    let max_real_part = eigenvalues.iter().map(|e| e.re).fold(f64::NEG_INFINITY, f64::max);
    Ok(StabilityReport {
        stable: max_real_part < -eps_stab(a),
        max_real_part,
        eigenvalues,
    })
}

/// Solve AV + VAᵀ = −D for the steady-state covariance V.
///
/// Method: vectorize via (I⊗A + A⊗I)·vec(V) = −vec(D) and solve the dense
/// n²×n² system by LU, then symmetrize. At n = 8 the 64×64 solve is trivially
/// fast and the simplest formulation to verify.
pub fn solve_lyapunov(a: &DMatrix<f64>, d: &DMatrix<f64>) -> Result<CovarianceMatrix> {
    check_pair(a, d)?;
    let report = stability(a)?;
    if !report.stable {
        return Err(Error::UnstableSystem {
            max_real_part: report.max_real_part,
        });
    }
    let v = solve_vectorized(a, d)?;
    let vt = v.transpose();
    CovarianceMatrix::new((v + vt) * 0.5)
}

/// Raw Kronecker-vectorized solve, no stability guard. An exactly singular
/// system (eigenvalue of A on the imaginary axis, so λ_i + λ_j = 0) surfaces
/// as a zero pivot in the LU factorization.
pub(crate) fn solve_vectorized(a: &DMatrix<f64>, d: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = a.nrows();
    let eye = DMatrix::<f64>::identity(n, n);
    let big = eye.kronecker(a) + a.kronecker(&eye);
    let rhs = DVector::from_column_slice(d.as_slice()) * -1.0;
    let x = big.lu().solve(&rhs).ok_or(Error::SingularSystem)?;
    Ok(DMatrix::from_column_slice(n, n, x.as_slice()))
}

/// Residual ‖AV + VAᵀ + D‖_F / max(‖D‖_F, 1) of a candidate solution.
pub fn lyapunov_residual(a: &DMatrix<f64>, d: &DMatrix<f64>, v: &CovarianceMatrix) -> f64 {
    let v = v.matrix();
    let r = a * v + v * a.transpose() + d;
    r.norm() / d.norm().max(1.0)
}

fn check_pair(a: &DMatrix<f64>, d: &DMatrix<f64>) -> Result<()> {
    if a.nrows() != a.ncols() {
        return Err(Error::NotSquare(a.nrows(), a.ncols()));
    }
    if d.shape() != a.shape() {
        return Err(Error::InvalidParameter {
            name: "diffusion",
            reason: format!("shape {:?} does not match drift shape {:?}", d.shape(), a.shape()),
        });
    }
    if !a.iter().all(|x| x.is_finite()) || !d.iter().all(|x| x.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(())
}

/// dV/dt = AV + VAᵀ + D evaluated once.
fn moment_flow(a: &DMatrix<f64>, d: &DMatrix<f64>, v: &DMatrix<f64>) -> DMatrix<f64> {
    a * v + v * a.transpose() + d
}

/// One classical 4th-order Runge-Kutta step of the moment equation.
fn rk4_step(a: &DMatrix<f64>, d: &DMatrix<f64>, dt: f64, v: &DMatrix<f64>) -> DMatrix<f64> {
    let k1 = moment_flow(a, d, v);
    let k2 = moment_flow(a, d, &(v + &k1 * (dt / 2.0)));
    let k3 = moment_flow(a, d, &(v + &k2 * (dt / 2.0)));
    let k4 = moment_flow(a, d, &(v + &k3 * dt));
    v + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0)
}

/// The RK4 step is affine in V: vec(V') = S·vec(V) + c.
#[derive(Clone)]
struct AffineMap {
    s: DMatrix<f64>,
    c: DVector<f64>,
}

impl AffineMap {
    fn compose(&self, other: &AffineMap) -> Result<AffineMap> {
        let s = &self.s * &other.s;
        let c = &self.s * &other.c + &self.c;
        if !s.iter().all(|x| x.is_finite())
            || !c.iter().all(|x| x.is_finite())
            || s.norm() > DIVERGENCE_LIMIT
            || c.norm() > DIVERGENCE_LIMIT
        {
            return Err(Error::StepTooLarge);
        }
        Ok(AffineMap { s, c })
    }

    /// n-fold self-composition by binary exponentiation. Exactly the map of n
    /// sequential steps (up to floating-point reassociation), in O(log n)
    /// matrix products — the direct loop is hopeless for the ~10⁷ steps a
    /// stiff drift matrix demands.
    fn power(&self, mut n: u64) -> Result<AffineMap> {
        let dim = self.s.nrows();
        let mut acc = AffineMap {
            s: DMatrix::identity(dim, dim),
            c: DVector::zeros(dim),
        };
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.compose(&base)?;
            }
        }
        Ok(acc)
    }
}

/// Integrate dV/dt = AV + VAᵀ + D from V(0) = ½I to t_end with RK4 steps of
/// size ≤ dt. Test oracle for [`solve_lyapunov`]: same fixed point, entirely
/// different numerical route (time stepping vs. one linear solve).
///
/// Implementation: one RK4 step is an affine map on vec(V); the map is built
/// exactly by stepping the n² basis matrices once each, then raised to the
/// step count by binary exponentiation. Divergence (dt beyond the RK4
/// stability boundary of the fastest mode) is detected by norm blow-up.
pub fn integrate_oracle(
    a: &DMatrix<f64>,
    d: &DMatrix<f64>,
    t_end: f64,
    dt: f64,
) -> Result<CovarianceMatrix> {
    check_pair(a, d)?;
    if !(t_end > 0.0 && t_end.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "t_end",
            reason: format!("must be positive and finite, got {t_end}"),
        });
    }
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "dt",
            reason: format!("must be positive and finite, got {dt}"),
        });
    }
    let report = stability(a)?;
    if !report.stable {
        return Err(Error::UnstableSystem {
            max_real_part: report.max_real_part,
        });
    }

    let n = a.nrows();
    let n_steps = (t_end / dt).ceil().max(1.0) as u64;
    let dt_eff = t_end / n_steps as f64;

    // probe the stepper with the zero matrix and the n² basis matrices to
    // assemble the one-step affine map
    let zero = DMatrix::<f64>::zeros(n, n);
    let c_mat = rk4_step(a, d, dt_eff, &zero);
    let c = DVector::from_column_slice(c_mat.as_slice());
    let mut s = DMatrix::<f64>::zeros(n * n, n * n);
    for k in 0..n * n {
        let mut basis = DMatrix::<f64>::zeros(n, n);
        basis[k] = 1.0;
        let image = rk4_step(a, d, dt_eff, &basis) - &c_mat;
        s.set_column(k, &DVector::from_column_slice(image.as_slice()));
    }

    let total = AffineMap { s, c }.power(n_steps)?;
    let v0 = DVector::from_column_slice((DMatrix::<f64>::identity(n, n) * 0.5).as_slice());
    let x = &total.s * v0 + &total.c;
    if !x.iter().all(|v| v.is_finite()) {
        return Err(Error::StepTooLarge);
    }
    let v = DMatrix::from_column_slice(n, n, x.as_slice());
    let vt = v.transpose();
    CovarianceMatrix::new((v + vt) * 0.5)
}

/// Symplectic form Ω = ⊕ₙ [[0, 1], [−1, 0]] in (q, p) quadrature ordering.
pub fn symplectic_form(n_modes: usize) -> DMatrix<f64> {
    let mut omega = DMatrix::<f64>::zeros(2 * n_modes, 2 * n_modes);
    for j in 0..n_modes {
        omega[(2 * j, 2 * j + 1)] = 1.0;
        omega[(2 * j + 1, 2 * j)] = -1.0;
    }
    omega
}

/// Symplectic eigenvalues of a 2n×2n covariance matrix: the n moduli of the
/// eigenvalue pairs of Ω·V (equivalently |eig(iΩV)|), sorted ascending.
/// A physical state has all of them ≥ ½.
pub fn symplectic_eigenvalues(v: &CovarianceMatrix) -> Result<Vec<f64>> {
    let dim = v.dim();
    if !dim.is_multiple_of(2) {
        return Err(Error::OddDimension(dim));
    }
    let w = symplectic_form(dim / 2) * v.matrix();
    let mut moduli: Vec<f64> = w.complex_eigenvalues().iter().map(|e| e.norm()).collect();
    moduli.sort_by(|x, y| x.partial_cmp(y).unwrap());
    pair_moduli(&moduli)
}

/// Collapse the sorted 2n eigenvalue moduli into n conjugate pairs. A pairing
/// mismatch beyond tolerance signals numerical degeneracy and is surfaced as
/// an error rather than masked.
fn pair_moduli(sorted: &[f64]) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(sorted.len() / 2);
    for pair in sorted.chunks_exact(2) {
        let (lo, hi) = (pair[0], pair[1]);
        if (hi - lo) / hi.max(f64::MIN_POSITIVE) > PAIRING_TOL {
            return Err(Error::PairingFailure(lo, hi));
        }
        out.push(0.5 * (lo + hi));
    }
    Ok(out)
}
