//! Shared construction helpers for unit tests: random symplectic transforms,
//! random physical covariance matrices, and reference Gaussian states.

use nalgebra::DMatrix;
use rand::Rng;

/// Relative deviation of `actual` from a nonzero `expected`.
pub(crate) fn rel(actual: f64, expected: f64) -> f64 {
    (actual - expected).abs() / expected.abs().max(f64::MIN_POSITIVE)
}

/// 2×2 phase-space rotation.
pub(crate) fn rotation(theta: f64) -> DMatrix<f64> {
    let (s, c) = theta.sin_cos();
    DMatrix::from_row_slice(2, 2, &[c, s, -s, c])
}

/// 2×2 single-mode squeezer diag(eˢ, e⁻ˢ).
pub(crate) fn squeezer(s: f64) -> DMatrix<f64> {
    DMatrix::from_row_slice(2, 2, &[s.exp(), 0.0, 0.0, (-s).exp()])
}

/// Block-diagonal product of random single-mode rotations and squeezers —
/// a local symplectic transformation on every mode.
pub(crate) fn local_symplectic<R: Rng>(n_modes: usize, rng: &mut R) -> DMatrix<f64> {
    let mut out = DMatrix::<f64>::zeros(2 * n_modes, 2 * n_modes);
    for j in 0..n_modes {
        let block = rotation(rng.gen_range(0.0..std::f64::consts::TAU))
            * squeezer(rng.gen_range(-1.0..1.0))
            * rotation(rng.gen_range(0.0..std::f64::consts::TAU));
        out.view_mut((2 * j, 2 * j), (2, 2)).copy_from(&block);
    }
    out
}

/// Symplectic beam-splitter mixing modes `i` and `j` by `angle`.
pub(crate) fn beamsplitter(n_modes: usize, i: usize, j: usize, angle: f64) -> DMatrix<f64> {
    let (s, c) = angle.sin_cos();
    let mut out = DMatrix::<f64>::identity(2 * n_modes, 2 * n_modes);
    for off in 0..2 {
        out[(2 * i + off, 2 * i + off)] = c;
        out[(2 * j + off, 2 * j + off)] = c;
        out[(2 * i + off, 2 * j + off)] = s;
        out[(2 * j + off, 2 * i + off)] = -s;
    }
    out
}

/// Random physical covariance matrix: thermal symplectic eigenvalues ≥ ½
/// scrambled by squeezers, rotations, and beam splitters. Exactly symmetric
/// by construction (symmetrized after the congruence).
pub(crate) fn random_physical_cov<R: Rng>(n_modes: usize, rng: &mut R) -> DMatrix<f64> {
    let mut v = DMatrix::<f64>::zeros(2 * n_modes, 2 * n_modes);
    for j in 0..n_modes {
        let nu = rng.gen_range(0.5..2.5);
        v[(2 * j, 2 * j)] = nu;
        v[(2 * j + 1, 2 * j + 1)] = nu;
    }
    let mut s = local_symplectic(n_modes, rng);
    for i in 0..n_modes.saturating_sub(1) {
        s = beamsplitter(n_modes, i, i + 1, rng.gen_range(0.0..std::f64::consts::TAU)) * s;
    }
    s = local_symplectic(n_modes, rng) * s;
    let out = &s * v * s.transpose();
    let out_t = out.transpose();
    (out + out_t) * 0.5
}

/// Two-mode squeezed vacuum covariance with squeezing parameter `s`;
/// its logarithmic negativity across the 1|2 split is exactly 2s.
pub(crate) fn tmsv_cov(s: f64) -> DMatrix<f64> {
    let ch = (2.0 * s).cosh();
    let sh = (2.0 * s).sinh();
    DMatrix::from_row_slice(
        4,
        4,
        &[
            ch, 0.0, sh, 0.0, //
            0.0, ch, 0.0, -sh, //
            sh, 0.0, ch, 0.0, //
            0.0, -sh, 0.0, ch,
        ],
    ) * 0.5
}

/// Random Hurwitz-stable drift paired with a random positive-semidefinite
/// diffusion matrix.
pub(crate) fn random_stable_system<R: Rng>(n: usize, rng: &mut R) -> (DMatrix<f64>, DMatrix<f64>) {
    let raw = DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
    let max_re = raw
        .complex_eigenvalues()
        .iter()
        .map(|e| e.re)
        .fold(f64::NEG_INFINITY, f64::max);
    let a = raw - DMatrix::<f64>::identity(n, n) * (max_re + 1.0);
    let g = DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
    let d = &g * g.transpose();
    let d_t = d.transpose();
    (a, (d + d_t) * 0.5)
}
