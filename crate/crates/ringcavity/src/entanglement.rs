//! Bipartite and tripartite logarithmic negativity extracted from the 8×8
//! steady-state covariance matrix by partial transposition (PPT criterion).

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::{symplectic_eigenvalues, CovarianceMatrix};

/// States whose smallest symplectic eigenvalue drops below ½ − tolerance are
/// rejected as unphysical rather than silently producing negativities.
const PHYSICALITY_TOL: f64 = 1e-9;

/// Reported negativities within this distance of zero are noise from the
/// linear solve, not entanglement; reporting layers clip them to exactly 0.
pub const ZERO_CLIP: f64 = 1e-12;

/// One of the four modes, in the quadrature ordering
/// (δq₁, δp₁, δq₂, δp₂, δX, δY, δx, δy).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// First movable mirror.
    M1,
    /// Second movable mirror.
    M2,
    /// Cavity field.
    Op,
    /// Atomic ensemble.
    A,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::M1, Mode::M2, Mode::Op, Mode::A];

    /// Row/column indices of this mode's (position, momentum) quadratures.
    pub fn quadrature_indices(self) -> (usize, usize) {
        match self {
            Mode::M1 => (0, 1),
            Mode::M2 => (2, 3),
            Mode::Op => (4, 5),
            Mode::A => (6, 7),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Mode::M1 => "m1",
            Mode::M2 => "m2",
            Mode::Op => "op",
            Mode::A => "a",
        }
    }
}

/// Canonical mode pairs in reporting order.
pub const REPORT_PAIRS: [(Mode, Mode); 6] = [
    (Mode::M1, Mode::M2),
    (Mode::M1, Mode::Op),
    (Mode::M2, Mode::Op),
    (Mode::M1, Mode::A),
    (Mode::M2, Mode::A),
    (Mode::Op, Mode::A),
];

/// Canonical mode triples in reporting order.
pub const REPORT_TRIPLES: [(Mode, Mode, Mode); 4] = [
    (Mode::M1, Mode::M2, Mode::A),
    (Mode::A, Mode::M1, Mode::Op),
    (Mode::A, Mode::M2, Mode::Op),
    (Mode::M1, Mode::M2, Mode::Op),
];

/// A bipartite or tripartite selection of modes, with the transposition
/// split for one-vs-two bipartitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModePartition {
    /// Two modes; the first is partially transposed.
    Pair(Mode, Mode),
    /// Three modes; `single` is partially transposed against the other two.
    OneVsTwo { single: Mode, rest: (Mode, Mode) },
    /// Three modes, all one-vs-two splits combined into one measure.
    Tripartite(Mode, Mode, Mode),
}

impl ModePartition {
    pub fn pair(a: Mode, b: Mode) -> Result<Self> {
        Self::validated(ModePartition::Pair(a, b))
    }

    pub fn one_vs_two(single: Mode, b: Mode, c: Mode) -> Result<Self> {
        Self::validated(ModePartition::OneVsTwo { single, rest: (b, c) })
    }

    pub fn tripartite(a: Mode, b: Mode, c: Mode) -> Result<Self> {
        Self::validated(ModePartition::Tripartite(a, b, c))
    }

    /// Selected modes in partition order.
    pub fn modes(&self) -> Vec<Mode> {
        match *self {
            ModePartition::Pair(a, b) => vec![a, b],
            ModePartition::OneVsTwo { single, rest } => vec![single, rest.0, rest.1],
            ModePartition::Tripartite(a, b, c) => vec![a, b, c],
        }
    }

    fn validated(part: ModePartition) -> Result<Self> {
        let modes = part.modes();
        for (i, a) in modes.iter().enumerate() {
            if modes[i + 1..].contains(a) {
                return Err(Error::InvalidParameter {
                    name: "partition",
                    reason: format!("mode {} selected twice", a.label()),
                });
            }
        }
        Ok(part)
    }
}

/// A logarithmic negativity together with the PPT eigenvalue behind it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementResult {
    /// max(0, −ln 2η̃), natural-log convention.
    pub value: f64,
    /// Smallest partially-transposed symplectic eigenvalue (for the
    /// tripartite measure: the smallest across its three bipartitions).
    pub eta: f64,
    pub partition: ModePartition,
}

/// Reduce an 8×8 covariance matrix to the rows/columns of the partition's
/// modes, in partition order.
pub fn extract_submatrix(v: &CovarianceMatrix, part: &ModePartition) -> Result<CovarianceMatrix> {
    if v.dim() != 8 {
        return Err(Error::NotSquare(v.dim(), 8));
    }
    let mut indices = Vec::new();
    for mode in part.modes() {
        let (q, p) = mode.quadrature_indices();
        indices.push(q);
        indices.push(p);
    }
    let full = v.matrix();
    let sub = DMatrix::from_fn(indices.len(), indices.len(), |i, j| {
        full[(indices[i], indices[j])]
    });
    CovarianceMatrix::new(sub)
}

/// Reject reduced states whose symplectic spectrum violates the uncertainty
/// bound ν ≥ ½ beyond tolerance.
fn ensure_physical(sub: &CovarianceMatrix) -> Result<()> {
    let nu = symplectic_eigenvalues(sub)?;
    let min_eig = nu[0];
    if min_eig < 0.5 - PHYSICALITY_TOL {
        return Err(Error::UnphysicalState { min_eig });
    }
    Ok(())
}

/// Partial transposition in phase space: flip the momentum quadrature of the
/// mode at `position` (P·V·P with P = 1 ⊕ … ⊕ σ_z ⊕ … ⊕ 1).
fn partial_transpose(sub: &CovarianceMatrix, position: usize) -> Result<CovarianceMatrix> {
    let n = sub.dim();
    let mut signs = vec![1.0; n];
    signs[2 * position + 1] = -1.0;
    let m = sub.matrix();
    let flipped = DMatrix::from_fn(n, n, |i, j| signs[i] * signs[j] * m[(i, j)]);
    CovarianceMatrix::new(flipped)
}

fn negativity_at_split(sub: &CovarianceMatrix, position: usize) -> Result<(f64, f64)> {
    ensure_physical(sub)?;
    let ppt = partial_transpose(sub, position)?;
    let eta = symplectic_eigenvalues(&ppt)?[0];
    Ok(((-(2.0 * eta).ln()).max(0.0), eta))
}

/// Logarithmic negativity of a two-mode reduction: η̃ is the smallest
/// symplectic eigenvalue of the partially transposed 4×4 submatrix, and
/// E_N = max(0, −ln 2η̃). Agrees with [`eta_closed_form`] to 10⁻⁸ relative.
pub fn log_negativity_pair(
    v: &CovarianceMatrix,
    pair: ModePartition,
) -> Result<EntanglementResult> {
    if !matches!(pair, ModePartition::Pair(..)) {
        return Err(Error::InvalidParameter {
            name: "partition",
            reason: "expected a two-mode partition".into(),
        });
    }
    let sub = extract_submatrix(v, &pair)?;
    let (value, eta) = negativity_at_split(&sub, 0)?;
    Ok(EntanglementResult {
        value,
        eta,
        partition: pair,
    })
}

/// Closed form for the smallest PPT symplectic eigenvalue of a two-mode
/// covariance matrix [[A, C], [Cᵀ, B]]:
/// η̃ = 2^{−1/2}·[Σ − (Σ² − 4 det V)^{1/2}]^{1/2} with Σ = det A + det B − 2 det C.
pub fn eta_closed_form(v_pair: &CovarianceMatrix) -> Result<f64> {
    if v_pair.dim() != 4 {
        return Err(Error::NotSquare(v_pair.dim(), 4));
    }
    let m = v_pair.matrix();
    let det2 = |r: usize, c: usize| m[(r, c)] * m[(r + 1, c + 1)] - m[(r, c + 1)] * m[(r + 1, c)];
    let sigma = det2(0, 0) + det2(2, 2) - 2.0 * det2(0, 2);
    let disc = (sigma * sigma - 4.0 * m.determinant()).max(0.0);
    Ok(((sigma - disc.sqrt()).max(0.0) / 2.0).sqrt())
}

/// Logarithmic negativity of a one-vs-two bipartition of a three-mode
/// reduction: the designated single mode is partially transposed in the 6×6
/// submatrix.
pub fn log_negativity_one_vs_two(
    v: &CovarianceMatrix,
    triple: ModePartition,
) -> Result<EntanglementResult> {
    if !matches!(triple, ModePartition::OneVsTwo { .. }) {
        return Err(Error::InvalidParameter {
            name: "partition",
            reason: "expected a one-vs-two partition".into(),
        });
    }
    let sub = extract_submatrix(v, &triple)?;
    let (value, eta) = negativity_at_split(&sub, 0)?;
    Ok(EntanglementResult {
        value,
        eta,
        partition: triple,
    })
}

/// Tripartite negativity of a mode triple: the geometric mean of the three
/// one-vs-two logarithmic negativities, exactly zero whenever any factor is.
pub fn tripartite_negativity(
    v: &CovarianceMatrix,
    triple: ModePartition,
) -> Result<EntanglementResult> {
    let ModePartition::Tripartite(a, b, c) = triple else {
        return Err(Error::InvalidParameter {
            name: "partition",
            reason: "expected a tripartite partition".into(),
        });
    };
    let splits = [
        ModePartition::one_vs_two(a, b, c)?,
        ModePartition::one_vs_two(b, a, c)?,
        ModePartition::one_vs_two(c, a, b)?,
    ];
    let mut product = 1.0;
    let mut any_zero = false;
    let mut min_eta = f64::INFINITY;
    for split in splits {
        let r = log_negativity_one_vs_two(v, split)?;
        any_zero |= r.value == 0.0;
        product *= r.value;
        min_eta = min_eta.min(r.eta);
    }
    Ok(EntanglementResult {
        value: if any_zero { 0.0 } else { product.cbrt() },
        eta: min_eta,
        partition: triple,
    })
}

/// Clip noise-level magnitudes to exactly zero for reporting.
pub fn clip_noise(x: f64) -> f64 {
    if x.abs() < ZERO_CLIP {
        0.0
    } else {
        x
    }
}
