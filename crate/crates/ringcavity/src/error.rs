//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong between parameter input and entanglement output.
#[derive(Debug, Error)]
pub enum Error {
    /// A physical parameter violates its domain invariant.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// A config file problem; the message names the offending key.
    #[error("config error: {0}")]
    Config(String),

    /// The drift matrix is not Hurwitz-stable, so no steady state exists.
    #[error("unstable system: max eigenvalue real part {max_real_part:.6e} rad/s is not negative")]
    UnstableSystem { max_real_part: f64 },

    /// The vectorized Lyapunov system is rank-deficient (an eigenvalue of the
    /// drift matrix sits on the imaginary axis within tolerance).
    #[error("singular Lyapunov system: drift matrix has an eigenvalue on the imaginary axis")]
    SingularSystem,

    /// A matrix that must contain quadrature pairs has odd dimension.
    #[error("covariance matrix dimension {0} is odd; quadratures come in pairs")]
    OddDimension(usize),

    /// A matrix that must be square is not.
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),

    /// A covariance matrix is asymmetric beyond tolerance.
    #[error("matrix asymmetry {0:.3e} (relative) exceeds tolerance")]
    NonSymmetric(f64),

    /// Conjugate pairing of the symplectic spectrum failed, signalling
    /// numerical degeneracy that must not be masked.
    #[error("symplectic spectrum pairing failed: moduli {0:.12e} and {1:.12e} do not match")]
    PairingFailure(f64, f64),

    /// A covariance matrix violates the uncertainty principle.
    #[error("unphysical covariance matrix: min symplectic eigenvalue {min_eig:.12e} < 1/2")]
    UnphysicalState { min_eig: f64 },

    /// The integration oracle detected divergence (step size too large).
    #[error("integration diverged: step size too large for the fastest timescale")]
    StepTooLarge,

    /// A matrix input contains NaN or infinity.
    #[error("matrix contains non-finite entries")]
    NonFinite,

    /// Unknown sweep axis name.
    #[error("invalid sweep axis `{0}`; expected one of T, r, P, Delta_a, G_a, Delta, theta, phi")]
    InvalidAxis(String),

    /// Unknown output quantity label.
    #[error("invalid quantity label `{0}`")]
    InvalidQuantity(String),

    /// A sweep grid point failed; carries the axis value for diagnosis.
    #[error("sweep point at axis value {axis_value:.6e}: {source}")]
    SweepPoint {
        axis_value: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
