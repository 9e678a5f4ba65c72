use thiserror::Error;

use crate::fock::Mode;

/// Errors shared by all simulator modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A time bin fell outside the configured window.
    #[error("time bin {bin} outside window 0..{window} (mode {context})")]
    WindowExceeded { bin: u8, window: u8, context: String },

    /// More photons than the configured budget allows.
    #[error("photon number {requested} exceeds budget {budget}")]
    PhotonBudget { requested: u32, budget: u32 },

    /// A state occupied a mode the transform does not act on.
    #[error("mode {0} outside transform domain (window overflow or missing port)")]
    ModeOutsideDomain(Mode),

    /// Transform columns are not orthonormal.
    #[error("transform is not an isometry: max column-pair deviation {0:.3e}")]
    NotIsometry(f64),

    /// Two transforms or states that must share modes do not.
    #[error("mode spaces incompatible: {0}")]
    ModeMismatch(String),

    /// A linear combination with vanishing norm.
    #[error("state has (near-)zero norm; cannot normalize")]
    ZeroNorm,

    /// An operation received a state with the wrong photon content.
    #[error("invalid input state: {0}")]
    InvalidState(String),

    /// A parameter outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Classification requested for an inconclusive result.
    #[error("outcome is inconclusive; no correction or conditional state defined")]
    Inconclusive,

    /// A requested outcome has zero probability.
    #[error("outcome {0} has zero probability for this input")]
    ZeroProbabilityOutcome(String),

    /// A scan or fit grid that cannot support the requested analysis.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// A source configuration that produces no signal.
    #[error("degenerate source: {0}")]
    DegenerateSource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
