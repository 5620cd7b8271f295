use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch in {context}: expected {expected}, got {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("matrix side {side} does not factor as {d_a} x {d_b}")]
    BadBipartiteSplit { side: usize, d_a: usize, d_b: usize },

    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("matrix data length {len} does not match {rows}x{cols}")]
    BadDataLength {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("matrix is not Hermitian: max |A - A^dag| = {max_deviation:e}")]
    NotHermitian { max_deviation: f64 },

    #[error("eigensolver did not converge")]
    EigenDidNotConverge,

    #[error("operator is not positive semidefinite: min eigenvalue {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("trace is {trace}, expected 1")]
    TraceNotOne { trace: f64 },

    #[error("state vector has squared norm {norm_sq}, expected 1")]
    NotNormalized { norm_sq: f64 },

    #[error("cannot normalize a zero vector")]
    ZeroVector,

    #[error("ensemble has no components")]
    EmptyEnsemble,

    #[error("weights sum to {sum}, expected 1")]
    WeightsNotNormalized { sum: f64 },

    #[error("negative weight {weight}")]
    NegativeWeight { weight: f64 },

    #[error("POVM effects sum to identity only within {max_deviation:e}")]
    EffectsNotComplete { max_deviation: f64 },

    #[error("POVM has no effects")]
    EmptyPovm,

    #[error("duplicate outcome label {label}")]
    DuplicateLabel { label: f64 },

    #[error("unknown outcome label {label}")]
    UnknownLabel { label: f64 },

    #[error("outcome probability {value} lies outside [0, 1]")]
    ProbabilityOutOfRange { value: f64 },

    #[error("outcome probabilities sum to {sum}, expected 1")]
    ProbabilitiesNotNormalized { sum: f64 },

    #[error("measurement is not projective")]
    NotProjective,

    #[error("outcome {outcome} has probability {probability:e}, below the floor")]
    ZeroProbabilityBranch { outcome: usize, probability: f64 },

    #[error("Kraus operators are not trace preserving: max |sum K^dag K - I| = {max_deviation:e}")]
    NotTracePreserving { max_deviation: f64 },

    #[error("state map '{map}' produced an invalid state for input {input_json}: {source}")]
    MapOutputInvalid {
        map: String,
        input_json: String,
        #[source]
        source: Box<Error>,
    },

    #[error("index {index} out of range for size {size}")]
    OutOfRange { index: usize, size: usize },

    #[error("phase space must have at least one point")]
    EmptyPhaseSpace,

    #[error("functional '{name}' is not flagged nonlinear")]
    NotFlaggedNonlinear { name: String },

    #[error("functional cannot distinguish the steered ensembles (gap {gap:e})")]
    FunctionalGapTooSmall { gap: f64 },

    #[error("no-signaling identity violated: distance {distance:e} exceeds tolerance {tol:e}; this indicates an implementation bug")]
    NoSignalingViolated { distance: f64, tol: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
