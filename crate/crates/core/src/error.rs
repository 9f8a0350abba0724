use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("expected {expected} amplitudes, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("cannot normalize the zero vector")]
    ZeroVector,
    #[error("state is not normalized (squared norm {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },
    #[error("amplitude {index} is not finite")]
    NonFinite { index: usize },
    #[error("qubit count {0} outside supported range 1..={max}", max = crate::statevector::MAX_QUBITS)]
    QubitCount(usize),
    #[error("dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },
    #[error("qubit index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("a single-qubit state has no remainder to split against")]
    SingleQubitState,
    #[error("qubit basis is not orthonormal: {0}")]
    InvalidBasis(String),
    #[error("inconsistent split: {0}")]
    InconsistentSplit(String),
    #[error("weights violate a^2 + b^2 = 1 (a = {a}, b = {b})")]
    NotNormalizedWeights { a: f64, b: f64 },
    #[error("overlap modulus {0} outside [0, 1]")]
    OverlapOutOfRange(f64),
    #[error("expected a two-qubit state, got {0} qubits")]
    NotTwoQubits(usize),
    #[error("value {0} outside [0, 1]")]
    OutOfRange(f64),
    #[error("coefficients are not normalized (sum of squared moduli {0})")]
    BadNormalization(f64),
    #[error("excitation count k = {k} outside 0..={n}")]
    KOutOfRange { n: usize, k: usize },
    #[error("family needs at least {min} qubits, got {n}")]
    NTooSmall { n: usize, min: usize },
    #[error("unknown state family `{0}`")]
    UnknownFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("grid resolution {0} below the minimum of 16 points per axis")]
    BadResolution(usize),
    #[error("bad range: {0}")]
    BadRange(String),
    #[error("unknown estimator `{0}`")]
    UnknownEstimator(String),
    #[error("state file: {0}")]
    StateFile(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
