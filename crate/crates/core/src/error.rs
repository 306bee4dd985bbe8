use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |m - m^dagger| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("trace {trace} deviates from 1")]
    TraceNotUnit { trace: f64 },

    #[error("matrix is not positive semidefinite (smallest eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("damping parameter {0} outside [0, 1]")]
    InvalidLambda(f64),

    #[error("coin angle {0} outside [0, pi/2]")]
    InvalidTheta(f64),

    #[error("invalid walk topology: {0}")]
    InvalidTopology(String),

    #[error("walker would leave the line lattice: step {step} exceeds t_max = {t_max}")]
    LineEdgeOverflow { step: usize, t_max: usize },

    #[error("state is not pure (purity {purity})")]
    NotPure { purity: f64 },

    #[error("invalid measurement basis: {0}")]
    InvalidBasis(String),

    #[error("invalid experiment spec: {0}")]
    InvalidSpec(String),

    #[error("series too short for period detection: {len} < {min}")]
    SeriesTooShort { len: usize, min: usize },

    #[error("series has no oscillating component; period is undefined")]
    UndefinedPeriod,

    #[error("eigendecomposition failed to converge")]
    EigenFailure,

    #[error("unknown figure preset {0:?}")]
    UnknownPreset(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
