use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("matrix is not Hermitian (max entrywise deviation {max_deviation:.3e})")]
    NonHermitian { max_deviation: f64 },

    #[error("invalid dimension profile: {0}")]
    InvalidProfile(String),

    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("requested dimension {requested} exceeds the dense-matrix cap {cap}")]
    SizeCap { requested: usize, cap: usize },

    #[error("integer overflow while multiplying subsystem dimensions")]
    DimensionOverflow,

    #[error("unsupported profile: {0}")]
    UnsupportedProfile(String),

    #[error("channel strength {0} outside [0, 1]")]
    InvalidStrength(f64),

    #[error("channel target factor {target} out of range for a {factors}-factor profile")]
    InvalidTarget { target: usize, factors: usize },

    #[error(
        "no witness crossing in [0, 1]: value {value_at_zero:.6} at strength 0, \
         {value_at_one:.6} at strength 1, threshold {threshold:.6}"
    )]
    NoCrossing {
        value_at_zero: f64,
        value_at_one: f64,
        threshold: f64,
    },

    #[error("overlap factorization chain violated at `{link}`: {lhs:.12e} vs {rhs:.12e}")]
    FactorizationViolation {
        link: &'static str,
        lhs: f64,
        rhs: f64,
    },

    #[error("unknown verification suite `{0}` (known: theorem1, theorem2-sandwich, remark3-werner, factorization)")]
    UnknownSuite(String),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
