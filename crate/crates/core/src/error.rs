use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("variable index {var} out of range for {nvars} variables")]
    VariableOutOfRange { var: usize, nvars: usize },

    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("weights must be strictly positive")]
    NonPositiveWeight,

    #[error("Milnor-Orlik product is not an integer: {0}")]
    NonIntegerMilnor(String),

    #[error("polynomial does not have the required shape: {0}")]
    ShapeViolation(String),

    #[error("computation budget of {0} reductions exhausted")]
    BudgetExhausted(u64),

    #[error("unknown dataset entry {0}")]
    UnknownEntry(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExhausted(_) => 2,
            _ => 3,
        }
    }
}
