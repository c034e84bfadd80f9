use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not positive definite (pivot {pivot} at row {index})")]
    NotPositiveDefinite { index: usize, pivot: f64 },

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("shrinkage weight {0} outside [0, 1]")]
    BetaOutOfRange(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("diagonal entry {index} is {value}, must be strictly positive")]
    NonPositiveDiagonal { index: usize, value: f64 },

    #[error("solver did not converge within {iters} iterations")]
    NotConverged { iters: usize },

    #[error("training data must contain both classes")]
    SingleClassData,

    #[error("discriminant direction is degenerate (variance term {0} <= 0)")]
    DegenerateDirection(f64),

    #[error("invalid synthetic specification: {0}")]
    InvalidSpec(String),

    #[error("diagnosis code {0:?} is not present in the code map")]
    UnmappedCode(String),

    #[error("malformed visit date {0:?}")]
    MalformedDate(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("confusion matrix has no samples")]
    EmptyConfusion,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Numerical failures as opposed to invalid input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NotPositiveDefinite { .. }
                | Error::NotConverged { .. }
                | Error::DegenerateDirection(_)
                | Error::NonFinite(_)
        )
    }

    /// Stable short identifier, used in machine-readable error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPositiveDefinite { .. } => "NotPositiveDefinite",
            Error::NonFinite(_) => "NonFinite",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::EmptyInput(_) => "EmptyInput",
            Error::BetaOutOfRange(_) => "BetaOutOfRange",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::NonPositiveDiagonal { .. } => "NonPositiveDiagonal",
            Error::NotConverged { .. } => "NotConverged",
            Error::SingleClassData => "SingleClassData",
            Error::DegenerateDirection(_) => "DegenerateDirection",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::UnmappedCode(_) => "UnmappedCode",
            Error::MalformedDate(_) => "MalformedDate",
            Error::InsufficientData(_) => "InsufficientData",
            Error::EmptyConfusion => "EmptyConfusion",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
            Error::Csv(_) => "Csv",
            Error::Json(_) => "Json",
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}
