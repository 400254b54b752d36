use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("point {index} has a non-finite coordinate")]
    NonFinitePoint { index: usize },

    #[error("insufficient points: need at least {needed}, got {got}")]
    InsufficientPoints { needed: usize, got: usize },

    /// Coplanar or collinear data: the center system is singular.
    #[error("degenerate geometry: |det| = {det:e} is below threshold {threshold:e} (coplanar or collinear points?)")]
    DegenerateGeometry { det: f64, threshold: f64 },

    #[error("fitted radius is zero")]
    ZeroRadius,

    #[error("numerical degeneracy: squared radius {r_squared:e} is negative")]
    NumericalDegeneracy { r_squared: f64 },

    #[error("builtin case {0} does not exist (expected 1..=4)")]
    UnknownCase(usize),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("estimate batch is empty")]
    EmptyBatch,

    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by the geometry of the data rather than by
    /// malformed input or configuration.
    pub fn is_fit_error(&self) -> bool {
        matches!(
            self,
            Error::InsufficientPoints { .. }
                | Error::DegenerateGeometry { .. }
                | Error::ZeroRadius
                | Error::NumericalDegeneracy { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
