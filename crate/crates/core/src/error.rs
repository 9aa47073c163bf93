use thiserror::Error;

/// Errors shared by the whole crate.
///
/// The variants are coarse on purpose: callers that need machine-readable
/// classes (the CLI) match on the variant name, everything else just
/// propagates.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SkeinError {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("ambient mismatch: {0}")]
    Ambient(String),

    #[error("expected a closed diagram: {0}")]
    OpenDiagram(String),

    #[error("strand count mismatch: {0}")]
    StrandCount(String),

    #[error("component selection invalid: {0}")]
    Components(String),

    #[error("division by zero")]
    ZeroDivisor,

    #[error("division is not exact: {0}")]
    InexactDivision(String),

    #[error("series division not well-defined: {0}")]
    SeriesDivision(String),

    #[error("truncation order must be at least {min}, got {got}")]
    BadOrder { min: u32, got: u32 },

    #[error("operands live over different marked point counts: {0} vs {1}")]
    PointMismatch(u32, u32),

    #[error("cannot embed slice into stacked word: {0}")]
    Embedding(String),

    #[error("calibration failed: {0}")]
    Calibration(String),

    #[error("certificate construction failed: {0}")]
    Certificate(String),
}

impl SkeinError {
    /// Stable class tag used by the CLI's JSON error objects.
    pub fn class(&self) -> &'static str {
        match self {
            SkeinError::Parse { .. } => "parse",
            SkeinError::Ambient(_) => "ambient",
            SkeinError::OpenDiagram(_) => "open-diagram",
            SkeinError::StrandCount(_) => "strand-count",
            SkeinError::Components(_) => "components",
            SkeinError::ZeroDivisor => "zero-divisor",
            SkeinError::InexactDivision(_) => "inexact-division",
            SkeinError::SeriesDivision(_) => "series-division",
            SkeinError::BadOrder { .. } => "bad-order",
            SkeinError::PointMismatch(_, _) => "point-mismatch",
            SkeinError::Embedding(_) => "embedding",
            SkeinError::Calibration(_) => "calibration",
            SkeinError::Certificate(_) => "certificate",
        }
    }
}

pub type Result<T> = std::result::Result<T, SkeinError>;
