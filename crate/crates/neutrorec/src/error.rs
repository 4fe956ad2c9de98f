use std::path::PathBuf;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can surface.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("membership component {component} = {value} is outside [0, 1]")]
    OutOfRange { component: &'static str, value: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("alignment error in slot `{slot}`: {reason}")]
    Alignment { slot: String, reason: String },

    #[error("weights must sum to 1 (got {sum})")]
    Weights { sum: f64 },

    #[error("similarity components incomplete: the rating component is missing")]
    IncompleteComponents,

    #[error("degenerate neighborhood: every neighbor weight is zero")]
    DegenerateNeighborhood,

    #[error("degenerate curve: total mass is zero")]
    DegenerateCurve,

    #[error("empty training set")]
    EmptyTraining,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("toml: {0}")]
    Toml(#[from] toml::de::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn schema(msg: impl Into<String>) -> Self {
        Error::Schema(msg.into())
    }

    pub(crate) fn alignment(slot: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Alignment {
            slot: slot.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by bad input rather than by the run itself.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::OutOfRange { .. }
                | Error::Domain(_)
                | Error::Alignment { .. }
                | Error::Weights { .. }
                | Error::IncompleteComponents
                | Error::Config(_)
                | Error::Schema(_)
                | Error::Toml(_)
        )
    }
}
