use std::path::PathBuf;

/// Errors produced by the scanning toolkit.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("degenerate geometry: {0}")]
    Geometry(String),

    /// The four points could not be classified into distinct corners.
    #[error("ambiguous corner ordering ({0}); re-click corners")]
    AmbiguousCorners(String),

    #[error("no document found")]
    NoDocument,

    #[error("{}: {reason}", path.display())]
    Decode { path: PathBuf, reason: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {reason}", path.display())]
    Encode { path: PathBuf, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
