use std::path::PathBuf;

use crate::polishnet::PolishNetParams;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("empty sequence")]
    EmptySequence,

    #[error("sequence too short: {len} frames cannot drop {trim} from each end")]
    SequenceTooShort { len: usize, trim: usize },

    #[error("unknown colormap: {0}")]
    UnknownColormap(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("no manual seed annotation for subject {subject_id}, posture {posture_id}")]
    NoSeedAnnotation { subject_id: u32, posture_id: u32 },

    #[error("config error: {0}")]
    Config(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("weight schema error: {0}")]
    WeightSchema(String),

    #[error("numerical error: {0}")]
    Numerical(String),

    #[error("training diverged at iteration {iteration}: {reason}")]
    TrainingDiverged {
        iteration: usize,
        reason: String,
        last_good: Box<PolishNetParams>,
    },

    #[error("reference unavailable: {0}")]
    ReferenceUnavailable(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
