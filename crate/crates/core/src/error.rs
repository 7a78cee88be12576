use thiserror::Error;

use crate::words::CrystalIndex;

/// Errors raised by the library. Operators that merely "act as zero" never
/// produce an error; they return `None`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("letter {letter} exceeds rank {rank}")]
    RankExceeded { letter: String, rank: usize },

    #[error("crystal index {index} is not defined in rank {rank}")]
    InvalidIndex { index: CrystalIndex, rank: usize },

    #[error("rank {rank} is too small: {reason}")]
    RankTooSmall { rank: usize, reason: &'static str },

    #[error("parts {0:?} do not form a strict partition")]
    NotStrictPartition(Vec<usize>),

    #[error("rows do not fit shape {shape:?}")]
    ShapeMismatch { shape: Vec<usize> },

    #[error("hook word test needs a nonempty row")]
    EmptyRow,

    #[error("not a primed decomposition tableau: {0}")]
    NotDecompositionTableau(String),

    #[error("not a standard recording tableau: {0}")]
    NotRecordingTableau(String),

    #[error("tableau pair has no preimage under decomposition insertion: {0}")]
    NoPreimage(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("element set is not closed under the crystal operators: {0}")]
    NotClosed(String),

    #[error("crystal graph is not normal: {0}")]
    NotNormal(String),

    #[error("polynomial is not a Z-combination of Schur Q-polynomials; residual {residual}")]
    NotExpressible { residual: String },
}

pub type Result<T> = std::result::Result<T, Error>;
