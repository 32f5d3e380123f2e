use thiserror::Error;

use crate::af::ArgumentId;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument name {0:?}: expected letters, digits or underscore")]
    InvalidArgumentName(String),
    #[error("unknown argument {0}")]
    UnknownArgument(ArgumentId),
    #[error("duplicate argument {0}")]
    DuplicateArgument(ArgumentId),
    #[error("set {{{}}} is not conflict-free", join(.0))]
    NotConflictFree(Vec<ArgumentId>),
    #[error("framework has {count} arguments, above the enumeration cap of {cap}")]
    CapExceeded { count: usize, cap: usize },

    #[error("credal set must hold at least one opinion")]
    EmptyCredalSet,
    #[error("opinion {0} lies outside [0, 1]")]
    OutOfRange(f64),
    #[error("credal sets have mismatched cardinality: expected {expected}, found {found}")]
    MismatchedCardinality { expected: usize, found: usize },
    #[error("nothing to aggregate")]
    NoCredalSets,
    #[error("invalid interval [{lower}, {upper}]")]
    InvalidInterval { lower: f64, upper: f64 },
    #[error("argument {0} has no credal set in the profile")]
    MissingCredalSet(ArgumentId),
    #[error("profile assigns a credal set to {0}, which is not in the framework")]
    ExtraCredalSet(ArgumentId),

    #[error("causal edge ({0}, {1}) coincides with an attack between the same arguments")]
    CausalAttackOverlap(ArgumentId, ArgumentId),
    #[error("causal self-edge on {0}")]
    CausalSelfEdge(ArgumentId),
    #[error("causality graph has a cycle through {}", join(.0))]
    CausalCycle(Vec<ArgumentId>),

    #[error(transparent)]
    Coverage(#[from] CoverageError),
    #[error("UL_BOUNDS needs more than one argument, got {0}")]
    TooFewArguments(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Failure to split an extension into causal groups and independent factors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverageError {
    #[error("argument {0} is not covered by any causal group, isolated or free set")]
    Uncovered(ArgumentId),
    #[error("argument {argument} belongs to several causal groups (tops {})", join(.tops))]
    Overlap {
        argument: ArgumentId,
        tops: Vec<ArgumentId>,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// 1-based source line for parse errors.
    pub fn line(&self) -> Option<usize> {
        match self {
            Error::Parse { line, .. } => Some(*line),
            _ => None,
        }
    }
}

fn join(ids: &[ArgumentId]) -> String {
    ids.iter()
        .map(ArgumentId::as_str)
        .collect::<Vec<_>>()
        .join(",")
}
