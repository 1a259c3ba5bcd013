use std::path::PathBuf;

use thiserror::Error;

use crate::graph::Edge;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    /// The input is outside the domain an operation is defined on
    /// (isolated vertices, non-trees passed to tree routines, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The input is well-formed but exceeds a size bound of an exact method.
    #[error("capability exceeded: {0}")]
    Capability(String),

    #[error("search budget of {limit} nodes exhausted")]
    Budget { limit: u64 },

    /// No vertex in `N(anchor)` is ev-dominated by `edge` alone.
    #[error("edge {edge} has no private vertex next to {anchor}; the set is not a minimum ev-dominating set")]
    NotMinimumWitness { edge: Edge, anchor: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// Solver refused for size or budget reasons rather than a wrong input.
    pub fn is_capability(&self) -> bool {
        matches!(self, Error::Capability(_) | Error::Budget { .. })
    }
}
