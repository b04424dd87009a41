use thiserror::Error;

/// Errors reported by library operations.
///
/// Property *failures* (a code that is not 1-perfect, a partition that is not
/// equitable, a graph that is not bipartite) are not errors; they are ordinary
/// return values carrying witnesses. Errors are reserved for misuse, malformed
/// input, exceeded budgets, and internal invariant violations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: u32, right: u32 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid code file: {0}")]
    Format(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("budget exceeded: operation needs {needed} units, budget is {budget}")]
    Budget { needed: u64, budget: u64 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A consistency assertion failed after a construction that should make it
    /// impossible. Reaching this variant indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

/// Outcome of a property check: either the property holds, or it fails with a
/// replayable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Holds => Verdict::Holds,
            Verdict::Fails(w) => Verdict::Fails(f(w)),
        }
    }
}
