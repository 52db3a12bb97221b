use std::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex id that is not (or no longer) part of the graph.
    NoSuchVertex(u32),
    /// An edge id that is not (or no longer) part of the graph.
    NoSuchEdge(u32),
    /// Self-loops are rejected everywhere; they never affect edge connectivity.
    SelfLoop { line: Option<usize> },
    /// Malformed input text, with the 1-based line it was found on.
    Parse { line: usize, msg: String },
    /// Connectivity thresholds must satisfy k >= 1.
    InvalidK(u32),
    /// Forest decompositions need at least one forest.
    InvalidForestCount(u32),
    /// An exhaustive routine was asked to run past its size cap.
    TooLarge { size: usize, cap: usize },
    /// The two sides of a volume race met: the seeds were k-edge-connected,
    /// which violates the caller's contract.
    RaceOverlap { u: u32, v: u32 },
    /// No live edge with the given endpoints remains.
    NoSuchEndpointEdge { u: u64, v: u64 },
    /// Infeasible generator or command parameters.
    BadParams(String),
    /// A vertex partition violated disjointness or coverage.
    InvalidPartition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NoSuchVertex(v) => write!(f, "no such vertex: {v}"),
            Error::NoSuchEdge(e) => write!(f, "no such edge: {e}"),
            Error::SelfLoop { line: Some(l) } => write!(f, "line {l}: self-loop rejected"),
            Error::SelfLoop { line: None } => write!(f, "self-loop rejected"),
            Error::Parse { line, msg } => write!(f, "line {line}: {msg}"),
            Error::InvalidK(k) => write!(f, "k must be >= 1, got {k}"),
            Error::InvalidForestCount(t) => write!(f, "forest count must be >= 1, got {t}"),
            Error::TooLarge { size, cap } => {
                write!(f, "input of size {size} exceeds cap {cap}")
            }
            Error::RaceOverlap { u, v } => {
                write!(
                    f,
                    "race seeds {u} and {v} are k-edge-connected; the races overlap"
                )
            }
            Error::NoSuchEndpointEdge { u, v } => {
                write!(f, "no live edge between {u} and {v}")
            }
            Error::BadParams(msg) => write!(f, "bad parameters: {msg}"),
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
