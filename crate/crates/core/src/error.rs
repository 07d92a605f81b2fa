use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("arc ({0}, {1}) is a loop")]
    LoopArc(usize, usize),
    #[error("arc ({u}, {v}) has an endpoint outside 0..{n}")]
    ArcOutOfRange { u: usize, v: usize, n: usize },
    #[error("a digraph needs at least one vertex")]
    EmptyDigraph,
    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),
    #[error("digraph is not strongly connected: {0}")]
    NotStronglyConnected(&'static str),
    #[error("alpha = {0} is outside [0, 1)")]
    AlphaOutOfRange(f64),
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("power iteration did not converge after {iterations} iterations; interval [{lo}, {hi}]")]
    NoConvergence { iterations: usize, lo: f64, hi: f64 },
    #[error("vector entry {index} is not positive ({value})")]
    NonPositiveVector { index: usize, value: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is not equitable: block ({row_part}, {col_part}) row sums deviate by {deviation:e}")]
    NotEquitable {
        row_part: usize,
        col_part: usize,
        deviation: f64,
    },
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("arc ({0}, {1}) is not in the digraph")]
    MissingArc(usize, usize),
    #[error("redirection would create a loop or a multiple arc at vertex {0}")]
    BadRedirect(usize),
    #[error("subdividing a directed cycle is excluded (the monotonicity statement assumes G is not a cycle)")]
    SubdivideCycle,
    #[error("order {n} requires the long-run flag")]
    LongRunRequired { n: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cannot write output: {msg}")]
    Output { kind: std::io::ErrorKind, msg: String },
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
}
