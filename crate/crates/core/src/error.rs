use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),

    #[error("parameter out of range for {name}: {detail}")]
    ParameterOutOfRange { name: String, detail: String },

    #[error("graph order {order} exceeds the limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),

    #[error("malformed graph literal `{literal}`: {reason}")]
    GraphLiteral { literal: String, reason: String },

    #[error("graph has no edges")]
    Edgeless,

    #[error("target on {target} vertices does not fit into K_{host}")]
    TargetTooLarge { target: usize, host: usize },

    #[error("target graph has isolated vertices; remove them first")]
    IsolatedVertices,

    #[error("coloring has {got} entries, expected {expected} for n = {n}")]
    ColoringLength { n: usize, expected: usize, got: usize },

    #[error("vertex {vertex} is not in the chosen vertex set")]
    VertexNotInSet { vertex: usize },

    #[error("construction not applicable: {0}")]
    Construction(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("inconsistent bounds: lower {lower} exceeds upper {upper}")]
    InconsistentBounds { lower: u64, upper: u64 },

    #[error("search did not finish within its budget")]
    Timeout,

    #[error("certificate parse error at line {line}: {reason}")]
    CertificateParse { line: usize, reason: String },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
