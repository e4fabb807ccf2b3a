use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("pair ({0}, {1}) is not an edge")]
    NonEdge(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("search space of {needed} candidates exceeds the ceiling of {ceiling}")]
    SearchBudgetExceeded { needed: u128, ceiling: u64 },
    #[error("bad pattern: {0}")]
    BadPattern(String),
    #[error("source graph has an isolated vertex ({0})")]
    IsolatedVertex(usize),
    #[error("source graph has a universal vertex ({0})")]
    UniversalVertexPresent(usize),
    #[error("source graph too small: {0}")]
    TooSmall(String),
    #[error("pattern has no isolated vertex")]
    NoIsolatedVertex,
    #[error("output would have {needed} vertices, above the limit of {limit}")]
    SizeGuard { needed: u128, limit: usize },
    #[error("source graph is disconnected")]
    DisconnectedSource,
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("unsupported reduction: {0}")]
    UnsupportedReduction(String),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonEdge(..) => "NonEdge",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::Disconnected => "Disconnected",
            Error::BadParameter(_) => "BadParameter",
            Error::SearchBudgetExceeded { .. } => "SearchBudgetExceeded",
            Error::BadPattern(_) => "BadPattern",
            Error::IsolatedVertex(_) => "IsolatedVertex",
            Error::UniversalVertexPresent(_) => "UniversalVertexPresent",
            Error::TooSmall(_) => "TooSmall",
            Error::NoIsolatedVertex => "NoIsolatedVertex",
            Error::SizeGuard { .. } => "SizeGuard",
            Error::DisconnectedSource => "DisconnectedSource",
            Error::InvalidWitness(_) => "InvalidWitness",
            Error::UnsupportedReduction(_) => "UnsupportedReduction",
            Error::MalformedGraph6(_) => "MalformedGraph6",
        }
    }

    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NonEdge(..) => 10,
            Error::InvalidPartition(_) => 11,
            Error::Disconnected => 12,
            Error::BadParameter(_) => 13,
            Error::SearchBudgetExceeded { .. } => 14,
            Error::BadPattern(_) => 15,
            Error::IsolatedVertex(_) => 16,
            Error::UniversalVertexPresent(_) => 17,
            Error::TooSmall(_) => 18,
            Error::NoIsolatedVertex => 19,
            Error::SizeGuard { .. } => 20,
            Error::DisconnectedSource => 21,
            Error::InvalidWitness(_) => 22,
            Error::UnsupportedReduction(_) => 23,
            Error::MalformedGraph6(_) => 24,
        }
    }

    pub const EXIT_CODES: [(&'static str, i32); 15] = [
        ("NonEdge", 10),
        ("InvalidPartition", 11),
        ("Disconnected", 12),
        ("BadParameter", 13),
        ("SearchBudgetExceeded", 14),
        ("BadPattern", 15),
        ("IsolatedVertex", 16),
        ("UniversalVertexPresent", 17),
        ("TooSmall", 18),
        ("NoIsolatedVertex", 19),
        ("SizeGuard", 20),
        ("DisconnectedSource", 21),
        ("InvalidWitness", 22),
        ("UnsupportedReduction", 23),
        ("MalformedGraph6", 24),
    ];
}
