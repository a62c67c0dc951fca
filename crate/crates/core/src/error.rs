use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("{what}: size {actual} exceeds the cap of {limit}")]
    SizeCap {
        what: &'static str,
        limit: u64,
        actual: u64,
    },
    #[error("improper coloring: {0}")]
    ImproperColoring(String),
    #[error("contract violated: {0}")]
    Contract(String),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("invalid group data: {0}")]
    InvalidGroup(String),
    #[error("invalid character table: {0}")]
    InvalidTable(String),
    #[error("data integrity: {0}")]
    Integrity(String),
    #[error("invalid recipe: {0}")]
    InvalidRecipe(String),
    #[error("cannot realize: {0}")]
    Capability(String),
    #[error("no prime found below {0}")]
    SearchExhausted(u64),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
