use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("graph has {n} vertices, at most {max} are supported here")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex x{0} is out of range")]
    VertexOutOfRange(usize),

    #[error("deleting x{vertex} leaves x{isolated} isolated")]
    IsolatedVertex { vertex: usize, isolated: usize },

    #[error("cap vector has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid caps: {0}")]
    InvalidCaps(String),

    #[error("work budget of {limit} exceeded while {context}")]
    BudgetExceeded { limit: u64, context: String },

    #[error("monomial has odd degree {0} and cannot be a product of edges")]
    OddDegree(u32),

    #[error("brute-force oracle is limited to cap sums <= {max}, got {sum}")]
    OracleBound { sum: u32, max: u32 },

    #[error("invalid submodular function: {0}")]
    InvalidSubmodular(String),

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not unicyclic")]
    NotUnicyclic,

    #[error("no classifier covers this graph")]
    NoClassifier,

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
