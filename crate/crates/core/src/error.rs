use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::vset::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not an antichain: {0:?} is contained in {1:?}")]
    NotAntichain(Vec<usize>, Vec<usize>),
    #[error("edge {0:?} has fewer than two vertices")]
    DegenerateEdge(Vec<usize>),
    #[error("bipartition violated by edge {0}-{1}")]
    NotBipartite(usize, usize),
    #[error("bipartite graph is not Sperner on side {0}")]
    NotSperner(u8),
    #[error("{0:?} is not a face")]
    NotAFace(Vec<usize>),
    #[error("void complex has no homology")]
    VoidComplex,
    #[error("graph has no edges")]
    Edgeless,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("ground set of {size} exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("computation budget exceeded")]
    BudgetExceeded,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
