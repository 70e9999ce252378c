use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph of order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("relabeling is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("line graph of an edgeless graph is undefined")]
    EdgelessGraph,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {0:#04x} outside the printable graph6 range 0x3f..=0x7e")]
    BadChar(u8),
    #[error("malformed graph6 length field")]
    BadLength,
    #[error("order {0} exceeds the supported graph6 range (max {max})", max = crate::graph6::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("bit payload has wrong size: expected {expected} payload bytes, found {found}")]
    PayloadSize { expected: usize, found: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EulerError {
    #[error("empty vertex set")]
    EmptySet,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("duplicate vertex {0} in input set")]
    DuplicateVertex(usize),
    #[error("vertex set is not closed under adjacency: edge ({0}, {1}) leaves the set")]
    NotClosed(usize, usize),
    #[error("vertex {0} has odd degree {1}")]
    OddDegree(usize, usize),
    #[error("vertex set does not induce a connected subgraph")]
    Disconnected,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("brute-force cap exceeded: n = {0} > {1}")]
    BruteForceCap(usize, usize),
    #[error(
        "degree bound needs r >= 1, 0 <= p <= r, and n >= r + 1 (got n = {n}, r = {r}, p = {p})"
    )]
    BadBoundParams { n: usize, r: usize, p: usize },
    #[error("matching lower bound needs odd r >= 3 and n >= r + 1 (got n = {n}, r = {r})")]
    BadMatchingBoundParams { n: usize, r: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("two-factorization needs positive even regularity, got {0}")]
    NotEvenRegular(usize),
    #[error("graph is not {0}-regular")]
    WrongRegularity(usize),
    #[error("invalid degree band [{0}, {1}]")]
    BadDegreeBand(usize, usize),
    #[error("edge id {0} out of range (graph has {1} edges)")]
    EdgeIdOutOfRange(usize, usize),
    #[error("duplicate edge id {0}")]
    DuplicateEdgeId(usize),
    #[error("subgraph is not a [{lo}, {hi}]-factor: vertex {vertex} has degree {degree}")]
    OutsideDegreeBand {
        lo: usize,
        hi: usize,
        vertex: usize,
        degree: usize,
    },
    #[error("path cover cap exceeded: n = {0} > {1}")]
    PathCoverCap(usize, usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("sharpness family needs 1 <= p < r and t >= 1 (got r = {r}, p = {p}, t = {t})")]
    BadSharpnessParams { r: usize, p: usize, t: usize },
    #[error("one-factorization needs a positive even order, got {0}")]
    OddOrder(usize),
    #[error("factor-free family needs odd k >= 3, got {0}")]
    BadFactorlessParam(usize),
    #[error("path packing needs at least one path")]
    EmptyPacking,
    #[error("invalid graph size: {0}")]
    BadSize(String),
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("canonical form cap exceeded: n = {0} > {1}")]
    CanonicalCap(usize, usize),
    #[error("enumeration cap exceeded: n = {0} > {1}")]
    EnumerationCap(usize, usize),
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
