use thiserror::Error;

/// Errors raised by the graph, ideal and regularity layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph document: {0}")]
    Parse(String),
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("loop edge on vertex `{0}`")]
    LoopEdge(String),
    #[error("edge `{0}`-`{1}` declared more than once")]
    DuplicateEdge(String, String),
    #[error("vertex `{name}` has nonpositive weight {weight}")]
    NonPositiveWeight { name: String, weight: i64 },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("graphs with more than {max} vertices are not supported (got {got})")]
    TooManyVertices { max: usize, got: usize },
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),
    #[error("no weight given for variable `{0}`")]
    MissingWeight(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("regularity engines disagree: lcm lattice gives {lcm}, degree complexes give {takayama}")]
    EngineDisagreement { lcm: i64, takayama: i64 },
    #[error("resource cap exceeded: {what} would need more than {cap} elements")]
    ResourceCap { what: &'static str, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
