use thiserror::Error;

/// Crate-wide error type. Structural preconditions of the solvers and the
/// generators map to dedicated variants so callers can react to them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop ({u},{u}) is not allowed")]
    SelfLoop { u: usize },
    #[error("duplicate arc ({u},{v})")]
    DuplicateArc { u: usize, v: usize },
    #[error("arc ({u},{v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("not a vertex cover: arc ({u},{v}) has no endpoint in the set")]
    NotAVertexCover { u: usize, v: usize },
    #[error("digraph is not acyclic")]
    NotADag,
    #[error("digraph is not a single-sourced layered DAG")]
    NotSingleSourcedLayered,
    #[error("digraph is not strongly connected")]
    NotStronglyConnected,
    #[error("instance too large: {n} vertices exceeds the exhaustive-search limit {limit}")]
    InstanceTooLarge { n: usize, limit: usize },
    #[error("not a dominating broadcast: vertex {uncovered} is uncovered")]
    InvalidBroadcast { uncovered: usize },
    #[error("not a multipacking: ball of radius {radius} at vertex {vertex} holds too many members")]
    InvalidMultipacking { vertex: usize, radius: u32 },
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("color class {class} has fewer than two vertices")]
    ClassTooSmall { class: usize },
    #[error("vertex {vertex} is isolated")]
    IsolatedVertex { vertex: usize },
    #[error("edge ({u},{v}) joins two vertices of the same color class")]
    SameClassEdge { u: usize, v: usize },
    #[error("line {line}: vertex {vertex} listed twice")]
    DuplicateVertex { vertex: usize, line: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
