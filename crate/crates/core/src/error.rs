use thiserror::Error;

use crate::drawing::Edge;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DrawingError {
    #[error("both layers need at least one vertex (got p={p}, q={q})")]
    EmptyLayer { p: usize, q: usize },
    #[error("edge #{index} {edge} is outside the {p}x{q} grid (indices are 1-based)")]
    OutOfRange { index: usize, edge: Edge, p: usize, q: usize },
    #[error("edge #{index} {edge} is listed twice")]
    Duplicate { index: usize, edge: Edge },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} needs size >= {min}, got {got}")]
    TooSmall { family: &'static str, min: usize, got: usize },
    #[error("general k family needs k >= 2, got {0}")]
    KTooSmall(u32),
    #[error("general k family needs p > l = {ell} (k = {k}), got p = {p}")]
    BandTooWide { p: usize, ell: usize, k: u32 },
    #[error("unknown family `{0}`")]
    Unknown(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("n = {0} is outside the supported range 2..=14")]
    VertexCount(usize),
    #[error("quasiplanarity needs h >= 2, got {0}")]
    QuasiplanarH(u32),
    #[error("graph has {0} vertices; orderings search supports at most 10")]
    TooLarge(usize),
    #[error("cannot place {m} edges on a {p}x{q} grid")]
    TooManyEdges { p: usize, q: usize, m: usize },
    #[error("a connected drawing on {p}+{q} vertices needs between {min} and {max} edges, got {m}")]
    ConnectedEdgeCount { p: usize, q: usize, m: usize, min: usize, max: usize },
    #[error("invalid graph: {0}")]
    Graph(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("the formula needs n >= 4, got n = {0}")]
    TooFewVertices(usize),
    #[error("k = {k} is below t = {t}; use the small-k table instead")]
    KBelowTable { k: u32, t: usize },
    #[error("k = {0} < 2: such drawings are trivially 3-quasiplanar")]
    KBelowTwo(u32),
    #[error("coefficient table: {0}")]
    Table(String),
}
