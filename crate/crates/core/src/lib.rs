//! Crossing structure, extremal density search and path decompositions for
//! 2-layer k-planar drawings.
//!
//! A [`Drawing`] fixes the order of the vertices on two horizontal lines;
//! every question here (crossings, k-planarity, quasiplanarity, bricks,
//! pathwidth) is answered from those two orders alone.

pub mod bounds;
pub mod bricks;
pub mod crossing;
pub mod decomposition;
pub mod drawing;
pub mod error;
pub mod export;
pub mod families;
mod fenwick;
pub mod oracle;
pub mod report;
pub mod reproduce;
pub mod search;

pub use bricks::{brick_decomposition, Brick, BrickDecomposition};
pub use crossing::{
    crossing_profile, edges_cross, is_h_quasiplanar, is_k_planar, largest_crossing_family, mutually_crossing_number,
    CrossingProfile,
};
pub use decomposition::{build_path_decomposition, validate_decomposition, PathDecomposition};
pub use drawing::{Drawing, Edge, Vertex};
pub use error::{BoundsError, DrawingError, FamilyError, SearchError};
pub use families::{Family, FamilySpec};
pub use report::{analyze, AnalysisReport};
pub use search::{max_density, minimax_k, AbstractBipartiteGraph, Constraint, SearchResult};
