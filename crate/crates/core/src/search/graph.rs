use std::collections::HashSet;

use crate::drawing::{Drawing, Edge};
use crate::error::SearchError;

/// A bipartite graph without a fixed vertex order. Vertices are labelled
/// `1..=left` and `1..=right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractBipartiteGraph {
    left: usize,
    right: usize,
    edges: Vec<Edge>,
}

impl AbstractBipartiteGraph {
    pub fn new<I, E>(left: usize, right: usize, edges: I) -> Result<Self, SearchError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let edges: Vec<Edge> = edges.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for &e in &edges {
            if !(1..=left).contains(&e.top) || !(1..=right).contains(&e.bottom) {
                return Err(SearchError::Graph(format!("edge {e} outside {left}x{right}")));
            }
            if !seen.insert(e) {
                return Err(SearchError::Graph(format!("duplicate edge {e}")));
            }
        }
        Ok(AbstractBipartiteGraph { left, right, edges })
    }

    pub fn complete(left: usize, right: usize) -> Self {
        let edges = (1..=left).flat_map(|u| (1..=right).map(move |v| Edge::new(u, v))).collect();
        AbstractBipartiteGraph { left, right, edges }
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.left, self.right)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.left + self.right
    }

    /// Places vertex `u` at position `top_order[u-1]` and `v` at
    /// `bottom_order[v-1]` (1-based positions).
    pub fn draw(&self, top_order: &[usize], bottom_order: &[usize]) -> Drawing {
        Drawing::new(
            self.left.max(1),
            self.right.max(1),
            self.edges.iter().map(|e| Edge::new(top_order[e.top - 1], bottom_order[e.bottom - 1])),
        )
        .expect("permuted graph is a valid drawing")
    }
}

impl From<&Drawing> for AbstractBipartiteGraph {
    fn from(d: &Drawing) -> Self {
        AbstractBipartiteGraph { left: d.p(), right: d.q(), edges: d.edges().to_vec() }
    }
}
