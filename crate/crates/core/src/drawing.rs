//! The 2-layer drawing model.
//!
//! A drawing places `p` vertices `u_1..u_p` on the top line and `q` vertices
//! `v_1..v_q` on the bottom line. Edges are straight segments between the two
//! lines, so every crossing is determined by the two vertex orders alone.
//! All indices are 1-based, both in memory and in the JSON format.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::DrawingError;

/// An edge `(u_top, v_bottom)` with 1-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Edge {
    pub top: usize,
    pub bottom: usize,
}

impl Edge {
    pub const fn new(top: usize, bottom: usize) -> Self {
        Edge { top, bottom }
    }

    /// The same segment with the two layers exchanged.
    pub const fn transposed(self) -> Self {
        Edge { top: self.bottom, bottom: self.top }
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.top == other.top || self.bottom == other.bottom
    }
}

impl From<[usize; 2]> for Edge {
    fn from([top, bottom]: [usize; 2]) -> Self {
        Edge { top, bottom }
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.top, e.bottom]
    }
}

impl From<(usize, usize)> for Edge {
    fn from((top, bottom): (usize, usize)) -> Self {
        Edge { top, bottom }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(u{},v{})", self.top, self.bottom)
    }
}

/// A vertex of a drawing, tagged with its layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Top(usize),
    Bottom(usize),
}

impl Vertex {
    pub fn flipped(self) -> Self {
        match self {
            Vertex::Top(i) => Vertex::Bottom(i),
            Vertex::Bottom(x) => Vertex::Top(x),
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Top(i) => write!(f, "u{i}"),
            Vertex::Bottom(x) => write!(f, "v{x}"),
        }
    }
}

impl std::str::FromStr for Vertex {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (layer, index) = s.split_at(s.len().min(1));
        let index: usize = index.parse().map_err(|_| format!("bad vertex label `{s}`"))?;
        match layer {
            "u" => Ok(Vertex::Top(index)),
            "v" => Ok(Vertex::Bottom(index)),
            _ => Err(format!("bad vertex label `{s}`")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawDrawing {
    p: usize,
    q: usize,
    edges: Vec<Edge>,
}

/// An immutable, validated 2-layer drawing.
///
/// Edges are kept in insertion order; `n` and `m` are always derived.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDrawing", into = "RawDrawing")]
pub struct Drawing {
    p: usize,
    q: usize,
    edges: Vec<Edge>,
}

impl TryFrom<RawDrawing> for Drawing {
    type Error = DrawingError;

    fn try_from(raw: RawDrawing) -> Result<Self, Self::Error> {
        Drawing::new(raw.p, raw.q, raw.edges)
    }
}

impl From<Drawing> for RawDrawing {
    fn from(d: Drawing) -> Self {
        RawDrawing { p: d.p, q: d.q, edges: d.edges }
    }
}

impl Drawing {
    pub fn new<I, E>(p: usize, q: usize, edges: I) -> Result<Self, DrawingError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        if p == 0 || q == 0 {
            return Err(DrawingError::EmptyLayer { p, q });
        }
        let edges: Vec<Edge> = edges.into_iter().map(Into::into).collect();
        let mut seen = HashSet::with_capacity(edges.len());
        for (index, &edge) in edges.iter().enumerate() {
            if edge.top == 0 || edge.top > p || edge.bottom == 0 || edge.bottom > q {
                return Err(DrawingError::OutOfRange { index, edge, p, q });
            }
            if !seen.insert(edge) {
                return Err(DrawingError::Duplicate { index, edge });
            }
        }
        Ok(Drawing { p, q, edges })
    }

    /// Drawing without edges.
    pub fn empty(p: usize, q: usize) -> Result<Self, DrawingError> {
        Drawing::new(p, q, Vec::<Edge>::new())
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, edge: Edge) -> bool {
        self.edges.contains(&edge)
    }

    /// Swaps the two layers. Crossings are preserved.
    pub fn transposed(&self) -> Drawing {
        Drawing { p: self.q, q: self.p, edges: self.edges.iter().map(|e| e.transposed()).collect() }
    }

    /// Reverses both layers (a half turn of the picture). Crossings are preserved.
    pub fn rotated(&self) -> Drawing {
        Drawing {
            p: self.p,
            q: self.q,
            edges: self.edges.iter().map(|e| Edge::new(self.p + 1 - e.top, self.q + 1 - e.bottom)).collect(),
        }
    }

    pub fn top_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.p + 1];
        for e in &self.edges {
            deg[e.top] += 1;
        }
        deg
    }

    pub fn bottom_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.q + 1];
        for e in &self.edges {
            deg[e.bottom] += 1;
        }
        deg
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.p).map(Vertex::Top).chain((1..=self.q).map(Vertex::Bottom))
    }

    /// Vertices of degree zero, top layer first.
    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        let top = self.top_degrees();
        let bottom = self.bottom_degrees();
        (1..=self.p)
            .filter(|&i| top[i] == 0)
            .map(Vertex::Top)
            .chain((1..=self.q).filter(|&x| bottom[x] == 0).map(Vertex::Bottom))
            .collect()
    }

    /// Edge sets of the connected components, in order of their first edge.
    /// Isolated vertices do not form components here.
    pub fn edge_components(&self) -> Vec<Vec<Edge>> {
        let mut parent: Vec<usize> = (0..self.n()).collect();
        fn find(parent: &mut [usize], mut a: usize) -> usize {
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        let top_id = |i: usize| i - 1;
        let bottom_id = |x: usize| self.p + x - 1;
        for e in &self.edges {
            let a = find(&mut parent, top_id(e.top));
            let b = find(&mut parent, bottom_id(e.bottom));
            if a != b {
                parent[a] = b;
            }
        }
        let mut order: Vec<usize> = Vec::new();
        let mut groups: std::collections::HashMap<usize, Vec<Edge>> = Default::default();
        for &e in &self.edges {
            let root = find(&mut parent, top_id(e.top));
            groups
                .entry(root)
                .or_insert_with(|| {
                    order.push(root);
                    Vec::new()
                })
                .push(e);
        }
        order.into_iter().map(|r| groups.remove(&r).unwrap()).collect()
    }

    /// True when the graph is connected and has no isolated vertex.
    pub fn is_connected(&self) -> bool {
        self.m() > 0 && self.isolated_vertices().is_empty() && self.edge_components().len() == 1
    }

    pub fn from_json(text: &str) -> Result<Drawing, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("drawing serializes")
    }
}
