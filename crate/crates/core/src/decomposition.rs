//! Path decompositions of width at most `k + 1` for k-planar drawings, and
//! a validator for arbitrary path decompositions.
//!
//! Edges are ordered by `(top, bottom)`. For the edge at position `i` the
//! bag holds its two endpoints plus every bottom vertex `v_y` that is
//! *related* to it: `v_y` has an edge crossing edge `i`, and the first and
//! last edges at `v_y` sit strictly before and after position `i`. Each
//! related vertex accounts for a distinct crossing edge, so bags have at
//! most `k + 2` vertices.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::drawing::{Drawing, Edge, Vertex};
use crate::search::AbstractBipartiteGraph;

/// Edges sorted by top index, then bottom index.
pub fn edge_order(d: &Drawing) -> Vec<Edge> {
    let mut edges = d.edges().to_vec();
    edges.sort_unstable();
    edges
}

/// First and last position (0-based, in [`edge_order`]) of the edges at
/// each bottom vertex, plus the smallest and largest neighbouring top index.
struct BottomSpans {
    first: Vec<usize>,
    last: Vec<usize>,
    min_top: Vec<usize>,
    max_top: Vec<usize>,
}

impl BottomSpans {
    fn new(q: usize, ordered: &[Edge]) -> Self {
        let mut spans = BottomSpans {
            first: vec![usize::MAX; q + 1],
            last: vec![0; q + 1],
            min_top: vec![usize::MAX; q + 1],
            max_top: vec![0; q + 1],
        };
        for (pos, e) in ordered.iter().enumerate() {
            let y = e.bottom;
            spans.first[y] = spans.first[y].min(pos);
            spans.last[y] = spans.last[y].max(pos);
            spans.min_top[y] = spans.min_top[y].min(e.top);
            spans.max_top[y] = spans.max_top[y].max(e.top);
        }
        spans
    }

    fn related(&self, ordered: &[Edge], pos: usize) -> Vec<usize> {
        let e = ordered[pos];
        (1..self.first.len())
            .filter(|&y| {
                if self.first[y] == usize::MAX || !(self.first[y] < pos && pos < self.last[y]) {
                    return false;
                }
                // some neighbour of v_y lies on the far side of u_top
                (y < e.bottom && self.max_top[y] > e.top) || (y > e.bottom && self.min_top[y] < e.top)
            })
            .collect()
    }
}

/// Bottom vertices related to the edge at 1-based `position` in
/// [`edge_order`]. Empty when `position` is out of range.
pub fn related_vertices(d: &Drawing, position: usize) -> Vec<Vertex> {
    let ordered = edge_order(d);
    if position == 0 || position > ordered.len() {
        return Vec::new();
    }
    BottomSpans::new(d.q(), &ordered).related(&ordered, position - 1).into_iter().map(Vertex::Bottom).collect()
}

/// Which layer played the role of the ordered layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    TopPrimary,
    BottomPrimary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<Vertex>>,
    pub orientation: Orientation,
}

#[derive(Serialize, Deserialize)]
struct PathDecompositionJson {
    bags: Vec<Vec<String>>,
    width: usize,
}

impl PathDecomposition {
    pub fn from_bags(bags: Vec<Vec<Vertex>>) -> Self {
        PathDecomposition { bags, orientation: Orientation::TopPrimary }
    }

    /// Largest bag size minus one; zero for an empty decomposition.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn to_json(&self) -> String {
        let json = PathDecompositionJson {
            bags: self.bags.iter().map(|b| b.iter().map(Vertex::to_string).collect()).collect(),
            width: self.width(),
        };
        serde_json::to_string(&json).expect("decomposition serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let json: PathDecompositionJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let bags = json
            .bags
            .iter()
            .map(|bag| bag.iter().map(|s| s.parse::<Vertex>()).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PathDecomposition::from_bags(bags))
    }
}

fn build_oriented(d: &Drawing) -> Vec<Vec<Vertex>> {
    let ordered = edge_order(d);
    let spans = BottomSpans::new(d.q(), &ordered);
    let mut bags: Vec<Vec<Vertex>> = (0..ordered.len())
        .map(|pos| {
            let e = ordered[pos];
            let mut bag = vec![Vertex::Top(e.top), Vertex::Bottom(e.bottom)];
            bag.extend(spans.related(&ordered, pos).into_iter().map(Vertex::Bottom));
            bag
        })
        .collect();
    bags.extend(d.isolated_vertices().into_iter().map(|v| vec![v]));
    bags
}

/// One bag per edge, then one singleton bag per isolated vertex. The
/// construction runs with either layer as the ordered one and the narrower
/// result is kept (top layer on ties). A drawing without edges gets no edge
/// bags, only the singleton bags of its vertices.
pub fn build_path_decomposition(d: &Drawing) -> PathDecomposition {
    let primary = PathDecomposition { bags: build_oriented(d), orientation: Orientation::TopPrimary };
    let mirrored_bags =
        build_oriented(&d.transposed()).into_iter().map(|bag| bag.into_iter().map(Vertex::flipped).collect()).collect();
    let mirrored = PathDecomposition { bags: mirrored_bags, orientation: Orientation::BottomPrimary };
    if mirrored.width() < primary.width() {
        mirrored
    } else {
        primary
    }
}

/// Anything with two layers of 1-based vertices and an edge list.
pub trait BipartiteGraph {
    fn layer_sizes(&self) -> (usize, usize);
    fn edge_list(&self) -> Vec<Edge>;
}

impl BipartiteGraph for Drawing {
    fn layer_sizes(&self) -> (usize, usize) {
        (self.p(), self.q())
    }

    fn edge_list(&self) -> Vec<Edge> {
        self.edges().to_vec()
    }
}

impl BipartiteGraph for AbstractBipartiteGraph {
    fn layer_sizes(&self) -> (usize, usize) {
        self.sizes()
    }

    fn edge_list(&self) -> Vec<Edge> {
        self.edges().to_vec()
    }
}

/// A violated path-decomposition property, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// (P.1) bag `bag` (0-based) names a vertex the graph does not have.
    UnknownVertex { bag: usize, vertex: Vertex },
    /// (P.2) the vertex is in no bag.
    UncoveredVertex { vertex: Vertex },
    /// (P.3) no bag holds both endpoints of the edge.
    UncoveredEdge { edge: Edge },
    /// (P.4) the vertex is in bags `before` and `after` but not in `gap`.
    Disconnected { vertex: Vertex, before: usize, gap: usize, after: usize },
}

impl Violation {
    pub fn property(&self) -> &'static str {
        match self {
            Violation::UnknownVertex { .. } => "P.1",
            Violation::UncoveredVertex { .. } => "P.2",
            Violation::UncoveredEdge { .. } => "P.3",
            Violation::Disconnected { .. } => "P.4",
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::UnknownVertex { bag, vertex } => {
                write!(f, "P.1: bag {} contains unknown vertex {vertex}", bag + 1)
            }
            Violation::UncoveredVertex { vertex } => write!(f, "P.2: vertex {vertex} is in no bag"),
            Violation::UncoveredEdge { edge } => write!(f, "P.3: no bag contains both ends of {edge}"),
            Violation::Disconnected { vertex, before, gap, after } => {
                write!(f, "P.4: vertex {vertex} is in bags {} and {} but not in bag {}", before + 1, after + 1, gap + 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub width: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_decomposition<G: BipartiteGraph + ?Sized>(g: &G, pd: &PathDecomposition) -> ValidationReport {
    let (p, q) = g.layer_sizes();
    let exists = |v: Vertex| match v {
        Vertex::Top(i) => (1..=p).contains(&i),
        Vertex::Bottom(x) => (1..=q).contains(&x),
    };
    let mut violations = Vec::new();

    let mut occurrences: HashMap<Vertex, Vec<usize>> = HashMap::new();
    for (b, bag) in pd.bags.iter().enumerate() {
        for &v in bag.iter().collect::<BTreeSet<_>>() {
            if !exists(v) {
                violations.push(Violation::UnknownVertex { bag: b, vertex: v });
            }
            occurrences.entry(v).or_default().push(b);
        }
    }

    for v in (1..=p).map(Vertex::Top).chain((1..=q).map(Vertex::Bottom)) {
        if !occurrences.contains_key(&v) {
            violations.push(Violation::UncoveredVertex { vertex: v });
        }
    }

    let bag_sets: Vec<BTreeSet<Vertex>> = pd.bags.iter().map(|b| b.iter().copied().collect()).collect();
    for edge in g.edge_list() {
        let (a, b) = (Vertex::Top(edge.top), Vertex::Bottom(edge.bottom));
        if !bag_sets.iter().any(|s| s.contains(&a) && s.contains(&b)) {
            violations.push(Violation::UncoveredEdge { edge });
        }
    }

    let mut vertices: Vec<&Vertex> = occurrences.keys().collect();
    vertices.sort();
    for v in vertices {
        let bags = &occurrences[v];
        if let Some(w) = bags.windows(2).find(|w| w[1] > w[0] + 1) {
            violations.push(Violation::Disconnected { vertex: *v, before: w[0], gap: w[0] + 1, after: w[1] });
        }
    }

    ValidationReport { violations, width: pd.width() }
}
