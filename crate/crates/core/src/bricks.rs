//! Decomposition of a drawing into bricks: the sub-drawings delimited by
//! consecutive crossing-free edges.

use crate::crossing::crossing_profile;
use crate::drawing::{Drawing, Edge};

/// The sub-drawing induced by `u_{top.0}..u_{top.1}` and
/// `v_{bottom.0}..v_{bottom.1}`, bounded by two planar edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Brick {
    pub top: (usize, usize),
    pub bottom: (usize, usize),
    pub edges: Vec<Edge>,
}

impl Brick {
    pub fn left_boundary(&self) -> Edge {
        Edge::new(self.top.0, self.bottom.0)
    }

    pub fn right_boundary(&self) -> Edge {
        Edge::new(self.top.1, self.bottom.1)
    }

    pub fn top_len(&self) -> usize {
        self.top.1 - self.top.0 + 1
    }

    pub fn bottom_len(&self) -> usize {
        self.bottom.1 - self.bottom.0 + 1
    }

    /// A trivial brick has a single vertex on one of its layers.
    pub fn is_trivial(&self) -> bool {
        self.top_len() == 1 || self.bottom_len() == 1
    }

    /// `Some((a, b))` when the brick is exactly the complete bipartite
    /// graph on its `a` top and `b` bottom vertices.
    pub fn complete_bipartite(&self) -> Option<(usize, usize)> {
        (self.edges.len() == self.top_len() * self.bottom_len()).then_some((self.top_len(), self.bottom_len()))
    }

    /// Complete bipartite `K_{a,b}` in either layer orientation.
    pub fn is_complete(&self, a: usize, b: usize) -> bool {
        matches!(self.complete_bipartite(), Some((x, y)) if (x, y) == (a, b) || (x, y) == (b, a))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrickDecomposition {
    /// Crossing-free edges in edge order (top index, then bottom index).
    pub planar_edges: Vec<Edge>,
    pub bricks: Vec<Brick>,
}

impl BrickDecomposition {
    /// Bricks whose two boundary edges share a vertex. Their extent is the
    /// degenerate range between the two edges.
    pub fn trivial_bricks(&self) -> impl Iterator<Item = &Brick> {
        self.bricks.iter().filter(|b| b.is_trivial())
    }
}

pub fn brick_decomposition(d: &Drawing) -> BrickDecomposition {
    let profile = crossing_profile(d);
    let mut planar_edges: Vec<Edge> = profile.planar_edges().collect();
    planar_edges.sort_unstable();

    // Planar edges never cross each other, so consecutive ones are ordered
    // on both layers.
    let bricks = planar_edges
        .windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            debug_assert!(a.top <= b.top && a.bottom <= b.bottom);
            let mut edges: Vec<Edge> = d
                .edges()
                .iter()
                .copied()
                .filter(|e| (a.top..=b.top).contains(&e.top) && (a.bottom..=b.bottom).contains(&e.bottom))
                .collect();
            edges.sort_unstable();
            Brick { top: (a.top, b.top), bottom: (a.bottom, b.bottom), edges }
        })
        .collect();

    BrickDecomposition { planar_edges, bricks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_3_3_is_one_brick() {
        let d = Drawing::new(3, 3, (1..=3).flat_map(|i| (1..=3).map(move |x| (i, x)))).unwrap();
        let bd = brick_decomposition(&d);
        assert_eq!(bd.planar_edges, vec![Edge::new(1, 1), Edge::new(3, 3)]);
        assert_eq!(bd.bricks.len(), 1);
        assert!(bd.bricks[0].is_complete(3, 3));
    }

    #[test]
    fn single_edge_has_no_brick() {
        let d = Drawing::new(1, 1, [(1, 1)]).unwrap();
        let bd = brick_decomposition(&d);
        assert_eq!(bd.planar_edges.len(), 1);
        assert!(bd.bricks.is_empty());
    }

    #[test]
    fn shared_vertex_bricks_are_flagged() {
        // u1 adjacent to v1 and v2: a trivial brick
        let d = Drawing::new(1, 2, [(1, 1), (1, 2)]).unwrap();
        let bd = brick_decomposition(&d);
        assert_eq!(bd.bricks.len(), 1);
        assert_eq!(bd.trivial_bricks().count(), 1);
    }
}
