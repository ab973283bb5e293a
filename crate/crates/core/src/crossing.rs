//! Crossing engine: per-edge crossing counts, k-planarity and the size of
//! the largest family of pairwise crossing edges.

use std::collections::HashMap;

use crate::drawing::{Drawing, Edge};
use crate::fenwick::Fenwick;

/// Two edges cross iff their endpoints interleave. Adjacent edges never do.
pub fn edges_cross(a: Edge, b: Edge) -> bool {
    (a.top < b.top && a.bottom > b.bottom) || (a.top > b.top && a.bottom < b.bottom)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingProfile {
    /// Crossing count of each edge, in the drawing's edge order.
    pub per_edge: Vec<(Edge, usize)>,
    /// Number of unordered crossing pairs.
    pub total: u64,
    pub max_per_edge: usize,
}

impl CrossingProfile {
    pub fn count(&self, edge: Edge) -> Option<usize> {
        self.per_edge.iter().find(|(e, _)| *e == edge).map(|&(_, c)| c)
    }

    pub fn as_map(&self) -> HashMap<Edge, usize> {
        self.per_edge.iter().copied().collect()
    }

    /// Edges with no crossing, in the drawing's edge order.
    pub fn planar_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.per_edge.iter().filter(|(_, c)| *c == 0).map(|&(e, _)| e)
    }
}

/// Edge indices sorted by (top, bottom).
fn sorted_indices(d: &Drawing) -> Vec<usize> {
    let edges = d.edges();
    let mut idx: Vec<usize> = (0..edges.len()).collect();
    idx.sort_unstable_by_key(|&i| (edges[i].top, edges[i].bottom));
    idx
}

/// Number of crossing pairs, counted as inversions of the bottom index
/// across distinct top indices. `O(m log m)`.
pub fn total_crossings(d: &Drawing) -> u64 {
    let edges = d.edges();
    let order = sorted_indices(d);
    let mut bit = Fenwick::new(d.q());
    let mut total = 0;
    let mut start = 0;
    while start < order.len() {
        let top = edges[order[start]].top;
        let mut end = start;
        while end < order.len() && edges[order[end]].top == top {
            end += 1;
        }
        let inserted = bit.total();
        for &i in &order[start..end] {
            total += inserted - bit.prefix(edges[i].bottom);
        }
        for &i in &order[start..end] {
            bit.add(edges[i].bottom, 1);
        }
        start = end;
    }
    total
}

/// Per-edge counts in two sweeps: edges to the left with a larger bottom
/// index, then edges to the right with a smaller one.
pub fn crossing_profile(d: &Drawing) -> CrossingProfile {
    let edges = d.edges();
    let order = sorted_indices(d);
    let mut counts = vec![0u64; edges.len()];

    let groups: Vec<&[usize]> = order.chunk_by(|&a, &b| edges[a].top == edges[b].top).collect();

    let mut bit = Fenwick::new(d.q());
    for group in &groups {
        let inserted = bit.total();
        for &i in *group {
            counts[i] += inserted - bit.prefix(edges[i].bottom);
        }
        for &i in *group {
            bit.add(edges[i].bottom, 1);
        }
    }
    let mut bit = Fenwick::new(d.q());
    for group in groups.iter().rev() {
        for &i in *group {
            counts[i] += bit.prefix(edges[i].bottom - 1);
        }
        for &i in *group {
            bit.add(edges[i].bottom, 1);
        }
    }

    let total = counts.iter().sum::<u64>() / 2;
    let per_edge: Vec<(Edge, usize)> = edges.iter().zip(&counts).map(|(&e, &c)| (e, c as usize)).collect();
    let max_per_edge = per_edge.iter().map(|&(_, c)| c).max().unwrap_or(0);
    CrossingProfile { per_edge, total, max_per_edge }
}

pub fn is_k_planar(d: &Drawing, k: usize) -> bool {
    crossing_profile(d).max_per_edge <= k
}

/// A largest set of pairwise crossing edges, ordered by increasing top index.
///
/// Pairwise crossing edges form a chain with strictly increasing top and
/// strictly decreasing bottom index, so this is a longest decreasing
/// subsequence once edges are sorted by (top asc, bottom asc).
pub fn largest_crossing_family(d: &Drawing) -> Vec<Edge> {
    let edges = d.edges();
    let order = sorted_indices(d);
    // tails[len-1] = position (in `order`) of the chain end of that length
    // with the largest possible last bottom index.
    let mut tails: Vec<usize> = Vec::new();
    let mut prev: Vec<Option<usize>> = vec![None; order.len()];
    for (pos, &i) in order.iter().enumerate() {
        let b = edges[i].bottom;
        // first length whose tail bottom is <= b cannot be extended by b
        let len = tails.partition_point(|&t| edges[order[t]].bottom > b);
        prev[pos] = if len > 0 { Some(tails[len - 1]) } else { None };
        if len == tails.len() {
            tails.push(pos);
        } else {
            tails[len] = pos;
        }
    }
    let mut chain = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied();
    while let Some(pos) = cur {
        chain.push(edges[order[pos]]);
        cur = prev[pos];
    }
    chain.reverse();
    chain
}

pub fn mutually_crossing_number(d: &Drawing) -> usize {
    largest_crossing_family(d).len()
}

/// True iff no `h` edges pairwise cross.
pub fn is_h_quasiplanar(d: &Drawing, h: usize) -> bool {
    mutually_crossing_number(d) < h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(p: usize, q: usize) -> Drawing {
        Drawing::new(p, q, (1..=p).flat_map(|i| (1..=q).map(move |x| (i, x)))).unwrap()
    }

    #[test]
    fn crossing_predicate() {
        assert!(edges_cross(Edge::new(1, 2), Edge::new(2, 1)));
        assert!(!edges_cross(Edge::new(1, 1), Edge::new(2, 2)));
        assert!(!edges_cross(Edge::new(1, 1), Edge::new(1, 2)));
        assert!(!edges_cross(Edge::new(3, 3), Edge::new(3, 3)));
    }

    #[test]
    fn complete_grids() {
        let k22 = crossing_profile(&complete(2, 2));
        assert_eq!((k22.total, k22.max_per_edge), (1, 1));

        let k33 = crossing_profile(&complete(3, 3));
        assert_eq!((k33.total, k33.max_per_edge), (9, 4));
        assert_eq!(k33.count(Edge::new(2, 2)), Some(2));
        assert_eq!(k33.count(Edge::new(1, 3)), Some(4));
        assert_eq!(total_crossings(&complete(3, 3)), 9);

        assert!(is_k_planar(&complete(3, 3), 4));
        assert!(!is_k_planar(&complete(3, 3), 3));
    }

    #[test]
    fn matching_is_crossing_free() {
        let d = Drawing::new(5, 5, (1..=5).map(|i| (i, i))).unwrap();
        let prof = crossing_profile(&d);
        assert_eq!(prof.total, 0);
        assert_eq!(mutually_crossing_number(&d), 1);
        assert_eq!(prof.planar_edges().count(), 5);
    }

    #[test]
    fn degenerate_drawings() {
        let d = Drawing::empty(3, 2).unwrap();
        let prof = crossing_profile(&d);
        assert_eq!((prof.total, prof.max_per_edge), (0, 0));
        assert!(is_k_planar(&d, 0));
        assert_eq!(mutually_crossing_number(&d), 0);
        let single = Drawing::new(1, 1, [(1, 1)]).unwrap();
        assert_eq!(crossing_profile(&single).max_per_edge, 0);
    }

    #[test]
    fn crossing_families() {
        let k33 = complete(3, 3);
        assert_eq!(largest_crossing_family(&k33), vec![Edge::new(1, 3), Edge::new(2, 2), Edge::new(3, 1)]);
        assert!(!is_h_quasiplanar(&k33, 3));
        let k23 = complete(2, 3);
        assert_eq!(mutually_crossing_number(&k23), 2);
        assert!(is_h_quasiplanar(&k23, 3));
        assert!(is_h_quasiplanar(&k33, k33.m() + 1));
    }
}
