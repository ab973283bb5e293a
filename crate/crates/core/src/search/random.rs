//! Seeded random drawings. All randomness comes from `ChaCha8Rng` seeded
//! with `seed_from_u64`, so a seed fixes the drawing on every platform.

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::drawing::{Drawing, Edge};
use crate::error::SearchError;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn cell(q: usize, index: usize) -> Edge {
    Edge::new(index / q + 1, index % q + 1)
}

/// A uniformly random `m`-subset of the `p x q` grid.
pub fn random_drawing(p: usize, q: usize, m: usize, seed: u64) -> Result<Drawing, SearchError> {
    random_drawing_with(p, q, m, &mut rng(seed))
}

pub fn random_drawing_with<R: Rng>(p: usize, q: usize, m: usize, rng: &mut R) -> Result<Drawing, SearchError> {
    if m > p * q {
        return Err(SearchError::TooManyEdges { p, q, m });
    }
    let mut cells: Vec<Edge> = sample(rng, p * q, m).into_iter().map(|i| cell(q, i)).collect();
    cells.sort_unstable();
    Drawing::new(p, q, cells).map_err(|e| SearchError::Graph(e.to_string()))
}

/// A random connected drawing with `m` edges and no isolated vertex: a
/// random spanning tree grown one vertex at a time, topped up with
/// uniformly chosen extra cells.
pub fn random_connected_drawing(p: usize, q: usize, m: usize, seed: u64) -> Result<Drawing, SearchError> {
    let mut rng = rng(seed);
    let (min, max) = (p + q - 1, p * q);
    if p == 0 || q == 0 || m < min || m > max {
        return Err(SearchError::ConnectedEdgeCount { p, q, m, min, max });
    }
    let mut in_tree_top = vec![false; p + 1];
    let mut in_tree_bottom = vec![false; q + 1];
    let mut tops: Vec<usize> = Vec::new();
    let mut bottoms: Vec<usize> = Vec::new();
    let mut edges: Vec<Edge> = Vec::with_capacity(m);

    let first_top = rng.gen_range(1..=p);
    let first_bottom = rng.gen_range(1..=q);
    in_tree_top[first_top] = true;
    in_tree_bottom[first_bottom] = true;
    tops.push(first_top);
    bottoms.push(first_bottom);
    edges.push(Edge::new(first_top, first_bottom));

    let mut pending: Vec<(bool, usize)> = (1..=p)
        .filter(|&i| i != first_top)
        .map(|i| (true, i))
        .chain((1..=q).filter(|&x| x != first_bottom).map(|x| (false, x)))
        .collect();
    pending.shuffle(&mut rng);
    for (is_top, index) in pending {
        if is_top {
            let partner = *bottoms.choose(&mut rng).unwrap();
            edges.push(Edge::new(index, partner));
            in_tree_top[index] = true;
            tops.push(index);
        } else {
            let partner = *tops.choose(&mut rng).unwrap();
            edges.push(Edge::new(partner, index));
            in_tree_bottom[index] = true;
            bottoms.push(index);
        }
    }

    let used: std::collections::HashSet<Edge> = edges.iter().copied().collect();
    let free: Vec<Edge> = (0..p * q).map(|i| cell(q, i)).filter(|e| !used.contains(e)).collect();
    let extra = sample(&mut rng, free.len(), m - edges.len());
    edges.extend(extra.into_iter().map(|i| free[i]));
    edges.sort_unstable();
    Drawing::new(p, q, edges).map_err(|e| SearchError::Graph(e.to_string()))
}
