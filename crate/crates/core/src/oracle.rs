//! Brute-force reference computations. They share nothing with the fast
//! paths beyond the crossing predicate and exist to cross-check them.

use crate::crossing::edges_cross;
use crate::drawing::{Drawing, Edge};

/// `O(m^2)` per-edge crossing counts and the number of crossing pairs.
pub fn pairwise_profile(d: &Drawing) -> (Vec<usize>, u64) {
    let edges = d.edges();
    let mut counts = vec![0usize; edges.len()];
    let mut total = 0u64;
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            if edges_cross(edges[a], edges[b]) {
                counts[a] += 1;
                counts[b] += 1;
                total += 1;
            }
        }
    }
    (counts, total)
}

/// Maximum clique of the crossing graph by exhaustive branching.
/// Exponential; intended for `m <= 20` or so.
pub fn max_crossing_clique(d: &Drawing) -> usize {
    let edges = d.edges();
    let m = edges.len();
    let adj: Vec<Vec<bool>> = (0..m).map(|a| (0..m).map(|b| edges_cross(edges[a], edges[b])).collect()).collect();

    fn grow(adj: &[Vec<bool>], chosen: &mut Vec<usize>, next: usize, best: &mut usize) {
        *best = (*best).max(chosen.len());
        if chosen.len() + (adj.len() - next) <= *best {
            return;
        }
        for v in next..adj.len() {
            if chosen.iter().all(|&c| adj[c][v]) {
                chosen.push(v);
                grow(adj, chosen, v + 1, best);
                chosen.pop();
            }
        }
    }

    let mut best = 0;
    grow(&adj, &mut Vec::new(), 0, &mut best);
    best
}

/// True if some order-preserving choice of `pattern.p()` top and
/// `pattern.q()` bottom vertices carries every edge of `pattern`.
pub fn contains_subdrawing(d: &Drawing, pattern: &Drawing) -> bool {
    if pattern.p() > d.p() || pattern.q() > d.q() {
        return false;
    }
    let present: std::collections::HashSet<Edge> = d.edges().iter().copied().collect();
    let tops = combinations(d.p(), pattern.p());
    let bottoms = combinations(d.q(), pattern.q());
    tops.iter().any(|t| {
        bottoms
            .iter()
            .any(|b| pattern.edges().iter().all(|e| present.contains(&Edge::new(t[e.top - 1], b[e.bottom - 1]))))
    })
}

/// All increasing `k`-subsets of `1..=n`.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_grid_clique() {
        let k33 = Drawing::new(3, 3, (1..=3).flat_map(|i| (1..=3).map(move |x| (i, x)))).unwrap();
        assert_eq!(max_crossing_clique(&k33), 3);
        let (counts, total) = pairwise_profile(&k33);
        assert_eq!(total, 9);
        assert_eq!(counts.iter().sum::<usize>(), 18);
    }

    #[test]
    fn subdrawing_search() {
        let s = crate::families::special_s();
        assert!(contains_subdrawing(&s, &s));
        let full = Drawing::new(5, 5, (1..=5).flat_map(|i| (1..=5).map(move |x| (i, x)))).unwrap();
        assert!(contains_subdrawing(&full, &s));
        assert!(!contains_subdrawing(&crate::families::planar4_family(2).unwrap(), &s));
        assert_eq!(combinations(5, 2).len(), 10);
    }
}
