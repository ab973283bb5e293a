use crate::crossing::crossing_profile;
use crate::error::SearchError;

use super::AbstractBipartiteGraph;

pub const MAX_MINIMAX_VERTICES: usize = 10;

/// Next lexicographic permutation in place; false once the last one is passed.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Minimum over all vertex orders of the maximum per-edge crossing count.
///
/// Reversing both layers leaves every crossing in place, so only top orders
/// whose first position is below their last are tried.
pub fn minimax_k(g: &AbstractBipartiteGraph) -> Result<usize, SearchError> {
    if g.vertex_count() > MAX_MINIMAX_VERTICES {
        return Err(SearchError::TooLarge(g.vertex_count()));
    }
    if g.edges().is_empty() {
        return Ok(0);
    }
    let (left, right) = g.sizes();
    let mut best = usize::MAX;
    let mut top: Vec<usize> = (1..=left).collect();
    loop {
        if left < 2 || top[0] < top[left - 1] {
            let mut bottom: Vec<usize> = (1..=right).collect();
            loop {
                let k = crossing_profile(&g.draw(&top, &bottom)).max_per_edge;
                best = best.min(k);
                if best == 0 {
                    return Ok(0);
                }
                if !next_permutation(&mut bottom) {
                    break;
                }
            }
        }
        if !next_permutation(&mut top) {
            break;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_enumerate_all() {
        let mut v = vec![1, 2, 3, 4];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(v, vec![4, 3, 2, 1]);
    }

    #[test]
    fn complete_bipartite_values() {
        assert_eq!(minimax_k(&AbstractBipartiteGraph::complete(2, 4)).unwrap(), 3);
        assert_eq!(minimax_k(&AbstractBipartiteGraph::complete(2, 3)).unwrap(), 2);
        assert_eq!(minimax_k(&AbstractBipartiteGraph::complete(3, 3)).unwrap(), 4);
    }

    #[test]
    fn path_is_crossing_free() {
        // P_4: v1 - u1 - v2 - u2
        let p4 = AbstractBipartiteGraph::new(2, 2, [(1, 1), (1, 2), (2, 2)]).unwrap();
        assert_eq!(minimax_k(&p4).unwrap(), 0);
    }

    #[test]
    fn rejects_large_graphs() {
        assert_eq!(minimax_k(&AbstractBipartiteGraph::complete(5, 6)), Err(SearchError::TooLarge(11)));
    }
}
