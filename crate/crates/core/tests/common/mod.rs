//! Reference computations written directly from the definitions. They use
//! nothing from the crate beyond the `Drawing` data model.

#![allow(dead_code)]

use layerlens::Drawing;

pub fn cross(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 as i64 - b.0 as i64) * (a.1 as i64 - b.1 as i64) < 0
}

pub fn pairs(d: &Drawing) -> Vec<(usize, usize)> {
    d.edges().iter().map(|e| (e.top, e.bottom)).collect()
}

/// Per-edge counts in the drawing's edge order, and the total.
pub fn brute_profile(d: &Drawing) -> (Vec<usize>, u64) {
    let es = pairs(d);
    let counts: Vec<usize> = es.iter().map(|&a| es.iter().filter(|&&b| cross(a, b)).count()).collect();
    let total = counts.iter().sum::<usize>() as u64 / 2;
    (counts, total)
}

pub fn brute_max_per_edge(es: &[(usize, usize)]) -> usize {
    es.iter().map(|&a| es.iter().filter(|&&b| cross(a, b)).count()).max().unwrap_or(0)
}

/// Largest pairwise-crossing subset, growing candidate sets edge by edge.
pub fn brute_pairwise_crossing(d: &Drawing) -> usize {
    brute_pairwise_of(&pairs(d))
}

/// Maximum edge count over all splits `p + q = n` and all subsets of the
/// `p x q` grid accepted by `ok`. Exhaustive; `n <= 8`.
pub fn brute_max_density(n: usize, ok: impl Fn(&[(usize, usize)]) -> bool) -> usize {
    assert!(n <= 8);
    let mut best = 0;
    for p in 1..n {
        let q = n - p;
        let cells: Vec<(usize, usize)> = (1..=p).flat_map(|i| (1..=q).map(move |x| (i, x))).collect();
        for mask in 0u32..(1 << cells.len()) {
            let m = mask.count_ones() as usize;
            if m <= best {
                continue;
            }
            let es: Vec<_> = (0..cells.len()).filter(|i| mask >> i & 1 == 1).map(|i| cells[i]).collect();
            if ok(&es) {
                best = m;
            }
        }
    }
    best
}

pub fn brute_pairwise_of(es: &[(usize, usize)]) -> usize {
    fn grow(es: &[(usize, usize)], set: &mut Vec<(usize, usize)>, from: usize, best: &mut usize) {
        *best = (*best).max(set.len());
        for i in from..es.len() {
            if set.iter().all(|&a| cross(a, es[i])) {
                set.push(es[i]);
                grow(es, set, i + 1, best);
                set.pop();
            }
        }
    }
    let mut best = 0;
    grow(es, &mut Vec::new(), 0, &mut best);
    best
}

/// True if three edges cross pairwise.
pub fn has_crossing_triple(es: &[(usize, usize)]) -> bool {
    (0..es.len()).any(|a| {
        (a + 1..es.len())
            .any(|b| cross(es[a], es[b]) && (b + 1..es.len()).any(|c| cross(es[a], es[c]) && cross(es[b], es[c])))
    })
}

/// True if every component is a tree whose non-leaf vertices form a path,
/// i.e. the graph is a forest of caterpillars.
pub fn is_caterpillar_forest(a: usize, b: usize, es: &[(usize, usize)]) -> bool {
    let n = a + b;
    let id = |top: usize, bottom: usize| (top - 1, a + bottom - 1);
    let mut adj = vec![Vec::new(); n];
    for &(i, x) in es {
        let (u, v) = id(i, x);
        adj[u].push(v);
        adj[v].push(u);
    }
    // acyclic: every component has one fewer edge than vertices
    let mut comp = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let c = sizes.len();
        let mut stack = vec![s];
        comp[s] = c;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = c;
                    stack.push(w);
                }
            }
        }
        sizes.push(count);
    }
    let mut edges_in = vec![0; sizes.len()];
    for &(i, x) in es {
        edges_in[comp[id(i, x).0]] += 1;
    }
    if sizes.iter().zip(&edges_in).any(|(&v, &e)| e + 1 != v) {
        return false;
    }
    // spine: drop leaves; what remains must have degree <= 2 everywhere
    let is_spine: Vec<bool> = (0..n).map(|v| adj[v].len() >= 2).collect();
    (0..n).filter(|&v| is_spine[v]).all(|v| adj[v].iter().filter(|&&w| is_spine[w]).count() <= 2)
}

/// All permutations of `items` (Heap's algorithm).
pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    let mut out = Vec::new();
    heap(items.len(), &mut items.to_vec(), &mut out);
    out
}

/// Minimum over all layer orders of the maximum per-edge crossing count.
pub fn brute_minimax(a: usize, b: usize, es: &[(usize, usize)]) -> usize {
    let tops = permutations(&(1..=a).collect::<Vec<_>>());
    let bottoms = permutations(&(1..=b).collect::<Vec<_>>());
    let mut best = usize::MAX;
    for t in &tops {
        for s in &bottoms {
            // position of each label
            let placed: Vec<_> = es.iter().map(|&(i, x)| (t[i - 1], s[x - 1])).collect();
            best = best.min(brute_max_per_edge(&placed));
        }
    }
    best
}
