//! Smallest achievable maximum per-edge crossing count over all orderings
//! of small complete bipartite graphs.
//!
//! cargo run --release --example minimax_orderings

use std::time::Instant;

use layerlens::search::{minimax_k, AbstractBipartiteGraph};

fn main() {
    for (a, b) in [(1, 4), (2, 2), (2, 3), (2, 4), (3, 3), (2, 5), (3, 4)] {
        let start = Instant::now();
        let k = minimax_k(&AbstractBipartiteGraph::complete(a, b)).expect("small graph");
        println!("K_{{{a},{b}}}: {k} ({:.3} ms)", start.elapsed().as_secs_f64() * 1e3);
    }
}
