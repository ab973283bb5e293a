//! Exact maximum edge counts of small 2-layer drawings.
//!
//! Run with `cargo run --release --example density_search -- [threads]`.

use layerlens::reproduce::{density_formula, DENSITY_TABLE};
use layerlens::search::{max_density_with, SearchOptions};

fn main() {
    let threads = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    println!("{:>3} {:>5} {:>6} {:>8} {:>12} {:>9}", "n", "rule", "best_m", "formula", "nodes", "millis");
    for (n, c, _) in DENSITY_TABLE {
        let r = max_density_with(n, c, SearchOptions { threads }).expect("supported input");
        let formula = density_formula(n, c).map(|f| f.to_string()).unwrap_or_default();
        println!(
            "{:>3} {:>5} {:>6} {:>8} {:>12} {:>9}",
            n,
            c.to_string(),
            r.best_m,
            formula,
            r.stats.nodes,
            r.stats.elapsed.as_millis()
        );
    }
}
