//! Runs every reproduction check and prints one line per row.
//!
//! cargo run --release --example reproduce [threads]

use layerlens::reproduce::{all_pass, run_all, ReproduceOptions};

fn main() {
    let threads = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let rows = run_all(ReproduceOptions { threads, ..Default::default() });
    for r in &rows {
        println!(
            "[{}] {} {:<48} expected {:<28} observed {}",
            if r.pass { "PASS" } else { "FAIL" },
            r.criterion,
            r.item,
            r.expected,
            r.observed
        );
    }
    println!("{}", if all_pass(&rows) { "all rows pass" } else { "some rows FAILED" });
}
