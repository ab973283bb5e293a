//! Crossing profile, largest pairwise-crossing set, bricks and bound checks
//! for a drawing read from JSON (or the special drawing S by default).
//!
//! cargo run --example analyze_drawing -- [drawing.json]

use layerlens::bounds::default_table;
use layerlens::families::special_s;
use layerlens::{analyze, brick_decomposition, crossing_profile, Drawing};

fn main() {
    let d = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).expect("readable file");
            Drawing::from_json(&text).unwrap_or_else(|e| panic!("{path}: {e}"))
        }
        None => special_s(),
    };

    let profile = crossing_profile(&d);
    println!("per-edge crossings:");
    for (e, c) in &profile.per_edge {
        println!("  {e} {c}");
    }

    let bricks = brick_decomposition(&d);
    for (i, b) in bricks.bricks.iter().enumerate() {
        println!(
            "brick {i}: top {:?} bottom {:?}, {} edges{}",
            b.top,
            b.bottom,
            b.edges.len(),
            if b.is_trivial() { " (trivial)" } else { "" }
        );
    }

    print!("{}", analyze(&d, &default_table()).to_text());
}
