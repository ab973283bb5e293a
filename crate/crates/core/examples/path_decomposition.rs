//! Builds the path decomposition of a family instance, validates it and
//! compares its width with the drawing's k.
//!
//! cargo run --example path_decomposition

use layerlens::crossing_profile;
use layerlens::decomposition::{build_path_decomposition, validate_decomposition};
use layerlens::families::{planar4_family, planar6_family, special_s};
use layerlens::search::random_drawing;

fn main() {
    let drawings = [
        ("planar4(3)", planar4_family(3).unwrap()),
        ("planar6(3)", planar6_family(3).unwrap()),
        ("S", special_s()),
        ("random 6x7, 20 edges", random_drawing(6, 7, 20, 1).unwrap()),
    ];
    for (name, d) in drawings {
        let pd = build_path_decomposition(&d);
        let report = validate_decomposition(&d, &pd);
        let k = crossing_profile(&d).max_per_edge;
        println!(
            "{name}: {} bags, width {} (k + 1 = {}), {:?}, valid: {}",
            pd.bags.len(),
            pd.width(),
            k + 1,
            pd.orientation,
            report.is_valid()
        );
    }
    println!("{}", build_path_decomposition(&special_s()).to_json());
}
