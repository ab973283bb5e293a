//! Builds each dense family at a few sizes and checks its closed-form size
//! and advertised k.
//!
//! cargo run --example generate_families

use layerlens::{crossing_profile, mutually_crossing_number, Family, FamilySpec};

fn main() {
    println!("{:<11} {:>4} {:>4} {:>5} {:>5} {:>3} {:>5}", "family", "size", "k", "n", "m", "max", "pairs");
    let mut specs: Vec<FamilySpec> = Family::ALL
        .into_iter()
        .filter(|f| !matches!(f, Family::GeneralK | Family::SpecialS))
        .flat_map(|f| [2, 3, 6].map(|s| FamilySpec::new(f, s.max(f.min_size()))))
        .collect();
    specs.extend([(12, 8), (12, 18), (20, 32)].map(|(p, k)| FamilySpec::general_k(p, k)));
    specs.push(FamilySpec::new(Family::SpecialS, 1));

    for spec in specs {
        let d = spec.build().expect("valid size");
        let profile = crossing_profile(&d);
        assert_eq!((d.n(), d.m()), spec.expected_counts());
        assert!(profile.max_per_edge <= spec.advertised_k());
        println!(
            "{:<11} {:>4} {:>4} {:>5} {:>5} {:>3} {:>5}",
            spec.family.to_string(),
            spec.size,
            spec.advertised_k(),
            d.n(),
            d.m(),
            profile.max_per_edge,
            mutually_crossing_number(&d)
        );
    }
}
