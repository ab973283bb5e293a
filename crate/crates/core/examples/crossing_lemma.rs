//! Exact crossing lower bounds and density upper bounds from the default
//! coefficient table.
//!
//! cargo run --example crossing_lemma

use layerlens::bounds::{
    self, crossing_lemma_coefficient, crossing_lower_bound, default_table, density_upper_bound, quasiplanar_threshold,
    Applicability,
};

fn main() {
    let table = default_table();
    let c = crossing_lemma_coefficient(&table);
    println!("table: {}", table.to_json());
    println!("alpha sum {} beta sum {} threshold {}", table.alpha_sum(), table.beta_sum(), table.threshold());
    println!("cr >= {c} m^3 / n^2 ~ {} m^3 / n^2", bounds::display(&c));

    for (n, m) in [(8, 14), (20, 60), (100, 400)] {
        match crossing_lower_bound(n, m, &table) {
            Applicability::Applicable(b) => println!("n={n} m={m}: cr >= {b} ~ {}", bounds::display(&b)),
            Applicability::Inapplicable(why) => println!("n={n} m={m}: {why}"),
        }
    }

    for k in [6, 8, 12, 50] {
        let ub = density_upper_bound(100, k, &table).unwrap();
        println!(
            "k={k}: m <= {} n ~ {} n, pairwise crossing edges < {}",
            ub.factor,
            bounds::format_sig(ub.factor.to_f64(), 3),
            quasiplanar_threshold(k).unwrap()
        );
    }
}
