mod common;

use common::{brute_profile, pairs};
use layerlens::bounds::{
    self, auxiliary_lower_bound, clamp_zero, crossing_lemma_coefficient, crossing_lower_bound, default_table,
    density_lower_bound_general, density_upper_bound, int, quasiplanar_threshold, rat, Applicability, CoefficientTable,
    Rational,
};
use layerlens::families::{
    general_k_family, opt2planar, planar3_family, planar4_family, planar5_family, planar6_family, special_s,
};
use layerlens::{brick_decomposition, crossing_profile, mutually_crossing_number, Drawing, Edge, Family, FamilySpec};

fn max_crossings(d: &Drawing) -> usize {
    brute_profile(d).0.into_iter().max().unwrap_or(0)
}

#[test]
fn family_sizes() {
    let cases: [(Drawing, usize, usize, usize); 11] = [
        (opt2planar(1).unwrap(), 5, 6, 2),
        (opt2planar(2).unwrap(), 8, 11, 2),
        (planar3_family(4).unwrap(), 8, 12, 3),
        (planar3_family(3).unwrap(), 6, 8, 3),
        (planar4_family(1).unwrap(), 6, 9, 4),
        (planar4_family(2).unwrap(), 10, 17, 4),
        (planar5_family(2).unwrap(), 10, 18, 5),
        (planar5_family(4).unwrap(), 18, 36, 5),
        (planar6_family(2).unwrap(), 10, 19, 6),
        (planar6_family(3).unwrap(), 14, 29, 6),
        (general_k_family(6, 8).unwrap(), 12, 18, 8),
    ];
    for (d, n, m, k) in cases {
        assert_eq!((d.n(), d.m()), (n, m), "{}", d.to_json());
        assert!(max_crossings(&d) <= k, "{}", d.to_json());
    }
    assert_eq!(max_crossings(&planar4_family(1).unwrap()), 4);
    let band = general_k_family(5, 2).unwrap();
    assert_eq!(band.m(), 8);
    assert!(max_crossings(&band) > 0 && max_crossings(&band) <= 2);
}

#[test]
fn two_planar_chain_splits_into_k23_bricks() {
    for beta in 1..=12 {
        let d = opt2planar(beta).unwrap();
        let b = brick_decomposition(&d);
        assert_eq!(b.planar_edges.len(), beta + 1);
        assert_eq!(b.bricks.len(), beta);
        for brick in &b.bricks {
            let shape = brick.complete_bipartite();
            assert!(shape == Some((2, 3)) || shape == Some((3, 2)), "{shape:?}");
        }
    }
}

#[test]
fn planar3_is_quasiplanar() {
    for p in 3..=50 {
        assert!(mutually_crossing_number(&planar3_family(p).unwrap()) <= 2);
    }
}

#[test]
fn special_graph_facts() {
    let s = special_s();
    assert_eq!((s.n(), s.m()), (8, 14));
    let prof = crossing_profile(&s);
    assert!(prof.max_per_edge <= 5);
    assert_eq!(prof.count(Edge::new(4, 4)), Some(0));
    assert_eq!(prof.count(Edge::new(2, 4)), Some(5));
    assert_eq!(prof.count(Edge::new(4, 2)), Some(5));
    // exceeds 9/4 n - 9/2 = 27/2
    assert!(int(s.m() as i64) > rat(27, 2));
}

#[test]
fn generators_reject_bad_parameters() {
    assert!(planar3_family(2).is_err());
    assert!(planar5_family(1).is_err());
    assert!(general_k_family(1, 2).is_err());
    assert!(general_k_family(5, 1).is_err());
    assert!(opt2planar(0).is_err());
    assert!("general-k".parse::<Family>() == Ok(Family::GeneralK));
    assert!("planar7".parse::<Family>().is_err());
}

#[test]
fn generators_are_deterministic() {
    for f in Family::ALL {
        let spec = if f == Family::GeneralK { FamilySpec::general_k(9, 18) } else { FamilySpec::new(f, 4) };
        assert_eq!(spec.build().unwrap(), spec.build().unwrap());
        assert_eq!(pairs(&spec.build().unwrap()).len(), spec.expected_counts().1);
    }
}

/// `4 t^3 / (27 alpha^2)` evaluated from scratch.
fn reference_coefficient(t: i64, alpha: Rational) -> Rational {
    int(4 * t * t * t) / (int(27) * &alpha * &alpha)
}

#[test]
fn default_table_constants() {
    let table = default_table();
    assert_eq!(table.t(), 6);
    assert_eq!(table.alpha_sum(), rat(125, 12));
    assert_eq!(table.beta_sum(), rat(101, 6));
    assert_eq!(table.beta[5], rat(9, 2));
    assert_eq!(table.threshold(), rat(125, 48));
    let c = crossing_lemma_coefficient(&table);
    assert_eq!(c, reference_coefficient(6, rat(125, 12)));
    assert_eq!(c, rat(124416, 421875));
    assert_eq!(bounds::display(&c), "0.294912");
}

#[test]
fn crossing_lemma_values() {
    let table = default_table();
    let c = crossing_lemma_coefficient(&table);
    match crossing_lower_bound(48, 125, &table) {
        Applicability::Applicable(b) => assert_eq!(b, c * int(125 * 125 * 125) / int(48 * 48)),
        other => panic!("{other:?}"),
    }
    assert!(matches!(crossing_lower_bound(48, 124, &table), Applicability::Inapplicable(_)));
    assert!(matches!(crossing_lower_bound(3, 100, &table), Applicability::Inapplicable(_)));
}

#[test]
fn auxiliary_bound_values() {
    let table = default_table();
    let reference = |n: i64, m: i64| int(6 * m) - rat(125, 12) * int(n) + rat(101, 6);
    assert_eq!(auxiliary_lower_bound(8, 14, &table).unwrap(), rat(35, 2));
    assert_eq!(auxiliary_lower_bound(8, 14, &table).unwrap(), reference(8, 14));
    assert!(auxiliary_lower_bound(10, 0, &table).unwrap() < int(0));
    assert_eq!(clamp_zero(auxiliary_lower_bound(10, 0, &table).unwrap()), int(0));

    let d = planar6_family(2).unwrap();
    let bound = auxiliary_lower_bound(d.n(), d.m(), &table).unwrap();
    assert_eq!(bound, reference(10, 19));
    assert!(int(brute_profile(&d).1 as i64) >= bound);
    assert!(auxiliary_lower_bound(3, 3, &table).is_err());
}

#[test]
fn density_bounds() {
    let table = default_table();
    let k6 = density_upper_bound(10, 6, &table).unwrap();
    assert_eq!(k6.factor.to_string(), "(125/96)*sqrt(6)");
    assert_eq!(bounds::format_sig(k6.factor.to_f64(), 3), "3.19");
    for k in 6..=60u32 {
        let f = density_upper_bound(10, k, &table).unwrap().factor;
        // max{125/48, (125/96) sqrt k}, compared through squares
        let sqrt_term_sq = rat(125, 96) * rat(125, 96) * int(k as i64);
        let floor_sq = rat(125, 48) * rat(125, 48);
        let expected_sq = if sqrt_term_sq > floor_sq { sqrt_term_sq } else { floor_sq };
        let got_sq = &f.coefficient * &f.coefficient * Rational::from_integer(f.radicand.clone());
        assert_eq!(got_sq, expected_sq, "k={k}");
    }
    assert!(density_upper_bound(10, 5, &table).is_err());

    // all-ones table, k = t = 6: sqrt(18/12) * 18/12 = (3/4) sqrt 6
    let ones = CoefficientTable::new(vec![int(1); 6], vec![int(1); 6]).unwrap();
    let toy = density_upper_bound(10, 6, &ones).unwrap();
    assert_eq!(toy.factor.coefficient, rat(3, 4));
    assert_eq!(toy.factor.radicand, 6.into());
}

#[test]
fn lower_bound_and_threshold_values() {
    for (k, ell) in [(2, 1), (8, 2), (50, 5), (17, 2), (18, 3)] {
        assert_eq!(density_lower_bound_general(k).unwrap().ell, ell, "k={k}");
    }
    assert_eq!(density_lower_bound_general(8).unwrap().edges(6), 18);
    assert!(density_lower_bound_general(1).is_err());
    for (k, h) in [(2, 3), (3, 4), (4, 5), (5, 6), (6, 6), (7, 7), (9, 8)] {
        assert_eq!(quasiplanar_threshold(k).unwrap(), h, "k={k}");
    }
    assert!(quasiplanar_threshold(1).is_err());
}

#[test]
fn table_json_round_trip() {
    let table = default_table();
    let text = table.to_json();
    assert!(text.contains("\"3/2\""));
    assert_eq!(CoefficientTable::from_json(&text).unwrap(), table);
    assert!(CoefficientTable::from_json(r#"{"t":2,"alpha":["1"],"beta":["0","0"]}"#).is_err());
    assert!(CoefficientTable::from_json(r#"{"t":1,"alpha":["1/2"],"beta":["0"]}"#).is_err());
}
