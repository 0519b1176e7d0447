mod common;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;
use ramsey_lab::arrows::{ramsey_number, SearchConfig};
use ramsey_lab::bounds::*;
use ramsey_lab::enumerate::gen_connected;
use ramsey_lab::graph::families::*;

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[test]
fn closed_form_examples() {
    assert_eq!(goodness_value(4, 2, 2).unwrap(), 5);
    assert_eq!(goodness_value(9, 1, 4).unwrap(), 4);
    assert_eq!(goodness_value(4, 3, 2).unwrap(), 8);
    assert_eq!(upper_km(3, 3).unwrap(), BigUint::from(7u32));
    assert_eq!(upper_km(4, 5).unwrap(), BigUint::from(81u32));
    assert_eq!(upper_tkm(3, 3, 2).unwrap(), BigUint::from(10u32));
    assert_eq!(upper_tkm(3, 3, 1).unwrap(), BigUint::from(7u32));
    assert_eq!(upper_tkm(1, 3, 3).unwrap(), BigUint::from(9u32));
    assert_eq!(triangle_bound(1).unwrap(), 3);
    assert_eq!(triangle_bound(6).unwrap(), 13);
    assert_eq!(turan_bound(6, 2).unwrap(), rat(9, 1));
    assert_eq!(turan_bound(5, 2).unwrap(), rat(25, 4));
    assert_eq!(turan_bound(7, 1).unwrap(), rat(0, 1));
    assert_eq!(chvatal_tree_value(4, 3).unwrap(), 7);
    assert_eq!(chvatal_tree_value(2, 6).unwrap(), 6);
    assert_eq!(chvatal_tree_value(8, 2).unwrap(), 8);
    assert_eq!(main_budget(2, 1, &rat(1, 1)).unwrap().1, 3);
}

#[test]
fn two_edge_values() {
    assert_eq!(chvatal_harary_value(&complete(3).unwrap()).unwrap(), 5);
    assert_eq!(chvatal_harary_value(&path(4).unwrap()).unwrap(), 5);
    assert_eq!(chvatal_harary_value(&complete(2).unwrap()).unwrap(), 4);
    assert!(chvatal_harary_value(&ramsey_lab::SimpleGraph::empty(3).unwrap()).is_err());
}

#[test]
fn small_clique_budget() {
    assert_eq!(mequals2_budget(1).unwrap(), (rat(1, 3), 9));
    assert_eq!(mequals2_budget(2).unwrap(), (rat(1, 4), 18));
    assert_eq!(mequals2_budget(3).unwrap(), (rat(1, 7), 63));
}

#[test]
fn main_budget_example() {
    // q = 2*2*5 + 4 = 24 and the last term is 1/(3*45).
    let (c, q) = main_budget(3, 2, &rat(1, 1)).unwrap();
    assert_eq!(q, 24);
    assert_eq!(c, rat(1, 135));
    assert!(main_budget(3, 2, &rat(0, 1)).is_err());
}

#[test]
fn main_budget_decreases_in_t() {
    for eps in [rat(1, 1), rat(1, 10), rat(1, 1000)] {
        for m in 2..=8 {
            for t in 2..=10 {
                let (cur, _) = main_budget(m, t, &eps).unwrap();
                let (prev, _) = main_budget(m, t - 1, &eps).unwrap();
                assert!(cur < prev, "m={m} t={t}");
            }
        }
    }
}

#[test]
fn turan_five_two_is_attained_by_exhaustion() {
    let mut best = 0;
    for mask in 0u64..(1 << 10) {
        let g = common::graph_from_mask(5, mask);
        let a = common::adjacency(&g);
        if !common::brute_contains(&a, &complete(3).unwrap()) {
            best = best.max(g.edge_count());
        }
    }
    assert_eq!(best, 6);
    assert!(BigRational::from_integer(BigInt::from(best)) <= turan_bound(5, 2).unwrap());
}

#[test]
fn exact_values_sit_below_the_upper_bounds() {
    let cfg = SearchConfig::default();
    for n in 2..=5 {
        for g in gen_connected(n, None).unwrap() {
            let ell = g.edge_count() as u64;
            let r = ramsey_number(&g, 1, 3, &cfg).unwrap().value.unwrap() as u64;
            assert!(BigUint::from(r) <= upper_km(ell, 3).unwrap());
            assert!(r <= triangle_bound(ell).unwrap());
            if g.is_tree() {
                assert_eq!(r, chvatal_tree_value(n as u64, 3).unwrap());
            }
        }
    }
}

#[test]
fn table_rows_recompute() {
    let eps = rat(1, 2);
    for g in [path(5).unwrap(), complete(4).unwrap(), star(6).unwrap(), theta(3, 2).unwrap()] {
        for m in 1..=5 {
            for t in 1..=3 {
                for rows in [bounds_table(&g, m, t, None).unwrap(), bounds_table(&g, m, t, Some(&eps)).unwrap()] {
                    assert!(rows.iter().any(|r| r.name == "goodness_value"));
                    for row in rows {
                        assert_eq!(row.recompute().unwrap(), row.value, "{}", row.name);
                    }
                }
            }
        }
    }
    let with_eps = bounds_table(&path(5).unwrap(), 3, 2, Some(&eps)).unwrap();
    assert!(with_eps.iter().any(|r| r.name == "main_c"));
    assert!(!bounds_table(&path(5).unwrap(), 3, 2, None).unwrap().iter().any(|r| r.name == "main_c"));
}

#[test]
fn rational_parsing() {
    assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
    assert_eq!(parse_rational("4").unwrap(), rat(4, 1));
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("x").is_err());
    assert_eq!(format_rational(&rat(2, 4)), "1/2");
    assert_eq!(format_rational(&rat(8, 4)), "2");
}

#[test]
fn domain_errors() {
    assert!(goodness_value(0, 2, 2).is_err());
    assert!(upper_km(3, 2).is_err());
    assert!(upper_tkm(3, 3, 0).is_err());
    assert!(triangle_bound(0).is_err());
    assert!(turan_bound(5, 0).is_err());
    assert!(mequals2_budget(0).is_err());
    assert!(main_q(1, 1).is_err());
}

proptest! {
    #[test]
    fn consistency(n in 1u64..1000, m in 3u32..12, ell in 1u64..500) {
        prop_assert_eq!(upper_tkm(ell, m, 1).unwrap(), upper_km(ell, m).unwrap());
        prop_assert_eq!(goodness_value(n, m as u64, 1).unwrap(), chvatal_tree_value(n, m as u64).unwrap());
    }

    #[test]
    fn upper_km_is_the_exact_floor(ell in 1u64..200, m in 3u32..14) {
        // v = floor(b^((m-1)/2)) iff v^2 <= b^(m-1) < (v+1)^2.
        let v = upper_km(ell, m).unwrap();
        let p = BigUint::from(2 * ell + 1).pow(m - 1);
        prop_assert!(&v * &v <= p);
        prop_assert!(p < (&v + 1u32) * (&v + 1u32));
        prop_assert!(v >= BigUint::from(m));
    }

    #[test]
    fn turan_bound_matches_definition(n in 0u64..500, r in 1u64..40) {
        let lhs = turan_bound(n, r).unwrap() * BigRational::from_integer(BigInt::from(2 * r));
        prop_assert_eq!(lhs, BigRational::from_integer(BigInt::from((r - 1) * n * n)));
    }
}
