mod common;

use ramsey_lab::arrows::*;
use ramsey_lab::bounds::{chvatal_harary_value, goodness_value};
use ramsey_lab::colorings::is_good_coloring;
use ramsey_lab::enumerate::gen_connected;
use ramsey_lab::graph::families::*;

fn configs() -> Vec<SearchConfig> {
    let mut out = vec![SearchConfig::default()];
    for edge_order in [EdgeOrder::Lex, EdgeOrder::Colex] {
        for symmetry in [Symmetry::None, Symmetry::FirstVertex] {
            out.push(SearchConfig {
                edge_order,
                symmetry,
                ..SearchConfig::default()
            });
        }
    }
    out
}

#[test]
fn small_verdicts_match_naive_enumeration() {
    for n in 2..=4 {
        for g in gen_connected(n, None).unwrap() {
            for order in 1..=5 {
                for (t, m) in [(1, 2), (2, 2), (1, 3)] {
                    let expected = common::naive_arrows(order, &g, t, m);
                    for cfg in configs() {
                        let res = arrows(order, &g, t, m, &cfg).unwrap();
                        assert_eq!(res.arrows(), Some(expected), "N={order} t={t} m={m} {cfg:?}");
                        if let Some(c) = &res.counterexample {
                            assert!(is_good_coloring(c, &g, t, m));
                            assert_eq!(c.order(), order);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn path_three_against_two_edges() {
    let p3 = path(3).unwrap();
    let cfg = SearchConfig::default();
    assert_eq!(arrows(5, &p3, 2, 2, &cfg).unwrap().verdict, Verdict::Arrows);
    assert_eq!(arrows(4, &p3, 2, 2, &cfg).unwrap().verdict, Verdict::Arrows);
    let res = arrows(3, &p3, 2, 2, &cfg).unwrap();
    assert_eq!(res.verdict, Verdict::NotArrows);
    assert!(is_good_coloring(res.counterexample.as_ref().unwrap(), &p3, 2, 2));
    assert_eq!(arrows(5, &complete(3).unwrap(), 2, 2, &cfg).unwrap().verdict, Verdict::Arrows);
    assert!(!common::naive_arrows(4, &complete(3).unwrap(), 2, 2));
}

#[test]
fn monotone_and_bounded_below() {
    for n in 2..=5 {
        for g in gen_connected(n, None).unwrap() {
            for (t, m) in [(1, 2), (2, 2), (1, 3), (2, 3)] {
                // Dense five-vertex graphs against triangles take seconds each.
                if n == 5 && m == 3 {
                    continue;
                }
                let cert = ramsey_number(&g, t, m, &SearchConfig::default()).unwrap();
                let r = cert.value.unwrap();
                let gv = goodness_value(n as u64, m as u64, t as u64).unwrap() as usize;
                if n >= t {
                    assert!(r >= gv);
                }
                let w = cert.lower_witness.as_ref().unwrap();
                assert_eq!(w.order(), r - 1);
                assert!(is_good_coloring(w, &g, t, m));
                // Arrowing persists one step beyond the value.
                if r < 12 {
                    assert_eq!(arrows(r + 1, &g, t, m, &SearchConfig::default()).unwrap().verdict, Verdict::Arrows);
                }
            }
        }
    }
}

#[test]
fn ramsey_examples() {
    let cfg = SearchConfig::default();
    let cert = ramsey_number(&star(3).unwrap(), 2, 2, &cfg).unwrap();
    assert_eq!(cert.value, Some(5));
    assert_eq!(cert.goodness_value, 5);
    assert_eq!(ramsey_number(&path(4).unwrap(), 2, 2, &cfg).unwrap().value, Some(5));
    assert_eq!(ramsey_number(&star(3).unwrap(), 2, 3, &cfg).unwrap().value, Some(8));
    assert_eq!(ramsey_number(&path(4).unwrap(), 1, 3, &cfg).unwrap().value, Some(7));
}

#[test]
fn two_edge_values_follow_the_closed_form() {
    for n in 3..=5 {
        for g in gen_connected(n, None).unwrap() {
            let cert = ramsey_number(&g, 2, 2, &SearchConfig::default()).unwrap();
            assert_eq!(cert.value, Some(chvatal_harary_value(&g).unwrap() as usize));
        }
    }
}

#[test]
fn budgets_give_unknown() {
    let g = disjoint_cliques(4, 2).unwrap();
    let cfg = SearchConfig {
        node_budget: Some(3),
        ..SearchConfig::edge_dfs()
    };
    let res = arrows(9, &g, 1, 3, &cfg).unwrap();
    assert_eq!(res.verdict, Verdict::Unknown);
    assert!(res.counterexample.is_none());
    // The split phase may overshoot a little; the workers must not.
    assert!(res.stats.nodes < 10_000, "{}", res.stats.nodes);
    let cert = ramsey_number(&g, 1, 3, &cfg).unwrap();
    assert!(cert.value.is_none());
}

#[test]
fn bad_inputs() {
    let g = path(3).unwrap();
    let cfg = SearchConfig::default();
    assert!(matches!(arrows(17, &g, 1, 2, &cfg), Err(ArrowsError::TooLarge(17))));
    assert!(arrows(0, &g, 1, 2, &cfg).is_err());
    assert!(arrows(4, &g, 0, 2, &cfg).is_err());
    let bad = SearchConfig {
        node_budget: Some(0),
        ..SearchConfig::default()
    };
    assert!(matches!(arrows(4, &g, 1, 2, &bad), Err(ArrowsError::BadConfig(_))));
}

#[test]
fn result_json_round_trip() {
    let res = arrows(4, &path(4).unwrap(), 2, 2, &SearchConfig::default()).unwrap();
    let v = serde_json::to_value(&res).unwrap();
    assert_eq!(v["verdict"], "not_arrows");
    assert_eq!(v["N"], 4);
    let back: ArrowsResult = serde_json::from_value(v).unwrap();
    assert_eq!(back.counterexample, res.counterexample);
}
