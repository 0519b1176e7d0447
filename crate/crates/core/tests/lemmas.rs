mod common;

use ramsey_lab::colorings::TwoColoring;
use ramsey_lab::enumerate::gen_connected;
use ramsey_lab::graph::families::*;
use ramsey_lab::lemmas::*;

/// Whether some injection of X into Y uses only red pairs.
fn brute_perfect_red_matching(col: &BipartiteColoring) -> bool {
    fn rec(col: &BipartiteColoring, x: usize, used: u64) -> bool {
        if x == col.a {
            return true;
        }
        (0..col.b).any(|y| used >> y & 1 == 0 && col.is_red(x, y) && rec(col, x + 1, used | 1 << y))
    }
    rec(col, 0, 0)
}

#[test]
fn hall_dichotomy_is_exhaustively_sound() {
    for a in 1..=4 {
        for b in a..=5 {
            let pairs = a * b;
            for mask in 0u64..(1 << pairs) {
                let rows: Vec<u64> = (0..a).map(|x| mask >> (x * b) & ((1 << b) - 1)).collect();
                let col = BipartiteColoring::new(a, b, rows).unwrap();
                let out = hall_witness(&col);
                out.validate(&col).unwrap();
                let matched = matches!(out, HallOutcome::RedMatching { .. });
                assert_eq!(matched, brute_perfect_red_matching(&col));
            }
        }
    }
}

#[test]
fn hall_rejects_bad_shapes() {
    assert!(BipartiteColoring::new(3, 2, vec![0; 3]).is_err());
    assert!(BipartiteColoring::new(1, 2, vec![4]).is_err());
    let col = BipartiteColoring::new(2, 2, vec![0b11, 0b11]).unwrap();
    let bogus = HallOutcome::BlueBiclique {
        c: 0,
        xs: vec![0],
        ys: vec![0, 1],
    };
    assert!(bogus.validate(&col).is_err());
}

struct Oracle {
    path: bool,
    blue_clique: usize,
    dominators: usize,
}

fn oracle(red: &[Vec<bool>], a: usize) -> Oracle {
    let n = red.len();
    let others: Vec<usize> = (1..n).filter(|&v| v != a - 1).collect();
    let mut path = false;
    if a >= 2 && n > a {
        // Middle vertices of a path x_1 .. x_a with a edges: a - 1 of them.
        for subset in common::subsets(&others, a - 1) {
            for perm in common::permutations(a - 1) {
                let mut seq = vec![0];
                seq.extend(perm.iter().map(|&i| subset[i]));
                seq.push(a - 1);
                if seq.windows(2).all(|w| red[w[0]][w[1]]) {
                    path = true;
                    break;
                }
            }
            if path {
                break;
            }
        }
    }
    let all: Vec<usize> = (0..n).collect();
    let blue_clique = (1..=n)
        .rev()
        .find(|&k| {
            common::subsets(&all, k)
                .iter()
                .any(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || !red[u][v])))
        })
        .unwrap_or(0);
    let dominators = (0..a).filter(|&x| (a..n).all(|y| !red[x][y])).count();
    Oracle {
        path,
        blue_clique,
        dominators,
    }
}

#[test]
fn path_extension_is_exhaustively_sound() {
    for a in 1..=5 {
        for b in 1..=2 {
            let n = a + b;
            let free: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !(v < a && v == u + 1))
                .collect();
            for mask in 0u64..(1 << free.len()) {
                let mut col = TwoColoring::all_blue(n).unwrap();
                for i in 1..a {
                    col.set_red(i - 1, i).unwrap();
                }
                for (i, &(u, v)) in free.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        col.set_red(u, v).unwrap();
                    }
                }
                let red = common::adjacency(col.red_graph());
                let o = oracle(&red, a);
                for c in 1..=a {
                    for d in 1..=a {
                        if a < b * (c - 1) + d {
                            continue;
                        }
                        let inst = PathExtensionInstance::new(col.clone(), a, b, c, d).unwrap();
                        let out = path_extension_witness(&inst).unwrap();
                        out.validate(&inst).unwrap();
                        match out {
                            PathExtensionOutcome::ExtendedPath { .. } => assert!(o.path),
                            PathExtensionOutcome::BlueClique { .. } => {
                                assert!(!o.path && o.blue_clique >= c)
                            }
                            PathExtensionOutcome::BlueDominators { .. } => {
                                assert!(!o.path && o.blue_clique < c && o.dominators >= d)
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn path_extension_refusals() {
    let col = TwoColoring::all_red(5).unwrap();
    assert_eq!(
        PathExtensionInstance::new(col.clone(), 3, 2, 2, 2),
        Err(LemmaError::Refused { a: 3, need: 4 })
    );
    let blue = TwoColoring::all_blue(5).unwrap();
    assert!(matches!(
        PathExtensionInstance::new(blue, 4, 1, 2, 1),
        Err(LemmaError::InvalidInstance(_))
    ));
    assert!(PathExtensionInstance::new(col, 4, 2, 1, 1).is_err());
}

#[test]
fn long_path_complement_has_large_clique() {
    let g = path(63).unwrap();
    let clique = complement_clique(&g, 4).unwrap().unwrap();
    assert_eq!(clique.len(), 4);
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            assert!(!g.has_edge(u, v) && u != v);
        }
    }
    // Alternate vertices give 32 pairwise nonadjacent ones.
    assert!(complement_clique(&g, 32).unwrap().is_some());
    assert!(complement_clique(&g, 33).unwrap().is_none());
}

#[test]
fn complement_clique_matches_subset_oracle() {
    for n in 1..=7 {
        for g in gen_connected(n, None).unwrap() {
            let a = common::adjacency(&g);
            let all: Vec<usize> = (0..n).collect();
            for size in 1..=n {
                let brute = common::subsets(&all, size)
                    .iter()
                    .any(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || !a[u][v])));
                assert_eq!(complement_clique(&g, size).unwrap().is_some(), brute);
            }
        }
    }
}

#[test]
fn turan_consistency_up_to_eight() {
    for n in 2..=8 {
        for g in gen_connected(n, None).unwrap() {
            for size in 3..=5 {
                let check = turan_check(&g, size).unwrap();
                assert!(check.consistent);
                if check.forced {
                    assert!(check.clique.is_some());
                }
            }
        }
    }
    let sparse = turan_check(&path(9).unwrap(), 3).unwrap();
    assert!(sparse.forced && sparse.clique.is_some());
    assert!(turan_check(&path(4).unwrap(), 1).is_err());
}

#[test]
fn complement_clique_matches_oracle_on_larger_graphs() {
    let mut rng = common::rng(20);
    let all: Vec<usize> = (0..20).collect();
    for _ in 0..30 {
        let g = common::random_graph(&mut rng, 20, 0.55);
        let a = common::adjacency(&g);
        for size in 3..=6 {
            let brute = common::subsets(&all, size)
                .iter()
                .any(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || !a[u][v])));
            assert_eq!(complement_clique(&g, size).unwrap().is_some(), brute);
        }
    }
}
