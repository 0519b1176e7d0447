//! Brute-force oracles shared by the integration tests. None of them call
//! the searches they are used to check.
#![allow(dead_code)]

use ramsey_lab::SimpleGraph;

pub fn adjacency(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Graph on `n` vertices from a bitmask over pairs in lex order.
pub fn graph_from_mask(n: usize, mask: u64) -> SimpleGraph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> i & 1 == 1 {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    SimpleGraph::from_edges(n, edges).unwrap()
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Minimum adjacency mask over all relabellings.
pub fn brute_canonical_mask(g: &SimpleGraph, perms: &[Vec<usize>]) -> u64 {
    let a = adjacency(g);
    let n = g.vertex_count();
    perms
        .iter()
        .map(|p| {
            let mut mask = 0u64;
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if a[p[u]][p[v]] {
                        mask |= 1 << i;
                    }
                    i += 1;
                }
            }
            mask
        })
        .min()
        .unwrap()
}

pub fn automorphism_count(g: &SimpleGraph, perms: &[Vec<usize>]) -> usize {
    let a = adjacency(g);
    let n = g.vertex_count();
    perms
        .iter()
        .filter(|p| (0..n).all(|u| (0..n).all(|v| a[u][v] == a[p[u]][p[v]])))
        .count()
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Labelled connected graphs on `n` vertices, by the standard recurrence.
pub fn labelled_connected_count(n: usize) -> u64 {
    let mut c = vec![0u64; n + 1];
    for k in 1..=n as u64 {
        let total = 1u64 << (k * (k - 1) / 2);
        let mut disconnected = 0;
        for j in 1..k {
            disconnected += binom(k - 1, j - 1) * c[j as usize] * (1u64 << ((k - j) * (k - j - 1) / 2));
        }
        c[k as usize] = total - disconnected;
    }
    c[n]
}

/// Every simple path (as a vertex sequence, both directions) whose internal
/// vertices have degree exactly 2, including single vertices.
pub fn all_suspended_paths(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let a = adjacency(g);
    let n = g.vertex_count();
    let deg: Vec<usize> = a.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
    let mut out = Vec::new();
    fn rec(a: &[Vec<bool>], deg: &[usize], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        let last = *path.last().unwrap();
        // The current end becomes internal if we extend.
        if path.len() >= 2 && deg[last] != 2 {
            return;
        }
        for v in 0..a.len() {
            if a[last][v] && !path.contains(&v) {
                path.push(v);
                rec(a, deg, path, out);
                path.pop();
            }
        }
    }
    for s in 0..n {
        rec(&a, &deg, &mut vec![s], &mut out);
    }
    out
}

/// Longest suspended path, ties broken by the lexicographically smallest
/// sequence.
pub fn brute_longest_suspended_path(g: &SimpleGraph) -> Vec<usize> {
    let paths = all_suspended_paths(g);
    let best = paths.iter().map(Vec::len).max().unwrap();
    paths.into_iter().filter(|p| p.len() == best).min().unwrap()
}

pub fn end_edges(g: &SimpleGraph) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| g.degree(u) == 1 || g.degree(v) == 1)
        .collect()
}

/// Maximum number of pairwise disjoint end-edges, by subset enumeration.
pub fn brute_end_edge_matching(g: &SimpleGraph) -> usize {
    let ee = end_edges(g);
    let mut best = 0;
    for mask in 0u32..(1 << ee.len()) {
        let mut used = vec![false; g.vertex_count()];
        let mut ok = true;
        for (i, &(u, v)) in ee.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used[u] || used[v] {
                    ok = false;
                    break;
                }
                used[u] = true;
                used[v] = true;
            }
        }
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

/// Largest number of leaves attached to one vertex.
pub fn brute_end_edge_star(g: &SimpleGraph) -> usize {
    (0..g.vertex_count())
        .map(|c| g.neighbors(c).filter(|&l| g.degree(l) == 1).count())
        .max()
        .unwrap_or(0)
}

/// Whether `pattern` has an injective edge-preserving map into `host`, by
/// trying every ordered choice of distinct host vertices.
pub fn brute_contains(host: &[Vec<bool>], pattern: &SimpleGraph) -> bool {
    let k = pattern.vertex_count();
    let pe = pattern.edges();
    let mut img = Vec::with_capacity(k);
    let mut used = vec![false; host.len()];
    fn rec(host: &[Vec<bool>], k: usize, pe: &[(usize, usize)], img: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if img.len() == k {
            return pe.iter().all(|&(a, b)| host[img[a]][img[b]]);
        }
        for v in 0..host.len() {
            if !used[v] {
                used[v] = true;
                img.push(v);
                if rec(host, k, pe, img, used) {
                    return true;
                }
                img.pop();
                used[v] = false;
            }
        }
        false
    }
    rec(host, k, &pe, &mut img, &mut used)
}

/// Whether `host` has `t` disjoint `m`-cliques, by trying every `m`-subset
/// for the first clique.
pub fn brute_disjoint_cliques(host: &[Vec<bool>], t: usize, m: usize) -> bool {
    fn rec(host: &[Vec<bool>], avail: &mut Vec<bool>, t: usize, m: usize) -> bool {
        if t == 0 {
            return true;
        }
        let n = host.len();
        let free: Vec<usize> = (0..n).filter(|&v| avail[v]).collect();
        if free.len() < t * m {
            return false;
        }
        for subset in subsets(&free, m) {
            let clique = subset
                .iter()
                .enumerate()
                .all(|(i, &u)| subset[i + 1..].iter().all(|&v| host[u][v]));
            if clique {
                for &v in &subset {
                    avail[v] = false;
                }
                let ok = rec(host, avail, t - 1, m);
                for &v in &subset {
                    avail[v] = true;
                }
                if ok {
                    return true;
                }
            }
        }
        false
    }
    rec(host, &mut vec![true; host.len()], t, m)
}

pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = subsets(&items[1..], k - 1);
    for s in &mut out {
        s.insert(0, items[0]);
    }
    out.extend(subsets(&items[1..], k));
    out
}

/// Red and blue adjacency of the coloring of `K_n` given by a pair mask in
/// lex order (bit set = red).
pub fn coloring_from_mask(n: usize, mask: u64) -> (Vec<Vec<bool>>, Vec<Vec<bool>>) {
    let mut red = vec![vec![false; n]; n];
    let mut blue = vec![vec![false; n]; n];
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            let r = mask >> i & 1 == 1;
            red[u][v] = r;
            red[v][u] = r;
            blue[u][v] = !r;
            blue[v][u] = !r;
            i += 1;
        }
    }
    (red, blue)
}

/// Arrowing by enumerating all `2^C(N,2)` colorings.
pub fn naive_arrows(order: usize, g: &SimpleGraph, t: usize, m: usize) -> bool {
    let pairs = order * (order - 1) / 2;
    (0u64..(1 << pairs)).all(|mask| {
        let (red, blue) = coloring_from_mask(order, mask);
        (g.vertex_count() <= order && brute_contains(&red, g)) || brute_disjoint_cliques(&blue, t, m)
    })
}

/// Chromatic number and surplus by enumerating all set partitions.
pub fn brute_chromatic_profile(g: &SimpleGraph) -> (usize, usize) {
    let a = adjacency(g);
    let n = g.vertex_count();
    let mut best: Option<(usize, usize)> = None;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(a: &[Vec<bool>], v: usize, blocks: &mut Vec<Vec<usize>>, best: &mut Option<(usize, usize)>) {
        if v == a.len() {
            let chi = blocks.len();
            let s = blocks.iter().map(Vec::len).min().unwrap();
            let better = match *best {
                None => true,
                Some((bc, bs)) => chi < bc || (chi == bc && s < bs),
            };
            if better {
                *best = Some((chi, s));
            }
            return;
        }
        for i in 0..blocks.len() {
            if blocks[i].iter().all(|&u| !a[u][v]) {
                blocks[i].push(v);
                rec(a, v + 1, blocks, best);
                blocks[i].pop();
            }
        }
        blocks.push(vec![v]);
        rec(a, v + 1, blocks, best);
        blocks.pop();
    }
    rec(&a, 0, &mut blocks, &mut best);
    let _ = n;
    best.unwrap()
}

/// Small deterministic generator for oracle sweeps.
pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, edges).unwrap()
}

/// Random recursive tree: vertex `v` attaches to a uniform earlier vertex.
pub fn random_tree(rng: &mut impl rand::Rng, n: usize) -> SimpleGraph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    SimpleGraph::from_edges(n, edges).unwrap()
}
