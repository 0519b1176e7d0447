//! Degree-driven structure queries: leaves, end-edges and suspended paths.
//!
//! An end-edge is an edge incident to a vertex of degree 1. A suspended path
//! is a path whose internal vertices all have degree exactly 2 in the host
//! graph; endpoints are unconstrained, so every edge is a suspended path of
//! order 2.

use serde::{Deserialize, Serialize};

use crate::graph::SimpleGraph;

/// Degree-1 vertices and the set `X` of their neighbors, both sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndEdgeStructure {
    pub leaves: Vec<usize>,
    pub leaf_neighbors: Vec<usize>,
}

pub fn end_edge_structure(g: &SimpleGraph) -> EndEdgeStructure {
    let n = g.vertex_count();
    let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    let mut in_x = vec![false; n];
    for &l in &leaves {
        for u in g.neighbors(l) {
            in_x[u] = true;
        }
    }
    EndEdgeStructure {
        leaves,
        leaf_neighbors: (0..n).filter(|&v| in_x[v]).collect(),
    }
}

/// A maximum set of pairwise vertex-disjoint end-edges, as `(x, leaf)` pairs
/// sorted by `x`.
///
/// Every leaf neighbor gets its smallest private leaf. The only way two
/// end-edges can compete for a leaf is a `K_2` component, which contributes
/// a single edge.
pub fn max_end_edge_matching(g: &SimpleGraph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut used = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if used[x] {
            continue;
        }
        let leaf = g
            .neighbors(x)
            .find(|&l| g.degree(l) == 1 && !used[l]);
        if let Some(l) = leaf {
            used[x] = true;
            used[l] = true;
            out.push((x, l));
        }
    }
    out
}

/// Vertex with the most degree-1 neighbors (ties to the smallest id) and
/// those neighbors. `None` when the graph has no leaves.
pub fn max_end_edge_star(g: &SimpleGraph) -> Option<(usize, Vec<usize>)> {
    (0..g.vertex_count())
        .map(|c| {
            let leaves: Vec<usize> = g.neighbors(c).filter(|&l| g.degree(l) == 1).collect();
            (c, leaves)
        })
        .filter(|(_, l)| !l.is_empty())
        .fold(None, |best: Option<(usize, Vec<usize>)>, cand| match best {
            Some(b) if b.1.len() >= cand.1.len() => Some(b),
            _ => Some(cand),
        })
}

/// A maximum-order suspended path; among those of maximum order, the
/// lexicographically smallest vertex sequence.
///
/// A component that is a cycle yields a Hamiltonian path of that cycle.
/// Degree-2 vertices outside cycle components form chains whose two outer
/// neighbors bound every suspended path through them, so the candidates are
/// the extended chains plus single edges.
pub fn longest_suspended_path(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 1 {
        return vec![0];
    }
    let deg: Vec<usize> = g.degrees();
    let mut best: Vec<usize> = Vec::new();
    let mut offer = |cand: Vec<usize>| {
        if cand.len() > best.len() || (cand.len() == best.len() && cand < best) {
            best = cand;
        }
    };

    // Single edges: the smallest is (min vertex with a neighbor, its min neighbor).
    if let Some(u) = (0..n).find(|&u| deg[u] > 0) {
        let v = g.neighbors(u).next().expect("has neighbor");
        offer(vec![u, v]);
    }

    let mut seen = vec![false; n];
    for s in 0..n {
        if deg[s] != 2 || seen[s] {
            continue;
        }
        // Walk the chain of degree-2 vertices containing s in both directions.
        let chain = degree_two_chain(g, &deg, s);
        for &c in &chain.vertices {
            seen[c] = true;
        }
        match chain.ends {
            None => {
                // Whole component is a cycle; the chain starts at its minimum.
                let mut rot = chain.vertices.clone();
                let start = rot
                    .iter()
                    .enumerate()
                    .min_by_key(|(_, &v)| v)
                    .map(|(i, _)| i)
                    .unwrap();
                rot.rotate_left(start);
                let forward = rot.clone();
                let mut backward = vec![rot[0]];
                backward.extend(rot[1..].iter().rev());
                offer(forward.min(backward));
            }
            Some((u, w)) => {
                let inner = &chain.vertices;
                if u == w {
                    // Cycle through a single branch vertex: it must be an endpoint.
                    let mut a = vec![u];
                    a.extend(inner.iter());
                    let mut b = vec![u];
                    b.extend(inner.iter().rev());
                    let mut c: Vec<usize> = inner.clone();
                    c.push(u);
                    let mut d: Vec<usize> = inner.iter().rev().copied().collect();
                    d.push(u);
                    for cand in [a, b, c, d] {
                        offer(cand);
                    }
                } else {
                    let mut fwd = vec![u];
                    fwd.extend(inner.iter());
                    fwd.push(w);
                    let rev: Vec<usize> = fwd.iter().rev().copied().collect();
                    offer(fwd.min(rev));
                }
            }
        }
    }
    best
}

struct Chain {
    /// Degree-2 vertices in path order.
    vertices: Vec<usize>,
    /// Outer neighbors at each end, or `None` for a cycle component.
    ends: Option<(usize, usize)>,
}

fn degree_two_chain(g: &SimpleGraph, deg: &[usize], s: usize) -> Chain {
    let nbrs: Vec<usize> = g.neighbors(s).collect();
    let walk = |mut prev: usize, mut cur: usize| -> (Vec<usize>, usize, bool) {
        let mut out = Vec::new();
        loop {
            if cur == s {
                return (out, cur, true);
            }
            if deg[cur] != 2 {
                return (out, cur, false);
            }
            out.push(cur);
            let next = g.neighbors(cur).find(|&x| x != prev).expect("degree 2");
            prev = cur;
            cur = next;
        }
    };
    let (right, right_end, closed) = walk(s, nbrs[1]);
    if closed {
        let mut vertices = vec![s];
        vertices.extend(right);
        return Chain {
            vertices,
            ends: None,
        };
    }
    let (left, left_end, _) = walk(s, nbrs[0]);
    let mut vertices: Vec<usize> = left.into_iter().rev().collect();
    vertices.push(s);
    vertices.extend(right);
    Chain {
        vertices,
        ends: Some((left_end, right_end)),
    }
}

/// True iff `path` is a simple path in `g` whose internal vertices have
/// degree exactly 2.
pub fn is_suspended_path(g: &SimpleGraph, path: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for &v in path {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    match path.len() {
        0 => false,
        1 => true,
        len => {
            path.windows(2).all(|w| g.has_edge(w[0], w[1]))
                && path[1..len - 1].iter().all(|&v| g.degree(v) == 2)
        }
    }
}
