//! Backtracking searches over bitset hosts: subgraph embeddings, cliques and
//! vertex-disjoint clique packings.

use crate::bits;
use crate::graph::SimpleGraph;

/// Borrowed adjacency rows of a host graph.
#[derive(Clone, Copy)]
pub(crate) struct Host<'a> {
    pub rows: &'a [u64],
    pub words: usize,
    pub n: usize,
}

impl<'a> Host<'a> {
    pub fn of(g: &'a SimpleGraph) -> Self {
        Self {
            rows: row_slice(g),
            words: g.row_words(),
            n: g.vertex_count(),
        }
    }

    #[inline]
    pub fn row(&self, v: usize) -> &'a [u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn full_mask(&self) -> Vec<u64> {
        let mut m = vec![0u64; self.words];
        for v in 0..self.n {
            bits::set(&mut m, v);
        }
        m
    }
}

fn row_slice(g: &SimpleGraph) -> &[u64] {
    g.raw_rows()
}

/// Order in which pattern vertices are placed: highest degree first, then
/// repeatedly the vertex with most already-placed neighbors (ties by degree,
/// then id).
fn pattern_order(p: &SimpleGraph) -> Vec<usize> {
    let k = p.vertex_count();
    let deg = p.degrees();
    let mut placed = vec![false; k];
    let mut links = vec![0usize; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (links[a], deg[a], std::cmp::Reverse(a)).cmp(&(links[b], deg[b], std::cmp::Reverse(b)))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
        for u in p.neighbors(next) {
            links[u] += 1;
        }
    }
    order
}

/// Injective map from pattern vertices to host vertices inside `allowed`
/// that sends every pattern edge to a host edge.
pub(crate) fn find_embedding(
    pattern: &SimpleGraph,
    host: Host<'_>,
    allowed: &[u64],
) -> Option<Vec<usize>> {
    let k = pattern.vertex_count();
    if bits::count(allowed) < k {
        return None;
    }
    if pattern.edge_count() == 0 {
        let chosen: Vec<usize> = bits::iter(allowed).take(k).collect();
        return Some(chosen);
    }
    let order = pattern_order(pattern);
    let mut pos = vec![0usize; k];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let back: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| pattern.neighbors(v).filter(|&u| pos[u] < pos[v]).collect())
        .collect();
    let pdeg: Vec<usize> = order.iter().map(|&v| pattern.degree(v)).collect();
    let w = host.words;
    let hdeg: Vec<usize> = (0..host.n)
        .map(|v| {
            host.row(v)
                .iter()
                .zip(allowed)
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum()
        })
        .collect();

    let mut image = vec![usize::MAX; k];
    let mut used = vec![0u64; w];
    let mut cands = vec![0u64; k * w];

    fn fill(
        depth: usize,
        host: Host<'_>,
        allowed: &[u64],
        used: &[u64],
        back: &[Vec<usize>],
        image: &[usize],
        pdeg: &[usize],
        hdeg: &[usize],
        out: &mut [u64],
    ) {
        let w = host.words;
        for i in 0..w {
            out[i] = allowed[i] & !used[i];
        }
        for &u in &back[depth] {
            let r = host.row(image[u]);
            for i in 0..w {
                out[i] &= r[i];
            }
        }
        let need = pdeg[depth];
        if need > 0 {
            for (i, word) in out.iter_mut().enumerate() {
                for b in bits::iter_word(*word) {
                    if hdeg[i * 64 + b] < need {
                        *word &= !(1u64 << b);
                    }
                }
            }
        }
    }

    let mut depth = 0usize;
    fill(0, host, allowed, &used, &back, &image, &pdeg, &hdeg, &mut cands[0..w]);
    loop {
        let slot = &mut cands[depth * w..(depth + 1) * w];
        let next = bits::iter(slot).next();
        match next {
            Some(h) => {
                bits::clear(slot, h);
                let pv = order[depth];
                if image[pv] != usize::MAX {
                    bits::clear(&mut used, image[pv]);
                }
                image[pv] = h;
                bits::set(&mut used, h);
                if depth + 1 == k {
                    return Some(image);
                }
                depth += 1;
                let (_, rest) = cands.split_at_mut(depth * w);
                fill(
                    depth,
                    host,
                    allowed,
                    &used,
                    &back,
                    &image,
                    &pdeg,
                    &hdeg,
                    &mut rest[..w],
                );
            }
            None => {
                let pv = order[depth];
                if image[pv] != usize::MAX {
                    bits::clear(&mut used, image[pv]);
                    image[pv] = usize::MAX;
                }
                if depth == 0 {
                    return None;
                }
                depth -= 1;
            }
        }
    }
}

/// A clique of exactly `size` vertices inside `cand`, or `None`.
pub(crate) fn find_clique(host: Host<'_>, cand: &[u64], size: usize) -> Option<Vec<usize>> {
    let mut cur = Vec::with_capacity(size);
    if clique_rec(host, cand.to_vec(), size, &mut cur) {
        Some(cur)
    } else {
        None
    }
}

/// Number of classes in a greedy proper coloring of `cand`, an upper bound
/// on its clique number.
fn color_bound(host: Host<'_>, cand: &[u64]) -> usize {
    let mut rest = cand.to_vec();
    let mut classes = 0;
    while rest.iter().any(|&w| w != 0) {
        classes += 1;
        let mut open = rest.clone();
        loop {
            let Some(v) = bits::iter(&open).next() else {
                break;
            };
            bits::clear(&mut rest, v);
            bits::clear(&mut open, v);
            for (o, r) in open.iter_mut().zip(host.row(v)) {
                *o &= !r;
            }
        }
    }
    classes
}

/// Below this many candidates plain enumeration beats the coloring bound.
const BOUND_MIN_CANDIDATES: usize = 16;

fn clique_rec(host: Host<'_>, mut cand: Vec<u64>, size: usize, cur: &mut Vec<usize>) -> bool {
    if cur.len() == size {
        return true;
    }
    if bits::count(&cand) >= BOUND_MIN_CANDIDATES && cur.len() + color_bound(host, &cand) < size {
        return false;
    }
    while bits::count(&cand) + cur.len() >= size {
        let v = match bits::iter(&cand).next() {
            Some(v) => v,
            None => return false,
        };
        bits::clear(&mut cand, v);
        let next: Vec<u64> = cand.iter().zip(host.row(v)).map(|(a, b)| a & b).collect();
        cur.push(v);
        if clique_rec(host, next, size, cur) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Calls `f` on every clique of exactly `size` vertices inside `cand` until
/// `f` returns true. Returns whether `f` ever returned true.
pub(crate) fn any_clique(
    host: Host<'_>,
    cand: &[u64],
    size: usize,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn rec(
        host: Host<'_>,
        mut cand: Vec<u64>,
        size: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        while bits::count(&cand) + cur.len() >= size {
            let v = match bits::iter(&cand).next() {
                Some(v) => v,
                None => return false,
            };
            bits::clear(&mut cand, v);
            let next: Vec<u64> = cand.iter().zip(host.row(v)).map(|(a, b)| a & b).collect();
            cur.push(v);
            if rec(host, next, size, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let mut cur = Vec::with_capacity(size);
    rec(host, cand.to_vec(), size, &mut cur, f)
}

/// `t` pairwise vertex-disjoint cliques of size `m` inside `allowed`.
///
/// Exact: the smallest available vertex is either left out of every clique
/// or is the smallest vertex of one.
pub(crate) fn find_disjoint_cliques(
    host: Host<'_>,
    allowed: &[u64],
    t: usize,
    m: usize,
) -> Option<Vec<Vec<usize>>> {
    let mut acc = Vec::with_capacity(t);
    if packing_rec(host, allowed.to_vec(), t, m, &mut acc) {
        Some(acc)
    } else {
        None
    }
}

fn packing_rec(
    host: Host<'_>,
    avail: Vec<u64>,
    t: usize,
    m: usize,
    acc: &mut Vec<Vec<usize>>,
) -> bool {
    if t == 0 {
        return true;
    }
    if bits::count(&avail) < t * m {
        return false;
    }
    if m == 1 {
        acc.extend(bits::iter(&avail).take(t).map(|v| vec![v]));
        return true;
    }
    let v = bits::iter(&avail).next().expect("nonempty");
    let mut rest = avail.clone();
    bits::clear(&mut rest, v);
    let nbrs: Vec<u64> = rest.iter().zip(host.row(v)).map(|(a, b)| a & b).collect();
    let found = any_clique(host, &nbrs, m - 1, &mut |clique| {
        let mut next = rest.clone();
        for &u in clique {
            bits::clear(&mut next, u);
        }
        let mut full = vec![v];
        full.extend_from_slice(clique);
        acc.push(full);
        if packing_rec(host, next, t - 1, m, acc) {
            return true;
        }
        acc.pop();
        false
    });
    if found {
        return true;
    }
    packing_rec(host, rest, t, m, acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn embeds_cycle_in_clique() {
        let host = complete(5).unwrap();
        let h = Host::of(&host);
        let map = find_embedding(&cycle(4).unwrap(), h, &h.full_mask()).unwrap();
        let mut sorted = map.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 4);
    }

    #[test]
    fn no_triangle_in_bipartite_host() {
        let host = SimpleGraph::from_edges(6, [(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5)])
            .unwrap();
        let h = Host::of(&host);
        assert!(find_embedding(&complete(3).unwrap(), h, &h.full_mask()).is_none());
        assert!(find_embedding(&cycle(6).unwrap(), h, &h.full_mask()).is_some());
    }

    #[test]
    fn disjoint_triangles() {
        let host = complete(6).unwrap();
        let h = Host::of(&host);
        let found = find_disjoint_cliques(h, &h.full_mask(), 2, 3).unwrap();
        assert_eq!(found.len(), 2);
        let host = complete(5).unwrap();
        let h = Host::of(&host);
        assert!(find_disjoint_cliques(h, &h.full_mask(), 2, 3).is_none());
    }

    #[test]
    fn wide_host_clique() {
        let host = path(100).unwrap().complement();
        let h = Host::of(&host);
        let c = find_clique(h, &h.full_mask(), 5).unwrap();
        for (i, &a) in c.iter().enumerate() {
            for &b in &c[i + 1..] {
                assert!(host.has_edge(a, b));
            }
        }
    }
}
