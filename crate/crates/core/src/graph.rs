//! Undirected simple graphs with one fixed-width bit row per vertex.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::bits;

/// Largest supported vertex count. Rows are sized for this at most; anything
/// larger is rejected rather than truncated.
pub const MAX_VERTICES: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(usize),
}

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency is symmetric with an all-false diagonal. Each vertex owns
/// `words` consecutive `u64`s of `rows`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let words = bits::words_for(n);
        Ok(Self {
            n,
            words,
            rows: vec![0; n * words],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph on at most 64 vertices from single-word neighbor masks.
    pub(crate) fn from_word_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        debug_assert!((1..=64).contains(&n));
        let mask = bits::low_mask(n);
        let rows = rows.iter().map(|&r| r & mask).collect();
        Self { n, words: 1, rows }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Adds edge `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let w = self.words;
        bits::set(&mut self.rows[u * w..(u + 1) * w], v);
        bits::set(&mut self.rows[v * w..(v + 1) * w], u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let w = self.words;
        bits::clear(&mut self.rows[u * w..(u + 1) * w], v);
        bits::clear(&mut self.rows[v * w..(v + 1) * w], u);
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of `u64` words in each adjacency row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn raw_rows(&self) -> &[u64] {
        &self.rows
    }

    /// Neighbor mask of `v` for graphs on at most 64 vertices.
    #[inline]
    pub(crate) fn word_row(&self, v: usize) -> u64 {
        debug_assert_eq!(self.words, 1);
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::test(self.row(u), v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        bits::count(&self.rows) / 2
    }

    /// `e - n + 2`, the excess of a connected graph with `n + k - 2` edges.
    pub fn excess_k(&self) -> i64 {
        self.edge_count() as i64 - self.n as i64 + 2
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// True iff the graph has a single component. A single vertex counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == 0)
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n).expect("same order");
        let w = self.words;
        for u in 0..self.n {
            for i in 0..w {
                g.rows[u * w + i] = !self.rows[u * w + i];
            }
            let tail = self.n - (w - 1) * 64;
            g.rows[u * w + w - 1] &= bits::low_mask(tail);
            bits::clear(&mut g.rows[u * w..(u + 1) * w], u);
        }
        g
    }

    /// Subgraph induced by `vertices`, relabelled `0..len` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self, GraphError> {
        let mut g = Self::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            self.check_vertex(u)?;
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Graph whose vertex `i` is this graph's vertex `order[i]`.
    pub fn relabel(&self, order: &[usize]) -> Result<Self, GraphError> {
        debug_assert_eq!(order.len(), self.n);
        self.induced_subgraph(order)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Named graph families used throughout tests, examples and the CLI.
pub mod families {
    use super::{GraphError, SimpleGraph};

    pub fn path(n: usize) -> Result<SimpleGraph, GraphError> {
        SimpleGraph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<SimpleGraph, GraphError> {
        let mut g = path(n)?;
        if n >= 3 {
            g.add_edge(n - 1, 0)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<SimpleGraph, GraphError> {
        SimpleGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Result<SimpleGraph, GraphError> {
        SimpleGraph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    /// Two adjacent centers 0 and 1 carrying `a` and `b` leaves.
    pub fn double_star(a: usize, b: usize) -> Result<SimpleGraph, GraphError> {
        let mut edges = vec![(0, 1)];
        edges.extend((0..a).map(|i| (0, 2 + i)));
        edges.extend((0..b).map(|i| (1, 2 + a + i)));
        SimpleGraph::from_edges(2 + a + b, edges)
    }

    /// Branch vertices 0 and 1 joined by `paths` internally disjoint paths,
    /// each with `inner` internal vertices.
    pub fn theta(paths: usize, inner: usize) -> Result<SimpleGraph, GraphError> {
        let n = 2 + paths * inner;
        let mut g = SimpleGraph::empty(n)?;
        for p in 0..paths {
            let base = 2 + p * inner;
            if inner == 0 {
                g.add_edge(0, 1)?;
                continue;
            }
            g.add_edge(0, base)?;
            for i in 1..inner {
                g.add_edge(base + i - 1, base + i)?;
            }
            g.add_edge(base + inner - 1, 1)?;
        }
        Ok(g)
    }

    /// `legs` paths of `leg_len` vertices hanging off center 0.
    pub fn spider(legs: usize, leg_len: usize) -> Result<SimpleGraph, GraphError> {
        let mut g = SimpleGraph::empty(1 + legs * leg_len)?;
        for l in 0..legs {
            let base = 1 + l * leg_len;
            g.add_edge(0, base)?;
            for i in 1..leg_len {
                g.add_edge(base + i - 1, base + i)?;
            }
        }
        Ok(g)
    }

    /// Disjoint union of `t` copies of `K_m`.
    pub fn disjoint_cliques(t: usize, m: usize) -> Result<SimpleGraph, GraphError> {
        let mut g = SimpleGraph::empty(t * m)?;
        for c in 0..t {
            for i in 0..m {
                for j in i + 1..m {
                    g.add_edge(c * m + i, c * m + j)?;
                }
            }
        }
        Ok(g)
    }
}
