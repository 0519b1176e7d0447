//! Multigraphs with loops, used for the contracted core of a sparse graph.

use serde::{Deserialize, Serialize};

use crate::graph::SimpleGraph;

/// Undirected multigraph. A loop counts as one edge and adds 2 to the
/// degree of its vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiGraph {
    vertex_count: usize,
    /// Row-major symmetric multiplicities with a zero diagonal.
    multiplicity: Vec<u32>,
    loops: Vec<u32>,
}

impl MultiGraph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            multiplicity: vec![0; vertex_count * vertex_count],
            loops: vec![0; vertex_count],
        }
    }

    pub fn from_simple(g: &SimpleGraph) -> Self {
        let mut m = Self::new(g.vertex_count());
        for (u, v) in g.edges() {
            m.add_edge(u, v);
        }
        m
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Adds one copy of `uv`; `u == v` adds a loop.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            self.loops[u] += 1;
        } else {
            self.multiplicity[u * self.vertex_count + v] += 1;
            self.multiplicity[v * self.vertex_count + u] += 1;
        }
    }

    /// Removes one copy of `uv`. Returns false if there was none.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v {
            if self.loops[u] == 0 {
                return false;
            }
            self.loops[u] -= 1;
        } else {
            let i = u * self.vertex_count + v;
            if self.multiplicity[i] == 0 {
                return false;
            }
            self.multiplicity[i] -= 1;
            self.multiplicity[v * self.vertex_count + u] -= 1;
        }
        true
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        if u == v {
            self.loops[u]
        } else {
            self.multiplicity[u * self.vertex_count + v]
        }
    }

    pub fn loop_count(&self, v: usize) -> u32 {
        self.loops[v]
    }

    pub fn total_loops(&self) -> usize {
        self.loops.iter().map(|&l| l as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        let off: usize = self.multiplicity.iter().map(|&m| m as usize).sum();
        off / 2 + self.total_loops()
    }

    pub fn degree(&self, v: usize) -> usize {
        let row = &self.multiplicity[v * self.vertex_count..(v + 1) * self.vertex_count];
        row.iter().map(|&m| m as usize).sum::<usize>() + 2 * self.loops[v] as usize
    }

    /// Edge list `(u, v, multiplicity)` with `u <= v`; loops appear as `(v, v, count)`.
    pub fn edge_list(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count {
            if self.loops[u] > 0 {
                out.push((u, u, self.loops[u]));
            }
            for v in u + 1..self.vertex_count {
                let m = self.multiplicity(u, v);
                if m > 0 {
                    out.push((u, v, m));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..self.vertex_count {
                if !seen[v] && self.multiplicity(u, v) > 0 && u != v {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}
