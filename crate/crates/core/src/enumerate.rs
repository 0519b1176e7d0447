//! Isomorphism-free generation of small graphs.
//!
//! Graphs are grown one vertex at a time. Every graph on `v + 1` vertices is
//! a graph on `v` vertices plus a vertex, and every connected graph has a
//! non-cut vertex, so extending all canonical representatives of one level by
//! every admissible neighborhood and deduplicating canonical codes yields
//! exactly one representative per isomorphism class of the next level.

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{self, CanonCode};
use crate::graph::SimpleGraph;

/// Cap for [`gen_connected`] and [`gen_graphs`].
pub const MAX_GEN_VERTICES: usize = 10;
/// Cap for [`gen_trees`].
pub const MAX_TREE_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("generation is capped at {cap} vertices, got {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("graphs must have at least one vertex")]
    Empty,
}

#[derive(Clone, Copy)]
struct Mode {
    connected: bool,
    k_max: Option<i64>,
}

fn rows_of(code: CanonCode, n: usize) -> Vec<u32> {
    let mut rows = vec![0u32; n];
    for j in 1..n {
        for i in 0..j {
            if (code >> canon::pair_index(i, j)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

fn generate(n: usize, mode: Mode) -> Vec<CanonCode> {
    let mut level: Vec<CanonCode> = vec![0];
    for v in 1..n {
        let next: Vec<CanonCode> = level
            .par_iter()
            .flat_map_iter(|&code| {
                let mut rows = rows_of(code, v);
                rows.push(0);
                let edges = code.count_ones() as i64;
                let first = u32::from(mode.connected);
                let mut out = Vec::new();
                for mask in first..(1u32 << v) {
                    if let Some(k) = mode.k_max {
                        let excess = edges + i64::from(mask.count_ones()) - (v as i64 + 1) + 2;
                        if excess > k {
                            continue;
                        }
                    }
                    let mut child = rows.clone();
                    child[v] = mask;
                    for (u, r) in child.iter_mut().enumerate().take(v) {
                        if (mask >> u) & 1 == 1 {
                            *r |= 1 << v;
                        }
                    }
                    out.push(canon::canon_rows(&child).0);
                }
                out
            })
            .collect();
        let mut next = next;
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    level
}

fn check(n: usize, cap: usize) -> Result<(), EnumerateError> {
    if n == 0 {
        Err(EnumerateError::Empty)
    } else if n > cap {
        Err(EnumerateError::TooLarge { n, cap })
    } else {
        Ok(())
    }
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, optionally restricted to excess `e - n + 2 <= k_max`. Output is
/// in canonical labelling, sorted by canonical code.
pub fn gen_connected(n: usize, k_max: Option<i64>) -> Result<Vec<SimpleGraph>, EnumerateError> {
    check(n, MAX_GEN_VERTICES)?;
    let codes = generate(
        n,
        Mode {
            connected: true,
            k_max,
        },
    );
    Ok(codes.into_iter().map(|c| canon::decode(c, n)).collect())
}

/// All graphs on `n` vertices up to isomorphism, connected or not.
pub fn gen_graphs(n: usize) -> Result<Vec<SimpleGraph>, EnumerateError> {
    check(n, MAX_GEN_VERTICES)?;
    let codes = generate(
        n,
        Mode {
            connected: false,
            k_max: None,
        },
    );
    Ok(codes.into_iter().map(|c| canon::decode(c, n)).collect())
}

/// Unlabelled trees on `n` vertices.
pub fn gen_trees(n: usize) -> Result<Vec<SimpleGraph>, EnumerateError> {
    check(n, MAX_TREE_VERTICES)?;
    let codes = generate(
        n,
        Mode {
            connected: true,
            k_max: Some(1),
        },
    );
    Ok(codes.into_iter().map(|c| canon::decode(c, n)).collect())
}
