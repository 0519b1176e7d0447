//! Canonical forms for graphs on at most 16 vertices.
//!
//! Individualization-refinement: the unit partition is refined to an
//! equitable ordered partition, the first non-singleton cell is branched on,
//! and the canonical code is the minimum adjacency code over all discrete
//! leaves. Leaves are label-invariant as a set, so the minimum is an
//! isomorphism invariant that determines the graph. Vertices that are twins
//! within the branching cell are tried once each, since swapping two twins
//! is an automorphism fixing the current partition.

use thiserror::Error;

use crate::graph::SimpleGraph;

pub const MAX_CANON_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("canonical form supports at most {MAX_CANON_VERTICES} vertices, got {0}")]
    TooLarge(usize),
}

/// Upper-triangle adjacency bits in colex pair order: pair `(i, j)`, `i < j`,
/// is bit `j(j-1)/2 + i`. Together with the vertex count this determines the
/// labelled graph.
pub type CanonCode = u128;

#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn to_rows(g: &SimpleGraph) -> Result<Vec<u32>, CanonError> {
    let n = g.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(CanonError::TooLarge(n));
    }
    Ok((0..n).map(|v| g.word_row(v) as u32).collect())
}

pub fn canonical_code(g: &SimpleGraph) -> Result<CanonCode, CanonError> {
    let rows = to_rows(g)?;
    Ok(canon_rows(&rows).0)
}

/// Relabelling order (`order[i]` is the original vertex placed at `i`) that
/// produces the canonical code.
pub fn canonical_labeling(g: &SimpleGraph) -> Result<Vec<usize>, CanonError> {
    let rows = to_rows(g)?;
    Ok(canon_rows(&rows).1)
}

pub fn canonical_form(g: &SimpleGraph) -> Result<SimpleGraph, CanonError> {
    let code = canonical_code(g)?;
    Ok(decode(code, g.vertex_count()))
}

pub fn are_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> Result<bool, CanonError> {
    Ok(a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_code(a)? == canonical_code(b)?)
}

/// Graph on `n` vertices whose adjacency code is `code`.
pub fn decode(code: CanonCode, n: usize) -> SimpleGraph {
    let mut rows = vec![0u64; n];
    for j in 1..n {
        for i in 0..j {
            if (code >> pair_index(i, j)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    SimpleGraph::from_word_rows(&rows)
}

/// Adjacency code of `rows` (at most 16 vertices) under the labelling `order`.
pub(crate) fn code_of(rows: &[u32], order: &[usize]) -> CanonCode {
    let mut code: CanonCode = 0;
    for j in 1..order.len() {
        let rj = rows[order[j]];
        for (i, &oi) in order[..j].iter().enumerate() {
            if (rj >> oi) & 1 == 1 {
                code |= 1 << pair_index(i, j);
            }
        }
    }
    code
}

/// Canonical code and labelling of a graph given by neighbor masks.
pub(crate) fn canon_rows(rows: &[u32]) -> (CanonCode, Vec<usize>) {
    let n = rows.len();
    if n <= 1 {
        return (0, (0..n).collect());
    }
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best: Option<(CanonCode, Vec<usize>)> = None;
    search(rows, vec![all], &mut best);
    best.expect("at least one leaf")
}

fn search(rows: &[u32], mut cells: Vec<u32>, best: &mut Option<(CanonCode, Vec<usize>)>) {
    refine(rows, &mut cells);
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = code_of(rows, &order);
        if best.as_ref().map_or(true, |(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = cells[target];
    let mut tried: Vec<usize> = Vec::new();
    let mut rest = cell;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let twin = tried.iter().any(|&u| {
            let keep = !((1u32 << u) | (1u32 << v));
            (rows[u] ^ rows[v]) & keep == 0
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(1u32 << v);
        next.push(cell & !(1u32 << v));
        next.extend_from_slice(&cells[target + 1..]);
        search(rows, next, best);
    }
}

/// Refines an ordered partition until every cell is equitable with respect to
/// every other cell. Split cells are replaced in place by their parts ordered
/// by neighbor count, which keeps the result label-invariant.
fn refine(rows: &[u32], cells: &mut Vec<u32>) {
    'again: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            for c in 0..cells.len() {
                let cell = cells[c];
                if cell.count_ones() < 2 {
                    continue;
                }
                let mut parts: Vec<(u32, u32)> = Vec::new();
                let mut rest = cell;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let k = (rows[v] & splitter).count_ones();
                    match parts.iter_mut().find(|(cnt, _)| *cnt == k) {
                        Some((_, m)) => *m |= 1 << v,
                        None => parts.push((k, 1 << v)),
                    }
                }
                if parts.len() > 1 {
                    parts.sort_unstable_by_key(|&(k, _)| k);
                    cells.splice(c..=c, parts.into_iter().map(|(_, m)| m));
                    continue 'again;
                }
            }
        }
        return;
    }
}
