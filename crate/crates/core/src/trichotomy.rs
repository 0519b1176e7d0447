//! Trichotomy decomposition of connected sparse graphs.
//!
//! A connected graph with `n` vertices and `n + k - 2` edges either has a
//! suspended path of order `q`, or a matching of `ell` end-edges, or at most
//! `alpha = (q-2)(2 ell + 3k - 8) + 1` vertices of degree at least 2 and
//! hence a star of at least `ceil((n - alpha)/(ell - 1))` end-edges.
//!
//! The third branch is made constructive: vertices are split into
//! `X` (neighbors of leaves), `Y` (other vertices of degree >= 3) and `Z`
//! (the remaining degree-2 vertices); leaves are pruned; every cycle whose
//! vertices other than one anchor lie in `Z` becomes a loop on the anchor;
//! every maximal `Z` chain between two non-`Z` vertices becomes an edge.
//! The resulting multigraph core and the [`ContractionTrace`] carry every
//! intermediate bound, and the trace replays back to the pruned graph.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::multigraph::MultiGraph;
use crate::structure::{
    is_suspended_path, longest_suspended_path, max_end_edge_matching, max_end_edge_star,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrichotomyError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph needs at least {need} vertices, has {have}")]
    TooSmall { need: usize, have: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("degenerate parameters: 2*ell + 3k - 8 = {budget} <= 0, so alpha = {alpha} gives no usable bound (a star K_1,n-1 already violates it)")]
    Degenerate { budget: i64, alpha: i64 },
    #[error("pruning leaves leaves nothing (the graph is a single edge)")]
    EmptyAfterPruning,
    #[error("every vertex lies in Z: the graph itself is a cycle")]
    WholeGraphCycle,
    #[error("vertex {0} is marked Z but does not have degree 2")]
    InvalidZ(usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("tree has {n} vertices, below the threshold 4*a*b*g = {need}")]
    BelowThreshold { n: usize, need: usize },
    #[error("no structure found although the lemma guarantees one: {0}")]
    LemmaViolated(String),
    #[error("contraction trace does not replay: {0}")]
    ReplayFailed(String),
}

/// Thresholds `q` (suspended-path order) and `ell` (end-edge matching size)
/// together with the excess `k` and the derived `alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct TrichotomyParams {
    q: usize,
    ell: usize,
    k: i64,
    alpha: i64,
    non_degenerate: bool,
}

#[derive(Deserialize)]
struct RawParams {
    q: usize,
    ell: usize,
    k: i64,
    alpha: i64,
    non_degenerate: bool,
}

impl TryFrom<RawParams> for TrichotomyParams {
    type Error = TrichotomyError;
    fn try_from(raw: RawParams) -> Result<Self, Self::Error> {
        let p = Self::new(raw.q, raw.ell, raw.k)?;
        if p.alpha != raw.alpha || p.non_degenerate != raw.non_degenerate {
            return Err(TrichotomyError::InvalidParams(format!(
                "stored alpha {} does not match recomputed {}",
                raw.alpha, p.alpha
            )));
        }
        Ok(p)
    }
}

impl TrichotomyParams {
    pub fn new(q: usize, ell: usize, k: i64) -> Result<Self, TrichotomyError> {
        if q < 3 {
            return Err(TrichotomyError::InvalidParams(format!("q = {q} < 3")));
        }
        if ell < 2 {
            return Err(TrichotomyError::InvalidParams(format!("ell = {ell} < 2")));
        }
        if k < 1 {
            return Err(TrichotomyError::InvalidParams(format!("k = {k} < 1")));
        }
        let budget = Self::budget_of(ell, k);
        Ok(Self {
            q,
            ell,
            k,
            alpha: (q as i64 - 2) * budget + 1,
            non_degenerate: budget >= 1,
        })
    }

    fn budget_of(ell: usize, k: i64) -> i64 {
        2 * ell as i64 + 3 * k - 8
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    /// `2 ell + 3k - 8`, the bound on the core's edge count.
    pub fn core_edge_budget(&self) -> i64 {
        Self::budget_of(self.ell, self.k)
    }

    pub fn non_degenerate(&self) -> bool {
        self.non_degenerate
    }

    /// `ceil((n - alpha)/(ell - 1))`; may be zero or negative for small `n`.
    pub fn star_bound(&self, n: usize) -> i64 {
        Integer::div_ceil(&(n as i64 - self.alpha), &(self.ell as i64 - 1))
    }

    fn require_non_degenerate(&self) -> Result<(), TrichotomyError> {
        if self.non_degenerate {
            Ok(())
        } else {
            Err(TrichotomyError::Degenerate {
                budget: self.core_edge_budget(),
                alpha: self.alpha,
            })
        }
    }
}

/// Leaves plus the `X`/`Y`/`Z` split; together they partition the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XyzClassification {
    pub leaves: Vec<usize>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub z: Vec<usize>,
}

fn require_connected(g: &SimpleGraph, min_n: usize) -> Result<(), TrichotomyError> {
    if g.vertex_count() < min_n {
        return Err(TrichotomyError::TooSmall {
            need: min_n,
            have: g.vertex_count(),
        });
    }
    if !g.is_connected() {
        return Err(TrichotomyError::Disconnected);
    }
    Ok(())
}

pub fn classify_xyz(g: &SimpleGraph) -> Result<XyzClassification, TrichotomyError> {
    require_connected(g, 3)?;
    let n = g.vertex_count();
    let deg = g.degrees();
    let mut in_x = vec![false; n];
    for v in (0..n).filter(|&v| deg[v] == 1) {
        for u in g.neighbors(v) {
            in_x[u] = true;
        }
    }
    let mut out = XyzClassification {
        leaves: vec![],
        x: vec![],
        y: vec![],
        z: vec![],
    };
    for v in 0..n {
        if deg[v] == 1 {
            out.leaves.push(v);
        } else if in_x[v] {
            out.x.push(v);
        } else if deg[v] >= 3 {
            out.y.push(v);
        } else {
            out.z.push(v);
        }
    }
    Ok(out)
}

/// Graph with relabelled vertices and the map back to the source graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrunedGraph {
    pub graph: SimpleGraph,
    /// `origin[i]` is the source vertex of vertex `i`.
    pub origin: Vec<usize>,
}

/// Removes every degree-1 vertex once. Vertices becoming leaves are kept.
pub fn prune_leaves(g: &SimpleGraph) -> Result<PrunedGraph, TrichotomyError> {
    require_connected(g, 1)?;
    let origin: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) != 1).collect();
    if origin.is_empty() {
        return Err(TrichotomyError::EmptyAfterPruning);
    }
    let graph = g.induced_subgraph(&origin).expect("subset of a valid graph");
    Ok(PrunedGraph { graph, origin })
}

/// Repeats leaf removal until no leaves remain, stopping at a single edge
/// rather than emptying it. Not part of the decomposition, which prunes
/// exactly once.
pub fn prune_leaves_repeatedly(g: &SimpleGraph) -> Result<PrunedGraph, TrichotomyError> {
    let mut cur = prune_leaves(g)?;
    loop {
        let g = &cur.graph;
        if g.vertex_count() <= 2 || (0..g.vertex_count()).all(|v| g.degree(v) != 1) {
            return Ok(cur);
        }
        let next = prune_leaves(&cur.graph)?;
        let origin = next.origin.iter().map(|&i| cur.origin[i]).collect();
        cur = PrunedGraph {
            graph: next.graph,
            origin,
        };
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ContractionStep {
    /// Cycle `anchor, removed..., anchor` replaced by a loop on `anchor`.
    Cycle {
        anchor: usize,
        removed: Vec<usize>,
        edges_removed: usize,
    },
    /// Path `endpoints.0, removed..., endpoints.1` replaced by one edge.
    Path {
        endpoints: (usize, usize),
        removed: Vec<usize>,
        edges_removed: usize,
    },
}

impl ContractionStep {
    pub fn removed(&self) -> &[usize] {
        match self {
            Self::Cycle { removed, .. } | Self::Path { removed, .. } => removed,
        }
    }

    pub fn vertices_removed(&self) -> usize {
        self.removed().len()
    }

    /// Net decrease of the edge count, as measured while contracting.
    pub fn edges_removed(&self) -> usize {
        match self {
            Self::Cycle { edges_removed, .. } | Self::Path { edges_removed, .. } => *edges_removed,
        }
    }
}

/// Ordered contraction steps over the pruned graph's vertex ids, the
/// resulting core and the map from core vertices to pruned-graph vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionTrace {
    pub steps: Vec<ContractionStep>,
    pub core: MultiGraph,
    pub core_origin: Vec<usize>,
    pub pruned_order: usize,
}

struct ZChain {
    inner: Vec<usize>,
    ends: Option<(usize, usize)>,
}

fn z_chains(gp: &SimpleGraph, is_z: &[bool]) -> Vec<ZChain> {
    let n = gp.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if !is_z[s] || seen[s] {
            continue;
        }
        let nb: Vec<usize> = gp.neighbors(s).collect();
        let walk = |mut prev: usize, mut cur: usize| {
            let mut acc = Vec::new();
            loop {
                if cur == s {
                    return (acc, cur, true);
                }
                if !is_z[cur] {
                    return (acc, cur, false);
                }
                acc.push(cur);
                let next = gp.neighbors(cur).find(|&x| x != prev).expect("degree 2");
                prev = cur;
                cur = next;
            }
        };
        let (right, re, closed) = walk(s, nb[1]);
        let chain = if closed {
            let mut inner = vec![s];
            inner.extend(right);
            ZChain { inner, ends: None }
        } else {
            let (left, le, _) = walk(s, nb[0]);
            let mut inner: Vec<usize> = left.into_iter().rev().collect();
            inner.push(s);
            inner.extend(right);
            ZChain {
                inner,
                ends: Some((le, re)),
            }
        };
        for &v in &chain.inner {
            seen[v] = true;
        }
        out.push(chain);
    }
    out
}

/// Contracts `Z` out of the pruned graph. `z` uses the pruned graph's ids.
pub fn contract_to_core(gp: &SimpleGraph, z: &[usize]) -> Result<ContractionTrace, TrichotomyError> {
    let n = gp.vertex_count();
    let mut is_z = vec![false; n];
    for &v in z {
        if v >= n || gp.degree(v) != 2 {
            return Err(TrichotomyError::InvalidZ(v));
        }
        is_z[v] = true;
    }
    let mut cycles = Vec::new();
    let mut paths = Vec::new();
    for chain in z_chains(gp, &is_z) {
        match chain.ends {
            None => return Err(TrichotomyError::WholeGraphCycle),
            Some((u, w)) if u == w => {
                let mut removed = chain.inner;
                if removed.first() > removed.last() {
                    removed.reverse();
                }
                cycles.push((u, removed));
            }
            Some((u, w)) => {
                let (mut a, mut b, mut removed) = (u, w, chain.inner);
                if a > b {
                    std::mem::swap(&mut a, &mut b);
                    removed.reverse();
                }
                paths.push(((a, b), removed));
            }
        }
    }
    cycles.sort();
    paths.sort();

    let mut work = MultiGraph::from_simple(gp);
    let mut steps = Vec::with_capacity(cycles.len() + paths.len());
    for (anchor, removed) in cycles {
        let before = work.edge_count();
        let mut prev = anchor;
        for &v in removed.iter().chain(std::iter::once(&anchor)) {
            work.remove_edge(prev, v);
            prev = v;
        }
        work.add_edge(anchor, anchor);
        steps.push(ContractionStep::Cycle {
            anchor,
            removed,
            edges_removed: before - work.edge_count(),
        });
    }
    for ((a, b), removed) in paths {
        let before = work.edge_count();
        let mut prev = a;
        for &v in removed.iter().chain(std::iter::once(&b)) {
            work.remove_edge(prev, v);
            prev = v;
        }
        work.add_edge(a, b);
        steps.push(ContractionStep::Path {
            endpoints: (a, b),
            removed,
            edges_removed: before - work.edge_count(),
        });
    }

    let core_origin: Vec<usize> = (0..n).filter(|&v| !is_z[v]).collect();
    let mut core = MultiGraph::new(core_origin.len());
    for (i, &a) in core_origin.iter().enumerate() {
        for _ in 0..work.loop_count(a) {
            core.add_edge(i, i);
        }
        for (j, &b) in core_origin.iter().enumerate().skip(i + 1) {
            for _ in 0..work.multiplicity(a, b) {
                core.add_edge(i, j);
            }
        }
    }
    Ok(ContractionTrace {
        steps,
        core,
        core_origin,
        pruned_order: n,
    })
}

impl ContractionTrace {
    /// Replays the steps backwards, expanding each loop or contracted edge
    /// into its recorded path, and returns the reconstructed pruned graph.
    pub fn expand(&self) -> Result<SimpleGraph, TrichotomyError> {
        let n = self.pruned_order;
        let mut work = MultiGraph::new(n);
        for (a, b, m) in self.core.edge_list() {
            for _ in 0..m {
                work.add_edge(self.core_origin[a], self.core_origin[b]);
            }
        }
        for step in self.steps.iter().rev() {
            let (a, b, removed) = match step {
                ContractionStep::Cycle {
                    anchor, removed, ..
                } => (*anchor, *anchor, removed),
                ContractionStep::Path {
                    endpoints, removed, ..
                } => (endpoints.0, endpoints.1, removed),
            };
            if !work.remove_edge(a, b) {
                return Err(TrichotomyError::ReplayFailed(format!(
                    "edge {a}-{b} missing when expanding"
                )));
            }
            let mut prev = a;
            for &v in removed.iter().chain(std::iter::once(&b)) {
                work.add_edge(prev, v);
                prev = v;
            }
        }
        let mut g = SimpleGraph::empty(n).map_err(|e| TrichotomyError::ReplayFailed(e.to_string()))?;
        for (a, b, m) in work.edge_list() {
            if a == b || m != 1 {
                return Err(TrichotomyError::ReplayFailed(format!(
                    "expanded graph is not simple at {a}-{b} (multiplicity {m})"
                )));
            }
            g.add_edge(a, b).expect("in range");
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: i64,
    pub relation: String,
    pub rhs: i64,
    pub holds: bool,
}

impl BoundCheck {
    fn le(name: &str, lhs: i64, rhs: i64) -> Self {
        Self {
            name: name.to_string(),
            lhs,
            relation: "<=".into(),
            rhs,
            holds: lhs <= rhs,
        }
    }

    fn eq(name: &str, lhs: i64, rhs: i64) -> Self {
        Self {
            name: name.to_string(),
            lhs,
            relation: "=".into(),
            rhs,
            holds: lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreBoundsReport {
    pub checks: Vec<BoundCheck>,
    pub all_hold: bool,
}

/// Evaluates the intermediate inequalities of the decomposition on a
/// concrete core. Each check reports both sides.
pub fn core_bounds_check(
    trace: &ContractionTrace,
    params: &TrichotomyParams,
    x: &[usize],
    y: &[usize],
) -> Result<CoreBoundsReport, TrichotomyError> {
    params.require_non_degenerate()?;
    let (ell, k, q) = (params.ell as i64, params.k, params.q as i64);
    let core_n = trace.core.vertex_count() as i64;
    let core_e = trace.core.edge_count() as i64;
    let reconstructed = (q - 2) * core_e + 1;
    let checks = vec![
        BoundCheck::le("|X| <= ell - 1", x.len() as i64, ell - 1),
        BoundCheck::le("|Y| <= ell + 2k - 5", y.len() as i64, ell + 2 * k - 5),
        BoundCheck::eq("|G''| = |X| + |Y|", core_n, (x.len() + y.len()) as i64),
        BoundCheck::le("|G''| <= 2 ell + 2k - 6", core_n, 2 * ell + 2 * k - 6),
        BoundCheck::eq("e(G'') = |G''| + k - 2", core_e, core_n + k - 2),
        BoundCheck::le("e(G'') <= 2 ell + 3k - 8", core_e, params.core_edge_budget()),
        BoundCheck::le("|G'| <= (q - 2) e(G'') + 1", trace.pruned_order as i64, reconstructed),
        BoundCheck::le("(q - 2) e(G'') + 1 <= alpha", reconstructed, params.alpha),
    ];
    let all_hold = checks.iter().all(|c| c.holds);
    Ok(CoreBoundsReport { checks, all_hold })
}

/// The structure guaranteed by the trichotomy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum TrichotomyCertificate {
    SuspendedPath {
        path: Vec<usize>,
    },
    EndEdgeMatching {
        edges: Vec<(usize, usize)>,
    },
    StarWitness {
        /// `None` only when the graph has no leaves, in which case
        /// `star_bound <= 0`.
        center: Option<usize>,
        leaves: Vec<usize>,
        deg2_count: usize,
        alpha: i64,
        star_bound: i64,
    },
}

impl TrichotomyCertificate {
    /// Re-checks the certificate against `g` from scratch.
    pub fn validate(&self, g: &SimpleGraph, q: usize, ell: usize) -> Result<(), String> {
        let n = g.vertex_count();
        match self {
            Self::SuspendedPath { path } => {
                if path.len() < q {
                    return Err(format!("path order {} < q = {q}", path.len()));
                }
                if !is_suspended_path(g, path) {
                    return Err("not a suspended path".into());
                }
            }
            Self::EndEdgeMatching { edges } => {
                if edges.len() < ell {
                    return Err(format!("matching size {} < ell = {ell}", edges.len()));
                }
                validate_end_edge_matching(g, edges)?;
            }
            Self::StarWitness {
                center,
                leaves,
                deg2_count,
                alpha,
                star_bound,
            } => {
                let params = TrichotomyParams::new(q, ell, g.excess_k()).map_err(|e| e.to_string())?;
                if *alpha != params.alpha() {
                    return Err(format!("alpha {alpha} != recomputed {}", params.alpha()));
                }
                let count = (0..n).filter(|&v| g.degree(v) >= 2).count();
                if count != *deg2_count {
                    return Err(format!("deg2_count {deg2_count} != recomputed {count}"));
                }
                if count as i64 > *alpha {
                    return Err(format!("{count} vertices of degree >= 2 exceed alpha = {alpha}"));
                }
                if *star_bound != params.star_bound(n) {
                    return Err(format!("star_bound {star_bound} != recomputed"));
                }
                if (leaves.len() as i64) < *star_bound {
                    return Err(format!("star has {} leaves < {star_bound}", leaves.len()));
                }
                match center {
                    Some(c) => {
                        let mut seen = vec![false; n];
                        for &l in leaves {
                            if l >= n || seen[l] || !g.has_edge(*c, l) || g.degree(l) != 1 {
                                return Err(format!("{l} is not a distinct leaf of center {c}"));
                            }
                            seen[l] = true;
                        }
                    }
                    None if leaves.is_empty() => {}
                    None => return Err("leaves listed without a center".into()),
                }
            }
        }
        Ok(())
    }
}

fn validate_end_edge_matching(g: &SimpleGraph, edges: &[(usize, usize)]) -> Result<(), String> {
    let n = g.vertex_count();
    let mut used = vec![false; n];
    for &(a, b) in edges {
        if a >= n || b >= n || !g.has_edge(a, b) {
            return Err(format!("{a}-{b} is not an edge"));
        }
        if g.degree(a) != 1 && g.degree(b) != 1 {
            return Err(format!("{a}-{b} is not an end-edge"));
        }
        if used[a] || used[b] {
            return Err(format!("{a}-{b} overlaps another matching edge"));
        }
        used[a] = true;
        used[b] = true;
    }
    Ok(())
}

/// Checks preconditions and returns the first applicable structure in the
/// order suspended path, end-edge matching, star.
pub fn trichotomy_certificate(
    g: &SimpleGraph,
    q: usize,
    ell: usize,
) -> Result<TrichotomyCertificate, TrichotomyError> {
    require_connected(g, q.max(3))?;
    let params = TrichotomyParams::new(q, ell, g.excess_k())?;
    params.require_non_degenerate()?;

    let path = longest_suspended_path(g);
    let cert = if path.len() >= q {
        TrichotomyCertificate::SuspendedPath { path }
    } else {
        let matching = max_end_edge_matching(g);
        if matching.len() >= ell {
            TrichotomyCertificate::EndEdgeMatching { edges: matching }
        } else {
            let n = g.vertex_count();
            let (center, leaves) = match max_end_edge_star(g) {
                Some((c, l)) => (Some(c), l),
                None => (None, vec![]),
            };
            TrichotomyCertificate::StarWitness {
                center,
                leaves,
                deg2_count: (0..n).filter(|&v| g.degree(v) >= 2).count(),
                alpha: params.alpha(),
                star_bound: params.star_bound(n),
            }
        }
    };
    cert.validate(g, q, ell)
        .map_err(TrichotomyError::LemmaViolated)?;
    Ok(cert)
}

/// Every intermediate object of the decomposition for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub params: TrichotomyParams,
    pub classification: XyzClassification,
    pub pruned: PrunedGraph,
    /// `None` when the whole graph is a cycle.
    pub trace: Option<ContractionTrace>,
    pub bounds: Option<CoreBoundsReport>,
}

/// Runs classification, pruning, contraction and (for non-degenerate
/// parameters) the bound checks.
pub fn decompose(g: &SimpleGraph, q: usize, ell: usize) -> Result<Decomposition, TrichotomyError> {
    let classification = classify_xyz(g)?;
    let params = TrichotomyParams::new(q, ell, g.excess_k())?;
    let pruned = prune_leaves(g)?;
    let mut to_pruned = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in pruned.origin.iter().enumerate() {
        to_pruned[v] = i;
    }
    let z: Vec<usize> = classification.z.iter().map(|&v| to_pruned[v]).collect();
    let trace = match contract_to_core(&pruned.graph, &z) {
        Ok(t) => Some(t),
        Err(TrichotomyError::WholeGraphCycle) => None,
        Err(e) => return Err(e),
    };
    let bounds = match (&trace, params.non_degenerate()) {
        (Some(t), true) => Some(core_bounds_check(
            t,
            &params,
            &classification.x,
            &classification.y,
        )?),
        _ => None,
    };
    Ok(Decomposition {
        params,
        classification,
        pruned,
        trace,
        bounds,
    })
}

/// Structure guaranteed for trees on at least `4abg` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum TreeCertificate {
    SuspendedPath { path: Vec<usize> },
    EndEdgeMatching { edges: Vec<(usize, usize)> },
    EndEdgeStar { center: usize, leaves: Vec<usize> },
}

impl TreeCertificate {
    pub fn validate(&self, t: &SimpleGraph, a: usize, b: usize, g: usize) -> Result<(), String> {
        match self {
            Self::SuspendedPath { path } => {
                if path.len() < a || !is_suspended_path(t, path) {
                    return Err(format!("invalid suspended path of order {}", path.len()));
                }
            }
            Self::EndEdgeMatching { edges } => {
                if edges.len() < b {
                    return Err(format!("matching size {} < {b}", edges.len()));
                }
                validate_end_edge_matching(t, edges)?;
            }
            Self::EndEdgeStar { center, leaves } => {
                if leaves.len() < g {
                    return Err(format!("star size {} < {g}", leaves.len()));
                }
                let mut seen = vec![false; t.vertex_count()];
                for &l in leaves {
                    if l >= t.vertex_count() || seen[l] || !t.has_edge(*center, l) || t.degree(l) != 1 {
                        return Err(format!("{l} is not a distinct leaf of {center}"));
                    }
                    seen[l] = true;
                }
            }
        }
        Ok(())
    }
}

/// Suspended path of order `a`, end-edge matching of size `b` or end-edge
/// star of size `g` in a tree on `n >= 4abg` vertices, tried in that order.
pub fn tree_trichotomy(
    t: &SimpleGraph,
    a: usize,
    b: usize,
    g: usize,
) -> Result<TreeCertificate, TrichotomyError> {
    if a == 0 || b == 0 || g == 0 {
        return Err(TrichotomyError::InvalidParams(
            "a, b and g must be positive".into(),
        ));
    }
    if !t.is_tree() {
        return Err(TrichotomyError::NotATree);
    }
    let n = t.vertex_count();
    let need = 4 * a * b * g;
    if n < need {
        return Err(TrichotomyError::BelowThreshold { n, need });
    }
    let path = longest_suspended_path(t);
    let cert = if path.len() >= a {
        TreeCertificate::SuspendedPath { path }
    } else {
        let matching = max_end_edge_matching(t);
        if matching.len() >= b {
            TreeCertificate::EndEdgeMatching { edges: matching }
        } else {
            match max_end_edge_star(t) {
                Some((center, leaves)) if leaves.len() >= g => {
                    TreeCertificate::EndEdgeStar { center, leaves }
                }
                _ => {
                    return Err(TrichotomyError::LemmaViolated(format!(
                        "tree on {n} vertices with a={a}, b={b}, g={g}"
                    )))
                }
            }
        }
    };
    cert.validate(t, a, b, g).map_err(TrichotomyError::LemmaViolated)?;
    Ok(cert)
}
