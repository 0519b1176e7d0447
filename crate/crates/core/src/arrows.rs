//! Exact arrowing decisions `K_N -> (G, tK_m)` and small Ramsey numbers.
//!
//! Two exact engines are available.
//!
//! * Edge DFS assigns colors to the pairs of `K_N` in a fixed order and
//!   backtracks as soon as the partial coloring contains a red `G` or a blue
//!   `tK_m` (both properties only grow as more edges are colored). With the
//!   first-vertex rule, the red neighbors of vertex 0 must form a prefix
//!   `1..=r`; every coloring becomes such a coloring after permuting
//!   vertices `1..N`, which fixes vertex 0, so no class is lost.
//! * Vertex extension keeps one representative per isomorphism class of
//!   good colorings of `K_k` (no red `G`, no blue `tK_m`) and extends each by
//!   one vertex in every possible way. Good colorings are closed under
//!   deleting vertices, so every good coloring of `K_{k+1}` arises from a
//!   good coloring of `K_k`, and `K_N` arrows iff some level is empty.
//!   This is the default engine; it is orders of magnitude faster at the
//!   orders the acceptance suite needs.
//!
//! Every counterexample is re-checked with the colorings module before it
//! is returned.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{self, CanonCode};
use crate::colorings::{self, component_mask, is_good_coloring, TwoColoring};
use crate::embed::{self, Host};
use crate::graph::SimpleGraph;

/// Largest `N` the search accepts.
pub const MAX_SEARCH_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrowsError {
    #[error("N = {0} exceeds the search cap of {MAX_SEARCH_ORDER}")]
    TooLarge(usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid search configuration: {0}")]
    BadConfig(String),
    #[error("internal error: counterexample failed re-verification")]
    BadCounterexample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeOrder {
    /// By smaller endpoint, then larger endpoint.
    #[default]
    Lex,
    /// By larger endpoint, then smaller endpoint, so each new vertex is
    /// completed before the next one starts.
    Colex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    None,
    FirstVertex,
    /// Isomorph-free vertex extension; ignores the edge order.
    #[default]
    Canonical,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SearchConfig {
    pub edge_order: EdgeOrder,
    pub symmetry: Symmetry,
    pub node_budget: Option<u64>,
    pub time_budget_secs: Option<f64>,
    /// Worker threads; `None` uses the ambient rayon pool.
    pub threads: Option<usize>,
}

impl SearchConfig {
    /// Edge DFS in lexicographic order with the first-vertex rule.
    pub fn edge_dfs() -> Self {
        Self {
            symmetry: Symmetry::FirstVertex,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), ArrowsError> {
        if self.node_budget == Some(0) {
            return Err(ArrowsError::BadConfig("node budget must be positive".into()));
        }
        if let Some(s) = self.time_budget_secs {
            if !(s > 0.0 && s.is_finite()) {
                return Err(ArrowsError::BadConfig("time budget must be positive".into()));
            }
        }
        if self.threads == Some(0) {
            return Err(ArrowsError::BadConfig("thread count must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Arrows,
    NotArrows,
    /// A budget ran out before the search closed.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunings: u64,
    pub elapsed_secs: f64,
    /// Isomorphism classes of good colorings per order (vertex extension
    /// only), starting at order 1.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub level_sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArrowsResult {
    #[serde(rename = "N")]
    pub order: usize,
    pub graph: SimpleGraph,
    pub t: usize,
    pub m: usize,
    pub verdict: Verdict,
    /// Present exactly when the verdict is `NotArrows`.
    pub counterexample: Option<TwoColoring>,
    pub stats: SearchStats,
    pub config: SearchConfig,
}

impl ArrowsResult {
    /// `Some(true)` / `Some(false)` for a closed search, `None` if unknown.
    pub fn arrows(&self) -> Option<bool> {
        match self.verdict {
            Verdict::Arrows => Some(true),
            Verdict::NotArrows => Some(false),
            Verdict::Unknown => None,
        }
    }
}

struct Problem<'a> {
    order: usize,
    g: &'a SimpleGraph,
    g_connected: bool,
    t: usize,
    m: usize,
}

impl Problem<'_> {
    /// Whether the red graph, which had no copy of `G` before the last
    /// change at `anchor`, now contains one.
    fn red_hit(&self, red: &[u64], k: usize, red_edges: usize, anchor: usize) -> bool {
        let gn = self.g.vertex_count();
        if gn > k || red_edges < self.g.edge_count() {
            return false;
        }
        let host = Host {
            rows: red,
            words: 1,
            n: k,
        };
        let allowed = if self.g_connected {
            let comp = component_mask(red, anchor);
            if (comp.count_ones() as usize) < gn {
                return false;
            }
            comp
        } else {
            low_mask(k)
        };
        embed::find_embedding(self.g, host, &[allowed]).is_some()
    }

    /// Whether the blue graph contains a `tK_m`, given that it had none
    /// before the blue neighbors `seed` of the new edge or vertex appeared.
    /// `seed` is the common blue neighborhood of a new edge (`need = m-2`)
    /// or the blue neighborhood of a new vertex (`need = m-1`).
    fn blue_hit(&self, blue: &[u64], k: usize, seed: u64, need: usize) -> bool {
        if self.t * self.m > k || self.m == 0 {
            return false;
        }
        let host = Host {
            rows: blue,
            words: 1,
            n: k,
        };
        if embed::find_clique(host, &[seed], need).is_none() {
            return false;
        }
        self.t == 1 || embed::find_disjoint_cliques(host, &[low_mask(k)], self.t, self.m).is_some()
    }
}

fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

struct Shared {
    stop: AtomicBool,
    budget_hit: AtomicBool,
    nodes: AtomicU64,
    prunings: AtomicU64,
    node_budget: Option<u64>,
    deadline: Option<Instant>,
}

impl Shared {
    fn new(cfg: &SearchConfig, start: Instant) -> Self {
        Self {
            stop: AtomicBool::new(false),
            budget_hit: AtomicBool::new(false),
            nodes: AtomicU64::new(0),
            prunings: AtomicU64::new(0),
            node_budget: cfg.node_budget,
            deadline: cfg
                .time_budget_secs
                .map(|s| start + Duration::from_secs_f64(s)),
        }
    }

    /// Adds to the node counter and reports whether the search must stop.
    fn charge(&self, nodes: u64, prunings: u64) -> bool {
        let total = self.nodes.fetch_add(nodes, Ordering::Relaxed) + nodes;
        self.prunings.fetch_add(prunings, Ordering::Relaxed);
        let over_nodes = self.node_budget.is_some_and(|b| total > b);
        let over_time = self.deadline.is_some_and(|d| Instant::now() > d);
        if over_nodes || over_time {
            self.budget_hit.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
        }
        self.stop.load(Ordering::Relaxed)
    }
}

#[derive(Clone)]
struct State {
    red: Vec<u64>,
    blue: Vec<u64>,
    red_edges: usize,
}

enum Flow {
    Exhausted,
    Found(Vec<u64>),
    Stopped,
}

struct Dfs<'a> {
    p: &'a Problem<'a>,
    edges: &'a [(usize, usize)],
    first_vertex: bool,
    shared: &'a Shared,
    nodes: u64,
    prunings: u64,
}

const FLUSH: u64 = 4096;

impl Dfs<'_> {
    fn allowed(&self, st: &State, e: usize, red: bool) -> bool {
        if !(self.first_vertex && red) {
            return true;
        }
        let (u, v) = self.edges[e];
        // Red neighbors of vertex 0 form a prefix 1..=r.
        u != 0 || v <= 1 || st.red[0] >> (v - 1) & 1 == 1
    }

    /// Colors edge `e` and reports whether the result is still good.
    fn apply(&self, st: &mut State, e: usize, red: bool) -> bool {
        let (u, v) = self.edges[e];
        let k = self.p.order;
        if red {
            st.red[u] |= 1 << v;
            st.red[v] |= 1 << u;
            st.red_edges += 1;
            !self.p.red_hit(&st.red, k, st.red_edges, u)
        } else {
            st.blue[u] |= 1 << v;
            st.blue[v] |= 1 << u;
            let seed = st.blue[u] & st.blue[v];
            !self.p.blue_hit(&st.blue, k, seed, self.p.m.saturating_sub(2))
        }
    }

    fn undo(st: &mut State, e: (usize, usize), red: bool) {
        let (u, v) = e;
        if red {
            st.red[u] &= !(1 << v);
            st.red[v] &= !(1 << u);
            st.red_edges -= 1;
        } else {
            st.blue[u] &= !(1 << v);
            st.blue[v] &= !(1 << u);
        }
    }

    fn run(&mut self, st: &mut State, e: usize) -> Flow {
        self.nodes += 1;
        if self.nodes % FLUSH == 0 {
            self.shared.charge(FLUSH, self.prunings);
            self.prunings = 0;
        }
        if self.shared.stop.load(Ordering::Relaxed) {
            return Flow::Stopped;
        }
        if e == self.edges.len() {
            return Flow::Found(st.red.clone());
        }
        for red in [true, false] {
            if !self.allowed(st, e, red) {
                continue;
            }
            if self.apply(st, e, red) {
                match self.run(st, e + 1) {
                    Flow::Exhausted => {}
                    other => {
                        Self::undo(st, self.edges[e], red);
                        return other;
                    }
                }
            } else {
                self.prunings += 1;
            }
            Self::undo(st, self.edges[e], red);
        }
        Flow::Exhausted
    }
}

fn edge_sequence(n: usize, order: EdgeOrder) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    if order == EdgeOrder::Colex {
        edges.sort_by_key(|&(u, v)| (v, u));
    }
    edges
}

/// Number of partial colorings to hand to parallel workers.
const SPLIT_TARGET: usize = 512;

fn run_dfs(p: &Problem<'_>, cfg: &SearchConfig, shared: &Shared) -> (Option<Vec<u64>>, bool) {
    let edges = edge_sequence(p.order, cfg.edge_order);
    let mut dfs = Dfs {
        p,
        edges: &edges,
        first_vertex: cfg.symmetry == Symmetry::FirstVertex,
        shared,
        nodes: 0,
        prunings: 0,
    };
    let mut frontier = vec![State {
        red: vec![0; p.order],
        blue: vec![0; p.order],
        red_edges: 0,
    }];
    let mut depth = 0;
    while depth < edges.len() && !frontier.is_empty() && frontier.len() < SPLIT_TARGET {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for st in &frontier {
            for red in [true, false] {
                if !dfs.allowed(st, depth, red) {
                    continue;
                }
                let mut child = st.clone();
                dfs.nodes += 1;
                if dfs.apply(&mut child, depth, red) {
                    next.push(child);
                } else {
                    dfs.prunings += 1;
                }
            }
        }
        frontier = next;
        depth += 1;
    }
    shared.charge(dfs.nodes, dfs.prunings);
    if depth == edges.len() {
        return (frontier.into_iter().next().map(|s| s.red), false);
    }
    let edges_ref = &edges;
    let found = frontier.into_par_iter().find_map_any(|mut st| {
        if shared.stop.load(Ordering::Relaxed) {
            return None;
        }
        let mut worker = Dfs {
            p,
            edges: edges_ref,
            first_vertex: cfg.symmetry == Symmetry::FirstVertex,
            shared,
            nodes: 0,
            prunings: 0,
        };
        let flow = worker.run(&mut st, depth);
        shared.charge(worker.nodes % FLUSH, worker.prunings);
        match flow {
            Flow::Found(red) => {
                shared.stop.store(true, Ordering::Relaxed);
                Some(red)
            }
            Flow::Exhausted | Flow::Stopped => None,
        }
    });
    let unknown = found.is_none() && shared.budget_hit.load(Ordering::Relaxed);
    (found, unknown)
}

fn rows_from_code(code: CanonCode, k: usize) -> Vec<u64> {
    let mut rows = vec![0u64; k];
    for j in 1..k {
        for i in 0..j {
            if (code >> canon::pair_index(i, j)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

fn run_extension(
    p: &Problem<'_>,
    shared: &Shared,
    level_sizes: &mut Vec<usize>,
) -> (Option<Vec<u64>>, bool) {
    let mut level: Vec<CanonCode> = vec![0];
    level_sizes.push(1);
    for k in 1..p.order {
        // Extend colorings of K_k by vertex k.
        let full = low_mask(k + 1);
        let next: Vec<CanonCode> = level
            .par_iter()
            .flat_map_iter(|&code| {
                let mut out = Vec::new();
                if shared.stop.load(Ordering::Relaxed) {
                    return out;
                }
                let base = rows_from_code(code, k);
                let base_edges = code.count_ones() as usize;
                let mut red = base.clone();
                red.push(0);
                let mut blue = vec![0u64; k + 1];
                let mut prunings = 0u64;
                for mask in 0..(1u64 << k) {
                    for u in 0..k {
                        let bit = (mask >> u) & 1;
                        red[u] = base[u] | (bit << k);
                        blue[u] = (!base[u] & full & !(1 << u) & !(1 << k)) | ((bit ^ 1) << k);
                    }
                    red[k] = mask;
                    blue[k] = !mask & low_mask(k);
                    let red_edges = base_edges + mask.count_ones() as usize;
                    if p.red_hit(&red, k + 1, red_edges, k)
                        || p.blue_hit(&blue, k + 1, blue[k], p.m.saturating_sub(1))
                    {
                        prunings += 1;
                        continue;
                    }
                    let small: Vec<u32> = red.iter().map(|&r| r as u32).collect();
                    out.push(canon::canon_rows(&small).0);
                }
                shared.charge(1u64 << k, prunings);
                out
            })
            .collect();
        if shared.budget_hit.load(Ordering::Relaxed) {
            return (None, true);
        }
        let mut next = next;
        next.par_sort_unstable();
        next.dedup();
        level_sizes.push(next.len());
        if next.is_empty() {
            return (None, false);
        }
        level = next;
    }
    (Some(rows_from_code(level[0], p.order)), false)
}

/// Decides whether every red/blue coloring of `K_N` has a red `G` or a blue
/// `tK_m`.
pub fn arrows(
    order: usize,
    g: &SimpleGraph,
    t: usize,
    m: usize,
    cfg: &SearchConfig,
) -> Result<ArrowsResult, ArrowsError> {
    cfg.validate()?;
    if order == 0 {
        return Err(ArrowsError::InvalidParams("N must be positive".into()));
    }
    if order > MAX_SEARCH_ORDER {
        return Err(ArrowsError::TooLarge(order));
    }
    if t == 0 || m == 0 {
        return Err(ArrowsError::InvalidParams("t and m must be positive".into()));
    }
    match cfg.threads {
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| ArrowsError::BadConfig(e.to_string()))?;
            pool.install(|| arrows_inner(order, g, t, m, cfg))
        }
        None => arrows_inner(order, g, t, m, cfg),
    }
}

fn arrows_inner(
    order: usize,
    g: &SimpleGraph,
    t: usize,
    m: usize,
    cfg: &SearchConfig,
) -> Result<ArrowsResult, ArrowsError> {
    let start = Instant::now();
    let mut result = ArrowsResult {
        order,
        graph: g.clone(),
        t,
        m,
        verdict: Verdict::Arrows,
        counterexample: None,
        stats: SearchStats::default(),
        config: cfg.clone(),
    };
    // Every coloring has a red edgeless G, or a blue tK_1.
    let trivial = (g.edge_count() == 0 && order >= g.vertex_count()) || (m == 1 && order >= t);
    if trivial {
        result.stats.elapsed_secs = start.elapsed().as_secs_f64();
        return Ok(result);
    }
    let p = Problem {
        order,
        g,
        g_connected: g.is_connected(),
        t,
        m,
    };
    let shared = Shared::new(cfg, start);
    let (found, unknown) = match cfg.symmetry {
        Symmetry::Canonical => run_extension(&p, &shared, &mut result.stats.level_sizes),
        Symmetry::None | Symmetry::FirstVertex => run_dfs(&p, cfg, &shared),
    };
    result.stats.nodes = shared.nodes.load(Ordering::Relaxed);
    result.stats.prunings = shared.prunings.load(Ordering::Relaxed);
    result.stats.elapsed_secs = start.elapsed().as_secs_f64();
    if let Some(rows) = found {
        let red = SimpleGraph::from_edges(
            order,
            (0..order).flat_map(|u| {
                let row = rows[u];
                (u + 1..order).filter(move |&v| row >> v & 1 == 1).map(move |v| (u, v))
            }),
        )
        .expect("rows within N");
        let coloring = TwoColoring::from_red_graph(red);
        if !is_good_coloring(&coloring, g, t, m) {
            return Err(ArrowsError::BadCounterexample);
        }
        result.verdict = Verdict::NotArrows;
        result.counterexample = Some(coloring);
    } else if unknown {
        result.verdict = Verdict::Unknown;
    }
    Ok(result)
}

/// Where the lower witness came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    Burr,
    AllRed,
    AllBlue,
    Search,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RamseyCertificate {
    pub graph: SimpleGraph,
    pub t: usize,
    pub m: usize,
    /// `(n-1)(m-1) + t`.
    pub goodness_value: usize,
    /// The Ramsey number, when the scan closed.
    pub value: Option<usize>,
    /// Largest `N` with a verified good coloring (0 if none was needed).
    pub lower: usize,
    /// Smallest `N` shown to arrow, if reached.
    pub upper: Option<usize>,
    /// Good coloring of `K_lower`.
    pub lower_witness: Option<TwoColoring>,
    pub lower_source: Option<WitnessSource>,
    /// Search statistics of the closing arrows run.
    pub upper_stats: Option<SearchStats>,
    pub config: SearchConfig,
}

fn seed_witnesses(g: &SimpleGraph, t: usize, m: usize) -> Vec<(TwoColoring, WitnessSource)> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if m >= 2 && t <= n {
        if let Ok(c) = colorings::burr_coloring(n, m, t) {
            out.push((c, WitnessSource::Burr));
        }
    }
    if n >= 2 {
        if let Ok(c) = TwoColoring::all_red(n - 1) {
            out.push((c, WitnessSource::AllRed));
        }
    }
    if t * m >= 2 {
        if let Ok(c) = TwoColoring::all_blue(t * m - 1) {
            out.push((c, WitnessSource::AllBlue));
        }
    }
    out.retain(|(c, _)| c.order() <= MAX_SEARCH_ORDER && is_good_coloring(c, g, t, m));
    out
}

/// `r(G, tK_m)`: seeds the best verified lower witness, then searches
/// `N = lower + 1, lower + 2, ...` until `K_N` arrows. A budget or cap hit
/// returns the bracket found so far with `value = None`.
pub fn ramsey_number(
    g: &SimpleGraph,
    t: usize,
    m: usize,
    cfg: &SearchConfig,
) -> Result<RamseyCertificate, ArrowsError> {
    cfg.validate()?;
    if t == 0 || m == 0 {
        return Err(ArrowsError::InvalidParams("t and m must be positive".into()));
    }
    let n = g.vertex_count();
    let mut cert = RamseyCertificate {
        graph: g.clone(),
        t,
        m,
        goodness_value: (n - 1) * (m - 1) + t,
        value: None,
        lower: 0,
        upper: None,
        lower_witness: None,
        lower_source: None,
        upper_stats: None,
        config: cfg.clone(),
    };
    if let Some((c, source)) = seed_witnesses(g, t, m)
        .into_iter()
        .max_by_key(|(c, _)| c.order())
    {
        cert.lower = c.order();
        cert.lower_witness = Some(c);
        cert.lower_source = Some(source);
    }
    let mut order = cert.lower + 1;
    while order <= MAX_SEARCH_ORDER {
        let res = arrows(order, g, t, m, cfg)?;
        match res.verdict {
            Verdict::Arrows => {
                cert.value = Some(order);
                cert.upper = Some(order);
                cert.upper_stats = Some(res.stats);
                return Ok(cert);
            }
            Verdict::NotArrows => {
                cert.lower = order;
                cert.lower_witness = res.counterexample;
                cert.lower_source = Some(WitnessSource::Search);
            }
            Verdict::Unknown => return Ok(cert),
        }
        order += 1;
    }
    Ok(cert)
}
