//! Batch runners over generated graph corpora.

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use ramsey_lab::arrows::{ramsey_number, SearchConfig};
use ramsey_lab::bounds::{chvatal_harary_value, triangle_bound};
use ramsey_lab::colorings::burr_coloring;
use ramsey_lab::enumerate::{gen_connected, gen_graphs, gen_trees};
use ramsey_lab::graph6::to_graph6;
use ramsey_lab::trichotomy::{decompose, tree_trichotomy, trichotomy_certificate, TreeCertificate, TrichotomyCertificate};
use ramsey_lab::SimpleGraph;

use crate::certificate::{digest, Certificate};
use crate::verify::{check, Check};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Certificates for every connected graph and every non-degenerate
    /// (q, ell) with q <= n, ell <= 5, each re-verified.
    Trichotomy,
    /// Contraction trace replay for every connected graph.
    Replay,
    /// Extremal colorings for m in {2, 3}, t in {1, 2, 3}.
    Burr,
    /// r(G, 2K_2) against the closed form on 3..=5 vertices.
    TwoEdge,
    /// r(G, K_3) <= 2 ell + 1 for graphs with at most 4 edges.
    Triangle,
    /// Tree certificates for every (a, b, g) with n >= 4abg.
    Trees,
}

impl Suite {
    pub fn default_max_order(self) -> usize {
        match self {
            Self::Trichotomy | Self::Replay => 8,
            Self::Burr => 6,
            Self::TwoEdge => 5,
            Self::Triangle => 8,
            Self::Trees => 12,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Trichotomy => "trichotomy",
            Self::Replay => "replay",
            Self::Burr => "burr",
            Self::TwoEdge => "two-edge",
            Self::Triangle => "triangle",
            Self::Trees => "trees",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub suite: String,
    pub digest: String,
    pub graph: String,
    pub params: String,
    pub status: String,
    pub detail: String,
}

fn row(suite: Suite, g: &SimpleGraph, params: String, outcome: Check) -> Row {
    let graph = to_graph6(g);
    Row {
        suite: suite.name().to_string(),
        digest: digest(&format!("{}|{graph}|{params}", suite.name())),
        graph,
        params,
        status: outcome.label().to_string(),
        detail: outcome.detail().to_string(),
    }
}

fn trichotomy_rows(g: &SimpleGraph) -> Vec<Row> {
    let n = g.vertex_count();
    let k = g.excess_k();
    let mut out = Vec::new();
    for q in 3..=n {
        for ell in 2..=5usize {
            if 2 * ell as i64 + 3 * k - 8 < 1 {
                continue;
            }
            let params = format!("q={q} ell={ell}");
            let outcome = match trichotomy_certificate(g, q, ell) {
                Err(e) => Check::Fail(e.to_string()),
                Ok(certificate) => {
                    let core_bounds = match certificate {
                        TrichotomyCertificate::StarWitness { .. } => decompose(g, q, ell).ok().and_then(|d| d.bounds),
                        _ => None,
                    };
                    check(
                        &Certificate::Trichotomy {
                            graph: g.clone(),
                            q,
                            ell,
                            certificate,
                            core_bounds,
                        },
                        &SearchConfig::default(),
                    )
                }
            };
            out.push(row(Suite::Trichotomy, g, params, outcome));
        }
    }
    out
}

fn replay_row(g: &SimpleGraph) -> Row {
    let outcome = match decompose(g, 3, 2) {
        Err(e) => Check::Fail(e.to_string()),
        Ok(d) => match d.trace {
            None => Check::Pass("cycle, nothing to contract".into()),
            Some(trace) => match trace.expand() {
                Ok(back) if back == d.pruned.graph => Check::Pass(format!("{} steps replayed", trace.steps.len())),
                Ok(_) => Check::Fail("replay differs from the pruned graph".into()),
                Err(e) => Check::Fail(e.to_string()),
            },
        },
    };
    row(Suite::Replay, g, String::new(), outcome)
}

fn burr_rows(g: &SimpleGraph) -> Vec<Row> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for m in [2usize, 3] {
        for t in 1..=3usize.min(n) {
            let params = format!("m={m} t={t}");
            let outcome = match burr_coloring(n, m, t) {
                Err(e) => Check::Fail(e.to_string()),
                Ok(coloring) => {
                    let report = ramsey_lab::colorings::verify_extremal(&coloring, n, t, m);
                    check(
                        &Certificate::Extremal {
                            n,
                            m,
                            t,
                            coloring,
                            report,
                        },
                        &SearchConfig::default(),
                    )
                }
            };
            out.push(row(Suite::Burr, g, params, outcome));
        }
    }
    out
}

fn exact_row(suite: Suite, g: &SimpleGraph, t: usize, m: usize, cfg: &SearchConfig) -> Row {
    let params = format!("t={t} m={m}");
    let outcome = match ramsey_number(g, t, m, cfg) {
        Err(e) => Check::Fail(e.to_string()),
        Ok(cert) => match cert.value {
            None => Check::Unknown(format!("bracket [{}, {:?}]", cert.lower + 1, cert.upper)),
            Some(r) => {
                let expected = match suite {
                    Suite::TwoEdge => chvatal_harary_value(g).map(|v| v as usize == r),
                    _ => triangle_bound(g.edge_count() as u64).map(|b| r as u64 <= b),
                };
                match expected {
                    Ok(true) => Check::Pass(format!("r = {r}")),
                    Ok(false) => Check::Fail(format!("r = {r} disagrees with the closed form")),
                    Err(e) => Check::Fail(e.to_string()),
                }
            }
        },
    };
    row(suite, g, params, outcome)
}

fn tree_rows(t: &SimpleGraph) -> Vec<Row> {
    let n = t.vertex_count();
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            for g in 1..=n {
                if n < 4 * a * b * g {
                    continue;
                }
                let outcome = match tree_trichotomy(t, a, b, g) {
                    Err(e) => Check::Fail(e.to_string()),
                    Ok(cert) => match cert.validate(t, a, b, g) {
                        Ok(()) => Check::Pass(
                            match cert {
                                TreeCertificate::SuspendedPath { .. } => "suspended path",
                                TreeCertificate::EndEdgeMatching { .. } => "end-edge matching",
                                TreeCertificate::EndEdgeStar { .. } => "end-edge star",
                            }
                            .into(),
                        ),
                        Err(e) => Check::Fail(e),
                    },
                };
                out.push(row(Suite::Trees, t, format!("a={a} b={b} g={g}"), outcome));
            }
        }
    }
    out
}

/// Runs a suite over all graphs up to `max_order`. Rows are sorted by
/// digest so the output does not depend on scheduling.
pub fn run(suite: Suite, max_order: usize, cfg: &SearchConfig) -> anyhow::Result<Vec<Row>> {
    let connected = |lo: usize| -> anyhow::Result<Vec<SimpleGraph>> {
        let mut all = Vec::new();
        for n in lo..=max_order {
            all.extend(gen_connected(n, None)?);
        }
        Ok(all)
    };
    let mut rows: Vec<Row> = match suite {
        Suite::Trichotomy => connected(3)?.par_iter().flat_map_iter(trichotomy_rows).collect(),
        Suite::Replay => connected(3)?.par_iter().map(replay_row).collect(),
        Suite::Burr => connected(2)?.par_iter().flat_map_iter(burr_rows).collect(),
        Suite::TwoEdge => connected(3)?
            .par_iter()
            .map(|g| exact_row(suite, g, 2, 2, cfg))
            .collect(),
        Suite::Triangle => {
            let mut graphs = Vec::new();
            for n in 2..=max_order {
                graphs.extend(
                    gen_graphs(n)?
                        .into_iter()
                        .filter(|g| (1..=4).contains(&g.edge_count()) && !g.has_isolated_vertex()),
                );
            }
            graphs.par_iter().map(|g| exact_row(suite, g, 1, 3, cfg)).collect()
        }
        Suite::Trees => {
            let mut trees = Vec::new();
            for n in 1..=max_order {
                trees.extend(gen_trees(n)?);
            }
            trees.par_iter().flat_map_iter(tree_rows).collect()
        }
    };
    rows.sort_by(|a, b| a.digest.cmp(&b.digest));
    Ok(rows)
}
