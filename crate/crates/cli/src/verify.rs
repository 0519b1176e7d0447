//! Re-checks emitted certificates. Structural claims are checked here on
//! plain adjacency matrices without calling the library searches; an
//! arrowing claim is re-run with the other search engine.

use ramsey_lab::arrows::{arrows, ArrowsResult, SearchConfig, Symmetry, Verdict};
use ramsey_lab::bounds::BoundReport;
use ramsey_lab::colorings::TwoColoring;
use ramsey_lab::trichotomy::TrichotomyCertificate;
use ramsey_lab::SimpleGraph;

use crate::certificate::Certificate;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Pass(String),
    Fail(String),
    Unknown(String),
}

impl Check {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Pass(_) => 0,
            Self::Fail(_) => 1,
            Self::Unknown(_) => 3,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Self::Pass(_) => "pass",
            Self::Fail(_) => "fail",
            Self::Unknown(_) => "unknown",
        }
    }

    pub fn detail(&self) -> &str {
        match self {
            Self::Pass(s) | Self::Fail(s) | Self::Unknown(s) => s,
        }
    }
}

type Adj = Vec<Vec<bool>>;

fn adjacency(g: &SimpleGraph) -> Adj {
    let n = g.vertex_count();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

fn coloring_adjacency(c: &TwoColoring) -> (Adj, Adj) {
    let red = adjacency(c.red_graph());
    let n = red.len();
    let blue = (0..n)
        .map(|u| (0..n).map(|v| u != v && !red[u][v]).collect())
        .collect();
    (red, blue)
}

fn degrees(a: &Adj) -> Vec<usize> {
    a.iter().map(|r| r.iter().filter(|&&x| x).count()).collect()
}

fn component_sizes(a: &Adj) -> Vec<usize> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for v in 0..n {
                if a[u][v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

/// Whether `pattern` maps injectively into `host` preserving edges.
fn contains(host: &Adj, pattern: &Adj) -> bool {
    fn rec(host: &Adj, pattern: &Adj, img: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = img.len();
        if i == pattern.len() {
            return true;
        }
        for v in 0..host.len() {
            if used[v] || !(0..i).all(|j| !pattern[i][j] || host[img[j]][v]) {
                continue;
            }
            used[v] = true;
            img.push(v);
            if rec(host, pattern, img, used) {
                return true;
            }
            img.pop();
            used[v] = false;
        }
        false
    }
    pattern.len() <= host.len() && rec(host, pattern, &mut Vec::new(), &mut vec![false; host.len()])
}

/// Whether `host` has `t` vertex-disjoint cliques of order `m`.
fn disjoint_cliques(host: &Adj, t: usize, m: usize) -> bool {
    fn extend(host: &Adj, free: &mut [bool], clique: &mut Vec<usize>, t: usize, m: usize) -> bool {
        if clique.len() == m {
            for &v in clique.iter() {
                free[v] = false;
            }
            let ok = place(host, free, t - 1, m);
            for &v in clique.iter() {
                free[v] = true;
            }
            return ok;
        }
        let last = *clique.last().expect("clique starts nonempty");
        for v in last + 1..host.len() {
            if free[v] && clique.iter().all(|&u| host[u][v]) {
                clique.push(v);
                if extend(host, free, clique, t, m) {
                    return true;
                }
                clique.pop();
            }
        }
        false
    }
    fn place(host: &Adj, free: &mut [bool], t: usize, m: usize) -> bool {
        if t == 0 {
            return true;
        }
        if free.iter().filter(|&&f| f).count() < t * m {
            return false;
        }
        // The smallest free vertex either starts a clique or is skipped.
        let s = free.iter().position(|&f| f).expect("enough free vertices");
        let mut clique = vec![s];
        if extend(host, free, &mut clique, t, m) {
            return true;
        }
        free[s] = false;
        let ok = place(host, free, t, m);
        free[s] = true;
        ok
    }
    m == 0 || place(host, &mut vec![true; host.len()], t, m)
}

fn good_coloring(c: &TwoColoring, g: &SimpleGraph, t: usize, m: usize) -> Result<(), String> {
    let (red, blue) = coloring_adjacency(c);
    if contains(&red, &adjacency(g)) {
        return Err("coloring contains a red copy of the graph".into());
    }
    if disjoint_cliques(&blue, t, m) {
        return Err(format!("coloring contains a blue {t}K_{m}"));
    }
    Ok(())
}

fn distinct(vs: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    vs.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

/// Longest path whose internal vertices have degree 2, by walking from
/// every vertex along every neighbor.
fn longest_suspended_path(a: &Adj, deg: &[usize]) -> usize {
    let n = a.len();
    let mut best = usize::from(n > 0);
    for s in 0..n {
        for first in (0..n).filter(|&v| a[s][v]) {
            let mut on_path = vec![false; n];
            on_path[s] = true;
            on_path[first] = true;
            let (mut prev, mut cur, mut len) = (s, first, 2);
            while deg[cur] == 2 {
                let next = (0..n).find(|&v| a[cur][v] && v != prev).expect("degree two");
                if on_path[next] {
                    break;
                }
                on_path[next] = true;
                prev = cur;
                cur = next;
                len += 1;
            }
            best = best.max(len);
        }
    }
    best
}

fn check_trichotomy(g: &SimpleGraph, q: usize, ell: usize, cert: &TrichotomyCertificate) -> Check {
    let a = adjacency(g);
    let n = a.len();
    let deg = degrees(&a);
    if n < 3 || component_sizes(&a).len() != 1 {
        return Check::Fail("graph must be connected with at least 3 vertices".into());
    }
    let edges = deg.iter().sum::<usize>() / 2;
    let k = edges as i64 - n as i64 + 2;
    let budget = 2 * ell as i64 + 3 * k - 8;
    if budget < 1 {
        return Check::Fail(format!("degenerate parameters: 2 ell + 3k - 8 = {budget}"));
    }
    match cert {
        TrichotomyCertificate::SuspendedPath { path } => {
            if path.len() < q || !distinct(path, n) {
                return Check::Fail("path too short or repeats vertices".into());
            }
            if path.windows(2).any(|w| !a[w[0]][w[1]]) {
                return Check::Fail("path uses a non-edge".into());
            }
            if path[1..path.len() - 1].iter().any(|&v| deg[v] != 2) {
                return Check::Fail("internal vertex without degree 2".into());
            }
            Check::Pass(format!("suspended path on {} vertices", path.len()))
        }
        TrichotomyCertificate::EndEdgeMatching { edges } => {
            let flat: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            if edges.len() < ell || !distinct(&flat, n) {
                return Check::Fail("matching too small or not disjoint".into());
            }
            if edges.iter().any(|&(u, v)| !a[u][v] || (deg[u] != 1 && deg[v] != 1)) {
                return Check::Fail("matching uses a non-end-edge".into());
            }
            Check::Pass(format!("{} disjoint end-edges", edges.len()))
        }
        TrichotomyCertificate::StarWitness {
            center,
            leaves,
            deg2_count,
            alpha,
            star_bound,
        } => {
            let want_alpha = (q as i64 - 2) * budget + 1;
            let want_deg2 = deg.iter().filter(|&&d| d >= 2).count();
            let want_bound = (n as i64 - want_alpha + ell as i64 - 2).div_euclid(ell as i64 - 1);
            if (*alpha, *deg2_count, *star_bound) != (want_alpha, want_deg2, want_bound) {
                return Check::Fail(format!(
                    "recorded (alpha, deg2, bound) = ({alpha}, {deg2_count}, {star_bound}), recomputed ({want_alpha}, {want_deg2}, {want_bound})"
                ));
            }
            if want_deg2 as i64 > want_alpha {
                return Check::Fail(format!("{want_deg2} vertices of degree >= 2 exceed alpha = {want_alpha}"));
            }
            if (leaves.len() as i64) < want_bound || !distinct(leaves, n) {
                return Check::Fail(format!("{} leaves, need {want_bound}", leaves.len()));
            }
            if !leaves.is_empty() {
                let Some(c) = *center else {
                    return Check::Fail("leaves without a center".into());
                };
                if c >= n || leaves.iter().any(|&l| deg[l] != 1 || !a[c][l]) {
                    return Check::Fail("star uses a non-leaf or a non-edge".into());
                }
            }
            // The star outcome only applies when the other two fail.
            let longest = longest_suspended_path(&a, &deg);
            let mut leaf_nbrs: Vec<usize> = (0..n)
                .filter(|&v| deg[v] == 1)
                .map(|v| (0..n).find(|&u| a[v][u]).expect("leaf has a neighbor"))
                .collect();
            leaf_nbrs.sort_unstable();
            leaf_nbrs.dedup();
            if longest >= q || leaf_nbrs.len() >= ell {
                return Check::Fail("a suspended path or end-edge matching outcome was available".into());
            }
            Check::Pass(format!("end-edge star with {} leaves", leaves.len()))
        }
    }
}

fn alternate(cfg: &SearchConfig, budget: &SearchConfig) -> SearchConfig {
    let mut alt = if cfg.symmetry == Symmetry::Canonical {
        SearchConfig {
            edge_order: ramsey_lab::arrows::EdgeOrder::Colex,
            symmetry: Symmetry::FirstVertex,
            ..SearchConfig::default()
        }
    } else {
        SearchConfig::default()
    };
    alt.node_budget = budget.node_budget;
    alt.time_budget_secs = budget.time_budget_secs;
    alt.threads = budget.threads;
    alt
}

fn rerun_arrows(order: usize, g: &SimpleGraph, t: usize, m: usize, cfg: &SearchConfig, budget: &SearchConfig) -> Check {
    let alt = alternate(cfg, budget);
    match arrows(order, g, t, m, &alt) {
        Err(e) => Check::Fail(format!("re-run failed: {e}")),
        Ok(res) => match res.verdict {
            Verdict::Arrows => Check::Pass(format!("K_{order} arrows, confirmed by the {:?} engine", alt.symmetry)),
            Verdict::NotArrows => Check::Fail(format!("the {:?} engine found a good coloring of K_{order}", alt.symmetry)),
            Verdict::Unknown => Check::Unknown("re-run exhausted its budget".into()),
        },
    }
}

fn check_arrows(r: &ArrowsResult, budget: &SearchConfig) -> Check {
    match (r.verdict, &r.counterexample) {
        (Verdict::NotArrows, Some(c)) => {
            if c.order() != r.order {
                return Check::Fail(format!("counterexample has {} vertices, not {}", c.order(), r.order));
            }
            match good_coloring(c, &r.graph, r.t, r.m) {
                Ok(()) => Check::Pass(format!("good coloring of K_{} re-verified", r.order)),
                Err(e) => Check::Fail(e),
            }
        }
        (Verdict::NotArrows, None) => Check::Fail("negative verdict without a counterexample".into()),
        (Verdict::Arrows, _) => rerun_arrows(r.order, &r.graph, r.t, r.m, &r.config, budget),
        (Verdict::Unknown, _) => Check::Unknown("certificate records an unknown verdict".into()),
    }
}

fn check_ramsey(r: &ramsey_lab::arrows::RamseyCertificate, budget: &SearchConfig) -> Check {
    let n = r.graph.vertex_count();
    if r.goodness_value != (n - 1) * (r.m - 1) + r.t {
        return Check::Fail("goodness value does not match (n-1)(m-1)+t".into());
    }
    match &r.lower_witness {
        Some(c) => {
            if c.order() != r.lower {
                return Check::Fail("lower witness has the wrong order".into());
            }
            if let Err(e) = good_coloring(c, &r.graph, r.t, r.m) {
                return Check::Fail(format!("lower witness: {e}"));
            }
        }
        None if r.lower > 0 => return Check::Fail("missing lower witness".into()),
        None => {}
    }
    let Some(value) = r.value else {
        return Check::Unknown(format!("open bracket: lower {} verified, upper {:?}", r.lower, r.upper));
    };
    if r.upper != Some(value) || r.lower + 1 != value {
        return Check::Fail("value does not close the bracket".into());
    }
    match rerun_arrows(value, &r.graph, r.t, r.m, &r.config, budget) {
        Check::Pass(_) => Check::Pass(format!("r = {value}: witness at {} and arrowing at {value} re-verified", r.lower)),
        other => other,
    }
}

fn check_extremal(n: usize, m: usize, t: usize, c: &TwoColoring) -> Check {
    let want = (n - 1) * (m - 1) + t - 1;
    if c.order() != want {
        return Check::Fail(format!("coloring has {} vertices, expected {want}", c.order()));
    }
    let (red, blue) = coloring_adjacency(c);
    let largest = component_sizes(&red).into_iter().max().unwrap_or(0);
    if largest >= n {
        return Check::Fail(format!("red component of order {largest} >= {n}"));
    }
    if disjoint_cliques(&blue, t, m) {
        return Check::Fail(format!("blue {t}K_{m} present"));
    }
    Check::Pass(format!("K_{want}: red components below {n}, no blue {t}K_{m}"))
}

fn check_bounds(rows: &[BoundReport]) -> Check {
    for row in rows {
        match row.recompute() {
            Ok(v) if v == row.value => {}
            Ok(v) => return Check::Fail(format!("{}: recorded {}, recomputed {v}", row.name, row.value)),
            Err(e) => return Check::Fail(format!("{}: {e}", row.name)),
        }
    }
    Check::Pass(format!("{} rows recomputed", rows.len()))
}

pub fn check(cert: &Certificate, budget: &SearchConfig) -> Check {
    match cert {
        Certificate::Trichotomy {
            graph,
            q,
            ell,
            certificate,
            core_bounds,
        } => {
            // The core inequalities are only claimed in the star case.
            let star = matches!(certificate, TrichotomyCertificate::StarWitness { .. });
            if let Some(b) = core_bounds.as_ref().filter(|_| star) {
                if let Some(bad) = b.checks.iter().find(|c| !c.holds) {
                    return Check::Fail(format!("core bound {} fails", bad.name));
                }
            }
            check_trichotomy(graph, *q, *ell, certificate)
        }
        Certificate::Arrows { result } => check_arrows(result, budget),
        Certificate::Ramsey { result } => check_ramsey(result, budget),
        Certificate::Extremal {
            n, m, t, coloring, report,
        } => {
            let c = check_extremal(*n, *m, *t, coloring);
            if matches!(c, Check::Pass(_)) && !report.pass {
                return Check::Fail("report records a failure the coloring does not have".into());
            }
            c
        }
        Certificate::Bounds { rows, .. } => check_bounds(rows),
    }
}
