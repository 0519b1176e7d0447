//! `ramsey-lab`: trichotomy certificates, arrowing searches, exact small
//! Ramsey numbers, extremal colorings and closed-form bounds, all emitted as
//! verifiable JSON.
//!
//! Exit codes: 0 pass or positive verdict, 1 failure or counterexample,
//! 2 usage or input error, 3 budget exhausted or unknown.

mod certificate;
mod corpus;
mod verify;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ramsey_lab::arrows::{arrows, ramsey_number, EdgeOrder, SearchConfig, Symmetry, Verdict};
use ramsey_lab::bounds::{bounds_table, format_rational, parse_rational};
use ramsey_lab::colorings::{burr_coloring, verify_extremal};
use ramsey_lab::enumerate::{gen_connected, gen_graphs, gen_trees};
use ramsey_lab::graph6::{from_graph6, to_graph6};
use ramsey_lab::trichotomy::{decompose, trichotomy_certificate, TrichotomyCertificate, TrichotomyError};
use ramsey_lab::SimpleGraph;

use certificate::{Certificate, Document, RunManifest};
use verify::Check;

const THREADS_ENV: &str = "RAMSEY_LAB_THREADS";

#[derive(Parser)]
#[command(name = "ramsey-lab", version, about = "Constructive checks for Ramsey goodness of sparse graphs")]
struct Cli {
    /// Emit machine-readable JSON where a subcommand also has a text form.
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GraphArg {
    /// graph6 string, or @FILE to read the first graph of a file.
    #[arg(short = 'g', long = "graph")]
    graph: String,
}

#[derive(Args, Clone, Default)]
struct SearchArgs {
    /// Stop after this many search nodes and report "unknown".
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Stop after this many seconds and report "unknown".
    #[arg(long)]
    budget_secs: Option<f64>,
    #[arg(long, value_enum, default_value_t = SymmetryArg::Canonical)]
    symmetry: SymmetryArg,
    #[arg(long, value_enum, default_value_t = EdgeOrderArg::Lex)]
    edge_order: EdgeOrderArg,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum SymmetryArg {
    None,
    FirstVertex,
    #[default]
    Canonical,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum EdgeOrderArg {
    #[default]
    Lex,
    Colex,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            edge_order: match self.edge_order {
                EdgeOrderArg::Lex => EdgeOrder::Lex,
                EdgeOrderArg::Colex => EdgeOrder::Colex,
            },
            symmetry: match self.symmetry {
                SymmetryArg::None => Symmetry::None,
                SymmetryArg::FirstVertex => Symmetry::FirstVertex,
                SymmetryArg::Canonical => Symmetry::Canonical,
            },
            node_budget: self.budget_nodes,
            time_budget_secs: self.budget_secs,
            threads: None,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Suspended path, end-edge matching or end-edge star certificate.
    Trichotomy {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        ell: usize,
    },
    /// Decide whether every 2-coloring of K_N has a red G or a blue tK_m.
    Arrows {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        m: usize,
        #[arg(long = "N")]
        order: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Exact r(G, tK_m) with both witnesses.
    Ramsey {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// The extremal lower-bound coloring for connected graphs on n vertices.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        t: usize,
    },
    /// Closed-form values and bounds for one graph.
    Bounds {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        t: u64,
        /// Exact rational p/q; enables the main-theorem constant.
        #[arg(long)]
        epsilon: Option<String>,
    },
    /// Re-check a certificate from FILE or stdin.
    Verify {
        /// Certificate file; "-" or absent reads stdin.
        file: Option<PathBuf>,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        budget_secs: Option<f64>,
    },
    /// Run a named suite over generated corpora.
    Corpus {
        #[arg(value_enum)]
        suite: corpus::Suite,
        /// Largest order in the corpus (suite-specific default).
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// List isomorphism classes as graph6.
    Gen {
        #[arg(long)]
        n: usize,
        /// Keep graphs with e - n + 2 <= K (connected mode only).
        #[arg(long)]
        k_max: Option<i64>,
        #[arg(long, value_enum, default_value_t = GenFamily::Connected)]
        family: GenFamily,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Connected,
    All,
    Trees,
}

/// Errors that map to exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(Usage(msg.into()))
}

fn read_graph(arg: &GraphArg) -> anyhow::Result<(SimpleGraph, String)> {
    let text = match arg.graph.strip_prefix('@') {
        Some(path) => {
            let body = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            body.lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with(">>graph6<<"))
                .ok_or_else(|| usage(format!("{path} holds no graph")))?
                .to_string()
        }
        None => arg.graph.trim().to_string(),
    };
    let g = from_graph6(&text).map_err(|e| usage(format!("bad graph6 {text:?}: {e}")))?;
    Ok((g, text))
}

struct Output {
    json: bool,
    out: Option<PathBuf>,
}

impl Output {
    fn write(&self, text: &str) -> anyhow::Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display())),
            None => {
                let mut stdout = std::io::stdout().lock();
                writeln!(stdout, "{text}")?;
                Ok(())
            }
        }
    }

    fn document(&self, certificate: Certificate, mut manifest: RunManifest, start: Instant, summary: String) -> anyhow::Result<()> {
        manifest.wall_time_secs = start.elapsed().as_secs_f64();
        manifest.result_summary = summary.clone();
        eprintln!("{}: {summary}", certificate.kind());
        let doc = Document { certificate, manifest };
        self.write(&serde_json::to_string_pretty(&doc)?)
    }
}

fn cmd_trichotomy(o: &Output, graph: &GraphArg, q: usize, ell: usize) -> anyhow::Result<i32> {
    let start = Instant::now();
    let (g, text) = read_graph(graph)?;
    let certificate = match trichotomy_certificate(&g, q, ell) {
        Ok(c) => c,
        Err(TrichotomyError::LemmaViolated(why)) => {
            eprintln!("trichotomy: certificate failed its own check: {why}");
            return Ok(1);
        }
        Err(e) => return Err(usage(e.to_string())),
    };
    let core_bounds = match certificate {
        TrichotomyCertificate::StarWitness { .. } => decompose(&g, q, ell).map_err(|e| usage(e.to_string()))?.bounds,
        _ => None,
    };
    let summary = match &certificate {
        TrichotomyCertificate::SuspendedPath { path } => format!("suspended path on {} vertices", path.len()),
        TrichotomyCertificate::EndEdgeMatching { edges } => format!("{} disjoint end-edges", edges.len()),
        TrichotomyCertificate::StarWitness { leaves, .. } => format!("end-edge star with {} leaves", leaves.len()),
    };
    let manifest = RunManifest::new("trichotomy")
        .param("graph", &text)
        .param("q", q)
        .param("ell", ell)
        .input("graph", &text);
    o.document(
        Certificate::Trichotomy {
            graph: g,
            q,
            ell,
            certificate,
            core_bounds,
        },
        manifest,
        start,
        summary,
    )?;
    Ok(0)
}

fn search_manifest(name: &str, text: &str, cfg: &SearchConfig) -> RunManifest {
    RunManifest::new(name)
        .param("graph", text)
        .param("config", cfg)
        .input("graph", text)
}

fn cmd_arrows(o: &Output, graph: &GraphArg, t: usize, m: usize, order: usize, search: &SearchArgs) -> anyhow::Result<i32> {
    let start = Instant::now();
    let (g, text) = read_graph(graph)?;
    let cfg = search.config();
    let result = arrows(order, &g, t, m, &cfg).map_err(|e| usage(e.to_string()))?;
    let (code, summary) = match result.verdict {
        Verdict::Arrows => (0, format!("K_{order} -> ({text}, {t}K_{m})")),
        Verdict::NotArrows => (1, format!("good coloring of K_{order} found")),
        Verdict::Unknown => (3, "budget exhausted".to_string()),
    };
    let manifest = search_manifest("arrows", &text, &cfg).param("t", t).param("m", m).param("N", order);
    o.document(Certificate::Arrows { result }, manifest, start, summary)?;
    Ok(code)
}

fn cmd_ramsey(o: &Output, graph: &GraphArg, t: usize, m: usize, search: &SearchArgs) -> anyhow::Result<i32> {
    let start = Instant::now();
    let (g, text) = read_graph(graph)?;
    let cfg = search.config();
    let result = ramsey_number(&g, t, m, &cfg).map_err(|e| usage(e.to_string()))?;
    let (code, summary) = match result.value {
        Some(r) => (0, format!("r = {r} (goodness value {})", result.goodness_value)),
        None => (3, format!("open: r > {}", result.lower)),
    };
    let manifest = search_manifest("ramsey", &text, &cfg).param("t", t).param("m", m);
    o.document(Certificate::Ramsey { result }, manifest, start, summary)?;
    Ok(code)
}

fn cmd_extremal(o: &Output, n: usize, m: usize, t: usize) -> anyhow::Result<i32> {
    let start = Instant::now();
    let coloring = burr_coloring(n, m, t).map_err(|e| usage(e.to_string()))?;
    let report = verify_extremal(&coloring, n, t, m);
    let code = if report.pass { 0 } else { 1 };
    let summary = format!(
        "K_{} coloring {}",
        coloring.order(),
        if report.pass { "passes" } else { "fails" }
    );
    let manifest = RunManifest::new("extremal").param("n", n).param("m", m).param("t", t);
    o.document(
        Certificate::Extremal {
            n,
            m,
            t,
            coloring,
            report,
        },
        manifest,
        start,
        summary,
    )?;
    Ok(code)
}

fn cmd_bounds(o: &Output, graph: &GraphArg, m: u64, t: u64, epsilon: Option<&str>) -> anyhow::Result<i32> {
    let start = Instant::now();
    let (g, text) = read_graph(graph)?;
    let eps = epsilon
        .map(|e| parse_rational(e).map_err(|err| usage(err.to_string())))
        .transpose()?;
    let rows = bounds_table(&g, m, t, eps.as_ref()).map_err(|e| usage(e.to_string()))?;
    let summary = format!("{} rows", rows.len());
    let manifest = RunManifest::new("bounds")
        .param("graph", &text)
        .param("m", m)
        .param("t", t)
        .param("epsilon", epsilon)
        .input("graph", &text);
    o.document(
        Certificate::Bounds {
            graph: g,
            m,
            t,
            epsilon: eps.as_ref().map(format_rational),
            epsilon_note: eps
                .as_ref()
                .map(|_| "epsilon is caller-supplied; the bound holds for any fixed positive value".to_string()),
            rows,
        },
        manifest,
        start,
        summary,
    )?;
    Ok(0)
}

fn cmd_verify(o: &Output, file: Option<&Path>, budget_nodes: Option<u64>, budget_secs: Option<f64>) -> anyhow::Result<i32> {
    let text = match file {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let doc: Document = serde_json::from_str(&text).map_err(|e| usage(format!("not a certificate: {e}")))?;
    let budget = SearchConfig {
        node_budget: budget_nodes,
        time_budget_secs: budget_secs,
        ..SearchConfig::default()
    };
    budget.validate().map_err(|e| usage(e.to_string()))?;
    let outcome = verify::check(&doc.certificate, &budget);
    let kind = doc.certificate.kind();
    if o.json {
        let v = serde_json::json!({
            "kind": kind,
            "status": outcome.label(),
            "detail": outcome.detail(),
            "certificate_digest": certificate::digest(text.trim()),
        });
        o.write(&serde_json::to_string_pretty(&v)?)?;
    } else {
        let label = match outcome {
            Check::Pass(_) => "PASS",
            Check::Fail(_) => "FAIL",
            Check::Unknown(_) => "UNKNOWN",
        };
        o.write(&format!("{label} {kind}: {}", outcome.detail()))?;
    }
    Ok(outcome.exit_code())
}

fn cmd_corpus(o: &Output, suite: corpus::Suite, n: Option<usize>, search: &SearchArgs) -> anyhow::Result<i32> {
    let start = Instant::now();
    let max_order = n.unwrap_or(suite.default_max_order());
    let rows = corpus::run(suite, max_order, &search.config()).map_err(|e| usage(e.to_string()))?;
    let fails = rows.iter().filter(|r| r.status == "fail").count();
    let unknown = rows.iter().filter(|r| r.status == "unknown").count();
    if o.json {
        let v = serde_json::json!({
            "suite": suite.name(),
            "max_order": max_order,
            "rows": rows,
            "failures": fails,
            "unknown": unknown,
            "wall_time_secs": start.elapsed().as_secs_f64(),
        });
        o.write(&serde_json::to_string_pretty(&v)?)?;
    } else {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &rows {
            w.serialize(r)?;
        }
        o.write(String::from_utf8(w.into_inner()?)?.trim_end())?;
    }
    eprintln!(
        "corpus: {} rows, {fails} failures, {unknown} unknown ({:.1}s)",
        rows.len(),
        start.elapsed().as_secs_f64()
    );
    Ok(if fails > 0 {
        1
    } else if unknown > 0 {
        3
    } else {
        0
    })
}

fn cmd_gen(o: &Output, n: usize, k_max: Option<i64>, family: GenFamily) -> anyhow::Result<i32> {
    let graphs = match family {
        GenFamily::Connected => gen_connected(n, k_max),
        GenFamily::All if k_max.is_none() => gen_graphs(n),
        GenFamily::Trees if k_max.is_none() => gen_trees(n),
        _ => return Err(usage("--k-max applies to connected graphs only")),
    }
    .map_err(|e| usage(e.to_string()))?;
    let lines: Vec<String> = graphs.iter().map(to_graph6).collect();
    if o.json {
        o.write(&serde_json::to_string_pretty(&lines)?)?;
    } else {
        o.write(&lines.join("\n"))?;
    }
    eprintln!("gen: {} graphs", lines.len());
    Ok(0)
}

fn init_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let threads: usize = v
            .parse()
            .ok()
            .filter(|&t| t > 0)
            .ok_or_else(|| usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}")))?;
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    init_threads()?;
    let o = Output {
        json: cli.json,
        out: cli.out,
    };
    match &cli.command {
        Command::Trichotomy { graph, q, ell } => cmd_trichotomy(&o, graph, *q, *ell),
        Command::Arrows {
            graph,
            t,
            m,
            order,
            search,
        } => cmd_arrows(&o, graph, *t, *m, *order, search),
        Command::Ramsey { graph, t, m, search } => cmd_ramsey(&o, graph, *t, *m, search),
        Command::Extremal { n, m, t } => cmd_extremal(&o, *n, *m, *t),
        Command::Bounds { graph, m, t, epsilon } => cmd_bounds(&o, graph, *m, *t, epsilon.as_deref()),
        Command::Verify {
            file,
            budget_nodes,
            budget_secs,
        } => cmd_verify(&o, file.as_deref(), *budget_nodes, *budget_secs),
        Command::Corpus { suite, n, search } => cmd_corpus(&o, *suite, *n, search),
        Command::Gen { n, k_max, family } => cmd_gen(&o, *n, *k_max, *family),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        // I/O and serialization failures share the input-error code.
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
