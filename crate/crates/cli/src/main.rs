use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use edgepowers::classify::{classify, cross_validate};
use edgepowers::exchange::{check, ExchangeReport, Property};
use edgepowers::fixtures::{self, FixtureOutcome};
use edgepowers::graph::generate::unicyclic_up_to;
use edgepowers::toric::{conjecture_scan, scan_instance, InstanceStatus, ScanReport};
use edgepowers::{
    delta_with, detect_veronese, edge_decompose, enumerate_generators_with, search_sep_counterexample, CapVector,
    Execution, Graph, Limits,
};
use serde_json::{json, Value};

/// Bounded powers of edge ideals: top-degree generators, exchange
/// properties, classification and toric fiber checks.
#[derive(Parser)]
#[command(name = "edgepowers", version)]
struct Cli {
    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Cap on search nodes, grid points and fiber multisets.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Instance {
    /// A JSON graph file, inline JSON, or family syntax such as `cycle:8`.
    graph: String,
    /// Comma-separated caps, one per vertex.
    #[arg(long)]
    caps: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print delta, the largest number of edges whose product fits the caps.
    Delta(Instance),
    /// List the generators of top degree.
    Gens(Instance),
    /// Check an exchange property (strong by default). Exit code 2 on failure.
    Check {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, group = "property")]
        exchange: bool,
        #[arg(long, group = "property")]
        symmetric: bool,
        #[arg(long, group = "property")]
        strong: bool,
        /// Print the Veronese-type decomposition, or `none`.
        #[arg(long, group = "property")]
        veronese: bool,
    },
    /// Decide strong exchange for the whole graph from its structure.
    Classify {
        graph: String,
        /// Also compare the verdict with a grid search up to this cap.
        #[arg(long)]
        validate: Option<u32>,
    },
    /// Search caps in {1..cap-max}^n for a strong exchange failure.
    Search {
        graph: String,
        #[arg(long)]
        cap_max: u32,
    },
    /// Re-run registered worked examples. Exit code 2 if any check fails.
    Repro {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Check fiber connectivity for unicyclic graphs over a cap grid.
    ScanConjecture {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        cap_max: u32,
        #[arg(long, default_value_t = 3)]
        m_max: usize,
        /// Scan this graph only instead of every unicyclic graph.
        #[arg(long)]
        graph: Option<String>,
        /// With --graph, scan these caps only.
        #[arg(long, requires = "graph")]
        caps: Option<String>,
    },
}

fn load_graph(arg: &str) -> Result<Graph> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        return Graph::parse(&text).with_context(|| format!("parsing {arg}"));
    }
    Graph::parse(arg).with_context(|| format!("invalid graph `{arg}`"))
}

fn load_instance(inst: &Instance) -> Result<(Graph, CapVector)> {
    let g = load_graph(&inst.graph)?;
    let caps = CapVector::parse(&inst.caps).context("invalid caps")?;
    if caps.len() != g.n() {
        bail!("{} caps given for a graph on {} vertices", caps.len(), g.n());
    }
    Ok((g, caps))
}

fn emit(json: bool, value: &Value, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("JSON output"));
    } else {
        println!("{text}");
    }
}

fn describe_report(r: &ExchangeReport) -> String {
    let Some(w) = &r.witness else {
        return format!("{} exchange: pass", r.property.tag());
    };
    let mut s = format!("{} exchange: fail\n  u = {}\n  v = {}\n  xi = x{}", r.property.tag(), w.u, w.v, w.xi + 1);
    match w.rho {
        Some(rho) => s += &format!(", rho = x{}", rho + 1),
        None => s += ", no rho works",
    }
    if let Some(m) = &w.missing {
        s += &format!("\n  missing = {m}");
    }
    s
}

fn describe_outcome(o: &FixtureOutcome) -> String {
    let passed = o.checks.iter().filter(|c| c.passed).count();
    let mut s =
        format!("{:<20} {:>2}/{:<2} {}", o.name, passed, o.checks.len(), if o.passed() { "PASS" } else { "FAIL" });
    for c in o.checks.iter().filter(|c| !c.passed) {
        s += &format!("\n    {}: {}", c.label, c.detail);
    }
    s
}

fn describe_scan(r: &ScanReport) -> String {
    let mut s = format!(
        "graphs {}  instances {}  clean {}  violations {}  budget exceeded {}  (degrees 2..={})",
        r.graphs,
        r.instances.len(),
        r.clean(),
        r.violations().count(),
        r.budget_exceeded(),
        r.m_max
    );
    for i in r.instances.iter().filter(|i| i.status != InstanceStatus::Clean) {
        s += &format!("\n  {} caps {}: ", i.graph, i.caps);
        match &i.status {
            InstanceStatus::Violation(v) => {
                let one = |t: &[usize]| t.iter().map(|k| format!("z{}", k + 1)).collect::<Vec<_>>().join("*");
                s += &format!("fiber of degree {} not connected: {} vs {}", v.degree, one(&v.a), one(&v.b));
            }
            InstanceStatus::BudgetExceeded(msg) => s += msg,
            InstanceStatus::Clean => {}
        }
    }
    s
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut limits = Limits::default();
    if let Some(b) = cli.budget {
        limits = Limits { nodes: b, grid: b, multisets: b };
    }
    let mut exec = Execution::default();
    if let Some(t) = cli.threads {
        if t == 0 {
            bail!("--threads must be positive");
        }
        if t == 1 {
            exec = Execution::Sequential;
        }
        #[cfg(feature = "parallel")]
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    let ok = ExitCode::SUCCESS;
    let failed = ExitCode::from(2);

    match cli.command {
        Command::Delta(inst) => {
            let (g, caps) = load_instance(&inst)?;
            let d = delta_with(&g, &caps, &limits)?;
            emit(cli.json, &json!({ "delta": d }), d.to_string());
            Ok(ok)
        }
        Command::Gens(inst) => {
            let (g, caps) = load_instance(&inst)?;
            let w = enumerate_generators_with(&g, &caps, &limits)?;
            let mut rows = Vec::new();
            let mut text = format!("delta = {}, {} generators", w.delta(), w.len());
            for (k, m) in w.ordered().iter().enumerate() {
                let edges = edge_decompose(&g, m)?.map(|d| d.to_string()).unwrap_or_default();
                text += &format!("\n  z{:<3} {:<24} {}", k + 1, m, edges);
                rows.push(json!({ "exponents": m, "monomial": m.to_string(), "edges": edges }));
            }
            emit(cli.json, &json!({ "delta": w.delta(), "generators": rows }), text);
            Ok(ok)
        }
        Command::Check { instance, exchange, symmetric, strong: _, veronese } => {
            let (g, caps) = load_instance(&instance)?;
            let w = enumerate_generators_with(&g, &caps, &limits)?;
            if veronese {
                let d = detect_veronese(w.members());
                let text = match &d {
                    None => "none".to_string(),
                    Some(d) => format!(
                        "w = {}, d0 = {}, support = {:?}, a' = {:?}",
                        d.w,
                        d.d0,
                        d.support.iter().map(|v| v + 1).collect::<Vec<_>>(),
                        d.a_prime
                    ),
                };
                emit(cli.json, &json!({ "veronese": d }), text);
                return Ok(ok);
            }
            let property = if exchange {
                Property::Exchange
            } else if symmetric {
                Property::Symmetric
            } else {
                Property::Strong
            };
            let report = check(w.members(), property);
            emit(cli.json, &report.to_json(), describe_report(&report));
            Ok(if report.passed() { ok } else { failed })
        }
        Command::Classify { graph, validate } => {
            let g = load_graph(&graph)?;
            match validate {
                None => {
                    let v = classify(&g)?;
                    emit(cli.json, &v.to_json(), format!("sep = {}  rule = {}  {}", v.sep, v.rule, v.detail));
                    Ok(ok)
                }
                Some(cap_max) => {
                    let r = cross_validate(&g, cap_max, &limits, exec)?;
                    let text = format!(
                        "sep = {}  rule = {}  consistent = {}\n{}",
                        r.verdict.sep,
                        r.verdict.rule,
                        r.consistent,
                        r.to_json()["evidence"]
                    );
                    emit(cli.json, &r.to_json(), text);
                    Ok(if r.consistent { ok } else { failed })
                }
            }
        }
        Command::Search { graph, cap_max } => {
            let g = load_graph(&graph)?;
            let hit = search_sep_counterexample(&g, cap_max, &limits, exec)?;
            let (value, text) = match &hit {
                None => (json!({ "counterexample": null }), "none".to_string()),
                Some(c) => (
                    json!({ "counterexample": { "caps": c.caps.as_slice(), "report": c.report.to_json() } }),
                    format!("caps {}\n{}", c.caps, describe_report(&c.report)),
                ),
            };
            emit(cli.json, &value, text);
            Ok(ok)
        }
        Command::Repro { name, all } => {
            let selected: Vec<&fixtures::Fixture> = if all {
                fixtures::registry().iter().collect()
            } else {
                vec![fixtures::find(name.as_deref().unwrap_or_default())?]
            };
            let outcomes = selected.iter().map(|f| fixtures::run(f, &limits, exec)).collect::<Result<Vec<_>, _>>()?;
            let passed = outcomes.iter().filter(|o| o.passed()).count();
            let mut text: Vec<String> = outcomes.iter().map(describe_outcome).collect();
            text.push(format!("{passed}/{} fixtures pass", outcomes.len()));
            emit(cli.json, &json!({ "passed": passed, "fixtures": outcomes }), text.join("\n"));
            Ok(if passed == outcomes.len() { ok } else { failed })
        }
        Command::ScanConjecture { max_n, cap_max, m_max, graph, caps } => {
            let report = match (graph, caps) {
                (Some(graph), Some(caps)) => {
                    let (g, caps) = load_instance(&Instance { graph, caps })?;
                    let i = scan_instance(&g, &caps, m_max, &limits)?;
                    ScanReport { m_max, graphs: 1, instances: vec![i] }
                }
                (Some(graph), None) => conjecture_scan(&[load_graph(&graph)?], cap_max, m_max, &limits, exec)?,
                _ => conjecture_scan(&unicyclic_up_to(max_n), cap_max, m_max, &limits, exec)?,
            };
            emit(cli.json, &report.to_json(), describe_scan(&report));
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
