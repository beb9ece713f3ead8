//! Command-line front end. Exit codes: 0 success, 1 census mismatch,
//! 2 usage or input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use edgeideal::assoc::{self, AssReport, Method};
use edgeideal::census::{self, CensusOptions};
use edgeideal::matching::{maximum_matching, nu};
use edgeideal::saturation::{facets_delta, in_power, in_sat_minus_power, in_saturation};
use edgeideal::{Error, ExponentVector, SignedExponentVector, SimpleGraph, WeightedGraph};

#[derive(Parser)]
#[command(name = "edgeideal", version, about = "Saturations and associated primes of powers of edge ideals")]
struct Cli {
    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArgs {
    /// Edge-list file: a line `n m`, then `m` lines `u v` (1-based).
    file: Option<PathBuf>,
    /// Inline edges, e.g. `1-2,1-3,2-3`.
    #[arg(long, conflicts_with = "file")]
    edges: Option<String>,
    /// Vertex count for --edges (default: largest endpoint).
    #[arg(long, requires = "edges")]
    vertices: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    Oracle,
    Classified,
}

#[derive(Subcommand)]
enum Command {
    /// Matching number of Γ_w with a witness matching.
    Nu {
        #[command(flatten)]
        graph: GraphArgs,
        /// Vertex weights, comma-separated; 0 drops a vertex.
        #[arg(long)]
        weights: String,
    },
    /// Membership of x^a in I^t and in its saturation.
    Sat {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short, long)]
        t: usize,
        #[arg(long)]
        exponents: String,
    },
    /// Associated primes of I^t.
    Ass {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short, long)]
        t: usize,
        #[arg(long, value_enum, default_value = "formula")]
        method: MethodArg,
    },
    /// Associated primes of I^2 from the triangle criterion.
    Ass2 {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Associated primes of I^3 from the five-shape criterion.
    Ass3 {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// The stable set of associated primes.
    AssInfinity {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Upper bound s(Γ) on the index of stability.
    AstabBound {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Whether depth R/I^t > 0, for t = 2 or 3.
    Depth {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short, long)]
        t: usize,
    },
    /// Facets of the degree complex Δ_a of I^t; negative entries allowed.
    Facets {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short, long)]
        t: usize,
        #[arg(long, allow_hyphen_values = true)]
        exponents: String,
    },
    /// Compare the formula and closed forms with the oracle over many graphs.
    Census {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        t: usize,
        /// Check this many seeded random graphs instead of all.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        threads: Option<usize>,
        /// Include elapsed time in the report.
        #[arg(long)]
        timing: bool,
    },
}

fn parse_inline_edges(text: &str, vertices: Option<usize>) -> edgeideal::Result<SimpleGraph> {
    let bad = |part: &str| Error::Parse {
        line: 1,
        message: format!("`{part}` is not an edge of the form u-v"),
    };
    let mut edges = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (u, v) = part.split_once('-').ok_or_else(|| bad(part))?;
        let u: usize = u.trim().parse().map_err(|_| bad(part))?;
        let v: usize = v.trim().parse().map_err(|_| bad(part))?;
        edges.push((u, v));
    }
    let largest = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
    let n = vertices.unwrap_or(largest);
    SimpleGraph::from_one_based(n, &edges)
}

impl GraphArgs {
    fn load(&self) -> edgeideal::Result<SimpleGraph> {
        match (&self.file, &self.edges) {
            (Some(path), _) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::Rejected(format!("{}: {e}", path.display())))?;
                text.parse()
            }
            (None, Some(text)) => parse_inline_edges(text, self.vertices),
            (None, None) => Err(Error::Rejected("give an edge-list file or --edges".into())),
        }
    }
}

fn exponents_for(g: &SimpleGraph, text: &str) -> edgeideal::Result<ExponentVector> {
    let a: ExponentVector = text.parse()?;
    check_len(g, a.len())?;
    Ok(a)
}

fn check_len(g: &SimpleGraph, len: usize) -> edgeideal::Result<()> {
    if len != g.n() {
        return Err(Error::Parse {
            line: 1,
            message: format!("expected {} comma-separated entries, got {len}", g.n()),
        });
    }
    Ok(())
}

fn positive_t(t: usize) -> edgeideal::Result<usize> {
    if t == 0 {
        return Err(Error::Rejected("t must be at least 1".into()));
    }
    Ok(t)
}

/// What a subcommand produced: plain text, JSON, and whether it passed.
struct Output {
    text: String,
    json: serde_json::Value,
    ok: bool,
}

impl Output {
    fn new(text: String, json: impl Serialize) -> Self {
        Output {
            text,
            json: serde_json::to_value(json).expect("reports serialize"),
            ok: true,
        }
    }
}

fn ass_output(g: &SimpleGraph, report: AssReport) -> Output {
    Output::new(report.render(g), &report)
}

fn run(command: Command) -> edgeideal::Result<Output> {
    Ok(match command {
        Command::Nu { graph, weights } => {
            let g = graph.load()?;
            let w = exponents_for(&g, &weights)?;
            let h = WeightedGraph::induced(&g, w.as_slice());
            let m = maximum_matching(&h);
            let labels = h.labels();
            let edges: Vec<[usize; 2]> = m
                .edges()
                .iter()
                .map(|&(u, v)| [labels[u] + 1, labels[v] + 1])
                .collect();
            let value = nu(&h);
            let shown: Vec<String> = edges.iter().map(|[u, v]| format!("{{{u},{v}}}")).collect();
            let text = format!("nu = {value}\nmatching: {}\n", shown.join(" "));
            let vertex_weights: Vec<_> = labels
                .iter()
                .zip(h.weights())
                .map(|(&v, &wt)| json!({"vertex": v + 1, "weight": wt}))
                .collect();
            let base: Vec<[usize; 2]> = h
                .base()
                .edges()
                .map(|(u, v)| [labels[u] + 1, labels[v] + 1])
                .collect();
            Output::new(
                text,
                json!({
                    "nu": value,
                    "matching": edges,
                    "graph": {"weights": vertex_weights, "edges": base},
                }),
            )
        }
        Command::Sat { graph, t, exponents } => {
            let g = graph.load()?;
            let t = positive_t(t)?;
            let a = exponents_for(&g, &exponents)?;
            let (p, s, d) = (in_power(&g, &a, t), in_saturation(&g, &a, t), in_sat_minus_power(&g, &a, t));
            Output::new(
                format!("x^a in I^{t}: {p}\nx^a in sat(I^{t}): {s}\nx^a in sat(I^{t}) \\ I^{t}: {d}\n"),
                json!({"t": t, "exponents": a, "in_power": p, "in_saturation": s, "in_diff": d}),
            )
        }
        Command::Ass { graph, t, method } => {
            let g = graph.load()?;
            let method = match method {
                MethodArg::Formula => Method::Formula,
                MethodArg::Oracle => Method::Oracle,
                MethodArg::Classified => Method::Classified,
            };
            ass_output(&g, assoc::ass_report(&g, t, method)?)
        }
        Command::Ass2 { graph } => {
            let g = graph.load()?;
            ass_output(&g, assoc::ass_report(&g, 2, Method::Classified)?)
        }
        Command::Ass3 { graph } => {
            let g = graph.load()?;
            ass_output(&g, assoc::ass_report(&g, 3, Method::Classified)?)
        }
        Command::AssInfinity { graph } => {
            let g = graph.load()?;
            let primes = assoc::ass_infinity(&g);
            let mut text = format!("Ass^inf: {} primes\n", primes.len());
            for p in &primes {
                let why = match &p.evidence {
                    assoc::Evidence::StableSet { vertices } => format!("U = {vertices}"),
                    _ => "minimal cover".to_string(),
                };
                text.push_str(&format!("  {:<16} {}\n", assoc::prime_label(&g, p.vertices()), why));
            }
            Output::new(text, json!({"primes": primes}))
        }
        Command::AstabBound { graph } => {
            let g = graph.load()?;
            let witness = assoc::s_gamma_witness(&g);
            let s = witness.map_or(1, |(s, _)| s);
            let text = match witness {
                Some((_, u)) => format!("s(G) = {s}, attained at U = {u}\n"),
                None => format!("s(G) = {s} (bipartite)\n"),
            };
            Output::new(text, json!({"s_gamma": s, "u": witness.map(|(_, u)| u)}))
        }
        Command::Depth { graph, t } => {
            let g = graph.load()?;
            let positive = assoc::depth_positive(&g, t)?;
            let text = if positive {
                format!("depth R/I^{t} > 0\n")
            } else {
                format!("depth R/I^{t} = 0\n")
            };
            Output::new(text, json!({"t": t, "depth_positive": positive}))
        }
        Command::Facets { graph, t, exponents } => {
            let g = graph.load()?;
            let t = positive_t(t)?;
            let a: SignedExponentVector = exponents.parse()?;
            check_len(&g, a.len())?;
            let facets = facets_delta(&g, &a, t);
            let shown: Vec<String> = facets.iter().map(|f| f.to_string()).collect();
            Output::new(
                format!("{} facets: {}\n", facets.len(), shown.join(" ")),
                json!({"t": t, "exponents": a.as_slice(), "facets": facets}),
            )
        }
        Command::Census { n, t, sample, seed, threads, timing } => {
            let report = census::run_census(&CensusOptions {
                n,
                t,
                sample,
                seed,
                threads,
                timing,
            })?;
            let mut text = format!(
                "census n = {n}, t = {t}: {} graphs, {} mismatches\n",
                report.graphs_checked,
                report.mismatches.len()
            );
            for m in &report.mismatches {
                text.push_str(&format!(
                    "  {:?} engine on\n{}  expected {:?}\n  got      {:?}\n",
                    m.engine, m.graph, m.expected, m.got
                ));
            }
            if let Some(d) = report.elapsed {
                text.push_str(&format!("elapsed {} ms\n", d.as_millis()));
            }
            let ok = report.passed();
            Output {
                ok,
                ..Output::new(text, &report)
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
