//! `nbc`: generate graphs, construct, verify and search for balanced
//! colorings.
//!
//! Exit codes: 0 success or yes, 1 a definite no, 2 usage, I/O, format or
//! precondition error, 3 search budget exhausted.

mod failure;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use nbc_core::constructors::{self as cons, AnchorSet, ConstructError, ConstructionResult, Operand};
use nbc_core::io::{parse_coloring, parse_graph, write_coloring, write_graph};
use nbc_core::search::{enumerate, SearchConfig, SearchStatus, DEFAULT_NODE_BUDGET};
use nbc_core::{check_necessary, verify, Coloring, FamilySpec, Graph, Palette, VerificationReport};

use failure::{Failure, ERROR, NO, UNKNOWN};

#[derive(Parser)]
#[command(name = "nbc", version, about = "Neighborhood balanced colorings with an odd prime number of colors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named graph family as a graph file.
    Gen {
        /// cycle:N | complete:N | multipartite:N1,N2,.. | circulant:N:A1,A2,..
        spec: String,
        /// Output graph file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the degree, order and size conditions a balanced coloring needs.
    Check {
        graph: PathBuf,
        #[arg(short, default_value_t = 3)]
        q: usize,
    },
    /// Decide whether a coloring is balanced and report class statistics.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Color a named family by its closed-form construction.
    Construct {
        spec: String,
        #[arg(short, default_value_t = 3)]
        q: usize,
        /// Output coloring file.
        #[arg(short, long)]
        output: PathBuf,
        /// Also write the generated graph here.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Build a product or join together with its balanced coloring.
    Product {
        #[arg(long, value_enum)]
        kind: Kind,
        g: PathBuf,
        h: PathBuf,
        /// Coloring of G (all kinds except lex-equal).
        #[arg(long)]
        cg: Option<PathBuf>,
        /// Coloring of H (all kinds except direct).
        #[arg(long)]
        ch: Option<PathBuf>,
        #[arg(long)]
        graph_out: PathBuf,
        #[arg(long)]
        coloring_out: PathBuf,
    },
    /// Search exhaustively for balanced colorings.
    Search {
        graph: PathBuf,
        #[arg(short, default_value_t = 3)]
        q: usize,
        /// Stop after this many colorings.
        #[arg(long, default_value_t = 1)]
        limit: usize,
        /// Collect every coloring (one per color-permutation class unless
        /// symmetry breaking is off).
        #[arg(long, conflicts_with = "limit")]
        all: bool,
        /// Search node budget.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        nodes: u64,
        /// Wall-clock budget in seconds. Makes the outcome machine dependent.
        #[arg(long)]
        timeout: Option<f64>,
        /// Report colorings that differ only by a color permutation separately.
        #[arg(long)]
        no_symmetry_breaking: bool,
        /// Coloring output. With more than one coloring, files are numbered
        /// `<stem>.1.<ext>`, `<stem>.2.<ext>`, ...
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Embed a graph as an induced subgraph of a balanced one.
    Blowup {
        graph: PathBuf,
        #[arg(short, default_value_t = 3)]
        q: usize,
        #[arg(long)]
        graph_out: PathBuf,
        #[arg(long)]
        coloring_out: PathBuf,
    },
    /// Add 2q-1 vertices to a balanced coloring, keeping it balanced.
    Extend {
        graph: PathBuf,
        coloring: PathBuf,
        /// `v1,..,vq:w1,..,wq`, where vi and wi have color i-1. Defaults to
        /// the two lowest-indexed vertices of each color.
        #[arg(long)]
        anchors: Option<String>,
        /// Repeat the addition; later steps pick the default anchors.
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[arg(long)]
        graph_out: PathBuf,
        #[arg(long)]
        coloring_out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cartesian,
    Lex,
    LexEqual,
    Direct,
    Strong,
    Join,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("{failure}");
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Gen { spec, output } => cmd_gen(&spec, output.as_deref()),
        Command::Check { graph, q } => cmd_check(&graph, q),
        Command::Verify { graph, coloring, json } => cmd_verify(&graph, &coloring, json),
        Command::Construct { spec, q, output, graph_out } => {
            cmd_construct(&spec, q, &output, graph_out.as_deref())
        }
        Command::Product { kind, g, h, cg, ch, graph_out, coloring_out } => {
            let result = cmd_product(kind, &g, &h, cg.as_deref(), ch.as_deref())?;
            emit(&result, &graph_out, &coloring_out)
        }
        Command::Search { graph, q, limit, all, nodes, timeout, no_symmetry_breaking, output } => {
            let mut config = SearchConfig::new(palette(q)?)
                .with_node_budget(nodes)
                .with_enumerate_limit(if all { usize::MAX } else { limit })
                .with_symmetry_breaking(!no_symmetry_breaking);
            if let Some(secs) = timeout {
                let limit = Duration::try_from_secs_f64(secs)
                    .map_err(|e| Failure::new(ERROR, "Usage", format!("--timeout {secs}: {e}")))?;
                config = config.with_time_budget(limit);
            }
            cmd_search(&graph, &config, output.as_deref())
        }
        Command::Blowup { graph, q, graph_out, coloring_out } => {
            let result = cons::blow_up(&read_graph(&graph)?, palette(q)?)?;
            emit(&result, &graph_out, &coloring_out)
        }
        Command::Extend { graph, coloring, anchors, steps, graph_out, coloring_out } => {
            let result = cmd_extend(&graph, &coloring, anchors.as_deref(), steps)?;
            emit(&result, &graph_out, &coloring_out)
        }
    }
}

fn palette(q: usize) -> Result<Palette, Failure> {
    Ok(Palette::new(q)?)
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::io(path, e))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::format(path, e))
}

fn read_coloring(path: &Path) -> Result<Coloring, Failure> {
    parse_coloring(&read(path)?).map_err(|e| Failure::format(path, e))
}

/// Refuses to emit a coloring that does not verify.
fn self_verify(g: &Graph, c: &Coloring) -> Result<(), Failure> {
    let report = verify(g, c)?;
    if report.balanced && report.identities_hold() {
        Ok(())
    } else {
        Err(Failure::new(ERROR, "SelfCheck", "constructed coloring failed verification"))
    }
}

fn emit(result: &ConstructionResult, graph_out: &Path, coloring_out: &Path) -> Result<u8, Failure> {
    let g = result.graph.as_ref().expect("constructions that build a graph return it");
    self_verify(g, &result.coloring)?;
    write(graph_out, &write_graph(g))?;
    write(coloring_out, &write_coloring(&result.coloring))?;
    println!("n {} m {} class_sizes {}", g.order(), g.edge_count(), join(&result.coloring.class_sizes()));
    Ok(0)
}

fn join(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn parse_spec(spec: &str) -> Result<FamilySpec, Failure> {
    Ok(spec.parse::<FamilySpec>()?)
}

fn cmd_gen(spec: &str, output: Option<&Path>) -> Result<u8, Failure> {
    let g = parse_spec(spec)?.generate()?;
    let text = write_graph(&g);
    match output {
        Some(path) => {
            write(path, &text)?;
            println!("n {} m {}", g.order(), g.edge_count());
        }
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_check(path: &Path, q: usize) -> Result<u8, Failure> {
    let report = check_necessary(&read_graph(path)?, palette(q)?);
    let show = |b: Option<bool>| match b {
        Some(true) => "pass",
        Some(false) => "fail",
        None => "n/a (not regular of positive degree)",
    };
    println!("q {q}");
    println!("degrees divisible: {}", show(Some(report.degrees_divisible)));
    println!("order divisible: {}", show(report.order_divisible));
    println!("size divisible: {}", show(report.size_divisible));
    match report.first_failure {
        Some(reason) => {
            println!("result: fail: {reason}");
            Ok(NO)
        }
        None => {
            println!("result: pass");
            Ok(0)
        }
    }
}

fn cmd_verify(graph: &Path, coloring: &Path, json: bool) -> Result<u8, Failure> {
    let report = verify(&read_graph(graph)?, &read_coloring(coloring)?)?;
    if json {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        println!("{text}");
    } else {
        print!("{}", summary(&report));
    }
    Ok(if report.balanced { 0 } else { NO })
}

fn summary(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "balanced: {}", if r.balanced { "yes" } else { "no" });
    let _ = writeln!(out, "q {} n {} m {}", r.q, r.n, r.m);
    let _ = writeln!(out, "class sizes: {}", join(&r.sigma_vertex));
    let _ = writeln!(out, "edges by color pair:");
    for row in &r.sigma_edge {
        let _ = writeln!(out, "  {}", join(row));
    }
    for check in &r.identity_checks {
        let verdict = if check.pass { "pass" } else { "fail" };
        let _ = writeln!(out, "{verdict}: {} (expected {}, actual {})", check.name, check.expected, check.actual);
    }
    const SHOWN: usize = 10;
    for v in r.violations.iter().take(SHOWN) {
        let _ = writeln!(out, "violation: vertex {} counts {}", v.vertex, join(&v.counts));
    }
    if r.violations.len() > SHOWN {
        let _ = writeln!(out, "... {} violations in total", r.violations.len());
    }
    out
}

fn cmd_construct(spec: &str, q: usize, output: &Path, graph_out: Option<&Path>) -> Result<u8, Failure> {
    let p = palette(q)?;
    let result = match parse_spec(spec)? {
        FamilySpec::Multipartite(parts) => cons::color_complete_multipartite(&parts, p)?,
        FamilySpec::Circulant { n, connections } => cons::color_circulant(n, &connections, p)?,
        FamilySpec::Complete(n) => cons::color_complete(n, p)?,
        FamilySpec::Cycle(n) => {
            return Err(Failure::new(NO, "NotAdmissible", format!("C_{n} has degree 2, not divisible by {q}")))
        }
    };
    let g = result.graph.as_ref().expect("family constructions build their graph");
    self_verify(g, &result.coloring)?;
    if let Some(path) = graph_out {
        write(path, &write_graph(g))?;
    }
    write(output, &write_coloring(&result.coloring))?;
    println!("n {} m {} class_sizes {}", g.order(), g.edge_count(), join(&result.coloring.class_sizes()));
    Ok(0)
}

fn cmd_product(
    kind: Kind,
    g_path: &Path,
    h_path: &Path,
    cg_path: Option<&Path>,
    ch_path: Option<&Path>,
) -> Result<ConstructionResult, Failure> {
    let g = read_graph(g_path)?;
    let h = read_graph(h_path)?;
    let need = |path: Option<&Path>, flag: &str| -> Result<Coloring, Failure> {
        let path = path.ok_or_else(|| Failure::new(ERROR, "Usage", format!("this kind needs {flag}")))?;
        read_coloring(path)
    };
    let result = match kind {
        Kind::LexEqual => cons::color_lex_product_equal_counts(&g, &h, &need(ch_path, "--ch")?)?,
        Kind::Direct => cons::color_direct_product(&g, &need(cg_path, "--cg")?, &h)?,
        _ => {
            let (cg, ch) = (need(cg_path, "--cg")?, need(ch_path, "--ch")?);
            match kind {
                Kind::Cartesian => cons::color_cartesian_product(&g, &cg, &h, &ch)?,
                Kind::Lex => cons::color_lex_product(&g, &cg, &h, &ch)?,
                Kind::Strong => cons::color_strong_product(&g, &cg, &h, &ch)?,
                Kind::Join => cons::color_join(&g, &cg, &h, &ch)?,
                Kind::LexEqual | Kind::Direct => unreachable!(),
            }
        }
    };
    Ok(result)
}

fn numbered(path: &Path, i: usize) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}.{i}.{}", ext.to_string_lossy()),
        None => format!("{stem}.{i}"),
    };
    path.with_file_name(name)
}

fn cmd_search(path: &Path, config: &SearchConfig, output: Option<&Path>) -> Result<u8, Failure> {
    let g = read_graph(path)?;
    let outcome = enumerate(&g, config);
    for c in &outcome.colorings {
        self_verify(&g, c)?;
    }
    let status = match outcome.status {
        SearchStatus::Found => "Found",
        SearchStatus::Exhausted => "Exhausted",
        SearchStatus::BudgetExceeded => "BudgetExceeded",
    };
    println!("status {status}");
    println!("nodes_explored {}", outcome.nodes_explored);
    println!("colorings {}", outcome.colorings.len());
    match (output, outcome.colorings.as_slice()) {
        (_, []) => {}
        (Some(path), [only]) => write(path, &write_coloring(only))?,
        (Some(path), many) => {
            for (i, c) in many.iter().enumerate() {
                write(&numbered(path, i + 1), &write_coloring(c))?;
            }
        }
        (None, many) => {
            for c in many {
                print!("{}", write_coloring(c));
            }
        }
    }
    Ok(match outcome.status {
        SearchStatus::Found => 0,
        SearchStatus::Exhausted => NO,
        SearchStatus::BudgetExceeded => UNKNOWN,
    })
}

fn parse_anchor_list(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Failure::new(ERROR, "BadAnchors", format!("{t:?} is not a vertex index")))
        })
        .collect()
}

fn parse_anchors(s: &str) -> Result<AnchorSet, Failure> {
    let (primary, secondary) = s
        .split_once(':')
        .ok_or_else(|| Failure::new(ERROR, "BadAnchors", "expected v1,..,vq:w1,..,wq"))?;
    Ok(AnchorSet::new(parse_anchor_list(primary)?, parse_anchor_list(secondary)?))
}

fn cmd_extend(
    graph: &Path,
    coloring: &Path,
    anchors: Option<&str>,
    steps: usize,
) -> Result<ConstructionResult, Failure> {
    if steps == 0 {
        return Err(Failure::new(ERROR, "Usage", "--steps must be at least 1"));
    }
    let g = read_graph(graph)?;
    let c = read_coloring(coloring)?;
    if !c.is_balanced(&g)? {
        return Err(ConstructError::InputNotBalanced(Operand::G).into());
    }
    let first = match anchors {
        Some(s) => parse_anchors(s)?,
        None => AnchorSet::lowest(&c)?,
    };
    let mut result = cons::vertex_addition(&g, &c, &first)?;
    for _ in 1..steps {
        let g = result.graph.take().expect("vertex addition builds a graph");
        let anchors = AnchorSet::lowest(&result.coloring)?;
        result = cons::vertex_addition(&g, &result.coloring, &anchors)?;
    }
    Ok(result)
}
