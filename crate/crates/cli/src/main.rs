//! `domicert`: solvers, twinning procedures and the census from the shell.
//!
//! Exit codes: 0 success, 1 failed check or counterexample, 2 usage or
//! input error, 3 capability or budget limit.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use domicert::census::{parse_checks, run_census, CensusConfig, Family};
use domicert::domination::{spanned_vertices, Solver, DEFAULT_BUDGET};
use domicert::fixtures::{vertex_names, FIGURE1_EDGES};
use domicert::graph::{parse_edge_list, parse_graph6};
use domicert::lemma::{detangle, sharing_pairs, twinning};
use domicert::{Edge, EdgeSet, Error, Graph, VertexSet};

const BUDGET_VAR: &str = "DOMICERT_BUDGET";
const EXPECTED: &str = "expected: gamma_ev = 2, ev sets {c1-c2,c3-c4} {c1-c4,c2-c3}; gamma_pr = 4, paired sets {c1,c2,c3,c4}";

#[derive(Parser)]
#[command(name = "domicert", version, about = "Edge-vertex and paired domination toolkit")]
struct Cli {
    /// Input format of FILE arguments.
    #[arg(long, value_enum, default_value_t = Format::Edges, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    G6,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Ev,
    Pr,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum cardinality and number of minimum sets.
    Solve {
        #[arg(long, value_enum, default_value_t = KindArg::Ev)]
        kind: KindArg,
        file: PathBuf,
    },
    /// List every minimum set.
    Enumerate {
        #[arg(long, value_enum, default_value_t = KindArg::Ev)]
        kind: KindArg,
        file: PathBuf,
    },
    /// Whether the minimum set is unique.
    Unique {
        #[arg(long, value_enum, default_value_t = KindArg::Ev)]
        kind: KindArg,
        file: PathBuf,
    },
    /// Vertices spanned by each minimum ev-dominating set.
    Span { file: PathBuf },
    /// One twinning step on two edges of a minimum ev-dominating set.
    Twin {
        file: PathBuf,
        #[arg(long, value_name = "u,v")]
        e1: String,
        #[arg(long, value_name = "u,v")]
        e2: String,
    },
    /// Iterated twinning on the first minimum ev-set with a sharing pair.
    Detangle { file: PathBuf },
    /// Exhaustive verification over all small trees or connected graphs.
    Census {
        #[arg(long, value_parser = ["trees", "graphs"])]
        family: String,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Comma-separated subset of thm1,thm2,cor1,cor_general,cor_general2,claim,lemma1.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Write the JSON report here.
        #[arg(long, value_name = "REPORT.json")]
        out: Option<PathBuf>,
    },
    /// Check the bundled pendant-square fixture against its expected families.
    #[command(name = "verify-figure1")]
    VerifyFigure1 {
        /// Use this edge-list file instead of the bundled copy.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
}

enum Failure {
    Check(String),
    Usage(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Capability(_) | Error::Budget { .. } => Failure::Limit(e.to_string()),
            Error::NotMinimumWitness { .. } | Error::Invariant(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

/// A parsed input together with the display names of its vertices.
struct Input {
    graph: Graph,
    names: Vec<String>,
}

impl Input {
    fn from_edge_list(text: &str) -> Result<Self, Failure> {
        let graph = parse_edge_list(text)?;
        let names = vertex_names(text)
            .filter(|names| names.len() == graph.n())
            .unwrap_or_else(|| (0..graph.n()).map(|v| v.to_string()).collect());
        Ok(Input { graph, names })
    }

    fn load(path: &Path, format: Format) -> Result<Self, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        match format {
            Format::Edges => Input::from_edge_list(&text),
            Format::G6 => {
                let graph = parse_graph6(text.trim())?;
                let names = (0..graph.n()).map(|v| v.to_string()).collect();
                Ok(Input { graph, names })
            }
        }
    }

    fn vertex(&self, token: &str) -> Result<usize, Failure> {
        let token = token.trim();
        self.names
            .iter()
            .position(|name| name == token)
            .or_else(|| token.parse().ok().filter(|&v| v < self.graph.n()))
            .ok_or_else(|| Failure::Usage(format!("unknown vertex `{token}`")))
    }

    fn edge(&self, spec: &str) -> Result<Edge, Failure> {
        let (a, b) = spec
            .split_once(',')
            .ok_or_else(|| Failure::Usage(format!("edge `{spec}` must be written u,v")))?;
        let (a, b) = (self.vertex(a)?, self.vertex(b)?);
        if a == b || !self.graph.has_edge(a, b) {
            return Err(Failure::Usage(format!("{spec} is not an edge of the graph")));
        }
        Ok(Edge::new(a, b))
    }

    fn show_vertices(&self, set: &VertexSet) -> String {
        let names: Vec<&str> = set.iter().map(|v| self.names[v].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    fn show_edge(&self, e: &Edge) -> String {
        format!("{}-{}", self.names[e.u], self.names[e.v])
    }

    fn show_edges(&self, set: &EdgeSet) -> String {
        let edges: Vec<String> = set.iter().map(|e| self.show_edge(e)).collect();
        format!("{{{}}}", edges.join(","))
    }
}

fn solver_from_env() -> Result<Solver, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map(Solver::new)
            .map_err(|_| Failure::Usage(format!("{BUDGET_VAR}={raw} is not a node count"))),
        Err(_) => Ok(Solver::new(DEFAULT_BUDGET)),
    }
}

fn plural(count: usize) -> &'static str {
    if count == 1 {
        "set"
    } else {
        "sets"
    }
}

fn solve(input: &Input, kind: KindArg, list: bool, solver: &Solver) -> Outcome {
    let mut out = String::new();
    match kind {
        KindArg::Ev => {
            let family = solver.solve_ev(&input.graph)?;
            let count = family.sets.len();
            writeln!(out, "gamma_ev = {}; {count} minimum {}", family.gamma, plural(count)).unwrap();
            if list {
                for set in &family.sets {
                    writeln!(out, "{}", input.show_edges(set)).unwrap();
                }
            }
        }
        KindArg::Pr => {
            let family = solver.solve_pr(&input.graph)?;
            let count = family.sets.len();
            writeln!(out, "gamma_pr = {}; {count} minimum {}", family.gamma, plural(count)).unwrap();
            if list {
                for set in &family.sets {
                    writeln!(out, "{}", input.show_vertices(set)).unwrap();
                }
            }
        }
    }
    Ok(out)
}

fn unique(input: &Input, kind: KindArg, solver: &Solver) -> Outcome {
    let line = match kind {
        KindArg::Ev => {
            let family = solver.solve_ev(&input.graph)?;
            let verdict = family.verdict();
            if verdict.unique {
                format!("unique: true; set = {}", input.show_edges(&family.sets[0]))
            } else {
                let span = verdict
                    .common_span
                    .map_or("spans differ".to_string(), |s| {
                        format!("common span = {}", input.show_vertices(&s))
                    });
                format!("unique: false; {} minimum sets; {span}", verdict.witness_count)
            }
        }
        KindArg::Pr => {
            let family = solver.solve_pr(&input.graph)?;
            if family.is_unique() {
                format!("unique: true; set = {}", input.show_vertices(&family.sets[0]))
            } else {
                format!("unique: false; {} minimum sets", family.sets.len())
            }
        }
    };
    Ok(line + "\n")
}

fn span(input: &Input, solver: &Solver) -> Outcome {
    let family = solver.solve_ev(&input.graph)?;
    let mut out = String::new();
    for set in &family.sets {
        let spanned = spanned_vertices(set);
        writeln!(out, "{} spans {}", input.show_edges(set), input.show_vertices(&spanned)).unwrap();
    }
    match family.verdict().common_span {
        Some(s) => writeln!(out, "common span = {}", input.show_vertices(&s)).unwrap(),
        None => writeln!(out, "spans differ").unwrap(),
    }
    Ok(out)
}

fn twin(input: &Input, e1: &str, e2: &str, solver: &Solver) -> Outcome {
    let (e1, e2) = (input.edge(e1)?, input.edge(e2)?);
    if e1.shared_vertex(&e2).is_none() {
        return Err(Failure::Usage(format!(
            "{} and {} must share exactly one vertex",
            input.show_edge(&e1),
            input.show_edge(&e2)
        )));
    }
    let family = solver.solve_ev(&input.graph)?;
    let Some(set) = family.sets.iter().find(|m| m.contains(&e1) && m.contains(&e2)) else {
        return Err(Failure::Check(format!(
            "no minimum ev-dominating set contains both {} and {}",
            input.show_edge(&e1),
            input.show_edge(&e2)
        )));
    };
    let twins = twinning(&input.graph, set, &e1, &e2)?;
    let mut out = String::new();
    writeln!(out, "set   = {} (sharing pairs: {})", input.show_edges(set), sharing_pairs(set)).unwrap();
    for (label, result, step) in [
        ("left ", &twins.left, &twins.left_step),
        ("right", &twins.right, &twins.right_step),
    ] {
        writeln!(
            out,
            "{label} = {} (sharing pairs: {}; {} -> {}, private vertex {})",
            input.show_edges(result),
            sharing_pairs(result),
            input.show_edge(&step.replaced_edge),
            input.show_edge(&step.inserted_edge),
            input.names[step.private_vertex],
        )
        .unwrap();
    }
    Ok(out)
}

fn detangle_first(input: &Input, solver: &Solver) -> Outcome {
    let family = solver.solve_ev(&input.graph)?;
    let Some(set) = family.sets.iter().find(|m| sharing_pairs(m) > 0) else {
        return Ok("no minimum ev-dominating set has two edges sharing a vertex\n".into());
    };
    let result = detangle(&input.graph, set)?;
    let mut out = String::new();
    writeln!(out, "input = {}", input.show_edges(set)).unwrap();
    for (i, step) in result.trace.iter().enumerate() {
        writeln!(
            out,
            "step {}: {} -> {} (private vertex {}, shared vertex {})",
            i + 1,
            input.show_edge(&step.replaced_edge),
            input.show_edge(&step.inserted_edge),
            input.names[step.private_vertex],
            input.names[step.shared_vertex],
        )
        .unwrap();
    }
    writeln!(out, "left  = {}", input.show_edges(&result.left)).unwrap();
    writeln!(out, "right = {}", input.show_edges(&result.right)).unwrap();
    writeln!(out, "iterations = {}", result.iterations).unwrap();
    Ok(out)
}

struct CensusArgs {
    family: String,
    n_min: usize,
    n_max: usize,
    checks: String,
    workers: usize,
    out: Option<PathBuf>,
}

fn census(args: CensusArgs, solver: &Solver) -> Outcome {
    let family: Family = args.family.parse()?;
    let config = CensusConfig {
        family,
        n_min: args.n_min,
        n_max: args.n_max,
        checks: parse_checks(&args.checks)?,
        worker_count: args.workers,
        budget: solver.budget(),
    };
    let report = run_census(&config)?;
    if let Some(path) = &args.out {
        fs::write(path, report.to_json())
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    eprintln!("census finished in {:.2?}", report.wall_time);

    let mut out = String::new();
    for r in &report.records {
        writeln!(
            out,
            "n={}: {} graphs, {} counterexamples, {} skipped, {} findings",
            r.n,
            r.graphs_examined,
            r.counterexamples.len(),
            r.skipped.len(),
            r.findings.len()
        )
        .unwrap();
    }
    for c in report.counterexamples() {
        writeln!(out, "counterexample [{}] {}: {}", c.check, c.graph6, c.detail).unwrap();
    }
    for f in report.findings() {
        writeln!(out, "finding [{}] {}: {}", f.kind, f.graph6, f.detail).unwrap();
    }
    let t = &report.totals;
    writeln!(
        out,
        "total: {} graphs, {} counterexamples, {} skipped, {} findings",
        t.graphs_examined, t.counterexamples, t.skipped, t.findings
    )
    .unwrap();

    if t.counterexamples > 0 {
        print!("{out}");
        return Err(Failure::Check(format!("{} counterexamples", t.counterexamples)));
    }
    if t.skipped > 0 {
        print!("{out}");
        return Err(Failure::Limit(format!("{} graph checks skipped", t.skipped)));
    }
    Ok(out)
}

fn verify_figure1(fixture: Option<PathBuf>, solver: &Solver) -> Outcome {
    let input = match fixture {
        Some(path) => Input::load(&path, Format::Edges)?,
        None => Input::from_edge_list(FIGURE1_EDGES)?,
    };
    let (ev, pr) = match (solver.solve_ev(&input.graph), solver.solve_pr(&input.graph)) {
        (Ok(ev), Ok(pr)) => (ev, pr),
        (Err(e), _) | (_, Err(e)) if e.is_capability() => return Err(e.into()),
        (Err(e), _) | (_, Err(e)) => {
            println!("{EXPECTED}");
            println!("computed: {e}");
            return Err(Failure::Check("fixture does not match".into()));
        }
    };
    let spans: Vec<VertexSet> = ev.sets.iter().map(spanned_vertices).collect();
    let assertions = [
        ("gamma_pr = 4 with a single set", pr.gamma == 4 && pr.sets.len() == 1),
        ("gamma_ev = 2 with exactly two sets", ev.gamma == 2 && ev.sets.len() == 2),
        (
            "both ev-sets span the same 4 vertices",
            spans.len() == 2 && spans[0] == spans[1] && spans[0].len() == 4,
        ),
        ("that span is the paired set", spans.first().zip(pr.sets.first()).is_some_and(|(s, d)| s == d)),
        ("2 * gamma_ev = gamma_pr", 2 * ev.gamma == pr.gamma),
    ];

    let mut out = String::new();
    for (label, ok) in &assertions {
        writeln!(out, "{} {label}", if *ok { "ok  " } else { "FAIL" }).unwrap();
    }
    if assertions.iter().all(|(_, ok)| *ok) {
        writeln!(out, "all 5 assertions passed").unwrap();
        return Ok(out);
    }
    writeln!(out, "{EXPECTED}").unwrap();
    let ev_sets: Vec<String> = ev.sets.iter().map(|s| input.show_edges(s)).collect();
    let pr_sets: Vec<String> = pr.sets.iter().map(|s| input.show_vertices(s)).collect();
    writeln!(out, "computed: gamma_ev = {}, ev sets {}", ev.gamma, ev_sets.join(" ")).unwrap();
    writeln!(out, "computed: gamma_pr = {}, paired sets {}", pr.gamma, pr_sets.join(" ")).unwrap();
    print!("{out}");
    Err(Failure::Check("fixture does not match".into()))
}

fn run(cli: Cli) -> Outcome {
    let solver = solver_from_env()?;
    let format = cli.format;
    match cli.command {
        Command::Solve { kind, file } => solve(&Input::load(&file, format)?, kind, false, &solver),
        Command::Enumerate { kind, file } => solve(&Input::load(&file, format)?, kind, true, &solver),
        Command::Unique { kind, file } => unique(&Input::load(&file, format)?, kind, &solver),
        Command::Span { file } => span(&Input::load(&file, format)?, &solver),
        Command::Twin { file, e1, e2 } => twin(&Input::load(&file, format)?, &e1, &e2, &solver),
        Command::Detangle { file } => detangle_first(&Input::load(&file, format)?, &solver),
        Command::Census {
            family,
            n_min,
            n_max,
            checks,
            workers,
            out,
        } => census(
            CensusArgs {
                family,
                n_min,
                n_max,
                checks,
                workers,
                out,
            },
            &solver,
        ),
        Command::VerifyFigure1 { fixture } => verify_figure1(fixture, &solver),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
