//! Command-line entry point: instance generation, solving, solution
//! verification, gap sweeps, and the acceptance self-test.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use sumcover::analysis::{
    check_apex_first_cost, check_layered_cost, instance_report, reports_to_csv, BoundCheck,
    BoundStatus, GapReport,
};
use sumcover::generators::bq::{self, BqParams};
use sumcover::generators::{hg, random_hypergraph, twin_spiders, GeneratorError, SimpleGraph};
use sumcover::io::{format_instance, parse_graph, parse_instance, parse_solution, SolutionFile};
use sumcover::ordering::OrderingError;
use sumcover::solvers::{
    brute_force_mssc, fpt_decide, greedy_mssc, Decision, Instance, SearchBudget, SolveError,
};
use sumcover::{Hypergraph, Ordering};

/// Fixed default for every seeded operation; always echoed in output
/// headers so runs can be reproduced without knowing the default.
const DEFAULT_SEED: u64 = 7;

const EXIT_OK: i32 = 0;
const EXIT_PARSE: i32 = 1;
const EXIT_BUDGET: i32 = 2;
const EXIT_INFEASIBLE: i32 = 3;
const EXIT_MISMATCH: i32 = 4;

const EXIT_HELP: &str = "\
Exit codes:
  0  success
  1  malformed input: command line, instance, graph or solution file,
     or invalid generator parameters
  2  search budget exceeded
  3  infeasible: an edge is left uncovered, or a --max-cost / --max-k
     bound is violated
  4  mismatch: declared values disagree with recomputation, an asserted
     sweep check fails, or an acceptance criterion fails";

#[derive(Parser)]
#[command(
    name = "sumcover",
    version,
    about = "Minimum sum set cover: generators, solvers and verification",
    after_help = EXIT_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file for a built-in family
    Gen(GenArgs),
    /// Solve an instance exactly, by decision procedure, or greedily
    Solve(SolveArgs),
    /// Recompute a solution's cost and cover and compare declarations
    Verify(VerifyArgs),
    /// Sweep a family and emit a CSV report of bound checks
    Gap(GapArgs),
    /// Run the acceptance suite, one line per criterion
    Selftest,
}

#[derive(Args)]
struct GenArgs {
    /// Family: hG, bq, fig1 or random
    #[arg(long)]
    family: String,
    /// Source graph file for --family hG (`n m` header, then `u v` lines)
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Built-in source graph for --family hG: path, cycle, complete, empty
    #[arg(long, value_name = "KIND")]
    graph_type: Option<String>,
    /// Vertex count (hG built-ins, random) or branching factor (bq)
    #[arg(long)]
    n: Option<usize>,
    /// Recursion depth for --family bq
    #[arg(long)]
    q: Option<usize>,
    /// Number of copies for --family bq (default 1)
    #[arg(long)]
    p: Option<usize>,
    /// Edge count for --family random
    #[arg(long)]
    m: Option<usize>,
    /// Maximum edge size for --family random
    #[arg(long)]
    rank: Option<usize>,
    /// RNG seed (echoed in the output header)
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Output file; stdout when omitted
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    /// Algorithm: brute, fpt or greedy
    #[arg(long)]
    algo: String,
    /// Instance file to solve
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Cover-size budget (fpt only)
    #[arg(long)]
    k: Option<usize>,
    /// Cost budget (fpt only)
    #[arg(long)]
    w: Option<u64>,
    /// Search-node budget for the exact solver
    #[arg(long, value_name = "NODES")]
    budget: Option<u64>,
    /// Output file; stdout when omitted
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance file
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Solution file to check
    #[arg(long, value_name = "FILE")]
    solution: PathBuf,
    /// Reject solutions costing more than this
    #[arg(long, value_name = "W")]
    max_cost: Option<u64>,
    /// Reject solutions using more than this many vertices
    #[arg(long, value_name = "K")]
    max_k: Option<usize>,
}

#[derive(Args)]
struct GapArgs {
    /// Family to sweep: hG, bq or random
    #[arg(long)]
    family: String,
    /// Vertex count or branching factor; a single value or inclusive `A..B`
    #[arg(long, value_name = "RANGE")]
    n: Option<String>,
    /// Recursion depth for --family bq; single value or inclusive `A..B`
    #[arg(long, value_name = "RANGE")]
    q: Option<String>,
    /// Number of copies for --family bq (default 1)
    #[arg(long)]
    p: Option<usize>,
    /// Edge count for --family random; single value or inclusive `A..B`
    #[arg(long, value_name = "RANGE")]
    m: Option<String>,
    /// Maximum edge size for --family random
    #[arg(long)]
    rank: Option<usize>,
    /// Built-in source graph for --family hG sweeps
    #[arg(long, value_name = "KIND", default_value = "path")]
    graph_type: String,
    /// Base RNG seed for --family random (row i uses seed + i)
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Search-node budget per instance for the exact solver
    #[arg(long, value_name = "NODES")]
    budget: Option<u64>,
    /// Size of the worker pool for the sweep
    #[arg(long, value_name = "N")]
    threads: Option<usize>,
    /// Output CSV file; stdout when omitted
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// A failure that terminates the process with a contract exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure { code: EXIT_PARSE, message: message.into() }
    }

    fn budget(message: impl Into<String>) -> Self {
        Failure { code: EXIT_BUDGET, message: message.into() }
    }

    fn infeasible(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INFEASIBLE, message: message.into() }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        Failure { code: EXIT_MISMATCH, message: message.into() }
    }
}

impl From<GeneratorError> for Failure {
    fn from(err: GeneratorError) -> Self {
        Failure::parse(err.to_string())
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{err}");
            return EXIT_OK;
        }
        Err(err) => {
            eprint!("{err}");
            return EXIT_PARSE;
        }
    };
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gap(args) => cmd_gap(args),
        Command::Selftest => cmd_selftest(),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

// ----------------------------------------------------------------- shared

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|err| Failure::parse(format!("{}: {err}", path.display())))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|err| Failure::parse(format!("{}: {err}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_instance(path: &Path) -> Result<Hypergraph, Failure> {
    let text = read_file(path)?;
    let loaded = parse_instance(&text)
        .map_err(|err| Failure::parse(format!("{}: {err}", path.display())))?;
    if loaded.duplicates_merged > 0 {
        eprintln!(
            "warning: {}: merged {} duplicate edge line(s)",
            path.display(),
            loaded.duplicates_merged
        );
    }
    Ok(loaded.hypergraph)
}

fn search_budget(nodes: Option<u64>) -> SearchBudget {
    nodes.map_or_else(SearchBudget::default, SearchBudget::new)
}

/// Rejects flags that do not belong to the selected family or algorithm.
fn forbid<T>(flag: &str, value: &Option<T>, context: &str) -> Result<(), Failure> {
    if value.is_some() {
        return Err(Failure::parse(format!("{flag} does not apply to {context}")));
    }
    Ok(())
}

fn require<T: Copy>(flag: &str, value: Option<T>, context: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::parse(format!("{context} requires {flag}")))
}

fn built_in_graph(kind: &str, n: usize) -> Result<SimpleGraph, Failure> {
    match kind {
        "path" => Ok(SimpleGraph::path(n)),
        "cycle" => SimpleGraph::cycle(n).map_err(Failure::from),
        "complete" => Ok(SimpleGraph::complete(n)),
        "empty" => Ok(SimpleGraph::empty(n)),
        other => Err(Failure::parse(format!(
            "unknown --graph-type `{other}` (expected path, cycle, complete or empty)"
        ))),
    }
}

/// Inclusive range syntax: `A` or `A..B`.
fn parse_range(text: &str, flag: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || Failure::parse(format!("{flag}: expected `A` or `A..B`, got `{text}`"));
    match text.split_once("..") {
        None => {
            let single: usize = text.trim().parse().map_err(|_| bad())?;
            Ok(single..=single)
        }
        Some((lo, hi)) => {
            let lo: usize = lo.trim().parse().map_err(|_| bad())?;
            let hi: usize = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(Failure::parse(format!("{flag}: empty range `{text}`")));
            }
            Ok(lo..=hi)
        }
    }
}

// -------------------------------------------------------------------- gen

fn cmd_gen(args: GenArgs) -> Result<(), Failure> {
    let seed = args.seed;
    let (hypergraph, header) = match args.family.to_lowercase().as_str() {
        "hg" => {
            forbid("--q", &args.q, "--family hG")?;
            forbid("--p", &args.p, "--family hG")?;
            forbid("--m", &args.m, "--family hG")?;
            forbid("--rank", &args.rank, "--family hG")?;
            let (graph, source) = match (&args.graph, &args.graph_type) {
                (Some(path), None) => {
                    forbid("--n", &args.n, "--family hG with --graph")?;
                    (parse_graph(&read_file(path)?).map_err(|err| {
                        Failure::parse(format!("{}: {err}", path.display()))
                    })?, String::new())
                }
                (None, Some(kind)) => {
                    let n = require("--n", args.n, "--graph-type")?;
                    (built_in_graph(kind, n)?, format!("graph-type={kind} "))
                }
                _ => {
                    return Err(Failure::parse(
                        "--family hG requires exactly one of --graph FILE or --graph-type KIND --n N",
                    ))
                }
            };
            let (h, _) = hg::build(&graph)?;
            let header = format!(
                "gen=hG {source}n={} m={} seed={seed}",
                graph.vertex_count(),
                graph.edge_count()
            );
            (h, header)
        }
        "bq" => {
            forbid("--graph", &args.graph, "--family bq")?;
            forbid("--graph-type", &args.graph_type, "--family bq")?;
            forbid("--m", &args.m, "--family bq")?;
            forbid("--rank", &args.rank, "--family bq")?;
            let n = require("--n", args.n, "--family bq")?;
            let q = require("--q", args.q, "--family bq")?;
            let p = args.p.unwrap_or(1);
            let params = BqParams { n, q, p };
            let (h, _) = bq::build(params)?;
            (h, format!("gen=bq n={n} q={q} p={p} seed={seed}"))
        }
        "fig1" => {
            forbid("--graph", &args.graph, "--family fig1")?;
            forbid("--graph-type", &args.graph_type, "--family fig1")?;
            forbid("--n", &args.n, "--family fig1")?;
            forbid("--q", &args.q, "--family fig1")?;
            forbid("--p", &args.p, "--family fig1")?;
            forbid("--m", &args.m, "--family fig1")?;
            forbid("--rank", &args.rank, "--family fig1")?;
            let (h, _) = twin_spiders();
            (h, format!("gen=fig1 seed={seed}"))
        }
        "random" => {
            forbid("--graph", &args.graph, "--family random")?;
            forbid("--graph-type", &args.graph_type, "--family random")?;
            forbid("--q", &args.q, "--family random")?;
            forbid("--p", &args.p, "--family random")?;
            let n = require("--n", args.n, "--family random")?;
            let m = require("--m", args.m, "--family random")?;
            let rank = require("--rank", args.rank, "--family random")?;
            let h = random_hypergraph(n, m, rank, seed)?;
            (h, format!("gen=random n={n} m={m} rank={rank} seed={seed}"))
        }
        other => {
            return Err(Failure::parse(format!(
                "unknown --family `{other}` (expected hG, bq, fig1 or random)"
            )))
        }
    };
    write_output(args.out.as_deref(), &format_instance(&hypergraph, &[header]))
}

// ------------------------------------------------------------------ solve

fn cmd_solve(args: SolveArgs) -> Result<(), Failure> {
    let h = load_instance(&args.input)?;
    let text = match args.algo.as_str() {
        "brute" => {
            forbid("--k", &args.k, "--algo brute")?;
            forbid("--w", &args.w, "--algo brute")?;
            let budget = search_budget(args.budget);
            let exact = brute_force_mssc(&h, &budget).map_err(solve_failure)?;
            let witness = exact.witness_min_cover;
            SolutionFile {
                comments: vec![format!("algo=brute budget={}", budget.max_nodes)],
                declared_cost: Some(exact.phi),
                declared_cover_size: Some(witness.len()),
                ordering: Some(witness.sequence().to_vec()),
                tau: Some(exact.tau as u64),
                tau_arrow: Some(exact.tau_arrow as u64),
                ..SolutionFile::default()
            }
            .to_text()
        }
        "fpt" => {
            let k = require("--k", args.k, "--algo fpt")?;
            let w = require("--w", args.w, "--algo fpt")?;
            let instance = Instance::new(h.clone(), k, w).map_err(solve_failure)?;
            match fpt_decide(&instance).map_err(solve_failure)? {
                Decision::Yes { witness } => {
                    let cost = h.solution_cost(&witness).expect("decision witnesses cover");
                    SolutionFile {
                        comments: vec![format!("algo=fpt k={k} w={w}")],
                        decision: Some(true),
                        declared_cost: Some(cost),
                        declared_cover_size: Some(witness.len()),
                        ordering: Some(witness.sequence().to_vec()),
                        ..SolutionFile::default()
                    }
                    .to_text()
                }
                Decision::No => SolutionFile {
                    comments: vec![format!("algo=fpt k={k} w={w}")],
                    decision: Some(false),
                    ..SolutionFile::default()
                }
                .to_text(),
            }
        }
        "greedy" => {
            forbid("--k", &args.k, "--algo greedy")?;
            forbid("--w", &args.w, "--algo greedy")?;
            let (ordering, cost) = greedy_mssc(&h);
            SolutionFile {
                comments: vec!["algo=greedy".to_owned()],
                declared_cost: Some(cost),
                declared_cover_size: Some(ordering.len()),
                ordering: Some(ordering.sequence().to_vec()),
                ..SolutionFile::default()
            }
            .to_text()
        }
        other => {
            return Err(Failure::parse(format!(
                "unknown --algo `{other}` (expected brute, fpt or greedy)"
            )))
        }
    };
    write_output(args.out.as_deref(), &text)
}

fn solve_failure(err: SolveError) -> Failure {
    match err {
        SolveError::BudgetExceeded { .. } => Failure::budget(err.to_string()),
        _ => Failure::parse(err.to_string()),
    }
}

// ----------------------------------------------------------------- verify

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let h = load_instance(&args.input)?;
    let text = read_file(&args.solution)?;
    let solution = parse_solution(&text)
        .map_err(|err| Failure::parse(format!("{}: {err}", args.solution.display())))?;
    let sequence = solution
        .ordering
        .ok_or_else(|| Failure::parse("solution file has no `o` ordering line to verify"))?;
    let ordering = Ordering::new(sequence).map_err(|err| Failure::parse(err.to_string()))?;
    // The solution's own vertices must cover every edge; cost evaluation
    // alone would silently extend a short prefix into a full permutation.
    let cover = match h.implied_cover(&ordering) {
        Ok(cover) => cover,
        Err(err @ OrderingError::IncompleteCover { .. }) => {
            return Err(Failure::infeasible(err.to_string()))
        }
        Err(err) => return Err(Failure::parse(err.to_string())),
    };
    let cost = h.solution_cost(&ordering).expect("the ordering covers every edge");
    if let Some(declared) = solution.declared_cost {
        if declared != cost {
            return Err(Failure::mismatch(format!(
                "declared cost={declared} but the ordering costs {cost}"
            )));
        }
    }
    if let Some(declared) = solution.declared_cover_size {
        if declared != cover.len() {
            return Err(Failure::mismatch(format!(
                "declared k={declared} but the ordering uses {} vertices",
                cover.len()
            )));
        }
    }
    if let Some(max_cost) = args.max_cost {
        if cost > max_cost {
            return Err(Failure::infeasible(format!(
                "cost {cost} exceeds --max-cost {max_cost}"
            )));
        }
    }
    if let Some(max_k) = args.max_k {
        if cover.len() > max_k {
            return Err(Failure::infeasible(format!(
                "cover size {} exceeds --max-k {max_k}",
                cover.len()
            )));
        }
    }
    println!("ok cost={cost} k={}", cover.len());
    Ok(())
}

// -------------------------------------------------------------------- gap

enum SweepItem {
    Hg { id: String, graph: SimpleGraph },
    Bq { id: String, params: BqParams },
    Random { id: String, n: usize, m: usize, rank: usize, seed: u64 },
}

fn sweep_items(args: &GapArgs) -> Result<Vec<SweepItem>, Failure> {
    let mut items = Vec::new();
    match args.family.to_lowercase().as_str() {
        "hg" => {
            let n_range = parse_range(
                args.n.as_deref().ok_or_else(|| Failure::parse("--family hG requires --n"))?,
                "--n",
            )?;
            for n in n_range {
                let kind = args.graph_type.as_str();
                items.push(SweepItem::Hg {
                    id: format!("hG-{kind}-n{n}"),
                    graph: built_in_graph(kind, n)?,
                });
            }
        }
        "bq" => {
            let n_range = parse_range(
                args.n.as_deref().ok_or_else(|| Failure::parse("--family bq requires --n"))?,
                "--n",
            )?;
            let q_range = parse_range(
                args.q.as_deref().ok_or_else(|| Failure::parse("--family bq requires --q"))?,
                "--q",
            )?;
            let p = args.p.unwrap_or(1);
            for n in n_range {
                for q in q_range.clone() {
                    items.push(SweepItem::Bq {
                        id: format!("bq-n{n}-q{q}-p{p}"),
                        params: BqParams { n, q, p },
                    });
                }
            }
        }
        "random" => {
            let n_range = parse_range(
                args.n.as_deref().ok_or_else(|| Failure::parse("--family random requires --n"))?,
                "--n",
            )?;
            let m_range = parse_range(
                args.m.as_deref().ok_or_else(|| Failure::parse("--family random requires --m"))?,
                "--m",
            )?;
            let rank = args.rank.ok_or_else(|| Failure::parse("--family random requires --rank"))?;
            let mut row = 0u64;
            for n in n_range {
                for m in m_range.clone() {
                    let seed = args.seed + row;
                    row += 1;
                    items.push(SweepItem::Random {
                        id: format!("random-n{n}-m{m}-r{rank}-s{seed}"),
                        n,
                        m,
                        rank,
                        seed,
                    });
                }
            }
        }
        other => {
            return Err(Failure::parse(format!(
                "unknown --family `{other}` (expected hG, bq or random)"
            )))
        }
    }
    if items.is_empty() {
        return Err(Failure::parse("the sweep ranges produced no instances"));
    }
    Ok(items)
}

fn sweep_report(item: &SweepItem, budget: &SearchBudget) -> Result<GapReport, Failure> {
    let (id, h, extra): (&str, Hypergraph, Vec<BoundCheck>) = match item {
        SweepItem::Hg { id, graph } => {
            let (h, _) = hg::build(graph)?;
            (id, h, vec![check_apex_first_cost(graph)?])
        }
        SweepItem::Bq { id, params } => {
            let (h, _) = bq::build(*params)?;
            (id, h, check_layered_cost(*params)?)
        }
        SweepItem::Random { id, n, m, rank, seed } => {
            (id, random_hypergraph(*n, *m, *rank, *seed)?, Vec::new())
        }
    };
    Ok(instance_report(id, &h, budget, extra))
}

fn cmd_gap(args: GapArgs) -> Result<(), Failure> {
    let items = sweep_items(&args)?;
    let budget = search_budget(args.budget);
    let sweep = || -> Result<Vec<GapReport>, Failure> {
        items.par_iter().map(|item| sweep_report(item, &budget)).collect()
    };
    let reports = match args.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|err| Failure::parse(format!("--threads: {err}")))?
            .install(sweep),
        None => sweep(),
    }?;
    write_output(args.out.as_deref(), &reports_to_csv(&reports))?;
    let mut failed = Vec::new();
    for report in &reports {
        for check in &report.checks {
            if check.status == BoundStatus::Fails {
                failed.push(format!("{}: {}", report.id, check.name));
            }
        }
    }
    if !failed.is_empty() {
        return Err(Failure::mismatch(format!(
            "{} asserted check(s) failed: {}",
            failed.len(),
            failed.join("; ")
        )));
    }
    Ok(())
}

// --------------------------------------------------------------- selftest

fn cmd_selftest() -> Result<(), Failure> {
    let outcomes = sumcover::selftest::run_all();
    let mut lines = String::new();
    for outcome in &outcomes {
        writeln!(lines, "{}", outcome.summary_line()).unwrap();
    }
    print!("{lines}");
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    if failed > 0 {
        return Err(Failure::mismatch(format!(
            "{failed} of {} acceptance criteria failed",
            outcomes.len()
        )));
    }
    println!("all {} acceptance criteria passed", outcomes.len());
    Ok(())
}
