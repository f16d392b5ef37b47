//! `semiladder`: text-in, text-out front end for the core algorithms.
//!
//! Exit codes: 0 success / accept / yes, 1 clean negative (no solution or
//! reject), 2 input or format error, 3 internal invariant violation,
//! 4 search budget exceeded.

use std::fmt::Display;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use semiladder_core::branching::approx_is_halfgraph;
use semiladder_core::fpt::{fpt_independent_set, FptOptions, DEFAULT_KERNEL_THRESHOLD};
use semiladder_core::generate::{generate, Family};
use semiladder_core::gyarfas::{approx_clique, approx_is_comatching, ApproxError};
use semiladder_core::io::{parse_graph, serialize_graph_with_comments};
use semiladder_core::oracles::{
    dominating_set_within, independent_set_of_size, max_clique_with_budget,
    max_independent_set_with_budget, min_dominating_set_with_budget, BudgetExceeded,
    ColorClassPartition, DEFAULT_NODE_BUDGET,
};
use semiladder_core::pattern::{index_report, PatternKind};
use semiladder_core::reductions::{
    extract_ds_to_mcis, extract_tiling_solution, grid_tiling_to_is, lift_mcis_to_ds,
    lift_tiling_solution, multicolored_is_to_ds, DsTransferError, TilingExtractError,
};
use semiladder_core::tiling::{parse_grid_tiling, parse_selection, solve_grid_tiling};
use semiladder_core::witness::WitnessKind;
use semiladder_core::{verify_witness, Graph, GridTilingInstance, Witness};

#[derive(Parser)]
#[command(
    name = "semiladder",
    version,
    about = "Graph algorithms parameterized by semi-induced pattern indices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph: halfgraph|matching|comatching|path|cycle|clique|empty <n>,
    /// gnp <n> <p>, unit-squares <n> <side>.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Matching, co-matching and half-graph indices, plus neighbourhood diversity.
    Indices {
        #[arg(default_value = "-")]
        graph: String,
        /// Search up to this order; larger indices are reported as `>=cap`.
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    /// Exact solvers.
    Solve {
        problem: Problem,
        #[arg(default_value = "-")]
        graph: String,
        #[command(flatten)]
        goal: Goal,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Approximation algorithms.
    Approx {
        #[command(subcommand)]
        target: ApproxTarget,
    },
    /// Parameterized independent set: kernelize, then solve the residual graph.
    Fpt {
        #[command(subcommand)]
        problem: FptProblem,
    },
    /// Build a reduction instance.
    Reduce {
        #[command(subcommand)]
        reduction: Reduction,
    },
    /// Move solutions across a reduction.
    Lift {
        #[command(subcommand)]
        direction: LiftDirection,
    },
    /// Grid Tiling.
    Tiling {
        #[command(subcommand)]
        action: TilingAction,
    },
    /// Check a witness against a graph.
    Verify {
        kind: String,
        graph: String,
        witness: String,
        /// Lower bound on the size (upper bound for ds and colour counts).
        #[arg(short)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Is,
    Clique,
    Ds,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Goal {
    /// Optimum solution.
    #[arg(long)]
    max: bool,
    /// Solution of size exactly k (at most k for ds).
    #[arg(short)]
    k: Option<usize>,
}

#[derive(Subcommand)]
enum ApproxTarget {
    /// Independent set, by half-graph branching or through the co-matching index.
    Is {
        #[arg(default_value = "-")]
        graph: String,
        #[arg(long, conflicts_with = "gyarfas", required_unless_present = "gyarfas")]
        halfgraph: bool,
        #[arg(long, requires = "halfgraph")]
        depth_cap: Option<usize>,
        #[arg(long, requires = "m")]
        gyarfas: bool,
        /// Promised upper bound on the co-matching index.
        #[arg(short)]
        m: Option<usize>,
    },
    /// Clique through the matching index.
    Clique {
        #[arg(default_value = "-")]
        graph: String,
        #[arg(long, required = true)]
        gyarfas: bool,
        /// Promised upper bound on the matching index.
        #[arg(short, required = true)]
        m: usize,
    },
}

#[derive(Subcommand)]
enum FptProblem {
    Is {
        #[arg(default_value = "-")]
        graph: String,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        t: usize,
        /// Keep reducing while at least this many vertices remain.
        #[arg(long, default_value_t = DEFAULT_KERNEL_THRESHOLD)]
        threshold: usize,
        /// Node budget of the exact solve on the residual graph.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
}

#[derive(Subcommand)]
enum Reduction {
    /// Grid Tiling to Independent Set.
    Gt2is { instance: String },
    /// Multicoloured Independent Set to Dominating Set.
    Mcis2ds { graph: String, partition: String },
}

#[derive(Subcommand)]
enum LiftDirection {
    /// Tiling selection to independent set of the reduction graph.
    Gt2is { instance: String, selection: String },
    /// Independent set of the reduction graph to tiling selection.
    Is2gt { instance: String, witness: String },
    /// Multicoloured independent set to dominating set of the reduction graph.
    Mcis2ds {
        graph: String,
        partition: String,
        witness: String,
    },
    /// Dominating set of the reduction graph to multicoloured independent set.
    Ds2mcis {
        graph: String,
        partition: String,
        witness: String,
    },
}

#[derive(Subcommand)]
enum TilingAction {
    Solve {
        instance: String,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
}

enum Failure {
    Input(String),
    Internal(String),
    Budget(BudgetExceeded),
}

impl From<BudgetExceeded> for Failure {
    fn from(e: BudgetExceeded) -> Self {
        Failure::Budget(e)
    }
}

/// Payload for stdout, diagnostics for stderr, and whether the answer is
/// positive.
struct Report {
    out: String,
    err: String,
    positive: bool,
}

impl Report {
    fn yes(out: impl Display) -> Self {
        Report {
            out: format!("{out}\n"),
            err: String::new(),
            positive: true,
        }
    }

    fn no(out: impl Display, err: impl Into<String>) -> Self {
        Report {
            out: format!("{out}\n"),
            err: err.into(),
            positive: false,
        }
    }
}

fn input_err(path: &str, e: impl Display) -> Failure {
    Failure::Input(format!("{path}: {e}"))
}

fn read_text(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| input_err(path, e))?;
    Ok(text)
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    parse_graph(&read_text(path)?).map_err(|e| input_err(path, e))
}

fn read_instance(path: &str) -> Result<GridTilingInstance, Failure> {
    parse_grid_tiling(&read_text(path)?).map_err(|e| input_err(path, e))
}

fn read_partition(path: &str, n: usize) -> Result<ColorClassPartition, Failure> {
    ColorClassPartition::parse(&read_text(path)?, n).map_err(|e| input_err(path, e))
}

fn read_witness(path: &str) -> Result<Witness, Failure> {
    read_text(path)?.parse().map_err(|e| input_err(path, e))
}

fn read_set(path: &str, kind: WitnessKind) -> Result<Vec<usize>, Failure> {
    match read_witness(path)? {
        Witness::IndependentSet(s) if kind == WitnessKind::IndependentSet => Ok(s),
        Witness::DominatingSet(s) if kind == WitnessKind::DominatingSet => Ok(s),
        other => Err(input_err(
            path,
            format!("expected a `{kind}` witness, found `{}`", other.kind()),
        )),
    }
}

fn run(cli: Cli) -> Result<Report, Failure> {
    match cli.command {
        Command::Gen {
            family,
            params,
            seed,
        } => {
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            let fam = Family::parse(&family, &params).map_err(|e| Failure::Input(e.to_string()))?;
            let generated = generate(fam, seed).map_err(|e| Failure::Input(e.to_string()))?;
            let text = serialize_graph_with_comments(&generated.graph, &generated.role_comments());
            Ok(Report::yes(text.trim_end()))
        }
        Command::Indices { graph, cap } => {
            if cap == 0 {
                return Err(Failure::Input("--cap must be at least 1".into()));
            }
            let g = read_graph(&graph)?;
            let r = index_report(&g, cap);
            let mut out = String::from("kind        index  witness\n");
            for kind in PatternKind::ALL {
                let v = r.get(kind);
                let w = v
                    .witness()
                    .map_or_else(|| "-".to_string(), |w| w.to_string());
                out.push_str(&format!("{:<11} {:<6} {w}\n", kind.name(), v.to_string()));
            }
            out.push_str(&format!("{:<11} {}", "diversity", r.neighborhood_diversity));
            Ok(Report::yes(out))
        }
        Command::Solve {
            problem,
            graph,
            goal,
            budget,
        } => {
            let g = read_graph(&graph)?;
            let found = match (problem, goal.k) {
                (Problem::Is, None) => Some(max_independent_set_with_budget(&g, budget)?),
                (Problem::Clique, None) => Some(max_clique_with_budget(&g, budget)?),
                (Problem::Ds, None) => Some(min_dominating_set_with_budget(&g, budget)?),
                (Problem::Is, Some(k)) => independent_set_of_size(&g, k, budget)?,
                (Problem::Clique, Some(k)) => independent_set_of_size(&g.complement(), k, budget)?,
                (Problem::Ds, Some(k)) => dominating_set_within(&g, k, budget)?,
            };
            Ok(match found {
                Some(s) => Report::yes(match problem {
                    Problem::Is => Witness::IndependentSet(s),
                    Problem::Clique => Witness::Clique(s),
                    Problem::Ds => Witness::DominatingSet(s),
                }),
                None => Report::no("no", "no solution of the requested size\n"),
            })
        }
        Command::Approx { target } => approx(target),
        Command::Fpt {
            problem:
                FptProblem::Is {
                    graph,
                    k,
                    t,
                    threshold,
                    budget,
                },
        } => {
            if t == 0 {
                return Err(Failure::Input("-t must be at least 1".into()));
            }
            let g = read_graph(&graph)?;
            let opts = FptOptions {
                threshold,
                oracle_budget: budget,
                ..FptOptions::default()
            };
            let ans = fpt_independent_set(&g, k, t, opts)?;
            let kernel = format!("c {}", ans.kernel);
            Ok(match ans.witness {
                Some(w) => Report::yes(format!("{kernel}\nc yes\n{}", Witness::IndependentSet(w))),
                None => Report::no(format!("{kernel}\nno"), ""),
            })
        }
        Command::Reduce { reduction } => match reduction {
            Reduction::Gt2is { instance } => {
                let inst = read_instance(&instance)?;
                Ok(Report::yes(grid_tiling_to_is(&inst).to_text().trim_end()))
            }
            Reduction::Mcis2ds { graph, partition } => {
                let g = read_graph(&graph)?;
                let p = read_partition(&partition, g.n())?;
                Ok(Report::yes(
                    multicolored_is_to_ds(&g, &p).to_text().trim_end(),
                ))
            }
        },
        Command::Lift { direction } => lift(direction),
        Command::Tiling {
            action: TilingAction::Solve { instance, budget },
        } => {
            let inst = read_instance(&instance)?;
            Ok(match solve_grid_tiling(&inst, budget)? {
                Some(sel) => Report::yes(sel.to_string().trim_end()),
                None => Report::no("no", "no tiling exists\n"),
            })
        }
        Command::Verify {
            kind,
            graph,
            witness,
            k,
        } => {
            let kind: WitnessKind = kind.parse().map_err(|e| Failure::Input(format!("{e}")))?;
            let g = read_graph(&graph)?;
            let w = read_witness(&witness)?;
            if w.kind() != kind {
                return Err(input_err(
                    &witness,
                    format!("expected a `{kind}` witness, found `{}`", w.kind()),
                ));
            }
            Ok(match verify_witness(&g, &w, k) {
                Ok(()) => Report::yes("accept"),
                Err(r) => Report::no("reject", format!("{r}\n")),
            })
        }
    }
}

/// A violated index promise is an input error; the certificate goes to stderr.
fn approx_failure(e: ApproxError) -> Failure {
    match &e {
        ApproxError::MatchingIndexExceeds { path, .. }
        | ApproxError::ComatchingIndexExceeds { path, .. } => Failure::Input(format!(
            "{e}
{}",
            Witness::InducedPath(path.clone())
        )),
        ApproxError::EmptyGraph => Failure::Input(e.to_string()),
    }
}

fn approx(target: ApproxTarget) -> Result<Report, Failure> {
    match target {
        ApproxTarget::Is {
            graph,
            halfgraph,
            depth_cap,
            m,
            ..
        } => {
            let g = read_graph(&graph)?;
            if halfgraph {
                let r = approx_is_halfgraph(&g, depth_cap);
                let mut report = Report::yes(format!(
                    "c depth {} nodes {} cap_hit {}\n{}",
                    r.depth_reached,
                    r.nodes_explored,
                    r.cap_hit,
                    Witness::IndependentSet(r.result)
                ));
                if r.cap_hit {
                    report.err = "depth cap reached, size guarantee void\n".into();
                }
                Ok(report)
            } else {
                let m = m.expect("clap requires -m with --gyarfas");
                let s = approx_is_comatching(&g, m).map_err(approx_failure)?;
                Ok(Report::yes(Witness::IndependentSet(s)))
            }
        }
        ApproxTarget::Clique { graph, m, .. } => {
            let g = read_graph(&graph)?;
            let c = approx_clique(&g, m).map_err(approx_failure)?;
            Ok(Report::yes(Witness::Clique(c)))
        }
    }
}

fn tiling_extract_failure(e: TilingExtractError) -> Result<Report, Failure> {
    match e {
        TilingExtractError::Inconsistent(_) => Err(Failure::Internal(e.to_string())),
        _ => Ok(Report::no("reject", format!("{e}\n"))),
    }
}

fn ds_transfer_failure(e: DsTransferError) -> Result<Report, Failure> {
    match e {
        DsTransferError::Inconsistent(_) => Err(Failure::Internal(e.to_string())),
        _ => Ok(Report::no("reject", format!("{e}\n"))),
    }
}

fn lift(direction: LiftDirection) -> Result<Report, Failure> {
    match direction {
        LiftDirection::Gt2is {
            instance,
            selection,
        } => {
            let inst = read_instance(&instance)?;
            let sel =
                parse_selection(&read_text(&selection)?).map_err(|e| input_err(&selection, e))?;
            if sel.k() != inst.k() {
                return Err(input_err(
                    &selection,
                    format!(
                        "selection is {}x{}, instance is {}x{}",
                        sel.k(),
                        sel.k(),
                        inst.k(),
                        inst.k()
                    ),
                ));
            }
            let out = grid_tiling_to_is(&inst);
            Ok(match lift_tiling_solution(&inst, &sel, &out) {
                Ok(set) => Report::yes(Witness::IndependentSet(set)),
                Err(e) => Report::no("reject", format!("{e}\n")),
            })
        }
        LiftDirection::Is2gt { instance, witness } => {
            let inst = read_instance(&instance)?;
            let set = read_set(&witness, WitnessKind::IndependentSet)?;
            let out = grid_tiling_to_is(&inst);
            match extract_tiling_solution(&inst, &out, &set) {
                Ok(sel) => Ok(Report::yes(sel.to_string().trim_end())),
                Err(e) => tiling_extract_failure(e),
            }
        }
        LiftDirection::Mcis2ds {
            graph,
            partition,
            witness,
        } => {
            let g = read_graph(&graph)?;
            let p = read_partition(&partition, g.n())?;
            let sol = read_set(&witness, WitnessKind::IndependentSet)?;
            let out = multicolored_is_to_ds(&g, &p);
            match lift_mcis_to_ds(&out, &sol) {
                Ok(ds) => Ok(Report::yes(Witness::DominatingSet(ds))),
                Err(e) => ds_transfer_failure(e),
            }
        }
        LiftDirection::Ds2mcis {
            graph,
            partition,
            witness,
        } => {
            let g = read_graph(&graph)?;
            let p = read_partition(&partition, g.n())?;
            let ds = read_set(&witness, WitnessKind::DominatingSet)?;
            let out = multicolored_is_to_ds(&g, &p);
            match extract_ds_to_mcis(&out, &ds) {
                Ok(s) => Ok(Report::yes(Witness::IndependentSet(s))),
                Err(e) => ds_transfer_failure(e),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(report.out.as_bytes());
            let _ = stdout.flush();
            eprint!("{}", report.err);
            ExitCode::from(if report.positive { 0 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Budget(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(4)
        }
    }
}
