use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mubig::closed::min_bad_pair_representation;
use mubig::embed::induced_subgraph_search;
use mubig::equivalence::{run_equivalence, EquivalenceOptions};
use mubig::families::{forbidden_catalog_ids, generate, Family, FamilyId, Modifier};
use mubig::fixtures::{fixture_variant, FixtureId, Variant};
use mubig::recognize::{recognize_mixed_unit, Budget, Status};
use mubig::render;
use mubig::repair::{repair, TraceStep};
use mubig::representation::{is_almost_proper, is_mixed_proper, is_mixed_unit, list_bad_pairs, validate};
use mubig::{Bigraph, Representation};

const EXIT_UNSAT: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_HITS: u8 = 3;
const EXIT_USAGE: u8 = 64;
/// Largest vertex count `enumerate` accepts.
const MAX_ENUMERATE: usize = 9;
const BUDGET_ENV: &str = "MUBIG_BUDGET_SECS";

#[derive(Parser)]
#[command(name = "mubig", version, about = "Mixed unit interval bigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a member of a forbidden family or a small named graph.
    Gen {
        /// H1, H2, H3, F1..F13, B0, B1, B2, K, M, H0, L, Mfam, N, Hp, Kfam, P, Q, R, S, T
        #[arg(long)]
        family: String,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long, conflicts_with = "tilde")]
        primed: bool,
        #[arg(long)]
        tilde: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a representation against a graph.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        rep: PathBuf,
    },
    /// Search for a mixed unit interval representation.
    Recognize {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        emit_rep: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        deterministic: bool,
    },
    /// Look for forbidden induced subgraphs.
    Scan {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Turn a closed-interval representation into a mixed proper one.
    Repair {
        #[arg(long)]
        graph: PathBuf,
        /// Closed-interval representation; the fewest-bad-pair one is computed when omitted.
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print every intermediate representation.
        #[arg(long)]
        trace: bool,
    },
    /// Draw a representation.
    Render {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        #[arg(long, default_value_t = 60)]
        width: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Interval tables for the paper's graphs.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
    /// Compare the recognizer with the catalog on all small graphs.
    Enumerate {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Per-vertex-count progress is kept here and reused on restart.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        no_repair: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
    /// Write `<tag>.graph` and `<tag>.rep`.
    Dump {
        #[arg(long)]
        id: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Closed)]
        variant: VariantArg,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_secs: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget> {
        let secs = match self.budget_secs {
            Some(s) => Some(s),
            None => match std::env::var(BUDGET_ENV) {
                Ok(v) => Some(v.parse::<f64>().with_context(|| format!("{BUDGET_ENV}={v} is not a number"))?),
                Err(_) => None,
            },
        };
        if secs.is_some_and(|s| !(s.is_finite() && s >= 0.0)) {
            bail!("budget seconds must be a non-negative number");
        }
        Ok(Budget { max_nodes: self.budget_nodes, max_time: secs.map(Duration::from_secs_f64) })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Closed,
    HalfOpen,
}

/// Errors that map to the usage exit code.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn read_graph(path: &Path) -> Result<Bigraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Bigraph::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_rep(path: &Path) -> Result<Representation> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Representation::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn gen(family: &str, i: Option<usize>, j: Option<usize>, primed: bool, tilde: bool, out: Option<&Path>) -> Result<u8> {
    let family = Family::from_name(family, i, j).map_err(|e| usage(e.to_string()))?;
    let modifier = if primed {
        Modifier::Primed
    } else if tilde {
        Modifier::Tilde
    } else {
        Modifier::Plain
    };
    let g = generate(FamilyId { family, modifier }).map_err(|e| usage(e.to_string()))?;
    emit(out, &g.to_text())?;
    Ok(0)
}

fn validate_cmd(graph: &Path, rep: &Path) -> Result<u8> {
    let g = read_graph(graph)?;
    let r = read_rep(rep)?;
    let report = validate(&g, &r).map_err(|e| usage(e.to_string()))?;
    println!("valid: {}", report.valid);
    for (x, y) in &report.missing_edges {
        println!("missing edge: {x} {y}");
    }
    for (x, y) in &report.spurious_edges {
        println!("spurious edge: {x} {y}");
    }
    println!("mixed unit: {}", is_mixed_unit(&r));
    println!("mixed proper: {}", is_mixed_proper(&r));
    println!("almost proper: {}", is_almost_proper(&r));
    for p in list_bad_pairs(&r) {
        println!("bad pair: {} {}", p.inner, p.outer);
    }
    Ok(if report.valid { 0 } else { EXIT_UNSAT })
}

fn recognize_cmd(graph: &Path, emit_rep: Option<&Path>, budget: &BudgetArgs, deterministic: bool) -> Result<u8> {
    let g = read_graph(graph)?;
    let out = recognize_mixed_unit(&g, &budget.budget()?, deterministic);
    let status = match out.status {
        Status::Sat => "SAT",
        Status::Unsat => "UNSAT",
        Status::BudgetExceeded => "BUDGET",
    };
    println!("{status} nodes={} secs={:.3}", out.stats.nodes, out.stats.elapsed.as_secs_f64());
    if let (Some(w), Some(p)) = (&out.witness, emit_rep) {
        fs::write(p, w.to_text()).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(match out.status {
        Status::Sat => 0,
        Status::Unsat => EXIT_UNSAT,
        Status::BudgetExceeded => EXIT_BUDGET,
    })
}

fn scan_cmd(graph: &Path) -> Result<u8> {
    let g = read_graph(graph)?;
    let mut hits = 0;
    for (id, pattern) in forbidden_catalog_ids(g.n()) {
        for e in induced_subgraph_search(&g, &pattern, Some(1)) {
            hits += 1;
            let pairs: Vec<String> =
                e.mapping.iter().enumerate().map(|(p, &h)| format!("{}->{}", pattern.label(p), g.label(h))).collect();
            let swap = if e.side_swapped { " (sides swapped)" } else { "" };
            println!("hit {id}{swap}: {}", pairs.join(" "));
        }
    }
    if hits == 0 {
        println!("clean");
        Ok(0)
    } else {
        Ok(EXIT_HITS)
    }
}

fn repair_cmd(graph: &Path, rep: Option<&Path>, output: Option<&Path>, trace: bool) -> Result<u8> {
    let g = read_graph(graph)?;
    let r = match rep {
        Some(p) => read_rep(p)?,
        None => match min_bad_pair_representation(&g).map_err(|e| usage(e.to_string()))? {
            Some(r) => r,
            None => {
                println!("not an interval bigraph");
                return Ok(EXIT_UNSAT);
            }
        },
    };
    let show = |steps: &[TraceStep]| {
        for step in steps {
            let flag = if step.cross_side { " cross-side" } else { "" };
            eprintln!("# iteration {} ({}, {}){flag}: {}", step.iteration, step.pair.inner, step.pair.outer, step.step);
            eprint!("{}", step.rep.to_text());
        }
    };
    if trace {
        eprintln!("# input");
        eprint!("{}", r.to_text());
    }
    match repair(&g, &r, trace) {
        Ok(out) => {
            show(&out.trace);
            emit(output, &out.rep.to_text())?;
            Ok(0)
        }
        Err(f) => {
            show(&f.trace);
            eprintln!("{f}");
            eprint!("{}", f.last.to_text());
            Ok(EXIT_UNSAT)
        }
    }
}

fn fixtures_cmd(action: &FixtureAction) -> Result<u8> {
    match action {
        FixtureAction::List => {
            let mut ids = FixtureId::FIXED.to_vec();
            ids.extend(FixtureId::primed_up_to(3));
            for id in ids {
                println!("{id}{}", if id.has_variants() { " (closed, half-open)" } else { "" });
            }
        }
        FixtureAction::Dump { id, variant, out_dir } => {
            let fid: FixtureId = id.parse().map_err(|e: mubig::FamilyError| usage(e.to_string()))?;
            let v = match variant {
                VariantArg::Closed => Variant::Closed,
                VariantArg::HalfOpen => Variant::HalfOpen,
            };
            let (g, rep) = fixture_variant(fid, v).map_err(|e| usage(e.to_string()))?;
            fs::create_dir_all(out_dir)?;
            let stem = fid.to_string().replace(['(', ')'], "_").replace(',', "_");
            fs::write(out_dir.join(format!("{stem}.graph")), g.to_text())?;
            fs::write(out_dir.join(format!("{stem}.rep")), rep.to_text())?;
            println!("{}", out_dir.join(&stem).display());
        }
    }
    Ok(0)
}

fn enumerate_cmd(
    max_n: usize,
    checkpoint: Option<&Path>,
    report: Option<&Path>,
    no_repair: bool,
    budget: &BudgetArgs,
) -> Result<u8> {
    if max_n > MAX_ENUMERATE {
        return Err(usage(format!("--max-n is limited to {MAX_ENUMERATE}")));
    }
    let opts = EquivalenceOptions { max_n, budget: budget.budget()?, repair: !no_repair, checkpoint };
    println!("n graphs sat unsat budget non_interval non_interval_clean disagreements repaired repair_failures");
    let s = run_equivalence(&opts, |l| {
        println!(
            "{} {} {} {} {} {} {} {} {} {}",
            l.n,
            l.graphs,
            l.sat,
            l.unsat,
            l.budget,
            l.non_interval,
            l.non_interval_clean,
            l.disagreements,
            l.repaired,
            l.repair_failures
        )
    })?;
    let mut text = String::new();
    for p in &s.problems {
        let hit = p.hit.map(|h| h.to_string()).unwrap_or_else(|| "none".into());
        text.push_str(&format!(
            "# status={:?} interval={} hit={hit} repair={:?}\n{}\n",
            p.status,
            p.interval,
            p.repair,
            p.graph.to_text()
        ));
    }
    if let Some(r) = report {
        fs::write(r, &text).with_context(|| format!("writing {}", r.display()))?;
    } else {
        print!("{text}");
    }
    let dis = s.total(|l| l.disagreements);
    let over = s.total(|l| l.budget);
    let failed = s.total(|l| l.repair_failures);
    println!("disagreements={dis} budget_exceeded={over} repair_failures={failed}");
    Ok(if over > 0 {
        EXIT_BUDGET
    } else if dis > 0 || failed > 0 {
        EXIT_UNSAT
    } else {
        0
    })
}

fn run(cli: Cli) -> Result<u8> {
    match &cli.command {
        Command::Gen { family, i, j, primed, tilde, output } => gen(family, *i, *j, *primed, *tilde, output.as_deref()),
        Command::Validate { graph, rep } => validate_cmd(graph, rep),
        Command::Recognize { graph, emit_rep, budget, deterministic } => {
            recognize_cmd(graph, emit_rep.as_deref(), budget, *deterministic)
        }
        Command::Scan { graph } => scan_cmd(graph),
        Command::Repair { graph, rep, output, trace } => repair_cmd(graph, rep.as_deref(), output.as_deref(), *trace),
        Command::Render { rep, format, width, output } => {
            let r = read_rep(rep)?;
            let text = match format {
                Format::Ascii => render::ascii(&r, *width),
                Format::Svg => render::svg(&r),
            };
            emit(output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Fixtures { action } => fixtures_cmd(action),
        Command::Enumerate { max_n, checkpoint, report, no_repair, budget } => {
            enumerate_cmd(*max_n, checkpoint.as_deref(), report.as_deref(), *no_repair, budget)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = if e.downcast_ref::<Usage>().is_some() { EXIT_USAGE } else { 1 };
            ExitCode::from(code)
        }
    }
}
