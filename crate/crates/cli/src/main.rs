//! `leafcon`: command-line front end.
//!
//! Every report is a JSON object on stdout carrying `"schema": "leafcon/1"`,
//! except `family`, which prints one graph6 line. A `--g6` value of `-` reads
//! the first line of stdin.
//!
//! Exit codes: 0 pass or decided yes, 1 refuted, 2 budget exhausted or
//! inconclusive, 64 usage error, 70 internal failure.

use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use leafcon::closure::{l_closure, nk_closure};
use leafcon::conditions::{build_family, evaluate, Conclusion, EvaluateOptions, FamilyId};
use leafcon::decider::{is_k_leaf_connected, oracle_leaf_sets, Outcome, DEFAULT_BUDGET};
use leafcon::scan::{run_scan, ScanConfig, SCHEMA};
use leafcon::spectral::{spectral_report, DEFAULT_TOLERANCE};
use leafcon::suites::Suite;
use leafcon::{graph6, Error, Graph};
use serde_json::{json, Value};

const EXIT_OK: u8 = 0;
const EXIT_REFUTED: u8 = 1;
const EXIT_UNDECIDED: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_SOFTWARE: u8 = 70;

#[derive(Parser)]
#[command(name = "leafcon", version, about = "Exact k-leaf-connectivity verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is k-leaf-connected.
    Decide {
        #[arg(long)]
        g6: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Also decide by enumerating every spanning tree (n <= 9).
        #[arg(long)]
        oracle: bool,
    },
    /// Compute the l-closure, or the (n+k-1)-closure with --k.
    #[command(group(ArgGroup::new("level").required(true).args(["l", "k"])))]
    Closure {
        #[arg(long)]
        g6: String,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Evaluate the necessary and sufficient conditions.
    Conditions {
        #[arg(long)]
        g6: String,
        #[arg(long)]
        k: usize,
        /// Run the exact decider as well.
        #[arg(long)]
        decide: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print a named family member as graph6.
    Family {
        #[arg(long)]
        id: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Spectral radii of A, Q and the complement.
    Spectrum {
        #[arg(long)]
        g6: String,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Randomized certification scan over G(n, m).
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Defaults to C(n-3, 2) + 3k + 5.
        #[arg(long)]
        edge_min: Option<usize>,
        /// Draw m uniformly from edge_min..=C(n, 2).
        #[arg(long)]
        edges_free: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Worker threads; 0 picks the number of cores.
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
        /// Record per-sample wall time (the report is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Run an acceptance suite by name or number, or `all`.
    Verify {
        #[arg(long)]
        suite: String,
    },
}

/// A failure and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Numerical(_) | Error::Internal(_) => EXIT_SOFTWARE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_SOFTWARE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CmdResult = Result<u8, Failure>;

fn read_graph(arg: &str) -> Result<Graph, Failure> {
    if arg == "-" {
        let mut line = String::new();
        io::stdin().lock().read_line(&mut line)?;
        Ok(graph6::decode(&line)?)
    } else {
        Ok(graph6::decode(arg)?)
    }
}

fn emit(mut report: Value) -> io::Result<()> {
    report["schema"] = SCHEMA.into();
    let mut stdout = io::stdout().lock();
    serde_json::to_writer_pretty(&mut stdout, &report)?;
    writeln!(stdout)
}

fn outcome_code(o: Outcome) -> u8 {
    match o {
        Outcome::Holds => EXIT_OK,
        Outcome::Fails => EXIT_REFUTED,
        Outcome::BudgetExhausted => EXIT_UNDECIDED,
    }
}

/// First k-subset (lexicographic) that is the leaf set of no spanning tree.
fn oracle_counterexample(g: &Graph, k: usize) -> Result<Option<Vec<usize>>, Failure> {
    let sets = oracle_leaf_sets(g)?;
    let n = g.order();
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        if !sets.contains(&c) {
            return Ok(Some(c));
        }
        // Lexicographic successor.
        let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
            return Ok(None);
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

fn decide(g6: &str, k: usize, budget: u64, oracle: bool) -> CmdResult {
    let g = read_graph(g6)?;
    let verdict = is_k_leaf_connected(&g, k, budget)?;
    let mut report = json!({
        "command": "decide",
        "graph6": graph6::encode(&g),
        "n": g.order(),
        "k": k,
        "budget": budget,
        "verdict": verdict,
    });
    if oracle {
        let missing = oracle_counterexample(&g, k)?;
        let oracle_outcome = if missing.is_none() { Outcome::Holds } else { Outcome::Fails };
        report["oracle"] = json!({
            "outcome": oracle_outcome,
            "missing_set": missing,
            "agrees": verdict.outcome == Outcome::BudgetExhausted || verdict.outcome == oracle_outcome,
        });
    }
    emit(report)?;
    Ok(outcome_code(verdict.outcome))
}

fn closure(g6: &str, l: Option<usize>, k: Option<usize>) -> CmdResult {
    let g = read_graph(g6)?;
    let result = match (l, k) {
        (Some(l), None) => l_closure(&g, l),
        (None, Some(k)) => nk_closure(&g, k)?,
        _ => return Err(usage("give exactly one of --l and --k")),
    };
    emit(json!({
        "command": "closure",
        "graph6": graph6::encode(&g),
        "l": result.l,
        "closed_graph6": graph6::encode(&result.closed_graph),
        "added_edges": result.added_edges,
        "edge_count": result.closed_graph.edge_count(),
        "is_complete": result.closed_graph.is_complete(),
    }))?;
    Ok(EXIT_OK)
}

fn conditions(g6: &str, k: usize, decide: bool, budget: u64) -> CmdResult {
    let g = read_graph(g6)?;
    let opts = EvaluateOptions {
        decide,
        budget,
        ..Default::default()
    };
    let report = evaluate(&g, k, opts)?;
    let code = match report.conclusion {
        Conclusion::KLeafConnected => EXIT_OK,
        Conclusion::NotKLeafConnected => EXIT_REFUTED,
        Conclusion::Inconclusive => EXIT_UNDECIDED,
    };
    emit(json!({
        "command": "conditions",
        "graph6": graph6::encode(&g),
        "report": report,
    }))?;
    Ok(code)
}

fn family(id: &str, n: Option<usize>, k: Option<usize>, t: Option<usize>) -> CmdResult {
    let g = build_family(FamilyId::from_tag(id, n, k, t)?)?;
    println!("{}", graph6::encode(&g));
    Ok(EXIT_OK)
}

fn spectrum(g6: &str, tol: f64) -> CmdResult {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(usage(format!("--tol must be positive, got {tol}")));
    }
    let g = read_graph(g6)?;
    let report = spectral_report::<f64>(&g, tol)?;
    emit(json!({
        "command": "spectrum",
        "graph6": graph6::encode(&g),
        "n": g.order(),
        "e": g.edge_count(),
        "spectrum": report,
    }))?;
    Ok(EXIT_OK)
}

fn scan(config: ScanConfig, out: Option<PathBuf>) -> CmdResult {
    let report = run_scan(&config)?;
    let s = &report.summary;
    let code = if s.anomalies > 0 {
        EXIT_REFUTED
    } else if s.budget_exhausted > 0 {
        EXIT_UNDECIDED
    } else {
        EXIT_OK
    };
    let mut text = report.to_json();
    text.push('\n');
    match out {
        Some(path) => {
            std::fs::write(&path, text)?;
            println!(
                "{} samples: {} confirmed, {} exceptions, {} budget exhausted, {} anomalies -> {}",
                s.sample_count,
                s.confirmed,
                s.exceptions,
                s.budget_exhausted,
                s.anomalies,
                path.display()
            );
        }
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(code)
}

fn verify(name: &str) -> CmdResult {
    let suites: Vec<Suite> = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::parse(name).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            usage(format!("unknown suite {name}; expected one of {} or all", names.join(", ")))
        })?]
    };
    let mut passed = true;
    for suite in suites {
        let report = suite.run()?;
        println!("{report}");
        passed &= report.passed;
    }
    Ok(if passed { EXIT_OK } else { EXIT_REFUTED })
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Decide { g6, k, budget, oracle } => decide(&g6, k, budget, oracle),
        Command::Closure { g6, l, k } => closure(&g6, l, k),
        Command::Conditions { g6, k, decide, budget } => conditions(&g6, k, decide, budget),
        Command::Family { id, n, k, t } => family(&id, n, k, t),
        Command::Spectrum { g6, tol } => spectrum(&g6, tol),
        Command::Scan {
            n,
            k,
            count,
            seed,
            json,
            edge_min,
            edges_free,
            budget,
            parallelism,
            timings,
        } => {
            let mut config = ScanConfig::new(n, k, count, seed);
            config.edge_min = edge_min;
            config.edges_free = edges_free;
            config.budget = budget;
            config.parallelism = parallelism;
            config.timings = timings;
            scan(config, json)
        }
        Command::Verify { suite } => verify(&suite),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("leafcon: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
