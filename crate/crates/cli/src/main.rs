use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use awlab::admissible::{
    adm_set, classify_by_criteria_bounded, classify_closed_form, dominant_cocharacters, s_adm_circ_bounded,
    FormMatch,
};
use awlab::alcove::{p1, BasicClass};
use awlab::emptiness::{empty_shortcut, nonempty_verdict, MAX_PAIR_RANK};
use awlab::reduction::{export_dot, reduction_graph, NodeStatus};
use awlab::{AffWeylElt, Cocharacter, Error};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

const DEFAULT_MAX_N: usize = 6;
const MAX_BOUND: i64 = 6;

#[derive(Parser)]
#[command(name = "awlab", version, about = "Affine Weyl group combinatorics for GL_n affine Deligne-Lusztig varieties")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Rank guard. Values above the default are unsupported territory.
    #[arg(long, env = "AWLAB_MAX_N", default_value_t = DEFAULT_MAX_N, global = true, hide_env_values = true)]
    max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide finite Coxeter type, by the emptiness criteria and by closed form.
    Classify(ClassifyArgs),
    /// Classify every dominant cocharacter in a box; JSON lines plus a summary.
    Sweep(SweepArgs),
    /// Decide whether X_w(b) is nonempty for basic b.
    Nonempty(ElementArgs),
    /// List Adm(λ), or SAdm(λ)° with --min-coset.
    Adm(AdmArgs),
    /// Build the Deligne-Lusztig reduction graph of X_w(b).
    Reduce(ReduceArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated, weakly decreasing.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    lambda: Vec<i64>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    n: usize,
    /// Entries range over [-bound, bound].
    #[arg(long)]
    bound: i64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Keep every member of a central class instead of the first one.
    #[arg(long)]
    no_normalize: bool,
    /// Write records here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ElementArgs {
    #[arg(long)]
    n: usize,
    /// Element text, e.g. `t[3,-1,-1]*p[2,1,3]`.
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    /// κ(b) of the basic class; defaults to κ(w).
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<i64>,
}

#[derive(Args)]
struct AdmArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    lambda: Vec<i64>,
    /// Must equal the sum of λ when given.
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<i64>,
    /// Restrict to minimal coset representatives in W₀t^λW₀.
    #[arg(long)]
    min_coset: bool,
    /// Keep elements whose finite part is a Coxeter element.
    #[arg(long)]
    coxeter_only: bool,
}

#[derive(Args)]
struct ReduceArgs {
    #[command(flatten)]
    element: ElementArgs,
    /// Write the graph in DOT format to this file.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Split-depth guard; defaults to ℓ(w) + 1.
    #[arg(long)]
    depth: Option<usize>,
}

enum Failure {
    Usage(String),
    Inconsistent(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Inconsistent(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = check_guard(&cli).and_then(|max_n| run(&cli, max_n));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("awlab: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Inconsistent(msg)) => {
            eprintln!("awlab: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("awlab: {e}");
            ExitCode::from(2)
        }
    }
}

fn check_guard(cli: &Cli) -> Result<usize, Failure> {
    let max_n = cli.max_n.min(MAX_PAIR_RANK);
    let n = match &cli.command {
        Command::Classify(a) => a.n,
        Command::Sweep(a) => a.n,
        Command::Nonempty(a) => a.n,
        Command::Adm(a) => a.n,
        Command::Reduce(a) => a.element.n,
    };
    if n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    if n > max_n {
        return Err(Error::guard("rank n", n, max_n).into());
    }
    Ok(max_n)
}

fn run(cli: &Cli, max_n: usize) -> CmdResult {
    let mut out = io::stdout().lock();
    match &cli.command {
        Command::Classify(a) => cmd_classify(a, max_n, cli.json, &mut out),
        Command::Sweep(a) => cmd_sweep(a, max_n),
        Command::Nonempty(a) => cmd_nonempty(a, cli.json, &mut out),
        Command::Adm(a) => cmd_adm(a, max_n, cli.json, &mut out),
        Command::Reduce(a) => cmd_reduce(a, cli.json, &mut out),
    }
}

fn cocharacter(n: usize, entries: &[i64]) -> Result<Cocharacter, Failure> {
    if entries.len() != n {
        return Err(Failure::Usage(format!("--lambda has {} entries, expected {n}", entries.len())));
    }
    let lambda = Cocharacter(entries.to_vec());
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(entries.to_vec()).into());
    }
    Ok(lambda)
}

fn element(args: &ElementArgs) -> Result<(AffWeylElt, BasicClass), Failure> {
    let w: AffWeylElt = args.w.parse()?;
    if w.n() != args.n {
        return Err(Error::DimensionMismatch(w.n(), args.n).into());
    }
    let b = BasicClass::new(args.kappa.unwrap_or_else(|| w.kappa()), args.n);
    Ok((w, b))
}

#[derive(Serialize)]
struct ClassifyRecord {
    n: usize,
    lambda: Cocharacter,
    by_criteria: bool,
    closed_form: bool,
    agree: bool,
    matched_form: Option<FormMatch>,
    /// Non-Coxeter strata found nonempty.
    witnesses: Vec<AffWeylElt>,
}

fn classify(lambda: &Cocharacter, max_n: usize) -> Result<ClassifyRecord, Error> {
    let by = classify_by_criteria_bounded(lambda, max_n)?;
    let closed = classify_closed_form(lambda)?;
    Ok(ClassifyRecord {
        n: lambda.n(),
        lambda: lambda.clone(),
        by_criteria: by.is_finite_coxeter,
        closed_form: closed.is_finite_coxeter,
        agree: by.is_finite_coxeter == closed.is_finite_coxeter,
        matched_form: closed.matched_form,
        witnesses: by.witnesses.into_iter().filter(|w| w.nonempty).map(|w| w.element).collect(),
    })
}

fn cmd_classify(a: &ClassifyArgs, max_n: usize, as_json: bool, out: &mut impl Write) -> CmdResult {
    let lambda = cocharacter(a.n, &a.lambda)?;
    let rec = classify(&lambda, max_n)?;
    if as_json {
        let mut v = serde_json::to_value(&rec).expect("serializable");
        v["value"] = json!(rec.by_criteria);
        writeln!(out, "{v}")?;
    } else {
        let form = match rec.matched_form {
            Some(m) => format!("{:?} (r={}, κ={}, shift={})", m.form, m.r, m.kappa, m.shift),
            None => "none".into(),
        };
        writeln!(out, "λ = {}", rec.lambda)?;
        writeln!(out, "finite Coxeter type: {}", rec.by_criteria)?;
        writeln!(out, "closed form: {} ({form})", rec.closed_form)?;
        writeln!(out, "agree: {}", rec.agree)?;
        for w in &rec.witnesses {
            writeln!(out, "nonempty non-Coxeter stratum: {w}")?;
        }
    }
    if !rec.agree {
        return Err(Failure::Inconsistent(format!("criteria and closed form disagree on {lambda}")));
    }
    Ok(())
}

fn sweep_grid(n: usize, bound: i64, normalize: bool) -> Vec<Cocharacter> {
    let all = dominant_cocharacters(n, -bound, bound);
    if !normalize {
        return all;
    }
    let mut seen = BTreeSet::new();
    all.into_iter().filter(|l| seen.insert(l.shifted(-l.entries()[n - 1]))).collect()
}

fn cmd_sweep(a: &SweepArgs, max_n: usize) -> CmdResult {
    if a.bound < 0 || a.bound > MAX_BOUND {
        return Err(Error::guard("entry bound", a.bound.unsigned_abs() as usize, MAX_BOUND as usize).into());
    }
    if a.jobs == 0 {
        return Err(Failure::Usage("--jobs must be positive".into()));
    }
    let grid = sweep_grid(a.n, a.bound, !a.no_normalize);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    // collect() keeps grid order, so output is deterministic for any --jobs.
    let records: Vec<ClassifyRecord> =
        pool.install(|| grid.par_iter().map(|l| classify(l, max_n)).collect::<Result<_, _>>())?;
    let disagreements: Vec<&Cocharacter> = records.iter().filter(|r| !r.agree).map(|r| &r.lambda).collect();
    let finite = records.iter().filter(|r| r.by_criteria).count();
    let mut buf = Vec::new();
    for r in &records {
        writeln!(buf, "{}", serde_json::to_string(r).expect("serializable"))?;
    }
    let summary = json!({
        "summary": {
            "n": a.n,
            "bound": a.bound,
            "normalized": !a.no_normalize,
            "records": records.len(),
            "finite_coxeter": finite,
            "disagreements": disagreements,
        }
    });
    writeln!(buf, "{summary}")?;
    match &a.output {
        Some(path) => fs::write(path, &buf)?,
        None => io::stdout().lock().write_all(&buf)?,
    }
    if !disagreements.is_empty() {
        return Err(Failure::Inconsistent(format!("{} disagreements", disagreements.len())));
    }
    Ok(())
}

fn cmd_nonempty(a: &ElementArgs, as_json: bool, out: &mut impl Write) -> CmdResult {
    let (w, b) = element(a)?;
    let verdict = nonempty_verdict(&w, &b)?;
    let shortcut = empty_shortcut(&w, &b);
    if shortcut && verdict.nonempty {
        return Err(Failure::Inconsistent(format!("emptiness shortcut and P-alcove criterion disagree on {w}")));
    }
    if as_json {
        let mut v = serde_json::to_value(&verdict).expect("serializable");
        v["length"] = json!(w.length());
        v["shortcut_empty"] = json!(shortcut);
        writeln!(out, "{v}")?;
    } else {
        writeln!(out, "w = {w}, ℓ(w) = {}, κ(b) = {}", w.length(), b.kappa)?;
        writeln!(out, "nonempty: {}", verdict.nonempty)?;
        writeln!(out, "emptiness shortcut applies: {shortcut}")?;
        for p in &verdict.witnesses {
            writeln!(out, "violating pair: w0 = {}, S' = {:?}", p.w0, p.levi.indices())?;
        }
    }
    Ok(())
}

fn cmd_adm(a: &AdmArgs, max_n: usize, as_json: bool, out: &mut impl Write) -> CmdResult {
    let lambda = cocharacter(a.n, &a.lambda)?;
    if let Some(k) = a.kappa {
        if k != lambda.sum() {
            return Err(Failure::Usage(format!("--kappa {k} does not match Σλ = {}", lambda.sum())));
        }
    }
    let set = if a.min_coset { s_adm_circ_bounded(&lambda, max_n)? } else { adm_set(&lambda)? };
    let elements: Vec<AffWeylElt> =
        set.into_iter().filter(|w| !a.coxeter_only || p1(w).is_coxeter()).collect();
    if as_json {
        writeln!(out, "{}", json!({ "lambda": lambda, "count": elements.len(), "elements": elements }))?;
    } else {
        for w in &elements {
            writeln!(out, "{w}")?;
        }
    }
    Ok(())
}

fn cmd_reduce(a: &ReduceArgs, as_json: bool, out: &mut impl Write) -> CmdResult {
    let (w, b) = element(&a.element)?;
    let depth = a.depth.unwrap_or(w.length() + 1);
    let graph = reduction_graph(&w, &b, depth)?;
    if let Some(path) = &a.dot {
        fs::write(path, export_dot(&graph))?;
    }
    if as_json {
        writeln!(out, "{}", serde_json::to_string(&graph).expect("serializable"))?;
        return Ok(());
    }
    match graph.root_node() {
        None => writeln!(out, "κ(w) = {} ≠ κ(b) = {}: X_w(b) is empty", w.kappa(), b.kappa)?,
        Some(root) => {
            let dim = match root.status {
                NodeStatus::Resolved => root.dimension.map_or("?".into(), |d| d.to_string()),
                NodeStatus::Unresolved => "unresolved".into(),
                NodeStatus::Empty => "-".into(),
            };
            writeln!(out, "w = {w}, ℓ(w) = {}", root.length)?;
            writeln!(out, "nonempty: {}", root.nonempty)?;
            writeln!(out, "dimension: {dim}")?;
            writeln!(out, "nodes: {}, edges: {}", graph.nodes.len(), graph.edges.len())?;
        }
    }
    Ok(())
}
