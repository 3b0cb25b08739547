//! Command line front end for the fuzzy argumentation solver.
//!
//! Four subcommands: `solve` enumerates extensions, `check` runs both the
//! direct and the recursive membership checker on one fuzzy set, `scc`
//! exports the condensation of the attack graph as DOT, and `bench` times
//! the engines against each other on a shared problem.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse error, 3 enumeration budget
//! exceeded, 4 engine output mismatch in `bench`. The `FAF_BUDGET`
//! environment variable overrides the candidate budget.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use faf_core::{
    breakpoint_lattice, compute_sccs, condensation, engine, engine_names, gf_check, grounded,
    is_admissible, is_complete, is_conflict_free, is_preferred, is_stable, parse_faf,
    parse_fuzzy_set, Degree, DegreeLattice, Engine, Faf, FafError, FafFormat, FuzzySet,
    SemanticsKind, SolveError, SolveOptions, StructuredFaf, TraceRecord, DEFAULT_BUDGET,
};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(msg: impl Display) -> Failure {
        Failure { code: EXIT_USAGE, message: msg.to_string() }
    }

    fn parse(msg: impl Display) -> Failure {
        Failure { code: EXIT_PARSE, message: msg.to_string() }
    }
}

type CmdResult<T> = Result<T, Failure>;

/// Solve and inspect fuzzy argumentation frameworks.
#[derive(Parser)]
#[command(name = "faf", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate extensions of a framework under one semantics
    Solve(SolveArgs),
    /// Check one fuzzy set with both the direct and the recursive checker
    Check(CheckArgs),
    /// Export the strongly connected component condensation as DOT
    Scc(SccArgs),
    /// Time the engines on one problem and require identical outputs
    Bench(BenchArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Framework file to read
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Generated framework: chain(k), cycle(n,degree), or layered(w,depth)
    #[arg(long = "gen", value_name = "SPEC")]
    generate: Option<String>,
    /// Input format; auto sniffs the extension, then the content
    #[arg(long, value_name = "auto|fapx|json", default_value = "auto")]
    format: String,
}

impl InputArgs {
    fn load(&self) -> CmdResult<Faf> {
        match (&self.input, &self.generate) {
            (Some(_), Some(_)) => {
                Err(Failure::usage("--input and --gen are mutually exclusive"))
            }
            (None, None) => Err(Failure::usage("one of --input or --gen is required")),
            (None, Some(spec)) => faf_core::gen::from_spec(spec).map_err(Failure::usage),
            (Some(path), None) => {
                let text = fs::read_to_string(path).map_err(|e| {
                    Failure::parse(format!("cannot read {}: {e}", path.display()))
                })?;
                let format = self.detect_format(path, &text)?;
                parse_faf(&text, format)
                    .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
            }
        }
    }

    fn detect_format(&self, path: &Path, text: &str) -> CmdResult<FafFormat> {
        match self.format.as_str() {
            "fapx" => Ok(FafFormat::Fapx),
            "json" => Ok(FafFormat::Structured),
            "auto" => Ok(match path.extension().and_then(|e| e.to_str()) {
                Some("fapx") => FafFormat::Fapx,
                Some("json") => FafFormat::Structured,
                _ if text.trim_start().starts_with('{') => FafFormat::Structured,
                _ => FafFormat::Fapx,
            }),
            other => Err(Failure::usage(format!(
                "unknown format `{other}`; expected auto, fapx, or json"
            ))),
        }
    }
}

#[derive(Clone, Copy)]
struct MaxExtensions(Option<usize>);

fn parse_max_extensions(s: &str) -> Result<MaxExtensions, String> {
    if s == "unlimited" {
        return Ok(MaxExtensions(None));
    }
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(MaxExtensions(Some(n))),
        _ => Err(format!("expected a positive count or `unlimited`, got `{s}`")),
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    source: InputArgs,
    /// Semantics to enumerate
    #[arg(long, value_name = "KIND")]
    semantics: String,
    /// Engine to run
    #[arg(long, value_name = "direct|scc", default_value = "scc")]
    engine: String,
    /// Degree lattice: breakpoints, or grid:<k> for multiples of 1/k
    #[arg(long, value_name = "SPEC", default_value = "breakpoints")]
    lattice: String,
    /// Cap on how many extensions are printed; the count stays exact
    #[arg(long, value_name = "N|unlimited", default_value = "10000",
          value_parser = parse_max_extensions)]
    max_extensions: MaxExtensions,
    /// Keep tolerable attacks instead of pruning them
    #[arg(long)]
    no_prune: bool,
    /// Write the decomposition trace to this file as JSON lines
    #[arg(long, value_name = "PATH")]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    source: InputArgs,
    /// Fuzzy set file to check, as {"id": "degree", ...}
    #[arg(long, value_name = "PATH")]
    extension: PathBuf,
    /// Semantics to check against
    #[arg(long, value_name = "KIND")]
    semantics: String,
    /// Optional membership cap, a fuzzy set file; defaults to the
    /// framework's own argument degrees
    #[arg(long, value_name = "PATH")]
    cap: Option<PathBuf>,
    /// Degree lattice used by the preferred checker
    #[arg(long, value_name = "SPEC", default_value = "breakpoints")]
    lattice: String,
}

#[derive(Args)]
struct SccArgs {
    #[command(flatten)]
    source: InputArgs,
    /// Write the DOT digraph here instead of standard output
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    source: InputArgs,
    /// Semantics to time
    #[arg(long, value_name = "KIND")]
    semantics: String,
    /// Degree lattice shared by all engines
    #[arg(long, value_name = "SPEC", default_value = "breakpoints")]
    lattice: String,
    /// Comma-separated engines to compare
    #[arg(long, value_name = "LIST", default_value = "direct,scc")]
    engines: String,
    /// Timed repetitions per engine; the median is reported
    #[arg(long, default_value_t = 5)]
    repetitions: usize,
    /// Keep tolerable attacks instead of pruning them
    #[arg(long)]
    no_prune: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Check(args) => cmd_check(args),
        Command::Scc(args) => cmd_scc(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_semantics(s: &str) -> CmdResult<SemanticsKind> {
    s.parse::<SemanticsKind>().map_err(|_| {
        Failure::usage(format!(
            "unknown semantics `{s}`; expected one of {}",
            SemanticsKind::ALL.map(|k| k.name()).join(", ")
        ))
    })
}

fn lookup_engine(name: &str) -> CmdResult<&'static dyn Engine> {
    engine(name).ok_or_else(|| {
        Failure::usage(format!(
            "unknown engine `{name}`; expected one of {}",
            engine_names().join(", ")
        ))
    })
}

fn resolve_lattice(spec: &str, faf: &Faf) -> CmdResult<DegreeLattice> {
    if spec == "breakpoints" {
        return Ok(breakpoint_lattice(faf));
    }
    if let Some(k) = spec.strip_prefix("grid:") {
        let k: usize = k
            .parse()
            .map_err(|_| Failure::usage(format!("grid step must be a count, got `{k}`")))?;
        return DegreeLattice::grid(k).map_err(Failure::usage);
    }
    Err(Failure::usage(format!(
        "unknown lattice `{spec}`; expected breakpoints or grid:<k>"
    )))
}

fn budget() -> CmdResult<u64> {
    match std::env::var("FAF_BUDGET") {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::usage(format!("FAF_BUDGET must be a count, got `{v}`"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_BUDGET),
        Err(e) => Err(Failure::usage(format!("FAF_BUDGET: {e}"))),
    }
}

fn solve_failure(err: SolveError) -> Failure {
    match err {
        SolveError::BudgetExceeded { .. } => {
            Failure { code: EXIT_BUDGET, message: err.to_string() }
        }
        SolveError::Unsupported { .. } => Failure::usage(err),
        SolveError::Framework(e) => framework_failure(e),
    }
}

fn framework_failure(err: FafError) -> Failure {
    match err {
        FafError::UnknownArgument(_) | FafError::NotASubset(_) => Failure::usage(err),
        other => Failure::parse(other),
    }
}

fn print_json(report: &impl Serialize) {
    let text = serde_json::to_string_pretty(report).expect("report serializes");
    println!("{text}");
}

fn duration_ms(d: Duration) -> f64 {
    (d.as_nanos() as f64) / 1e6
}

#[derive(Serialize)]
struct SolveReport {
    #[serde(flatten)]
    framework: StructuredFaf,
    semantics: &'static str,
    engine: &'static str,
    lattice: String,
    max_extensions: Option<usize>,
    prune: bool,
    extensions: Vec<BTreeMap<String, String>>,
    count: usize,
    truncated: bool,
    elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<String>,
}

fn cmd_solve(args: SolveArgs) -> CmdResult<()> {
    let faf = args.source.load()?;
    let kind = parse_semantics(&args.semantics)?;
    let eng = lookup_engine(&args.engine)?;
    let lattice = resolve_lattice(&args.lattice, &faf)?;
    let opts = SolveOptions {
        budget: budget()?,
        prune: !args.no_prune,
        trace: args.trace.is_some(),
    };
    let c = faf.arguments();
    let start = Instant::now();
    let solution = eng
        .enumerate(&faf, &c, kind, &lattice, &opts)
        .map_err(solve_failure)?;
    let elapsed = start.elapsed();
    if let Some(path) = &args.trace {
        write_trace(path, &solution.trace)?;
    }
    let total = solution.extensions.len();
    let shown = args.max_extensions.0.unwrap_or(total).min(total);
    let report = SolveReport {
        framework: StructuredFaf::of(&faf),
        semantics: kind.name(),
        engine: eng.name(),
        lattice: args.lattice.clone(),
        max_extensions: args.max_extensions.0,
        prune: !args.no_prune,
        extensions: solution
            .extensions
            .iter()
            .take(shown)
            .map(FuzzySet::to_string_map)
            .collect(),
        count: total,
        truncated: shown < total,
        elapsed_ms: duration_ms(elapsed),
        trace: args.trace.as_ref().map(|p| p.display().to_string()),
    };
    print_json(&report);
    Ok(())
}

fn write_trace(path: &Path, records: &[TraceRecord]) -> CmdResult<()> {
    let mut out = String::new();
    for record in records {
        out.push_str(&serde_json::to_string(record).expect("trace record serializes"));
        out.push('\n');
    }
    fs::write(path, out)
        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn read_fuzzy_set(path: &Path) -> CmdResult<FuzzySet> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))?;
    parse_fuzzy_set(&text).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct CheckReport {
    semantics: &'static str,
    extension: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cap: Option<BTreeMap<String, String>>,
    direct: bool,
    gf: Option<bool>,
}

fn cmd_check(args: CheckArgs) -> CmdResult<()> {
    let faf = args.source.load()?;
    let kind = parse_semantics(&args.semantics)?;
    let lattice = resolve_lattice(&args.lattice, &faf)?;
    let e = read_fuzzy_set(&args.extension)?;
    let cap = args.cap.as_ref().map(|p| read_fuzzy_set(p)).transpose()?;
    let c = cap.clone().unwrap_or_else(|| faf.arguments());

    // unknown arguments and degrees above the framework's are usage errors,
    // not verdicts
    for (id, d) in e.iter() {
        match faf.index_of(id) {
            None => {
                return Err(Failure::usage(format!(
                    "extension mentions unknown argument `{id}`"
                )))
            }
            Some(i) if d > faf.arg_degree(i) => {
                return Err(Failure::usage(format!(
                    "extension degree {d} for `{id}` exceeds the argument's degree {}",
                    faf.arg_degree(i)
                )))
            }
            Some(_) => {}
        }
    }

    let direct = match kind {
        SemanticsKind::ConflictFree => is_conflict_free(&faf, &e),
        SemanticsKind::Admissible => is_admissible(&faf, &c, &e),
        SemanticsKind::Complete => is_complete(&faf, &c, &e),
        SemanticsKind::Preferred => is_preferred(&faf, &c, &e, &lattice),
        SemanticsKind::Stable => is_stable(&faf, &e),
        SemanticsKind::Grounded => Ok(e == grounded(&faf, &c)),
    }
    .map_err(framework_failure)?;

    let gf = match kind {
        SemanticsKind::ConflictFree | SemanticsKind::Stable => None,
        _ => Some(gf_check(&faf, &c, &e, kind, &lattice).map_err(solve_failure)?),
    };

    let report = CheckReport {
        semantics: kind.name(),
        extension: e.to_string_map(),
        cap: cap.as_ref().map(FuzzySet::to_string_map),
        direct,
        gf,
    };
    print_json(&report);
    Ok(())
}

fn dot_condensation(faf: &Faf) -> String {
    let partition = compute_sccs(faf);
    let cond = condensation(faf, &partition);
    let mut out = String::from("digraph condensation {\n  rankdir=LR;\n  node [shape=box];\n");
    for (i, members) in partition.components().enumerate() {
        let label = members
            .iter()
            .map(|&m| format!("{}:{}", faf.arg_id(m), faf.arg_degree(m)))
            .collect::<Vec<_>>()
            .join("\\n");
        out.push_str(&format!("  s{i} [label=\"{label}\"];\n"));
    }
    for &(from, to) in cond.edges() {
        let mut strongest: Option<Degree> = None;
        for attack in faf.attacks() {
            if partition.component_of(attack.from) == from
                && partition.component_of(attack.to) == to
            {
                strongest = Some(strongest.map_or(attack.degree, |d| d.max(attack.degree)));
            }
        }
        let label = strongest.expect("condensation edge has a witness attack");
        out.push_str(&format!("  s{from} -> s{to} [label=\"{label}\"];\n"));
    }
    out.push_str("}\n");
    out
}

fn cmd_scc(args: SccArgs) -> CmdResult<()> {
    let faf = args.source.load()?;
    let dot = dot_condensation(&faf);
    match &args.output {
        Some(path) => fs::write(path, dot)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{dot}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct EngineTiming {
    engine: &'static str,
    median_ms: f64,
}

#[derive(Serialize)]
struct BenchReport {
    semantics: &'static str,
    lattice: String,
    repetitions: usize,
    count: usize,
    engines: Vec<EngineTiming>,
    #[serde(skip_serializing_if = "Option::is_none")]
    speedup: Option<f64>,
}

fn median_ms(times: &mut [Duration]) -> f64 {
    times.sort();
    let mid = times.len() / 2;
    if times.len() % 2 == 1 {
        duration_ms(times[mid])
    } else {
        (duration_ms(times[mid - 1]) + duration_ms(times[mid])) / 2.0
    }
}

fn cmd_bench(args: BenchArgs) -> CmdResult<()> {
    let faf = args.source.load()?;
    let kind = parse_semantics(&args.semantics)?;
    let lattice = resolve_lattice(&args.lattice, &faf)?;
    if args.repetitions == 0 {
        return Err(Failure::usage("--repetitions must be at least 1"));
    }
    let engines: Vec<&'static dyn Engine> = args
        .engines
        .split(',')
        .map(|name| lookup_engine(name.trim()))
        .collect::<CmdResult<_>>()?;
    if engines.is_empty() {
        return Err(Failure::usage("--engines needs at least one engine"));
    }
    let opts = SolveOptions { budget: budget()?, prune: !args.no_prune, trace: false };
    let c = faf.arguments();

    let mut timings = Vec::new();
    let mut outputs = Vec::new();
    for eng in &engines {
        let mut times = Vec::with_capacity(args.repetitions);
        let mut solution = None;
        for _ in 0..args.repetitions {
            let start = Instant::now();
            let s = eng
                .enumerate(&faf, &c, kind, &lattice, &opts)
                .map_err(solve_failure)?;
            times.push(start.elapsed());
            solution = Some(s);
        }
        timings.push(EngineTiming {
            engine: eng.name(),
            median_ms: median_ms(&mut times),
        });
        outputs.push(solution.expect("at least one repetition ran").extensions);
    }

    for (i, output) in outputs.iter().enumerate().skip(1) {
        if output != &outputs[0] {
            let witness = outputs[0]
                .iter()
                .find(|e| !output.contains(e))
                .or_else(|| output.iter().find(|e| !outputs[0].contains(e)));
            return Err(Failure {
                code: EXIT_MISMATCH,
                message: format!(
                    "engines {} and {} disagree ({} vs {} extensions); first differing \
                     extension: {}",
                    engines[0].name(),
                    engines[i].name(),
                    outputs[0].len(),
                    output.len(),
                    witness.expect("unequal sets differ somewhere"),
                ),
            });
        }
    }

    let speedup = (engines.len() == 2).then(|| {
        let fast = timings[1].median_ms.max(1e-6);
        timings[0].median_ms / fast
    });
    let report = BenchReport {
        semantics: kind.name(),
        lattice: args.lattice.clone(),
        repetitions: args.repetitions,
        count: outputs[0].len(),
        engines: timings,
        speedup,
    };
    print_json(&report);
    Ok(())
}
