//! The `srg` command line.

use crate::census::parallel_census;
use crate::format::{affine_text, aligned, decimal, key_graph6, markdown, substitute};
use crate::patterns::{parse_pattern, pattern_name};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;
use srg_core::algebra::Symbol;
use srg_core::equations::{build_system, Mode};
use srg_core::geobound::{cauchy_schwarz_bound, Direction};
use srg_core::graph::graph6::graph6_decode;
use srg_core::graph::{canonical_key, enumerate_graphs, GraphClass, SmallGraph};
use srg_core::mooreaut::{counts_mod_p, has_automorphism_of_order, A1Formula, BASE_TABLE, PETERSEN_FREE_NOTE};
use srg_core::oracle::{build_fixture, cross_validate, FixtureSrg, FIXTURE_NAMES};
use srg_core::solve::{bound_free_parameter, solve_counts_with, ConcreteTable, ParameterBounds, SolutionTable};
use srg_core::spectra::{feasibility_report, spectrum, tf_family_params, FeasibilityReport, SrgParams, Test};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;

const SCHEMA_PREFIX: &str = "srg-tools";
const SCHEMA_VERSION: u32 = 1;

fn schema(kind: &str) -> String {
    format!("{SCHEMA_PREFIX}.{kind}/{SCHEMA_VERSION}")
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments; exit code 2.
    Usage(String),
    /// Rank mismatch, oracle mismatch or another failed check; exit code 1.
    Inconsistent(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Inconsistent(_) | CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Inconsistent(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(m: impl Into<String>) -> CliError {
    CliError::Usage(m.into())
}

#[derive(Parser, Debug)]
#[command(name = "srg", version, about = "Induced-subgraph counts and feasibility tests for strongly regular graphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Directory that relative `--output` paths are resolved against.
    #[arg(long, global = true, env = "SRG_OUTPUT_DIR")]
    pub output_dir: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Suppress progress messages.
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    General,
    TriangleFree,
    Moore,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassArg {
    General,
    TriangleFree,
    /// No triangles and no 4-cycles.
    C3c4Free,
}

impl ClassArg {
    fn class(self) -> GraphClass {
        match self {
            ClassArg::General => GraphClass::General,
            ClassArg::TriangleFree => GraphClass::TriangleFree,
            ClassArg::C3c4Free => GraphClass::TriangleAndQuadrangleFree,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct ModeSelect {
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    /// Degree for `--mode moore`.
    #[arg(long, default_value_t = 57)]
    pub degree: u32,
}

impl ModeSelect {
    fn mode(&self) -> Result<Mode> {
        Ok(match self.mode {
            ModeArg::General => Mode::General,
            ModeArg::TriangleFree => Mode::TriangleFree,
            ModeArg::Moore => {
                if !matches!(self.degree, 2 | 3 | 7 | 57) {
                    return Err(usage(format!("no Moore graph parameters with degree {}", self.degree)));
                }
                Mode::Moore { k: self.degree }
            }
        })
    }
}

/// A single parameter set, given directly or as a family member.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct ParamSource {
    /// `n,k,lambda,mu`.
    #[arg(long)]
    pub params: Option<String>,
    /// `N,M` selecting a member of the two-parameter triangle-free family.
    #[arg(long)]
    pub family: Option<String>,
}

impl ParamSource {
    fn resolve(&self) -> Result<SrgParams> {
        match (&self.params, &self.family) {
            (Some(p), None) => parse_params(p),
            (None, Some(f)) => {
                let [n, m] = parse_ints::<2>(f)?;
                let member = tf_family_params(n, m);
                member.params.ok_or_else(|| usage(format!("family member ({n},{m}) has non-integral order {}", member.n)))
            }
            _ => Err(usage("give exactly one of --params and --family")),
        }
    }
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Non-isomorphic graphs of one order as graph6 lines.
    Enumerate {
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value = "general")]
        class: ClassArg,
        /// Read graph6 lines from standard input and print one canonical
        /// representative per isomorphism class in the chosen class.
        #[arg(long, conflicts_with = "order")]
        stdin: bool,
    },
    /// The linear system relating counts of one order to the previous one.
    System {
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        mode: ModeSelect,
    },
    /// Solves the systems up to an order and reports the free parameters.
    Solve {
        #[command(flatten)]
        mode: ModeSelect,
        #[arg(long)]
        max_order: usize,
        /// Bound the free parameters at these parameters (implied for Moore mode).
        #[arg(long)]
        params: Option<String>,
    },
    /// Counts at concrete parameters, with optional values for free parameters.
    Counts {
        #[command(flatten)]
        source: ParamSource,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long)]
        max_order: Option<usize>,
        /// `SYMBOL=VALUE`, the symbol given as `P1` or by graph name (`K3,3`, `petersen`).
        #[arg(long = "free")]
        free: Vec<String>,
    },
    /// Cauchy-Schwarz bounds on a free count from harmonic analysis.
    Bounds {
        #[command(flatten)]
        source: ParamSource,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Pattern `X`; repeat for several rows.
        #[arg(long = "x", required = true)]
        x: Vec<String>,
        /// Pattern `Y` paired with `X` (default `P3` for triangle-free sets, `C5` for Moore sets).
        #[arg(long = "y")]
        y: Option<String>,
        /// Graph whose count is bounded (default: the only free parameter).
        #[arg(long)]
        target: Option<String>,
        /// Gegenbauer degree; repeat for several rows.
        #[arg(long = "t", required = true)]
        t: Vec<u32>,
    },
    /// Residues of Moore counts modulo a prime and the automorphism tables.
    MooreAut {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 57)]
        degree: u32,
    },
    /// Integrality, Krein, absolute-bound and conference tests.
    Feasibility {
        #[arg(long, group = "feasibility_source")]
        params: Option<String>,
        /// `N1..N2`: every primitive parameter set with `N1 <= n <= N2`.
        #[arg(long, group = "feasibility_source")]
        range: Option<String>,
        #[arg(long, group = "feasibility_source")]
        family: Option<String>,
        /// With `--range`, only `lambda = 0`.
        #[arg(long, requires = "range")]
        triangle_free: bool,
        /// With `--range`, only parameter sets passing every test.
        #[arg(long, requires = "range")]
        feasible_only: bool,
    },
    /// Brute-force induced-subgraph census of a fixture graph.
    Census {
        #[arg(long)]
        fixture: String,
        #[arg(long)]
        order: usize,
    },
    /// Compares symbolic counts with censuses of the fixture graphs.
    Verify {
        /// Fixture name, or `all`.
        #[arg(long, default_value = "all")]
        fixture: String,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        #[arg(long, value_enum, default_value = "triangle-free")]
        mode: ModeArg,
    },
}

/// A parsed and validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
    pub threads: Option<usize>,
    pub quiet: bool,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let output = match (cli.global.output, cli.global.output_dir) {
            (Some(p), Some(dir)) if p.is_relative() => Some(dir.join(p)),
            (p, _) => p,
        };
        if cli.global.threads == Some(0) {
            return Err(usage("--threads must be positive"));
        }
        let config = RunConfig { command: cli.command, format: cli.global.format, output, threads: cli.global.threads, quiet: cli.global.quiet };
        config.validate()?;
        Ok(config)
    }

    /// Checks argument values that clap cannot, before any computation.
    fn validate(&self) -> Result<()> {
        match &self.command {
            Command::Enumerate { order, stdin, class } => {
                if !stdin && order.is_none() {
                    return Err(usage("enumerate needs --order or --stdin"));
                }
                if let Some(o) = order {
                    let max = class.class().max_enumeration_order();
                    if !(1..=max).contains(o) {
                        return Err(usage(format!("order {o} outside 1..={max} for this class")));
                    }
                }
            }
            Command::System { order, mode } => {
                let m = mode.mode()?;
                if !(3..=m.max_order()).contains(order) {
                    return Err(usage(format!("order {order} outside 3..={} for {} mode", m.max_order(), m.name())));
                }
            }
            Command::Solve { mode, max_order, params } => {
                let m = mode.mode()?;
                check_order(*max_order, m)?;
                if let Some(p) = params {
                    params_for_mode(&parse_params(p)?, m)?;
                }
            }
            Command::Counts { source, mode, max_order, free } => {
                let p = source.resolve()?;
                let m = mode_or_auto(*mode, &p)?;
                check_order(max_order.unwrap_or(default_counts_order(m)), m)?;
                for f in free {
                    parse_assignment(f)?;
                }
            }
            Command::Bounds { source, mode, x, y, target, .. } => {
                let p = source.resolve()?;
                let m = mode_or_auto(*mode, &p)?;
                let yg = parse_pattern(&default_pairing(m, y.as_deref())?).map_err(usage)?;
                if let Some(t) = target {
                    parse_pattern(t).map_err(usage)?;
                }
                for xs in x {
                    let xg = parse_pattern(xs).map_err(usage)?;
                    check_order(xg.order().max(yg.order()) + yg.order(), m)?;
                }
            }
            Command::MooreAut { p, order, degree } => {
                ModeSelect { mode: ModeArg::Moore, degree: *degree }.mode()?;
                if *p < 2 || !(2..*p).take_while(|d| d * d <= *p).all(|d| p % d != 0) {
                    return Err(usage(format!("{p} is not a prime")));
                }
                check_order(*order, Mode::Moore { k: *degree })?;
            }
            Command::Feasibility { params, range, family, .. } => match (params, range, family) {
                (Some(p), None, None) => {
                    parse_params(p)?;
                }
                (None, Some(r), None) => {
                    parse_range(r)?;
                }
                (None, None, Some(f)) => {
                    parse_ints::<2>(f)?;
                }
                _ => return Err(usage("give exactly one of --params, --range and --family")),
            },
            Command::Census { fixture, order } => {
                fixture_by_name(fixture)?;
                if !(1..=srg_core::oracle::MAX_CENSUS_ORDER).contains(order) {
                    return Err(usage(format!("census order {order} outside 1..={}", srg_core::oracle::MAX_CENSUS_ORDER)));
                }
            }
            Command::Verify { fixture, max_order, .. } => {
                if fixture != "all" {
                    fixture_by_name(fixture)?;
                }
                if !(1..=6).contains(max_order) {
                    return Err(usage("verify supports orders 1..=6"));
                }
            }
        }
        Ok(())
    }
}

fn check_order(order: usize, mode: Mode) -> Result<()> {
    if order == 0 || order > mode.max_order() {
        return Err(usage(format!("order {order} outside 1..={} for {} mode", mode.max_order(), mode.name())));
    }
    Ok(())
}

fn default_counts_order(mode: Mode) -> usize {
    mode.max_order().min(6)
}

fn parse_ints<const N: usize>(text: &str) -> Result<[i64; N]> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(usage(format!("expected {N} comma-separated integers, got {text:?}")));
    }
    let mut out = [0i64; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.parse().map_err(|_| usage(format!("not an integer: {p:?}")))?;
    }
    Ok(out)
}

pub fn parse_params(text: &str) -> Result<SrgParams> {
    let [n, k, l, m] = parse_ints::<4>(text)?;
    SrgParams::new(n, k, l, m).map_err(|e| usage(format!("invalid parameters ({n},{k},{l},{m}): {e}")))
}

fn parse_range(text: &str) -> Result<(i64, i64)> {
    let (a, b) = text.split_once("..").ok_or_else(|| usage(format!("expected N1..N2, got {text:?}")))?;
    let a: i64 = a.trim().parse().map_err(|_| usage(format!("bad range start {a:?}")))?;
    let b: i64 = b.trim().parse().map_err(|_| usage(format!("bad range end {b:?}")))?;
    if a < 1 || a > b {
        return Err(usage(format!("empty range {text:?}")));
    }
    if b > 2000 {
        return Err(usage("range end above 2000"));
    }
    Ok((a, b))
}

fn parse_assignment(text: &str) -> Result<(String, BigRational)> {
    let (name, value) = text.rsplit_once('=').ok_or_else(|| usage(format!("expected SYMBOL=VALUE, got {text:?}")))?;
    let value: BigInt = value.trim().parse().map_err(|_| usage(format!("not an integer: {value:?}")))?;
    Ok((name.trim().to_string(), BigRational::from_integer(value)))
}

fn fixture_by_name(name: &str) -> Result<FixtureSrg> {
    build_fixture(name).ok_or_else(|| usage(format!("unknown fixture {name:?}; known: {}", FIXTURE_NAMES.join(", "))))
}

/// The solver mode whose universe covers the parameters.
fn mode_for(p: &SrgParams) -> Mode {
    match (p.k, p.lambda, p.mu) {
        (k @ (3 | 7 | 57), 0, 1) => Mode::Moore { k: k as u32 },
        (_, 0, _) => Mode::TriangleFree,
        _ => Mode::General,
    }
}

/// `mode` when given (checked against `p`), else [`mode_for`].
fn mode_or_auto(mode: Option<ModeArg>, p: &SrgParams) -> Result<Mode> {
    let m = match mode {
        None => return Ok(mode_for(p)),
        Some(ModeArg::General) => Mode::General,
        Some(ModeArg::TriangleFree) => Mode::TriangleFree,
        Some(ModeArg::Moore) => Mode::Moore { k: u32::try_from(p.k).map_err(|_| usage("degree out of range"))? },
    };
    params_for_mode(p, m)?;
    Ok(m)
}

fn default_pairing(mode: Mode, y: Option<&str>) -> Result<String> {
    match (y, mode) {
        (Some(y), _) => Ok(y.to_string()),
        (None, Mode::TriangleFree) => Ok("P3".into()),
        (None, Mode::Moore { .. }) => Ok("C5".into()),
        (None, Mode::General) => Err(usage("--y is required in general mode")),
    }
}

fn params_for_mode(p: &SrgParams, mode: Mode) -> Result<()> {
    if srg_core::solve::mode_accepts(mode, p) {
        Ok(())
    } else {
        Err(usage(format!("parameters {p} do not fit {} mode", mode.name())))
    }
}

fn moore_params(k: u32) -> SrgParams {
    SrgParams::from_klm(k as i64, 0, 1).expect("Moore parameters are valid")
}

/// Parses `argv` (including the program name) and runs it, writing results
/// to `out` unless `--output` is given.
pub fn run_with<I, S>(argv: I, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<()>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            write!(out, "{}", e.render())?;
            return Ok(());
        }
        Err(e) => return Err(usage(e.render().to_string())),
    };
    let config = RunConfig::from_cli(cli)?;
    if let Some(n) = config.threads {
        // Fails harmlessly if the pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match &config.output {
        Some(path) => {
            let mut file = io::BufWriter::new(File::create(path)?);
            execute(&config, input, &mut file)?;
            file.flush()?;
            Ok(())
        }
        None => execute(&config, input, out),
    }
}

fn progress(config: &RunConfig, msg: impl fmt::Display) {
    if !config.quiet {
        eprintln!("{msg}");
    }
}

fn execute(config: &RunConfig, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<()> {
    match &config.command {
        Command::Enumerate { order, class, stdin } => enumerate(config, *order, class.class(), *stdin, input, out),
        Command::System { order, mode } => system(config, *order, mode.mode()?, out),
        Command::Solve { mode, max_order, params } => solve(config, mode.mode()?, *max_order, params.as_deref(), out),
        Command::Counts { source, mode, max_order, free } => {
            let p = source.resolve()?;
            counts(config, &p, mode_or_auto(*mode, &p)?, *max_order, free, out)
        }
        Command::Bounds { source, mode, x, y, target, t } => {
            let p = source.resolve()?;
            let m = mode_or_auto(*mode, &p)?;
            bounds(config, &p, m, x, &default_pairing(m, y.as_deref())?, target.as_deref(), t, out)
        }
        Command::MooreAut { p, order, degree } => moore_aut(config, *p, *order, *degree, out),
        Command::Feasibility { params, range, family, triangle_free, feasible_only } => {
            feasibility(config, params.as_deref(), range.as_deref(), family.as_deref(), *triangle_free, *feasible_only, out)
        }
        Command::Census { fixture, order } => census(config, fixture, *order, out),
        Command::Verify { fixture, max_order, mode } => verify(config, fixture, *max_order, *mode, out),
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn solve_table(config: &RunConfig, mode: Mode, max_order: usize) -> Result<SolutionTable> {
    progress(config, format!("solving {} mode through order {max_order}", mode.name()));
    solve_counts_with(max_order, mode, |r| {
        progress(config, format!("  order {}: {} equations, {} variables, rank {}", r.order, r.equations, r.variables, r.rank));
    })
    .map_err(|e| CliError::Inconsistent(format!("solve failed: {e}")))
}

fn concrete(table: &SolutionTable, p: &SrgParams) -> Result<ConcreteTable> {
    table.at_params(p).map_err(|e| CliError::Inconsistent(format!("cannot evaluate at {p}: {e}")))
}

fn symbol_label(s: &Symbol) -> String {
    match pattern_name(&s.graph) {
        Some(n) => n,
        None => key_graph6(&s.graph),
    }
}

fn display_key(k: &srg_core::graph::CanonicalKey) -> String {
    match pattern_name(k) {
        Some(n) => format!("{} ({n})", key_graph6(k)),
        None => key_graph6(k),
    }
}

// ---- enumerate

fn enumerate(config: &RunConfig, order: Option<usize>, class: GraphClass, stdin: bool, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<()> {
    let graphs: Vec<SmallGraph> = if stdin {
        let mut keys = BTreeSet::new();
        for (i, line) in input.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let g = graph6_decode(line.as_bytes()).map_err(|e| usage(format!("line {}: {e}", i + 1)))?;
            if class.contains(&g) {
                keys.insert(canonical_key(&g));
            }
        }
        keys.into_iter().map(|k| k.to_graph()).collect()
    } else {
        let o = order.expect("validated");
        enumerate_graphs(o, class).map_err(|e| usage(e.to_string()))?
    };
    progress(config, format!("{} graphs", graphs.len()));
    let codes: Vec<String> = graphs.iter().map(srg_core::graph::graph6::graph6_encode).collect();
    match config.format {
        Some(Format::Json) => {
            #[derive(Serialize)]
            struct Out<'a> {
                schema: String,
                class: String,
                count: usize,
                graphs: &'a [String],
            }
            write_json(out, &Out { schema: schema("enumerate"), class: format!("{class:?}"), count: codes.len(), graphs: &codes })
        }
        _ => {
            for c in &codes {
                writeln!(out, "{c}")?;
            }
            Ok(())
        }
    }
}

// ---- system

#[derive(Serialize)]
struct SystemRowOut {
    kind: &'static str,
    source: Option<String>,
    orbit: Option<usize>,
    representative: Option<u16>,
    degree: Option<usize>,
    coefficients: Vec<(usize, String)>,
    lhs: String,
}

#[derive(Serialize)]
struct SystemOut {
    schema: String,
    mode: &'static str,
    degree: Option<u32>,
    order: usize,
    equations: usize,
    equations_without_total: usize,
    variables: Vec<String>,
    rows: Vec<SystemRowOut>,
}

fn mode_degree(mode: Mode) -> Option<u32> {
    match mode {
        Mode::Moore { k } => Some(k),
        _ => None,
    }
}

fn system(config: &RunConfig, order: usize, mode: Mode, out: &mut dyn Write) -> Result<()> {
    let table = solve_table(config, mode, order - 1)?;
    let lower = table.order(order - 1).expect("solved").as_map();
    let sys = build_system(order, mode, &lower).map_err(|e| CliError::Inconsistent(e.to_string()))?;
    let rows = sys
        .rows
        .iter()
        .map(|r| SystemRowOut {
            kind: r.provenance.kind.name(),
            source: r.provenance.source.as_ref().map(key_graph6),
            orbit: r.provenance.orbit,
            representative: r.provenance.representative,
            degree: r.provenance.degree,
            coefficients: r.coeffs.iter().map(|(c, v)| (*c, v.to_string())).collect(),
            lhs: r.lhs.to_text(),
        })
        .collect();
    let doc = SystemOut {
        schema: schema("system"),
        mode: mode.name(),
        degree: mode_degree(mode),
        order,
        equations: sys.equation_count(),
        equations_without_total: sys.equation_count_without_total(),
        variables: sys.keys.iter().map(key_graph6).collect(),
        rows,
    };
    match config.format {
        None | Some(Format::Json) => write_json(out, &doc),
        Some(Format::Csv) => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["row", "kind", "source", "orbit", "coefficients", "lhs"])?;
            for (i, r) in doc.rows.iter().enumerate() {
                let coeffs: Vec<String> = r.coefficients.iter().map(|(c, v)| format!("{c}:{v}")).collect();
                w.write_record([
                    i.to_string(),
                    r.kind.to_string(),
                    r.source.clone().unwrap_or_default(),
                    r.orbit.map(|o| o.to_string()).unwrap_or_default(),
                    coeffs.join(" "),
                    r.lhs.clone(),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
        Some(Format::Table) => {
            writeln!(out, "order {order}, {} mode: {} equations ({} without the total row), {} variables", mode.name(), doc.equations, doc.equations_without_total, doc.variables.len())?;
            Ok(())
        }
    }
}

// ---- solve

#[derive(Serialize)]
struct ReportOut {
    order: usize,
    equations: usize,
    equations_without_total: usize,
    variables: usize,
    rank: usize,
    free: usize,
    new_parameters: Vec<String>,
}

#[derive(Serialize)]
struct FreeOut {
    symbol: String,
    name: String,
    graph6: String,
    order: usize,
    designated: bool,
}

#[derive(Serialize)]
struct CountOut {
    order: usize,
    graph6: String,
    expression: String,
    constant: bool,
}

#[derive(Serialize)]
struct BoundOut {
    symbol: String,
    name: String,
    params: String,
    lower: String,
    upper: Option<String>,
    raw_lower: String,
    raw_upper: Option<String>,
    congruence: Option<(String, String)>,
    refined_lower: Option<String>,
    refined_upper: Option<String>,
    lower_binding: Vec<String>,
    upper_binding: Vec<String>,
}

impl BoundOut {
    fn new(b: &ParameterBounds, p: &SrgParams) -> Self {
        BoundOut {
            symbol: b.symbol.name(),
            name: symbol_label(&b.symbol),
            params: p.to_string(),
            lower: b.lower.to_string(),
            upper: b.upper.as_ref().map(|u| u.to_string()),
            raw_lower: b.raw_lower.to_string(),
            raw_upper: b.raw_upper.as_ref().map(|u| u.to_string()),
            congruence: b.congruence.as_ref().map(|(r, m)| (r.to_string(), m.to_string())),
            refined_lower: b.refined_lower.as_ref().map(|u| u.to_string()),
            refined_upper: b.refined_upper.as_ref().map(|u| u.to_string()),
            lower_binding: b.lower_binding.iter().map(key_graph6).collect(),
            upper_binding: b.upper_binding.iter().map(key_graph6).collect(),
        }
    }

    fn line(&self) -> String {
        let upper = self.upper.as_deref().unwrap_or("inf");
        let mut s = format!("bound {} ({}) in [{}, {}] at {}", self.symbol, self.name, self.lower, upper, self.params);
        if let Some((r, m)) = &self.congruence {
            if m != "1" {
                s.push_str(&format!("; congruent to {r} mod {m}, so in [{}, {}]", self.refined_lower.as_deref().unwrap_or("-"), self.refined_upper.as_deref().unwrap_or("inf")));
            }
        } else {
            s.push_str("; integrality cannot be met");
        }
        s
    }
}

#[derive(Serialize)]
struct SolveOut {
    schema: String,
    mode: &'static str,
    degree: Option<u32>,
    max_order: usize,
    reports: Vec<ReportOut>,
    free_parameters: Vec<FreeOut>,
    bounds: Vec<BoundOut>,
    counts: Vec<CountOut>,
}

fn solve(config: &RunConfig, mode: Mode, max_order: usize, params: Option<&str>, out: &mut dyn Write) -> Result<()> {
    let table = solve_table(config, mode, max_order)?;
    let at = match (params, mode) {
        (Some(p), _) => Some(parse_params(p)?),
        (None, Mode::Moore { k }) => Some(moore_params(k)),
        (None, _) => None,
    };
    let mut bounds = Vec::new();
    if let Some(p) = at {
        let ct = concrete(&table, &p)?;
        for f in &table.free_parameters {
            let b = bound_free_parameter(&ct, f.symbol, &BTreeMap::new());
            bounds.push(BoundOut::new(&b, &p));
        }
    }
    let doc = SolveOut {
        schema: schema("solve"),
        mode: mode.name(),
        degree: mode_degree(mode),
        max_order,
        reports: table
            .reports
            .iter()
            .map(|r| ReportOut {
                order: r.order,
                equations: r.equations,
                equations_without_total: r.equations_without_total,
                variables: r.variables,
                rank: r.rank,
                free: r.free(),
                new_parameters: r.new_parameters.iter().map(Symbol::name).collect(),
            })
            .collect(),
        free_parameters: table
            .free_parameters
            .iter()
            .map(|f| FreeOut { symbol: f.symbol.name(), name: symbol_label(&f.symbol), graph6: key_graph6(&f.symbol.graph), order: f.order, designated: f.designated })
            .collect(),
        bounds,
        counts: table
            .orders
            .iter()
            .flat_map(|oc| {
                oc.keys.iter().zip(&oc.counts).map(move |(k, c)| CountOut { order: oc.order, graph6: key_graph6(k), expression: c.to_text(), constant: c.is_constant() })
            })
            .collect(),
    };
    match config.format {
        Some(Format::Json) => write_json(out, &doc),
        Some(Format::Csv) => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["order", "graph6", "name", "expression"])?;
            for c in &doc.counts {
                let name = graph6_decode(c.graph6.as_bytes()).ok().and_then(|g| pattern_name(&canonical_key(&g))).unwrap_or_default();
                w.write_record([c.order.to_string(), c.graph6.clone(), name, c.expression.clone()])?;
            }
            w.flush()?;
            Ok(())
        }
        None | Some(Format::Table) => {
            let degree = doc.degree.map(|k| format!(" (k = {k})")).unwrap_or_default();
            writeln!(out, "{} mode{degree}, orders 1..={max_order}", doc.mode)?;
            let mut rows = vec![["order", "equations", "without total", "variables", "rank", "free"].map(String::from).to_vec()];
            for r in &doc.reports {
                rows.push(vec![r.order.to_string(), r.equations.to_string(), r.equations_without_total.to_string(), r.variables.to_string(), r.rank.to_string(), r.free.to_string()]);
            }
            write!(out, "{}", aligned(&rows))?;
            for f in &doc.free_parameters {
                writeln!(out, "free parameter {} = {} (order {}, graph6 {})", f.symbol, f.name, f.order, f.graph6)?;
            }
            for b in &doc.bounds {
                writeln!(out, "{}", b.line())?;
            }
            Ok(())
        }
    }
}

// ---- counts

fn resolve_symbol(table: &SolutionTable, name: &str) -> Result<Symbol> {
    if let Some(idx) = name.strip_prefix('P').and_then(|s| s.parse::<u32>().ok()) {
        return table.free_parameters.iter().map(|f| f.symbol).find(|s| s.index == idx).ok_or_else(|| usage(format!("no free parameter {name}")));
    }
    let g = parse_pattern(name).map_err(usage)?;
    table.symbol_for(&g).ok_or_else(|| usage(format!("{name} is not a free parameter here")))
}

fn counts(config: &RunConfig, p: &SrgParams, mode: Mode, max_order: Option<usize>, free: &[String], out: &mut dyn Write) -> Result<()> {
    let max_order = max_order.unwrap_or(default_counts_order(mode));
    let table = solve_table(config, mode, max_order)?;
    let ct = concrete(&table, p)?;
    let mut fixed = BTreeMap::new();
    for f in free {
        let (name, value) = parse_assignment(f)?;
        fixed.insert(resolve_symbol(&table, &name)?, value);
    }
    #[derive(Serialize)]
    struct Row {
        order: usize,
        graph6: String,
        name: String,
        count: String,
    }
    let mut rows = Vec::new();
    let mut problems = Vec::new();
    for oc in &ct.orders {
        for (k, v) in oc.keys.iter().zip(&oc.values) {
            let v = substitute(v, &fixed);
            let label = pattern_name(k).unwrap_or_default();
            if v.terms.is_empty() {
                if !v.constant.is_integer() {
                    problems.push(format!("{} = {} is not an integer", display_key(k), v.constant));
                } else if v.constant.is_negative() {
                    problems.push(format!("{} = {} is negative", display_key(k), v.constant));
                }
            }
            rows.push(Row { order: oc.order, graph6: key_graph6(k), name: label, count: affine_text(&v) });
        }
    }
    match config.format {
        Some(Format::Json) => {
            #[derive(Serialize)]
            struct Out {
                schema: String,
                params: String,
                mode: &'static str,
                free_values: BTreeMap<String, String>,
                counts: Vec<Row>,
                problems: Vec<String>,
            }
            let free_values = fixed.iter().map(|(s, v)| (s.name(), v.to_string())).collect();
            write_json(out, &Out { schema: schema("counts"), params: p.to_string(), mode: mode.name(), free_values, counts: rows, problems: problems.clone() })?;
        }
        Some(Format::Table) => {
            let mut t = vec![["order", "graph6", "name", "count"].map(String::from).to_vec()];
            t.extend(rows.into_iter().map(|r| vec![r.order.to_string(), r.graph6, r.name, r.count]));
            write!(out, "{}", aligned(&t))?;
        }
        None | Some(Format::Csv) => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["order", "graph6", "name", "count"])?;
            for r in rows {
                w.write_record([r.order.to_string(), r.graph6, r.name, r.count])?;
            }
            w.flush()?;
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(CliError::Inconsistent(format!("{} counts are not non-negative integers:\n{}", problems.len(), problems.join("\n"))))
    }
}

// ---- bounds

#[allow(clippy::too_many_arguments)]
fn bounds(config: &RunConfig, p: &SrgParams, mode: Mode, xs: &[String], y: &str, target: Option<&str>, ts: &[u32], out: &mut dyn Write) -> Result<()> {
    let yg = parse_pattern(y).map_err(usage)?;
    let xgs: Vec<SmallGraph> = xs.iter().map(|x| parse_pattern(x)).collect::<std::result::Result<_, _>>().map_err(usage)?;
    // S_YY needs counts through 2|Y| and S_XY through |X| + |Y|.
    let need = xgs.iter().map(|x| x.order().max(yg.order()) + yg.order()).max().unwrap_or(0);
    let table = solve_table(config, mode, need)?;
    let symbol = match target {
        Some(t) => {
            let g = parse_pattern(t).map_err(usage)?;
            table.symbol_for(&g).ok_or_else(|| usage(format!("the count of {t} is not a free parameter through order {need}")))?
        }
        None => match table.free_parameters.as_slice() {
            [f] => f.symbol,
            [] => return Err(usage(format!("no free parameter through order {need}"))),
            _ => return Err(usage("several free parameters; choose one with --target")),
        },
    };
    let ct = concrete(&table, p)?;
    #[derive(Serialize)]
    struct Row {
        n: i64,
        k: i64,
        lambda: i64,
        mu: i64,
        x: String,
        y: String,
        t: u32,
        bound: String,
        exact: String,
        direction: &'static str,
        parity_agrees: bool,
    }
    let mut rows = Vec::new();
    for (xs, xg) in xs.iter().zip(&xgs) {
        for &t in ts {
            let b = cauchy_schwarz_bound(&ct, xg, &yg, t, symbol).map_err(|e| CliError::Inconsistent(format!("X={xs}, t={t}: {e}")))?;
            rows.push(Row {
                n: p.n,
                k: p.k,
                lambda: p.lambda,
                mu: p.mu,
                x: xs.clone(),
                y: y.to_string(),
                t,
                bound: decimal(&b.value, 2),
                exact: b.value.to_string(),
                direction: match b.direction {
                    Direction::Upper => "upper",
                    Direction::Lower => "lower",
                },
                parity_agrees: b.parity_agrees,
            });
        }
    }
    match config.format {
        Some(Format::Json) => {
            #[derive(Serialize)]
            struct Out {
                schema: String,
                symbol: String,
                target: String,
                rows: Vec<Row>,
            }
            write_json(out, &Out { schema: schema("bounds"), symbol: symbol.name(), target: symbol_label(&symbol), rows })
        }
        Some(Format::Table) => {
            let mut t = vec![["params", "X", "Y", "t", "bound", "direction"].map(String::from).to_vec()];
            t.extend(rows.into_iter().map(|r| vec![p.to_string(), r.x, r.y, r.t.to_string(), r.bound, r.direction.to_string()]));
            write!(out, "{}", aligned(&t))?;
            Ok(())
        }
        None | Some(Format::Csv) => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

// ---- moore-aut

fn formula_text(f: &A1Formula) -> String {
    match f {
        A1Formula::Progression { base, step, cap } => format!("{base}+{step}k <= {cap}"),
        A1Formula::Exactly(v) => v.to_string(),
        A1Formula::Verbatim(s) => s.to_string(),
    }
}

fn moore_aut(config: &RunConfig, p: u64, order: usize, degree: u32, out: &mut dyn Write) -> Result<()> {
    let mode = Mode::Moore { k: degree };
    let table = solve_table(config, mode, order)?;
    let params = moore_params(degree);
    let ct = concrete(&table, &params)?;
    let residues = counts_mod_p(&ct, order, p).map_err(|e| CliError::Inconsistent(format!("count of {} is not an integer: {}", key_graph6(&e.key), e.value)))?;
    #[derive(Serialize)]
    struct ResidueRow {
        graph6: String,
        name: String,
        residue: u64,
        coefficients: BTreeMap<String, Option<u64>>,
        has_order_p_automorphism: bool,
    }
    let rows: Vec<ResidueRow> = residues
        .iter()
        .map(|(k, r)| ResidueRow {
            graph6: key_graph6(k),
            name: pattern_name(k).unwrap_or_default(),
            residue: r.constant,
            coefficients: r.coefficients.iter().map(|(s, c)| (s.name(), *c)).collect(),
            has_order_p_automorphism: has_automorphism_of_order(k, p),
        })
        .collect();
    #[derive(Serialize)]
    struct A1Row {
        a0: u32,
        p: u32,
        a1: String,
        refined: Option<Vec<u32>>,
    }
    let a1_rows: Vec<A1Row> = BASE_TABLE
        .iter()
        .filter(|r| r.p as u64 == p)
        .map(|r| A1Row {
            a0: r.a0,
            p: r.p,
            a1: formula_text(&r.a1),
            refined: (p == 7).then(|| r.a1.values().unwrap_or_default().into_iter().filter(|v| srg_core::mooreaut::orbit_constraint_order7(*v as u64)).collect()),
        })
        .collect();
    let nonzero = rows.iter().filter(|r| r.residue != 0).count();
    let forced: Vec<&ResidueRow> = rows.iter().filter(|r| r.residue != 0 && !r.has_order_p_automorphism).collect();
    let symbol_note = (!table.free_parameters.is_empty()).then_some("free parameters are set to 0 in the residue column");
    match config.format {
        Some(Format::Json) => {
            #[derive(Serialize)]
            struct Out<'a> {
                schema: String,
                params: String,
                p: u64,
                order: usize,
                residues: &'a [ResidueRow],
                nonzero: usize,
                forced_fixed: Vec<&'a str>,
                automorphism_table: &'a [A1Row],
                note: &'static str,
            }
            write_json(
                out,
                &Out {
                    schema: schema("moore-aut"),
                    params: params.to_string(),
                    p,
                    order,
                    residues: &rows,
                    nonzero,
                    forced_fixed: forced.iter().map(|r| r.graph6.as_str()).collect(),
                    automorphism_table: &a1_rows,
                    note: PETERSEN_FREE_NOTE,
                },
            )
        }
        Some(Format::Csv) => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["graph6", "name", "residue", "has_order_p_automorphism"])?;
            for r in &rows {
                w.write_record([r.graph6.clone(), r.name.clone(), r.residue.to_string(), r.has_order_p_automorphism.to_string()])?;
            }
            w.flush()?;
            Ok(())
        }
        None | Some(Format::Table) => {
            writeln!(out, "## Counts of order {order} modulo {p} at {params}\n")?;
            if let Some(n) = symbol_note {
                writeln!(out, "{n}.\n")?;
            }
            let body: Vec<Vec<String>> = rows.iter().map(|r| vec![r.graph6.clone(), r.name.clone(), r.residue.to_string(), if r.has_order_p_automorphism { "yes" } else { "no" }.to_string()]).collect();
            write!(out, "{}", markdown(&["graph6", "name", "residue", "order-p automorphism"], &body))?;
            writeln!(out, "\n{nonzero} of {} residues are nonzero.", rows.len())?;
            if !forced.is_empty() {
                writeln!(out, "Fixed copies forced for: {}.", forced.iter().map(|r| r.graph6.as_str()).collect::<Vec<_>>().join(", "))?;
                writeln!(out, "Note: {PETERSEN_FREE_NOTE}.")?;
            }
            if !a1_rows.is_empty() {
                writeln!(out, "\n## Automorphisms of order {p}\n")?;
                let body: Vec<Vec<String>> = a1_rows
                    .iter()
                    .map(|r| {
                        let refined = match &r.refined {
                            Some(v) if v.is_empty() => "-".to_string(),
                            Some(v) => v.iter().map(u32::to_string).collect::<Vec<_>>().join(", "),
                            None => String::new(),
                        };
                        vec![r.a0.to_string(), r.a1.clone(), refined]
                    })
                    .collect();
                write!(out, "{}", markdown(&["a0", "a1", "a1 (multiple of 49)"], &body))?;
            }
            Ok(())
        }
    }
}

// ---- feasibility

fn feasibility_row(r: &FeasibilityReport) -> Vec<String> {
    let sp = &r.spectrum;
    let p = &r.params;
    let mut row = vec![p.n.to_string(), p.k.to_string(), p.lambda.to_string(), p.mu.to_string(), sp.r.to_string(), sp.s.to_string(), sp.f.to_string(), sp.g.to_string()];
    row.extend(TESTS.iter().map(|t| r.verdict(*t).name().to_string()));
    row.push(r.feasible().to_string());
    row
}

const TESTS: [Test; 5] = [Test::Integrality, Test::Krein1, Test::Krein2, Test::AbsoluteBound, Test::Conference];

fn parameter_sets(lo: i64, hi: i64, triangle_free: bool) -> Vec<SrgParams> {
    let mut out = Vec::new();
    for n in lo..=hi {
        for k in 1..n - 1 {
            let lambdas = if triangle_free { 0..=0 } else { 0..=k - 1 };
            for l in lambdas {
                let num = k * (k - l - 1);
                let den = n - k - 1;
                // Primitive sets only: μ = 0 is disconnected and μ = k complete multipartite.
                if num % den == 0 && num > 0 && num / den < k {
                    if let Ok(p) = SrgParams::new(n, k, l, num / den) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn feasibility(
    config: &RunConfig,
    params: Option<&str>,
    range: Option<&str>,
    family: Option<&str>,
    triangle_free: bool,
    feasible_only: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let (sets, single) = match (params, range, family) {
        (Some(p), _, _) => (vec![parse_params(p)?], true),
        (_, Some(r), _) => {
            let (lo, hi) = parse_range(r)?;
            (parameter_sets(lo, hi, triangle_free), false)
        }
        (_, _, Some(f)) => {
            let src = ParamSource { params: None, family: Some(f.to_string()) };
            (vec![src.resolve()?], true)
        }
        _ => return Err(usage("no parameter source")),
    };
    let mut reports: Vec<FeasibilityReport> = sets.iter().map(feasibility_report).collect();
    if feasible_only {
        reports.retain(FeasibilityReport::feasible);
    }
    let header = ["n", "k", "lambda", "mu", "r", "s", "f", "g", "INTEGRALITY", "KREIN1", "KREIN2", "ABSOLUTE", "CONFERENCE", "feasible"];
    let format = config.format.unwrap_or(if single { Format::Table } else { Format::Csv });
    match format {
        Format::Table if single => {
            let r = &reports[0];
            let sp = spectrum(&r.params);
            writeln!(out, "{}: r = {}, s = {}, f = {}, g = {}", r.params, sp.r, sp.s, sp.f, sp.g)?;
            for o in &r.outcomes {
                writeln!(out, "{}: {}  {}", o.test.name(), o.verdict.name(), o.detail)?;
            }
            writeln!(out, "{}", if r.feasible() { "feasible" } else { "infeasible" })?;
            Ok(())
        }
        Format::Table => {
            let mut t = vec![header.map(String::from).to_vec()];
            t.extend(reports.iter().map(feasibility_row));
            write!(out, "{}", aligned(&t))?;
            Ok(())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(header)?;
            for r in &reports {
                w.write_record(feasibility_row(r))?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Entry {
                params: String,
                r: String,
                s: String,
                f: String,
                g: String,
                verdicts: BTreeMap<&'static str, &'static str>,
                details: BTreeMap<&'static str, String>,
                feasible: bool,
            }
            #[derive(Serialize)]
            struct Out {
                schema: String,
                results: Vec<Entry>,
            }
            let results = reports
                .iter()
                .map(|r| Entry {
                    params: r.params.to_string(),
                    r: r.spectrum.r.to_string(),
                    s: r.spectrum.s.to_string(),
                    f: r.spectrum.f.to_string(),
                    g: r.spectrum.g.to_string(),
                    verdicts: TESTS.iter().map(|t| (t.name(), r.verdict(*t).name())).collect(),
                    details: r.outcomes.iter().map(|o| (o.test.name(), o.detail.clone())).collect(),
                    feasible: r.feasible(),
                })
                .collect();
            write_json(out, &Out { schema: schema("feasibility"), results })
        }
    }
}

// ---- census / verify

fn census(config: &RunConfig, fixture: &str, order: usize, out: &mut dyn Write) -> Result<()> {
    let host = fixture_by_name(fixture)?;
    progress(config, format!("census of {} ({}) at order {order}", host.name, host.params));
    let cen = parallel_census(&host, order).map_err(|e| usage(e.to_string()))?;
    let expected = srg_core::oracle::binomial(host.order() as u128, order as u128);
    if cen.total() != expected {
        return Err(CliError::Inconsistent(format!("census total {} differs from C({}, {order}) = {expected}", cen.total(), host.order())));
    }
    match config.format {
        Some(Format::Json) => {
            #[derive(Serialize)]
            struct Out {
                schema: String,
                fixture: &'static str,
                params: String,
                order: usize,
                total: String,
                counts: BTreeMap<String, u64>,
            }
            let counts = cen.counts.iter().map(|(k, c)| (key_graph6(k), *c)).collect();
            write_json(out, &Out { schema: schema("census"), fixture: host.name, params: host.params.to_string(), order, total: cen.total().to_string(), counts })
        }
        Some(Format::Table) => {
            let mut t = vec![["graph6", "name", "count"].map(String::from).to_vec()];
            t.extend(cen.counts.iter().map(|(k, c)| vec![key_graph6(k), pattern_name(k).unwrap_or_default(), c.to_string()]));
            write!(out, "{}", aligned(&t))?;
            Ok(())
        }
        None | Some(Format::Csv) => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["graph6", "count"])?;
            for (k, c) in &cen.counts {
                w.write_record([key_graph6(k), c.to_string()])?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

fn verify(config: &RunConfig, fixture: &str, max_order: usize, mode: ModeArg, out: &mut dyn Write) -> Result<()> {
    let hosts: Vec<FixtureSrg> = if fixture == "all" { FIXTURE_NAMES.iter().map(|n| fixture_by_name(n)).collect::<Result<_>>()? } else { vec![fixture_by_name(fixture)?] };
    let mut tables: BTreeMap<String, SolutionTable> = BTreeMap::new();
    #[derive(Serialize)]
    struct Row {
        fixture: &'static str,
        params: String,
        mode: &'static str,
        order: usize,
        graphs: usize,
        mismatches: Vec<String>,
    }
    #[derive(Serialize)]
    struct HostOut {
        fixture: &'static str,
        free_values: BTreeMap<String, u64>,
    }
    let mut rows = Vec::new();
    let mut hosts_out = Vec::new();
    for host in &hosts {
        let m = match mode {
            ModeArg::General => Mode::General,
            ModeArg::TriangleFree => Mode::TriangleFree,
            ModeArg::Moore => match mode_for(&host.params) {
                m @ Mode::Moore { .. } => m,
                _ => {
                    progress(config, format!("skipping {}: not a Moore graph", host.name));
                    continue;
                }
            },
        };
        params_for_mode(&host.params, m)?;
        let top = max_order.min(m.max_order());
        let name = format!("{}:{:?}", m.name(), mode_degree(m));
        if !tables.contains_key(&name) {
            tables.insert(name.clone(), solve_table(config, m, top)?);
        }
        progress(config, format!("checking {} through order {top}", host.name));
        let report = cross_validate(host, top, &tables[&name]).map_err(|e| CliError::Inconsistent(format!("{}: {e}", host.name)))?;
        hosts_out.push(HostOut { fixture: host.name, free_values: report.free_values.iter().map(|(s, v)| (format!("{} ({})", s.name(), symbol_label(s)), *v)).collect() });
        for o in &report.orders {
            rows.push(Row {
                fixture: host.name,
                params: host.params.to_string(),
                mode: m.name(),
                order: o.order,
                graphs: o.graphs_checked,
                mismatches: o.mismatches.iter().map(|x| format!("{}: predicted {}, censused {}", key_graph6(&x.key), x.predicted, x.censused)).collect(),
            });
        }
    }
    let total: usize = rows.iter().map(|r| r.mismatches.len()).sum();
    match config.format {
        Some(Format::Json) => {
            #[derive(Serialize)]
            struct Out<'a> {
                schema: String,
                mismatches: usize,
                hosts: &'a [HostOut],
                orders: &'a [Row],
            }
            write_json(out, &Out { schema: schema("verify"), mismatches: total, hosts: &hosts_out, orders: &rows })?;
        }
        Some(Format::Csv) => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["fixture", "params", "mode", "order", "graphs", "mismatches"])?;
            for r in &rows {
                w.write_record([r.fixture.to_string(), r.params.clone(), r.mode.to_string(), r.order.to_string(), r.graphs.to_string(), r.mismatches.len().to_string()])?;
            }
            w.flush()?;
        }
        None | Some(Format::Table) => {
            let mut t = vec![["fixture", "params", "mode", "order", "graphs", "mismatches"].map(String::from).to_vec()];
            for r in &rows {
                t.push(vec![r.fixture.to_string(), r.params.clone(), r.mode.to_string(), r.order.to_string(), r.graphs.to_string(), r.mismatches.len().to_string()]);
            }
            write!(out, "{}", aligned(&t))?;
            for h in &hosts_out {
                for (s, v) in &h.free_values {
                    writeln!(out, "{}: {s} = {v}", h.fixture)?;
                }
            }
            for r in &rows {
                for m in &r.mismatches {
                    writeln!(out, "MISMATCH {} order {}: {m}", r.fixture, r.order)?;
                }
            }
        }
    }
    if total == 0 {
        Ok(())
    } else {
        Err(CliError::Inconsistent(format!("{total} census mismatches")))
    }
}
