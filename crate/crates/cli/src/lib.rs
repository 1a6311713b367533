//! Command-line surface over the `corepath` library.
//!
//! The binary exposes one subcommand per kind of question:
//!
//! - `count`: closed-form counts of family cores, optionally refined by a
//!   statistic (`--k` up steps, `--corners`, `--self-conjugate`)
//! - `enumerate`: explicit listings of cores, paths, or generalized Dyck
//!   paths
//! - `map`: the bijections applied to one object at a time
//! - `render`: abacus displays as fixed-width text or SVG
//! - `verify`: closed formulas checked against brute-force enumeration over
//!   a parameter grid
//! - `table`: a CSV sweep of family counts
//!
//! Formats. Every informational subcommand prints plain text by default;
//! `--format json` switches to a single schema-stable line
//! `{"command": ..., "params": ..., "result": ...}` with counts rendered as
//! decimal strings so arbitrary-precision values survive any JSON parser.
//! `render` accepts `--format svg`; `table` always emits CSV with the header
//! row `s,d,p,count`.
//!
//! Exit codes. `0` success; `1` domain error (non-coprime parameters, a
//! partition outside the family, and so on); `2` when `verify` finds a
//! formula/oracle mismatch; `64` for a malformed command line.

#![forbid(unsafe_code)]

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Value};

use corepath::counting::{self, CountResult};
use corepath::{abacus, bijections, oracle, paths};
use corepath::{CoreFamily, ExtendedAbacus, GenDyckPath, Partition, RationalMotzkinPath, StepWord};

/// Everything went fine.
pub const EXIT_OK: i32 = 0;
/// Arguments parsed but named something outside the mathematical domain.
pub const EXIT_DOMAIN: i32 = 1;
/// `verify` ran to completion and found at least one mismatch.
pub const EXIT_MISMATCH: i32 = 2;
/// The command line itself was malformed.
pub const EXIT_USAGE: i32 = 64;

/// Parses `argv`, dispatches, and writes the outcome to the given streams.
///
/// Returns the process exit code; the binary is a thin wrapper around this
/// so tests can drive the whole pipeline in memory.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

/// Exact counting, listing, and drawing for simultaneous core partitions
/// and the rational Motzkin paths that encode them.
#[derive(Parser)]
#[command(name = "corepath", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the cores of a family with a closed formula.
    Count(CountArgs),
    /// List cores or paths explicitly.
    #[command(subcommand)]
    Enumerate(EnumerateCmd),
    /// Apply one bijection to one object.
    #[command(subcommand)]
    Map(MapCmd),
    /// Draw an abacus for a partition.
    #[command(subcommand)]
    Render(RenderCmd),
    /// Check the closed formulas against brute force over a grid.
    Verify(VerifyArgs),
    /// Emit a CSV table of family counts.
    Table(TableArgs),
}

/// Output format shared by the subcommands; each one accepts a subset.
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Svg => "svg",
        }
    }
}

#[derive(Args)]
struct CountArgs {
    /// Smallest modulus of the progression s, s+d, ..., s+pd.
    #[arg(long)]
    s: u32,
    /// Common difference of the progression; must be coprime to s.
    #[arg(long)]
    d: u32,
    /// Number of steps, so the family has p + 1 moduli.
    #[arg(long)]
    p: u32,
    /// Count only cores whose path has exactly K up steps (with --corners,
    /// exactly K corners).
    #[arg(long, value_name = "K")]
    k: Option<u32>,
    /// Count by corners of the Young diagram instead of up steps (d = 1).
    #[arg(long)]
    corners: bool,
    /// Count only the self-conjugate cores.
    #[arg(long)]
    self_conjugate: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum EnumerateCmd {
    /// Every core of the family or modulus list, smallest first.
    Cores(CoresArgs),
    /// Only the self-conjugate cores.
    ScCores(CoresArgs),
    /// Rational Motzkin paths of the family, lexicographic with U < F < D.
    Paths(PathsArgs),
    /// Generalized Dyck paths of order (s, p).
    GenDyck(GenDyckArgs),
}

#[derive(Args)]
struct CoresArgs {
    /// Smallest modulus of the progression s, s+d, ..., s+pd.
    #[arg(long, requires = "d", requires = "p", conflicts_with = "moduli")]
    s: Option<u32>,
    /// Common difference of the progression.
    #[arg(long, requires = "s")]
    d: Option<u32>,
    /// Number of steps in the progression.
    #[arg(long, requires = "s")]
    p: Option<u32>,
    /// Explicit comma-separated modulus list, e.g. 3,5,7.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["s", "d", "p"])]
    moduli: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct PathsArgs {
    /// Smallest modulus; paths have s + d steps and end at height -d.
    #[arg(long)]
    s: u32,
    /// Common difference; must be coprime to s.
    #[arg(long)]
    d: u32,
    /// Pattern parameter: factors U F^i U with i <= p - 3 are forbidden.
    #[arg(long)]
    p: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct GenDyckArgs {
    /// Both coordinates of the endpoint (s, s).
    #[arg(long)]
    s: u32,
    /// Order parameter: steps are (0,p), (p,0), and (i,i) for i < p.
    #[arg(long)]
    p: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum MapCmd {
    /// Send a family core to its rational Motzkin path.
    CoreToPath(CoreToPathArgs),
    /// Send a rational Motzkin path back to its core.
    PathToCore(PathToCoreArgs),
    /// Send a pattern-avoiding Motzkin word to a generalized Dyck path.
    Phi(PhiArgs),
    /// Send a generalized Dyck path back to its Motzkin word.
    PhiInverse(PhiInverseArgs),
}

#[derive(Args)]
struct CoreToPathArgs {
    /// The family as s,d,p — the moduli s, s+d, ..., s+pd.
    #[arg(long)]
    family: String,
    /// The partition as [a,b,c], parts non-increasing; [] is empty.
    #[arg(long)]
    partition: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct PathToCoreArgs {
    /// The family as s,d,p — the moduli s, s+d, ..., s+pd.
    #[arg(long)]
    family: String,
    /// The path as a word over U, F, D, e.g. UFUDDDDD.
    #[arg(long)]
    path: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct PhiArgs {
    /// Pattern parameter of the source word (p >= 2).
    #[arg(long)]
    p: u32,
    /// The Motzkin word over U, F, D, e.g. UFUDD.
    #[arg(long)]
    word: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct PhiInverseArgs {
    /// Order parameter of the source path (p >= 2).
    #[arg(long)]
    p: u32,
    /// The generalized Dyck path as tokens, e.g. "U3 F2 D3".
    #[arg(long)]
    path: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum RenderCmd {
    /// The extended (s+d, d)-abacus with its boundary profile.
    Abacus(RenderAbacusArgs),
    /// The classical abacus with s columns.
    SAbacus(RenderSAbacusArgs),
}

#[derive(Args)]
struct RenderAbacusArgs {
    /// The partition as [a,b,c].
    #[arg(long)]
    partition: String,
    /// Smallest modulus; the abacus has s + d + 1 columns.
    #[arg(long)]
    s: u32,
    /// Common difference; must be coprime to s.
    #[arg(long)]
    d: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct RenderSAbacusArgs {
    /// The partition as [a,b,c].
    #[arg(long)]
    partition: String,
    /// Number of columns.
    #[arg(long)]
    s: u32,
    /// Highest row to draw; defaults to one past the highest bead.
    #[arg(long)]
    rows: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Grid bounds SMAX DMAX PMAX: all coprime s <= SMAX, d <= DMAX and
    /// 1 <= p <= PMAX.
    #[arg(long, num_args = 3, value_names = ["SMAX", "DMAX", "PMAX"], required = true)]
    grid: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    /// Largest s to include.
    #[arg(long)]
    smax: u32,
    /// Largest d to include (only d coprime to s appear).
    #[arg(long)]
    dmax: u32,
    /// Largest p to include, starting from p = 1.
    #[arg(long)]
    pmax: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

/// An error surfaced to the user, split by whose fault it is.
enum CliError {
    /// The command line is malformed; exits with [`EXIT_USAGE`].
    Usage(String),
    /// The parameters name something outside the mathematical domain;
    /// exits with [`EXIT_DOMAIN`].
    Domain(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

const TEXT_JSON: &[Format] = &[Format::Text, Format::Json];

fn require_format(got: Format, allowed: &[Format]) -> Result<(), CliError> {
    if allowed.contains(&got) {
        return Ok(());
    }
    let names: Vec<&str> = allowed.iter().map(|f| f.name()).collect();
    Err(usage(format!(
        "--format {} is not available here; choose from {}",
        got.name(),
        names.join(", ")
    )))
}

/// One machine-readable line: `{"command", "params", "result"}`.
fn envelope(command: &str, params: Value, result: Value) -> String {
    let mut line = json!({
        "command": command,
        "params": params,
        "result": result,
    })
    .to_string();
    line.push('\n');
    line
}

/// Formats a single-valued answer as a bare line or a JSON envelope.
fn finish(format: Format, command: &str, params: Value, result: String) -> String {
    match format {
        Format::Text => format!("{result}\n"),
        Format::Json => envelope(command, params, json!(result)),
        _ => unreachable!("format validated by require_format"),
    }
}

/// Formats a listing as one item per line or a JSON array.
fn finish_list(format: Format, command: &str, params: Value, items: Vec<String>) -> String {
    match format {
        Format::Text => items.iter().map(|item| format!("{item}\n")).collect(),
        Format::Json => envelope(command, params, json!(items)),
        _ => unreachable!("format validated by require_format"),
    }
}

fn parse_family(text: &str) -> Result<CoreFamily, CliError> {
    text.parse::<CoreFamily>().map_err(domain)
}

fn parse_partition(text: &str) -> Result<Partition, CliError> {
    text.parse::<Partition>().map_err(domain)
}

fn parse_word(text: &str) -> Result<StepWord, CliError> {
    text.parse::<StepWord>().map_err(domain)
}

fn execute(command: Command) -> Result<(String, i32), CliError> {
    match command {
        Command::Count(args) => cmd_count(args).map(|text| (text, EXIT_OK)),
        Command::Enumerate(cmd) => cmd_enumerate(cmd).map(|text| (text, EXIT_OK)),
        Command::Map(cmd) => cmd_map(cmd).map(|text| (text, EXIT_OK)),
        Command::Render(cmd) => cmd_render(cmd).map(|text| (text, EXIT_OK)),
        Command::Verify(args) => cmd_verify(args),
        Command::Table(args) => cmd_table(args).map(|text| (text, EXIT_OK)),
    }
}

fn cmd_count(args: CountArgs) -> Result<String, CliError> {
    require_format(args.format, TEXT_JSON)?;
    let result = dispatch_count(&args)?;
    let mut params = serde_json::Map::new();
    for &(name, value) in &result.params {
        params.insert(name.to_string(), json!(value));
    }
    params.insert("formula".into(), json!(result.formula));
    if args.corners {
        params.insert("corners".into(), json!(true));
    }
    if args.self_conjugate {
        params.insert("self_conjugate".into(), json!(true));
    }
    Ok(finish(args.format, "count", Value::Object(params), result.value.to_string()))
}

/// Chooses the closed formula matching the requested family and statistic.
fn dispatch_count(args: &CountArgs) -> Result<CountResult, CliError> {
    let CountArgs { s, d, p, k, corners, self_conjugate, .. } = *args;
    if corners && self_conjugate {
        return Err(usage("--corners and --self-conjugate cannot be combined"));
    }
    if self_conjugate && k.is_some() {
        return Err(usage("--self-conjugate does not refine by --k"));
    }
    if corners && k.is_none() {
        return Err(usage("--corners needs --k to fix the corner count"));
    }
    // Validates positivity and coprimality up front so every branch below
    // may assume a well-formed family.
    CoreFamily::new(s, d, p).map_err(domain)?;
    let mut params = vec![("s", s as u64), ("d", d as u64), ("p", p as u64)];
    if let Some(k) = k {
        params.push(("k", k as u64));
    }
    let (formula, value) = if self_conjugate {
        if p == 1 {
            ("sc-fms", counting::count_sc_fms(s, s + d).map_err(domain)?)
        } else if d == 1 {
            ("sc-main", counting::count_sc_main(s, p).map_err(domain)?)
        } else {
            return Err(CliError::Domain(format!(
                "no closed formula counts self-conjugate cores with d = {d} and p = {p}; \
                 try `enumerate sc-cores`"
            )));
        }
    } else if corners {
        let k = k.expect("--corners requires --k, checked above");
        if d != 1 {
            return Err(CliError::Domain(format!(
                "corner counts are only known for d = 1, not d = {d}"
            )));
        }
        if p == 1 {
            ("corners-two", counting::count_corners_two(s, k))
        } else {
            ("corners", counting::count_corners(s, p, k).map_err(domain)?)
        }
    } else if let Some(k) = k {
        if p == 1 {
            return Err(CliError::Domain("counting by up steps needs p >= 2".into()));
        }
        if p == 2 || k == 0 {
            // With no up step there is no U F^i U factor to forbid, so the
            // free count is already the restricted count.
            ("freemotz", counting::count_freemotz(s, d, k).map_err(domain)?)
        } else {
            ("mainprop", counting::count_mainprop(s, d, p, k).map_err(domain)?)
        }
    } else if p == 1 {
        ("anderson", counting::count_anderson(s, s + d).map_err(domain)?)
    } else {
        ("main", counting::count_main(s, d, p).map_err(domain)?)
    };
    Ok(CountResult { formula, params, value })
}

fn cmd_enumerate(cmd: EnumerateCmd) -> Result<String, CliError> {
    match cmd {
        EnumerateCmd::Cores(args) => {
            require_format(args.format, TEXT_JSON)?;
            let (moduli, mut params) = resolve_moduli(&args)?;
            params.insert("kind".into(), json!("cores"));
            let cores = oracle::enumerate_cores(&moduli).map_err(domain)?;
            let items = cores.iter().map(Partition::to_string).collect();
            Ok(finish_list(args.format, "enumerate", Value::Object(params), items))
        }
        EnumerateCmd::ScCores(args) => {
            require_format(args.format, TEXT_JSON)?;
            let (moduli, mut params) = resolve_moduli(&args)?;
            params.insert("kind".into(), json!("sc-cores"));
            let cores = oracle::enumerate_sc_cores(&moduli).map_err(domain)?;
            let items = cores.iter().map(Partition::to_string).collect();
            Ok(finish_list(args.format, "enumerate", Value::Object(params), items))
        }
        EnumerateCmd::Paths(args) => {
            require_format(args.format, TEXT_JSON)?;
            let paths = paths::enumerate_rational_motzkin(args.s, args.d, args.p)
                .map_err(domain)?;
            let params = json!({"kind": "paths", "s": args.s, "d": args.d, "p": args.p});
            let items = paths.iter().map(RationalMotzkinPath::to_string).collect();
            Ok(finish_list(args.format, "enumerate", params, items))
        }
        EnumerateCmd::GenDyck(args) => {
            require_format(args.format, TEXT_JSON)?;
            if args.p < 2 {
                return Err(CliError::Domain(format!(
                    "generalized Dyck paths need p >= 2, got p = {}",
                    args.p
                )));
            }
            let paths = paths::enumerate_gen_dyck(args.s, args.p);
            let params = json!({"kind": "gen-dyck", "s": args.s, "p": args.p});
            let items = paths.iter().map(GenDyckPath::to_string).collect();
            Ok(finish_list(args.format, "enumerate", params, items))
        }
    }
}

/// Resolves `--moduli` or `--s/--d/--p` to a sorted modulus list plus the
/// parameter echo for the JSON envelope.
fn resolve_moduli(
    args: &CoresArgs,
) -> Result<(Vec<u64>, serde_json::Map<String, Value>), CliError> {
    let mut params = serde_json::Map::new();
    if let Some(moduli) = &args.moduli {
        if moduli.iter().any(|&t| t == 0) {
            return Err(CliError::Domain("moduli must be positive".into()));
        }
        let mut ts = moduli.clone();
        ts.sort_unstable();
        ts.dedup();
        params.insert("moduli".into(), json!(ts));
        return Ok((ts, params));
    }
    match (args.s, args.d, args.p) {
        (Some(s), Some(d), Some(p)) => {
            let family = CoreFamily::new(s, d, p).map_err(domain)?;
            params.insert("s".into(), json!(s));
            params.insert("d".into(), json!(d));
            params.insert("p".into(), json!(p));
            Ok((family.moduli(), params))
        }
        _ => Err(usage("give a family as --s/--d/--p or an explicit --moduli list")),
    }
}

fn cmd_map(cmd: MapCmd) -> Result<String, CliError> {
    match cmd {
        MapCmd::CoreToPath(args) => {
            require_format(args.format, TEXT_JSON)?;
            let family = parse_family(&args.family)?;
            let lambda = parse_partition(&args.partition)?;
            let path = bijections::core_to_path(&lambda, family).map_err(domain)?;
            let params = json!({
                "operation": "core-to-path",
                "family": family.to_string(),
                "partition": lambda.to_string(),
            });
            Ok(finish(args.format, "map", params, path.to_string()))
        }
        MapCmd::PathToCore(args) => {
            require_format(args.format, TEXT_JSON)?;
            let family = parse_family(&args.family)?;
            let word = parse_word(&args.path)?;
            let path = RationalMotzkinPath::new(word, family.s(), family.d())
                .map_err(domain)?;
            let core = bijections::path_to_core(&path, family).map_err(domain)?;
            let params = json!({
                "operation": "path-to-core",
                "family": family.to_string(),
                "path": path.to_string(),
            });
            Ok(finish(args.format, "map", params, core.to_string()))
        }
        MapCmd::Phi(args) => {
            require_format(args.format, TEXT_JSON)?;
            let word = parse_word(&args.word)?;
            let image = bijections::phi(&word, args.p).map_err(domain)?;
            let params = json!({
                "operation": "phi",
                "p": args.p,
                "word": word.to_string(),
            });
            Ok(finish(args.format, "map", params, image.to_string()))
        }
        MapCmd::PhiInverse(args) => {
            require_format(args.format, TEXT_JSON)?;
            let path = GenDyckPath::parse(&args.path, args.p).map_err(domain)?;
            let word = bijections::phi_inverse(&path);
            let params = json!({
                "operation": "phi-inverse",
                "p": args.p,
                "path": path.to_string(),
            });
            Ok(finish(args.format, "map", params, word.to_string()))
        }
    }
}

/// The text grids come back without a final newline; terminal output wants
/// one.
fn terminated(mut text: String) -> String {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    text
}

fn cmd_render(cmd: RenderCmd) -> Result<String, CliError> {
    match cmd {
        RenderCmd::Abacus(args) => {
            require_format(args.format, &[Format::Text, Format::Svg])?;
            let lambda = parse_partition(&args.partition)?;
            let abacus = ExtendedAbacus::new(&lambda, args.s, args.d).map_err(domain)?;
            let rows = abacus.auto_rows();
            Ok(match args.format {
                Format::Text => terminated(abacus.render(rows)),
                Format::Svg => abacus.to_svg(rows),
                _ => unreachable!("format validated by require_format"),
            })
        }
        RenderCmd::SAbacus(args) => {
            require_format(args.format, &[Format::Text])?;
            if args.s == 0 {
                return Err(CliError::Domain("the abacus needs s >= 1".into()));
            }
            let lambda = parse_partition(&args.partition)?;
            let hi = match args.rows {
                Some(rows) => rows,
                None => {
                    let top = lambda
                        .beta_set()
                        .elems()
                        .iter()
                        .max()
                        .map_or(0, |&x| x / args.s as u64);
                    u32::try_from(top + 1)
                        .map_err(|_| CliError::Domain("partition too large to draw".into()))?
                }
            };
            Ok(terminated(abacus::render_s_abacus(&lambda, args.s, 0..=hi)))
        }
    }
}

/// One family of the verification grid with both computed values.
struct VerifyCell {
    s: u32,
    d: u32,
    p: u32,
    formula: BigUint,
    oracle: BigUint,
}

impl VerifyCell {
    fn matches(&self) -> bool {
        self.formula == self.oracle
    }
}

/// Runs formula and oracle for every coprime family in the grid, fanning
/// the cells out to worker threads; the output order stays deterministic.
fn verify_grid(smax: u32, dmax: u32, pmax: u32) -> Result<Vec<VerifyCell>, CliError> {
    let mut jobs = Vec::new();
    for s in 1..=smax {
        for d in 1..=dmax {
            if num_integer::gcd(s, d) != 1 {
                continue;
            }
            for p in 1..=pmax {
                jobs.push((s, d, p));
            }
        }
    }
    jobs.into_par_iter()
        .map(|(s, d, p)| {
            let formula = if p == 1 {
                counting::count_anderson(s, s + d)
            } else {
                counting::count_main(s, d, p)
            }
            .map_err(domain)?;
            let family = CoreFamily::new(s, d, p).map_err(domain)?;
            let cores = oracle::enumerate_cores(&family.moduli()).map_err(domain)?;
            Ok(VerifyCell { s, d, p, formula, oracle: BigUint::from(cores.len()) })
        })
        .collect()
}

fn verify_text(cells: &[VerifyCell], mismatches: usize) -> String {
    let mut out = String::new();
    for cell in cells {
        let verdict = if cell.matches() { "ok" } else { "MISMATCH" };
        let _ = writeln!(
            out,
            "s={} d={} p={} formula={} oracle={} {verdict}",
            cell.s, cell.d, cell.p, cell.formula, cell.oracle
        );
    }
    if mismatches == 0 {
        let _ = writeln!(out, "verified {} families: all counts match", cells.len());
    } else {
        let _ = writeln!(out, "verified {} families: {mismatches} MISMATCHES", cells.len());
    }
    out
}

fn verify_json(cells: &[VerifyCell], mismatches: usize, grid: (u32, u32, u32)) -> String {
    let rows: Vec<Value> = cells
        .iter()
        .map(|cell| {
            json!({
                "s": cell.s,
                "d": cell.d,
                "p": cell.p,
                "formula": cell.formula.to_string(),
                "oracle": cell.oracle.to_string(),
                "match": cell.matches(),
            })
        })
        .collect();
    envelope(
        "verify",
        json!({"smax": grid.0, "dmax": grid.1, "pmax": grid.2}),
        json!({"cells": rows, "mismatches": mismatches}),
    )
}

fn cmd_verify(args: VerifyArgs) -> Result<(String, i32), CliError> {
    require_format(args.format, TEXT_JSON)?;
    let [smax, dmax, pmax]: [u32; 3] = args.grid[..]
        .try_into()
        .map_err(|_| usage("--grid takes exactly three values: SMAX DMAX PMAX"))?;
    let cells = verify_grid(smax, dmax, pmax)?;
    let mismatches = cells.iter().filter(|cell| !cell.matches()).count();
    let text = match args.format {
        Format::Text => verify_text(&cells, mismatches),
        Format::Json => verify_json(&cells, mismatches, (smax, dmax, pmax)),
        _ => unreachable!("format validated by require_format"),
    };
    Ok((text, if mismatches == 0 { EXIT_OK } else { EXIT_MISMATCH }))
}

fn cmd_table(args: TableArgs) -> Result<String, CliError> {
    require_format(args.format, &[Format::Csv])?;
    let mut out = String::from("s,d,p,count\n");
    for s in 1..=args.smax {
        for d in 1..=args.dmax {
            if num_integer::gcd(s, d) != 1 {
                continue;
            }
            for p in 1..=args.pmax {
                let value = if p == 1 {
                    counting::count_anderson(s, s + d)
                } else {
                    counting::count_main(s, d, p)
                }
                .map_err(domain)?;
                let _ = writeln!(out, "{s},{d},{p},{value}");
            }
        }
    }
    Ok(out)
}
