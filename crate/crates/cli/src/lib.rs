//! Command-line front end for the `bruhat` library.
//!
//! Everything is reachable through [`run`], which takes argv and two sinks so
//! tests can drive the tool in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use bruhat::analysis::{conjecture_scan, lower_pairs};
use bruhat::cache;
use bruhat::report::{r_poly_classes, DihedralTable, IntervalReport};
use bruhat::suite::{run_suite, SuiteConfig, CHECKS};
use bruhat::{BruhatGraph, CoxeterType, Group, RContext};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "bruhat", version, about = "R-polynomials and Bruhat graphs of finite Coxeter groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full report for one interval [u, w].
    Interval(IntervalArgs),
    /// The R-polynomial classes of a group, or the dihedral table.
    Table(TableArgs),
    /// Run named checks over every interval of a group.
    Verify(VerifyArgs),
    /// Interval-sum lower bound and edge-size tally.
    Scan(ScanArgs),
    /// Graphviz DOT for the Bruhat graph of [u, w].
    ExportDot(IntervalArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    RPolys,
    Dihedral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    /// Every comparable pair u ≤ w.
    All,
    /// Pairs e ≤ w only.
    Lower,
}

#[derive(Args, Debug)]
pub struct Common {
    /// `A3`, `I2:7`, ...
    #[arg(long)]
    pub group: String,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct IntervalArgs {
    #[command(flatten)]
    pub common: Common,
    /// Lower end: `e`, `s1 s2`, or one-line notation in type A.
    #[arg(long, default_value = "e")]
    pub u: String,
    #[arg(long)]
    pub w: String,
    /// Refuse intervals longer than this.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_interval_len: u32,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub table: TableKind,
    /// Required for `r-polys`.
    #[arg(long)]
    pub group: Option<String>,
    /// Last row of the dihedral table.
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Comma-separated check names, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Path-enumerating checks skip longer intervals (reported as partial).
    #[arg(long, default_value_t = SuiteConfig::default().max_interval_len, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_interval_len: u32,
    /// 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    /// Check only this many random comparable pairs.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub sample: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = Scope::All)]
    pub scope: Scope,
    /// Refuse scopes containing longer intervals.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_interval_len: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

/// Outcome of a command before it is written anywhere.
struct Output {
    text: String,
    passed: bool,
}

#[derive(Debug)]
struct Failure {
    message: String,
}

impl From<bruhat::Error> for Failure {
    fn from(e: bruhat::Error) -> Self {
        Failure { message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { message: message.into() }
}

/// Parses `args` (including the program name) and runs the command, with
/// the memo cache taken from `BRUHAT_CACHE_DIR`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_cache(args, cache::cache_dir_from_env(), stdout, stderr)
}

/// [`run`] with an explicit memo cache directory.
pub fn run_with_cache<I, T>(args: I, cache_dir: Option<PathBuf>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let out_path = match &cli.command {
        Command::Interval(a) | Command::ExportDot(a) => a.common.out.clone(),
        Command::Table(a) => a.out.clone(),
        Command::Verify(a) => a.common.out.clone(),
        Command::Scan(a) => a.common.out.clone(),
    };
    match execute(&cli.command, cache_dir.as_deref(), stderr) {
        Ok(output) => {
            let written = match out_path {
                Some(path) => std::fs::write(&path, &output.text).map_err(|e| format!("{}: {e}", path.display())),
                None => stdout.write_all(output.text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            if output.passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            EXIT_USAGE
        }
    }
}

fn parse_group(spec: &str) -> Result<Group, Failure> {
    let ty: CoxeterType = spec.parse()?;
    Ok(Group::new(ty)?)
}

fn execute(command: &Command, cache_dir: Option<&Path>, stderr: &mut dyn Write) -> Result<Output, Failure> {
    match command {
        Command::Interval(a) => cmd_interval(a, cache_dir, stderr),
        Command::Table(a) => cmd_table(a, cache_dir, stderr),
        Command::Verify(a) => cmd_verify(a, stderr),
        Command::Scan(a) => cmd_scan(a),
        Command::ExportDot(a) => cmd_export_dot(a),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Runs `body` with a context preloaded from and saved back to the memo
/// cache in `cache_dir`, when given.
fn with_cache<T>(
    group: &Group,
    cache_dir: Option<&Path>,
    stderr: &mut dyn Write,
    body: impl FnOnce(&mut RContext) -> Result<T, Failure>,
) -> Result<T, Failure> {
    let mut ctx = RContext::new(group);
    let path = cache_dir.map(|dir| cache::cache_file(dir, group));
    if let Some(p) = &path {
        if let Err(e) = cache::load(&mut ctx, p) {
            let _ = writeln!(stderr, "warning: ignoring memo cache {}: {e}", p.display());
            ctx = RContext::new(group);
        }
    }
    let value = body(&mut ctx)?;
    if let Some(p) = &path {
        if let Err(e) = cache::save(&ctx, p) {
            let _ = writeln!(stderr, "warning: could not write memo cache {}: {e}", p.display());
        }
    }
    Ok(value)
}

fn resolve_interval(group: &Group, a: &IntervalArgs) -> Result<(bruhat::Element, bruhat::Element), Failure> {
    let u = group.parse_element(&a.u)?;
    let w = group.parse_element(&a.w)?;
    // Surfaces u ≰ w before any heavier work.
    let interval = group.interval(u, w)?;
    if interval.length() > a.max_interval_len {
        return Err(usage(format!(
            "interval has length {} but --max-interval-len is {}",
            interval.length(),
            a.max_interval_len
        )));
    }
    Ok((u, w))
}

/// Quotes a CSV field when it needs it.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_row(fields: &[String]) -> String {
    let mut line = fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}

fn cmd_interval(a: &IntervalArgs, cache_dir: Option<&Path>, stderr: &mut dyn Write) -> Result<Output, Failure> {
    let group = parse_group(&a.common.group)?;
    let (u, w) = resolve_interval(&group, a)?;
    let report = with_cache(&group, cache_dir, stderr, |ctx| Ok(IntervalReport::build(ctx, u, w)?))?;
    let text = match a.common.format.unwrap_or(Format::Json) {
        Format::Json => json(&report),
        Format::Text => interval_text(&report),
        Format::Csv => {
            let header = [
                "group", "u", "w", "length", "absolute_length", "vertices", "edges", "size", "total", "average", "r",
                "rtilde", "shifted_r", "f1", "f2", "regular",
            ];
            let values = [
                report.group.clone(),
                report.u.clone(),
                report.w.clone(),
                report.length.to_string(),
                report.absolute_length.to_string(),
                report.vertices.to_string(),
                report.edges.to_string(),
                report.size.to_string(),
                report.total.to_string(),
                report.average.clone(),
                report.r.to_string(),
                report.rtilde.to_string(),
                report.shifted_r.to_string(),
                report.f1.to_string(),
                report.f2.to_string(),
                report.regularity.regular.to_string(),
            ];
            csv_row(&header.map(String::from)) + &csv_row(&values)
        }
        Format::Dot => return Err(usage("use `export-dot` for DOT output")),
    };
    Ok(Output { text, passed: true })
}

fn interval_text(r: &IntervalReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "[{}, {}] in {}  length {}  absolute length {}", r.u, r.w, r.group, r.length, r.absolute_length);
    let _ = writeln!(s, "graph      {} vertices, {} edges", r.vertices, r.edges);
    if let (Some(p), Some(av)) = (&r.poincare, &r.poincare_average) {
        let _ = writeln!(s, "P          {p}  (av {av})");
    }
    let _ = writeln!(s, "R          {}", r.r);
    let _ = writeln!(s, "R~         {}", r.rtilde);
    let _ = writeln!(s, "R->        {}", r.shifted_r);
    let gamma: Vec<String> = r.gamma.iter().map(|g| format!("{}:{}", g.j, g.value)).collect();
    let _ = writeln!(s, "gamma      {}", gamma.join(" "));
    let _ = writeln!(s, "size       {}  total {}  av {}", r.size, r.total, r.average);
    let _ = writeln!(s, "sum R->    {}  (av {})", r.interval_sum, r.interval_sum_average);
    let f: Vec<String> = r.f_tilde.iter().map(|c| c.to_string()).collect();
    let _ = writeln!(s, "f~         {}  p1 {} p2 {}", f.join(" "), r.p1, r.p2);
    let reg = &r.regularity;
    let _ = writeln!(s, "regular    {}  (degree-regular {})", reg.regular, reg.degree_regular);
    let _ = writeln!(s, "th4        {}", if r.th4.holds() { "holds" } else { "VIOLATED" });
    s
}

fn cmd_table(a: &TableArgs, cache_dir: Option<&Path>, stderr: &mut dyn Write) -> Result<Output, Failure> {
    let format = a.format.unwrap_or(Format::Csv);
    if format == Format::Dot {
        return Err(usage("tables have no DOT form"));
    }
    let text = match a.table {
        TableKind::RPolys => {
            let spec = a.group.as_deref().ok_or_else(|| usage("--table r-polys needs --group"))?;
            let group = parse_group(spec)?;
            let classes = with_cache(&group, cache_dir, stderr, |ctx| Ok(r_poly_classes(ctx)))?;
            match format {
                Format::Json => json(&classes),
                Format::Csv => {
                    let mut s = csv_row(&["members", "length", "r", "gamma_form", "size"].map(String::from));
                    for c in &classes {
                        s += &csv_row(&[
                            c.members.join(" "),
                            c.length.to_string(),
                            c.r.to_string(),
                            c.gamma_form.clone(),
                            c.size.to_string(),
                        ]);
                    }
                    s
                }
                _ => {
                    let mut s = String::new();
                    for c in &classes {
                        let _ = writeln!(s, "{:<24} {:<40} {}", c.members.join(" "), c.gamma_form, c.size);
                    }
                    s
                }
            }
        }
        TableKind::Dihedral => {
            let table = DihedralTable::new(a.max_n);
            match format {
                Format::Json => json(&table),
                Format::Csv => {
                    let mut s = csv_row(&["n", "d_n(q)", "d_n", "d'_n"].map(String::from));
                    for r in &table.rows {
                        s += &csv_row(&[r.n.to_string(), r.poly.to_string(), r.size.to_string(), r.total.to_string()]);
                    }
                    s
                }
                _ => {
                    let mut s = String::new();
                    for r in &table.rows {
                        let _ = writeln!(s, "{:>3}  {:<60} {:>8} {:>10}", r.n, r.poly.to_string(), r.size, r.total);
                    }
                    s
                }
            }
        }
    };
    Ok(Output { text, passed: true })
}

fn cmd_verify(a: &VerifyArgs, stderr: &mut dyn Write) -> Result<Output, Failure> {
    let group = parse_group(&a.common.group)?;
    let checks: Vec<String> = if a.suite.trim() == "all" {
        Vec::new()
    } else {
        a.suite.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
    };
    if let Some(bad) = checks.iter().find(|c| !CHECKS.contains(&c.as_str())) {
        return Err(usage(format!("unknown check `{bad}`; known: {}", CHECKS.join(", "))));
    }
    let config = SuiteConfig {
        workers: a.workers,
        max_interval_len: a.max_interval_len,
        sample: a.sample.map(|n| n as usize),
        seed: a.seed,
        checks,
    };
    let start = Instant::now();
    let report = run_suite(&group, &config)?;
    // Timing stays off stdout so the report is byte-stable.
    let _ = writeln!(stderr, "verify {}: {:.3}s", group.descriptor(), start.elapsed().as_secs_f64());
    let text = match a.common.format.unwrap_or(Format::Text) {
        Format::Text => report.render_text(),
        Format::Json => json(&report),
        f => return Err(usage(format!("verify does not support {f:?} output"))),
    };
    Ok(Output { text, passed: report.passed() })
}

fn cmd_scan(a: &ScanArgs) -> Result<Output, Failure> {
    let group = parse_group(&a.common.group)?;
    let pairs = match a.scope {
        Scope::All => group.comparable_pairs(),
        Scope::Lower => lower_pairs(&group),
    };
    if let Some(cap) = a.max_interval_len {
        if let Some(&(u, w)) = pairs.iter().find(|&&(u, w)| group.length_between(u, w) > cap) {
            return Err(usage(format!(
                "[{}, {}] has length {} beyond --max-interval-len {cap}",
                group.label(u),
                group.label(w),
                group.length_between(u, w)
            )));
        }
    }
    let report = conjecture_scan(&group, &pairs, a.workers);
    let text = match a.common.format.unwrap_or(Format::Json) {
        Format::Json => json(&report),
        Format::Text => {
            let e = &report.edges;
            let mut s = format!(
                "{}: {} intervals, {} violations\nedges: {} strict, {} equal, {} decreasing\n",
                report.group,
                report.intervals_checked,
                report.violations.len(),
                e.strict,
                e.equal,
                e.decreasing
            );
            for (u, w) in &report.violations {
                let _ = writeln!(s, "violation [{u}, {w}]");
            }
            s
        }
        f => return Err(usage(format!("scan does not support {f:?} output"))),
    };
    Ok(Output { text, passed: report.violations.is_empty() })
}

fn cmd_export_dot(a: &IntervalArgs) -> Result<Output, Failure> {
    if !matches!(a.common.format, None | Some(Format::Dot)) {
        return Err(usage("export-dot only writes DOT"));
    }
    let group = parse_group(&a.common.group)?;
    let (u, w) = resolve_interval(&group, a)?;
    let graph = BruhatGraph::build(&group, group.interval(u, w)?);
    Ok(Output { text: graph.to_dot(&group), passed: true })
}
