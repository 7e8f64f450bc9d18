//! Command-line surface: one subcommand per check, plus catalog listing,
//! group-file validation, and the exhaustive sweep.
//!
//! Exit codes: 0 when the requested checks hold (or the search found what
//! it was told to expect), 1 when a check fails mathematically, 2 for
//! usage, parse, and construction errors. Reports go to stdout and are
//! byte-stable across runs; diagnostics such as sweep wall time go to
//! stderr.

use crate::action::CosetSpace;
use crate::catalog;
use crate::error::Error;
use crate::group::{PermGroup, DEFAULT_ORDER_CAP, DEFAULT_SUBGROUP_CAP};
use crate::groupfile::{
    parse_element_arg, parse_group_file_capped, parse_subgroup_arg, render_group_file,
};
use crate::report::{render_report, Report, ReportFormat};
use crate::verify::{
    check_fgs, check_lemma_all, check_lemma_avg, check_lemma_via_fgs, check_theorem,
    check_theorem_all, falsify_klingen_step, gassmann_pairs, sweep, SweepCaps,
    DEFAULT_POINTWISE_CAP, DEFAULT_SEARCH_CAP,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    0
                }
                _ => {
                    eprint!("{err}");
                    2
                }
            };
        }
    };
    let format = cli.format.into();
    match execute(cli.command) {
        Ok(outcome) => {
            print!("{}", render_report(&outcome.report, format));
            for note in &outcome.notes {
                eprintln!("{note}");
            }
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

#[derive(Parser)]
#[command(
    name = "permchar",
    version,
    about = "Check averaging, orbit-counting, and character-transfer identities for permutation characters of finite groups"
)]
struct Cli {
    /// Report encoding on stdout
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => ReportFormat::Text,
            FormatArg::Json => ReportFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check that the character on cosets of UN equals the N-average of
    /// the character on cosets of U
    CheckLemma(CheckLemmaArgs),
    /// Check that the averaged fixed-point count of g·n over n in N
    /// equals the number of <N,g>-orbits that are single N-orbits
    CheckFgs(CheckFgsArgs),
    /// Check that equal characters for U and V force equal characters
    /// for UN and VN
    CheckTheorem(CheckTheoremArgs),
    /// Search for an element whose character value on cosets of UN is
    /// positive while the value on cosets of U is zero
    FalsifyKlingen(FalsifyArgs),
    /// Search a group for non-conjugate subgroups with equal permutation
    /// characters
    GassmannSearch(GassmannArgs),
    /// Run every check over a universe of catalog groups and tally the
    /// results
    Sweep(SweepArgs),
    /// List the named groups in the catalog
    Catalog,
    /// Validate a group file and print its canonical form
    Parse(ParseArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupSel {
    /// Catalog name of the group (e.g. C4, S3, D6, Q8, PSL(3,2), C2xS4)
    #[arg(long, value_name = "NAME")]
    group: Option<String>,
    /// Path to a group file with name/degree/gen directives
    #[arg(long, value_name = "PATH")]
    group_file: Option<PathBuf>,
}

#[derive(Args)]
struct SourceArgs {
    #[command(flatten)]
    sel: GroupSel,
    /// Abort if the group would enumerate more elements than this
    #[arg(long, value_name = "N", default_value_t = DEFAULT_ORDER_CAP)]
    order_cap: usize,
}

impl SourceArgs {
    fn load(&self) -> Result<PermGroup, CliError> {
        if let Some(name) = &self.sel.group {
            return Ok(catalog::group_by_name_capped(name, self.order_cap)?);
        }
        let path = self
            .sel
            .group_file
            .as_ref()
            .expect("clap enforces exactly one group source");
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        Ok(parse_group_file_capped(&text, self.order_cap)?)
    }
}

#[derive(Args)]
struct CheckLemmaArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Generators of U as ';'-separated cycles; empty for the trivial
    /// subgroup
    #[arg(long, value_name = "GENS", default_value = "")]
    subgroup: String,
    /// Generators of the normal subgroup N as ';'-separated cycles
    #[arg(long, value_name = "GENS")]
    normal: String,
    /// Element in cycle notation; omit to check one element per
    /// conjugacy class
    #[arg(long, value_name = "CYCLES")]
    element: Option<String>,
    /// Also cross-check via orbit counting on the cosets of U
    #[arg(long)]
    routes: bool,
}

#[derive(Args)]
struct CheckFgsArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Generators of U whose cosets are acted on; empty for the regular
    /// action
    #[arg(long, value_name = "GENS", default_value = "")]
    subgroup: String,
    /// Generators of N as ';'-separated cycles (normal in <N, g>)
    #[arg(long, value_name = "GENS")]
    normal: String,
    /// Element in cycle notation; omit to check one element per
    /// conjugacy class
    #[arg(long, value_name = "CYCLES")]
    element: Option<String>,
}

#[derive(Args)]
struct CheckTheoremArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Generators of U as ';'-separated cycles
    #[arg(long, value_name = "GENS")]
    u: String,
    /// Generators of V as ';'-separated cycles
    #[arg(long, value_name = "GENS")]
    v: String,
    /// Generators of N; omit to check against every normal subgroup
    #[arg(long, value_name = "GENS")]
    normal: Option<String>,
    /// Cap on the group order when enumerating the subgroup lattice
    #[arg(long, value_name = "N", default_value_t = DEFAULT_SUBGROUP_CAP)]
    sweep_cap: usize,
}

#[derive(Args)]
struct FalsifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Generators of U as ';'-separated cycles; empty for the trivial
    /// subgroup
    #[arg(long, value_name = "GENS", default_value = "")]
    subgroup: String,
    /// Generators of the normal subgroup N as ';'-separated cycles
    #[arg(long, value_name = "GENS")]
    normal: String,
    /// Succeed when no witness exists (exit 1 if one is found)
    #[arg(long)]
    expect_none: bool,
}

#[derive(Args)]
struct GassmannArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Cap on the group order when enumerating the subgroup lattice
    #[arg(long, value_name = "N", default_value_t = DEFAULT_SEARCH_CAP)]
    search_cap: usize,
    /// Succeed when no pair exists (exit 1 if one is found)
    #[arg(long)]
    expect_none: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated catalog names to sweep
    #[arg(long, value_name = "NAMES", conflicts_with = "max_order")]
    groups: Option<String>,
    /// Sweep every catalog group of order at most this (default 24)
    #[arg(long, value_name = "N")]
    max_order: Option<usize>,
    /// Record groups over this order as truncated instead of sweeping
    #[arg(long, value_name = "N", default_value_t = DEFAULT_SUBGROUP_CAP)]
    sweep_cap: usize,
    /// Check every element of groups up to this order, class
    /// representatives above it
    #[arg(long, value_name = "N", default_value_t = DEFAULT_POINTWISE_CAP)]
    pointwise_cap: usize,
}

#[derive(Args)]
struct ParseArgs {
    /// Path to the group file to validate
    #[arg(long, value_name = "PATH")]
    group_file: PathBuf,
    /// Abort if the group would enumerate more elements than this
    #[arg(long, value_name = "N", default_value_t = DEFAULT_ORDER_CAP)]
    order_cap: usize,
}

enum CliError {
    Lib(Error),
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{}: {}", path.display(), source),
        }
    }
}

struct Outcome {
    report: Report,
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new(report: Report, ok: bool) -> Self {
        Outcome {
            report,
            ok,
            notes: Vec::new(),
        }
    }
}

fn execute(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::CheckLemma(a) => {
            let g = a.source.load()?;
            let u = parse_subgroup_arg(&g, &a.subgroup)?;
            let n = parse_subgroup_arg(&g, &a.normal)?;
            if a.routes {
                let checks = match &a.element {
                    Some(e) => vec![check_lemma_via_fgs(&g, &u, &n, &parse_element_arg(&g, e)?)?],
                    None => g
                        .class_reps()
                        .map(|rep| check_lemma_via_fgs(&g, &u, &n, rep))
                        .collect::<Result<Vec<_>, _>>()?,
                };
                let ok = checks.iter().all(|c| c.holds);
                return Ok(Outcome::new(Report::LemmaRoute { checks }, ok));
            }
            let checks = match &a.element {
                Some(e) => vec![check_lemma_avg(&g, &u, &n, &parse_element_arg(&g, e)?)?],
                None => check_lemma_all(&g, &u, &n)?,
            };
            let ok = checks.iter().all(|c| c.holds);
            Ok(Outcome::new(Report::Lemma { checks }, ok))
        }
        Command::CheckFgs(a) => {
            let g = a.source.load()?;
            let u = parse_subgroup_arg(&g, &a.subgroup)?;
            let n = parse_subgroup_arg(&g, &a.normal)?;
            let space = CosetSpace::right_cosets(&g, &u)?;
            let checks = match &a.element {
                Some(e) => vec![check_fgs(&space, &n, &parse_element_arg(&g, e)?)?],
                None => g
                    .class_reps()
                    .map(|rep| check_fgs(&space, &n, rep))
                    .collect::<Result<Vec<_>, _>>()?,
            };
            let ok = checks.iter().all(|c| c.holds);
            Ok(Outcome::new(Report::Fgs { checks }, ok))
        }
        Command::CheckTheorem(a) => {
            let g = a.source.load()?;
            let u = parse_subgroup_arg(&g, &a.u)?;
            let v = parse_subgroup_arg(&g, &a.v)?;
            let checks = match &a.normal {
                Some(gens) => {
                    let n = parse_subgroup_arg(&g, gens)?;
                    vec![check_theorem(&g, &u, &v, &n)?]
                }
                None => check_theorem_all(&g, &u, &v, a.sweep_cap)?,
            };
            let ok = checks.iter().all(|c| c.holds);
            Ok(Outcome::new(Report::Theorem { checks }, ok))
        }
        Command::FalsifyKlingen(a) => {
            let g = a.source.load()?;
            let u = parse_subgroup_arg(&g, &a.subgroup)?;
            let n = parse_subgroup_arg(&g, &a.normal)?;
            let witness = falsify_klingen_step(&g, &u, &n)?;
            let found = witness.is_some();
            let ok = if a.expect_none { !found } else { found };
            Ok(Outcome::new(
                Report::Falsify {
                    group: g.label(),
                    subgroup: u.label(),
                    normal: n.label(),
                    witness,
                },
                ok,
            ))
        }
        Command::GassmannSearch(a) => {
            let g = a.source.load()?;
            let pairs = gassmann_pairs(&g, a.search_cap)?;
            let found = !pairs.is_empty();
            let ok = if a.expect_none { !found } else { found };
            Ok(Outcome::new(
                Report::Gassmann {
                    group: g.label(),
                    pairs,
                },
                ok,
            ))
        }
        Command::Sweep(a) => {
            let universe = match (&a.groups, a.max_order) {
                (Some(names), _) => names
                    .split(',')
                    .map(|name| catalog::group_by_name(name.trim()))
                    .collect::<Result<Vec<_>, _>>()?,
                (None, Some(max)) => catalog::universe_by_max_order(max)?,
                (None, None) => catalog::universe_by_max_order(24)?,
            };
            let caps = SweepCaps {
                subgroup_cap: a.sweep_cap,
                pointwise_cap: a.pointwise_cap,
            };
            let report = sweep(&universe, &caps)?;
            let ok = report.all_hold();
            let note = format!("sweep wall time: {:.3}s", report.wall.as_secs_f64());
            let mut outcome = Outcome::new(Report::Sweep { report }, ok);
            outcome.notes.push(note);
            Ok(outcome)
        }
        Command::Catalog => Ok(Outcome::new(
            Report::Catalog {
                entries: catalog::catalog_entries(),
            },
            true,
        )),
        Command::Parse(a) => {
            let text = std::fs::read_to_string(&a.group_file).map_err(|source| CliError::Io {
                path: a.group_file.clone(),
                source,
            })?;
            let g = parse_group_file_capped(&text, a.order_cap)?;
            Ok(Outcome::new(
                Report::CanonicalFile {
                    text: render_group_file(&g),
                },
                true,
            ))
        }
    }
}
