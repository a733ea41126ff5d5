//! The `zfgraph` command line.
//!
//! Every command prints one JSON [`Report`] on stdout. Exit codes: `0`
//! success, `2` hypothesis violation, `3` size cap exceeded or search cut
//! short (the partial report is still printed), `1` anything else,
//! including failed verification under `--verify` or `--replay`.

mod commands;
mod sweep;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::graphs::{FamilySpec, IntersectionSet};
use crate::report::{replay, Report};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "zfgraph", version, about = "Zero forcing and distance computations on Johnson, Grassmann and Hamming graphs")]
pub struct Cli {
    /// Re-verify the certificates of a saved report.
    #[arg(long, value_name = "REPORT")]
    pub replay: Option<PathBuf>,

    /// Also write the report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub report: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    /// `J_S(n,k)`; `-S` defaults to `{k-1}`, `-t` gives `{0..t}`.
    Johnson,
    /// `J_{0..t}(n,k)`.
    Kneser,
    /// `J_{q,S}(n,k)`.
    Grassmann,
    /// The fixed instance `J_{2,{1}}(4,2)` (construct only).
    GrassmannSpecial,
    /// `H(n,q)`.
    Hamming,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(value_enum)]
    pub family: Option<FamilyKind>,
    #[arg(short = 'n')]
    pub n: Option<usize>,
    #[arg(short = 'k')]
    pub k: Option<usize>,
    #[arg(short = 'q')]
    pub q: Option<usize>,
    /// Intersection set, comma separated.
    #[arg(short = 'S', value_delimiter = ',')]
    pub s: Vec<usize>,
    /// Shorthand for `S = {0..t}`.
    #[arg(short = 't')]
    pub t: Option<usize>,
}

impl FamilyArgs {
    fn need(v: Option<usize>, name: &str) -> Result<usize> {
        v.ok_or_else(|| Error::Invalid(format!("missing -{name}")))
    }

    fn intersection(&self, k: usize, default_top: bool) -> IntersectionSet {
        if !self.s.is_empty() {
            IntersectionSet::new(self.s.clone())
        } else if let Some(t) = self.t {
            IntersectionSet::up_to(t)
        } else if default_top {
            IntersectionSet::new(vec![k.saturating_sub(1)])
        } else {
            IntersectionSet::up_to(0)
        }
    }

    pub fn spec(&self) -> Result<FamilySpec> {
        let kind = self
            .family
            .ok_or_else(|| Error::Invalid("give a family or --graph".into()))?;
        let n = Self::need(self.n, "n");
        let spec = match kind {
            FamilyKind::Johnson | FamilyKind::Kneser => {
                let k = Self::need(self.k, "k")?;
                FamilySpec::GeneralizedJohnson {
                    n: n?,
                    k,
                    s: self.intersection(k, kind == FamilyKind::Johnson),
                }
            }
            FamilyKind::Grassmann => {
                let k = Self::need(self.k, "k")?;
                FamilySpec::GeneralizedGrassmann {
                    n: n?,
                    k,
                    q: self.q.unwrap_or(2),
                    s: self.intersection(k, true),
                }
            }
            FamilyKind::GrassmannSpecial => FamilySpec::grassmann(4, 2, 2, &[1]),
            FamilyKind::Hamming => FamilySpec::hamming(n?, Self::need(self.q, "q")?),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// A family or a saved graph file.
#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Binary graph cache or edge list instead of a family.
    #[arg(long, value_name = "PATH", conflicts_with = "family")]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZfMode {
    /// Closure of the given set, with its trace.
    Closure,
    /// Whether the given set is a zero forcing set of the chosen variant.
    Verify,
    /// Exhaustive search for the minimum.
    Exact,
    /// Exhaustive Grundy or Z-Grundy domination number.
    Grundy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Plain,
    Total,
    Connected,
    /// Z-Grundy (with `--mode grundy`).
    Z,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph and save it.
    Build {
        #[command(flatten)]
        family: FamilyArgs,
        /// Output path; `.txt` or `.edges` writes an edge list.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// BFS diameter and girth, optionally against the closed forms.
    Metrics {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        diameter: bool,
        #[arg(long)]
        girth: bool,
        /// Compare with the Grassmann diameter formula when it applies.
        #[arg(long)]
        check_formula: bool,
        /// Emit a walk certificate between two vertex ids.
        #[arg(long, value_delimiter = ',', value_name = "U,V")]
        walk: Option<Vec<usize>>,
    },
    /// Zero forcing: closure, verification, exact search, Grundy numbers.
    Zf {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ZfMode,
        /// JSON list of vertex ids or vertex labels.
        #[arg(long, value_name = "FILE")]
        set: Option<PathBuf>,
        /// The set file lists white vertices; use its complement.
        #[arg(long)]
        complement: bool,
        #[arg(long, value_enum, default_value = "plain")]
        variant: VariantArg,
        #[arg(long)]
        max_seconds: Option<f64>,
        /// Search threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Emit an explicit leader set.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        /// Run closure, the variant checks and the size identities.
        #[arg(long)]
        verify: bool,
    },
    /// Nullity of `B_n` over GF(2) and its kernel basis.
    Nullity {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'q')]
        q: usize,
    },
    /// Run a parameter grid from a TOML file.
    Sweep {
        config: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: SweepFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a command produced: a report, or raw text (sweep tables).
pub enum Output {
    Report(Report, i32),
    Text(String, i32),
}

pub(crate) fn execute(cli: &Cli, argv: &[String], caps: &Caps) -> Result<Output> {
    if let Some(path) = &cli.replay {
        let text = std::fs::read_to_string(path)?;
        let saved = Report::from_json(&text)?;
        let outcome = replay(&saved, caps)?;
        let mut r = Report::new(argv.to_vec(), saved.graph.clone());
        r.value("certificates", outcome.certificates)
            .value("failed", &outcome.failed)
            .verdict("replay", outcome.ok());
        let code = if outcome.ok() { 0 } else { 1 };
        return Ok(Output::Report(r, code));
    }
    let Some(cmd) = &cli.command else {
        return Err(Error::Invalid("no command given (try --help)".into()));
    };
    commands::run(cmd, argv, caps)
}

/// Runs the tool on `args` (including the program name), printing to
/// stdout/stderr, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let argv: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let caps = Caps::from_env();
    match execute(&cli, &argv, &caps) {
        Ok(Output::Report(r, code)) => {
            let json = r.to_json();
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout(), "{json}");
            if let Some(path) = &cli.report {
                if let Err(e) = std::fs::write(path, &json) {
                    eprintln!("error: {e}");
                    return 1;
                }
            }
            code
        }
        Ok(Output::Text(t, code)) => {
            let _ = write!(std::io::stdout(), "{t}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
