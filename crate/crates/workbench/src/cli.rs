//! Argument parsing and dispatch for `dehn-wb`.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dehn_core::enumerator::{EnumOptions, DEFAULT_NODE_LIMIT};

use crate::catalog::{catalog_script, preset_ids, LensFamily, DEFAULT_SPLIT};
use crate::dsl::{parse_monodromy, parse_terms, MonodromyScript};
use crate::plumbing_io::load_plumbing;
use crate::report::Report;
use crate::scenarios::{self, Analysis, ScenarioError};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

#[derive(Parser, Debug)]
#[command(
    name = "dehn-wb",
    version,
    about = "Planar open book monodromy workbench"
)]
pub struct Cli {
    /// Search node budget for enumeration and orbit search.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_LIMIT)]
    pub budget: u64,
    /// Upper bound on the number of factors in enumerated solutions.
    #[arg(long, global = true)]
    pub max_factors: Option<usize>,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for property sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

/// Where the monodromy comes from.
#[derive(Args, Debug, Clone)]
pub struct MonodromyInput {
    /// Full script, e.g. "n=3; B1 B2 B3 O".
    #[arg(long, conflicts_with_all = ["word", "catalog"])]
    pub script: Option<String>,
    /// Number of holes, used with --word.
    #[arg(long)]
    pub n: Option<usize>,
    /// Terms without the header, e.g. "B1 B2 B3 O".
    #[arg(long, requires = "n", conflicts_with = "catalog")]
    pub word: Option<String>,
    /// Catalog id, e.g. L41-ut.
    #[arg(long)]
    pub catalog: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List all profile classes of a monodromy.
    Enumerate(MonodromyInput),
    /// Profile classes with filling invariants and geography points.
    Geography(MonodromyInput),
    /// Geography plus a count of profile classes.
    Classify(MonodromyInput),
    /// Lantern relation, convex-curve family, Hurwitz equivalence and random sweeps.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Plumbing graph checks, open books and the Euler characteristic bound.
    #[command(subcommand)]
    Plumbing(PlumbingCommand),
    /// Lens space monodromies and other named examples.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// The curious family of product-equal factorizations on D_4.
    Curious {
        #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, default_value_t = 5, allow_hyphen_values = true)]
        to: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// The lantern relation for the frozen curves.
    Lantern,
    /// Invariance of tau_alpha tau_beta under conjugation by powers of tau_gamma.
    Conjugation {
        #[arg(long, default_value_t = 5)]
        nmax: u32,
    },
    /// Budgeted search for a Hurwitz path between two factorizations.
    Hurwitz {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Seeded random property checks.
    Sweep {
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct PlumbingInput {
    /// Plumbing file (line or JSON format) or preset name such as single-minus4.
    #[arg(long)]
    pub file: String,
    /// Vertex carrying the outer boundary.
    #[arg(long)]
    pub outer: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum PlumbingCommand {
    /// Intersection form, row sums and definiteness.
    Check(PlumbingInput),
    /// Page and monodromy of the open book.
    Openbook(PlumbingInput),
    /// Compare the largest profile factor count with k.
    Chibound(PlumbingInput),
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum FamilyArg {
    Ut,
    Vot,
    GenUt,
    GenVot,
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    /// A lens space monodromy.
    Lens {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = DEFAULT_SPLIT)]
        k: usize,
        /// Hole carrying the power in the gen-vot family; defaults to the last hole.
        #[arg(long)]
        power_hole: Option<usize>,
    },
    /// Known catalog ids.
    List,
}

/// Text written to stdout and stderr plus the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(String),
}

impl From<ScenarioError> for Failure {
    fn from(e: ScenarioError) -> Self {
        Failure::Data(e.to_string())
    }
}

fn load_script(input: &MonodromyInput) -> Result<MonodromyScript, Failure> {
    let data = |e: &dyn std::fmt::Display| Failure::Data(e.to_string());
    match (&input.script, &input.word, &input.catalog) {
        (Some(s), _, _) => parse_monodromy(s).map_err(|e| data(&e)),
        (_, Some(w), _) => parse_terms(input.n.unwrap_or(0), w).map_err(|e| data(&e)),
        (_, _, Some(id)) => catalog_script(id).map_err(|e| data(&e)),
        _ => Err(Failure::Usage(
            "one of --script, --word (with --n) or --catalog is required".into(),
        )),
    }
}

fn load_graph(input: &PlumbingInput) -> Result<dehn_core::plumbing::PlumbingGraph, Failure> {
    let g = load_plumbing(&input.file).map_err(|e| Failure::Data(e.to_string()))?;
    Ok(match input.outer {
        Some(o) => g.with_outer(o),
        None => g,
    })
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    let opts = EnumOptions {
        max_factors: cli.max_factors,
        node_limit: cli.budget,
        ..Default::default()
    };
    if cli.budget == 0 {
        return Err(Failure::Usage("--budget must be positive".into()));
    }
    let report = match &cli.command {
        Command::Enumerate(i) => scenarios::analyze(Analysis::Enumerate, &load_script(i)?, &opts)?,
        Command::Geography(i) => scenarios::analyze(Analysis::Geography, &load_script(i)?, &opts)?,
        Command::Classify(i) => {
            let mut r = scenarios::analyze(Analysis::Classify, &load_script(i)?, &opts)?;
            if let Some(id) = &i.catalog {
                r.input("catalog", id.as_str());
            }
            r
        }
        Command::Verify(VerifyCommand::Lantern) => scenarios::verify_lantern()?,
        Command::Verify(VerifyCommand::Conjugation { nmax }) => {
            scenarios::verify_conjugation_family(*nmax)?
        }
        Command::Verify(VerifyCommand::Hurwitz { n, from, to }) => {
            let parse = |w: &str| {
                let s = if w.trim_start().starts_with("n=") {
                    parse_monodromy(w)
                } else {
                    parse_terms(*n, w)
                };
                s.map_err(|e| Failure::Data(e.to_string()))
            };
            let budget = usize::try_from(cli.budget).unwrap_or(usize::MAX) as u64;
            scenarios::verify_hurwitz(&parse(from)?, &parse(to)?, budget)?
        }
        Command::Verify(VerifyCommand::Sweep { cases }) => {
            scenarios::verify_sweep(cli.seed, *cases, &opts)?
        }
        Command::Plumbing(PlumbingCommand::Check(i)) => scenarios::plumbing_check(&load_graph(i)?)?,
        Command::Plumbing(PlumbingCommand::Openbook(i)) => {
            scenarios::plumbing_openbook(&load_graph(i)?)?
        }
        Command::Plumbing(PlumbingCommand::Chibound(i)) => {
            scenarios::plumbing_chibound(&load_graph(i)?, &opts)?
        }
        Command::Catalog(CatalogCommand::Lens {
            family,
            p,
            m,
            k,
            power_hole,
        }) => {
            let fam = match family {
                FamilyArg::Ut => LensFamily::Ut { p: *p },
                FamilyArg::Vot => LensFamily::Vot { p: *p, k: *k },
                FamilyArg::GenUt => LensFamily::GenUt { p: *p, m: *m },
                FamilyArg::GenVot => LensFamily::GenVot {
                    p: *p,
                    m: *m,
                    k: *k,
                    power_hole: power_hole.unwrap_or(p.saturating_sub(1)),
                },
            };
            scenarios::catalog_lens(fam).map_err(|e| match e {
                ScenarioError::Catalog(c) => Failure::Usage(c.to_string()),
                other => Failure::Data(other.to_string()),
            })?
        }
        Command::Catalog(CatalogCommand::List) => {
            let mut r = Report::new("catalog list");
            let ids = preset_ids();
            r.summarize("ids", serde_json::json!(ids));
            r.check(
                "catalog ids resolve",
                ids.iter().all(|id| catalog_script(id).is_ok()),
                format!("{} ids", ids.len()),
            );
            r
        }
        Command::Curious { from, to } => {
            if from > to {
                return Err(Failure::Usage(format!("empty range {from}..={to}")));
            }
            scenarios::curious_family(*from, *to, &opts)?
        }
    };
    Ok(report)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(report) => {
            let stdout = if cli.json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            Outcome {
                code: report.exit_code(),
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(m)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("usage error: {m}\n"),
        },
        Err(Failure::Data(m)) => Outcome {
            code: EXIT_DATA,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
    }
}
