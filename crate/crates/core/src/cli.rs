//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification or internal failure, 2 usage or
//! validation error.

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::conservation::{enumerate_laws, first_order_laws, EnumerateOptions, DEFAULT_MAX_TUPLES};
use crate::error::Error;
use crate::multiplets::{
    build_multiplet, reduced_pair, verify_sweep, BuildOptions, MultipletLabels,
};
use crate::render;
use crate::signatures::Algebra;
use crate::weights::HalfInt;

/// Environment variable capping the number of label tuples an enumeration
/// or sweep may visit.
pub const MAX_TUPLES_ENV: &str = "BGG_MAX_TUPLES";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sopq",
    version,
    about = "Intertwining differential operators and conservation laws for so(p,q)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a main multiplet from labels n_1,...,n_{h+1}.
    Multiplet(MultipletArgs),
    /// List first-order operators (conservation laws).
    Conslaws(ConslawsArgs),
    /// Build the reduced pair of minimal representations.
    Reduced(ReducedArgs),
    /// Cross-check closed-form arrows against the BGG oracle over a sweep.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

fn parse_split(s: &str) -> Result<(u32, u32), String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected P,Q, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(p)?, num(q)?))
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct AlgebraArgs {
    /// p,q with p >= q
    #[arg(long, value_parser = parse_split, value_name = "P,Q")]
    pub algebra: Option<(u32, u32)>,
    /// p+q alone; results depend only on it
    #[arg(long = "n", value_name = "N")]
    pub n_total: Option<u32>,
}

impl AlgebraArgs {
    fn resolve(&self) -> Result<Algebra, Error> {
        match (&self.algebra, self.n_total) {
            (Some((p, q)), _) => Algebra::new(*p, *q),
            (None, Some(n)) => Algebra::from_total(n),
            (None, None) => unreachable!("clap requires one of --algebra/--n"),
        }
    }
}

#[derive(Debug, Args)]
pub struct MultipletArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Labels as fraction strings, e.g. 1/2,3/2
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    pub labels: Vec<HalfInt>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also show oracle-only arrows
    #[arg(long)]
    pub include_extras: bool,
}

#[derive(Debug, Args)]
pub struct ConslawsArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        conflicts_with = "max_label"
    )]
    pub labels: Option<Vec<HalfInt>>,
    #[arg(long, required_unless_present = "labels")]
    pub max_label: Option<HalfInt>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Keep one law of each mirror pair n_1 <-> -n_1
    #[arg(long)]
    pub fold_chirality: bool,
}

#[derive(Debug, Args)]
pub struct ReducedArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// n_3,...,n_{h+1}; empty when h = 1
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub tail: Vec<HalfInt>,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub eps: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[arg(long)]
    pub max_label: HalfInt,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn error(err: &Error) -> Self {
        let code = match err {
            Error::Verification(_) | Error::Internal(_) | Error::Unclassified(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code,
        }
    }
}

fn max_tuples() -> Result<usize, Error> {
    match std::env::var(MAX_TUPLES_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Limit(format!("{MAX_TUPLES_ENV}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_MAX_TUPLES),
    }
}

fn unsupported(format: Format, what: &str) -> Error {
    Error::Limit(format!("format {format:?} is not available for {what}"))
}

pub fn cmd_multiplet(args: &MultipletArgs) -> Result<String, Error> {
    let algebra = args.algebra.resolve()?;
    let labels = MultipletLabels::new(args.labels.clone(), &algebra)?;
    let m = build_multiplet(&labels, BuildOptions::default())?;
    Ok(match args.format {
        Format::Text => render::multiplet_text(&m, &algebra, args.include_extras),
        Format::Json => render::to_json(&render::multiplet_doc(&m, &algebra, args.include_extras)),
        Format::Dot => render::emit_dot(&m, &algebra, args.include_extras),
    })
}

pub fn cmd_conslaws(args: &ConslawsArgs) -> Result<String, Error> {
    let algebra = args.algebra.resolve()?;
    let laws = match (&args.labels, args.max_label) {
        (Some(labels), _) => {
            let labels = MultipletLabels::new(labels.clone(), &algebra)?;
            let m = build_multiplet(&labels, BuildOptions::default())?;
            first_order_laws(&m)?
                .into_iter()
                .map(|law| (m.kind.clone(), law))
                .collect()
        }
        (None, Some(max)) => enumerate_laws(
            &algebra,
            max,
            EnumerateOptions {
                fold_chirality: args.fold_chirality,
                max_tuples: max_tuples()?,
            },
        )?,
        (None, None) => unreachable!("clap requires --labels or --max-label"),
    };
    match args.format {
        Format::Text => Ok(render::laws_text(&algebra, &laws)),
        Format::Json => Ok(render::to_json(&render::laws_doc(&algebra, &laws))),
        Format::Dot => Err(unsupported(args.format, "conslaws")),
    }
}

pub fn cmd_reduced(args: &ReducedArgs) -> Result<String, Error> {
    let algebra = args.algebra.resolve()?;
    let m = reduced_pair(&args.tail, args.eps, &algebra)?;
    Ok(match args.format {
        Format::Text => render::multiplet_text(&m, &algebra, false),
        Format::Json => render::to_json(&render::multiplet_doc(&m, &algebra, false)),
        Format::Dot => render::emit_dot(&m, &algebra, false),
    })
}

/// Returns the rendered report and whether the sweep was clean.
pub fn cmd_verify(args: &VerifyArgs) -> Result<(String, bool), Error> {
    let algebra = args.algebra.resolve()?;
    let report = verify_sweep(&algebra, args.max_label, max_tuples()?)?;
    let text = match args.format {
        Format::Text => render::verify_text(&algebra, args.max_label, &report),
        Format::Json => render::to_json(&render::verify_doc(&algebra, args.max_label, &report)),
        Format::Dot => return Err(unsupported(args.format, "verify")),
    };
    Ok((text, report.is_clean()))
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Multiplet(a) => cmd_multiplet(a).map(Outcome::ok),
        Command::Conslaws(a) => cmd_conslaws(a).map(Outcome::ok),
        Command::Reduced(a) => cmd_reduced(a).map(Outcome::ok),
        Command::Verify(a) => cmd_verify(a).map(|(text, clean)| Outcome {
            stdout: text,
            stderr: String::new(),
            code: if clean { EXIT_OK } else { EXIT_FAILURE },
        }),
    };
    result.unwrap_or_else(|e| Outcome::error(&e))
}

/// Parse and run; clap usage errors map to exit code 2, `--help` to 0.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                Outcome::ok(rendered)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: EXIT_USAGE,
                }
            }
        }
    }
}
