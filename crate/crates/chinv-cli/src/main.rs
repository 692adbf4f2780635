//! `chinv`: command-line front end for chinv-core.
//!
//! Subcommands mirror the library's analyses; every report is versioned
//! JSON (or DOT for Hasse diagrams, or a plain-text rendering). Block
//! indices are 1-based on this boundary and 0-based inside the library.

use std::fmt;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use chinv_core::modspace::SpaceSpec;
use chinv_core::Caps;

mod commands;
mod dot;

use commands::Request;

#[derive(Parser)]
#[command(
    name = "chinv",
    version,
    about = "Invariant, characteristic, and hyperinvariant subspaces of a nilpotent GF(2) endomorphism"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a spanned subspace and report the frame of its characteristic hull
    Analyze(CmdArgs),
    /// Enumerate the lattice of hyperinvariant subspaces W(r)
    Lattice(CmdArgs),
    /// Count and classify the elements of an interval [W(r), W(mu)]
    Interval(CmdArgs),
    /// Construct a characteristic subspace that is not hyperinvariant
    Construct(CmdArgs),
    /// Run the brute-force cross-check suite
    Oracle(CmdArgs),
    /// Emit the Hasse diagram of the hyperinvariant lattice in DOT
    Hasse(CmdArgs),
    /// Run a JSON job config from a file ("-" reads stdin)
    Job { path: String },
}

#[derive(clap::Args)]
struct CmdArgs {
    /// Segre characteristic t1,...,tm, weakly increasing: --segre 1,3,6
    #[arg(long, value_name = "T,T,...")]
    segre: String,

    /// Generator expressions, semicolon separated: --gens "u1+f*u2;f^2*u3"
    #[arg(long, value_name = "EXPR;EXPR;...")]
    gens: Option<String>,

    /// Block index set, 1-based: --J 1,2,3
    #[arg(long = "J", value_name = "J,J,...")]
    j_set: Option<String>,

    /// Exponent tuple: one value per block for interval, one per J index for construct
    #[arg(long, value_name = "M,M,...")]
    mu: Option<String>,

    /// Endomorphism enumeration cap in bits (sweeps run over 2^bits maps)
    #[arg(long, value_name = "BITS")]
    cap_endos: Option<usize>,

    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Include per-element detail in reports
    #[arg(long)]
    verbose: bool,

    /// Write the report to a file instead of stdout
    #[arg(short, long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Dot,
    Text,
}

/// A batch job: the same request a flag invocation builds, as JSON.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JobConfig {
    segre: Vec<usize>,
    command: JobCommand,
    #[serde(default)]
    gens: Vec<String>,
    #[serde(default, rename = "J")]
    j_set: Option<Vec<usize>>,
    #[serde(default)]
    mu: Option<Vec<usize>>,
    #[serde(default)]
    caps: Option<CapsConfig>,
    #[serde(default)]
    output: Option<PathBuf>,
    #[serde(default)]
    format: Option<Format>,
    #[serde(default)]
    verbose: bool,
}

#[derive(Clone, Copy, Deserialize)]
#[serde(rename_all = "lowercase")]
enum JobCommand {
    Analyze,
    Lattice,
    Interval,
    Construct,
    Oracle,
    Hasse,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CapsConfig {
    #[serde(default)]
    max_endo_bits: Option<usize>,
    #[serde(default)]
    max_enum_dim: Option<usize>,
    #[serde(default)]
    max_rep_dim: Option<usize>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(chinv_core::Error),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<chinv_core::Error> for CliError {
    fn from(e: chinv_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// 0 ok, 1 usage, 2 hypothesis violation, 3 resource cap.
fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Core(chinv_core::Error::Hypothesis(_)) => 2,
        CliError::Core(chinv_core::Error::ResourceCap { .. }) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        // clap's own usage exit code is 2; the contract reserves 2 for
        // hypothesis violations, so usage errors remap to 1
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    let (kind, request, output) = match command {
        Command::Analyze(a) => build_request(JobCommand::Analyze, a)?,
        Command::Lattice(a) => build_request(JobCommand::Lattice, a)?,
        Command::Interval(a) => build_request(JobCommand::Interval, a)?,
        Command::Construct(a) => build_request(JobCommand::Construct, a)?,
        Command::Oracle(a) => build_request(JobCommand::Oracle, a)?,
        Command::Hasse(a) => build_request(JobCommand::Hasse, a)?,
        Command::Job { path } => job_request(&path)?,
    };
    let report = dispatch(kind, &request)?;
    match output {
        Some(path) => std::fs::write(path, report)?,
        None => print!("{report}"),
    }
    Ok(())
}

fn dispatch(kind: JobCommand, request: &Request) -> Result<String, CliError> {
    match kind {
        JobCommand::Analyze => commands::analyze(request),
        JobCommand::Lattice => commands::lattice(request),
        JobCommand::Interval => commands::interval(request),
        JobCommand::Construct => commands::construct(request),
        JobCommand::Oracle => commands::oracle(request),
        JobCommand::Hasse => commands::hasse(request),
    }
}

fn build_request(
    kind: JobCommand,
    args: CmdArgs,
) -> Result<(JobCommand, Request, Option<PathBuf>), CliError> {
    let segre = parse_list(&args.segre, "--segre")?;
    let gens = match args.gens {
        Some(g) => g.split(';').map(|s| s.trim().to_string()).collect(),
        None => Vec::new(),
    };
    let j_set = args
        .j_set
        .map(|j| parse_list(&j, "--J"))
        .transpose()?
        .map(|j| to_zero_based(&j))
        .transpose()?;
    let mu = args.mu.map(|m| parse_list(&m, "--mu")).transpose()?;
    let request = assemble(
        kind,
        segre,
        gens,
        j_set,
        mu,
        args.cap_endos,
        None,
        None,
        args.format,
        args.verbose,
    )?;
    Ok((kind, request, args.output))
}

fn job_request(path: &str) -> Result<(JobCommand, Request, Option<PathBuf>), CliError> {
    let raw = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    let job: JobConfig = serde_json::from_str(&raw)
        .map_err(|e| CliError::Usage(format!("invalid job config: {e}")))?;
    let (cap_endos, enum_dim, rep_dim) = match &job.caps {
        Some(c) => {
            for (name, value) in [
                ("max_endo_bits", c.max_endo_bits),
                ("max_enum_dim", c.max_enum_dim),
                ("max_rep_dim", c.max_rep_dim),
            ] {
                if value == Some(0) {
                    return Err(CliError::Usage(format!("caps must be positive: {name}")));
                }
            }
            (c.max_endo_bits, c.max_enum_dim, c.max_rep_dim)
        }
        None => (None, None, None),
    };
    let j_set = job.j_set.map(|j| to_zero_based(&j)).transpose()?;
    let request = assemble(
        job.command,
        job.segre,
        job.gens,
        j_set,
        job.mu,
        cap_endos,
        enum_dim,
        rep_dim,
        job.format,
        job.verbose,
    )?;
    Ok((job.command, request, job.output))
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    kind: JobCommand,
    segre: Vec<usize>,
    gens: Vec<String>,
    j_set: Option<Vec<usize>>,
    mu: Option<Vec<usize>>,
    cap_endos: Option<usize>,
    max_enum_dim: Option<usize>,
    max_rep_dim: Option<usize>,
    format: Option<Format>,
    verbose: bool,
) -> Result<Request, CliError> {
    let spec = SpaceSpec::new(segre)?;
    let defaults = Caps::default();
    let caps = Caps {
        max_endo_bits: cap_endos.unwrap_or(defaults.max_endo_bits),
        max_enum_dim: max_enum_dim.unwrap_or(defaults.max_enum_dim),
        max_rep_dim: max_rep_dim.unwrap_or(defaults.max_rep_dim),
    };
    let format = format.unwrap_or(match kind {
        JobCommand::Hasse => Format::Dot,
        _ => Format::Json,
    });
    Ok(Request {
        spec,
        gens,
        j_set,
        mu,
        caps,
        confirm_brute: cap_endos.is_some(),
        format,
        verbose,
    })
}

fn parse_list(input: &str, flag: &str) -> Result<Vec<usize>, CliError> {
    input
        .split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{flag}: expected comma-separated integers, got {part:?}")))
        })
        .collect()
}

fn to_zero_based(j_set: &[usize]) -> Result<Vec<usize>, CliError> {
    j_set
        .iter()
        .map(|&j| {
            j.checked_sub(1)
                .ok_or_else(|| CliError::Usage("J indices are 1-based".to_string()))
        })
        .collect()
}
