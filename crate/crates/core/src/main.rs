use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use quantinv::quantum_rep::FramingConvention;
use quantinv::runner::{self, Command, JobSpec, Mode, OutputFormat, Suite};

/// Exact coloured Jones polynomials and WRT invariants of braid closures.
#[derive(Parser)]
#[command(name = "quantinv", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads (defaults to the environment variable, then all cores).
    #[arg(long, env = runner::WORKERS_ENV, global = true)]
    workers: Option<usize>,
    /// Recompute in complex doubles and compare.
    #[arg(long, global = true)]
    crosscheck: bool,
    /// Report wall-clock time (makes output non-deterministic).
    #[arg(long, global = true)]
    timing: bool,
    /// Framing convention: ribbon or paper-literal.
    #[arg(long, global = true)]
    convention: Option<FramingConvention>,
}

#[derive(Args, Default)]
struct LinkArgs {
    /// Braid word as signed generator indices, e.g. "1 1 1".
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// Strand count (required for words that do not mention the last strand).
    #[arg(long)]
    strands: Option<usize>,
    /// Per-component framings.
    #[arg(long, allow_hyphen_values = true)]
    framings: Option<String>,
    /// JSON record {strands, word, framings}.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Coloured Jones polynomial of a framed braid closure.
    Jones {
        #[command(flatten)]
        link: LinkArgs,
        /// Per-component colours.
        #[arg(long)]
        colours: Option<String>,
        /// Include the per-index summand table.
        #[arg(long)]
        summands: bool,
    },
    /// WRT invariant by the state sum, checked against the Kirby-colour sum.
    Wrt {
        #[command(flatten)]
        link: LinkArgs,
        /// Level, list ("3,5") or inclusive range ("3..5").
        #[arg(long)]
        level: Option<String>,
    },
    /// Evaluate a pairing-data file, optionally specialized.
    PairingEval {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        colours: Option<String>,
        /// Component of each strand, for data with x-variables.
        #[arg(long)]
        colouring: Option<String>,
        #[arg(long)]
        level: Option<String>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        level: Option<String>,
        /// Corpus file (defaults to the bundled corpus).
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Evaluate every corpus entry and compare against reference data.
    Corpus {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        level: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn job_from(cli: Cli) -> Result<JobSpec, String> {
    let c = cli.common;
    let mut job = JobSpec {
        format: match c.format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
        workers: c.workers,
        mode: if c.crosscheck {
            Mode::ExactWithFloatCrosscheck
        } else {
            Mode::Exact
        },
        timing: c.timing,
        convention: c.convention,
        ..JobSpec::default()
    };
    let link = |job: &mut JobSpec, l: LinkArgs| {
        job.braid = l.braid;
        job.strands = l.strands;
        job.framings = l.framings;
        job.input = l.input;
    };
    match cli.command {
        Cmd::Jones {
            link: l,
            colours,
            summands,
        } => {
            job.command = Some(Command::Jones);
            link(&mut job, l);
            job.colours = colours;
            job.summands = summands;
        }
        Cmd::Wrt { link: l, level } => {
            job.command = Some(Command::Wrt);
            link(&mut job, l);
            job.levels = level;
        }
        Cmd::PairingEval {
            input,
            colours,
            colouring,
            level,
        } => {
            job.command = Some(Command::PairingEval);
            job.input = Some(input);
            job.colours = colours;
            job.colouring = colouring;
            job.levels = level;
        }
        Cmd::Verify {
            suite,
            level,
            input,
        } => {
            job.command = Some(Command::Verify);
            job.suite = suite.parse::<Suite>().map_err(|e| e.to_string())?;
            job.levels = level;
            job.input = input;
        }
        Cmd::Corpus { input, level } => {
            job.command = Some(Command::Corpus);
            job.input = input;
            job.levels = level;
        }
    }
    Ok(job)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let job = match job_from(cli) {
        Ok(j) => j,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let outcome = runner::run(&job);
    print!("{}", outcome.output);
    if let Some(d) = &outcome.diagnostic {
        eprintln!("error: {d}");
    }
    ExitCode::from(outcome.status as u8)
}
