use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use plurality_cli::{run, CliError, Request, RunOptions};
use plurality_core::sequential::{Engine, SolverBounds};

/// Exact equilibria of plurality voting with lazy voters.
#[derive(Parser, Debug)]
#[command(name = "plurality", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalFlags,
}

#[derive(Args, Debug)]
struct GlobalFlags {
    /// Skip the outcome-distinctness check on the input profile.
    #[arg(long, global = true)]
    skip_validate: bool,
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Omit timing from the result document.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Largest (m+1)^n the history engine may allocate.
    #[arg(long, global = true)]
    max_states: Option<u128>,
    /// Largest n*(n+1)^m the count engine may allocate.
    #[arg(long, global = true)]
    max_table: Option<u128>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that no voter is indifferent between two outcomes.
    Validate { file: PathBuf },
    /// Test whether a ballot vector is a pure Nash equilibrium.
    PneCheck {
        file: PathBuf,
        /// Comma-separated ballots in voter order: candidate names or ABSTAIN.
        #[arg(long, value_delimiter = ',')]
        ballots: Vec<String>,
    },
    /// Construct a pure Nash equilibrium (exit 4 if none exists).
    PneFind { file: PathBuf },
    /// List every pure Nash equilibrium outcome.
    PneEnum { file: PathBuf },
    /// Enumerate all equilibrium ballot vectors by brute force.
    PneBrute { file: PathBuf },
    /// Subgame-perfect play of the sequential election.
    Spne {
        file: PathBuf,
        /// Solver; chosen by problem size when omitted.
        #[arg(long, value_enum)]
        engine: Option<EngineArg>,
    },
    /// Subgame-perfect play by plain game-tree search.
    SpneOracle { file: PathBuf },
    /// Two-candidate closed-form play.
    TwoCand { file: PathBuf },
    /// Voting order that gives the majority side exactly `k` votes.
    Mandate {
        #[arg(long)]
        na: usize,
        #[arg(long)]
        nb: usize,
        #[arg(long)]
        k: usize,
    },
    /// Build the election encoding an exact-cover instance.
    ReduceX3c { file: PathBuf },
    /// Random election with rank-power utilities.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    History,
    Counts,
    Tree,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::History => Engine::History,
            EngineArg::Counts => Engine::Counts,
            EngineArg::Tree => Engine::Tree,
        }
    }
}

fn request(command: Command) -> (Request, Option<PathBuf>) {
    match command {
        Command::Validate { file } => (Request::Validate, Some(file)),
        Command::PneCheck { file, ballots } => (Request::PneCheck { ballots }, Some(file)),
        Command::PneFind { file } => (Request::PneFind, Some(file)),
        Command::PneEnum { file } => (Request::PneEnum, Some(file)),
        Command::PneBrute { file } => (Request::PneBrute, Some(file)),
        Command::Spne { file, engine } => (
            Request::Spne {
                engine: engine.map(Engine::from),
            },
            Some(file),
        ),
        Command::SpneOracle { file } => (Request::SpneOracle, Some(file)),
        Command::TwoCand { file } => (Request::TwoCand, Some(file)),
        Command::Mandate { na, nb, k } => (
            Request::Mandate {
                n_a: na,
                n_b: nb,
                k,
            },
            None,
        ),
        Command::ReduceX3c { file } => (Request::ReduceX3c, Some(file)),
        Command::Gen { n, m, seed } => (Request::Gen { n, m, seed }, None),
    }
}

fn execute(cli: Cli) -> Result<u8, CliError> {
    if let Some(threads) = cli.global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Input(format!("--threads: {e}")))?;
    }
    let defaults = SolverBounds::default();
    let opts = RunOptions {
        skip_validate: cli.global.skip_validate,
        no_timing: cli.global.no_timing,
        bounds: SolverBounds {
            max_states: cli.global.max_states.unwrap_or(defaults.max_states),
            max_table: cli.global.max_table.unwrap_or(defaults.max_table),
            ..defaults
        },
    };
    let (req, path) = request(cli.command);
    let text = match &path {
        Some(p) => Some(
            std::fs::read_to_string(p)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display())))?,
        ),
        None => None,
    };
    let response = run(&req, text.as_deref(), &opts)?;
    let json = serde_json::to_string_pretty(&response.document)
        .map_err(|e| CliError::Input(format!("cannot serialize result: {e}")))?;
    let mut out = std::io::stdout().lock();
    writeln!(out, "{json}")?;
    eprintln!("{}", response.summary);
    Ok(response.exit_code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
