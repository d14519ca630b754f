mod commands;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use scrolldiv::algebra::DEFAULT_PRIME;
use scrolldiv::groebner::DEFAULT_MAX_PAIRS;
use scrolldiv::resolution::Filtration;
use scrolldiv::{Error, ScrollData};

use commands::Options;
use report::{Format, Report};

/// Symbolic powers of the divisorial ideal K on a rational normal scroll.
#[derive(Parser)]
#[command(name = "scrolldiv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal generators of K^(n) with their gradings.
    Gens(Common),
    /// Gröbner basis of the preimage of K^(n) in S and its certification.
    Gb(Common),
    /// Ranks and shifts of the resolution built from a filtration.
    Resolve(Common),
    /// Betti numbers of K^(n) from Koszul homology; pd, depth, regularity.
    Betti(Common),
    /// Regularity of K^(n): closed formula against the Betti oracle.
    Reg(Common),
    /// Hilbert functions of A and K^(n), and the filtration cross-check.
    Hilbert(Common),
    /// Generators of the symbolic Rees algebra and factorizations over them.
    Rees(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum FiltrationArg {
    Fine,
    Coarse,
}

#[derive(Args)]
struct Common {
    /// Block widths, weakly decreasing, e.g. 3,2,1.
    #[arg(long, value_delimiter = ',', required = true)]
    sigma: Vec<u32>,
    /// The symbolic power n (at least 2).
    #[arg(short = 'n', long = "power")]
    n: u32,
    /// Characteristic of the coefficient field.
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u32,
    /// Total-degree bound for Betti tables, Hilbert functions and Euler checks.
    #[arg(long)]
    degree_bound: Option<u32>,
    #[arg(long, value_enum, default_value_t = FiltrationArg::Fine)]
    filtration: FiltrationArg,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Budget of S-pair reductions for the Buchberger engine.
    #[arg(long, default_value_t = DEFAULT_MAX_PAIRS)]
    max_pairs: usize,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Config(_) => 2,
        Error::Capacity { .. } => 3,
        Error::Incomplete(_) => 4,
        Error::Domain(_) | Error::Invariant(_) => 1,
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("SCROLLDIV_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("SCROLLDIV_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let (Command::Gens(c)
    | Command::Gb(c)
    | Command::Resolve(c)
    | Command::Betti(c)
    | Command::Reg(c)
    | Command::Hilbert(c)
    | Command::Rees(c)) = &cli.command;

    let data = match ScrollData::new(c.sigma.clone(), c.n, c.prime) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let opts = Options {
        degree_bound: c.degree_bound,
        filtration: match c.filtration {
            FiltrationArg::Fine => Filtration::Fine,
            FiltrationArg::Coarse => Filtration::Coarse,
        },
        max_pairs: c.max_pairs,
    };
    let outcome: scrolldiv::Result<Report> = match &cli.command {
        Command::Gens(_) => commands::gens(&data),
        Command::Gb(_) => commands::gb(&data, &opts),
        Command::Resolve(_) => commands::resolve(&data, &opts),
        Command::Betti(_) => commands::betti(&data, &opts),
        Command::Reg(_) => commands::reg(&data, &opts),
        Command::Hilbert(_) => commands::hilbert(&data, &opts),
        Command::Rees(_) => commands::rees(&data),
    };
    let report = match outcome {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };

    let stdout = io::stdout();
    let mut out = stdout.lock();
    if let Err(e) = report.render(&data, c.format, &mut out).and_then(|_| out.flush()) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if report.incomplete {
        eprintln!(
            "error: Betti table incomplete at degree bound {}; try --degree-bound {}",
            c.degree_bound.map_or("default".into(), |b| b.to_string()),
            commands::default_betti_bound(&data).max(c.degree_bound.unwrap_or(0) + 2)
        );
        return ExitCode::from(4);
    }
    if !report.all_checks_pass() {
        let failed: Vec<&String> = report.checks.iter().filter(|(_, ok)| !**ok).map(|(k, _)| k).collect();
        eprintln!("error: cross-checks failed: {failed:?}");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
