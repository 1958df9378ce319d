//! Command-line front end for the Landau/noncommutative-oscillator library.
//!
//! Exit codes: 0 success, 1 invalid input or configuration, 2 a
//! verification check failed, 3 file I/O failure.

mod config;
mod isomorphism;
mod output;
mod sample;
mod spectrum;
mod verify_cmd;

use clap::{Parser, Subcommand};

use config::{GlobalOpts, RunConfig};

#[derive(Debug, Parser)]
#[command(
    name = "nc-landau",
    version,
    about = "Landau levels and the noncommutative oscillator: energy tables, \
             the parameter mapping between the two systems, numerical \
             verification suites, and state sampling"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Energy table over (n_r, m_l): both systems, J and eV
    Spectrum(spectrum::SpectrumArgs),
    /// Solve the field-to-oscillator mapping and report every check
    Isomorphism,
    /// Run numerical verification suites against the analytic results
    Verify(verify_cmd::VerifyArgs),
    /// Sample states onto grids; writes CSV/JSON and heatmaps
    Sample(sample::SampleArgs),
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    output::EXIT_VALIDATION
                }
            };
        }
    };

    let cfg = match RunConfig::resolve(&cli.global) {
        Ok(cfg) => cfg,
        Err(message) => {
            eprintln!("error: {message}");
            return output::EXIT_VALIDATION;
        }
    };

    if cli.global.print_config {
        return match cfg.to_pretty_json() {
            Ok(text) => {
                println!("{text}");
                0
            }
            Err(message) => {
                eprintln!("error: {message}");
                output::EXIT_VALIDATION
            }
        };
    }

    let Some(command) = cli.command else {
        eprintln!("error: no subcommand given; see --help");
        return output::EXIT_VALIDATION;
    };

    let result = match command {
        Command::Spectrum(args) => spectrum::run(&cfg, &args),
        Command::Isomorphism => isomorphism::run(&cfg),
        Command::Verify(args) => verify_cmd::run(&cfg, &args),
        Command::Sample(args) => sample::run(&cfg, &args),
    };

    match result {
        Ok(()) => 0,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}
