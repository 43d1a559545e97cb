//! `ssmin`: minimize symmetric submodular functions from the command line.
//!
//! Exit codes: 0 success, 1 property violation or failed reproduction,
//! 2 input error, 3 alpha outside the supported domain.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ssmin::verify::PairProperty;

use crate::input::InputFormat;

#[derive(Debug, Parser)]
#[command(
    name = "ssmin",
    version,
    about = "Symmetric submodular minimization via alpha-orderings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find a nontrivial minimizer of the function in FILE.
    Minimize {
        file: PathBuf,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        alpha: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Print the alpha-ordering of FILE and classify its last pair.
    Order {
        file: PathBuf,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        alpha: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Check FILE for symmetry and/or submodularity.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = CheckProperty::Both)]
        property: CheckProperty,
        #[command(flatten)]
        common: Common,
    },
    /// Reproduce a counterexample ordering whose last pair lacks a property.
    Demo {
        #[arg(long, value_parser = parse_pair_property)]
        prop: PairProperty,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long)]
        json: bool,
    },
    /// Count oracle calls of the minimizer on cycles or seeded random graphs.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Use seeded random graphs instead of unit cycles.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, clap::Args)]
struct Common {
    /// Input format; inferred from the `.graph` / `.table` extension if omitted.
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckProperty {
    Symmetric,
    Submodular,
    Both,
}

fn parse_pair_property(s: &str) -> Result<PairProperty, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Minimize {
            file,
            alpha,
            common,
        } => input::load(&file, common.format)
            .and_then(|f| commands::minimize(&f, alpha, common.json)),
        Command::Order {
            file,
            alpha,
            common,
        } => {
            input::load(&file, common.format).and_then(|f| commands::order(&f, alpha, common.json))
        }
        Command::Check {
            file,
            property,
            common,
        } => input::load(&file, common.format)
            .and_then(|f| commands::check(&f, property, common.json)),
        Command::Demo { prop, alpha, json } => commands::demo(prop, alpha, json),
        Command::Bench {
            sizes,
            seed,
            alpha,
            json,
        } => commands::bench(&sizes, seed, alpha, json),
    };
    match outcome {
        Ok(report) => {
            print!("{}", report.output);
            ExitCode::from(report.code)
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}
