//! Command-line front end for toupie computations.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use report::{Report, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Validate,
    Branches,
    Tips,
    Chains,
    Betti,
    ResolutionCheck,
    SdrCheck,
    TorCoalgebra,
    ExtProducts,
    Stasheff,
    Yoneda,
    Gr,
    DoubleDual,
    OracleDiff,
}

#[derive(Debug, Parser)]
#[command(name = "toupie", version, about = "A-infinity structures and homological duals of toupie algebras")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Presentation in JSON. Without it, `--seed` picks a random presentation.
    pub input: Option<PathBuf>,
    /// Highest homological or bar degree to compute.
    #[arg(long, env = "TOUPIE_DEGREE", default_value_t = 5)]
    pub degree: usize,
    /// Highest arity of the A-infinity operations.
    #[arg(long, env = "TOUPIE_ARITY", default_value_t = 5)]
    pub arity: usize,
    #[arg(long, value_enum, env = "TOUPIE_FORMAT", default_value_t = Format::Text)]
    pub format: Format,
    /// Compare the result against a previously written JSON report.
    #[arg(long, env = "TOUPIE_GOLDEN")]
    pub golden: Option<PathBuf>,
    /// Seed for a random presentation when no input is given.
    #[arg(long, env = "TOUPIE_SEED")]
    pub seed: Option<u64>,
    /// Also write a computed presentation as input JSON.
    #[arg(long)]
    pub emit: Option<PathBuf>,
}

pub const MAX_DEGREE: usize = 10;
pub const MAX_ARITY: usize = 8;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match commands::run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let report = match &cli.golden {
        Some(path) => match report::compare_golden(report, path) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
        },
        None => report,
    };
    print!("{}", report.render(cli.format));
    ExitCode::from(match report.status {
        Status::Ok => 0,
        Status::Failed | Status::Refused => 1,
    })
}

impl Report {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(self).expect("serializable")),
            Format::Text => self.text(),
        }
    }
}
