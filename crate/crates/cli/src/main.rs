mod commands;
mod fuzz;
mod report;

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use monopol::parse::{parse_ideal, parse_ideal_in, parse_ring};
use monopol::MonomialIdeal;

use crate::report::Outcome;

#[derive(Parser)]
#[command(
    name = "monopol",
    version,
    about = "Monomial ideals through polarization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Comma-separated variable names, overriding any `vars:` header.
    #[arg(long, global = true)]
    vars: Option<String>,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest random forest in fuzz campaigns.
    #[arg(long, global = true, default_value_t = 7)]
    max_facets: usize,

    /// Largest generator degree of random ideals in fuzz campaigns.
    #[arg(long, global = true, default_value_t = 4)]
    max_degree: u32,

    /// Number of fuzz instances.
    #[arg(long, global = true, default_value_t = 100)]
    trials: usize,

    /// Prime such as `x1, x3` for localization commands.
    #[arg(long, global = true)]
    prime: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand, Clone)]
enum Command {
    /// Square-free polarization and its polarizing sequence.
    Polarize {
        ideal: Option<String>,
    },
    /// Undo polarization of an ideal in polar variables `x[i,j]`.
    Depolarize {
        ideal: Option<String>,
    },
    /// Irredundant irreducible decomposition.
    Decompose {
        ideal: Option<String>,
    },
    /// Associated primes, with the base/polar correspondence.
    Ass {
        ideal: Option<String>,
    },
    Height {
        ideal: Option<String>,
    },
    /// Largest number of pairwise coprime generators.
    Beta {
        ideal: Option<String>,
    },
    /// Localization at `--prime`.
    Localize {
        ideal: Option<String>,
    },
    /// Alexander dual of a square-free ideal.
    Dual {
        ideal: Option<String>,
    },
    /// Invariants of the facet complex (of the polarization if needed).
    ComplexInfo {
        ideal: Option<String>,
    },
    IsTree {
        ideal: Option<String>,
    },
    Leaves {
        ideal: Option<String>,
    },
    Covers {
        ideal: Option<String>,
    },
    /// Height strata and the ascending chain of stratum intersections.
    Filtration {
        ideal: Option<String>,
    },
    /// Height against beta when the polarization is a tree.
    CheckKonig {
        ideal: Option<String>,
    },
    /// Dropping a joint generator keeps the height.
    CheckJointRemoval {
        ideal: Option<String>,
    },
    /// Localizations of tree-polarizing ideals polarize to forests.
    CheckLocalization {
        ideal: Option<String>,
    },
    /// Cohen-Macaulay verdict under the tree hypothesis.
    CmVerdict {
        ideal: Option<String>,
    },
    /// Sequentially Cohen-Macaulay verdict for forest polarizations.
    ScmVerdict {
        ideal: Option<String>,
    },
    /// Associated primes along the filtration.
    CheckAppendix {
        ideal: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Polarize { .. } => "polarize",
            Command::Depolarize { .. } => "depolarize",
            Command::Decompose { .. } => "decompose",
            Command::Ass { .. } => "ass",
            Command::Height { .. } => "height",
            Command::Beta { .. } => "beta",
            Command::Localize { .. } => "localize",
            Command::Dual { .. } => "dual",
            Command::ComplexInfo { .. } => "complex-info",
            Command::IsTree { .. } => "is-tree",
            Command::Leaves { .. } => "leaves",
            Command::Covers { .. } => "covers",
            Command::Filtration { .. } => "filtration",
            Command::CheckKonig { .. } => "check-konig",
            Command::CheckJointRemoval { .. } => "check-joint-removal",
            Command::CheckLocalization { .. } => "check-localization",
            Command::CmVerdict { .. } => "cm-verdict",
            Command::ScmVerdict { .. } => "scm-verdict",
            Command::CheckAppendix { .. } => "check-appendix",
        }
    }

    fn ideal_arg(&self) -> Option<&str> {
        match self {
            Command::Polarize { ideal }
            | Command::Depolarize { ideal }
            | Command::Decompose { ideal }
            | Command::Ass { ideal }
            | Command::Height { ideal }
            | Command::Beta { ideal }
            | Command::Localize { ideal }
            | Command::Dual { ideal }
            | Command::ComplexInfo { ideal }
            | Command::IsTree { ideal }
            | Command::Leaves { ideal }
            | Command::Covers { ideal }
            | Command::Filtration { ideal }
            | Command::CheckKonig { ideal }
            | Command::CheckJointRemoval { ideal }
            | Command::CheckLocalization { ideal }
            | Command::CmVerdict { ideal }
            | Command::ScmVerdict { ideal }
            | Command::CheckAppendix { ideal } => ideal.as_deref(),
        }
    }

    fn is_check(&self) -> bool {
        matches!(
            self,
            Command::CheckKonig { .. }
                | Command::CheckJointRemoval { .. }
                | Command::CheckLocalization { .. }
                | Command::CheckAppendix { .. }
        )
    }
}

fn read_ideal(cli: &Cli, text: &str) -> Result<MonomialIdeal> {
    let ideal = match &cli.vars {
        Some(vars) => {
            let ring = parse_ring(vars).context("bad --vars")?;
            parse_ideal_in(text, &ring)?
        }
        None => parse_ideal(text)?,
    };
    Ok(ideal)
}

fn read_stdin() -> Result<String> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .context("reading stdin")?;
    Ok(text)
}

fn run(cli: &Cli) -> Result<Outcome> {
    let command = &cli.command;
    let text = match command.ideal_arg() {
        Some("-") => Some(read_stdin()?),
        Some(t) => Some(t.to_string()),
        None if command.is_check() => None,
        None => Some(read_stdin()?),
    };
    let Some(text) = text else {
        return fuzz::campaign(cli, command);
    };
    let ideal = read_ideal(cli, &text)?;
    let prime = cli.prime.as_deref();
    match command {
        Command::Polarize { .. } => commands::polarize(&ideal),
        Command::Depolarize { .. } => commands::depolarize(&ideal),
        Command::Decompose { .. } => commands::decompose(&ideal),
        Command::Ass { .. } => commands::ass(&ideal),
        Command::Height { .. } => commands::height(&ideal),
        Command::Beta { .. } => commands::beta(&ideal),
        Command::Localize { .. } => commands::localize(&ideal, prime),
        Command::Dual { .. } => commands::dual(&ideal),
        Command::ComplexInfo { .. } => commands::complex_info(&ideal),
        Command::IsTree { .. } => commands::is_tree(&ideal),
        Command::Leaves { .. } => commands::leaves(&ideal),
        Command::Covers { .. } => commands::covers(&ideal),
        Command::Filtration { .. } => commands::filtration(&ideal),
        Command::CheckKonig { .. } => commands::check_konig(&ideal),
        Command::CheckJointRemoval { .. } => commands::check_joint_removal(&ideal),
        Command::CheckLocalization { .. } => commands::check_localization(&ideal, prime),
        Command::CmVerdict { .. } => commands::cm_verdict(&ideal),
        Command::ScmVerdict { .. } => commands::scm_verdict(&ideal),
        Command::CheckAppendix { .. } => commands::check_appendix(&ideal),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match run(&cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let failed = outcome.failed();
    let doc = outcome.document(cli.command.name(), start.elapsed().as_millis());
    match cli.format {
        Format::Machine => println!("{doc}"),
        Format::Human => print!("{}", report::human(&doc)),
    }
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
