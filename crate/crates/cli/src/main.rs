//! `genpoly`: compute and print the polynomial families, run oracle
//! censuses and verification suites.

mod commands;
mod doc;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use genpoly::verify::Suite;

use commands::{CensusArgs, CmdError, Settings, TableKind, VerifyArgs, DEFAULT_MAX_D};
use doc::OutputDocument;
use render::Style;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Csv,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Identities,
    #[value(name = "paper-tables")]
    GoldenTables,
    Oracle,
    Theorems,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::GoldenTables => Suite::GoldenTables,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Theorems => Suite::Theorems,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableArg {
    S,
    A,
    R,
}

#[derive(Parser, Debug)]
#[command(name = "genpoly", version, about = "Counting polynomials for subspaces of matrices that generate the full matrix algebra")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,
    /// Leave timings out of the output.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Allow d above 5 for symbolic commands.
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// s_d^(m)(q), or all m = 0..d² when --m is omitted.
    SPoly {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: Option<u32>,
    },
    /// a_d^(m)(q), or a_d(q,u) with --u.
    APoly {
        #[arg(long)]
        d: u32,
        #[arg(long, conflicts_with = "u")]
        m: Option<u32>,
        #[arg(long)]
        u: bool,
    },
    /// r_d^(m)(q) = [d² choose m]_q - s_d^(m)(q).
    RPoly {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Coefficients c_l(q) of a_d(q,u) in the basis of q-binomials in u.
    Mahler {
        #[arg(long)]
        d: u32,
    },
    /// Enumerate over F_p and compare with the polynomial at q = p.
    Census {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        /// Count generating m-tuples of matrices instead of subspaces.
        #[arg(long)]
        tuples: bool,
        /// Maximum number of items to enumerate, e.g. 1e7.
        #[arg(long)]
        budget: Option<String>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long)]
        budget: Option<String>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Largest d for the theorem suite.
        #[arg(long, default_value_t = DEFAULT_MAX_D)]
        max_d: u32,
    },
    /// A table over d = 1..=max-d.
    Table {
        #[arg(long, value_enum)]
        kind: TableArg,
        #[arg(long, default_value_t = 3)]
        max_d: u32,
        #[arg(long)]
        max_m: Option<u32>,
    },
}

fn emit(doc: &OutputDocument, format: Format) -> Result<String, CmdError> {
    let out = match format {
        Format::Json => serde_json::to_string_pretty(doc).map(|s| s + "\n").map_err(|e| e.to_string()),
        Format::Plain => render::render(doc, Style::Plain),
        Format::Latex => render::render(doc, Style::Latex),
        Format::Csv => render::render_csv(doc),
    };
    out.map_err(CmdError::Failed)
}

fn run(cli: Cli) -> Result<(OutputDocument, bool), CmdError> {
    let settings = Settings { timing: !cli.no_timing, allow_large: cli.allow_large };
    let doc = match cli.command {
        Command::SPoly { d, m } => commands::s_poly(d, m, settings)?,
        Command::APoly { d, m, u } => commands::a_poly(d, m, u, settings)?,
        Command::RPoly { d, m } => commands::r_poly(d, m, settings)?,
        Command::Mahler { d } => commands::mahler(d, settings)?,
        Command::Census { d, p, m, tuples, budget, workers } => {
            commands::census(CensusArgs { d, p, m, tuples, budget: budget.as_deref(), workers }, settings)?
        }
        Command::Verify { suite, budget, workers, max_d } => {
            let args = VerifyArgs { suite: suite.into(), budget: budget.as_deref(), workers, max_d };
            return commands::verify(args, settings);
        }
        Command::Table { kind, max_d, max_m } => {
            let kind = match kind {
                TableArg::S => TableKind::S,
                TableArg::A => TableKind::A,
                TableArg::R => TableKind::R,
            };
            commands::table(kind, max_d, max_m, settings)?
        }
    };
    Ok((doc, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let result = run(cli).and_then(|(doc, passed)| Ok((emit(&doc, format)?, passed)));
    match result {
        Ok((text, passed)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("genpoly: verification failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("genpoly: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
