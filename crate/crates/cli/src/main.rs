mod commands;
mod report;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use cochar_core::root_system::Label;
use cochar_core::search::Parity;

use commands::{SearchOverrides, Which};
use report::{render, Format, ReportDocument};

#[derive(Parser)]
#[command(
    name = "cochar",
    version,
    about = "Exact tables for exceptional cocharacter searches and their geometric constraints"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Worker threads for the exhaustive searches; never affects output.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=64))]
    threads: u32,
    /// Re-check module invariants before printing.
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustive search for cocharacters with admissible gradings.
    Tables {
        #[arg(value_enum)]
        group: GroupArg,
        /// Pairing bound; defaults to the completeness bound dim V - 1.
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        bound: Option<i64>,
        /// Restrict rows to odd or even length.
        #[arg(long, value_enum)]
        parity: Option<ParityArg>,
        /// Lower bound on the outer dimension h^0 = h^l of a row.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        min_outer: Option<u64>,
    },
    /// Grading induced on the adjoint representation by the distinguished
    /// cocharacter.
    AdjointGrading {
        #[arg(value_enum)]
        group: GroupArg,
    },
    /// Decomposition of the tensor square of the defining representation.
    TensorSquare {
        #[arg(value_enum)]
        group: GroupArg,
        /// Full square against the dual, or its symmetric or alternating
        /// half.
        #[arg(long, value_enum, default_value_t = WhichArg::Full)]
        which: WhichArg,
    },
    /// Genus bounds and feasible ranges derived from the search tables.
    Constraints {
        #[arg(value_enum)]
        group: GroupArg,
        /// Keep only ranges with g > 2d.
        #[arg(long)]
        half: bool,
    },
    /// Chern invariants and degree candidates for the distinguished surface.
    SurfaceLedger {
        /// Holomorphic Euler characteristic chi(O).
        #[arg(long, default_value_t = 6)]
        chi_o: i64,
        /// Topological Euler number c2.
        #[arg(long, default_value_t = 27)]
        c2: i64,
        /// Minimum degree of a projection candidate.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(i64).range(1..))]
        deg_min: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    #[value(name = "e6")]
    E6,
    #[value(name = "e7")]
    E7,
}

impl GroupArg {
    fn label(self) -> Label {
        match self {
            GroupArg::E6 => Label::E6,
            GroupArg::E7 => Label::E7,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

impl ParityArg {
    fn parity(self) -> Parity {
        match self {
            ParityArg::Odd => Parity::Odd,
            ParityArg::Even => Parity::Even,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichArg {
    Full,
    Sym,
    Alt,
}

impl WhichArg {
    fn which(self) -> Which {
        match self {
            WhichArg::Full => Which::Full,
            WhichArg::Sym => Which::Sym,
            WhichArg::Alt => Which::Alt,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl FormatArg {
    fn format(self) -> Format {
        match self {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

fn run(cli: &Cli) -> Result<ReportDocument, String> {
    match &cli.command {
        Command::Tables { group, bound, parity, min_outer } => {
            let over = SearchOverrides {
                bound: *bound,
                parity: parity.map(ParityArg::parity),
                min_outer: *min_outer,
            };
            commands::cmd_tables(group.label(), &over, cli.threads, cli.verify)
        }
        Command::AdjointGrading { group } => {
            commands::cmd_adjoint_grading(group.label(), cli.threads, cli.verify)
        }
        Command::TensorSquare { group, which } => {
            commands::cmd_tensor_square(group.label(), which.which(), cli.verify)
        }
        Command::Constraints { group, half } => {
            commands::cmd_constraints(group.label(), *half, cli.threads, cli.verify)
        }
        Command::SurfaceLedger { chi_o, c2, deg_min } => {
            commands::cmd_surface_ledger(*chi_o, *c2, *deg_min, cli.verify)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage error.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(doc) => {
            print!("{}", render(&doc, cli.format.format()));
            ExitCode::SUCCESS
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
