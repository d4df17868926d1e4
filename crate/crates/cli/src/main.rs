mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Format;

/// Environment variable consulted when `--budget` is absent.
pub const BUDGET_ENV: &str = "COXDIAG_BUDGET";

#[derive(Parser)]
#[command(name = "coxdiag", version, about = "Coxeter groups, braid diagrammatics and their cell complexes")]
struct Cli {
    #[command(flatten)]
    common: Common,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Common {
    /// Coxeter system file
    #[arg(long, global = true)]
    pub system: Option<PathBuf>,

    /// Node count (`1000000`) or wall time (`600s`, `250ms`); defaults to $COXDIAG_BUDGET
    #[arg(long, global = true)]
    pub budget: Option<String>,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Group-level queries
    #[command(subcommand)]
    Group(GroupCmd),
    /// Words in the generators
    #[command(subcommand)]
    Word(WordCmd),
    /// Strip diagrams
    #[command(subcommand)]
    Diagram(DiagramCmd),
    /// Cell complexes
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Zamolodzhikov relations
    #[command(subcommand)]
    Zam(ZamCmd),
}

#[derive(Subcommand)]
pub enum GroupCmd {
    /// Rank, type, order and finitary subsets
    Info,
    /// List the elements of a finite parabolic subgroup
    Enumerate {
        /// Comma-separated generators; the whole system by default
        #[arg(long)]
        subset: Option<String>,
    },
    /// Normal form, descents and reduced words of an element
    NormalForm {
        #[arg(long)]
        word: String,
        /// `dot` prints the reduced-expression graph
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
}

#[derive(Subcommand)]
pub enum WordCmd {
    Reduce {
        #[arg(long)]
        word: String,
    },
    /// Equality in the Coxeter group
    Equal {
        #[arg(long, num_args = 1, required = true)]
        word: Vec<String>,
    },
    /// Equality in the positive braid monoid
    PositiveEqual {
        #[arg(long, num_args = 1, required = true)]
        word: Vec<String>,
    },
}

#[derive(Subcommand)]
pub enum DiagramCmd {
    /// Type-check a diagram and report its boundary
    Check {
        #[arg(long)]
        diagram: PathBuf,
    },
    /// Shrink a diagram as far as the rules allow without growing it
    Normalize {
        #[arg(long)]
        diagram: PathBuf,
        /// Also use the Zamolodzhikov rules of every finite rank-3 parabolic
        #[arg(long)]
        zam: bool,
    },
    /// Search for a rewriting certificate between two diagrams
    Equal {
        #[arg(long, num_args = 1, required = true)]
        diagram: Vec<PathBuf>,
        #[arg(long)]
        zam: bool,
    },
    ForgetOrientation {
        #[arg(long)]
        diagram: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Dual Coxeter complex without the top cell
    Dual,
    /// Dual Coxeter complex with its top cell (finite groups)
    DualCompleted,
    Coxeter,
    Salvetti,
    /// The quotient with one cell per finitary subset
    Bw,
    /// Presentation complex of the Coxeter presentation
    Presentation,
    /// 2-skeleton of the universal cover of the presentation complex
    Cover,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Dot,
}

#[derive(Subcommand)]
pub enum ComplexCmd {
    /// Dump the cells and boundaries
    Build {
        #[arg(long, value_enum)]
        kind: Kind,
        /// `dot` prints the 1-skeleton
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Cell counts, Euler characteristic and mod-2 Betti numbers
    Homology {
        #[arg(long, value_enum, required_unless_present = "dump")]
        kind: Option<Kind>,
        /// Read a complex dump instead of building one
        #[arg(long, conflicts_with = "kind")]
        dump: Option<PathBuf>,
    },
    /// Cell census of the universal cover of the Coxeter 3-presentation
    Census {
        /// Also count the cells kept after pruning
        #[arg(long)]
        pruned: bool,
    },
}

#[derive(Subcommand)]
pub enum ZamCmd {
    Generate {
        /// Three comma-separated generators spanning a finite parabolic
        #[arg(long)]
        triple: String,
    },
    Verify {
        /// Relation dump produced by `zam generate`
        #[arg(long)]
        relation: PathBuf,
    },
    /// Print the installed rewrite rules
    InstallDump {
        /// One triple; every finite rank-3 parabolic by default
        #[arg(long)]
        triple: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Unoriented)]
        mode: ModeArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Oriented,
    Unoriented,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.common, cli.command) {
        Ok(out) => match &cli.common.output {
            Some(path) => match std::fs::write(path, out) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    ExitCode::from(1)
                }
            },
            None => {
                print!("{out}");
                ExitCode::SUCCESS
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
