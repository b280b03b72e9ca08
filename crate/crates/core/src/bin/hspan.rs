//! `hspan`: run the verification suites and emit blocks, lattices and
//! generating functions.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use heisenberg_spans::linearize::SymConvention;
use heisenberg_spans::report::{
    emit_block, emit_gf, emit_lattice, emit_moments, emit_number_block, emit_sym_block, verify_heisenberg, verify_sln,
    Format, StuffKind, DEFAULT_MAX_CARD,
};
use heisenberg_spans::Error;

#[derive(Parser)]
#[command(name = "hspan", version, about = "Spans of groupoids for the Heisenberg algebra and U(sl_n)")]
#[command(after_help = "Exit status: 0 when every check passes, 1 when a check fails, 2 on usage or configuration errors.\n\
Cost grows quickly with --max-card; 6 covers every printed block through M_{3,6}.")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Largest boundary cardinality kept by the truncation.
    #[arg(long, global = true, env = "HSPAN_MAX_CARD", default_value_t = DEFAULT_MAX_CARD)]
    max_card: usize,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Dot,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Dot => Format::Dot,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Heisenberg,
    Sln,
}

#[derive(Clone, Copy, ValueEnum)]
enum StuffArg {
    Identity,
    Pointed,
    Empty,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    SkewModule,
    OneDimensionalTrivial,
}

#[derive(Subcommand)]
enum Command {
    /// Run a relation catalog.
    Verify {
        #[arg(value_enum, required_unless_present = "suite_flag")]
        suite: Option<SuiteArg>,
        #[arg(long = "suite", value_enum, conflicts_with = "suite")]
        suite_flag: Option<SuiteArg>,
        /// Number of colours for the sln suite.
        #[arg(long, default_value_t = 2)]
        rank: usize,
    },
    /// Print a block, lattice or sequence.
    #[command(subcommand)]
    Emit(Emit),
}

#[derive(Subcommand)]
enum Emit {
    /// Path-count block between two stages of Young's lattice.
    Block {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Number-operator block at one stage.
    NumberBlock {
        #[arg(long)]
        n: usize,
    },
    /// Symmetrized or antisymmetrized block from stage `from` to `from + k`.
    SymBlock {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        antisym: bool,
        /// Defaults to the convention computed from the explicit action.
        #[arg(long, value_enum)]
        convention: Option<ConventionArg>,
    },
    /// Young's lattice.
    Lattice {
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// Generating-function coefficients of a stuff type.
    Gf {
        #[arg(long, value_enum, default_value_t = StuffArg::Identity)]
        stuff: StuffArg,
        #[arg(long, default_value_t = 5)]
        terms: usize,
    },
    /// Vacuum moments of a + a†.
    Moments {
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
}

enum Outcome {
    Pass,
    Fail,
}

fn run(cli: &Cli) -> Result<(String, Outcome), Error> {
    let format = Format::from(cli.common.format);
    let m = cli.common.max_card;
    match &cli.command {
        Command::Verify { suite, suite_flag, rank } => {
            let report = match suite.or(*suite_flag) {
                Some(SuiteArg::Sln) => verify_sln(*rank, m)?,
                _ => verify_heisenberg(m)?,
            };
            let outcome = if report.passed() { Outcome::Pass } else { Outcome::Fail };
            Ok((report.render(format)?, outcome))
        }
        Command::Emit(e) => {
            let emitted = match e {
                Emit::Block { from, to } => emit_block(*from, *to, m)?,
                Emit::NumberBlock { n } => emit_number_block(*n, m)?,
                Emit::SymBlock { k, from, antisym, convention } => {
                    let c = convention.map(|c| match c {
                        ConventionArg::SkewModule => SymConvention::SkewModule,
                        ConventionArg::OneDimensionalTrivial => SymConvention::OneDimensionalTrivial,
                    });
                    emit_sym_block(*k, *from, *antisym, c, m)?
                }
                Emit::Lattice { max } => emit_lattice(*max)?,
                Emit::Gf { stuff, terms } => {
                    let s = match stuff {
                        StuffArg::Identity => StuffKind::Identity,
                        StuffArg::Pointed => StuffKind::Pointed,
                        StuffArg::Empty => StuffKind::Empty,
                    };
                    emit_gf(s, *terms, m)?
                }
                Emit::Moments { max } => emit_moments(*max, m)?,
            };
            Ok((emitted.render(format)?, Outcome::Pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, outcome)) => {
            let written = match &cli.common.out {
                Some(path) => fs::write(path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("hspan: cannot write output: {e}");
                return ExitCode::from(2);
            }
            match outcome {
                Outcome::Pass => ExitCode::SUCCESS,
                Outcome::Fail => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("hspan: {e}");
            ExitCode::from(2)
        }
    }
}
