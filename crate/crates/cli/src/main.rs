//! `ingleton`: generate minimal Ingleton sets, certify theorem-level claims,
//! and solve Ingleton-LP bounds from the command line.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "ingleton", version, about)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Largest inequality family to materialize.
    #[arg(long, global = true, env = "INGLETON_BUDGET", default_value_t = ingleton::ingen::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Worker threads (0 picks one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SampleOpts {
    /// Check this many random quadruples instead of all of them.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConeArg {
    Gamma,
    GammaIn,
}

impl From<ConeArg> for ingleton::bound::Cone {
    fn from(c: ConeArg) -> Self {
        match c {
            ConeArg::Gamma => ingleton::bound::Cone::Gamma,
            ConeArg::GammaIn => ingleton::bound::Cone::GammaIn,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum WitnessKind {
    /// Strictly positive on every nontrivial Ingleton term.
    Fulldim,
    /// `h(α) = |α|`.
    Modular,
    /// A polymatroid violating the Ingleton inequality.
    Violator,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write the minimal Ingleton set.
    Gen {
        #[arg(long)]
        n: usize,
        /// Write the elemental inequalities instead.
        #[arg(long)]
        elemental: bool,
    },
    /// Print the size of the minimal set.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Classify an Ingleton quadruple such as `{1};{2};{3};{4,5}`.
    Classify {
        #[arg(long)]
        n: usize,
        quad: String,
    },
    /// Decide whether an inequality `expr ≥ 0` follows from a generator set.
    Implies {
        #[arg(long)]
        n: usize,
        /// Target expression, e.g. `h{1} + h{2} - h{1,2}`.
        target: String,
        /// Generators from an inequality list file.
        #[arg(long, conflicts_with = "cone")]
        gens: Option<PathBuf>,
        /// Generators of a cone (default: gamma).
        #[arg(long, value_enum)]
        cone: Option<ConeArg>,
    },
    /// Compare the containment criterion with exact implication over elemental inequalities.
    CheckTheorem1 {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sample: SampleOpts,
        #[arg(long)]
        emit_certificates: Option<PathBuf>,
    },
    /// Certify Ingleton inequalities as combinations of the minimal set.
    CheckCompleteness {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sample: SampleOpts,
        #[arg(long)]
        emit_certificates: Option<PathBuf>,
    },
    /// Prove every member of the minimal set is non-redundant.
    CheckMinimality {
        #[arg(long)]
        n: usize,
        /// Allow n above 5.
        #[arg(long)]
        long: bool,
        #[arg(long)]
        emit_certificates: Option<PathBuf>,
    },
    /// Print a named entropy vector.
    Witness {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = WitnessKind::Fulldim)]
        kind: WitnessKind,
    },
    /// Test a point, given as `{1}=1 {2}=1 {1,2}=3/2`, against a cone.
    Membership {
        #[arg(long)]
        n: usize,
        point: String,
        #[arg(long, value_enum, default_value_t = ConeArg::GammaIn)]
        cone: ConeArg,
    },
    /// Solve a bound problem or network file.
    Bound {
        /// Problem file (`n`, `cone`, `maximize|minimize`, `st` lines).
        #[arg(long, required_unless_present = "network", conflicts_with = "network")]
        problem: Option<PathBuf>,
        /// Network file (`source`, `edge`, `sink`, `weights` lines).
        #[arg(long)]
        network: Option<PathBuf>,
        /// Cone for network files, or override for problem files.
        #[arg(long, value_enum)]
        cone: Option<ConeArg>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.workers > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.global.workers)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli.global, cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
