//! Batch CLI over the exact-combinatorics library: Lyndon word tables,
//! Frobenius characteristics, character values, counting identities, and
//! the self-verification suites.
//!
//! Exit codes: 0 success, 1 verification or cross-check failure, 2 usage
//! error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use parkhedron_cli::commands::{self, CliError, CountWhat, Rendered, Target};
use parkhedron_cli::verify::{run_suite, Suite};

#[derive(Parser)]
#[command(name = "parkhedron", version, about = "Exact combinatorics of parking spaces, Lyndon words, and permutahedron lattice points")]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the Lyndon words of the balanced weight-constrained set, with
    /// their partitions, run lengths, and orbit sizes
    Lyndon {
        /// Balance parameter (number of 1s is m times the number of 0s)
        #[arg(short)]
        m: u32,
        /// Modulus; tuples take entries in 0..n
        #[arg(short)]
        n: u32,
    },
    /// Print the Frobenius characteristic of a module in the h basis
    Frobenius(FrobeniusArgs),
    /// Character of a module at a cycle type, cross-checked between the
    /// symmetric-function route and direct fixed-point counting
    Character(CharacterArgs),
    /// Counting identities: closed formula next to exhaustive enumeration
    Count {
        /// What to count
        what: CountArg,
        #[arg(short)]
        m: Option<u32>,
        #[arg(short)]
        n: Option<u32>,
        #[arg(short)]
        k: Option<u32>,
    },
    /// Re-verify the library's identities up to a size bound
    Verify {
        /// Which suite to run
        suite: SuiteArg,
        /// Largest n to test
        #[arg(long = "max-n", default_value_t = 7)]
        max_n: u32,
        /// Largest m to test (suites parametrized by m only)
        #[arg(long = "max-m", default_value_t = 2)]
        max_m: u32,
    },
}

#[derive(Args)]
struct FrobeniusArgs {
    /// Restrict to the next smaller symmetric group before printing
    #[arg(long, global = true)]
    restrict: bool,
    #[command(subcommand)]
    target: TargetCmd,
}

#[derive(Args)]
struct CharacterArgs {
    /// Cycle type as comma-separated lengths, e.g. 2,1,1
    #[arg(long, global = true, value_delimiter = ',')]
    mu: Vec<u32>,
    #[command(subcommand)]
    target: TargetCmd,
}

#[derive(Subcommand, Clone, Copy)]
enum TargetCmd {
    /// Shift-quotient module of the tuple space (parameters m, n)
    TauHat {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
    },
    /// Lattice points of the trimmed standard permutahedron (parameter n)
    Gamma {
        #[arg(short)]
        n: u32,
    },
    /// Parking functions of length k
    Pf {
        #[arg(short)]
        k: u32,
    },
}

impl From<TargetCmd> for Target {
    fn from(cmd: TargetCmd) -> Target {
        match cmd {
            TargetCmd::TauHat { m, n } => Target::TauHat { m, n },
            TargetCmd::Gamma { n } => Target::Gamma { n },
            TargetCmd::Pf { k } => Target::Pf { k },
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CountArg {
    /// Points of the tuple space
    #[value(name = "C", alias = "c")]
    C,
    /// Weakly decreasing points (orbit labels)
    #[value(name = "Y", alias = "y")]
    Y,
    /// Lyndon words of the balanced set
    Lyndon,
    /// Lattice points of the trimmed permutahedron
    Lattice,
    /// Parking functions
    Pf,
}

impl From<CountArg> for CountWhat {
    fn from(arg: CountArg) -> CountWhat {
        match arg {
            CountArg::C => CountWhat::C,
            CountArg::Y => CountWhat::Y,
            CountArg::Lyndon => CountWhat::Lyndon,
            CountArg::Lattice => CountWhat::Lattice,
            CountArg::Pf => CountWhat::Pf,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Words,
    Orbits,
    Permutahedron,
    Restriction,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(arg: SuiteArg) -> Suite {
        match arg {
            SuiteArg::Words => Suite::Words,
            SuiteArg::Orbits => Suite::Orbits,
            SuiteArg::Permutahedron => Suite::Permutahedron,
            SuiteArg::Restriction => Suite::Restriction,
            SuiteArg::All => Suite::All,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered: Result<Rendered, CliError> = match cli.command {
        Command::Lyndon { m, n } => commands::lyndon(m, n),
        Command::Frobenius(args) => commands::frobenius(&args.target.into(), args.restrict),
        Command::Character(args) => commands::character(&args.target.into(), &args.mu),
        Command::Count { what, m, n, k } => commands::count(what.into(), m, n, k),
        Command::Verify { suite, max_n, max_m } => {
            if max_n < 2 || max_m < 1 {
                eprintln!("error: need --max-n >= 2 and --max-m >= 1");
                return ExitCode::from(2);
            }
            let report = run_suite(suite.into(), max_n, max_m);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            } else {
                print!("{}", report.render_text());
            }
            return if report.pass() {
                ExitCode::SUCCESS
            } else {
                if let Some(first) = report.first_failure() {
                    eprintln!(
                        "first counterexample: {} ({}): expected {}, got {}",
                        first.name, first.params, first.expected, first.actual
                    );
                }
                ExitCode::from(1)
            };
        }
    };
    match rendered {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).unwrap());
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
