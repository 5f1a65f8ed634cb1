//! Command-line front end for slope queries, filling classification, and the
//! brute-force verification suite.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use mbtree::fig8::{classify, FillingSpec, TransitionMatrix};
use mbtree::oracle;
use mbtree::slope::{QuadrantSlope, Slope};
use mbtree::tree::{self, TreeFormat, TreeVertex};

#[derive(Parser)]
#[command(
    name = "mbtree",
    version,
    about = "Boundary slopes of one-sided surfaces in a solid torus, and the splitting surfaces of even Dehn fillings of figure-eight knot space",
    long_about = "Exact integer arithmetic for curves on the boundary torus of a solid torus.\n\
                  Slopes are primitive (longitude, meridian) pairs, identified up to overall sign.\n\
                  Filling parameters P Q always describe the filling slope (2P, Q): the first\n\
                  coefficient entered as P is doubled internally, never Q."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.parse::<BigInt>()
        .map_err(|e| format!("not an integer: {e}"))
}

#[derive(Subcommand)]
enum Command {
    /// Genus of the one-sided surface bounded by the slope (L, M)
    Genus {
        #[arg(value_parser = parse_bigint, allow_hyphen_values = true)]
        l: BigInt,
        #[arg(value_parser = parse_bigint, allow_hyphen_values = true)]
        m: BigInt,
    },
    /// Path from the slope (L, M) down to the root (0,1)
    Path {
        #[arg(value_parser = parse_bigint, allow_hyphen_values = true)]
        l: BigInt,
        #[arg(value_parser = parse_bigint, allow_hyphen_values = true)]
        m: BigInt,
    },
    /// Children of the vertex (L, M) with longitude up to the bound
    Children {
        #[arg(value_parser = parse_bigint, allow_hyphen_values = true)]
        l: BigInt,
        #[arg(value_parser = parse_bigint, allow_hyphen_values = true)]
        m: BigInt,
        #[arg(long, value_parser = parse_bigint)]
        bound: BigInt,
    },
    /// Export the tree up to a longitude bound
    Tree {
        #[arg(long, value_parser = parse_bigint)]
        bound: BigInt,
        /// Output format: dot or json
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// Classify the splitting surfaces of the (2P, Q) Dehn filling
    Classify {
        #[arg(value_parser = parse_bigint, allow_hyphen_values = true)]
        p: BigInt,
        #[arg(value_parser = parse_bigint, allow_hyphen_values = true)]
        q: BigInt,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Convert a knot-space curve (L, M) to filling-torus coordinates for the
    /// (2P, Q) filling
    Convert {
        #[arg(value_parser = parse_bigint, allow_hyphen_values = true)]
        p: BigInt,
        #[arg(value_parser = parse_bigint, allow_hyphen_values = true)]
        q: BigInt,
        #[arg(value_parser = parse_bigint, allow_hyphen_values = true)]
        l: BigInt,
        #[arg(value_parser = parse_bigint, allow_hyphen_values = true)]
        m: BigInt,
    },
    /// Run every brute-force verification sweep; exits 0 only if all are clean
    Verify {
        #[arg(long, default_value_t = 400)]
        bound: i64,
        /// Emit the detailed reports as JSON
        #[arg(long)]
        json: bool,
    },
}

enum CliError {
    /// Invalid input or a domain error: exit code 2.
    Input(String),
    /// Verification found violations: exit code 1.
    VerificationFailed,
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Input(e.to_string())
    }
}

fn quadrant(l: &BigInt, m: &BigInt) -> Result<QuadrantSlope, CliError> {
    Ok(Slope::new(l.clone(), m.clone())?.quadrant_project()?)
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Genus { l, m } => {
            let g = tree::genus(&quadrant(&l, &m)?)?;
            println!("{g}");
        }
        Command::Path { l, m } => {
            let path = tree::path_to_root(&quadrant(&l, &m)?)?;
            println!("{path}");
        }
        Command::Children { l, m, bound } => {
            let v = TreeVertex::new(quadrant(&l, &m)?)?;
            for child in tree::children(&v, &bound) {
                println!("{child}");
            }
        }
        Command::Tree { bound, format } => {
            let format: TreeFormat = format.parse()?;
            print!("{}", tree::export_tree(&bound, format)?);
            if format == TreeFormat::Json {
                println!();
            }
        }
        Command::Classify { p, q, json } => {
            let spec = FillingSpec::new(p, q)?;
            let report = classify(&spec)?;
            if json {
                println!("{}", report.to_json());
            } else {
                println!("{report}");
            }
        }
        Command::Convert { p, q, l, m } => {
            let spec = FillingSpec::new(p, q)?;
            let matrix = TransitionMatrix::for_filling(&spec);
            let knot = Slope::new(l, m)?;
            println!("{}", matrix.knot_to_torus(&knot));
        }
        Command::Verify { bound, json } => {
            if !(2..=oracle::MAX_BOUND).contains(&bound) {
                return Err(CliError::Input(format!(
                    "verification bound must lie in 2..={}, got {bound}",
                    oracle::MAX_BOUND
                )));
            }
            let reports = oracle::verify_all(bound);
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&reports).expect("reports serialise")
                );
            }
            let mut clean = true;
            for report in &reports {
                eprintln!("{}", report.summary());
                clean &= report.is_clean();
            }
            if !clean {
                return Err(CliError::VerificationFailed);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::VerificationFailed) => {
            eprintln!("error: verification failed");
            ExitCode::from(1)
        }
    }
}
