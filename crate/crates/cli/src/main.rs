use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use parabolic::nilpotent::DEFAULT_TERM_BUDGET;
use parabolic::Composition;
use parabolic_cli::commands::{analyze, construct, Analysis, AnalyzeOptions, Construct};
use parabolic_cli::{
    parse_basis_document, parse_n_range, run_verification_with, Suite, SuiteOptions,
};

/// Exact constructions and checks for subalgebras of M_n(Q) and coideals of
/// the matrix coalgebra.
#[derive(Parser)]
#[command(name = "parabolic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the standard parabolic algebra or coideal of a given type.
    Construct {
        /// Block sizes, e.g. 1,2.
        #[arg(long = "type", value_name = "PARTS")]
        comp: Composition,
        #[arg(long, value_enum, default_value = "algebra")]
        kind: Kind,
        /// Optional check that the parts sum to n.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Analyze the span of the matrices in a basis document.
    Analyze {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(
            ["closure", "radical", "blocks", "is-parabolic", "is-coideal", "perp", "nil"]
        ))]
        analysis: String,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
        budget: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a verification suite and print its report.
    Verify {
        #[arg(long)]
        suite: String,
        /// Sizes to check: N or A..B.
        #[arg(long, default_value = "2..4")]
        n: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
        budget: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Algebra,
    Coideal,
}

const USAGE: u8 = 2;

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), ExitCode> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Construct {
            comp,
            kind,
            n,
            output,
        } => {
            if let Some(n) = n.filter(|&n| n != comp.n()) {
                return Err(usage(format!("type {comp} has size {}, not {n}", comp.n())));
            }
            let what = match kind {
                Kind::Algebra => Construct::Algebra,
                Kind::Coideal => Construct::Coideal,
            };
            let doc = construct(&comp, what).map_err(usage)?;
            emit(&(doc.to_json() + "\n"), output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze {
            analysis,
            input,
            n,
            seed,
            trials,
            budget,
            output,
        } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| usage(format!("{}: {e}", input.display())))?;
            let doc = parse_basis_document(&text)
                .map_err(|e| usage(format!("{}: {e}", input.display())))?;
            if let Some(n) = n.filter(|&n| n != doc.n) {
                return Err(usage(format!(
                    "document has n = {}, but --n {n} was given",
                    doc.n
                )));
            }
            let what: Analysis = analysis.parse().map_err(usage)?;
            let opts = AnalyzeOptions {
                seed,
                trials,
                budget,
            };
            let result = analyze(&doc, what, &opts).map_err(usage)?;
            emit(&result, output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            n,
            seed,
            trials,
            budget,
            output,
        } => {
            let suite: Suite = suite.parse().map_err(usage)?;
            let range = parse_n_range(&n).map_err(usage)?;
            let started = Instant::now();
            let report =
                run_verification_with(suite, range, seed, &SuiteOptions { trials, budget })
                    .map_err(usage)?;
            eprintln!(
                "{}: {} passed, {} failed in {:.2?}",
                suite,
                report.passed(),
                report.failed(),
                started.elapsed()
            );
            emit(&report.render(), output.as_ref())?;
            Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) | Err(code) => code,
    }
}
