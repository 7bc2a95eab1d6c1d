use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qclifford::commands::{self, Format};
use qclifford::{CliError, Result};
use qclifford_core::reps::Target;
use qclifford_core::{Rational, ScalarDomain, Signature};

#[derive(Parser)]
#[command(name = "qclifford", version, about = "Exact Clifford algebra computations over the rationals")]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Numeric {
    /// Use floating point instead of exact rationals.
    #[arg(long)]
    approx: bool,

    /// Absolute tolerance for zero tests in approximate mode.
    #[arg(long, requires = "approx", default_value_t = ScalarDomain::DEFAULT_TOLERANCE)]
    tol: f64,
}

impl Numeric {
    fn domain(&self) -> Result<ScalarDomain> {
        if self.approx {
            ScalarDomain::approximate(self.tol).map_err(|e| CliError::usage(format!("--tol: {e}")))
        } else {
            Ok(ScalarDomain::exact())
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplication table of the basis blades.
    Table {
        #[arg(value_parser = parse_signature)]
        signature: Signature,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Count basis blades squaring to +1 and to -1.
    Census {
        #[arg(value_parser = parse_signature)]
        signature: Signature,
    },
    /// Recover the rigid motion mapping three points onto their images.
    Rotate {
        scene: PathBuf,
        #[command(flatten)]
        numeric: Numeric,
    },
    /// Transform events into a frame moving with velocity beta (units of c).
    Boost {
        events: PathBuf,
        /// One component along x, or three comma-separated components.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// Event file whose single event is added after the transformation.
        #[arg(long)]
        offset: Option<PathBuf>,
        #[command(flatten)]
        numeric: Numeric,
    },
    /// Matrix representation of a signature, verified blade by blade.
    Rep {
        #[arg(value_parser = parse_signature)]
        signature: Signature,
        /// real-N, complex-N or quaternion-N; defaults to the first available.
        #[arg(long, value_parser = parse_target)]
        target: Option<Target>,
        /// A multivector such as "2 + 3*e1" whose image is also printed.
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Inverse of a Cl(1,3) multivector, or why it has none.
    Invert {
        multivector: PathBuf,
        /// Treat singular input as an error.
        #[arg(long)]
        require_inverse: bool,
        #[command(flatten)]
        numeric: Numeric,
    },
}

fn parse_signature(s: &str) -> std::result::Result<Signature, String> {
    s.parse().map_err(|e: qclifford_core::Error| e.to_string())
}

fn parse_target(s: &str) -> std::result::Result<Target, String> {
    s.parse().map_err(|e: qclifford_core::Error| e.to_string())
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn run(command: Command) -> Result<String> {
    Ok(match command {
        Command::Table { signature, format } => {
            let format = match format {
                TableFormat::Csv => Format::Csv,
                TableFormat::Json => Format::Json,
            };
            commands::table(signature, format)?
        }
        Command::Census { signature } => commands::census(signature),
        Command::Rotate { scene, numeric } => {
            let domain = numeric.domain()?;
            let scene = read_json(&scene)?;
            let out = if numeric.approx {
                commands::rotate_approx(&scene, &domain)?
            } else {
                commands::rotate::<Rational>(&scene, &domain)?.0
            };
            commands::to_text(&out)
        }
        Command::Boost { events, beta, offset, numeric } => {
            let domain = numeric.domain()?;
            let events = read_json(&events)?;
            let offset = offset.as_deref().map(read_json).transpose()?;
            let out = if numeric.approx {
                commands::boost::<f64>(&events, &beta, offset.as_ref(), &domain)?
            } else {
                commands::boost::<Rational>(&events, &beta, offset.as_ref(), &domain)?
            };
            commands::to_text(&out)
        }
        Command::Rep { signature, target, element } => {
            commands::to_text(&commands::rep(signature, target, element.as_deref())?)
        }
        Command::Invert { multivector, require_inverse, numeric } => {
            let domain = numeric.domain()?;
            let mv = read_json(&multivector)?;
            let (out, singular) = if numeric.approx {
                commands::invert::<f64>(&mv, &domain)?
            } else {
                commands::invert::<Rational>(&mv, &domain)?
            };
            if singular && require_inverse {
                return Err(CliError::Domain {
                    kind: "Singular",
                    message: "the multivector has no inverse".into(),
                    detail: out["singular"].clone(),
                });
            }
            commands::to_text(&out)
        }
    })
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write { path: path.into(), source }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Write { path: "<stdout>".into(), source }),
    }
}

fn fail(err: &CliError) -> ExitCode {
    eprintln!("{}", err.to_json());
    ExitCode::from(err.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.render().to_string();
            eprintln!("{}", json!({ "error": { "kind": "usage", "message": message.trim(), "exit_code": 2 } }));
            return ExitCode::from(2);
        }
    };
    match run(cli.command).and_then(|text| emit(&text, cli.output.as_deref())) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}
