mod format;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use digraph_spectra::catalog::{figure2_dsrg, paley_tournament};
use digraph_spectra::dsrg::{
    cartesian_power_spectrum, dsrg_derived_spectra, duval_spectrum, infer_dsrg_params, nonreal_classification,
    power_shape, DsrgParams, SpectrumClass,
};
use digraph_spectra::eigen::{eigenvalues, Tolerances};
use digraph_spectra::matrix::{digraph_matrix, MatrixKind};
use digraph_spectra::products::{product, ProductKind};
use digraph_spectra::verify::{theorem_arity, theorem_names, verify, Status, VerifyOptions};
use digraph_spectra::{Digraph, Error};

use format::{digraph_json, read_digraph, read_input, write_dg, InputError};
use report::{entries, write_csv, Entry, Source, SpectrumReport};

const TOL_VAR: &str = "DIGRAPH_SPECTRA_TOL";

#[derive(Parser)]
#[command(
    name = "digraph-spectra",
    version,
    about = "Spectra of digraphs and digraph products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigensolver spectrum of one matrix of a digraph.
    Spectrum(SpectrumArgs),
    /// Writes the product of two digraphs.
    Product(ProductArgs),
    /// Checks a closed-form result against the brute-force oracle.
    Verify(VerifyArgs),
    /// Reports on a directed strongly regular graph.
    Dsrg(DsrgArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dg,
    Json,
}

#[derive(Args)]
struct SpectrumArgs {
    path: PathBuf,
    #[arg(long, default_value = "A")]
    matrix: MatrixKind,
    /// Clustering tolerance, relative to 1 + ||M||_inf.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
}

#[derive(Args)]
struct ProductArgs {
    first: PathBuf,
    second: PathBuf,
    #[arg(long)]
    kind: ProductKind,
    /// Destination file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "dg")]
    format: GraphFormat,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, required_unless_present = "list")]
    theorem: Option<String>,
    /// Digraph files, or JSON matrices where the theorem accepts them.
    inputs: Vec<PathBuf>,
    /// Multiset matching tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Exponent for the Cartesian power family.
    #[arg(long, default_value_t = 2)]
    power: u32,
    /// Lists theorem names and arities.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["params", "paley", "figure2"])))]
struct DsrgArgs {
    #[arg(long, num_args = 5, value_names = ["N", "K", "S", "A", "C"], allow_negative_numbers = true)]
    params: Option<Vec<i64>>,
    /// Paley tournament on a prime p = 3 mod 4.
    #[arg(long)]
    paley: Option<u64>,
    /// The 8-vertex DSRG with parameters (8, 4, 3, 1, 3).
    #[arg(long)]
    figure2: bool,
    /// Also report the distance spectrum of this Cartesian power.
    #[arg(long)]
    power: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Inapplicable(String),
    #[error("cannot write output: {0}")]
    Output(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Usage(_) => 2,
            CliError::Inapplicable(_) => 3,
            CliError::Output(_) => 1,
            CliError::Core(e) => match e {
                Error::LoopArc(_)
                | Error::IndexOutOfRange { .. }
                | Error::DuplicateArc(..)
                | Error::NoVertices
                | Error::NonSquare { .. }
                | Error::DimensionMismatch(_)
                | Error::UnknownTheorem(_)
                | Error::BadArity { .. } => 2,
                Error::NotStronglyConnected
                | Error::HypothesisViolated(_)
                | Error::NotTransmissionRegular(_)
                | Error::PerronNotSimple
                | Error::DegenerateDiscriminant
                | Error::InadmissibleParameters
                | Error::ShapeViolated
                | Error::BadPrime(_)
                | Error::NoEigenvectorFormula(_) => 3,
                _ => 4,
            },
        }
    }
}

fn output_error(e: impl std::fmt::Display) -> CliError {
    CliError::Output(e.to_string())
}

/// `--tol`, else the environment override, else `default`.
fn tolerance(flag: Option<f64>, default: f64) -> Result<f64, CliError> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_VAR) {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{TOL_VAR}={s:?} is not a number")))?,
            Err(_) => default,
        },
    };
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(CliError::Usage(format!("tolerance must be positive, got {tol}")))
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(output_error)?;
    writeln!(out).map_err(output_error)
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<u8, CliError> {
    let tol = tolerance(args.tol, Tolerances::default().cluster)?;
    let g = read_digraph(&args.path)?;
    let m = digraph_matrix(&g, args.matrix)?;
    let report = SpectrumReport::new(args.matrix, &eigenvalues(&m, tol)?, tol, Source::Eigensolver);
    match args.format {
        OutputFormat::Json => print_json(&report)?,
        OutputFormat::Csv => write_csv(std::io::stdout().lock(), &[&report]).map_err(output_error)?,
    }
    Ok(0)
}

fn cmd_product(args: ProductArgs) -> Result<u8, CliError> {
    let g = read_digraph(&args.first)?;
    let h = read_digraph(&args.second)?;
    let p = product(&g, &h, args.kind);
    let text = match args.format {
        GraphFormat::Dg => write_dg(
            &p,
            &[
                format!(
                    "{} product of {} and {}",
                    args.kind,
                    args.first.display(),
                    args.second.display()
                ),
                format!("vertex (x, x') is numbered x * {} + x'", h.n()),
            ],
        ),
        GraphFormat::Json => serde_json::to_string_pretty(&digraph_json(&p)).map_err(output_error)? + "\n",
    };
    match args.out {
        Some(path) => std::fs::write(&path, text).map_err(|e| output_error(format!("{}: {e}", path.display())))?,
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(output_error)?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct TheoremListing {
    name: &'static str,
    inputs: usize,
    matrices_allowed: bool,
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CliError> {
    if args.list {
        let listing: Vec<_> = theorem_names()
            .into_iter()
            .map(|name| {
                let arity = theorem_arity(name).expect("registered");
                TheoremListing {
                    name,
                    inputs: arity.count(),
                    matrices_allowed: matches!(arity, digraph_spectra::verify::Arity::Operands(_)),
                }
            })
            .collect();
        print_json(&listing)?;
        return Ok(0);
    }
    let name = args.theorem.expect("required unless --list");
    let mut opts = VerifyOptions {
        power: args.power,
        ..VerifyOptions::default()
    };
    opts.tol.matching = tolerance(args.tol, opts.tol.matching)?;
    let inputs = args
        .inputs
        .iter()
        .map(|p| read_input(p))
        .collect::<Result<Vec<_>, _>>()?;
    let verdict = verify(&name, &inputs, &opts)?;
    print_json(&verdict)?;
    Ok(match verdict.status {
        Status::Pass => 0,
        Status::Skip => 3,
        Status::Fail => 5,
    })
}

#[derive(Serialize)]
struct DuvalReport {
    spectrum: Vec<Entry>,
    /// `k` and the two roots as exact rationals, when the discriminant is a perfect square.
    exact_values: Option<Vec<String>>,
    multiplicities: Vec<String>,
}

#[derive(Serialize)]
struct PowerReport {
    power: u32,
    order: u64,
    spectrum: SpectrumReport,
}

#[derive(Serialize)]
struct DsrgReport {
    params: DsrgParams,
    /// Exact check of the defining identity; absent when only parameters were given.
    valid: Option<bool>,
    classification: SpectrumClass,
    duval: DuvalReport,
    spectra: Vec<SpectrumReport>,
    power: Option<PowerReport>,
}

fn dsrg_source(args: &DsrgArgs) -> Result<(DsrgParams, Option<Digraph>), CliError> {
    if let Some(v) = &args.params {
        let p = DsrgParams::new(v[0], v[1], v[2], v[3], v[4]);
        if !p.satisfies_counting_identity() {
            return Err(CliError::Inapplicable(format!(
                "({}, {}, {}, {}, {}) violates k^2 = s + a k + c (n - 1 - k)",
                p.n, p.k, p.s, p.a, p.c
            )));
        }
        return Ok((p, None));
    }
    let g = match args.paley {
        Some(q) => paley_tournament(q)?,
        None => figure2_dsrg(),
    };
    let p = infer_dsrg_params(&g)
        .ok_or_else(|| CliError::Inapplicable("generated digraph is not directed strongly regular".into()))?;
    Ok((p, Some(g)))
}

fn cmd_dsrg(args: DsrgArgs) -> Result<u8, CliError> {
    let (p, g) = dsrg_source(&args)?;
    let duval = duval_spectrum(&p)?;
    let spectrum = duval.spectrum()?;
    let closed = |kind| -> Result<SpectrumReport, CliError> {
        Ok(SpectrumReport::new(
            kind,
            &dsrg_derived_spectra(&p, kind)?,
            0.0,
            Source::ClosedForm,
        ))
    };
    let spectra = vec![closed(MatrixKind::D)?, closed(MatrixKind::DL)?, closed(MatrixKind::DQ)?];
    let power = match args.power {
        None => None,
        Some(ell) => {
            let d = dsrg_derived_spectra(&p, MatrixKind::D)?;
            let t = (2 * (p.n - 1) - p.k) as f64;
            let (partial, m) = power_shape(&d, t, 1e-9 * (1.0 + t))?;
            let s = cartesian_power_spectrum(t, partial, m, p.n as usize, ell)?;
            Some(PowerReport {
                power: ell,
                order: (p.n as u64).pow(ell),
                spectrum: SpectrumReport::new(MatrixKind::D, &s, 0.0, Source::ClosedForm),
            })
        }
    };
    let report = DsrgReport {
        params: p,
        valid: g.map(|_| true),
        classification: nonreal_classification(&p),
        duval: DuvalReport {
            spectrum: entries(&spectrum),
            exact_values: duval.exact_theta.map(|t| t.iter().map(|r| r.to_string()).collect()),
            multiplicities: duval.mult.iter().map(|r| r.to_string()).collect(),
        },
        spectra,
        power,
    };
    match args.format {
        OutputFormat::Json => print_json(&report)?,
        OutputFormat::Csv => {
            let mut all: Vec<&SpectrumReport> = report.spectra.iter().collect();
            if let Some(pw) = &report.power {
                all.push(&pw.spectrum);
            }
            write_csv(std::io::stdout().lock(), &all).map_err(output_error)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Product(a) => cmd_product(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Dsrg(a) => cmd_dsrg(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
