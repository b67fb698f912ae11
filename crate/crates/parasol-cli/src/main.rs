//! `parasol`: verify structure axioms, curvature identities and soliton
//! constants of left-invariant almost paracontact almost paracomplex
//! Riemannian structures, exactly.
//!
//! Exit codes: 0 all requested checks pass or fit; 1 at least one check
//! failed, produced no fit, or (for named checks) could not run; 2 input
//! or validation error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use parasol_cli::spec_file::{parse_spec, LoadError, ManifoldSpec};
use parasol_cli::suite::{build_structure, exit_code, run_suite, SuiteOptions, ALL_CHECKS};
use parasol_cli::{builtin, RunReport};
use parasol_core::scalar::Rational;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "parasol",
    version,
    about = "Exact checks for left-invariant almost paracontact almost paracomplex Riemannian structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SpecSource {
    /// Path to a manifold spec file.
    #[arg(value_name = "SPEC", required_unless_present = "builtin")]
    path: Option<PathBuf>,
    /// Use a compiled-in spec instead of a file (see `parasol builtins`).
    #[arg(long, value_name = "NAME", conflicts_with = "path")]
    builtin: Option<String>,
}

#[derive(Args, Clone)]
struct FlagSpecSource {
    /// Path to a manifold spec file.
    #[arg(
        long = "spec",
        value_name = "SPEC",
        required_unless_present = "builtin"
    )]
    path: Option<PathBuf>,
    /// Use a compiled-in spec instead of a file (see `parasol builtins`).
    #[arg(long, value_name = "NAME", conflicts_with = "path")]
    builtin: Option<String>,
}

impl From<FlagSpecSource> for SpecSource {
    fn from(f: FlagSpecSource) -> Self {
        SpecSource {
            path: f.path,
            builtin: f.builtin,
        }
    }
}

#[derive(Args, Clone)]
struct RunFlags {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Substitute a rational value for a declared parameter, e.g. `p=2`
    /// or `q=-1/3`. Repeatable.
    #[arg(long = "set", value_name = "PARAM=VALUE")]
    set: Vec<String>,
    /// Solve the collinear soliton with this given constant k (a rational
    /// or a parameter name; an undeclared name is added as a parameter).
    #[arg(long, value_name = "EXPR")]
    collinear_k: Option<String>,
    /// Constant mu for the h-tensor check (default: solved soliton mu).
    #[arg(long, value_name = "EXPR")]
    mu: Option<String>,
    /// Constant nu for the h-tensor check (default: solved soliton nu).
    #[arg(long, value_name = "EXPR")]
    nu: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a spec file; no geometry is computed.
    Validate {
        #[command(flatten)]
        source: SpecSource,
    },
    /// Run the full check suite.
    Run {
        #[command(flatten)]
        source: SpecSource,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Run named sub-checks against `--spec PATH` or `--builtin NAME`.
    Check {
        /// Check names, e.g. `axioms soliton-reeb` (see `parasol checks`).
        #[arg(value_name = "CHECK", required = true)]
        checks: Vec<String>,
        #[command(flatten)]
        source: FlagSpecSource,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// List the available check names.
    Checks,
    /// List the compiled-in specs.
    Builtins,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Validate { source } => {
            let (spec, label) = resolve(&source)?;
            build_structure(&spec).map_err(|e| e.to_string())?;
            println!(
                "ok: {} ({}, dim {}, params [{}])",
                spec.name,
                label,
                spec.dim,
                spec.params.join(", ")
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Run { source, flags } => {
            let (spec, label) = resolve(&source)?;
            let options = options_from(&flags, None, label)?;
            let report = run_suite(&spec, &options).map_err(|e| e.to_string())?;
            emit(&report, flags.format);
            Ok(ExitCode::from(exit_code(&report, false) as u8))
        }
        Command::Check {
            source,
            checks,
            flags,
        } => {
            let (spec, label) = resolve(&source.into())?;
            let options = options_from(&flags, Some(checks), label)?;
            let report = run_suite(&spec, &options).map_err(|e| e.to_string())?;
            emit(&report, flags.format);
            Ok(ExitCode::from(exit_code(&report, true) as u8))
        }
        Command::Checks => {
            for name in ALL_CHECKS {
                println!("{name}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Builtins => {
            for (name, _) in builtin::all() {
                println!("{name}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn resolve(source: &SpecSource) -> Result<(ManifoldSpec, String), String> {
    match (&source.path, &source.builtin) {
        (Some(path), None) => {
            let spec = parasol_cli::load_spec(path).map_err(|e| e.to_string())?;
            Ok((spec, path.display().to_string()))
        }
        (None, Some(name)) => {
            let text = builtin::get(name).ok_or_else(|| {
                format!(
                    "unknown builtin `{name}` (available: {})",
                    builtin::all()
                        .iter()
                        .map(|(n, _)| *n)
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            })?;
            let spec = parse_spec(text).map_err(|e: LoadError| e.to_string())?;
            Ok((spec, format!("builtin:{name}")))
        }
        _ => Err("provide a spec path or --builtin".to_string()),
    }
}

fn options_from(
    flags: &RunFlags,
    checks: Option<Vec<String>>,
    source: String,
) -> Result<SuiteOptions, String> {
    let mut substitutions = BTreeMap::new();
    for item in &flags.set {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| format!("--set expects PARAM=VALUE, got `{item}`"))?;
        let value = parse_rational(value.trim())
            .ok_or_else(|| format!("--set value for `{name}` must be a rational, got `{value}`"))?;
        if substitutions
            .insert(name.trim().to_string(), value)
            .is_some()
        {
            return Err(format!("duplicate --set for parameter `{name}`"));
        }
    }
    Ok(SuiteOptions {
        checks,
        substitutions,
        collinear_k: flags.collinear_k.clone(),
        h_mu: flags.mu.clone(),
        h_nu: flags.nu.clone(),
        source,
    })
}

fn parse_rational(text: &str) -> Option<Rational> {
    match text.split_once('/') {
        None => {
            let n = num_bigint_from_str(text)?;
            Some(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n = num_bigint_from_str(num.trim())?;
            let d = num_bigint_from_str(den.trim())?;
            if d == 0.into() {
                return None;
            }
            Some(Rational::new(n, d))
        }
    }
}

fn num_bigint_from_str(text: &str) -> Option<num_bigint::BigInt> {
    num_bigint::BigInt::from_str(text).ok()
}

fn emit(report: &RunReport, format: Format) {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
}
