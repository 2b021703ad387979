//! Batch front end: `compute`, `certify`, `factor` and `selftest`.
//!
//! Exit statuses: 0 success, 1 internal error, 2 malformed input, 3 a check
//! failed, 4 inconclusive certificate, 5 unsupported input, 6 singular curve.

mod pipeline;
mod render;
pub mod selftest;

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

pub use pipeline::{from_btable, from_curve, from_params, load, parse_params, run_checks, Computed, Source};
pub use render::to_latex;

use crate::arith::BiPoly;
use crate::curves::CurveError;
use crate::irreducibility::{certify_p, factor_oracle, Certificate, IrrError, OracleOutcome};
use crate::zeta2::ZetaError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;
pub const EXIT_UNSUPPORTED: i32 = 5;
pub const EXIT_SINGULAR: i32 = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("bad --params: {0}")]
    Params(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("singular curve: {0}")]
    Singular(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Json(_) | CliError::Params(_) | CliError::Invalid(_) => {
                EXIT_INPUT
            }
            CliError::Unsupported(_) => EXIT_UNSUPPORTED,
            CliError::Singular(_) => EXIT_SINGULAR,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        match e {
            CurveError::Json(m) => CliError::Json(m),
            CurveError::Singular(m) => CliError::Singular(m),
            CurveError::NotPrime(_) | CurveError::UnsupportedField(_) | CurveError::CharacteristicTwo => {
                CliError::Unsupported(e.to_string())
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<ZetaError> for CliError {
    fn from(e: ZetaError) -> Self {
        match e {
            ZetaError::Json(m) => CliError::Json(m),
            ZetaError::UnsupportedGenus(_) => CliError::Unsupported(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<IrrError> for CliError {
    fn from(e: IrrError) -> Self {
        match e {
            IrrError::GenusZero | IrrError::DegreeTooLarge(_) => CliError::Unsupported(e.to_string()),
            IrrError::Assertion(_) | IrrError::Internal(_) => CliError::Internal(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum OutFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "bizeta", version, about = "Two-variable zeta functions of curves of genus <= 2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the pipeline and print P(t,u) with all checks.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        /// Also build the irreducibility certificate and run the factor oracle.
        #[arg(long)]
        certify: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build the irreducibility certificate for P(t,u).
    Certify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Factor a bivariate polynomial (or the P of an input) over Q(u).
    Factor {
        /// JSON matrix file: row = t-exponent, column = u-exponent.
        #[arg(long, conflicts_with_all = ["curve", "params", "btable"])]
        poly: Option<PathBuf>,
        #[arg(long)]
        curve: Option<PathBuf>,
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        btable: Option<PathBuf>,
        #[arg(long)]
        synthetic: bool,
        #[arg(long, value_enum, default_value_t)]
        out: OutFormat,
    },
    /// Sweep all small curves and report the acceptance criteria.
    Selftest {
        #[arg(long, value_enum, default_value_t)]
        out: OutFormat,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["curve", "params", "btable"])))]
pub struct InputArgs {
    /// Curve description JSON.
    #[arg(long)]
    pub curve: Option<PathBuf>,
    /// Inline parameters, e.g. g=1,q=2,N=3 or g=2,q=3,a=-2,b=2.
    #[arg(long)]
    pub params: Option<String>,
    /// b-table JSON.
    #[arg(long)]
    pub btable: Option<PathBuf>,
    /// Allow parameters that no smooth curve has.
    #[arg(long)]
    pub synthetic: bool,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t)]
    pub out: OutFormat,
    /// Write the certificate JSON to this file.
    #[arg(long, value_name = "FILE")]
    pub emit_certificate: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    Compute { certify: bool },
    Certify,
    Factor { poly: Option<PathBuf> },
    Selftest,
}

/// A single batch job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub task: Task,
    pub source: Option<Source>,
    pub synthetic: bool,
    pub out: OutFormat,
    pub emit_certificate: Option<PathBuf>,
}

fn pick_source(
    curve: Option<PathBuf>,
    params: Option<String>,
    btable: Option<PathBuf>,
) -> Option<Source> {
    curve
        .map(Source::Curve)
        .or(params.map(Source::Params))
        .or(btable.map(Source::BTable))
}

impl From<Cli> for JobSpec {
    fn from(cli: Cli) -> Self {
        match cli.command {
            Command::Compute { input, certify, output } => JobSpec {
                task: Task::Compute { certify },
                source: pick_source(input.curve, input.params, input.btable),
                synthetic: input.synthetic,
                out: output.out,
                emit_certificate: output.emit_certificate,
            },
            Command::Certify { input, output } => JobSpec {
                task: Task::Certify,
                source: pick_source(input.curve, input.params, input.btable),
                synthetic: input.synthetic,
                out: output.out,
                emit_certificate: output.emit_certificate,
            },
            Command::Factor { poly, curve, params, btable, synthetic, out } => JobSpec {
                task: Task::Factor { poly },
                source: pick_source(curve, params, btable),
                synthetic,
                out,
                emit_certificate: None,
            },
            Command::Selftest { out } => JobSpec {
                task: Task::Selftest,
                source: None,
                synthetic: false,
                out,
                emit_certificate: None,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs a job; never panics on bad input.
pub fn run(job: &JobSpec) -> RunOutput {
    match execute(job) {
        Ok(out) => out,
        Err(e) => {
            let stdout = match job.out {
                OutFormat::Json => render::json_string(&json!({"error": e.to_string(), "status": e.exit_code()})),
                OutFormat::Text => String::new(),
            };
            RunOutput {
                code: e.exit_code(),
                stdout,
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn source_of(job: &JobSpec) -> Result<&Source, CliError> {
    job.source
        .as_ref()
        .ok_or_else(|| CliError::Invalid("exactly one of --curve, --params, --btable is required".into()))
}

fn execute(job: &JobSpec) -> Result<RunOutput, CliError> {
    match &job.task {
        Task::Compute { certify } => compute(job, *certify),
        Task::Certify => certify(job),
        Task::Factor { poly } => factor(job, poly.as_ref()),
        Task::Selftest => Ok(selftest_job(job.out)),
    }
}

fn emit(job: &JobSpec, cert: &Certificate) -> Result<(), CliError> {
    if let Some(path) = &job.emit_certificate {
        std::fs::write(path, render::json_string(&cert.to_json())).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
    }
    Ok(())
}

fn certify_with_oracle(c: &Computed) -> Result<(Certificate, OracleOutcome), CliError> {
    Ok((certify_p(&c.p)?, factor_oracle(c.p.poly())?))
}

fn compute(job: &JobSpec, certify: bool) -> Result<RunOutput, CliError> {
    let c = load(source_of(job)?, job.synthetic)?;
    let mut report = run_checks(&c);
    let certified = if certify {
        let (cert, oracle) = certify_with_oracle(&c)?;
        let agree = !(cert.is_certified() && !oracle.is_irreducible());
        report.record("ORACLE-agree", agree, || oracle.to_json());
        emit(job, &cert)?;
        Some((cert, oracle))
    } else {
        None
    };
    let code = if !report.all_pass() {
        EXIT_CHECK_FAILED
    } else if certified.as_ref().is_some_and(|(c, _)| !c.is_certified()) {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    };
    let cert_ref = certified.as_ref().map(|(c, o)| (c, o));
    let stdout = match job.out {
        OutFormat::Text => render::compute_text(&c, &report, cert_ref),
        OutFormat::Json => render::json_string(&render::compute_json(&c, &report, cert_ref, code)),
    };
    Ok(RunOutput {
        code,
        stdout,
        stderr: String::new(),
    })
}

fn certify(job: &JobSpec) -> Result<RunOutput, CliError> {
    let c = load(source_of(job)?, job.synthetic)?;
    let (cert, oracle) = certify_with_oracle(&c)?;
    emit(job, &cert)?;
    let code = if cert.is_certified() && !oracle.is_irreducible() {
        EXIT_CHECK_FAILED
    } else if cert.is_certified() {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    };
    let stdout = match job.out {
        OutFormat::Text => format!(
            "P(t,u) = {}\n{}",
            c.p.poly(),
            render::certificate_text(&cert, &oracle)
        ),
        OutFormat::Json => render::json_string(&json!({
            "P": render::poly_json(c.p.poly()),
            "certificate": cert.to_json(),
            "oracle": oracle.to_json(),
            "status": code,
        })),
    };
    Ok(RunOutput {
        code,
        stdout,
        stderr: String::new(),
    })
}

fn factor(job: &JobSpec, poly: Option<&PathBuf>) -> Result<RunOutput, CliError> {
    let p = match poly {
        Some(path) => {
            let v: Value =
                serde_json::from_str(&pipeline::read(path)?).map_err(|e| CliError::Json(e.to_string()))?;
            BiPoly::from_json(&v).map_err(|e| CliError::Json(e.to_string()))?
        }
        None => load(source_of(job)?, job.synthetic)?.p.poly().clone(),
    };
    let outcome = factor_oracle(&p)?;
    let stdout = match job.out {
        OutFormat::Text => format!("input: {p}\n{}", render::oracle_text(&outcome)),
        OutFormat::Json => render::json_string(&json!({
            "input": render::poly_json(&p),
            "oracle": outcome.to_json(),
            "status": EXIT_OK,
        })),
    };
    Ok(RunOutput {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    })
}

fn selftest_job(out: OutFormat) -> RunOutput {
    let results = selftest::run();
    let pass = results.iter().all(|c| c.pass);
    let code = if pass { EXIT_OK } else { EXIT_CHECK_FAILED };
    let stdout = match out {
        OutFormat::Text => results
            .iter()
            .map(|c| {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                format!("{tag} criterion {}: {} ({})\n", c.id, c.title, c.detail)
            })
            .collect(),
        OutFormat::Json => render::json_string(&json!({
            "criteria": results.iter().map(selftest::Criterion::to_json).collect::<Vec<_>>(),
            "status": code,
        })),
    };
    RunOutput {
        code,
        stdout,
        stderr: String::new(),
    }
}

/// Parses arguments from the process and runs the job.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let out = run(&JobSpec::from(cli));
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
