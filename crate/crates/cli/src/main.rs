mod args;
mod input;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::process::ExitCode;

use bohr_core::case::{Case, Precision};
use bohr_core::radius::{sharpness_search, validity_radius, RadiusConfig};
use bohr_core::suite::{run_suite, SuiteConfig};
use bohr_core::theorems::{InequalityReport, Verdict};
use bohr_core::Error;
use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, RadiusArgs, ReportFormat, SharpnessArgs, ShowArgs, SuiteArgs, TextFormat, VerifyArgs};

const EXIT_FAILS: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EX_USAGE: u8 = 64;
const EX_DATAERR: u8 = 65;
const EX_IOERR: u8 = 74;

pub const THREADS_ENV: &str = "BOHR_MAJORANT_THREADS";

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Data(String),
    Io(String),
    Inconclusive(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EX_USAGE,
            Failure::Data(_) => EX_DATAERR,
            Failure::Io(_) => EX_IOERR,
            Failure::Inconclusive(_) => EXIT_INCONCLUSIVE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Data(m) | Failure::Io(m) | Failure::Inconclusive(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExhausted(_) => Failure::Inconclusive(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn emit(path: Option<&Path>, content: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, content).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes()).map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

fn write_witness(path: Option<&Path>, case: &Case) -> Result<(), Failure> {
    match path {
        Some(p) => emit(Some(p), &(json(case) + "\n")),
        None => Ok(()),
    }
}

fn precision(p: args::PrecisionArgs) -> Precision {
    Precision { degree: p.degree, samples: p.samples }
}

fn verdict_code(reports: &[InequalityReport]) -> u8 {
    if reports.iter().any(|r| r.verdict == Verdict::Fails) {
        EXIT_FAILS
    } else if reports.iter().any(|r| r.verdict == Verdict::Inconclusive) {
        EXIT_INCONCLUSIVE
    } else {
        0
    }
}

fn verify(a: VerifyArgs) -> Result<u8, Failure> {
    let cases = match &a.replay {
        Some(path) => {
            if !a.inputs.is_empty() || !a.r.is_empty() {
                return Err(Failure::Usage("--replay takes its inputs from the witness file".into()));
            }
            vec![input::witness(path)?]
        }
        None => {
            if a.r.is_empty() {
                return Err(Failure::Usage("at least one --r is required".into()));
            }
            let theorem = a.theorem.expect("clap requires a theorem without --replay");
            let inputs = input::check_inputs(&a.inputs)?;
            a.r.iter()
                .map(|&r| {
                    Case::new(theorem, inputs.clone(), r)
                        .with_precision(precision(a.precision))
                        .with_tol(a.tol)
                })
                .collect()
        }
    };
    let reports = cases.iter().map(Case::evaluate).collect::<Result<Vec<_>, _>>()?;

    let mut out = String::new();
    match a.format {
        ReportFormat::Json => {
            for r in &reports {
                writeln!(out, "{}", json(r)).unwrap();
            }
        }
        ReportFormat::Csv => {
            out.push_str("theorem,r,verdict,margin\n");
            for r in &reports {
                let margin = r.margin.map(|m| m.to_string()).unwrap_or_default();
                writeln!(out, "{},{},{},{}", r.theorem, r.witness.r, r.verdict, margin).unwrap();
            }
        }
    }
    emit(a.output.as_deref(), &out)?;
    let chosen = reports.iter().find(|r| r.verdict == Verdict::Fails).or(reports.last());
    if let Some(rep) = chosen {
        write_witness(a.witness_out.as_deref(), &rep.witness)?;
    }
    Ok(verdict_code(&reports))
}

fn suite(a: SuiteArgs) -> Result<u8, Failure> {
    let config = SuiteConfig {
        seed: a.seed,
        cases: a.cases,
        r_extra: a.r_extra,
        precision: precision(a.precision),
        tol: a.tol,
    };
    let result = run_suite(&config)?;
    emit(a.output.as_deref(), &result.to_csv())?;
    if let Some(path) = &a.failures_out {
        let mut lines = String::new();
        for r in &result.failures {
            writeln!(lines, "{}", json(r)).unwrap();
        }
        emit(Some(path), &lines)?;
    }
    Ok(if result.total_fails() == 0 { 0 } else { EXIT_FAILS })
}

fn radius(a: RadiusArgs) -> Result<u8, Failure> {
    let inputs = input::check_inputs(&a.inputs)?;
    let case = Case::new(a.theorem, inputs, 0.0).with_precision(precision(a.precision));
    let config = RadiusConfig { r_max: a.r_max, grid: a.grid, bisect_tol: a.bisect_tol, tol: a.tol };
    let res = validity_radius(&case, &config)?;
    let out = match a.format {
        TextFormat::Json => json(&res) + "\n",
        TextFormat::Text if res.never_fails => format!(
            "{}: never fails on (0, {}]\nevaluations: {}\n",
            a.theorem, config.r_max, res.evaluations
        ),
        TextFormat::Text => format!(
            "{}: first failure radius in [{}, {}]\nevaluations: {}\n",
            a.theorem, res.radius_low, res.radius_high, res.evaluations
        ),
    };
    emit(a.output.as_deref(), &out)?;
    if let Some(w) = &res.first_failure_witness {
        write_witness(a.witness_out.as_deref(), w)?;
    }
    Ok(0)
}

fn sharpness(a: SharpnessArgs) -> Result<u8, Failure> {
    let inputs = input::check_inputs(&a.inputs)?;
    let template = Case::new(a.theorem, inputs, a.r)
        .with_precision(precision(a.precision))
        .with_tol(a.tol);
    let found = sharpness_search(&template, a.r, a.grid)?;
    let out = match (&found, a.format) {
        (_, TextFormat::Json) => json(&found) + "\n",
        (Some(w), TextFormat::Text) => format!(
            "{} at r = {}: fails for a = {} (lhs in [{}, {}], rhs {}, margin {})\n",
            a.theorem,
            a.r,
            w.param,
            w.report.lhs.lower,
            w.report.lhs.upper(),
            w.report.rhs.lower,
            w.report.margin.map(|m| m.to_string()).unwrap_or_else(|| "n/a".into()),
        ),
        (None, TextFormat::Text) => format!("{} at r = {}: no failure on the family grid\n", a.theorem, a.r),
    };
    emit(a.output.as_deref(), &out)?;
    if let Some(w) = &found {
        write_witness(a.witness_out.as_deref(), &w.report.witness)?;
    }
    Ok(0)
}

fn show(a: ShowArgs) -> Result<u8, Failure> {
    let series = input::spec(&a.spec)?.build(a.degree)?;
    emit(None, &(json(&series) + "\n"))?;
    Ok(0)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("{THREADS_ENV} must be a positive integer, got `{value}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EX_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Verify(a) => verify(a),
        Command::Suite(a) => suite(a),
        Command::Radius(a) => radius(a),
        Command::Sharpness(a) => sharpness(a),
        Command::Show(a) => show(a),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("bohr-majorant: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
