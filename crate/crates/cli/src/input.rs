use std::fs;
use std::path::Path;

use bohr_core::case::{Case, CheckInputs};
use bohr_core::function::{parse_complex, FunctionSpec};
use bohr_core::schwarz::SchwarzSpec;
use bohr_core::theorems::InequalityReport;

use crate::args::InputArgs;
use crate::Failure;

fn parse_text(text: &str) -> Result<FunctionSpec, String> {
    let text = text.trim();
    if text.starts_with('{') {
        serde_json::from_str::<SchwarzSpec>(text)
            .map(FunctionSpec::from)
            .map_err(|e| format!("invalid Schwarz spec JSON: {e}"))
    } else {
        text.parse().map_err(|e: bohr_core::Error| e.to_string())
    }
}

/// A spec from a flag: inline grammar or JSON, or a file holding either.
pub fn spec(value: &str) -> Result<FunctionSpec, Failure> {
    let path = Path::new(value);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{value}: {e}")))?;
        return parse_text(&text).map_err(|e| Failure::Data(format!("{value}: {e}")));
    }
    parse_text(value).map_err(Failure::Usage)
}

fn opt_spec(value: &Option<String>) -> Result<Option<FunctionSpec>, Failure> {
    value.as_deref().map(spec).transpose()
}

pub fn check_inputs(args: &InputArgs) -> Result<CheckInputs, Failure> {
    let f = args.function.as_ref().or(args.f.as_ref()).cloned();
    Ok(CheckInputs {
        f: opt_spec(&f)?,
        g: opt_spec(&args.g)?,
        h: opt_spec(&args.h)?,
        phi: opt_spec(&args.phi)?,
        psi: opt_spec(&args.psi)?,
        alpha: args
            .alpha
            .as_deref()
            .map(|a| parse_complex(a).map_err(|e| Failure::Usage(format!("--alpha: {e}"))))
            .transpose()?,
        k: args.k,
        j: args.j,
        b: args.b,
        rho: args.rho,
        sup_bound: args.sup_bound,
        mode: args.mode,
    })
}

/// Reads a witness file holding either a case or a full report.
pub fn witness(path: &Path) -> Result<Case, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    if let Ok(case) = serde_json::from_str::<Case>(&text) {
        return Ok(case);
    }
    serde_json::from_str::<InequalityReport>(&text)
        .map(|r| r.witness)
        .map_err(|e| Failure::Data(format!("{}: not a witness case or report: {e}", path.display())))
}
