//! Replayable check cases.
//!
//! A [`Case`] names a theorem, its inputs as [`FunctionSpec`]s, the radius
//! and the precision. Every [`InequalityReport`] carries the case that
//! produced it, so a serialized report can be re-evaluated verbatim.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bohr::{Radius, DEFAULT_SAMPLES};
use crate::error::{Error, Result};
use crate::function::FunctionSpec;
use crate::schwarz::SchwarzFunction;
use crate::series::{TruncatedSeries, DEFAULT_DEGREE};
use crate::theorems::{Checker, InequalityReport, SectionMode, Theorem, DEFAULT_SCHWARZ_TOL, DEFAULT_TOL};

/// Truncation degree and circle sample count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Precision {
    pub degree: usize,
    pub samples: usize,
}

impl Default for Precision {
    fn default() -> Self {
        Self { degree: DEFAULT_DEGREE, samples: DEFAULT_SAMPLES }
    }
}

mod complex_opt {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::function::{format_complex, parse_complex};

    pub fn serialize<S: Serializer>(c: &Option<Complex64>, s: S) -> Result<S::Ok, S::Error> {
        match c {
            Some(c) => s.serialize_str(&format_complex(*c)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Complex64>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| parse_complex(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Inputs of a check; each theorem reads the fields it needs.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckInputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<FunctionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<FunctionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<FunctionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<FunctionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<FunctionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "complex_opt")]
    pub alpha: Option<Complex64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sup_bound: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<SectionMode>,
}

/// Inputs built into series at one precision, reusable across radii and theorems.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub inputs: CheckInputs,
    pub precision: Precision,
    f: Option<TruncatedSeries>,
    g: Option<TruncatedSeries>,
    h: Option<TruncatedSeries>,
    psi: Option<TruncatedSeries>,
    phi: Option<SchwarzFunction>,
}

fn build(spec: &Option<FunctionSpec>, degree: usize) -> Result<Option<TruncatedSeries>> {
    spec.as_ref().map(|s| s.build(degree)).transpose()
}

fn need<'a, T>(x: &'a Option<T>, name: &'static str) -> Result<&'a T> {
    x.as_ref().ok_or(Error::MissingInput(name))
}

impl Prepared {
    pub fn new(inputs: &CheckInputs, precision: Precision) -> Result<Self> {
        let degree = precision.degree;
        let phi = build(&inputs.phi, degree)?
            .map(|p| SchwarzFunction::new(p, DEFAULT_SCHWARZ_TOL))
            .transpose()?;
        Ok(Self {
            inputs: inputs.clone(),
            precision,
            f: build(&inputs.f, degree)?,
            g: build(&inputs.g, degree)?,
            h: build(&inputs.h, degree)?,
            psi: build(&inputs.psi, degree)?,
            phi,
        })
    }

    fn checker(&self, tol: f64) -> Checker {
        Checker { tol, samples: self.precision.samples, schwarz_tol: DEFAULT_SCHWARZ_TOL }
    }

    /// `phi`, falling back to `f` for checks that only take a Schwarz function.
    fn schwarz_or_f(&self) -> Result<SchwarzFunction> {
        match (&self.phi, &self.f) {
            (Some(phi), _) => Ok(phi.clone()),
            (None, Some(f)) => SchwarzFunction::new(f.clone(), DEFAULT_SCHWARZ_TOL),
            (None, None) => Err(Error::MissingInput("phi")),
        }
    }

    pub fn evaluate(&self, theorem: Theorem, r: f64, tol: f64) -> Result<InequalityReport> {
        let radius = Radius::new(r)?;
        let ck = self.checker(tol);
        let inp = &self.inputs;
        let mut report = match theorem {
            Theorem::Bohr => ck.check_bohr(need(&self.f, "f")?, inp.sup_bound.unwrap_or(1.0), radius),
            Theorem::Rogosinski => ck.check_rogosinski(need(&self.f, "f")?, *need(&inp.k, "k")?, radius),
            Theorem::NormAxioms => {
                let f = need(&self.f, "f")?;
                let zero = TruncatedSeries::zero(0);
                let g = self.g.as_ref().unwrap_or(&zero);
                ck.check_norm_axioms(f, g, inp.alpha.unwrap_or(Complex64::new(1.0, 0.0)), radius)
            }
            Theorem::SchwarzMajorant => ck.check_schwarz_majorant(&self.schwarz_or_f()?, radius),
            Theorem::Subordination => ck.check_subordination(need(&self.h, "h")?, need(&self.phi, "phi")?, radius),
            Theorem::GeneralSubordination => ck.check_general_subordination(
                need(&self.h, "h")?,
                need(&self.g, "g")?,
                need(&self.phi, "phi")?,
                inp.b.unwrap_or(1.0),
                inp.rho.unwrap_or(1.0),
                radius,
            ),
            Theorem::QuasiSubordination => {
                ck.check_quasi_subordination(need(&self.h, "h")?, need(&self.psi, "psi")?, need(&self.phi, "phi")?, radius)
            }
            Theorem::VonNeumannType => ck.check_von_neumann_type(need(&self.h, "h")?, need(&self.phi, "phi")?, radius),
            Theorem::SectionPowers => {
                ck.check_section_powers(&self.schwarz_or_f()?, *need(&inp.j, "j")?, *need(&inp.k, "k")?, radius)
            }
            Theorem::SectionSup => {
                ck.check_section_sup(need(&self.h, "h")?, need(&self.phi, "phi")?, *need(&inp.k, "k")?, radius)
            }
            Theorem::SectionMajorant => {
                ck.check_section_majorant(need(&self.h, "h")?, need(&self.phi, "phi")?, *need(&inp.k, "k")?, radius)
            }
            Theorem::DeBranges => ck.check_debranges_bound(
                need(&self.h, "h")?,
                need(&self.phi, "phi")?,
                *need(&inp.k, "k")?,
                radius,
                *need(&inp.mode, "mode")?,
            ),
        }?;
        report.witness = Case {
            theorem,
            inputs: self.inputs.clone(),
            r,
            precision: self.precision,
            tol,
        };
        Ok(report)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub theorem: Theorem,
    pub inputs: CheckInputs,
    pub r: f64,
    pub precision: Precision,
    pub tol: f64,
}

impl Case {
    pub fn new(theorem: Theorem, inputs: CheckInputs, r: f64) -> Self {
        Self {
            theorem,
            inputs,
            r,
            precision: Precision::default(),
            tol: DEFAULT_TOL,
        }
    }

    pub fn with_precision(mut self, precision: Precision) -> Self {
        self.precision = precision;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn evaluate(&self) -> Result<InequalityReport> {
        Prepared::new(&self.inputs, self.precision)?.evaluate(self.theorem, self.r, self.tol)
    }
}
