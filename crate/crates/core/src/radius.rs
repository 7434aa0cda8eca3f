//! Validity radii by grid scan and bisection, and one-parameter sharpness searches.
//!
//! For predicates that are not monotone in `r` the reported failure radius is
//! the first failing grid cell refined by bisection, so it is an upper
//! estimate of the true infimum that depends on the scan resolution.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::case::{Case, Precision, Prepared};
use crate::error::{Error, Result};
use crate::function::FunctionSpec;
use crate::theorems::{InequalityReport, Theorem, Verdict};

/// Precisions tried, in order, while a verdict stays inconclusive.
pub const PRECISION_LADDER: [Precision; 3] = [
    Precision { degree: 64, samples: 4096 },
    Precision { degree: 128, samples: 16384 },
    Precision { degree: 256, samples: 16384 },
];

/// Largest Möbius parameter in the sharpness family.
pub const MOEBIUS_PARAM_MAX: f64 = 1.0 - 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusConfig {
    pub r_max: f64,
    pub grid: usize,
    pub bisect_tol: f64,
    /// Verdict tolerance used during the search, replacing the case's own.
    pub tol: f64,
}

impl Default for RadiusConfig {
    fn default() -> Self {
        Self { r_max: 0.95, grid: 256, bisect_tol: 1e-9, tol: 0.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub radius_low: f64,
    pub radius_high: f64,
    pub never_fails: bool,
    pub evaluations: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure_witness: Option<Case>,
}

struct Ladder<'a> {
    case: &'a Case,
    tol: f64,
    levels: Vec<Precision>,
    prepared: Vec<Option<Prepared>>,
    evaluations: usize,
}

impl<'a> Ladder<'a> {
    fn new(case: &'a Case, tol: f64) -> Self {
        let mut levels: Vec<Precision> = PRECISION_LADDER
            .iter()
            .map(|p| Precision {
                degree: p.degree.max(case.precision.degree),
                samples: p.samples.max(case.precision.samples),
            })
            .collect();
        levels.dedup();
        let prepared = vec![None; levels.len()];
        Self { case, tol, levels, prepared, evaluations: 0 }
    }

    /// Report at `r`, climbing the ladder while the verdict is inconclusive.
    fn eval(&mut self, r: f64) -> Result<InequalityReport> {
        let mut last = None;
        for i in 0..self.levels.len() {
            if self.prepared[i].is_none() {
                self.prepared[i] = Some(Prepared::new(&self.case.inputs, self.levels[i])?);
            }
            let report = self.prepared[i].as_ref().unwrap().evaluate(self.case.theorem, r, self.tol)?;
            self.evaluations += 1;
            if report.verdict != Verdict::Inconclusive {
                return Ok(report);
            }
            last = Some(report);
        }
        Ok(last.expect("ladder is never empty"))
    }

    /// Shrink `[lo, hi]` to width `tol`, keeping `left(lo)` true and `left(hi)` false.
    fn bisect(
        &mut self,
        mut lo: f64,
        mut hi: InequalityReport,
        tol: f64,
        left: impl Fn(Verdict) -> bool,
    ) -> Result<(f64, InequalityReport)> {
        while hi.witness.r - lo > tol {
            let mid = 0.5 * (lo + hi.witness.r);
            if mid <= lo || mid >= hi.witness.r {
                break;
            }
            let rep = self.eval(mid)?;
            if left(rep.verdict) {
                lo = mid;
            } else {
                hi = rep;
            }
        }
        Ok((lo, hi))
    }
}

/// Bracket the first failure radius of `case` (whose own `r` is ignored).
pub fn validity_radius(case: &Case, config: &RadiusConfig) -> Result<RadiusResult> {
    if config.grid < 16 {
        return Err(Error::ParameterOutOfRange(format!("grid must be at least 16, got {}", config.grid)));
    }
    if !(config.r_max > 0.0 && config.r_max < 1.0) {
        return Err(Error::RadiusOutOfRange(config.r_max));
    }
    if config.bisect_tol.is_nan() || config.bisect_tol <= 0.0 {
        return Err(Error::ParameterOutOfRange(format!("bisect_tol must be positive, got {}", config.bisect_tol)));
    }
    let mut ladder = Ladder::new(case, config.tol);
    let step = config.r_max / config.grid as f64;
    let grid_r = |i: usize| if i == config.grid { config.r_max } else { step * i as f64 };

    let mut last_holds = 0.0;
    let mut first_break: Option<InequalityReport> = None;
    let mut failure: Option<(f64, InequalityReport)> = None;
    let mut prev_r = 0.0;
    for i in 1..=config.grid {
        let r = grid_r(i);
        let rep = ladder.eval(r)?;
        match rep.verdict {
            Verdict::Holds if first_break.is_none() => last_holds = r,
            Verdict::Fails => {
                failure = Some((prev_r, rep.clone()));
                first_break.get_or_insert(rep);
                break;
            }
            _ => {
                first_break.get_or_insert(rep);
            }
        }
        prev_r = r;
    }

    let Some(first_break) = first_break else {
        return Ok(RadiusResult {
            radius_low: config.r_max,
            radius_high: 1.0,
            never_fails: true,
            evaluations: ladder.evaluations,
            first_failure_witness: None,
        });
    };
    let Some((non_fail_r, fail_rep)) = failure else {
        return Err(Error::BudgetExhausted(first_break.witness.r));
    };

    let tol = config.bisect_tol;
    let (radius_low, edge) = ladder.bisect(last_holds, first_break, tol, |v| v == Verdict::Holds)?;
    let fail = if edge.verdict == Verdict::Fails {
        edge
    } else {
        // an inconclusive band separates the two boundaries
        let lo = non_fail_r.max(edge.witness.r);
        ladder.bisect(lo, fail_rep, tol, |v| v != Verdict::Fails)?.1
    };
    Ok(RadiusResult {
        radius_low,
        radius_high: fail.witness.r,
        never_fails: false,
        evaluations: ladder.evaluations,
        first_failure_witness: Some(fail.witness),
    })
}

/// First member of the Möbius family whose report at `r` fails.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpnessWitness {
    pub param: f64,
    pub report: InequalityReport,
}

/// Inputs with the Möbius family member `a` placed in the role `theorem` varies.
pub fn moebius_family_inputs(theorem: Theorem, template: &Case, a: f64) -> Result<crate::case::CheckInputs> {
    let mut inputs = template.inputs.clone();
    let moebius = FunctionSpec::moebius(a);
    let schwarz = FunctionSpec::blaschke(vec![Complex64::new(a, 0.0)], 0.0);
    match theorem {
        Theorem::Bohr | Theorem::Rogosinski => inputs.f = Some(moebius),
        Theorem::QuasiSubordination => inputs.psi = Some(moebius),
        Theorem::GeneralSubordination => inputs.g = Some(moebius),
        Theorem::NormAxioms => {
            return Err(Error::ParameterOutOfRange("norm axioms have no sharpness family".into()));
        }
        _ => inputs.phi = Some(schwarz),
    }
    Ok(inputs)
}

/// Scan `a_i = min(i / grid, 1 - 1e-6)` for `i = 0..=grid` and return the first failure at `r`.
pub fn sharpness_search(template: &Case, r: f64, grid: usize) -> Result<Option<SharpnessWitness>> {
    if grid == 0 {
        return Err(Error::ParameterOutOfRange("param grid must be positive".into()));
    }
    for i in 0..=grid {
        let a = (i as f64 / grid as f64).min(MOEBIUS_PARAM_MAX);
        let case = Case {
            inputs: moebius_family_inputs(template.theorem, template, a)?,
            r,
            ..template.clone()
        };
        let report = case.evaluate()?;
        if report.verdict == Verdict::Fails {
            return Ok(Some(SharpnessWitness { param: a, report }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::case::CheckInputs;

    fn bohr_case(f: &str) -> Case {
        Case::new(Theorem::Bohr, CheckInputs { f: Some(f.parse().unwrap()), ..Default::default() }, 0.0)
    }

    #[test]
    fn bohr_radius_of_moebius() {
        for a in [0.5, 0.9, 0.999] {
            let res = validity_radius(&bohr_case(&format!("moebius:{a}")), &RadiusConfig::default()).unwrap();
            let exact = 1.0 / (1.0 + 2.0 * a);
            assert!(res.radius_low <= exact && exact <= res.radius_high, "{a}: {res:?}");
            assert!(res.radius_high - res.radius_low <= 1e-9, "{a}: {} {}", res.radius_low, res.radius_high);
            let w = res.first_failure_witness.unwrap();
            assert_eq!(w.evaluate().unwrap().verdict, Verdict::Fails);
        }
    }

    #[test]
    fn rogosinski_radius_of_moebius() {
        for a in [0.5, 0.9, 0.99] {
            let mut case = bohr_case(&format!("moebius:{a}"));
            case.theorem = Theorem::Rogosinski;
            case.inputs.k = Some(1);
            let res = validity_radius(&case, &RadiusConfig::default()).unwrap();
            let exact = 1.0 / (1.0 + a);
            assert!(res.radius_low <= exact + 1e-12 && exact - 1e-12 <= res.radius_high, "{a}: {res:?}");
            assert!(res.radius_high - res.radius_low <= 1e-9);
        }
    }

    #[test]
    fn constant_never_fails() {
        let res = validity_radius(&bohr_case("const:0.5"), &RadiusConfig::default()).unwrap();
        assert!(res.never_fails);
        assert_eq!((res.radius_low, res.radius_high), (0.95, 1.0));
    }

    #[test]
    fn rejects_small_grid() {
        let cfg = RadiusConfig { grid: 8, ..Default::default() };
        assert!(validity_radius(&bohr_case("const:0.5"), &cfg).is_err());
    }

    #[test]
    fn bohr_sharpness_examples() {
        let w = sharpness_search(&bohr_case("const:0"), 0.35, 20).unwrap().unwrap();
        assert_eq!(w.param, 0.95);
        let expected = 0.95 + 0.0975 * 0.35 / 0.6675;
        assert!((w.report.lhs.lower - expected).abs() < 1e-12);
        assert!(sharpness_search(&bohr_case("const:0"), 1.0 / 3.0, 50).unwrap().is_none());
    }

    #[test]
    fn rogosinski_sharpness_example() {
        let mut case = bohr_case("const:0");
        case.theorem = Theorem::Rogosinski;
        case.inputs.k = Some(1);
        let w = sharpness_search(&case, 0.55, 10).unwrap().unwrap();
        assert_eq!(w.param, 0.9);
        assert!((w.report.lhs.lower - 1.0045).abs() < 1e-9);
    }
}
