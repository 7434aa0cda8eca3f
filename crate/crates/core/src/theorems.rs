//! Certified checks of Bohr/Rogosinski-type inequalities.
//!
//! Every check evaluates both sides as [`CertifiedValue`] brackets and
//! classifies the comparison `lhs <= rhs`:
//!
//! * `Holds` when `lhs.upper <= rhs.lower + tol`,
//! * `Fails` when `lhs.lower > rhs.upper + tol`,
//! * `Inconclusive` otherwise.
//!
//! Checks that quantify over genuinely infinite series (Bohr, Schwarz
//! majorant) use tail-bounded brackets. The subordination-type checks treat
//! their truncated inputs as exact polynomials: coefficient `n` of `h(phi)`
//! only depends on `phi` up to degree `n`, so every finite sum they compare is
//! a partial sum of the untruncated quantity.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bohr::{bohr_value, finite_bohr_sum, sup_on_circle, sup_on_unit_circle, CertifiedValue, Radius, DEFAULT_SAMPLES};
use crate::case::{Case, CheckInputs, Precision};
use crate::error::{Error, Result};
use crate::function::{is_koebe_rotation, FunctionSpec};
use crate::schwarz::SchwarzFunction;
use crate::series::TruncatedSeries;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_SCHWARZ_TOL: f64 = 1e-9;
/// Tolerance of the norm-axiom sub-checks.
pub const NORM_AXIOM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    Bohr,
    Rogosinski,
    NormAxioms,
    SchwarzMajorant,
    Subordination,
    GeneralSubordination,
    QuasiSubordination,
    VonNeumannType,
    SectionPowers,
    SectionSup,
    SectionMajorant,
    DeBranges,
}

impl Theorem {
    pub const ALL: [Theorem; 12] = [
        Theorem::Bohr,
        Theorem::Rogosinski,
        Theorem::NormAxioms,
        Theorem::SchwarzMajorant,
        Theorem::Subordination,
        Theorem::GeneralSubordination,
        Theorem::QuasiSubordination,
        Theorem::VonNeumannType,
        Theorem::SectionPowers,
        Theorem::SectionSup,
        Theorem::SectionMajorant,
        Theorem::DeBranges,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Bohr => "bohr",
            Theorem::Rogosinski => "rogosinski",
            Theorem::NormAxioms => "norm-axioms",
            Theorem::SchwarzMajorant => "schwarz-majorant",
            Theorem::Subordination => "subordination",
            Theorem::GeneralSubordination => "general-subordination",
            Theorem::QuasiSubordination => "quasi-subordination",
            Theorem::VonNeumannType => "von-neumann-type",
            Theorem::SectionPowers => "section-powers",
            Theorem::SectionSup => "section-sup",
            Theorem::SectionMajorant => "section-majorant",
            Theorem::DeBranges => "de-branges",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == norm || (norm == "von-neumann" && *t == Theorem::VonNeumannType) || (norm == "debranges" && *t == Theorem::DeBranges))
            .ok_or_else(|| {
                let names: Vec<&str> = Theorem::ALL.iter().map(|t| t.name()).collect();
                format!("unknown theorem `{s}` (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl Verdict {
    /// Classifies `lhs <= rhs` with absolute tolerance `tol`.
    pub fn classify(lhs: &CertifiedValue, rhs: &CertifiedValue, tol: f64) -> Self {
        if lhs.upper() <= rhs.lower + tol {
            Verdict::Holds
        } else if lhs.lower > rhs.upper() + tol {
            Verdict::Fails
        } else {
            Verdict::Inconclusive
        }
    }

    /// Fails dominates Inconclusive, which dominates Holds.
    fn combine(self, other: Self) -> Self {
        use Verdict::*;
        match (self, other) {
            (Fails, _) | (_, Fails) => Fails,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Holds,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// `rhs.lower - lhs.upper` unless the comparison fails, then `lhs.lower - rhs.upper`.
/// Certified gap in the direction of the verdict: `rhs.lower - lhs.upper`
/// unless the verdict is `Fails`, where it is `lhs.lower - rhs.upper`.
fn margin_of(verdict: Verdict, lhs: &CertifiedValue, rhs: &CertifiedValue) -> Option<f64> {
    let m = match verdict {
        Verdict::Fails => lhs.lower - rhs.upper(),
        _ => rhs.lower - lhs.upper(),
    };
    m.is_finite().then_some(m)
}

/// One component of a compound check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubCheck {
    pub name: String,
    pub verdict: Verdict,
    pub lhs: CertifiedValue,
    pub rhs: CertifiedValue,
    /// Whether this component enters the overall verdict at the given radius.
    pub applicable: bool,
}

impl SubCheck {
    fn compare(name: &str, lhs: CertifiedValue, rhs: CertifiedValue, tol: f64, applicable: bool) -> Self {
        Self {
            name: name.to_string(),
            verdict: Verdict::classify(&lhs, &rhs, tol),
            lhs,
            rhs,
            applicable,
        }
    }

    fn margin(&self) -> f64 {
        margin_of(self.verdict, &self.lhs, &self.rhs).unwrap_or(f64::NEG_INFINITY)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub theorem: Theorem,
    pub verdict: Verdict,
    pub lhs: CertifiedValue,
    pub rhs: CertifiedValue,
    pub margin: Option<f64>,
    /// The inequality holds and is attained to within the tolerance.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub equality: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subchecks: Vec<SubCheck>,
    pub witness: Case,
}

fn is_equality(verdict: Verdict, margin: Option<f64>, tol: f64) -> bool {
    verdict == Verdict::Holds && margin.is_some_and(|m| m <= tol)
}

impl InequalityReport {
    fn compare(witness: Case, lhs: CertifiedValue, rhs: CertifiedValue, tol: f64) -> Self {
        let verdict = Verdict::classify(&lhs, &rhs, tol);
        let margin = margin_of(verdict, &lhs, &rhs);
        Self {
            theorem: witness.theorem,
            verdict,
            lhs,
            rhs,
            margin,
            equality: is_equality(verdict, margin, tol),
            subchecks: Vec::new(),
            witness,
        }
    }

    /// Aggregates applicable sub-checks; the headline sides are those of the
    /// tightest applicable component.
    fn aggregate(witness: Case, subchecks: Vec<SubCheck>) -> Self {
        let applicable = subchecks.iter().filter(|s| s.applicable);
        let verdict = applicable.clone().fold(Verdict::Holds, |acc, s| acc.combine(s.verdict));
        let worst = applicable
            .filter(|s| s.verdict == verdict)
            .min_by(|a, b| match verdict {
                Verdict::Fails => b.margin().total_cmp(&a.margin()),
                _ => a.margin().total_cmp(&b.margin()),
            })
            .or_else(|| subchecks.first())
            .expect("at least one sub-check");
        let margin = margin_of(verdict, &worst.lhs, &worst.rhs);
        Self {
            theorem: witness.theorem,
            verdict,
            lhs: worst.lhs,
            rhs: worst.rhs,
            margin,
            equality: is_equality(verdict, margin, witness.tol),
            subchecks,
            witness,
        }
    }
}

/// How the de Branges section bound measures the section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SectionMode {
    /// `max_{|z| = r} |s_k(f)(z)|`, valid for `r <= 1/2`.
    Sup,
    /// `M_r(s_k(f))`, valid for `r <= 1/3`.
    Majorant,
}

impl FromStr for SectionMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "sup" => Ok(SectionMode::Sup),
            "majorant" => Ok(SectionMode::Majorant),
            _ => Err(format!("unknown mode `{s}` (expected sup or majorant)")),
        }
    }
}

/// Tolerances and sampling shared by all checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Checker {
    pub tol: f64,
    pub samples: usize,
    pub schwarz_tol: f64,
}

impl Default for Checker {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            samples: DEFAULT_SAMPLES,
            schwarz_tol: DEFAULT_SCHWARZ_TOL,
        }
    }
}

fn poly(s: &TruncatedSeries) -> Option<FunctionSpec> {
    Some(FunctionSpec::poly_of(s))
}

fn exact(x: f64) -> CertifiedValue {
    CertifiedValue::exact(x)
}

impl Checker {
    pub fn schwarz(&self, phi: TruncatedSeries) -> Result<SchwarzFunction> {
        SchwarzFunction::new(phi, self.schwarz_tol)
    }

    fn witness(&self, theorem: Theorem, inputs: CheckInputs, r: Radius, degree: usize) -> Case {
        Case {
            theorem,
            inputs,
            r: r.get(),
            precision: Precision { degree, samples: self.samples },
            tol: self.tol,
        }
    }

    /// `M_r(f) <= M` for `|f| <= M` on the disk.
    pub fn check_bohr(&self, f: &TruncatedSeries, sup_bound: f64, r: Radius) -> Result<InequalityReport> {
        if !(sup_bound > 0.0 && sup_bound.is_finite()) {
            return Err(Error::ParameterOutOfRange(format!("sup bound {sup_bound} must be positive")));
        }
        let lhs = bohr_value(f, r, Some(sup_bound));
        let inputs = CheckInputs { f: poly(f), sup_bound: Some(sup_bound), ..Default::default() };
        let witness = self.witness(Theorem::Bohr, inputs, r, f.degree());
        Ok(InequalityReport::compare(witness, lhs, exact(sup_bound), self.tol))
    }

    /// `max_{|z| = r} |s_k(f)| <= 1` for unit-bounded `f`.
    pub fn check_rogosinski(&self, f: &TruncatedSeries, k: usize, r: Radius) -> Result<InequalityReport> {
        let lhs = sup_on_circle(&f.section(k), r, self.samples)?;
        let inputs = CheckInputs { f: poly(f), k: Some(k), ..Default::default() };
        let witness = self.witness(Theorem::Rogosinski, inputs, r, f.degree());
        Ok(InequalityReport::compare(witness, lhs, exact(1.0), self.tol))
    }

    /// The five norm-algebra properties of `M_r` on exact finite sums.
    pub fn check_norm_axioms(
        &self,
        f: &TruncatedSeries,
        g: &TruncatedSeries,
        alpha: Complex64,
        r: Radius,
    ) -> Result<InequalityReport> {
        let rv = r.get();
        let m = |s: &TruncatedSeries| finite_bohr_sum(s, rv);
        let (mf, mg) = (m(f), m(g));
        let tol = NORM_AXIOM_TOL;

        // (i) non-negativity, and M_r(f) = 0 iff f = 0 (for r > 0; at r = 0
        // M_0 only sees the constant term)
        let vanishes = if rv > 0.0 { f.is_zero() } else { f.coeff(0) == Complex64::new(0.0, 0.0) };
        let mut positivity = SubCheck::compare("(i) positivity", exact(0.0), exact(mf), 0.0, true);
        if (mf == 0.0) != vanishes {
            positivity.verdict = Verdict::Fails;
        }

        let additivity = SubCheck::compare("(ii) subadditivity", exact(m(&f.add(g))), exact(mf + mg), tol, true);

        let scaled = m(&f.scale(alpha));
        let expected = alpha.norm() * mf;
        let homogeneity = SubCheck::compare("(iii) homogeneity", exact((scaled - expected).abs()), exact(0.0), tol, true);

        let product = m(&f.mul_full(g));
        let multiplicativity = SubCheck::compare("(iv) submultiplicativity", exact(product), exact(mf * mg), tol, true);

        let unit = m(&TruncatedSeries::one(0));
        let mut unital = SubCheck::compare("(v) unit", exact(unit), exact(1.0), 0.0, true);
        if unit != 1.0 {
            unital.verdict = Verdict::Fails;
        }

        let inputs = CheckInputs { f: poly(f), g: poly(g), alpha: Some(alpha), ..Default::default() };
        let witness = self.witness(Theorem::NormAxioms, inputs, r, f.degree().max(g.degree()));
        Ok(InequalityReport::aggregate(
            witness,
            vec![positivity, additivity, homogeneity, multiplicativity, unital],
        ))
    }

    /// `M_r(phi) <= r` for a Schwarz function `phi`.
    pub fn check_schwarz_majorant(&self, phi: &SchwarzFunction, r: Radius) -> Result<InequalityReport> {
        let phi = phi.series();
        let lhs = bohr_value(phi, r, Some(1.0));
        let inputs = CheckInputs { phi: poly(phi), ..Default::default() };
        let witness = self.witness(Theorem::SchwarzMajorant, inputs, r, phi.degree());
        Ok(InequalityReport::compare(witness, lhs, exact(r.get()), self.tol))
    }

    /// `M_r(h(phi)) <= M_r(h)`.
    pub fn check_subordination(&self, h: &TruncatedSeries, phi: &SchwarzFunction, r: Radius) -> Result<InequalityReport> {
        let n = phi.series().degree();
        let f = TruncatedSeries::compose(h, phi.series(), n)?;
        let lhs = exact(finite_bohr_sum(&f, r.get()));
        let rhs = exact(finite_bohr_sum(h, r.get()));
        let inputs = CheckInputs { h: poly(h), phi: poly(phi.series()), ..Default::default() };
        let witness = self.witness(Theorem::Subordination, inputs, r, n);
        Ok(InequalityReport::compare(witness, lhs, rhs, self.tol))
    }

    /// `M_r(g h(phi)) <= b M_r(h)` when `|g| <= b` on the disk of radius `rho`.
    #[allow(clippy::too_many_arguments)]
    pub fn check_general_subordination(
        &self,
        h: &TruncatedSeries,
        g: &TruncatedSeries,
        phi: &SchwarzFunction,
        b: f64,
        rho: f64,
        r: Radius,
    ) -> Result<InequalityReport> {
        let inputs = CheckInputs {
            h: poly(h),
            g: poly(g),
            phi: poly(phi.series()),
            b: Some(b),
            rho: Some(rho),
            ..Default::default()
        };
        self.general_subordination(Theorem::GeneralSubordination, inputs, h, g, phi, b, rho, r)
    }

    #[allow(clippy::too_many_arguments)]
    fn general_subordination(
        &self,
        theorem: Theorem,
        inputs: CheckInputs,
        h: &TruncatedSeries,
        g: &TruncatedSeries,
        phi: &SchwarzFunction,
        b: f64,
        rho: f64,
        r: Radius,
    ) -> Result<InequalityReport> {
        if !(rho > 0.0 && rho <= 1.0) {
            return Err(Error::ParameterOutOfRange(format!("rho = {rho} not in (0, 1]")));
        }
        if !(b > 0.0 && b.is_finite()) {
            return Err(Error::ParameterOutOfRange(format!("b = {b} must be positive")));
        }
        let n = phi.series().degree();
        let f = g.mul(&TruncatedSeries::compose(h, phi.series(), n)?, n);
        let lhs = exact(finite_bohr_sum(&f, r.get()));
        let rhs = exact(b * finite_bohr_sum(h, r.get()));
        let witness = self.witness(theorem, inputs, r, n);
        let mut report = InequalityReport::compare(witness, lhs, rhs, self.tol);
        if r.get() == 0.0 {
            // the conclusion is stated on [0, rho/3]; r = 0 is accepted as trivially valid
            report.verdict = Verdict::Holds;
            report.margin = margin_of(Verdict::Holds, &lhs, &rhs);
            report.equality = is_equality(Verdict::Holds, report.margin, self.tol);
        }
        Ok(report)
    }

    /// `M_r(psi h(phi)) <= M_r(h)` for `|psi| <= 1`.
    pub fn check_quasi_subordination(
        &self,
        h: &TruncatedSeries,
        psi: &TruncatedSeries,
        phi: &SchwarzFunction,
        r: Radius,
    ) -> Result<InequalityReport> {
        let inputs = CheckInputs { h: poly(h), psi: poly(psi), phi: poly(phi.series()), ..Default::default() };
        self.general_subordination(Theorem::QuasiSubordination, inputs, h, psi, phi, 1.0, 1.0, r)
    }

    /// `M_r(h(phi)) <= ||h||_inf`, with the sup norm bracketed on the unit circle.
    pub fn check_von_neumann_type(&self, h: &TruncatedSeries, phi: &SchwarzFunction, r: Radius) -> Result<InequalityReport> {
        let n = phi.series().degree();
        let f = TruncatedSeries::compose(h, phi.series(), n)?;
        let lhs = exact(finite_bohr_sum(&f, r.get()));
        let rhs = sup_on_unit_circle(h, self.samples)?;
        let inputs = CheckInputs { h: poly(h), phi: poly(phi.series()), ..Default::default() };
        let witness = self.witness(Theorem::VonNeumannType, inputs, r, n);
        Ok(InequalityReport::compare(witness, lhs, rhs, self.tol))
    }

    /// Sections of Schwarz powers: (A) `max_{|z|=r} |s_k(phi^j)| <= r^j`,
    /// (B) `M_r(s_k(phi^j)) <= r^j`. (A) always enters the verdict, (B) only
    /// for `r <= 1/3`; both are reported.
    pub fn check_section_powers(&self, phi: &SchwarzFunction, j: u32, k: usize, r: Radius) -> Result<InequalityReport> {
        if j == 0 {
            return Err(Error::ParameterOutOfRange("power j must be at least 1".into()));
        }
        let n = phi.series().degree();
        let p = phi.series().pow(j, n).section(k);
        let bound = exact(r.get().powi(j as i32));
        let sup = SubCheck::compare("(A) section sup", sup_on_circle(&p, r, self.samples)?, bound, self.tol, true);
        let maj = SubCheck::compare(
            "(B) section majorant",
            exact(finite_bohr_sum(&p, r.get())),
            bound,
            self.tol,
            r.get() <= 1.0 / 3.0,
        );
        let inputs = CheckInputs { phi: poly(phi.series()), j: Some(j), k: Some(k), ..Default::default() };
        let witness = self.witness(Theorem::SectionPowers, inputs, r, n);
        Ok(InequalityReport::aggregate(witness, vec![sup, maj]))
    }

    /// `max_{|z|=r} |s_k(h(phi))| <= M_r(s_k(h))`.
    pub fn check_section_sup(&self, h: &TruncatedSeries, phi: &SchwarzFunction, k: usize, r: Radius) -> Result<InequalityReport> {
        let n = phi.series().degree();
        let f = TruncatedSeries::compose(h, phi.series(), n)?;
        let lhs = sup_on_circle(&f.section(k), r, self.samples)?;
        let rhs = exact(finite_bohr_sum(&h.section(k), r.get()));
        let inputs = CheckInputs { h: poly(h), phi: poly(phi.series()), k: Some(k), ..Default::default() };
        let witness = self.witness(Theorem::SectionSup, inputs, r, n);
        Ok(InequalityReport::compare(witness, lhs, rhs, self.tol))
    }

    /// `M_r(s_k(h(phi))) <= M_r(s_k(h))`.
    pub fn check_section_majorant(&self, h: &TruncatedSeries, phi: &SchwarzFunction, k: usize, r: Radius) -> Result<InequalityReport> {
        let n = phi.series().degree();
        let f = TruncatedSeries::compose(h, phi.series(), n)?;
        let lhs = exact(finite_bohr_sum(&f.section(k), r.get()));
        let rhs = exact(finite_bohr_sum(&h.section(k), r.get()));
        let inputs = CheckInputs { h: poly(h), phi: poly(phi.series()), k: Some(k), ..Default::default() };
        let witness = self.witness(Theorem::SectionMajorant, inputs, r, n);
        Ok(InequalityReport::compare(witness, lhs, rhs, self.tol))
    }

    /// Section bound `|b_0| + k(k+1)/2 |b_1|` for a shipped univalent `h`.
    pub fn check_debranges_bound(
        &self,
        h: &TruncatedSeries,
        phi: &SchwarzFunction,
        k: usize,
        r: Radius,
        mode: SectionMode,
    ) -> Result<InequalityReport> {
        if !is_koebe_rotation(h) {
            return Err(Error::NotAUnivalentWitness);
        }
        let n = phi.series().degree();
        let s = TruncatedSeries::compose(h, phi.series(), n)?.section(k);
        let lhs = match mode {
            SectionMode::Sup => sup_on_circle(&s, r, self.samples)?,
            SectionMode::Majorant => exact(finite_bohr_sum(&s, r.get())),
        };
        let kk = k as f64;
        let rhs = exact(h.coeff(0).norm() + kk * (kk + 1.0) / 2.0 * h.coeff(1).norm());
        let inputs = CheckInputs { h: poly(h), phi: poly(phi.series()), k: Some(k), mode: Some(mode), ..Default::default() };
        let witness = self.witness(Theorem::DeBranges, inputs, r, n);
        Ok(InequalityReport::compare(witness, lhs, rhs, self.tol))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::koebe_series;
    use crate::schwarz::{blaschke_schwarz, moebius_series};

    const N: usize = 64;

    fn rad(r: f64) -> Radius {
        Radius::new(r).unwrap()
    }

    fn real(v: &[f64]) -> TruncatedSeries {
        TruncatedSeries::from_real(v).unwrap().with_degree(N.max(v.len() - 1))
    }

    fn identity() -> SchwarzFunction {
        Checker::default().schwarz(real(&[0.0, 1.0])).unwrap()
    }

    fn z_squared() -> SchwarzFunction {
        Checker::default().schwarz(real(&[0.0, 0.0, 1.0])).unwrap()
    }

    /// `z (a - z)/(1 - a z)`
    fn shifted_moebius(a: f64) -> SchwarzFunction {
        Checker::default().schwarz(blaschke_schwarz(&[Complex64::new(a, 0.0)], 0.0, N).unwrap()).unwrap()
    }

    fn moebius_bohr(a: f64, r: f64) -> f64 {
        a + (1.0 - a * a) * r / (1.0 - a * r)
    }

    #[test]
    fn verdict_classification() {
        let c = CertifiedValue::new;
        assert_eq!(Verdict::classify(&c(0.0, 1.0), &c(1.0, 1.0), 0.0), Verdict::Holds);
        assert_eq!(Verdict::classify(&c(1.2, 1.3), &c(1.0, 1.1), 0.0), Verdict::Fails);
        assert_eq!(Verdict::classify(&c(0.9, 1.05), &c(1.0, 1.0), 0.0), Verdict::Inconclusive);
        assert_eq!(Verdict::classify(&c(1.0, 1.0 + 1e-11), &c(1.0, 1.0), 1e-10), Verdict::Holds);
        assert_eq!(Verdict::classify(&CertifiedValue::unbounded(0.0), &c(1.0, 1.0), 1e-10), Verdict::Inconclusive);
    }

    #[test]
    fn bohr_examples() {
        let ck = Checker::default();
        let f = moebius_series(0.95, N).unwrap();
        let rep = ck.check_bohr(&f, 1.0, rad(0.35)).unwrap();
        assert_eq!(rep.verdict, Verdict::Fails);
        assert!((rep.lhs.lower - 1.00113).abs() < 1e-5);
        assert!((rep.lhs.lower - moebius_bohr(0.95, 0.35)).abs() < 1e-14);

        let zero = TruncatedSeries::zero(N);
        let rep = ck.check_bohr(&zero, 1.0, rad(0.2)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!((rep.margin.unwrap() - 1.0).abs() < 1e-40);

        let rep = ck.check_bohr(&moebius_series(0.5, N).unwrap(), 1.0, rad(1.0 / 3.0)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!((rep.margin.unwrap() - 0.2).abs() < 1e-12);
    }

    #[test]
    fn rogosinski_examples() {
        let ck = Checker::default();
        let f = moebius_series(0.9, N).unwrap();
        let rep = ck.check_rogosinski(&f, 1, rad(0.55)).unwrap();
        assert_eq!(rep.verdict, Verdict::Fails);
        assert!(rep.lhs.contains(0.9 + 0.19 * 0.55) || (rep.lhs.lower - 1.0045).abs() < 1e-12);
        let rep = ck.check_rogosinski(&f, 1, rad(0.5)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!((rep.lhs.lower - 0.995).abs() < 1e-12);

        let rep = ck.check_rogosinski(&real(&[0.0, 1.0]), 3, rad(0.5)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!((rep.lhs.lower - 0.5).abs() < 1e-15);
    }

    #[test]
    fn norm_axiom_examples() {
        let ck = Checker::default();
        let p = real(&[1.0, 1.0]).section(1);
        let rep = ck.check_norm_axioms(&p, &p, Complex64::new(0.0, 2.0), rad(0.5)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        let iv = &rep.subchecks[3];
        assert_eq!(iv.lhs.lower, 2.25);
        assert_eq!(iv.rhs.lower, 2.25);

        let zero = TruncatedSeries::zero(4);
        let rep = ck.check_norm_axioms(&zero, &p, Complex64::new(1.0, 0.0), rad(0.3)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert_eq!(rep.subchecks[0].rhs.lower, 0.0);
    }

    #[test]
    fn schwarz_majorant_examples() {
        let ck = Checker::default();
        let rep = ck.check_schwarz_majorant(&identity(), rad(1.0 / 3.0)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!(rep.margin.unwrap().abs() < 1e-15);

        let rep = ck.check_schwarz_majorant(&shifted_moebius(0.5), rad(1.0 / 3.0)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!((rep.lhs.lower - 0.8 / 3.0).abs() < 1e-15);

        let rep = ck.check_schwarz_majorant(&shifted_moebius(0.5), rad(0.4)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!((rep.lhs.lower - 0.35).abs() < 1e-14);

        let rep = ck.check_schwarz_majorant(&shifted_moebius(0.95), rad(0.4)).unwrap();
        assert_eq!(rep.verdict, Verdict::Fails);
        assert!((rep.lhs.lower - 0.4 * moebius_bohr(0.95, 0.4)).abs() < 1e-14);
        assert!((rep.lhs.lower - 0.40516).abs() < 1e-4);
    }

    #[test]
    fn subordination_examples() {
        let ck = Checker::default();
        let h = real(&[1.0, 1.0]);
        for r in [0.1, 0.5, 0.9] {
            let rep = ck.check_subordination(&h, &z_squared(), rad(r)).unwrap();
            assert_eq!(rep.verdict, Verdict::Holds);
            assert!((rep.lhs.lower - (1.0 + r * r)).abs() < 1e-15);
            assert!((rep.rhs.lower - (1.0 + r)).abs() < 1e-15);
        }
        let rep = ck.check_subordination(&real(&[0.3, -0.2, 0.5]), &identity(), rad(0.3)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert_eq!(rep.lhs, rep.rhs);

        let rep = ck.check_subordination(&real(&[0.0, 1.0]), &shifted_moebius(0.95), rad(0.35)).unwrap();
        assert_eq!(rep.verdict, Verdict::Fails);
        assert!((rep.lhs.lower - 0.35 * moebius_bohr(0.95, 0.35)).abs() < 1e-14);
    }

    #[test]
    fn general_subordination_examples() {
        let ck = Checker::default();
        let h = real(&[0.2, -0.7, 0.4]);
        let phi = shifted_moebius(0.6);
        let one = TruncatedSeries::one(N);
        for r in [0.1, 1.0 / 3.0, 0.45] {
            let a = ck.check_general_subordination(&h, &one, &phi, 1.0, 1.0, rad(r)).unwrap();
            let b = ck.check_subordination(&h, &phi, rad(r)).unwrap();
            assert_eq!(a.verdict, b.verdict);
            assert_eq!(a.lhs, b.lhs);
        }
        let g = TruncatedSeries::constant(Complex64::new(2.0, 0.0), N);
        let rep = ck.check_general_subordination(&h, &g, &phi, 2.0, 1.0, rad(1.0 / 3.0)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);

        assert!(ck.check_general_subordination(&h, &g, &phi, 2.0, 0.0, rad(0.1)).is_err());
        assert!(ck.check_general_subordination(&h, &g, &phi, 0.0, 1.0, rad(0.1)).is_err());
        let rep = ck.check_general_subordination(&h, &g, &phi, 0.5, 1.0, rad(0.0)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
    }

    #[test]
    fn quasi_subordination_examples() {
        let ck = Checker::default();
        let one = TruncatedSeries::one(N);
        let h = real(&[0.1, 0.9]);
        let rep = ck.check_quasi_subordination(&h, &one, &identity(), rad(0.3)).unwrap();
        assert_eq!(rep.lhs, rep.rhs);

        let psi = moebius_series(0.5, N).unwrap();
        let rep = ck.check_quasi_subordination(&real(&[1.0, 1.0]), &psi, &z_squared(), rad(1.0 / 3.0)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);

        let psi = moebius_series(0.95, N).unwrap();
        let rep = ck.check_quasi_subordination(&one, &psi, &identity(), rad(0.35)).unwrap();
        assert_eq!(rep.verdict, Verdict::Fails);
        assert!((rep.lhs.lower - 1.00113).abs() < 1e-5);
    }

    #[test]
    fn von_neumann_examples() {
        let ck = Checker::default();
        let rep = ck.check_von_neumann_type(&real(&[1.0, 1.0]), &identity(), rad(1.0 / 3.0)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!((rep.lhs.lower - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(rep.rhs.lower, 2.0);

        let c = TruncatedSeries::constant(Complex64::new(0.3, 0.4), N);
        let rep = ck.check_von_neumann_type(&c, &shifted_moebius(0.7), rad(1.0 / 3.0)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!((rep.lhs.lower - 0.5).abs() < 1e-15);
        assert!((rep.rhs.lower - 0.5).abs() < 1e-15);

        for d in 1..5 {
            let zd = TruncatedSeries::monomial(d, Complex64::new(1.0, 0.0), N);
            let rep = ck.check_von_neumann_type(&zd, &shifted_moebius(0.4), rad(1.0 / 3.0)).unwrap();
            assert_eq!(rep.verdict, Verdict::Holds);
            assert!(rep.lhs.lower <= (1.0f64 / 3.0).powi(d as i32) + 1e-15);
        }
    }

    #[test]
    fn section_powers_examples() {
        let ck = Checker::default();
        for j in 1..4u32 {
            let rep = ck.check_section_powers(&identity(), j, 5, rad(1.0 / 3.0)).unwrap();
            assert_eq!(rep.verdict, Verdict::Holds);
            let expected = (1.0f64 / 3.0).powi(j as i32);
            assert!((rep.subchecks[1].lhs.lower - expected).abs() < 1e-16);
        }
        let rep = ck.check_section_powers(&shifted_moebius(0.5), 2, 3, rad(1.0 / 3.0)).unwrap();
        assert_eq!(rep.subchecks[1].verdict, Verdict::Holds);
        assert_eq!(rep.verdict, Verdict::Holds);

        // s_1(z phi_{0.9}) = 0.9 z stays below r; the degree-2 section does not
        let rep = ck.check_section_powers(&shifted_moebius(0.9), 1, 1, rad(0.55)).unwrap();
        assert!((rep.subchecks[0].lhs.lower - 0.9 * 0.55).abs() < 1e-15);
        assert_eq!(rep.verdict, Verdict::Holds);
        let rep = ck.check_section_powers(&shifted_moebius(0.9), 1, 2, rad(0.55)).unwrap();
        // s_2 = 0.9 z - 0.19 z^2, sup on |z| = 0.55 is 0.55 (0.9 + 0.19 * 0.55)
        let expected = 0.55 * (0.9 + 0.19 * 0.55);
        assert!(rep.subchecks[0].lhs.contains(expected) || (rep.subchecks[0].lhs.lower - expected).abs() < 1e-12);
        assert_eq!(rep.subchecks[0].verdict, Verdict::Fails);
        assert!(!rep.subchecks[1].applicable);
        assert_eq!(rep.verdict, Verdict::Fails);

        assert!(ck.check_section_powers(&identity(), 0, 1, rad(0.2)).is_err());
    }

    #[test]
    fn section_sup_examples() {
        let ck = Checker::default();
        let h = real(&[0.0; 65].iter().enumerate().map(|(n, _)| if n == 0 { 0.0 } else { 1.0 }).collect::<Vec<_>>());
        let rep = ck.check_section_sup(&h, &z_squared(), 2, rad(0.5)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!((rep.lhs.lower - 0.25).abs() < 1e-15);
        assert_eq!(rep.rhs.lower, 0.75);

        let one = TruncatedSeries::one(N);
        let rep = ck.check_section_sup(&one, &shifted_moebius(0.3), 3, rad(0.5)).unwrap();
        assert_eq!((rep.lhs.lower, rep.lhs.upper(), rep.rhs.lower), (1.0, 1.0, 1.0));

        let h = real(&[0.3, -0.4, 0.2, 0.1]);
        let rep = ck.check_section_sup(&h, &identity(), 2, rad(0.5)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
    }

    #[test]
    fn section_majorant_examples() {
        let ck = Checker::default();
        let rep = ck.check_section_majorant(&real(&[1.0, 1.0]), &z_squared(), 1, rad(1.0 / 3.0)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert_eq!(rep.lhs.lower, 1.0);
        assert!((rep.rhs.lower - 4.0 / 3.0).abs() < 1e-15);

        let h = real(&[0.5, 0.25, -0.125]);
        let rep = ck.check_section_majorant(&h, &identity(), 2, rad(0.3)).unwrap();
        assert_eq!(rep.lhs, rep.rhs);

        let rep = ck.check_section_majorant(&real(&[0.0, 1.0]), &shifted_moebius(0.95), 64, rad(0.35)).unwrap();
        assert_eq!(rep.verdict, Verdict::Fails);
    }

    #[test]
    fn debranges_examples() {
        let ck = Checker::default();
        let koebe = koebe_series(0.0, N);
        let rep = ck.check_debranges_bound(&koebe, &z_squared(), 2, rad(1.0 / 3.0), SectionMode::Majorant).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!((rep.lhs.lower - 1.0 / 9.0).abs() < 1e-16);
        assert_eq!(rep.rhs.lower, 3.0);

        let rep = ck.check_debranges_bound(&koebe, &identity(), 1, rad(0.5), SectionMode::Sup).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!((rep.lhs.lower - 0.5).abs() < 1e-15);
        assert_eq!(rep.rhs.lower, 1.0);

        let rep = ck.check_debranges_bound(&koebe, &shifted_moebius(0.4), 0, rad(0.5), SectionMode::Sup).unwrap();
        assert_eq!(rep.lhs.lower, 0.0);
        assert_eq!(rep.rhs.lower, 0.0);
        assert_eq!(rep.verdict, Verdict::Holds);

        let bad = real(&[0.0, 1.0, 3.0]);
        assert_eq!(
            ck.check_debranges_bound(&bad, &identity(), 2, rad(0.3), SectionMode::Sup).unwrap_err(),
            Error::NotAUnivalentWitness
        );
    }

    #[test]
    fn theorem_names_roundtrip() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
            assert_eq!(serde_json::to_string(&t).unwrap(), format!("\"{}\"", t.name()));
        }
        assert_eq!("von_neumann".parse::<Theorem>().unwrap(), Theorem::VonNeumannType);
        assert!("fermat".parse::<Theorem>().is_err());
    }
}
