//! Generators of Schwarz functions and unit-bounded analytic functions.
//!
//! Three families are supported: the Möbius maps `(a - z)/(1 - a z)`, finite
//! Blaschke products (with or without a leading factor `z`), and functions
//! built from a finite list of Schur parameters by the backward Schur
//! recursion. Each family can be sampled deterministically from a seed.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::bohr::{sup_on_circle, Radius, DEFAULT_SAMPLES};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Blaschke zeros must stay at least this far inside the unit circle.
pub const ZERO_MARGIN: f64 = 1e-9;
/// Radius of the disk random Blaschke zeros are drawn from.
pub const SAMPLE_ZERO_RADIUS: f64 = 0.95;
/// Radius of the disk random Schur parameters are drawn from.
pub const SAMPLE_SCHUR_RADIUS: f64 = 0.99;
/// Circles on which [`validate_schwarz`] bounds `|phi|`.
pub const VALIDATION_RADII: [f64; 3] = [0.5, 0.9, 0.99];

/// `(a - z)/(1 - a z)` truncated at `degree`: `c_0 = a`, `c_n = -(1 - a^2) a^{n-1}`.
pub fn moebius_series(a: f64, degree: usize) -> Result<TruncatedSeries> {
    if !(0.0..1.0).contains(&a) {
        return Err(Error::ParameterOutOfRange(format!("moebius parameter {a} not in [0, 1)")));
    }
    Ok(blaschke_factor(Complex64::new(a, 0.0), degree))
}

/// `(w - z)/(1 - conj(w) z)` truncated at `degree`.
fn blaschke_factor(w: Complex64, degree: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(degree + 1);
    coeffs.push(w);
    if degree >= 1 {
        let mut c = Complex64::new(-(1.0 - w.norm_sqr()), 0.0);
        let wc = w.conj();
        coeffs.push(c);
        for _ in 2..=degree {
            c *= wc;
            coeffs.push(c);
        }
    }
    TruncatedSeries::from_vec_unchecked(coeffs)
}

fn check_zeros(zeros: &[Complex64]) -> Result<()> {
    for w in zeros {
        if w.norm().is_nan() || w.norm() > 1.0 - ZERO_MARGIN {
            return Err(Error::ParameterOutOfRange(format!(
                "Blaschke zero {w} has modulus {} >= 1 - {ZERO_MARGIN}",
                w.norm()
            )));
        }
    }
    Ok(())
}

fn blaschke_product(zeros: &[Complex64], rotation: f64, degree: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::constant(Complex64::from_polar(1.0, rotation), degree);
    for &w in zeros {
        acc = acc.mul(&blaschke_factor(w, degree), degree);
    }
    acc
}

/// `e^{i theta} z prod (w_i - z)/(1 - conj(w_i) z)` truncated at `degree`.
pub fn blaschke_schwarz(zeros: &[Complex64], rotation: f64, degree: usize) -> Result<TruncatedSeries> {
    check_zeros(zeros)?;
    let z = TruncatedSeries::monomial(1, Complex64::new(1.0, 0.0), degree);
    Ok(blaschke_product(zeros, rotation, degree).mul(&z, degree))
}

/// Unit-bounded function with the given Schur parameters, built backwards:
/// `f_m = gamma_m`, `f_k = (gamma_k + z f_{k+1}) / (1 + conj(gamma_k) z f_{k+1})`.
pub fn schur_series(gammas: &[Complex64], degree: usize) -> Result<TruncatedSeries> {
    let (last, rest) = gammas
        .split_last()
        .ok_or_else(|| Error::ParameterOutOfRange("empty Schur parameter list".into()))?;
    if let Some(g) = gammas.iter().find(|g| g.norm() > 1.0) {
        return Err(Error::ParameterOutOfRange(format!(
            "Schur parameter {g} has modulus {} > 1",
            g.norm()
        )));
    }
    let z = TruncatedSeries::monomial(1, Complex64::new(1.0, 0.0), degree);
    let mut f = TruncatedSeries::constant(*last, degree);
    for &g in rest.iter().rev() {
        let zf = z.mul(&f, degree);
        let num = zf.add(&TruncatedSeries::constant(g, degree));
        let den = zf.scale(g.conj()).add(&TruncatedSeries::one(degree));
        f = num.mul(&den.reciprocal()?, degree);
    }
    Ok(f)
}

/// Constructive description of a unit-bounded function.
#[derive(Debug, Clone, PartialEq)]
pub enum SchwarzVariant {
    /// `(a - z)/(1 - a z)`, bounded but not Schwarz for `a > 0`.
    Moebius { a: f64 },
    /// `e^{i theta} z prod (w - z)/(1 - conj(w) z)`, a Schwarz function.
    Blaschke { zeros: Vec<Complex64>, rotation: f64 },
    /// `e^{i theta} prod (w - z)/(1 - conj(w) z)` without the leading `z`.
    BlaschkeProduct { zeros: Vec<Complex64>, rotation: f64 },
    Schur { gammas: Vec<Complex64> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzSpec {
    pub variant: SchwarzVariant,
    pub degree: usize,
}

impl SchwarzSpec {
    pub fn validate(&self) -> Result<()> {
        match &self.variant {
            SchwarzVariant::Moebius { a } => {
                if !(0.0..1.0).contains(a) {
                    return Err(Error::ParameterOutOfRange(format!("moebius parameter {a} not in [0, 1)")));
                }
            }
            SchwarzVariant::Blaschke { zeros, .. } | SchwarzVariant::BlaschkeProduct { zeros, .. } => {
                check_zeros(zeros)?
            }
            SchwarzVariant::Schur { gammas } => {
                if gammas.is_empty() || gammas.iter().any(|g| g.norm() > 1.0) {
                    return Err(Error::ParameterOutOfRange("Schur parameters must be nonempty with |gamma| <= 1".into()));
                }
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<TruncatedSeries> {
        self.build_at(self.degree)
    }

    /// Builds the series at a different truncation degree.
    pub fn build_at(&self, degree: usize) -> Result<TruncatedSeries> {
        match &self.variant {
            SchwarzVariant::Moebius { a } => moebius_series(*a, degree),
            SchwarzVariant::Blaschke { zeros, rotation } => blaschke_schwarz(zeros, *rotation, degree),
            SchwarzVariant::BlaschkeProduct { zeros, rotation } => {
                check_zeros(zeros)?;
                Ok(blaschke_product(zeros, *rotation, degree))
            }
            SchwarzVariant::Schur { gammas } => schur_series(gammas, degree),
        }
    }

    /// Whether the described function vanishes at the origin by construction.
    pub fn is_schwarz(&self) -> bool {
        match &self.variant {
            SchwarzVariant::Moebius { a } => *a == 0.0,
            SchwarzVariant::Blaschke { .. } => true,
            SchwarzVariant::BlaschkeProduct { zeros, .. } => zeros.iter().any(|w| *w == Complex64::new(0.0, 0.0)),
            SchwarzVariant::Schur { gammas } => gammas[0] == Complex64::new(0.0, 0.0),
        }
    }
}

fn complex_to_json(c: &Complex64) -> Value {
    serde_json::json!([c.re, c.im])
}

fn complex_from_json(v: &Value) -> std::result::Result<Complex64, String> {
    match v {
        Value::Number(n) => n.as_f64().map(|re| Complex64::new(re, 0.0)).ok_or_else(|| "bad number".to_string()),
        Value::Array(a) if a.len() == 2 => match (a[0].as_f64(), a[1].as_f64()) {
            (Some(re), Some(im)) => Ok(Complex64::new(re, im)),
            _ => Err("complex entries must be [re, im] numbers".into()),
        },
        _ => Err(format!("expected a number or [re, im], found {v}")),
    }
}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    variant: String,
    params: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotation: Option<f64>,
    degree: usize,
}

impl Serialize for SchwarzSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (variant, params, rotation) = match &self.variant {
            SchwarzVariant::Moebius { a } => ("moebius", vec![serde_json::json!(a)], None),
            SchwarzVariant::Blaschke { zeros, rotation } => {
                ("blaschke", zeros.iter().map(complex_to_json).collect(), Some(*rotation))
            }
            SchwarzVariant::BlaschkeProduct { zeros, rotation } => {
                ("blaschke-product", zeros.iter().map(complex_to_json).collect(), Some(*rotation))
            }
            SchwarzVariant::Schur { gammas } => ("schur", gammas.iter().map(complex_to_json).collect(), None),
        };
        SpecRepr {
            variant: variant.to_string(),
            params,
            rotation,
            degree: self.degree,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SchwarzSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SpecRepr::deserialize(deserializer)?;
        let params = repr
            .params
            .iter()
            .map(complex_from_json)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        let rotation = repr.rotation.unwrap_or(0.0);
        let variant = match repr.variant.as_str() {
            "moebius" => match params.as_slice() {
                [a] if a.im == 0.0 => SchwarzVariant::Moebius { a: a.re },
                _ => return Err(D::Error::custom("moebius takes exactly one real parameter")),
            },
            "blaschke" => SchwarzVariant::Blaschke { zeros: params, rotation },
            "blaschke-product" => SchwarzVariant::BlaschkeProduct { zeros: params, rotation },
            "schur" => SchwarzVariant::Schur { gammas: params },
            other => return Err(D::Error::custom(format!("unknown variant `{other}`"))),
        };
        let spec = SchwarzSpec { variant, degree: repr.degree };
        spec.validate().map_err(D::Error::custom)?;
        Ok(spec)
    }
}

/// Sampling family for [`random_schwarz`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleFamily {
    /// Blaschke-Schwarz function with this many zeros (at most 8).
    Blaschke(usize),
    /// Schur function with this many parameters (at most 16), `gamma_0 = 0`.
    Schur(usize),
}

fn uniform_in_disk<R: Rng>(rng: &mut R, radius: f64) -> Complex64 {
    let rho = radius * rng.gen::<f64>().sqrt();
    Complex64::from_polar(rho, rng.gen_range(0.0..2.0 * PI))
}

fn sample_zeros<R: Rng>(rng: &mut R, count: usize) -> Vec<Complex64> {
    (0..count).map(|_| uniform_in_disk(rng, SAMPLE_ZERO_RADIUS)).collect()
}

fn sample_gammas<R: Rng>(rng: &mut R, count: usize) -> Vec<Complex64> {
    (0..count).map(|_| uniform_in_disk(rng, SAMPLE_SCHUR_RADIUS)).collect()
}

/// Seeded Schwarz function spec from the given family.
pub fn random_schwarz_spec(seed: u64, family: SampleFamily, degree: usize) -> Result<SchwarzSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let variant = match family {
        SampleFamily::Blaschke(j) => {
            if j > 8 {
                return Err(Error::ParameterOutOfRange(format!("at most 8 Blaschke zeros, got {j}")));
            }
            let rotation = rng.gen_range(0.0..2.0 * PI);
            SchwarzVariant::Blaschke { zeros: sample_zeros(&mut rng, j), rotation }
        }
        SampleFamily::Schur(m) => {
            if !(1..=16).contains(&m) {
                return Err(Error::ParameterOutOfRange(format!("Schur family needs 1..=16 parameters, got {m}")));
            }
            let mut gammas = sample_gammas(&mut rng, m);
            gammas[0] = Complex64::new(0.0, 0.0);
            SchwarzVariant::Schur { gammas }
        }
    };
    Ok(SchwarzSpec { variant, degree })
}

pub fn random_schwarz(seed: u64, family: SampleFamily, degree: usize) -> Result<TruncatedSeries> {
    random_schwarz_spec(seed, family, degree)?.build()
}

/// Seeded Schwarz function with family and size also drawn from the seed.
pub fn sample_schwarz_spec(seed: u64, degree: usize) -> SchwarzSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5c4a_12f0_9b3e_7d61);
    let family = if rng.gen_bool(0.5) {
        SampleFamily::Blaschke(rng.gen_range(0..=8))
    } else {
        SampleFamily::Schur(rng.gen_range(2..=16))
    };
    random_schwarz_spec(rng.gen(), family, degree).expect("family sizes are in range")
}

/// Seeded unit-bounded (not necessarily Schwarz) function: either a Blaschke
/// product without the leading `z` or a Schur function with free `gamma_0`.
pub fn sample_bounded_spec(seed: u64, degree: usize) -> SchwarzSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x2d91_e0b7_44c3_a85f);
    let variant = if rng.gen_bool(0.5) {
        let count = rng.gen_range(1..=8);
        let rotation = rng.gen_range(0.0..2.0 * PI);
        SchwarzVariant::BlaschkeProduct { zeros: sample_zeros(&mut rng, count), rotation }
    } else {
        let count = rng.gen_range(1..=16);
        SchwarzVariant::Schur { gammas: sample_gammas(&mut rng, count) }
    };
    SchwarzSpec { variant, degree }
}

/// Checks `phi(0) = 0`, `|phi'(0)| <= 1 + tol`, and a certified bound
/// `max |phi| <= 1 + tol` on the circles of [`VALIDATION_RADII`].
///
/// The bound covers the untruncated function: sampled sup of the truncation
/// plus the tail allowance `r^{N+1} / (1 - r)` (coefficients of a Schwarz
/// function are at most 1). A circle whose allowance exceeds `(1 - r) / 2`
/// cannot separate Schwarz functions from anything else and is skipped.
pub fn validate_schwarz(phi: &TruncatedSeries, tol: f64) -> bool {
    schwarz_violation(phi, tol, DEFAULT_SAMPLES).is_none()
}

fn schwarz_violation(phi: &TruncatedSeries, tol: f64, samples: usize) -> Option<String> {
    if phi.coeff(0) != Complex64::new(0.0, 0.0) {
        return Some(format!("phi(0) = {} is not zero", phi.coeff(0)));
    }
    let c1 = phi.coeff(1).norm();
    if c1 > 1.0 + tol {
        return Some(format!("|phi'(0)| = {c1} exceeds 1"));
    }
    for r in VALIDATION_RADII {
        let tail = r.powi(phi.degree() as i32 + 1) / (1.0 - r);
        if tail > (1.0 - r) / 2.0 {
            continue;
        }
        let sup = sup_on_circle(phi, Radius::new(r).expect("validation radii are < 1"), samples)
            .expect("sample count is at least the minimum");
        if sup.upper() + tail > 1.0 + tol {
            return Some(format!("max |phi| on |z| = {r} may reach {}", sup.upper() + tail));
        }
    }
    None
}

/// A series that passed [`validate_schwarz`].
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzFunction(TruncatedSeries);

impl SchwarzFunction {
    pub fn new(phi: TruncatedSeries, tol: f64) -> Result<Self> {
        match schwarz_violation(&phi, tol, DEFAULT_SAMPLES) {
            None => Ok(Self(phi)),
            Some(reason) => Err(Error::InvalidSchwarz(reason)),
        }
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.0
    }

    pub fn into_series(self) -> TruncatedSeries {
        self.0
    }
}

impl AsRef<TruncatedSeries> for SchwarzFunction {
    fn as_ref(&self) -> &TruncatedSeries {
        &self.0
    }
}
