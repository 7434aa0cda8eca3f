//! The Bohr operator `M_r(f) = sum |a_n| r^n` and certified sup norms on circles.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Default number of equispaced samples for [`sup_on_circle`].
pub const DEFAULT_SAMPLES: usize = 4096;
pub const MIN_SAMPLES: usize = 64;

/// A closed interval bracketing a non-negative real quantity. An unset upper
/// end means no finite upper bound is known.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifiedValue {
    pub lower: f64,
    upper: Option<f64>,
}

impl CertifiedValue {
    pub fn new(lower: f64, upper: f64) -> Self {
        debug_assert!(lower <= upper, "bracket [{lower}, {upper}] is inverted");
        Self { lower, upper: Some(upper) }
    }

    pub fn exact(value: f64) -> Self {
        Self::new(value, value)
    }

    pub fn unbounded(lower: f64) -> Self {
        Self { lower, upper: None }
    }

    /// Upper end, `+inf` when unbounded.
    pub fn upper(&self) -> f64 {
        self.upper.unwrap_or(f64::INFINITY)
    }

    pub fn is_bounded(&self) -> bool {
        self.upper.is_some()
    }

    pub fn width(&self) -> f64 {
        self.upper() - self.lower
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper()
    }

    pub fn scale(&self, factor: f64) -> Self {
        debug_assert!(factor >= 0.0);
        Self {
            lower: self.lower * factor,
            upper: self.upper.map(|u| u * factor),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CertifiedRepr {
    lower: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    upper: Option<f64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    unbounded: bool,
}

impl Serialize for CertifiedValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CertifiedRepr {
            lower: self.lower,
            upper: self.upper,
            unbounded: self.upper.is_none(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CertifiedValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CertifiedRepr::deserialize(deserializer)?;
        match (repr.upper, repr.unbounded) {
            (Some(u), false) => Ok(CertifiedValue::new(repr.lower, u)),
            (None, true) => Ok(CertifiedValue::unbounded(repr.lower)),
            _ => Err(D::Error::custom("expected exactly one of `upper` or `unbounded: true`")),
        }
    }
}

/// A radius `r` in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Radius(f64);

impl Radius {
    pub fn new(r: f64) -> Result<Self> {
        if (0.0..1.0).contains(&r) {
            Ok(Self(r))
        } else {
            Err(Error::RadiusOutOfRange(r))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Radius {
    type Error = Error;

    fn try_from(r: f64) -> Result<Self> {
        Self::new(r)
    }
}

impl From<Radius> for f64 {
    fn from(r: Radius) -> f64 {
        r.0
    }
}

/// Exact finite sum `sum_{n<=N} |a_n| r^n`.
pub fn finite_bohr_sum(f: &TruncatedSeries, r: f64) -> f64 {
    let mut rn = 1.0;
    let mut sum = 0.0;
    for c in f.coeffs() {
        sum += c.norm() * rn;
        rn *= r;
    }
    sum
}

/// `M_r(f)` bracketed against the truncation tail.
///
/// With `sup_bound = Some(M)` the caller asserts `|f| <= M` on the disk, so
/// every dropped coefficient obeys `|a_n| <= M` and the tail is at most
/// `M r^{N+1} / (1 - r)`. Without it no upper bound is reported.
pub fn bohr_value(f: &TruncatedSeries, r: Radius, sup_bound: Option<f64>) -> CertifiedValue {
    let r = r.get();
    let lower = finite_bohr_sum(f, r);
    match sup_bound {
        Some(m) => {
            let tail = m * r.powi(f.degree() as i32 + 1) / (1.0 - r);
            CertifiedValue::new(lower, lower + tail)
        }
        None => CertifiedValue::unbounded(lower),
    }
}

/// The majorant series with coefficients `|a_n|`.
pub fn majorant(f: &TruncatedSeries) -> TruncatedSeries {
    TruncatedSeries::from_vec_unchecked(
        f.coeffs()
            .iter()
            .map(|c| Complex64::new(c.norm(), 0.0))
            .collect(),
    )
}

/// Certified bracket for `max_{|z|=r} |p(z)|`, treating `p` as an exact polynomial.
pub fn sup_on_circle(p: &TruncatedSeries, r: Radius, samples: usize) -> Result<CertifiedValue> {
    sup_on_circle_raw(p, r.get(), samples)
}

/// As [`sup_on_circle`] but on the unit circle, where a polynomial is still
/// continuous and `max |p|` is its sup norm on the closed disk.
pub fn sup_on_unit_circle(p: &TruncatedSeries, samples: usize) -> Result<CertifiedValue> {
    sup_on_circle_raw(p, 1.0, samples)
}

fn sup_on_circle_raw(p: &TruncatedSeries, r: f64, samples: usize) -> Result<CertifiedValue> {
    if samples < MIN_SAMPLES {
        return Err(Error::ParameterOutOfRange(format!(
            "need at least {MIN_SAMPLES} samples, got {samples}"
        )));
    }
    let p = p.section(p.effective_degree());
    let step = 2.0 * PI / samples as f64;
    let mut best_sq = 0.0f64;
    for j in 0..samples {
        let z = Complex64::from_polar(r, step * j as f64);
        best_sq = best_sq.max(p.eval(z).norm_sqr());
    }
    let lower = best_sq.sqrt();

    // Weighted moment sums s_k = sum n^k |a_n| r^n bound the angular
    // derivatives of p(r e^{i theta}): |d^k p / d theta^k| <= s_k.
    let mut s = [0.0f64; 3];
    let mut rn = 1.0;
    for (n, c) in p.coeffs().iter().enumerate() {
        let w = c.norm() * rn;
        let n = n as f64;
        s[0] += w;
        s[1] += n * w;
        s[2] += n * n * w;
        rn *= r;
    }
    // First order: every point of the circle is within pi/m in angle of a sample.
    let linear = lower + s[1] * PI / samples as f64;
    // Second order: |p|^2 has |d^2/d theta^2| <= 2 (s_2 s_0 + s_1^2), and a
    // function with curvature bound K exceeds its sample max by at most K h^2 / 8.
    let curvature = 2.0 * (s[2] * s[0] + s[1] * s[1]);
    let quadratic = (best_sq + curvature * step * step / 8.0).sqrt();
    // Trivially max |p| <= s_0, exact for monomials.
    let upper = linear.min(quadratic).min(s[0]).max(lower);
    Ok(CertifiedValue::new(lower, upper))
}
