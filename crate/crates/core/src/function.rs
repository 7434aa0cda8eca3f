//! Flag-friendly function specs.
//!
//! Grammar (complex entries are written `re`, `re+imi`, `re-imi` or `imi`):
//!
//! ```text
//! moebius:a
//! blaschke:[z1,z2,...]@theta      (@theta optional)
//! bproduct:[z1,z2,...]@theta      Blaschke product without the leading z
//! schur:[g0,g1,...]
//! poly:c0,c1,...
//! koebe  |  koebe@theta
//! const:c
//! ```
//!
//! `Display` writes the same grammar with shortest round-trip floats, so a
//! spec printed into a witness file rebuilds the identical series.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::schwarz::{SchwarzSpec, SchwarzVariant};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSpec {
    Bounded(SchwarzVariant),
    Poly(Vec<Complex64>),
    /// `e^{-i theta} k(e^{i theta} z)` with `k(z) = z/(1 - z)^2`.
    Koebe { rotation: f64 },
    Const(Complex64),
}

impl FunctionSpec {
    pub fn moebius(a: f64) -> Self {
        Self::Bounded(SchwarzVariant::Moebius { a })
    }

    pub fn blaschke(zeros: Vec<Complex64>, rotation: f64) -> Self {
        Self::Bounded(SchwarzVariant::Blaschke { zeros, rotation })
    }

    pub fn poly_of(series: &TruncatedSeries) -> Self {
        Self::Poly(series.coeffs().to_vec())
    }

    /// Builds the series truncated at `degree`. Polynomials longer than
    /// `degree + 1` keep all their coefficients.
    pub fn build(&self, degree: usize) -> Result<TruncatedSeries> {
        match self {
            Self::Bounded(variant) => SchwarzSpec { variant: variant.clone(), degree }.build(),
            Self::Poly(coeffs) => TruncatedSeries::new(coeffs.clone()).map(|p| p.with_degree(degree.max(coeffs.len() - 1))),
            Self::Koebe { rotation } => Ok(koebe_series(*rotation, degree)),
            Self::Const(c) => Ok(TruncatedSeries::constant(*c, degree)),
        }
    }

    /// Univalent functions shipped as coefficient-bound witnesses.
    pub fn is_univalent_witness(&self) -> bool {
        matches!(self, Self::Koebe { .. })
    }
}

/// Koebe rotation `sum n e^{i (n-1) theta} z^n` truncated at `degree`.
pub fn koebe_series(rotation: f64, degree: usize) -> TruncatedSeries {
    let w = Complex64::from_polar(1.0, rotation);
    let mut coeffs = vec![Complex64::new(0.0, 0.0); degree + 1];
    let mut wp = Complex64::new(1.0, 0.0);
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = wp * n as f64;
        wp *= w;
    }
    TruncatedSeries::from_vec_unchecked(coeffs)
}

/// Whether `h` is a truncated Koebe rotation `b_n = n w^{n-1}`, `|w| = 1`.
pub fn is_koebe_rotation(h: &TruncatedSeries) -> bool {
    const TOL: f64 = 1e-12;
    let c = h.coeffs();
    if c[0].norm() > TOL || h.degree() < 1 || (c[1] - 1.0).norm() > TOL {
        return false;
    }
    if h.degree() < 2 {
        return true;
    }
    let w = c[2] / 2.0;
    if (w.norm() - 1.0).abs() > TOL {
        return false;
    }
    let mut wp = Complex64::new(1.0, 0.0);
    c.iter().enumerate().skip(1).all(|(n, b)| {
        let expected = wp * n as f64;
        wp *= w;
        (b - expected).norm() <= TOL * n as f64 * n as f64
    })
}

pub fn format_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.im.is_sign_negative() {
        format!("{}-{}i", c.re, -c.im)
    } else {
        format!("{}+{}i", c.re, c.im)
    }
}

pub fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let s = s.trim();
    let num = |t: &str| -> std::result::Result<f64, String> {
        let v: f64 = match t {
            "" | "+" => 1.0,
            "-" => -1.0,
            _ => t.parse().map_err(|_| format!("`{t}` is not a number"))?,
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("`{t}` is not finite"))
        }
    };
    let Some(body) = s.strip_suffix('i') else {
        if s.is_empty() {
            return Err("empty number".into());
        }
        return num(s).map(|re| Complex64::new(re, 0.0));
    };
    // split at the last sign that does not belong to an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    match split {
        Some(i) => Ok(Complex64::new(num(&body[..i])?, num(&body[i..])?)),
        None => Ok(Complex64::new(0.0, num(body)?)),
    }
}

fn parse_list(s: &str) -> std::result::Result<Vec<Complex64>, String> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| format!("expected a bracketed list, found `{s}`"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(parse_complex).collect()
}

fn format_list(v: &[Complex64]) -> String {
    let items: Vec<String> = v.iter().map(|c| format_complex(*c)).collect();
    format!("[{}]", items.join(","))
}

fn parse_angle(s: Option<&str>) -> std::result::Result<f64, String> {
    match s {
        None => Ok(0.0),
        Some(t) => {
            let v: f64 = t.trim().parse().map_err(|_| format!("`{t}` is not an angle"))?;
            if v.is_finite() { Ok(v) } else { Err(format!("`{t}` is not finite")) }
        }
    }
}

impl FromStr for FunctionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse { spec: s.to_string(), reason };
        let s = s.trim();
        let (head, body) = s.split_once(':').unwrap_or((s, ""));
        let spec = match head {
            "moebius" => FunctionSpec::moebius(parse_complex(body).and_then(|c| {
                if c.im == 0.0 { Ok(c.re) } else { Err("moebius parameter must be real".into()) }
            }).map_err(err)?),
            "blaschke" | "bproduct" => {
                let (list, angle) = match body.rsplit_once('@') {
                    Some((l, a)) => (l, Some(a)),
                    None => (body, None),
                };
                let zeros = parse_list(list).map_err(err)?;
                let rotation = parse_angle(angle).map_err(err)?;
                if head == "blaschke" {
                    FunctionSpec::Bounded(SchwarzVariant::Blaschke { zeros, rotation })
                } else {
                    FunctionSpec::Bounded(SchwarzVariant::BlaschkeProduct { zeros, rotation })
                }
            }
            "schur" => FunctionSpec::Bounded(SchwarzVariant::Schur { gammas: parse_list(body).map_err(err)? }),
            "poly" => {
                let coeffs = body.split(',').map(parse_complex).collect::<std::result::Result<Vec<_>, _>>().map_err(err)?;
                FunctionSpec::Poly(coeffs)
            }
            "const" => FunctionSpec::Const(parse_complex(body).map_err(err)?),
            _ if head == "koebe" || head.starts_with("koebe@") => {
                if !body.is_empty() {
                    return Err(err("koebe takes no parameters".into()));
                }
                FunctionSpec::Koebe { rotation: parse_angle(head.strip_prefix("koebe@")).map_err(err)? }
            }
            _ => return Err(err(format!("unknown function kind `{head}`"))),
        };
        if let FunctionSpec::Bounded(variant) = &spec {
            SchwarzSpec { variant: variant.clone(), degree: 0 }.validate()?;
        }
        Ok(spec)
    }
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionSpec::Bounded(SchwarzVariant::Moebius { a }) => write!(f, "moebius:{a}"),
            FunctionSpec::Bounded(SchwarzVariant::Blaschke { zeros, rotation }) => {
                write!(f, "blaschke:{}@{rotation}", format_list(zeros))
            }
            FunctionSpec::Bounded(SchwarzVariant::BlaschkeProduct { zeros, rotation }) => {
                write!(f, "bproduct:{}@{rotation}", format_list(zeros))
            }
            FunctionSpec::Bounded(SchwarzVariant::Schur { gammas }) => write!(f, "schur:{}", format_list(gammas)),
            FunctionSpec::Poly(coeffs) => {
                let items: Vec<String> = coeffs.iter().map(|c| format_complex(*c)).collect();
                write!(f, "poly:{}", items.join(","))
            }
            FunctionSpec::Koebe { rotation } if *rotation == 0.0 => write!(f, "koebe"),
            FunctionSpec::Koebe { rotation } => write!(f, "koebe@{rotation}"),
            FunctionSpec::Const(c) => write!(f, "const:{}", format_complex(*c)),
        }
    }
}

impl From<SchwarzSpec> for FunctionSpec {
    fn from(spec: SchwarzSpec) -> Self {
        FunctionSpec::Bounded(spec.variant)
    }
}

impl Serialize for FunctionSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FunctionSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
