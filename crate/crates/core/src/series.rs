//! Truncated power series with complex double-precision coefficients.
//!
//! A [`TruncatedSeries`] of degree `N` stores `a_0, ..., a_N`. All operations
//! are pure and return new values. Products and compositions take an explicit
//! output degree; coefficients up to that degree are exact at the level of the
//! coefficient recurrence (the same floating-point operations a naive
//! convolution would perform, in the same order).

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Truncation degree used when none is given.
pub const DEFAULT_DEGREE: usize = 64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Builds a series from `a_0..=a_N`. Rejects empty input and non-finite entries.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        if let Some(i) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub(crate) fn from_vec_unchecked(coeffs: Vec<Complex64>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        Self { coeffs: vec![ZERO; degree + 1] }
    }

    pub fn one(degree: usize) -> Self {
        Self::constant(ONE, degree)
    }

    pub fn constant(c: Complex64, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = c;
        s
    }

    /// `c z^n` as a series of degree `max(n, degree)`.
    pub fn monomial(n: usize, c: Complex64, degree: usize) -> Self {
        let mut s = Self::zero(degree.max(n));
        s.coeffs[n] = c;
        s
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^n`, zero past the truncation.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or(ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == ZERO)
    }

    /// Pads with zeros or truncates to exactly `degree`.
    pub fn with_degree(&self, degree: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(degree + 1, ZERO);
        Self { coeffs }
    }

    /// Index of the last nonzero coefficient (0 for the zero series).
    pub fn effective_degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| *c != ZERO).unwrap_or(0)
    }

    /// Coefficientwise sum, zero-padding the shorter operand.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.degree().max(other.degree());
        let coeffs = (0..=n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self { coeffs }
    }

    pub fn scale(&self, alpha: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| alpha * c).collect(),
        }
    }

    /// Truncated Cauchy product `c_n = sum_{j=0}^{n} a_j b_{n-j}` for `n <= out_degree`.
    pub fn mul(&self, other: &Self, out_degree: usize) -> Self {
        let (a, b) = (&self.coeffs, &other.coeffs);
        let mut coeffs = vec![ZERO; out_degree + 1];
        for (n, c) in coeffs.iter_mut().enumerate() {
            let lo = n.saturating_sub(b.len() - 1);
            let hi = n.min(a.len() - 1);
            let mut acc = ZERO;
            for j in lo..=hi {
                acc += a[j] * b[n - j];
            }
            *c = acc;
        }
        Self { coeffs }
    }

    /// Full product, degree `deg f + deg g`.
    pub fn mul_full(&self, other: &Self) -> Self {
        self.mul(other, self.degree() + other.degree())
    }

    /// `self^j` truncated at `out_degree`, by repeated multiplication.
    pub fn pow(&self, j: u32, out_degree: usize) -> Self {
        let mut acc = Self::one(out_degree);
        for _ in 0..j {
            acc = acc.mul(self, out_degree);
        }
        acc
    }

    /// Composition `h(phi(z))` truncated at `out_degree`.
    ///
    /// `phi` must vanish at the origin, so coefficient `n` of the result only
    /// involves `b_0..b_n` and `phi` up to degree `n`. `h` is read as a
    /// polynomial (terms past `out_degree` cannot contribute). `phi` is never
    /// extrapolated: `out_degree` may not exceed its degree.
    pub fn compose(h: &Self, phi: &Self, out_degree: usize) -> Result<Self> {
        let c0 = phi.coeffs[0];
        if c0 != ZERO {
            return Err(Error::NonzeroInnerConstantTerm(c0.norm()));
        }
        if out_degree > phi.degree() {
            return Err(Error::DegreeMismatch {
                requested: out_degree,
                available: phi.degree(),
            });
        }
        let top = h.effective_degree().min(out_degree);
        let mut acc = vec![ZERO; out_degree + 1];
        let mut power = Self::one(out_degree);
        for n in 0..=top {
            let b = h.coeffs[n];
            for (slot, p) in acc.iter_mut().zip(&power.coeffs) {
                *slot += b * p;
            }
            if n < top {
                power = power.mul(phi, out_degree);
            }
        }
        Ok(Self { coeffs: acc })
    }

    /// Multiplicative inverse modulo `z^{N+1}`.
    pub fn reciprocal(&self) -> Result<Self> {
        let a = &self.coeffs;
        if a[0] == ZERO {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = a[0].inv();
        let mut g = vec![ZERO; a.len()];
        g[0] = inv0;
        for n in 1..a.len() {
            let mut acc = ZERO;
            for j in 1..=n {
                acc += a[j] * g[n - j];
            }
            g[n] = -acc * inv0;
        }
        Ok(Self { coeffs: g })
    }

    /// The k-th section `a_0 + ... + a_k z^k`; unchanged if `k >= deg`.
    pub fn section(&self, k: usize) -> Self {
        if k >= self.degree() {
            return self.clone();
        }
        Self {
            coeffs: self.coeffs[..=k].to_vec(),
        }
    }

    /// Horner evaluation of the truncation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, c| acc * z + c)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    degree: usize,
    coeffs: Vec<[f64; 2]>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            degree: self.degree(),
            coeffs: self.coeffs.iter().map(|c| [c.re, c.im]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.coeffs.len() != repr.degree + 1 {
            return Err(D::Error::custom(format!(
                "degree {} requires {} coefficients, found {}",
                repr.degree,
                repr.degree + 1,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr.coeffs.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
        TruncatedSeries::new(coeffs).map_err(D::Error::custom)
    }
}
