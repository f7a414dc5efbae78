//! Hilbert series `h / (1 - t)^d` and the coefficients read off them.
//!
//! Everything here is exact integer arithmetic. The Hilbert coefficients
//! `e_i` are Taylor coefficients of `phi = (1 - t)^max(s, 0) * P` at `t = 1`,
//! obtained by composing with `t -> u + 1`; the relative coefficients use
//! `(1 - t)^d * P = h` instead.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;

/// Binomial coefficient with the conventions `C(m, 0) = 1` and `C(m, n) = 0`
/// for `m < n`.
pub fn binomial(m: u64, n: u64) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    if m < n {
        return BigInt::zero();
    }
    let n = n.min(m - n);
    let mut acc = BigInt::one();
    for i in 0..n {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(-1)^k` as a big integer.
pub(crate) fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Krull dimension of a graded module; the zero module has dimension `-inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dimension {
    MinusInfinity,
    Finite(usize),
}

impl Dimension {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dimension::MinusInfinity => None,
            Dimension::Finite(s) => Some(s),
        }
    }

    /// `max(s, 0)`
    pub fn clamped(self) -> usize {
        self.finite().unwrap_or(0)
    }

    /// True for `-inf` and `0`.
    pub fn is_at_most_zero(self) -> bool {
        self.clamped() == 0
    }
}

impl PartialEq<usize> for Dimension {
    fn eq(&self, other: &usize) -> bool {
        *self == Dimension::Finite(*other)
    }
}

impl PartialOrd<usize> for Dimension {
    fn partial_cmp(&self, other: &usize) -> Option<Ordering> {
        Some(self.cmp(&Dimension::Finite(*other)))
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::MinusInfinity => write!(f, "-inf"),
            Dimension::Finite(s) => write!(f, "{s}"),
        }
    }
}

/// Formal power series `numerator / (1 - t)^ambient_dim`.
///
/// Equality compares reduced forms, so the same module embedded in rings of
/// different dimension compares equal.
#[derive(Clone, Debug)]
pub struct HilbertSeries {
    ambient_dim: usize,
    numerator: IntPolynomial,
}

impl HilbertSeries {
    pub fn new(ambient_dim: usize, numerator: IntPolynomial) -> Self {
        HilbertSeries { ambient_dim, numerator }
    }

    /// Series of the polynomial ring in `d` variables.
    pub fn free(d: usize) -> Self {
        Self::new(d, IntPolynomial::one())
    }

    pub fn zero(d: usize) -> Self {
        Self::new(d, IntPolynomial::zero())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Cancels every common factor `1 - t` between numerator and denominator.
    pub fn reduced(&self) -> HilbertSeries {
        match self.numerator.root_multiplicity_at_one() {
            None => HilbertSeries::zero(0),
            Some(v) => {
                let k = v.min(self.ambient_dim);
                let h = self.numerator.div_one_minus_t_pow(k).expect("root multiplicity bounds the division");
                HilbertSeries::new(self.ambient_dim - k, h)
            }
        }
    }

    /// `d - v`, where `v` is the multiplicity of `t = 1` in the numerator.
    pub fn dimension(&self) -> Dimension {
        match self.numerator.root_multiplicity_at_one() {
            None => Dimension::MinusInfinity,
            Some(v) => Dimension::Finite(self.ambient_dim.saturating_sub(v)),
        }
    }

    /// `phi = (1 - t)^max(s, 0) * P`, an integer polynomial.
    pub fn phi(&self) -> Result<IntPolynomial> {
        let s = self.dimension().clamped();
        self.numerator.div_one_minus_t_pow(self.ambient_dim - s.min(self.ambient_dim))
    }

    /// The Hilbert coefficients `e_0 .. e_D` with `D = deg phi`.
    pub fn hilbert_coefficients(&self) -> Result<CoefficientTable> {
        let phi = self.phi()?;
        Ok(CoefficientTable::new(self.dimension(), phi.taylor_shift_one().coeffs().to_vec()))
    }

    /// The `i`-th Taylor coefficient of the numerator at `t = 1`.
    pub fn relative_coefficient(&self, i: usize) -> BigInt {
        self.numerator.taylor_shift_one().coeff(i)
    }

    /// Series of the shifted module `M(-r)`.
    pub fn shift(&self, r: usize) -> HilbertSeries {
        HilbertSeries::new(self.ambient_dim, self.numerator.shift(r))
    }

    /// Re-expresses the series over a ring of dimension `d >= ambient_dim`.
    pub fn with_ambient(&self, d: usize) -> HilbertSeries {
        assert!(d >= self.ambient_dim, "cannot lower the ambient dimension");
        let factor = IntPolynomial::one_minus_t_pow(d - self.ambient_dim);
        HilbertSeries::new(d, &self.numerator * &factor)
    }

    /// Power-series coefficients `l([M]_0) .. l([M]_{len-1})`.
    pub fn expansion(&self, len: usize) -> Vec<BigInt> {
        self.numerator.series_expansion(self.ambient_dim, len)
    }

    /// Like [`expansion`](Self::expansion), refusing degrees beyond `max_degree`.
    pub fn expansion_checked(&self, degree: usize, max_degree: usize) -> Result<Vec<BigInt>> {
        if degree > max_degree {
            return Err(Error::Truncation { requested: degree, max: max_degree });
        }
        Ok(self.expansion(degree + 1))
    }

    /// Length of a finite-length module: the value `P(1)` when `dim <= 0`.
    pub fn length(&self) -> Option<BigInt> {
        if self.dimension().is_at_most_zero() {
            Some(self.phi().ok()?.eval_at_one())
        } else {
            None
        }
    }
}

impl PartialEq for HilbertSeries {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.reduced(), other.reduced());
        a.ambient_dim == b.ambient_dim && a.numerator == b.numerator
    }
}

impl Eq for HilbertSeries {}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (1 - t)^{}", self.numerator, self.ambient_dim)
    }
}

/// Signed sum of series over a common ring.
///
/// An exact sequence with alternating signs sums to zero; all-plus signs give
/// the series of the direct sum.
pub fn combine(terms: &[(i32, &HilbertSeries)]) -> Result<HilbertSeries> {
    let Some((_, first)) = terms.first() else {
        return Ok(HilbertSeries::zero(0));
    };
    let d = first.ambient_dim;
    let mut acc = IntPolynomial::zero();
    for (sgn, s) in terms {
        if s.ambient_dim != d {
            return Err(Error::MixedAmbient(d, s.ambient_dim));
        }
        acc = if *sgn >= 0 { &acc + &s.numerator } else { &acc - &s.numerator };
    }
    Ok(HilbertSeries::new(d, acc))
}

/// Hilbert coefficients `e_0 .. e_D` together with the dimension `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    dim: Dimension,
    coeffs: Vec<BigInt>,
}

impl CoefficientTable {
    pub fn new(dim: Dimension, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CoefficientTable { dim, coeffs }
    }

    pub fn from_i64(dim: Dimension, coeffs: &[i64]) -> Self {
        Self::new(dim, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `e_i`, zero beyond the stored range.
    pub fn get(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `deg phi`, or `None` for the zero module.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Rebuilds `phi = sum e_i (t - 1)^i`.
    pub fn phi(&self) -> IntPolynomial {
        self.coeffs
            .iter()
            .enumerate()
            .fold(IntPolynomial::zero(), |acc, (i, e)| &acc + &IntPolynomial::t_minus_one_pow(i).scale(e))
    }

    /// Same coefficients, different recorded dimension.
    pub fn with_dim(&self, dim: Dimension) -> Self {
        CoefficientTable { dim, coeffs: self.coeffs.clone() }
    }
}

impl fmt::Display for CoefficientTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s = {}; e = (", self.dim)?;
        for (i, e) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// `e_i(M(-r)) = sum_{j <= i} C(r, j) e_{i-j}(M)`.
pub fn shift_coefficients(table: &CoefficientTable, r: usize) -> CoefficientTable {
    let Some(deg) = table.degree() else {
        return table.clone();
    };
    let coeffs = (0..=deg + r)
        .map(|i| (0..=i).map(|j| binomial(r as u64, j as u64) * table.get(i - j)).sum())
        .collect();
    CoefficientTable::new(table.dim, coeffs)
}

/// Coefficients of `M / fM` for an `M`-regular `f` of degree `k >= 1`:
/// `e_i(M/fM) = sum_{j <= i} C(k, j + 1) e_{i-j}(M)`, dimension one lower.
pub fn regular_quotient_coeffs(table: &CoefficientTable, k: usize) -> Result<CoefficientTable> {
    if k == 0 {
        return Err(Error::BadParams("regular element must have positive degree".into()));
    }
    let dim = match table.dim {
        Dimension::Finite(s) if s > 0 => Dimension::Finite(s - 1),
        _ => return Err(Error::BadParams("quotient by a regular element needs dim >= 1".into())),
    };
    let Some(deg) = table.degree() else {
        return Err(Error::BadParams("empty coefficient table".into()));
    };
    let coeffs = (0..deg + k)
        .map(|i| (0..=i).map(|j| binomial(k as u64, j as u64 + 1) * table.get(i - j)).sum())
        .collect();
    Ok(CoefficientTable::new(dim, coeffs))
}

/// Outcome of comparing partial sums of the series with the Hilbert polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSumCheck {
    pub n: usize,
    /// `sum_{k <= n} l([M]_k)`
    pub lhs: BigInt,
    /// `sum_{i <= s} (-1)^i e_i C(n + s - i, s - i)`
    pub rhs: BigInt,
    /// `deg phi - s`: the identity is guaranteed for `n` at or above this.
    pub threshold: i64,
    pub holds: bool,
}

/// Evaluates both sides of the partial-sum identity at `n`.
pub fn partial_sum_check(series: &HilbertSeries, n: usize) -> Result<PartialSumCheck> {
    let lhs: BigInt = series.expansion(n + 1).into_iter().sum();
    let table = series.hilbert_coefficients()?;
    let (rhs, threshold) = match series.dimension() {
        Dimension::MinusInfinity => (BigInt::zero(), 0),
        Dimension::Finite(s) => {
            let rhs =
                (0..=s).map(|i| sign(i) * table.get(i) * binomial((n + s - i) as u64, (s - i) as u64)).sum();
            let deg = table.degree().map_or(0, |d| d as i64);
            (rhs, deg - s as i64)
        }
    };
    Ok(PartialSumCheck { n, holds: lhs == rhs, lhs, rhs, threshold })
}

/// Consistency between `e_i` and `ebar_i` for a nonzero series:
/// `ebar_i = 0` for `i < d - s` and `ebar_i = (-1)^(d-s) e_{i-d+s}` otherwise.
pub fn relative_relation_holds(series: &HilbertSeries, i: usize) -> Result<bool> {
    let Dimension::Finite(s) = series.dimension() else {
        return Ok(series.relative_coefficient(i).is_zero());
    };
    let codim = series.ambient_dim() - s;
    let table = series.hilbert_coefficients()?;
    let rel = series.relative_coefficient(i);
    Ok(if i < codim {
        rel.is_zero()
    } else {
        rel == sign(codim) * table.get(i - codim)
            && table.get(i) == sign(codim) * series.relative_coefficient(i + codim)
    })
}

#[cfg(test)]
fn big(n: i64) -> BigInt {
    BigInt::from(n)
}
