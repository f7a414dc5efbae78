//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! The variable is `t` throughout. These carry Hilbert series numerators,
//! the polynomials `phi_M`, and Taylor expansions at `t = 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial in `t`; index `n` of `coeffs` is the coefficient of `t^n`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `t^n`
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// `(1 - t)^k`
    pub fn one_minus_t_pow(k: usize) -> Self {
        let base = Self::from_i64(&[1, -1]);
        (0..k).fold(Self::one(), |acc, _| &acc * &base)
    }

    /// `(t - 1)^k`
    pub fn t_minus_one_pow(k: usize) -> Self {
        let base = Self::from_i64(&[-1, 1]);
        (0..k).fold(Self::one(), |acc, _| &acc * &base)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^n`, zero past the degree.
    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `t^r`.
    pub fn shift(&self, r: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); r];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Exact division by `1 - t`.
    pub fn div_one_minus_t(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if !self.eval_at_one().is_zero() {
            return Err(Error::InexactDivision { power: 1 });
        }
        // q = h / (1 - t) has q_n = h_0 + ... + h_n, and q_deg = 0 since h(1) = 0.
        let mut acc = BigInt::zero();
        let mut q = Vec::with_capacity(self.coeffs.len() - 1);
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            acc += c;
            q.push(acc.clone());
        }
        Ok(Self::new(q))
    }

    /// Exact division by `(1 - t)^k`.
    pub fn div_one_minus_t_pow(&self, k: usize) -> Result<Self> {
        let mut q = self.clone();
        for done in 0..k {
            q = q.div_one_minus_t().map_err(|_| Error::InexactDivision { power: done + 1 })?;
        }
        Ok(q)
    }

    /// Multiplicity of `t = 1` as a root; `None` for the zero polynomial.
    pub fn root_multiplicity_at_one(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut v = 0;
        let mut q = self.clone();
        while q.eval_at_one().is_zero() {
            q = q.div_one_minus_t().expect("h(1) = 0");
            v += 1;
        }
        Some(v)
    }

    /// Composition `p(u + 1)`, returned as a polynomial in `u`.
    ///
    /// Coefficient `i` of the result is the `i`-th Taylor coefficient of `p`
    /// at `t = 1`.
    pub fn taylor_shift_one(&self) -> Self {
        let mut out: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            // out <- out * (u + 1) + c
            out.push(BigInt::zero());
            for k in (1..out.len()).rev() {
                let prev = out[k - 1].clone();
                out[k] += prev;
            }
            out[0] += c;
        }
        Self::new(out)
    }

    /// First `len` power-series coefficients of `self / (1 - t)^k`.
    pub fn series_expansion(&self, k: usize, len: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = (0..len).map(|n| self.coeff(n)).collect();
        for _ in 0..k {
            let mut acc = BigInt::zero();
            for c in out.iter_mut() {
                acc += &*c;
                *c = acc.clone();
            }
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{n}")?,
                (_, false) => write!(f, "{mag}*t^{n}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn exact_division_by_one_minus_t() {
        // 1 - 2t^2 + t^3 = (1 - t)(1 + t - t^2)
        let h = p(&[1, 0, -2, 1]);
        assert_eq!(h.div_one_minus_t().unwrap(), p(&[1, 1, -1]));
        assert_eq!(h.root_multiplicity_at_one(), Some(1));
        assert!(p(&[1, 1]).div_one_minus_t().is_err());
        assert_eq!(p(&[1, 1]).div_one_minus_t_pow(1), Err(Error::InexactDivision { power: 1 }));
    }

    #[test]
    fn taylor_shift_matches_binomial_expansion() {
        // t^4 = (u + 1)^4
        let t4 = IntPolynomial::monomial(4);
        assert_eq!(t4.taylor_shift_one(), p(&[1, 4, 6, 4, 1]));
        // 1 + t - t^2 at t = u + 1 is 1 - u - u^2
        assert_eq!(p(&[1, 1, -1]).taylor_shift_one(), p(&[1, -1, -1]));
    }

    #[test]
    fn series_expansion_of_free_module() {
        let s = IntPolynomial::one().series_expansion(2, 6);
        let expect: Vec<BigInt> = (1..=6).map(BigInt::from).collect();
        assert_eq!(s, expect);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -2, 1]).to_string(), "1 - 2*t^2 + t^3");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
