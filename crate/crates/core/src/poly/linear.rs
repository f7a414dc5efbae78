use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::polynomial::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Default bound `B` for random coefficients drawn from `{-B, ..., B}`.
pub const DEFAULT_COEFF_BOUND: i64 = 100;

/// A nonzero element of `[R]_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::ZeroForm);
        }
        Ok(LinearForm { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
    }

    /// The variable `x_i` in a ring with `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); nvars];
        coeffs[i] = Rational::one();
        LinearForm { coeffs }
    }

    /// Reads a degree-one homogeneous polynomial.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        if p.homogeneous_degree() != Some(1) {
            return Err(Error::BadParams("not a linear form".into()));
        }
        let mut coeffs = vec![Rational::zero(); p.nvars()];
        for (m, c) in p.terms() {
            coeffs[m.as_variable().unwrap()] = c.clone();
        }
        Ok(LinearForm { coeffs })
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.nvars();
        Polynomial::from_terms(
            n,
            self.coeffs.iter().enumerate().map(|(i, c)| (super::Monomial::var(n, i), c.clone())),
        )
    }

    /// Largest index with a nonzero coefficient.
    pub fn pivot(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).expect("nonzero form")
    }

    pub fn scale(&self, c: &Rational) -> Result<Self> {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `sum_k weights[k] * forms[k]`; fails when the combination vanishes.
    pub fn combination(forms: &[LinearForm], weights: &[Rational]) -> Result<Self> {
        let n = forms.first().ok_or(Error::EmptySpan)?.nvars();
        let mut coeffs = vec![Rational::zero(); n];
        for (f, w) in forms.iter().zip(weights) {
            for (acc, c) in coeffs.iter_mut().zip(&f.coeffs) {
                *acc += c * w;
            }
        }
        Self::new(coeffs)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        FormDisplay { poly: self.to_polynomial(), names }
    }
}

struct FormDisplay<'a> {
    poly: Polynomial,
    names: &'a [String],
}

impl fmt::Display for FormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly.display_with(self.names))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// Rank of a family of forms by exact Gaussian elimination.
pub fn rank(forms: &[LinearForm]) -> usize {
    let mut rows: Vec<Vec<Rational>> = forms.iter().map(|f| f.coeffs.clone()).collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot[col];
            for (a, b) in row.iter_mut().zip(&pivot) {
                *a -= &factor * b;
            }
        }
        r += 1;
    }
    r
}

/// Deterministic source of random linear forms.
///
/// With `span` given, draws `sum c_k f_k` with integer `c_k` in `{-B..B}`;
/// otherwise draws every coefficient in that range.
pub fn random_linear_form(
    nvars: usize,
    span: Option<&[LinearForm]>,
    seed: u64,
    bound: i64,
) -> Result<LinearForm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_form_from(&mut rng, nvars, span, bound)
}

pub(crate) fn random_form_from(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    span: Option<&[LinearForm]>,
    bound: i64,
) -> Result<LinearForm> {
    let bound = bound.max(1);
    loop {
        let draw = match span {
            Some([]) => return Err(Error::EmptySpan),
            Some(span) => {
                let w: Vec<Rational> = span
                    .iter()
                    .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-bound..=bound))))
                    .collect();
                LinearForm::combination(span, &w)
            }
            None => {
                if nvars == 0 {
                    return Err(Error::EmptySpan);
                }
                let c: Vec<Rational> = (0..nvars)
                    .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-bound..=bound))))
                    .collect();
                LinearForm::new(c)
            }
        };
        if let Ok(f) = draw {
            return Ok(f);
        }
    }
}

/// The surjection `R -> R' = R / (f)` for a linear form `f`, realized by
/// solving `f = 0` for its pivot variable and dropping that variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubstitution {
    nvars: usize,
    pivot: usize,
    /// images of every variable of `R` as polynomials of `R'`
    images: Vec<Polynomial>,
}

impl LinearSubstitution {
    pub fn new(f: &LinearForm) -> Self {
        let n = f.nvars();
        let p = f.pivot();
        let lead = f.coeffs[p].clone();
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let img = if i == p {
                // x_p = -(1/c_p) * sum_{j != p} c_j x_j
                let terms = (0..n).filter(|&j| j != p).map(|j| {
                    let k = if j < p { j } else { j - 1 };
                    (super::Monomial::var(n - 1, k), -&f.coeffs[j] / &lead)
                });
                Polynomial::from_terms(n - 1, terms)
            } else {
                Polynomial::var(n - 1, if i < p { i } else { i - 1 })
            };
            images.push(img);
        }
        LinearSubstitution { nvars: n, pivot: p, images }
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn source_nvars(&self) -> usize {
        self.nvars
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        p.substitute(&self.images)
    }

    /// Image of a form; `None` if it becomes zero in the quotient.
    pub fn apply_form(&self, f: &LinearForm) -> Option<LinearForm> {
        let img = self.apply(&f.to_polynomial());
        if img.is_zero() {
            None
        } else {
            Some(LinearForm::from_polynomial(&img).expect("image of a form is linear"))
        }
    }
}

/// A graded automorphism of `R` sending the given form to the last variable.
#[derive(Clone, Debug)]
pub struct CoordinateChange {
    forward: Vec<Polynomial>,
    inverse: Vec<Polynomial>,
}

impl CoordinateChange {
    pub fn sending_to_last(f: &LinearForm) -> Self {
        let n = f.nvars();
        let p = f.pivot();
        let last = n - 1;
        let cp = f.coeffs[p].clone();
        // After swapping x_p and x_last, the form reads sum c'_j x_j with
        // c'_last = c_p. Then x_last -> (x_last - sum_{j<last} c'_j x_j) / c_last
        // sends it to x_last.
        let mut swapped = f.coeffs.clone();
        swapped.swap(p, last);
        let sigma_last = {
            let terms = (0..n).map(|j| {
                let c = if j == last { Rational::one() / &cp } else { -&swapped[j] / &cp };
                (super::Monomial::var(n, j), c)
            });
            Polynomial::from_terms(n, terms)
        };
        let sigma_inv_last = LinearForm { coeffs: swapped.clone() }.to_polynomial();
        let swap = |i: usize| {
            if i == p {
                last
            } else if i == last {
                p
            } else {
                i
            }
        };
        // forward = sigma o swap, inverse = swap o sigma^{-1}
        let forward = (0..n)
            .map(|i| {
                let j = swap(i);
                if j == last {
                    sigma_last.clone()
                } else {
                    Polynomial::var(n, j)
                }
            })
            .collect();
        let inverse_sigma: Vec<Polynomial> =
            (0..n).map(|j| if j == last { sigma_inv_last.clone() } else { Polynomial::var(n, j) }).collect();
        let swap_imgs: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(n, swap(i))).collect();
        let inverse = inverse_sigma.iter().map(|q| q.substitute(&swap_imgs)).collect();
        CoordinateChange { forward, inverse }
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        p.substitute(&self.forward)
    }

    pub fn invert(&self, p: &Polynomial) -> Polynomial {
        p.substitute(&self.inverse)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinism() {
        let a = random_linear_form(3, None, 7, DEFAULT_COEFF_BOUND).unwrap();
        let b = random_linear_form(3, None, 7, DEFAULT_COEFF_BOUND).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn span_of_one_form_gives_multiples() {
        let x1 = LinearForm::var(3, 0);
        for seed in 0..20 {
            let f = random_linear_form(3, Some(std::slice::from_ref(&x1)), seed, 5).unwrap();
            assert_eq!(rank(&[f.clone(), x1.clone()]), 1);
        }
        assert_eq!(random_linear_form(3, Some(&[]), 0, 5), Err(Error::EmptySpan));
    }

    #[test]
    fn substitution_drops_pivot() {
        // f = y1 - x1 in (x1, x2, y1): y1 -> x1
        let f = LinearForm::from_i64(&[-1, 0, 1]).unwrap();
        let sub = LinearSubstitution::new(&f);
        assert_eq!(sub.pivot(), 2);
        let p = Polynomial::var(3, 1).mul(&Polynomial::var(3, 2));
        assert_eq!(sub.apply(&p).to_string(), "x1*x2");
        assert_eq!(sub.apply_form(&f), None);
    }

    #[test]
    fn coordinate_change_sends_form_to_last_variable() {
        let f = LinearForm::from_i64(&[2, -3, 0]).unwrap();
        let cc = CoordinateChange::sending_to_last(&f);
        assert_eq!(cc.apply(&f.to_polynomial()), Polynomial::var(3, 2));
        let p = Polynomial::var(3, 0).mul(&Polynomial::var(3, 1)).add(&Polynomial::var(3, 2).pow(2));
        assert_eq!(cc.invert(&cc.apply(&p)), p);
    }

    #[test]
    fn rank_detects_dependence() {
        let a = LinearForm::from_i64(&[1, 1, 0]).unwrap();
        let b = LinearForm::from_i64(&[2, 2, 0]).unwrap();
        let c = LinearForm::from_i64(&[0, 1, 1]).unwrap();
        assert_eq!(rank(&[a.clone(), b]), 1);
        assert_eq!(rank(&[a, c]), 2);
    }
}
