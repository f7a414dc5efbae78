use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};

pub type Rational = BigRational;

pub(crate) type Term = (Monomial, Rational);

/// Polynomial over the rationals in a fixed number of variables.
///
/// Terms are kept sorted by descending degrevlex with no zero coefficients,
/// which makes the representation canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_terms(nvars, [(Monomial::var(nvars, i), Rational::one())])
    }

    pub fn monomial(m: Monomial) -> Self {
        let nvars = m.nvars();
        Self::from_terms(nvars, [(m, Rational::one())])
    }

    /// Collects like terms and drops zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial from a different ring");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| MonomialOrder::DegRevLex.compare(&b.0, &a.0));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Maximal total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// The common degree when homogeneous. Zero is not homogeneous here.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.degree()?;
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading term under degrevlex.
    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_in(&self, order: MonomialOrder) -> Option<&Term> {
        self.terms.iter().max_by(|a, b| order.compare(&a.0, &b.0))
    }

    /// Terms sorted by descending `order`.
    pub(crate) fn sorted_terms(&self, order: MonomialOrder) -> Vec<Term> {
        let mut t = self.terms.clone();
        if order != MonomialOrder::DegRevLex {
            t.sort_by(|a, b| order.compare(&b.0, &a.0));
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn sub(&self, other: &Polynomial) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Polynomial) -> Self {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                *acc.entry(a.mul(b)).or_insert_with(Rational::zero) += c * d;
            }
        }
        Self::from_terms(self.nvars, acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Exact quotient `self / divisor`; `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading()?;
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.leading().cloned() {
            let q = lm.quotient_of(&m)?;
            let qc = c / lc;
            rest = rest.sub(&divisor.mul_monomial(&q).scale(&qc));
            quotient.push((q, qc));
        }
        Some(Self::from_terms(self.nvars, quotient))
    }

    /// Embeds into a ring with an extra variable at position `i`.
    pub(crate) fn insert_var(&self, i: usize) -> Polynomial {
        Self::from_terms(self.nvars + 1, self.terms.iter().map(|(m, c)| (m.insert_var(i, 0), c.clone())))
    }

    /// Drops variable `i`, which must not occur in any term.
    pub(crate) fn remove_var(&self, i: usize) -> Polynomial {
        Self::from_terms(self.nvars - 1, self.terms.iter().map(|(m, c)| (m.remove_var(i), c.clone())))
    }

    /// Ring homomorphism sending `x_j` to `images[j]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, |p| p.nvars);
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|p| vec![Polynomial::one(p.nvars), p.clone()]).collect();
        let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(target, c.clone());
            for (j, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[j].len() <= e {
                    let next = powers[j].last().unwrap().mul(&images[j]);
                    powers[j].push(next);
                }
                prod = prod.mul(&powers[j][e]);
            }
            for (mm, cc) in prod.terms {
                *out.entry(mm).or_insert_with(Rational::zero) += cc;
            }
        }
        Self::from_terms(target, out)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }
}

/// Default variable names `x1 .. xn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                m.fmt_with(self.names, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars);
        let shown = self.display_with(&names);
        write!(f, "{shown}")
    }
}

/// `a - c * m * b` on term lists sorted by descending `order`.
pub(crate) fn sub_mul_sorted(
    order: MonomialOrder,
    a: &[Term],
    c: &Rational,
    m: &Monomial,
    b: &[Term],
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(bm, bc)| (bm.mul(m), bc * c)).peekable();
    while i < a.len() || bi.peek().is_some() {
        let ord = match (a.get(i), bi.peek()) {
            (Some(x), Some(y)) => order.compare(&x.0, &y.0),
            (Some(_), None) => Ordering::Greater,
            (None, _) => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (mm, cc) = bi.next().unwrap();
                out.push((mm, -cc));
            }
            Ordering::Equal => {
                let (_, cc) = bi.next().unwrap();
                let v = &a[i].1 - cc;
                if !v.is_zero() {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn canonical_form() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let p = x.add(&y).sub(&y);
        assert_eq!(p, x);
        assert!(x.sub(&x).is_zero());
        assert_eq!(x.mul(&y).add(&x.pow(2)).to_string(), "x1^2 + x1*x2");
    }

    #[test]
    fn homogeneity() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        assert_eq!(x.mul(&y).add(&y.pow(2)).homogeneous_degree(), Some(2));
        assert!(!x.add(&y.pow(2)).is_homogeneous());
        assert!(!Polynomial::zero(2).is_homogeneous());
    }

    #[test]
    fn exact_division() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let f = x.add(&y);
        let g = f.mul(&x.sub(&y.scale(&q(3))));
        assert_eq!(g.div_exact(&f), Some(x.sub(&y.scale(&q(3)))));
        assert_eq!(x.div_exact(&f), None);
    }

    #[test]
    fn substitution() {
        // x1*x3 with x3 -> x1 + x2 in two variables
        let p = Polynomial::var(3, 0).mul(&Polynomial::var(3, 2));
        let imgs = vec![
            Polynomial::var(2, 0),
            Polynomial::var(2, 1),
            Polynomial::var(2, 0).add(&Polynomial::var(2, 1)),
        ];
        assert_eq!(p.substitute(&imgs).to_string(), "x1^2 + x1*x2");
    }

    #[test]
    fn display_rational_coefficients() {
        let p = Polynomial::var(2, 0).scale(&Rational::new(BigInt::from(1), BigInt::from(2)));
        let p = p.sub(&Polynomial::var(2, 1));
        assert_eq!(p.to_string(), "1/2*x1 - x2");
    }
}
