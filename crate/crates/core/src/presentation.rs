//! Hilbert series of presented modules.
//!
//! Three presentation forms are supported: shifted cyclic quotients `(R/I)(-r)`,
//! monomial quotients handled by an exact-sequence recursion, and graded free
//! resolutions given by their twists.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;
use crate::poly::{minimalize, LinearForm, Monomial, MonomialOrder, PolyIdeal, Polynomial};
use crate::series::{binomial, CoefficientTable, Dimension, HilbertSeries};

/// The module `(R/I)(-r)` over `R = Q[x_1..x_d]`.
#[derive(Clone, Debug)]
pub struct CyclicModule {
    ideal: PolyIdeal,
    shift: usize,
}

impl CyclicModule {
    pub fn new(ideal: PolyIdeal, shift: usize) -> Self {
        CyclicModule { ideal, shift }
    }

    pub fn quotient(ideal: PolyIdeal) -> Self {
        Self::new(ideal, 0)
    }

    /// `R(-r)` in `d` variables.
    pub fn free(d: usize, shift: usize) -> Self {
        Self::new(PolyIdeal::zero(d), shift)
    }

    pub fn ring_dim(&self) -> usize {
        self.ideal.ring_dim()
    }

    pub fn ideal(&self) -> &PolyIdeal {
        &self.ideal
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn with_shift(&self, shift: usize) -> Self {
        Self::new(self.ideal.clone(), shift)
    }

    pub fn series(&self) -> HilbertSeries {
        series_of_cyclic(self)
    }

    pub fn dimension(&self) -> Dimension {
        self.series().dimension()
    }

    pub fn coefficients(&self) -> CoefficientTable {
        self.series().hilbert_coefficients().expect("module series has an integer phi")
    }

    /// `M / fM` as a cyclic module over a ring with one variable fewer.
    pub fn quotient_by(&self, f: &LinearForm) -> Result<CyclicModule> {
        Ok(CyclicModule::new(self.ideal.quotient_by_linear(f)?, self.shift))
    }
}

/// Betti data `{k -> twists}` of a graded free resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionPresentation {
    ring_dim: usize,
    steps: Vec<Vec<usize>>,
}

impl ResolutionPresentation {
    pub fn new(ring_dim: usize, steps: Vec<Vec<usize>>) -> Result<Self> {
        if steps.first().is_none_or(Vec::is_empty) {
            return Err(Error::BadParams("resolution needs a nonempty step 0".into()));
        }
        let res = ResolutionPresentation { ring_dim, steps };
        // sanity: a genuine resolution has a series with nonnegative coefficients
        let expansion = series_of_resolution(&res).expansion(64);
        if expansion.iter().any(|c| c < &num_bigint::BigInt::from(0)) {
            return Err(Error::BadParams("alternating sum has negative coefficients".into()));
        }
        Ok(res)
    }

    /// Koszul complex on homogeneous elements of the given degrees.
    pub fn koszul(ring_dim: usize, degrees: &[usize]) -> Result<Self> {
        let mut steps = vec![Vec::new(); degrees.len() + 1];
        for mask in 0u32..(1 << degrees.len()) {
            let k = mask.count_ones() as usize;
            let twist = (0..degrees.len()).filter(|&i| mask & (1 << i) != 0).map(|i| degrees[i]).sum();
            steps[k].push(twist);
        }
        for s in steps.iter_mut() {
            s.sort_unstable();
        }
        Self::new(ring_dim, steps)
    }

    /// `0 -> R(-(m+1))^m -> R(-m)^(m+1) -> R`.
    pub fn hilbert_burch(ring_dim: usize, m: usize) -> Result<Self> {
        Self::new(ring_dim, vec![vec![0], vec![m; m + 1], vec![m + 1; m]])
    }

    pub fn ring_dim(&self) -> usize {
        self.ring_dim
    }

    pub fn steps(&self) -> &[Vec<usize>] {
        &self.steps
    }

    pub fn series(&self) -> HilbertSeries {
        series_of_resolution(self)
    }
}

/// `h = sum_k (-1)^k sum_{r in steps[k]} t^r` over `(1 - t)^d`.
pub fn series_of_resolution(res: &ResolutionPresentation) -> HilbertSeries {
    let mut h = IntPolynomial::zero();
    for (k, twists) in res.steps.iter().enumerate() {
        for &r in twists {
            let term = IntPolynomial::monomial(r);
            h = if k % 2 == 0 { &h + &term } else { &h - &term };
        }
    }
    HilbertSeries::new(res.ring_dim, h)
}

/// Series of `(R/I)(-r)` through the degrevlex initial ideal.
pub fn series_of_cyclic(module: &CyclicModule) -> HilbertSeries {
    let init = module.ideal.initial_ideal(MonomialOrder::DegRevLex);
    series_of_monomial_quotient(module.ring_dim(), &init)
        .expect("initial ideals are monomial")
        .shift(module.shift)
}

/// Series of `R/I` for a monomial ideal `I`.
///
/// Uses `P(R/I) = t * P(R/(I : x)) + P(R/(I + (x)))` with `x` the first
/// variable dividing a non-variable minimal generator.
pub fn series_of_monomial_quotient(d: usize, ideal: &PolyIdeal) -> Result<HilbertSeries> {
    if ideal.ring_dim() != d {
        return Err(Error::RingMismatch { expected: d, found: ideal.ring_dim() });
    }
    let gens = ideal.minimal_monomials()?;
    let mut memo = HashMap::new();
    Ok(HilbertSeries::new(d, monomial_numerator(gens, &mut memo)))
}

fn monomial_numerator(
    gens: Vec<Monomial>,
    memo: &mut HashMap<Vec<Monomial>, IntPolynomial>,
) -> IntPolynomial {
    if gens.is_empty() {
        return IntPolynomial::one();
    }
    if gens.iter().any(Monomial::is_one) {
        return IntPolynomial::zero();
    }
    if gens.iter().all(|m| m.degree() == 1) {
        return IntPolynomial::one_minus_t_pow(gens.len());
    }
    if let Some(h) = memo.get(&gens) {
        return h.clone();
    }
    let nvars = gens[0].nvars();
    let pivot = (0..nvars)
        .find(|&i| gens.iter().any(|m| m.degree() > 1 && m.exp(i) > 0))
        .expect("some generator has degree at least two");
    let x = Monomial::var(nvars, pivot);
    let colon: Vec<Monomial> = gens.iter().map(|m| x.quotient_of(m).unwrap_or_else(|| m.clone())).collect();
    let mut plus = gens.clone();
    plus.push(x);
    let h =
        &monomial_numerator(minimalize(colon), memo).shift(1) + &monomial_numerator(minimalize(plus), memo);
    memo.insert(gens, h.clone());
    h
}

/// The four closed-form families of coefficient tables over a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormCase {
    /// `R(-r)`
    ShiftedFree { d: usize, r: usize },
    /// `R/fR` with `deg f = k`
    Hypersurface { d: usize, k: usize },
    /// `R/(f, g)R` for a regular sequence of degrees `k, l`
    CompleteIntersection2 { d: usize, k: usize, l: usize },
    /// `R/a` with `a` the maximal minors of an `m x (m+1)` linear matrix
    HilbertBurch { d: usize, m: usize },
}

/// A presentation produced by [`closed_form_family`].
#[derive(Clone, Debug)]
pub enum Presentation {
    Cyclic(CyclicModule),
    Resolution(ResolutionPresentation),
}

impl Presentation {
    pub fn series(&self) -> HilbertSeries {
        match self {
            Presentation::Cyclic(m) => m.series(),
            Presentation::Resolution(r) => r.series(),
        }
    }
}

/// Builds the presentation for a family member with its closed-form table.
pub fn closed_form_family(case: ClosedFormCase) -> Result<(Presentation, CoefficientTable)> {
    let bad = |msg: &str| Err(Error::BadParams(msg.to_string()));
    match case {
        ClosedFormCase::ShiftedFree { d, r } => {
            if d == 0 {
                return bad("need at least one variable");
            }
            let expected = (0..=r as u64).map(|i| binomial(r as u64, i)).collect();
            Ok((
                Presentation::Cyclic(CyclicModule::free(d, r)),
                CoefficientTable::new(Dimension::Finite(d), expected),
            ))
        }
        ClosedFormCase::Hypersurface { d, k } => {
            if d == 0 || k == 0 {
                return bad("hypersurface needs d >= 1 and k >= 1");
            }
            let f = Polynomial::var(d, 0).pow(k as u32);
            let module = CyclicModule::quotient(PolyIdeal::new(d, vec![f])?);
            let expected = (0..k as u64).map(|i| binomial(k as u64, i + 1)).collect();
            Ok((Presentation::Cyclic(module), CoefficientTable::new(Dimension::Finite(d - 1), expected)))
        }
        ClosedFormCase::CompleteIntersection2 { d, k, l } => {
            if d < 2 || k == 0 || l == 0 {
                return bad("complete intersection needs d >= 2 and k, l >= 1");
            }
            let res = ResolutionPresentation::koszul(d, &[k, l])?;
            Ok((Presentation::Resolution(res), complete_intersection_table(d, k, l)))
        }
        ClosedFormCase::HilbertBurch { d, m } => {
            if d < 2 || m == 0 {
                return bad("grade-two minors need d >= 2 and m >= 1");
            }
            let res = ResolutionPresentation::hilbert_burch(d, m)?;
            let expected = (0..m as u64)
                .map(|i| num_bigint::BigInt::from(i + 1) * binomial(m as u64 + 1, i + 2))
                .collect();
            Ok((Presentation::Resolution(res), CoefficientTable::new(Dimension::Finite(d - 2), expected)))
        }
    }
}

/// `e_i = C(k+l, i+2) - C(k, i+2) - C(l, i+2)`.
pub fn complete_intersection_table(d: usize, k: usize, l: usize) -> CoefficientTable {
    let (k, l) = (k as u64, l as u64);
    let coeffs =
        (0..k + l).map(|i| binomial(k + l, i + 2) - binomial(k, i + 2) - binomial(l, i + 2)).collect();
    CoefficientTable::new(Dimension::Finite(d - 2), coeffs)
}

/// `e_i = sum_{j <= i} C(k, i-j+1) C(l, j+1)`, the convolution form of the
/// same table.
pub fn complete_intersection_convolution(d: usize, k: usize, l: usize) -> CoefficientTable {
    let (k, l) = (k as u64, l as u64);
    let coeffs =
        (0..k + l).map(|i| (0..=i).map(|j| binomial(k, i - j + 1) * binomial(l, j + 1)).sum()).collect();
    CoefficientTable::new(Dimension::Finite(d - 2), coeffs)
}

/// The ideal of maximal minors of `[[x1, x2, x3], [x2, x3, x1 + 2 x2]]` in
/// three variables: a concrete grade-two Hilbert-Burch instance with `m = 2`.
pub fn hilbert_burch_minors_instance() -> CyclicModule {
    let v = |i| Polynomial::var(3, i);
    let two = crate::poly::Rational::from_integer(2.into());
    let row0 = [v(0), v(1), v(2)];
    let row1 = [v(1), v(2), v(0).add(&v(1).scale(&two))];
    let minor = |a: usize, b: usize| row0[a].mul(&row1[b]).sub(&row0[b].mul(&row1[a]));
    let ideal = PolyIdeal::new(3, vec![minor(0, 1), minor(0, 2), minor(1, 2)]).expect("quadrics");
    CyclicModule::quotient(ideal)
}
