//! Regular and superficial linear forms, superficial sequences, admissible
//! ssops and certified depth for cyclic modules `(R/I)(-r)`.
//!
//! Superficiality of `g` is decided by the finite-length colon criterion:
//! `g` is superficial iff `(I : g)/I`, which is `0 :_M g`, has dimension at
//! most zero.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{
    minimalize, random_form_from, rank, LinearForm, LinearSubstitution, Monomial, PolyIdeal, Polynomial,
    Rational, DEFAULT_COEFF_BOUND,
};
use crate::presentation::{series_of_monomial_quotient, CyclicModule};
use crate::series::{Dimension, HilbertSeries};

/// Default number of candidates tried before a negative answer.
pub const DEFAULT_TRIALS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperficialityReport {
    pub is_superficial: bool,
    /// `l(0 :_M g)`, present iff superficial
    pub socle_length: Option<BigInt>,
    /// `(I : g) = I`, i.e. `g` is `M`-regular
    pub colon_equal: bool,
    /// series of `0 :_M g`
    pub socle_series: HilbertSeries,
}

/// Series of `R/I` and `R/(I : g)`, both read off one degrevlex basis taken
/// after sending `g` to the last variable: `in(I : x_d) = in(I) : x_d`.
pub fn colon_series(ideal: &PolyIdeal, g: &LinearForm) -> Result<(HilbertSeries, HilbertSeries)> {
    let d = ideal.ring_dim();
    let (_, gb) = ideal.transformed_basis(g)?;
    let lead = gb.leading_monomials();
    let last = Monomial::var(d, d - 1);
    let colon: Vec<Monomial> =
        lead.iter().map(|m| last.quotient_of(m).unwrap_or_else(|| m.clone())).collect();
    let as_ideal =
        |ms: Vec<Monomial>| PolyIdeal::new(d, minimalize(ms).into_iter().map(Polynomial::monomial).collect());
    let full = series_of_monomial_quotient(d, &as_ideal(lead)?)?;
    let coloned = series_of_monomial_quotient(d, &as_ideal(colon)?)?;
    Ok((full, coloned))
}

/// Decides whether `g` is superficial for `module` and measures `0 :_M g`.
pub fn is_superficial(module: &CyclicModule, g: &LinearForm) -> Result<SuperficialityReport> {
    let (full, coloned) = colon_series(module.ideal(), g)?;
    let socle = crate::series::combine(&[(1, &full), (-1, &coloned)])?.shift(module.shift());
    let colon_equal = socle.is_zero();
    let is_superficial = socle.dimension().is_at_most_zero();
    let socle_length = if is_superficial { socle.length() } else { None };
    Ok(SuperficialityReport { is_superficial, socle_length, colon_equal, socle_series: socle })
}

/// `f` is `M`-regular iff `(I : f) = I`.
pub fn is_regular(module: &CyclicModule, f: &LinearForm) -> Result<bool> {
    Ok(is_superficial(module, f)?.colon_equal)
}

/// `dim R/(I + (fs)) = dim M - n`.
pub fn is_ssop(module: &CyclicModule, fs: &[LinearForm]) -> Result<bool> {
    let Dimension::Finite(s) = module.dimension() else { return Ok(false) };
    if fs.is_empty() || fs.len() > s {
        return Ok(false);
    }
    let extra: Vec<Polynomial> = fs.iter().map(LinearForm::to_polynomial).collect();
    let quotient = CyclicModule::new(module.ideal().add_generators(&extra)?, module.shift());
    Ok(quotient.dimension() == Dimension::Finite(s - fs.len()))
}

/// Successive quotients `M_j = M_{j-1} / g_j M_{j-1}`, each realized in a
/// ring with one variable fewer, together with the maps from the original
/// ring.
#[derive(Clone, Debug)]
pub struct QuotientChain {
    stages: Vec<CyclicModule>,
    subs: Vec<LinearSubstitution>,
    forms: Vec<LinearForm>,
}

impl QuotientChain {
    pub fn new(module: &CyclicModule) -> Self {
        QuotientChain { stages: vec![module.clone()], subs: Vec::new(), forms: Vec::new() }
    }

    pub fn base(&self) -> &CyclicModule {
        &self.stages[0]
    }

    pub fn current(&self) -> &CyclicModule {
        self.stages.last().unwrap()
    }

    pub fn stages(&self) -> &[CyclicModule] {
        &self.stages
    }

    /// The forms quotiented so far, in the original ring.
    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// Image in the current ring of a form of the original ring.
    pub fn map_form(&self, f: &LinearForm) -> Option<LinearForm> {
        let mut cur = f.clone();
        for sub in &self.subs {
            cur = sub.apply_form(&cur)?;
        }
        Some(cur)
    }

    /// Quotients by `f` (a form of the original ring); fails when its image
    /// vanishes.
    pub fn push(&mut self, f: &LinearForm) -> Result<()> {
        let img = self.map_form(f).ok_or(Error::ZeroForm)?;
        let (ideal, sub) = self.current().ideal().quotient_by_linear_with(&img)?;
        self.stages.push(CyclicModule::new(ideal, self.current().shift()));
        self.subs.push(sub);
        self.forms.push(f.clone());
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    NotSsop,
    ProbablyNotAdmissible,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Certified => "certified",
            Verdict::NotSsop => "not-ssop",
            Verdict::ProbablyNotAdmissible => "probably-not-admissible",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityCertificate {
    pub verdict: Verdict,
    /// superficial sequence `g_1..g_n` in the original ring, spanning the input
    pub witness: Option<Vec<LinearForm>>,
    /// candidates tested over all steps
    pub trials_used: usize,
    /// `l(0 :_{M_{j-1}} g_j)` for each certified step
    pub socle_lengths: Vec<BigInt>,
    /// step (1-based) at which every candidate failed
    pub failed_step: Option<usize>,
}

/// Weight vectors over `n` forms in the order: unit vectors, `+-1`
/// combinations by increasing support, then seeded random draws.
struct Candidates<'a> {
    n: usize,
    deterministic: Vec<Vec<i64>>,
    next: usize,
    rng: &'a mut ChaCha8Rng,
}

impl<'a> Candidates<'a> {
    fn new(n: usize, budget: usize, rng: &'a mut ChaCha8Rng) -> Self {
        let mut deterministic: Vec<Vec<i64>> =
            (0..n).map(|k| (0..n).map(|j| i64::from(j == k)).collect()).collect();
        let cap = n.max(budget / 2);
        'outer: for support in 2..=n {
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != support {
                    continue;
                }
                let idx: Vec<usize> = (0..n).filter(|&j| mask & (1 << j) != 0).collect();
                // first sign fixed to +1: negation gives the same element up to scale
                for signs in 0u32..(1 << (support - 1)) {
                    if deterministic.len() >= cap {
                        break 'outer;
                    }
                    let mut w = vec![0; n];
                    w[idx[0]] = 1;
                    for (b, &j) in idx[1..].iter().enumerate() {
                        w[j] = if signs & (1 << b) != 0 { -1 } else { 1 };
                    }
                    deterministic.push(w);
                }
            }
        }
        Candidates { n, deterministic, next: 0, rng }
    }

    fn draw(&mut self, forms: &[LinearForm]) -> LinearForm {
        loop {
            let k = self.next;
            self.next += 1;
            let weights: Vec<Rational> = if k < self.deterministic.len() {
                self.deterministic[k].iter().map(|&w| Rational::from_integer(w.into())).collect()
            } else {
                use rand::Rng;
                (0..self.n)
                    .map(|_| {
                        let c = self.rng.gen_range(-DEFAULT_COEFF_BOUND..=DEFAULT_COEFF_BOUND);
                        Rational::from_integer(c.into())
                    })
                    .collect()
            };
            if let Ok(f) = LinearForm::combination(forms, &weights) {
                return f;
            }
        }
    }
}

/// Tries to exhibit a superficial sequence generating the same ideal as `fs`.
///
/// At step `j` candidates are combinations of the input forms whose image in
/// `M_{j-1}` is nonzero; the first certified superficial one becomes `g_j`.
pub fn find_superficial_sequence(
    module: &CyclicModule,
    fs: &[LinearForm],
    seed: u64,
    trials: usize,
) -> Result<AdmissibilityCertificate> {
    let not_ssop = AdmissibilityCertificate {
        verdict: Verdict::NotSsop,
        witness: None,
        trials_used: 0,
        socle_lengths: Vec::new(),
        failed_step: None,
    };
    if fs.iter().any(|f| f.nvars() != module.ring_dim()) {
        return Err(Error::RingMismatch {
            expected: module.ring_dim(),
            found: fs.iter().map(LinearForm::nvars).find(|&n| n != module.ring_dim()).unwrap(),
        });
    }
    if rank(fs) != fs.len() || !is_ssop(module, fs)? {
        return Ok(not_ssop);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chain = QuotientChain::new(module);
    let mut trials_used = 0;
    let mut socle_lengths = Vec::new();
    for step in 1..=fs.len() {
        let mut candidates = Candidates::new(fs.len(), trials, &mut rng);
        let mut found = None;
        let mut tried = 0;
        while tried < trials.max(1) {
            let g = candidates.draw(fs);
            let Some(img) = chain.map_form(&g) else { continue };
            tried += 1;
            let report = is_superficial(chain.current(), &img)?;
            if let Some(len) = report.socle_length {
                found = Some((g, len));
                break;
            }
        }
        trials_used += tried;
        let Some((g, len)) = found else {
            return Ok(AdmissibilityCertificate {
                verdict: Verdict::ProbablyNotAdmissible,
                witness: None,
                trials_used,
                socle_lengths,
                failed_step: Some(step),
            });
        };
        chain.push(&g)?;
        socle_lengths.push(len);
    }
    Ok(AdmissibilityCertificate {
        verdict: Verdict::Certified,
        witness: Some(chain.forms().to_vec()),
        trials_used,
        socle_lengths,
        failed_step: None,
    })
}

/// Why the regular chain stopped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DepthStop {
    /// the last quotient has dimension at most zero; no form can be regular
    DimensionZero,
    /// the module is zero
    ZeroModule,
    /// this many candidates failed in a row; a probabilistic claim
    TrialsExhausted { trials: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthCertificate {
    pub depth: usize,
    /// regular forms in the original ring, each regular on the previous quotient
    pub chain: Vec<LinearForm>,
    pub stop: DepthStop,
}

impl DepthCertificate {
    /// The terminal claim that no longer chain exists is only probabilistic.
    pub fn is_probabilistic(&self) -> bool {
        matches!(self.stop, DepthStop::TrialsExhausted { .. })
    }
}

/// Builds a maximal chain of certified regular forms. Variables are tried
/// first (last to first), then seeded random forms.
pub fn depth(module: &CyclicModule, seed: u64, trials: usize) -> Result<DepthCertificate> {
    let d = module.ring_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chain = QuotientChain::new(module);
    loop {
        let stop = match chain.current().dimension() {
            Dimension::MinusInfinity => Some(DepthStop::ZeroModule),
            Dimension::Finite(0) => Some(DepthStop::DimensionZero),
            Dimension::Finite(_) => None,
        };
        if let Some(stop) = stop {
            return Ok(DepthCertificate { depth: chain.len(), chain: chain.forms().to_vec(), stop });
        }
        let mut found = None;
        let mut tried = 0;
        let mut var = d;
        while tried < trials.max(1) {
            let f = if var > 0 {
                var -= 1;
                LinearForm::var(d, var)
            } else {
                random_form_from(&mut rng, d, None, DEFAULT_COEFF_BOUND)?
            };
            let Some(img) = chain.map_form(&f) else { continue };
            tried += 1;
            if is_regular(chain.current(), &img)? {
                found = Some(f);
                break;
            }
        }
        match found {
            Some(f) => chain.push(&f)?,
            None => {
                return Ok(DepthCertificate {
                    depth: chain.len(),
                    chain: chain.forms().to_vec(),
                    stop: DepthStop::TrialsExhausted { trials: tried },
                })
            }
        }
    }
}

/// `l(0 :_M g)` by the identity `P(M/gM) - (1 - t) P(M) = t P(0 :_M g)`,
/// independent of any colon computation.
pub fn socle_length_by_quotient(module: &CyclicModule, g: &LinearForm) -> Result<Option<BigInt>> {
    let quotient = module.quotient_by(g)?.series().with_ambient(module.ring_dim());
    let m = module.series();
    let lhs = crate::intpoly::IntPolynomial::one_minus_t_pow(1);
    let rhs = HilbertSeries::new(m.ambient_dim(), m.numerator() * &lhs);
    let diff = crate::series::combine(&[(1, &quotient), (-1, &rhs)])?;
    if diff.dimension().is_at_most_zero() {
        // t * P(0 : g): same length
        Ok(Some(diff.length().unwrap_or_else(BigInt::zero)))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(d: usize, i: usize) -> Polynomial {
        Polynomial::var(d, i)
    }

    fn form(c: &[i64]) -> LinearForm {
        LinearForm::from_i64(c).unwrap()
    }

    /// R/mp with p = (x_1..x_{d-s})
    fn mp(d: usize, s: usize) -> CyclicModule {
        let mut gens = Vec::new();
        for i in 0..d - s {
            for j in 0..d {
                gens.push(v(d, i).mul(&v(d, j)));
            }
        }
        CyclicModule::quotient(PolyIdeal::new(d, gens).unwrap())
    }

    /// R/pq in (x1, x2, y1)
    fn pq() -> CyclicModule {
        let gens = vec![v(3, 0).mul(&v(3, 2)), v(3, 1).mul(&v(3, 2))];
        CyclicModule::quotient(PolyIdeal::new(3, gens).unwrap())
    }

    #[test]
    fn regularity_examples() {
        let m = CyclicModule::quotient(PolyIdeal::new(2, vec![v(2, 0).pow(2)]).unwrap());
        assert!(is_regular(&m, &LinearForm::var(2, 1)).unwrap());
        let z1 = form(&[-1, 0, 1]);
        assert!(is_regular(&pq(), &z1).unwrap());
        for seed in 0..5 {
            let f = crate::poly::random_linear_form(3, None, seed, 100).unwrap();
            assert!(!is_regular(&mp(3, 1), &f).unwrap());
        }
    }

    #[test]
    fn superficiality_examples() {
        let m = mp(3, 1);
        let r = is_superficial(&m, &LinearForm::var(3, 2)).unwrap();
        assert!(r.is_superficial && !r.colon_equal);
        assert_eq!(r.socle_length, Some(BigInt::from(2)));
        let r = is_superficial(&m, &LinearForm::var(3, 0)).unwrap();
        assert!(!r.is_superficial);
        assert_eq!(r.socle_length, None);

        let artinian = CyclicModule::quotient(PolyIdeal::new(2, vec![v(2, 0), v(2, 1)]).unwrap());
        let r = is_superficial(&artinian, &form(&[1, 1])).unwrap();
        assert!(r.is_superficial);
        assert_eq!(r.socle_length, Some(BigInt::from(1)));
    }

    #[test]
    fn socle_length_routes_agree() {
        let m = mp(3, 1);
        for c in [[0, 0, 1], [1, 2, 3], [0, 1, 1], [1, 0, 0]] {
            let g = form(&c);
            let a = is_superficial(&m, &g).unwrap().socle_length;
            assert_eq!(a, socle_length_by_quotient(&m, &g).unwrap());
            // generic colon route
            let colon = m.ideal().colon(&g.to_polynomial()).unwrap();
            let b =
                crate::series::combine(&[(1, &m.series()), (-1, &CyclicModule::quotient(colon).series())])
                    .unwrap();
            assert_eq!(b.dimension().is_at_most_zero(), a.is_some());
        }
    }

    #[test]
    fn ssop_examples() {
        assert!(is_ssop(&mp(3, 1), &[LinearForm::var(3, 2)]).unwrap());
        assert!(is_ssop(&pq(), &[LinearForm::var(3, 1), form(&[-1, 0, 1])]).unwrap());
        let xy = CyclicModule::quotient(PolyIdeal::new(2, vec![v(2, 0).mul(&v(2, 1))]).unwrap());
        assert!(!is_ssop(&xy, &[LinearForm::var(2, 0)]).unwrap());
    }

    #[test]
    fn admissible_ssops_are_certified() {
        let z1 = form(&[-1, 0, 1]);
        let cert = find_superficial_sequence(&pq(), std::slice::from_ref(&z1), 0, DEFAULT_TRIALS).unwrap();
        assert_eq!(cert.verdict, Verdict::Certified);
        assert_eq!(rank(&[cert.witness.unwrap()[0].clone(), z1]), 1);

        // x2 lies in the associated prime p, so the pure form fails and a combination is needed
        let fs = [LinearForm::var(3, 1), form(&[-1, 0, 1])];
        let cert = find_superficial_sequence(&pq(), &fs, 0, DEFAULT_TRIALS).unwrap();
        assert_eq!(cert.verdict, Verdict::Certified);
        let w = cert.witness.unwrap();
        let mut all = w.clone();
        all.extend(fs.iter().cloned());
        assert_eq!(rank(&all), 2);

        let cert = find_superficial_sequence(&mp(3, 1), &[LinearForm::var(3, 2)], 0, 8).unwrap();
        assert_eq!(cert.verdict, Verdict::Certified);
        assert_eq!(cert.socle_lengths, vec![BigInt::from(2)]);
    }

    #[test]
    fn non_ssop_and_non_admissible() {
        let cert = find_superficial_sequence(&mp(3, 1), &[LinearForm::var(3, 0)], 0, 8).unwrap();
        assert_eq!(cert.verdict, Verdict::NotSsop);
        // x2 is an ssop of R/(x1 y1, x2 y1) but every multiple lies in p
        let cert = find_superficial_sequence(&pq(), &[LinearForm::var(3, 1)], 0, 8).unwrap();
        assert_eq!(cert.verdict, Verdict::ProbablyNotAdmissible);
        assert_eq!(cert.failed_step, Some(1));
        assert_eq!(cert.trials_used, 8);
    }

    #[test]
    fn depth_examples() {
        let c = depth(&mp(3, 1), 0, DEFAULT_TRIALS).unwrap();
        assert_eq!(c.depth, 0);
        assert!(c.is_probabilistic());
        let c = depth(&pq(), 0, DEFAULT_TRIALS).unwrap();
        assert_eq!(c.depth, 1);
        let c = depth(&CyclicModule::free(3, 0), 0, DEFAULT_TRIALS).unwrap();
        assert_eq!(c.depth, 3);
        assert_eq!(c.stop, DepthStop::DimensionZero);
        assert_eq!(c, depth(&CyclicModule::free(3, 0), 0, DEFAULT_TRIALS).unwrap());
    }
}
