use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::groebner::{buchberger, GroebnerBasis};
use super::linear::{CoordinateChange, LinearForm, LinearSubstitution};
use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Homogeneous ideal of `Q[x_1..x_d]` given by generators.
///
/// Gröbner bases are computed lazily and cached per monomial order; the cache
/// is filled at most once per order even under concurrent use.
pub struct PolyIdeal {
    ring_dim: usize,
    generators: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for PolyIdeal {
    fn clone(&self) -> Self {
        PolyIdeal {
            ring_dim: self.ring_dim,
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for PolyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolyIdeal")
            .field("ring_dim", &self.ring_dim)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PolyIdeal {
    /// Zero generators are dropped; every other generator must be homogeneous
    /// in a ring with `ring_dim` variables.
    pub fn new(ring_dim: usize, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.nvars() != ring_dim {
                return Err(Error::RingMismatch { expected: ring_dim, found: g.nvars() });
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::BadParams(format!("generator {g} is not homogeneous")));
            }
            gens.push(g);
        }
        Ok(Self::from_homogeneous(ring_dim, gens))
    }

    fn from_homogeneous(ring_dim: usize, generators: Vec<Polynomial>) -> Self {
        PolyIdeal { ring_dim, generators, cache: Mutex::new(HashMap::new()) }
    }

    pub fn zero(ring_dim: usize) -> Self {
        Self::from_homogeneous(ring_dim, Vec::new())
    }

    pub fn unit(ring_dim: usize) -> Self {
        Self::from_homogeneous(ring_dim, vec![Polynomial::one(ring_dim)])
    }

    /// Monomial ideal from exponent vectors.
    pub fn monomial(ring_dim: usize, exps: &[Vec<u32>]) -> Result<Self> {
        Self::new(ring_dim, exps.iter().map(|e| Polynomial::monomial(Monomial::new(e.clone()))).collect())
    }

    pub fn ring_dim(&self) -> usize {
        self.ring_dim
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(Polynomial::is_monomial)
    }

    pub fn groebner_basis(&self) -> Arc<GroebnerBasis> {
        self.groebner_basis_in(MonomialOrder::DegRevLex)
    }

    pub fn groebner_basis_in(&self, order: MonomialOrder) -> Arc<GroebnerBasis> {
        let mut cache = self.cache.lock().unwrap();
        cache
            .entry(order)
            .or_insert_with(|| Arc::new(buchberger(self.ring_dim, &self.generators, order)))
            .clone()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner_basis().contains(f)
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    /// Ideal equality through reduced degrevlex bases.
    pub fn same_ideal(&self, other: &PolyIdeal) -> bool {
        self.ring_dim == other.ring_dim && self.groebner_basis() == other.groebner_basis()
    }

    pub fn is_subset_of(&self, other: &PolyIdeal) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    /// Minimal monomial generators of a monomial ideal, sorted.
    pub fn minimal_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_monomial() {
            return Err(Error::NotMonomial);
        }
        Ok(minimalize(self.generators.iter().map(|g| g.terms()[0].0.clone()).collect()))
    }

    /// The monomial ideal of leading monomials of the reduced basis.
    pub fn initial_ideal(&self, order: MonomialOrder) -> PolyIdeal {
        let gb = self.groebner_basis_in(order);
        let gens = gb.leading_monomials().into_iter().map(Polynomial::monomial).collect();
        Self::from_homogeneous(self.ring_dim, gens)
    }

    pub fn add_generators(&self, extra: &[Polynomial]) -> Result<PolyIdeal> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Self::new(self.ring_dim, gens)
    }

    /// `(I : f) = { g : f g in I }` via `I ∩ (f)`, computed by eliminating an
    /// auxiliary variable `w` from `w I + (1 - w) f`.
    pub fn colon(&self, f: &Polynomial) -> Result<PolyIdeal> {
        if f.is_zero() {
            return Err(Error::BadParams("colon by the zero polynomial".into()));
        }
        if f.nvars() != self.ring_dim {
            return Err(Error::RingMismatch { expected: self.ring_dim, found: f.nvars() });
        }
        if !f.is_homogeneous() {
            return Err(Error::BadParams("colon needs a homogeneous element".into()));
        }
        if self.generators.is_empty() {
            return Ok(PolyIdeal::zero(self.ring_dim));
        }
        let n = self.ring_dim;
        let w = Polynomial::var(n + 1, n);
        let f_up = f.insert_var(n);
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.insert_var(n).mul(&w)).collect();
        gens.push(f_up.sub(&f_up.mul(&w)));
        let gb = buchberger(n + 1, &gens, MonomialOrder::Elimination { var: n });
        let quotients = gb
            .elements()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exp(n) == 0))
            .map(|g| g.remove_var(n).div_exact(f).expect("element of (f) is divisible by f"))
            .collect();
        Self::new(n, quotients)
    }

    /// `(I : g)` for a linear form, via a coordinate change sending `g` to the
    /// last variable and dividing the degrevlex basis by it.
    pub fn colon_by_linear(&self, g: &LinearForm) -> Result<PolyIdeal> {
        let (_, gb) = self.transformed_basis(g)?;
        let cc = CoordinateChange::sending_to_last(g);
        let last = self.ring_dim - 1;
        let gens = gb.elements().iter().map(|p| cc.invert(&divide_out_var_once(p, last))).collect();
        Self::new(self.ring_dim, gens)
    }

    /// Degrevlex basis of the ideal after the coordinate change sending `g` to
    /// the last variable, together with the transformed ideal.
    pub(crate) fn transformed_basis(&self, g: &LinearForm) -> Result<(PolyIdeal, Arc<GroebnerBasis>)> {
        if g.nvars() != self.ring_dim {
            return Err(Error::RingMismatch { expected: self.ring_dim, found: g.nvars() });
        }
        let cc = CoordinateChange::sending_to_last(g);
        let moved =
            Self::from_homogeneous(self.ring_dim, self.generators.iter().map(|p| cc.apply(p)).collect());
        let gb = moved.groebner_basis();
        Ok((moved, gb))
    }

    /// The ideal `I'` in `d - 1` variables with `R'/I' = R/(I + (f))`,
    /// obtained by solving `f = 0` for its pivot variable.
    pub fn quotient_by_linear(&self, f: &LinearForm) -> Result<PolyIdeal> {
        Ok(self.quotient_by_linear_with(f)?.0)
    }

    pub(crate) fn quotient_by_linear_with(&self, f: &LinearForm) -> Result<(PolyIdeal, LinearSubstitution)> {
        if f.nvars() != self.ring_dim {
            return Err(Error::RingMismatch { expected: self.ring_dim, found: f.nvars() });
        }
        let sub = LinearSubstitution::new(f);
        let gens = self.generators.iter().map(|p| sub.apply(p)).collect();
        Ok((Self::new(self.ring_dim - 1, gens)?, sub))
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        IdealDisplay { ideal: self, names }
    }
}

/// Drops monomials divisible by another one and sorts the rest.
pub(crate) fn minimalize(mut monos: Vec<Monomial>) -> Vec<Monomial> {
    monos.sort();
    monos.dedup();
    monos.sort_by_key(Monomial::degree);
    let mut out: Vec<Monomial> = Vec::new();
    for m in monos {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

fn divide_out_var_once(p: &Polynomial, var: usize) -> Polynomial {
    if p.terms().iter().all(|(m, _)| m.exp(var) > 0) {
        let x = Monomial::var(p.nvars(), var);
        Polynomial::from_terms(
            p.nvars(),
            p.terms().iter().map(|(m, c)| (x.quotient_of(m).unwrap(), c.clone())),
        )
    } else {
        p.clone()
    }
}

struct IdealDisplay<'a> {
    ideal: &'a PolyIdeal,
    names: &'a [String],
}

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.ideal.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display_with(self.names))?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for PolyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = super::default_names(self.ring_dim);
        let shown = self.display_with(&names);
        write!(f, "{shown}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    /// (x1*y1, x2*y1) in variables (x1, x2, y1)
    fn pq() -> PolyIdeal {
        PolyIdeal::new(3, vec![v(3, 0).mul(&v(3, 2)), v(3, 1).mul(&v(3, 2))]).unwrap()
    }

    #[test]
    fn rejects_inhomogeneous() {
        let bad = v(2, 0).add(&v(2, 1).pow(2));
        assert!(PolyIdeal::new(2, vec![bad]).is_err());
    }

    #[test]
    fn colon_examples() {
        let c = pq().colon(&v(3, 2)).unwrap();
        let expect = PolyIdeal::new(3, vec![v(3, 0), v(3, 1)]).unwrap();
        assert!(c.same_ideal(&expect));

        let sq = PolyIdeal::new(2, vec![v(2, 0).pow(2)]).unwrap();
        assert!(sq.colon(&v(2, 1)).unwrap().same_ideal(&sq));

        let x1 = PolyIdeal::new(1, vec![v(1, 0)]).unwrap();
        assert!(x1.colon(&v(1, 0)).unwrap().is_unit());
    }

    #[test]
    fn colon_routes_agree() {
        let ideal = pq();
        let g = LinearForm::from_i64(&[1, 0, 1]).unwrap();
        let a = ideal.colon(&g.to_polynomial()).unwrap();
        let b = ideal.colon_by_linear(&g).unwrap();
        assert!(a.same_ideal(&b));
        let g = LinearForm::var(3, 2);
        assert!(ideal.colon(&g.to_polynomial()).unwrap().same_ideal(&ideal.colon_by_linear(&g).unwrap()));
    }

    #[test]
    fn colon_contains_ideal() {
        let ideal = pq();
        let f = v(3, 0).add(&v(3, 2));
        let c = ideal.colon(&f).unwrap();
        assert!(ideal.is_subset_of(&c));
        for g in c.generators() {
            assert!(ideal.contains(&f.mul(g)));
        }
    }

    #[test]
    fn quotient_by_linear_examples() {
        let f = LinearForm::from_i64(&[-1, 0, 1]).unwrap();
        let q = pq().quotient_by_linear(&f).unwrap();
        let expect = PolyIdeal::new(2, vec![v(2, 0).pow(2), v(2, 0).mul(&v(2, 1))]).unwrap();
        assert!(q.same_ideal(&expect));

        let z = PolyIdeal::zero(3).quotient_by_linear(&LinearForm::var(3, 2)).unwrap();
        assert_eq!(z.ring_dim(), 2);
        assert!(z.generators().is_empty());
    }

    #[test]
    fn initial_ideal_of_principal() {
        let f = v(2, 0).mul(&v(2, 1)).add(&v(2, 1).pow(2));
        let ideal = PolyIdeal::new(2, vec![f.clone()]).unwrap();
        let init = ideal.initial_ideal(MonomialOrder::DegRevLex);
        assert_eq!(init.generators(), &[Polynomial::monomial(f.leading().unwrap().0.clone())]);
        let mono = pq().initial_ideal(MonomialOrder::DegRevLex);
        assert!(mono.same_ideal(&pq()));
    }

    #[test]
    fn cache_is_shared() {
        let ideal = pq();
        let a = ideal.groebner_basis();
        let b = ideal.groebner_basis();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
