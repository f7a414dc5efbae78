//! Buchberger's algorithm producing reduced Gröbner bases.
//!
//! Pairs are processed smallest-lcm-degree first. A pair is skipped when its
//! leading monomials are coprime, or by the chain criterion: some third
//! element's leading monomial divides the lcm and both of its pairs with the
//! current ones have already been handled.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use num_traits::Zero;

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::{sub_mul_sorted, Polynomial, Term};

/// A reduced Gröbner basis: monic, sorted by descending leading monomial,
/// no leading monomial dividing another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    elements: Vec<Polynomial>,
    sorted: Vec<Vec<Term>>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis generates the whole ring.
    pub fn is_unit(&self) -> bool {
        self.sorted.iter().any(|g| g[0].0.is_one())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|g| g[0].0.clone()).collect()
    }

    /// Remainder of full multivariate division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, self)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks the reducedness invariants.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        let monic = self.sorted.iter().all(|g| g[0].1 == num_traits::One::one());
        let minimal =
            lms.iter().enumerate().all(|(i, a)| lms.iter().enumerate().all(|(j, b)| i == j || !a.divides(b)));
        let tails = self.sorted.iter().all(|g| g[1..].iter().all(|(m, _)| lms.iter().all(|l| !l.divides(m))));
        monic && minimal && tails
    }
}

/// Full reduction of `f` modulo a Gröbner basis.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    assert_eq!(f.nvars(), basis.nvars, "polynomial from a different ring");
    let rem = reduce(basis.order, f.sorted_terms(basis.order), &basis.sorted);
    Polynomial::from_terms(f.nvars(), rem)
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(nvars: usize, gens: &[Polynomial], order: MonomialOrder) -> GroebnerBasis {
    let mut basis: Vec<Vec<Term>> = Vec::new();
    let mut seen: HashSet<Vec<Term>> = HashSet::new();
    for g in gens {
        assert_eq!(g.nvars(), nvars, "generator from a different ring");
        if g.is_zero() {
            continue;
        }
        let t = make_monic(g.sorted_terms(order));
        if t[0].0.is_one() {
            return unit_basis(nvars, order);
        }
        if seen.insert(t.clone()) {
            basis.push(t);
        }
    }

    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut queue: BinaryHeap<Reverse<(u32, usize, usize, usize)>> = BinaryHeap::new();
    let mut seq = 0usize;
    let mut push_pairs = |basis: &[Vec<Term>],
                          pending: &mut HashSet<(usize, usize)>,
                          queue: &mut BinaryHeap<Reverse<(u32, usize, usize, usize)>>,
                          j: usize| {
        for i in 0..j {
            let deg = basis[i][0].0.lcm(&basis[j][0].0).degree();
            pending.insert((i, j));
            queue.push(Reverse((deg, seq, i, j)));
            seq += 1;
        }
    };
    for j in 0..basis.len() {
        push_pairs(&basis, &mut pending, &mut queue, j);
    }

    while let Some(Reverse((_, _, i, j))) = queue.pop() {
        pending.remove(&(i, j));
        let (li, lj) = (&basis[i][0].0, &basis[j][0].0);
        if li.is_coprime(lj) {
            continue;
        }
        let lcm = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&lcm)
                && !pending.contains(&ordered(i, k))
                && !pending.contains(&ordered(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(order, &basis[i], &basis[j], &lcm);
        let h = reduce(order, s, &basis);
        if h.is_empty() {
            continue;
        }
        let h = make_monic(h);
        if h[0].0.is_one() {
            return unit_basis(nvars, order);
        }
        basis.push(h);
        push_pairs(&basis, &mut pending, &mut queue, basis.len() - 1);
    }

    finalize(nvars, order, basis)
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn make_monic(mut t: Vec<Term>) -> Vec<Term> {
    let inv = t[0].1.recip();
    for (_, c) in t.iter_mut() {
        *c *= &inv;
    }
    t
}

fn unit_basis(nvars: usize, order: MonomialOrder) -> GroebnerBasis {
    let one = Polynomial::one(nvars);
    GroebnerBasis { order, nvars, sorted: vec![one.sorted_terms(order)], elements: vec![one] }
}

fn s_polynomial(order: MonomialOrder, f: &[Term], g: &[Term], lcm: &Monomial) -> Vec<Term> {
    // both monic: S = (lcm / lm f) f - (lcm / lm g) g
    let mf = f[0].0.quotient_of(lcm).unwrap();
    let mg = g[0].0.quotient_of(lcm).unwrap();
    let fm: Vec<Term> = f[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_mul_sorted(order, &fm, &num_traits::One::one(), &mg, &g[1..])
}

/// Full reduction; the remainder is returned sorted by descending `order`.
fn reduce(order: MonomialOrder, f: Vec<Term>, basis: &[Vec<Term>]) -> Vec<Term> {
    let mut rem: Vec<Term> = Vec::new();
    let mut p = f;
    let mut start = 0;
    while start < p.len() {
        let (lm, lc) = (&p[start].0, &p[start].1);
        match basis.iter().find(|g| g[0].0.divides(lm)) {
            Some(g) => {
                let q = g[0].0.quotient_of(lm).unwrap();
                let c = lc / &g[0].1;
                p = sub_mul_sorted(order, &p[start..], &c, &q, g);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

fn finalize(nvars: usize, order: MonomialOrder, mut basis: Vec<Vec<Term>>) -> GroebnerBasis {
    basis.sort_by(|a, b| order.compare(&a[0].0, &b[0].0));
    // keep the first (smallest) representative of every leading monomial that
    // is not divisible by an earlier kept one
    let mut minimal: Vec<Vec<Term>> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h[0].0.divides(&g[0].0)) {
            minimal.push(g);
        }
    }
    let mut reduced: Vec<Vec<Term>> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Vec<Term>> =
            minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let head = minimal[i][0].clone();
        let tail = reduce(order, minimal[i][1..].to_vec(), &others);
        let mut g = vec![head];
        g.extend(tail.into_iter().filter(|(_, c)| !c.is_zero()));
        reduced.push(g);
    }
    reduced.sort_by(|a, b| order.compare(&b[0].0, &a[0].0));
    let elements = reduced.iter().map(|t| Polynomial::from_terms(nvars, t.iter().cloned())).collect();
    GroebnerBasis { order, nvars, elements, sorted: reduced }
}
