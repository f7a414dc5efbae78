#![allow(dead_code)]

use hilbcalc::poly::{LinearForm, Monomial, PolyIdeal, Polynomial, Rational};
use proptest::prelude::*;

pub fn names(n: usize) -> Vec<String> {
    hilbcalc::poly::default_names(n)
}

/// Exponent vector of total degree `deg` in `n` variables.
pub fn exponents(n: usize, deg: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..n, deg as usize).prop_map(move |vars| {
        let mut e = vec![0u32; n];
        for v in vars {
            e[v] += 1;
        }
        e
    })
}

/// Homogeneous polynomial of degree `deg` with small integer coefficients; may be zero.
pub fn homogeneous(n: usize, deg: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((exponents(n, deg), -4i64..=4), 1..=3).prop_map(move |terms| {
        Polynomial::from_terms(
            n,
            terms.into_iter().map(|(e, c)| (Monomial::new(e), Rational::from_integer(c.into()))),
        )
    })
}

pub fn nonzero_homogeneous(n: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    (1..=max_deg).prop_flat_map(move |d| homogeneous(n, d)).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ideal(n: usize, max_gens: usize, max_deg: u32) -> impl Strategy<Value = PolyIdeal> {
    prop::collection::vec(nonzero_homogeneous(n, max_deg), 1..=max_gens)
        .prop_map(move |gens| PolyIdeal::new(n, gens).unwrap())
}

pub fn monomial_ideal(n: usize, max_gens: usize, max_deg: u32) -> impl Strategy<Value = PolyIdeal> {
    prop::collection::vec((1..=max_deg).prop_flat_map(move |d| exponents(n, d)), 1..=max_gens)
        .prop_map(move |exps| PolyIdeal::monomial(n, &exps).unwrap())
}

pub fn linear_form(n: usize) -> impl Strategy<Value = LinearForm> {
    prop::collection::vec(-3i64..=3, n)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| LinearForm::from_i64(&c).unwrap())
}
