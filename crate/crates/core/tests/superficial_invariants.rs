mod common;

use common::{linear_form, monomial_ideal};
use hilbcalc::poly::{LinearForm, PolyIdeal};
use hilbcalc::presentation::CyclicModule;
use hilbcalc::series::{shift_coefficients, Dimension};
use hilbcalc::superficial::{depth, find_superficial_sequence, is_superficial, QuotientChain, Verdict};
use hilbcalc::theorem::{embedded_module, embedded_ssop, two_component_module, two_component_ssop};
use proptest::prelude::*;

const TRIALS: usize = 32;

/// Every worked-example module with the full ssop used at index 0.
fn worked_examples() -> Vec<(String, CyclicModule, Vec<LinearForm>)> {
    let mut out = Vec::new();
    for d in 2..=6 {
        for s in 1..d {
            out.push((format!("R/mp d={d} s={s}"), embedded_module(d, s).unwrap(), embedded_ssop(d, s, 0)));
        }
    }
    for s in 2..=5 {
        for r in 1..s {
            out.push((
                format!("R/pq r={r} s={s}"),
                two_component_module(r, s).unwrap(),
                two_component_ssop(r, s, 0),
            ));
        }
    }
    out
}

fn dim(m: &CyclicModule) -> usize {
    match m.dimension() {
        Dimension::Finite(s) => s,
        Dimension::MinusInfinity => panic!("zero module"),
    }
}

#[test]
fn full_sops_are_certified_and_cut_dimension_by_one() {
    for (label, m, fs) in worked_examples() {
        let s = dim(&m);
        let cert = find_superficial_sequence(&m, &fs, 0, TRIALS).unwrap();
        assert_eq!(cert.verdict, Verdict::Certified, "{label}");
        let mut chain = QuotientChain::new(&m);
        for (j, g) in cert.witness.unwrap().iter().enumerate() {
            let img = chain.map_form(g).unwrap();
            assert!(is_superficial(chain.current(), &img).unwrap().is_superficial, "{label} step {j}");
            chain.push(g).unwrap();
            assert_eq!(chain.current().dimension(), Dimension::Finite(s - j - 1), "{label} step {j}");
        }
    }
}

#[test]
fn depth_drops_along_superficial_sequences() {
    for (label, m, fs) in worked_examples() {
        let s = dim(&m);
        let depth_m = depth(&m, 0, TRIALS).unwrap().depth;
        let witness = find_superficial_sequence(&m, &fs, 0, TRIALS).unwrap().witness.unwrap();
        let mut chain = QuotientChain::new(&m);
        for (n, g) in witness.iter().enumerate().take(s - 1) {
            chain.push(g).unwrap();
            let depth_q = depth(chain.current(), 0, TRIALS).unwrap().depth;
            assert_eq!(depth_m > n + 1, depth_q > 0, "{label} after {} forms", n + 1);
        }
    }
}

#[test]
fn depth_certificates_replay() {
    for (label, m, _) in worked_examples().into_iter().step_by(3) {
        assert_eq!(depth(&m, 11, TRIALS).unwrap(), depth(&m, 11, TRIALS).unwrap(), "{label}");
    }
}

#[test]
fn linear_quotients_match_the_series_of_the_sum() {
    for (label, m, fs) in worked_examples() {
        for f in &fs {
            let small = m.quotient_by(f).unwrap().series();
            let sum = PolyIdeal::add_generators(m.ideal(), &[f.to_polynomial()]).unwrap();
            let big = CyclicModule::quotient(sum).series();
            assert_eq!(small.expansion(25), big.expansion(25), "{label} modulo {f}");
        }
    }
}

#[test]
fn shifting_a_cyclic_module_convolves_its_table() {
    for (label, m, _) in worked_examples() {
        for r in [1, 4, 10] {
            assert_eq!(
                m.with_shift(r).coefficients(),
                shift_coefficients(&m.coefficients(), r),
                "{label} r={r}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn superficial_forms_behave(i in monomial_ideal(4, 4, 3), g in linear_form(4), seed in 0u64..1000) {
        let m = CyclicModule::quotient(i);
        let Dimension::Finite(s) = m.dimension() else { return Ok(()) };
        prop_assume!(s >= 1);
        let r = is_superficial(&m, &g).unwrap();
        if r.colon_equal {
            prop_assert!(r.is_superficial);
            prop_assert_eq!(r.socle_length.clone(), Some(0.into()));
        }
        if r.is_superficial {
            prop_assert_eq!(m.quotient_by(&g).unwrap().dimension(), Dimension::Finite(s - 1));
            let d = depth(&m, seed, 64).unwrap();
            if d.depth >= 1 {
                prop_assert!(r.colon_equal, "superficial on a module of positive depth must be regular");
            }
        }
    }
}
