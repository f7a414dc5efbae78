mod common;

use common::{ideal, monomial_ideal, nonzero_homogeneous};
use hilbcalc::oracle::{module_dimensions, verify_series, GradedDimensionProfile};
use hilbcalc::presentation::{series_of_monomial_quotient, CyclicModule};
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn series_matches_linear_algebra(i in ideal(3, 3, 3), shift in 0usize..=2) {
        prop_assert!(verify_series(&CyclicModule::new(i, shift), 8));
    }

    #[test]
    fn monomial_recursion_matches_groebner_route(i in monomial_ideal(4, 5, 4)) {
        let direct = series_of_monomial_quotient(4, &i).unwrap();
        let m = CyclicModule::quotient(i);
        prop_assert_eq!(direct.expansion(13), module_dimensions(&m, 12));
    }

    #[test]
    fn more_generators_never_increase_dimensions(i in ideal(3, 2, 2), f in nonzero_homogeneous(3, 3)) {
        let small = GradedDimensionProfile::compute(3, i.generators(), 7);
        let mut gens = i.generators().to_vec();
        gens.push(f);
        let big = GradedDimensionProfile::compute(3, &gens, 7);
        for (a, b) in small.dims.iter().zip(&big.dims) {
            prop_assert!(b <= a);
            prop_assert!(*b >= BigInt::from(0));
        }
    }
}
