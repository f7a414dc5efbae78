//! Graded dimensions by linear algebra against the Groebner series.
//!
//! Run with `cargo run --example oracle_check`.

use hilbcalc::dsl::parse_polynomial;
use hilbcalc::oracle::{verify_series_against, GradedDimensionProfile};
use hilbcalc::poly::PolyIdeal;
use hilbcalc::presentation::CyclicModule;

fn main() {
    let names: Vec<String> = ["a", "b", "c"].map(String::from).to_vec();
    let gens: Vec<_> = ["a^2 + 1/2*b*c", "a*b - 3*c^2", "b^3"]
        .iter()
        .map(|g| parse_polynomial(&names, g).unwrap())
        .collect();
    let profile = GradedDimensionProfile::compute(3, &gens, 10);
    let dims: Vec<String> = profile.dims.iter().map(ToString::to_string).collect();
    println!("dim_Q (R/I)_n for n = 0..=10: {}", dims.join(" "));

    let m = CyclicModule::new(PolyIdeal::new(3, gens).unwrap(), 1);
    let cmp = verify_series_against(&m, &m.series(), 10);
    println!("shifted by 1, series {}", m.series());
    println!("agrees: {} (mismatches {:?})", cmp.agrees(), cmp.mismatches);
}
