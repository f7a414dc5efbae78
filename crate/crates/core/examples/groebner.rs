//! Reduced Groebner bases, normal forms and colon ideals.
//!
//! Run with `cargo run --example groebner`.

use hilbcalc::dsl::parse_polynomial;
use hilbcalc::poly::{buchberger, LinearForm, MonomialOrder, PolyIdeal};

fn main() {
    let names: Vec<String> = ["x", "y", "z"].map(String::from).to_vec();
    let p = |s: &str| parse_polynomial(&names, s).unwrap();
    let gens = vec![p("x^2 - y*z"), p("x*y - z^2"), p("y^2 - x*z")];

    for order in [MonomialOrder::DegRevLex, MonomialOrder::Elimination { var: 0 }] {
        let gb = buchberger(3, &gens, order);
        println!("{order:?}: {} elements, reduced = {}", gb.len(), gb.is_reduced());
        for g in gb.elements() {
            println!("    {}", g.display_with(&names));
        }
    }

    let ideal = PolyIdeal::new(3, gens).unwrap();
    let gb = ideal.groebner_basis();
    let f = p("x^3 + y^3 + z^3");
    println!("normal form of x^3 + y^3 + z^3: {}", gb.normal_form(&f).display_with(&names));
    println!("x^3 - y^3 in ideal: {}", ideal.contains(&p("x^3 - y^3")));

    let g = LinearForm::var(3, 0);
    let colon = ideal.colon_by_linear(&g).unwrap();
    println!("I : x = {}", colon.display_with(&names));
    println!(
        "initial ideal (degrevlex) = {}",
        ideal.initial_ideal(MonomialOrder::DegRevLex).display_with(&names)
    );
    let quotient = ideal.quotient_by_linear(&LinearForm::from_i64(&[1, -1, 0]).unwrap()).unwrap();
    println!("image modulo x - y, in two variables: {quotient}");
}
