//! Hilbert series and coefficients of a few quotients of Q[x, y, z, w].
//!
//! Run with `cargo run --example hilbert_coefficients`.

use hilbcalc::dsl::parse_polynomial;
use hilbcalc::poly::{PolyIdeal, Polynomial};
use hilbcalc::presentation::CyclicModule;
use hilbcalc::series::{partial_sum_check, regular_quotient_coeffs, shift_coefficients};

fn ideal(names: &[String], gens: &[&str]) -> PolyIdeal {
    let gens: Vec<Polynomial> = gens.iter().map(|g| parse_polynomial(names, g).unwrap()).collect();
    PolyIdeal::new(names.len(), gens).unwrap()
}

fn main() {
    let names: Vec<String> = ["x", "y", "z", "w"].map(String::from).to_vec();
    let cases = [
        ("twisted cubic", vec!["x*z - y^2", "x*w - y*z", "y*w - z^2"]),
        ("two skew lines", vec!["x*z", "x*w", "y*z", "y*w"]),
        ("plane with embedded point", vec!["x^2", "x*y", "x*z", "x*w"]),
        ("quadric surface", vec!["x*w - y*z"]),
    ];
    for (label, gens) in cases {
        let m = CyclicModule::quotient(ideal(&names, &gens));
        let series = m.series();
        let table = series.hilbert_coefficients().unwrap();
        println!("{label}: R/({})", gens.join(", "));
        println!("  P(t)     = {series}");
        println!("  reduced  = {}", series.reduced());
        println!("  e        = {table}");
        println!(
            "  ebar     = {:?}",
            (0..6).map(|i| series.relative_coefficient(i).to_string()).collect::<Vec<_>>()
        );
        let n = 5;
        let check = partial_sum_check(&series, n).unwrap();
        println!("  partial sum at n={n}: {} = {} ({})", check.lhs, check.rhs, check.holds);
    }

    // coefficient transforms never touch a polynomial
    let cubic = CyclicModule::quotient(ideal(&names, &["x*z - y^2", "x*w - y*z", "y*w - z^2"]));
    let e = cubic.coefficients();
    println!("twisted cubic shifted by 2: {}", shift_coefficients(&e, 2));
    println!("twisted cubic modulo a regular quadric: {}", regular_quotient_coeffs(&e, 2).unwrap());
}
