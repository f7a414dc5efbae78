//! Superficial elements, admissible sequences and depth certificates.
//!
//! Run with `cargo run --example superficial_sequences`.

use hilbcalc::dsl::parse_polynomial;
use hilbcalc::poly::{LinearForm, PolyIdeal};
use hilbcalc::presentation::CyclicModule;
use hilbcalc::superficial::{depth, find_superficial_sequence, is_superficial, QuotientChain};

fn main() {
    // a plane and a line in 3-space meeting at the origin
    let names: Vec<String> = ["x1", "x2", "y1"].map(String::from).to_vec();
    let p = |s: &str| parse_polynomial(&names, s).unwrap();
    let m = CyclicModule::quotient(PolyIdeal::new(3, vec![p("x1*y1"), p("x2*y1")]).unwrap());
    println!("M = R/{}, dim {}", m.ideal().display_with(&names), m.dimension());

    for text in ["x1", "y1", "y1 - x1", "x1 + x2 + y1"] {
        let g = LinearForm::from_polynomial(&p(text)).unwrap();
        let r = is_superficial(&m, &g).unwrap();
        let socle = r.socle_length.map_or("-".into(), |l| l.to_string());
        println!(
            "  {text:>14}: superficial {}, regular {}, l(0 : g) = {socle}",
            r.is_superficial, r.colon_equal
        );
    }

    let forms: Vec<LinearForm> =
        ["x1", "x2 + y1"].iter().map(|s| LinearForm::from_polynomial(&p(s)).unwrap()).collect();
    let cert = find_superficial_sequence(&m, &forms, 7, 32).unwrap();
    println!("search in span(x1, x2 + y1): {} after {} candidates", cert.verdict, cert.trials_used);
    if let Some(w) = &cert.witness {
        let shown: Vec<String> = w.iter().map(|f| f.display_with(&names).to_string()).collect();
        println!("  witness ({}), socle lengths {:?}", shown.join(", "), cert.socle_lengths);
    }

    let mut chain = QuotientChain::new(&m);
    for f in &forms {
        chain.push(f).unwrap();
        println!("  after {}: e = {}", f.display_with(&names), chain.current().coefficients());
    }

    let d = depth(&m, 0, 32).unwrap();
    let chain: Vec<String> = d.chain.iter().map(|f| f.display_with(&names).to_string()).collect();
    println!(
        "depth {} via ({}); stop {:?}, probabilistic {}",
        d.depth,
        chain.join(", "),
        d.stop,
        d.is_probabilistic()
    );
}
