//! The coefficient comparison between a module and its quotient by a
//! superficial system of parameters, on both built-in example families.
//!
//! Run with `cargo run --release --example theorem_check`.

use hilbcalc::superficial::DEFAULT_TRIALS;
use hilbcalc::theorem::{
    embedded_module, embedded_ssop, embedded_suite, two_component_suite, verify_comparison,
};

fn main() {
    let (d, s) = (4, 2);
    let m = embedded_module(d, s).unwrap();
    for i in 0..s {
        let fs = embedded_ssop(d, s, i);
        let r = verify_comparison(&m, &fs, i, 0, DEFAULT_TRIALS).unwrap();
        println!(
            "R/mp, d={d}, s={s}, i={i}: e_M = {}, e_Q = {}, equality {}, depth {}, defects {:?}, pass {}",
            r.e_m,
            r.e_q,
            r.equality,
            r.depth_value,
            r.defect_lengths.iter().map(ToString::to_string).collect::<Vec<_>>(),
            r.passed()
        );
    }

    for (d, s) in [(3, 1), (5, 3)] {
        let suite = embedded_suite(d, s, 0, DEFAULT_TRIALS).unwrap();
        println!("{} {:?}: {} cells, pass {}", suite.name, suite.params, suite.cells.len(), suite.passed());
    }
    for (r, s) in [(1, 2), (2, 3), (2, 4)] {
        let suite = two_component_suite(r, s, 0, DEFAULT_TRIALS).unwrap();
        for cell in suite.cells.iter().filter(|c| c.label.contains("e_")) {
            println!("  r={r} s={s} {}: {}", cell.label, cell.actual);
        }
        println!("{} {:?}: pass {}", suite.name, suite.params, suite.passed());
    }
}
