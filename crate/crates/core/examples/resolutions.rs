//! Series from graded free resolutions, checked against closed forms.
//!
//! Run with `cargo run --example resolutions`.

use hilbcalc::presentation::{
    closed_form_family, complete_intersection_convolution, hilbert_burch_minors_instance, ClosedFormCase,
    ResolutionPresentation,
};

fn main() {
    let cases = [
        ClosedFormCase::ShiftedFree { d: 4, r: 3 },
        ClosedFormCase::Hypersurface { d: 3, k: 4 },
        ClosedFormCase::CompleteIntersection2 { d: 3, k: 2, l: 3 },
        ClosedFormCase::HilbertBurch { d: 4, m: 3 },
    ];
    for case in cases {
        let (presentation, expected) = closed_form_family(case).unwrap();
        let actual = presentation.series().hilbert_coefficients().unwrap();
        println!("{case:?}");
        println!("  series   {}", presentation.series());
        println!("  e        {actual}  (closed form {expected})");
    }

    // 0 -> R(-5) -> R(-2) + R(-3) -> R
    let koszul = ResolutionPresentation::koszul(3, &[2, 3]).unwrap();
    println!("Koszul steps {:?}: {}", koszul.steps(), koszul.series());
    println!("convolution form: {}", complete_intersection_convolution(3, 2, 3));

    let minors = hilbert_burch_minors_instance();
    println!("ideal of 2x2 minors: {}", minors.ideal());
    println!("  e = {} from its Groebner basis", minors.coefficients());
    println!(
        "  e = {} from the resolution",
        ResolutionPresentation::hilbert_burch(3, 2).unwrap().series().hilbert_coefficients().unwrap()
    );
}
