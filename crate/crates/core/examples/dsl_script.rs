//! Parses and runs a script in the input language, then prints the report
//! as text and JSON.
//!
//! Run with `cargo run --example dsl_script`.

use hilbcalc::dsl::parse_script;
use hilbcalc::report::RunOptions;
use hilbcalc::runner::execute;

const SCRIPT: &str = "
ring x1 x2 y1;
ideal I = x1*y1, x2*y1;
module M = R/I;
forms F = y1 - x1;
forms G = x1, x2;   # both forms vanish on the line
series M;
coeffs M;
superficial M F;
admissible M G;
verify M F i=1;
oracle M 10;
";

fn main() {
    let script = parse_script(SCRIPT).unwrap();
    println!("canonical form:\n{script}");
    let report = execute(&script, RunOptions::default());
    print!("{}", report.render_human());
    println!("exit code {}", report.exit_code());
    println!("{}", report.to_json_string());

    match parse_script("ring x y;\nideal I = x^2 + y;\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
