//! Exact Hilbert coefficients of graded modules over polynomial rings.
//!
//! ```
//! use hilbcalc::dsl::parse_polynomial;
//! use hilbcalc::poly::{LinearForm, PolyIdeal};
//! use hilbcalc::presentation::CyclicModule;
//! use hilbcalc::superficial::is_superficial;
//!
//! let names: Vec<String> = ["x", "y", "z"].map(String::from).to_vec();
//! let p = |s: &str| parse_polynomial(&names, s).unwrap();
//! let m = CyclicModule::quotient(PolyIdeal::new(3, vec![p("x*z - y^2")]).unwrap());
//!
//! assert_eq!(m.series().to_string(), "(1 - t^2) / (1 - t)^3");
//! assert_eq!(m.coefficients().to_string(), "s = 2; e = (2, 1)");
//!
//! let g = LinearForm::from_i64(&[1, 0, 1]).unwrap();
//! assert!(is_superficial(&m, &g).unwrap().is_superficial);
//! ```

pub mod dsl;
pub mod error;
pub mod intpoly;
pub mod oracle;
pub mod poly;
pub mod presentation;
pub mod report;
pub mod runner;
pub mod series;
pub mod superficial;
pub mod theorem;

pub use error::{Error, Result};
