//! Multivariate polynomials over the rationals, Gröbner bases, and the ideal
//! operations needed for Hilbert series, colons and linear quotients.

mod groebner;
mod ideal;
mod linear;
mod monomial;
mod polynomial;

pub use groebner::{buchberger, normal_form, GroebnerBasis};
pub(crate) use ideal::minimalize;
pub use ideal::PolyIdeal;
pub(crate) use linear::random_form_from;
pub use linear::{
    random_linear_form, rank, CoordinateChange, LinearForm, LinearSubstitution, DEFAULT_COEFF_BOUND,
};
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::{default_names, Polynomial, Rational};
