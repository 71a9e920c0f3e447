//! Coefficient rings, Laurent quotient polynomials and matrices over them.

mod element;
mod gcd;
mod matrix;
mod parse;
mod spec;

pub(crate) use element::mod_inverse;
pub use element::RingElement;
pub use gcd::{poly_divide, poly_gcd, poly_gcd_all};
pub use matrix::{RingMatrix, DEFAULT_DET_CAP};
pub use parse::{parse_element, parse_generators};
pub(crate) use spec::is_prime;
pub use spec::{Monomial, RingSpec, Variable};
