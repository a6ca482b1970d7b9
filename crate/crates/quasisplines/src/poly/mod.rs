//! Exact multivariate polynomial arithmetic over the rationals with
//! pluggable monomial orders and a distinguished block of base parameters.

pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod ring;

pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_polynomial, parse_rational};
pub use polynomial::{Polynomial, Rational};
pub use ring::PolyRing;
