//! Exact fields, monomials, monomial orders and sparse multivariate polynomials.

mod field;
mod io;
mod monomial;
mod polynomial;

pub use field::{is_prime, pow_mod, prime_factors, primitive_root, Field, Scalar, MAX_PRIME};
pub use io::{PolynomialJson, TermJson};
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use polynomial::{Polynomial, Ring};
