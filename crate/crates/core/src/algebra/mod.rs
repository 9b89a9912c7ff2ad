//! Exact scalars, monomials, term orders, polynomials and ring descriptors.

mod monomial;
mod order;
mod poly;
mod ring;
mod scalar;

pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use poly::{Polynomial, Term};
pub use ring::Ring;
pub use scalar::{Field, Scalar};
