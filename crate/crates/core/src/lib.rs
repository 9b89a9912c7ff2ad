//! Exact engine for Ratliff-Rush closures, integral closures of monomial
//! ideals, associated primes, associated-graded depth probes and reduction
//! numbers over polynomial, quotient and semigroup rings.

pub mod algebra;
pub mod error;

pub use error::{AlgebraError, Result};
pub mod ideal;
pub mod lp;
pub mod monomial_ideal;

pub use ideal::{IdealRing, PowerLadder};
pub use monomial_ideal::MonomialIdeal;
pub mod groebner;

pub use groebner::IdealHandle;
pub mod ratliff_rush;
pub mod reductions;
pub mod semigroup_rings;
pub mod lang;
pub mod corpus;
