//! Polynomial arithmetic over a field: monomial orders, Gröbner bases,
//! Hilbert series and degree-graded linear algebra.

mod field;
mod groebner;
mod hilbert;
mod linalg;
mod monomial;
mod polynomial;

pub use field::{Field, PrimeField, Rationals};
pub use groebner::{
    buchberger, buchberger_with_stats, ideal_intersection, ideal_membership,
    krull_dimension_of_supports, BuchbergerStats, GroebnerBasis,
};
pub use hilbert::{hilbert_data, hilbert_numerator, HilbertData};
pub use linalg::SparseEchelon;
pub use monomial::{monomials_of_degree, Monomial, MonomialOrder, OrderKind};
pub use polynomial::{IntPoly, PolyRing, Polynomial};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected {expected} variables, found {found}")]
    VariableMismatch { expected: usize, found: usize },
    #[error("polynomial and basis use different monomial orders")]
    OrderMismatch,
}
