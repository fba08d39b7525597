//! Exact multivariate polynomial arithmetic: coefficient fields, monomials,
//! monomial orders, multivariate division and S-polynomials.

mod coeff;
mod monomial;
mod order;
mod polynomial;

use thiserror::Error;

pub use coeff::{is_prime, Characteristic, Coefficient, Fp, PrimeField};
pub(crate) use coeff::{mul_mod, pow_mod};
pub use monomial::{Monomial, VarContext};
pub use order::{is_compatible_order, MonomialOrder, OrderKind};
pub use polynomial::{normal_form, s_polynomial, Polynomial};

/// Rational coefficients, the characteristic-zero default.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("monomial has {found} variables, context has {expected}")]
    ContextMismatch { expected: usize, found: usize },
    #[error("invalid variable context: {0}")]
    InvalidContext(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
}
