//! Exact computation in free non-associative algebras.
//!
//! Polynomials live in one of three flavors (free magma, free commutative
//! non-associative, free associative) with coefficients in ℚ. On top of the
//! arithmetic the crate provides formal partial derivatives, Taylor
//! expansions with constant coefficients, bases of the algebra of constants,
//! a free generating set for the constants of the one-variable magma
//! algebra, symmetric-group decompositions of the multilinear components,
//! and solutions of linear ODEs with constant coefficients over truncated
//! formal power series.

pub mod cli;
pub mod constants;
pub mod error;
pub mod expr;
pub mod linalg;
pub mod monomial;
pub mod ode;
pub mod operator;
pub mod polynomial;
pub mod rep;
pub mod series;
pub mod taylor;
pub mod verify;

pub use error::{Error, Result};
pub use monomial::{enumerate_monomials, Flavor, Monomial, MultiDegree, Var};
pub use operator::{MultiplicationOperator, OperatorAtom, OperatorSum};
pub use polynomial::{Polynomial, Q};
