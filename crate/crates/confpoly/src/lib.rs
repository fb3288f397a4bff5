//! Exact-arithmetic engine for polynomial vector fields on R^n.
//!
//! The crate builds the conformal algebra of a flat diagonal metric of
//! signature (p, q), embeds so(p+1, q+1) into polynomial vector fields,
//! and mechanically certifies that the conformal algebra together with
//! any single non-conformal field generates every polynomial field up to
//! a chosen degree cap. All linear algebra is carried out over exact
//! scalars (the default instantiation uses arbitrary-precision
//! rationals), so ranks, memberships and reported dimensions are never
//! subject to rounding.
//!
//! The core is generic over the coefficient scalar via [`scalar::Scalar`];
//! the aliases below fix the exact rational instantiation used by the CLI
//! and the test suites.

pub mod cli;
pub mod closure;
pub mod conformal;
pub mod dsl;
pub mod error;
pub mod poly;
pub mod scalar;
pub mod span;
pub mod vector_field;

pub use error::{Error, Result};

/// Exact rational scalar: arbitrary-precision numerator and denominator,
/// always reduced, denominator positive, zero stored as 0/1.
pub type Rat = num_rational::BigRational;

/// Multivariate polynomial over [`Rat`].
pub type Poly = poly::Polynomial<Rat>;

/// Polynomial vector field over [`Rat`].
pub type VField = vector_field::VectorField<Rat>;

/// Rational square matrix, the source of linear fields.
pub type LMap = conformal::LinearMap<Rat>;

/// Echelonized rational span of a degree-capped field space.
pub type Span = span::SpanBasis<Rat>;
