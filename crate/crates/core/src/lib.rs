//! Exact-arithmetic Pizzetti integration on spheres, balls, subspheres,
//! sub-balls and spherical caps, together with the Funk (spherical Radon)
//! transform, its duals and its two inversion formulas.
//!
//! Everything here is `no_std` with `alloc`: polynomials carry arbitrary
//! precision rational coefficients, and every closed-form constant lives in
//! the class `rational * pi^(h/2) * sqrt(q)` ([`ExactScalar`]). Numeric
//! renderings use an arbitrary-precision binary float ([`Float`]).
//!
//! The [`oracle`] module integrates by monomial moments and Gauss-Legendre
//! quadrature only, so it can be used to check the operator formulas.
#![no_std]

extern crate alloc;

pub mod error;
pub mod float;
pub mod funk;
pub mod harmonics;
pub mod oracle;
pub mod pizzetti;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
pub use float::Float;
pub use poly::{Monomial, Polynomial, RationalPoint};
pub use scalar::{ClosedForm, ExactScalar, NumericScalar, Precision};

/// Arbitrary-precision rational; always normalized with a positive denominator.
pub type Rational = num_rational::BigRational;
