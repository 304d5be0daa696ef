//! Exact Boij–Söderberg computations.
//!
//! Betti tables decompose into pure tables, cohomology tables of vector
//! bundles into supernatural tables, and the supporting hyperplanes of both
//! cones are produced as explicit functionals. Everything is exact and
//! generic over [`Scalar`]; the aliases below fix the usual big-rational
//! instantiation.

pub mod bounds;
pub mod decompose;
mod error;
pub mod exact;
pub mod facets;
pub mod json;
pub mod pairing;
pub mod pure;
pub mod supernatural;
pub mod tables;

pub use error::{ConeEvidence, Error, Result};
pub use exact::{Poly, Scalar};
pub use tables::{Chain, DegreeSequence, RootSequence};

/// Arbitrary-precision rational, the default scalar.
pub type Rational = num_rational::BigRational;

pub type Betti = tables::BettiTable<Rational>;
pub type Cohomology = tables::CohomologyTable<Rational>;
pub type Functional = pairing::Functional<Rational>;

/// Fixed-width variants; arithmetic panics on overflow.
pub type Betti64 = tables::BettiTable<num_rational::Rational64>;
pub type Cohomology64 = tables::CohomologyTable<num_rational::Rational64>;
