//! Betti and cohomology tables, their skeleton sequences, validation,
//! cohomology ranges and Hilbert polynomials.

mod betti;
mod cohomology;
mod diagnostics;
mod sequences;

pub use betti::{column_min_degrees, hilbert_polynomial, validate_betti, BettiTable};
pub use cohomology::{cohomology_range, validate_cohomology, CohomologyRange, CohomologyTable, Extended};
pub use diagnostics::{Diagnostics, Issue};
pub use sequences::{Chain, DegreeSequence, RootSequence};

use crate::error::Result;
use crate::exact::Scalar;

/// Tables that form a rational vector space under entrywise operations.
pub trait LinearTable<S: Scalar>: Clone {
    fn add_scaled(&self, coeff: &S, other: &Self) -> Result<Self>;
    fn is_zero(&self) -> bool;
}

impl<S: Scalar> LinearTable<S> for BettiTable<S> {
    fn add_scaled(&self, coeff: &S, other: &Self) -> Result<Self> {
        BettiTable::add_scaled(self, coeff, other)
    }

    fn is_zero(&self) -> bool {
        BettiTable::is_zero(self)
    }
}

impl<S: Scalar> LinearTable<S> for CohomologyTable<S> {
    fn add_scaled(&self, coeff: &S, other: &Self) -> Result<Self> {
        CohomologyTable::add_scaled(self, coeff, other)
    }

    fn is_zero(&self) -> bool {
        CohomologyTable::is_zero(self)
    }
}

/// `a + coeff · b`.
pub fn add_scaled<S: Scalar, T: LinearTable<S>>(a: &T, coeff: &S, b: &T) -> Result<T> {
    a.add_scaled(coeff, b)
}
