//! The bilinear pairing between Betti tables and cohomology tables, its
//! `(cutoff, τ)` modification, and both families of coefficient tables.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::{primitive_factor, Scalar};
use crate::pure::hk_pure_values;
use crate::tables::{BettiTable, CohomologyTable, DegreeSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Positions are `(column i, degree j)`; the window bounds display rows `j - i`.
    Betti,
    /// Positions are `(row i, twist d)`; the window bounds twists.
    Cohomology,
}

/// A linear form on Betti or cohomology tables with finitely many nonzero
/// coefficients, materialized over an explicit window.
///
/// `size` is the largest column (Betti side) or row (cohomology side).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Functional<S = BigRational> {
    orientation: Orientation,
    size: usize,
    window: (i64, i64),
    coefficients: BTreeMap<(usize, i64), S>,
}

impl<S: Scalar> Functional<S> {
    pub fn new(orientation: Orientation, size: usize, window: (i64, i64)) -> Self {
        Functional { orientation, size, window, coefficients: BTreeMap::new() }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn window(&self) -> (i64, i64) {
        self.window
    }

    /// Whether `(i, k)` lies inside the window.
    pub fn covers(&self, i: usize, k: i64) -> bool {
        let t = match self.orientation {
            Orientation::Betti => k - i as i64,
            Orientation::Cohomology => k,
        };
        i <= self.size && t >= self.window.0 && t <= self.window.1
    }

    pub fn get(&self, i: usize, k: i64) -> S {
        self.coefficients.get(&(i, k)).cloned().unwrap_or_else(S::zero)
    }

    /// Coefficient in display position: column `i`, row `ℓ` on the Betti side;
    /// row `i`, column `D` (twist `D - i`) on the cohomology side.
    pub fn display(&self, i: usize, at: i64) -> S {
        match self.orientation {
            Orientation::Betti => self.get(i, i as i64 + at),
            Orientation::Cohomology => self.get(i, at - i as i64),
        }
    }

    /// Positions outside the window are ignored.
    pub fn set(&mut self, i: usize, k: i64, v: S) {
        if !self.covers(i, k) || v.is_zero() {
            self.coefficients.remove(&(i, k));
        } else {
            self.coefficients.insert((i, k), v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, &S)> + '_ {
        self.coefficients.iter().map(|(&(i, k), v)| (i, k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::new(self.orientation, self.size, self.window);
        for (i, k, v) in self.iter() {
            out.set(i, k, v.clone() * c.clone());
        }
        out
    }

    /// Rescaled to integers with gcd 1, keeping signs.
    pub fn primitive(&self) -> Self {
        match primitive_factor(self.coefficients.values()) {
            Some(k) => self.scale(&k),
            None => self.clone(),
        }
    }

    /// The same coefficients over a smaller window.
    pub fn restrict(&self, window: (i64, i64)) -> Self {
        let mut out = Self::new(self.orientation, self.size, window);
        for (i, k, v) in self.iter() {
            out.set(i, k, v.clone());
        }
        out
    }

    /// `Σ coefficient · β`; every nonzero entry of `b` must lie in the window.
    pub fn evaluate_betti(&self, b: &BettiTable<S>) -> Result<S> {
        if self.orientation != Orientation::Betti {
            return Err(Error::IncompatibleShapes("cohomology-side functional applied to a Betti table".into()));
        }
        let mut total = S::zero();
        for (i, j, v) in b.iter() {
            if !self.covers(i, j) {
                return Err(Error::WindowTooNarrow(format!(
                    "Betti entry ({i}, {j}) lies outside functional rows [{}, {}]",
                    self.window.0, self.window.1
                )));
            }
            total = total + self.get(i, j) * v.clone();
        }
        Ok(total)
    }

    /// `Σ coefficient · γ`, reading the table at every coefficient position.
    pub fn evaluate_cohomology(&self, c: &CohomologyTable<S>) -> Result<S> {
        if self.orientation != Orientation::Cohomology {
            return Err(Error::IncompatibleShapes("Betti-side functional applied to a cohomology table".into()));
        }
        let mut total = S::zero();
        for (i, d, v) in self.iter() {
            total = total + v.clone() * c.value(i, d)?;
        }
        Ok(total)
    }
}

/// Whether the term `β_{i,k} γ(j, -k)` enters the pairing.
///
/// Unmodified: all `j <= i`. Modified by `(cutoff, τ)`: `j < τ` or `j <= i - 2`,
/// plus `j = τ` with `i = τ + ε`, `ε ∈ {0, 1}`, restricted to `k <= cutoff + ε`.
fn admitted(i: usize, j: usize, k: i64, modification: Option<(i64, usize)>) -> bool {
    if j > i {
        return false;
    }
    let Some((cutoff, tau)) = modification else {
        return true;
    };
    j < tau || j + 2 <= i || (j == tau && i == tau && k <= cutoff) || (j == tau && i == tau + 1 && k <= cutoff + 1)
}

fn sign<S: Scalar>(e: usize) -> S {
    if e % 2 == 0 {
        S::one()
    } else {
        -S::one()
    }
}

fn gamma<S: Scalar>(c: &CohomologyTable<S>, j: usize, d: i64) -> Result<S> {
    c.value(j, d).map_err(|e| match e {
        Error::IncompleteTable if c.complete() => e,
        Error::IncompleteTable => Error::WindowTooNarrow(format!(
            "γ({j}, {d}) is outside the window [{}, {}] of an incomplete table",
            c.window().0,
            c.window().1
        )),
        e => e,
    })
}

fn pair_with<S: Scalar>(b: &BettiTable<S>, c: &CohomologyTable<S>, modification: Option<(i64, usize)>) -> Result<S> {
    let mut total = S::zero();
    for (i, k, beta) in b.iter() {
        for j in 0..=i.min(c.m()) {
            if admitted(i, j, k, modification) {
                total = total + sign::<S>(i - j) * beta.clone() * gamma(c, j, -k)?;
            }
        }
    }
    Ok(total)
}

/// `⟨β, γ⟩ = Σ_{j <= i} (-1)^{i-j} β_{i,k} γ(j, -k)`.
pub fn pair<S: Scalar>(b: &BettiTable<S>, c: &CohomologyTable<S>) -> Result<S> {
    pair_with(b, c, None)
}

/// `⟨β, γ⟩_{cutoff, τ}`.
pub fn pair_modified<S: Scalar>(b: &BettiTable<S>, c: &CohomologyTable<S>, cutoff: i64, tau: usize) -> Result<S> {
    if tau + 1 > b.n() {
        return Err(Error::InvalidArgument(format!("tau = {tau} must be at most n - 1 = {}", b.n() as i64 - 1)));
    }
    pair_with(b, c, Some((cutoff, tau)))
}

fn betti_functional_with<S: Scalar>(
    c: &CohomologyTable<S>,
    modification: Option<(i64, usize)>,
    rows: (i64, i64),
) -> Result<Functional<S>> {
    let n = c.m() + 1;
    let mut f = Functional::new(Orientation::Betti, n, rows);
    for i in 0..=n {
        for l in rows.0..=rows.1 {
            let k = i as i64 + l;
            let mut v = S::zero();
            for j in 0..=i.min(c.m()) {
                if admitted(i, j, k, modification) {
                    v = v + sign::<S>(i - j) * gamma(c, j, -k)?;
                }
            }
            f.set(i, k, v);
        }
    }
    Ok(f)
}

/// The coefficients of `β ↦ ⟨β, γ⟩_{cutoff, τ}` over display rows `rows`,
/// for Betti tables over `n = m + 1` variables.
pub fn betti_functional<S: Scalar>(c: &CohomologyTable<S>, cutoff: i64, tau: usize, rows: (i64, i64)) -> Result<Functional<S>> {
    betti_functional_with(c, Some((cutoff, tau)), rows)
}

/// The coefficients of `β ↦ ⟨β, γ⟩`.
pub fn unmodified_betti_functional<S: Scalar>(c: &CohomologyTable<S>, rows: (i64, i64)) -> Result<Functional<S>> {
    betti_functional_with(c, None, rows)
}

fn cohomology_functional_with<S: Scalar>(
    f: &DegreeSequence,
    modification: Option<(i64, usize)>,
    window: Option<(i64, i64)>,
) -> Result<Functional<S>> {
    let n = f.codim();
    if n == 0 {
        return Err(Error::InvalidArgument("degree sequence needs at least two entries".into()));
    }
    let m = n - 1;
    let natural = (-f.get(n), -f.get(0));
    let window = window.unwrap_or(natural);
    if window.0 > natural.0 || window.1 < natural.1 {
        return Err(Error::WindowTooNarrow(format!(
            "twist window [{}, {}] must contain [{}, {}]",
            window.0, window.1, natural.0, natural.1
        )));
    }
    let beta: Vec<S> = hk_pure_values(f);
    let mut out = Functional::new(Orientation::Cohomology, m, window);
    for (i, b) in beta.iter().enumerate() {
        let k = f.get(i);
        for j in 0..=i.min(m) {
            if admitted(i, j, k, modification) {
                let cur = out.get(j, -k);
                out.set(j, -k, cur + sign::<S>(i - j) * b.clone());
            }
        }
    }
    Ok(out)
}

/// The coefficients of `γ ↦ ⟨F, γ⟩_{cutoff, τ}` for the primitive pure table
/// `F` with degree sequence `f` (full length `n + 1`), on `P^{n-1}`.
///
/// The twist window defaults to `[-f_n, -f_0]`, the exact support.
pub fn cohomology_functional<S: Scalar>(
    f: &DegreeSequence,
    cutoff: i64,
    tau: usize,
    window: Option<(i64, i64)>,
) -> Result<Functional<S>> {
    cohomology_functional_with(f, Some((cutoff, tau)), window)
}

/// The coefficients of `γ ↦ ⟨F, γ⟩`.
pub fn unmodified_cohomology_functional<S: Scalar>(f: &DegreeSequence, window: Option<(i64, i64)>) -> Result<Functional<S>> {
    cohomology_functional_with(f, None, window)
}
