//! Equations of the exterior facets of the Boij–Söderberg fan, on the Betti
//! side (inductively along chains, or from supernatural monads) and on the
//! cohomology side.

use crate::error::{Error, Result};
use crate::exact::{primitive_factor, Scalar};
use crate::pairing::{betti_functional, cohomology_functional, Functional, Orientation};
use crate::pure::hk_pure_values;
use crate::supernatural::{monad_table, rank_gcd_bound};
use crate::tables::{DegreeSequence, RootSequence};

/// `(f⁻, f⁺)`: `f` with `f_{τ+1}` lowered by one, and with `f_τ` raised by one.
pub fn facet_neighbors(f: &DegreeSequence, tau: usize) -> Result<(DegreeSequence, DegreeSequence)> {
    if tau + 1 >= f.len() {
        return Err(Error::InvalidArgument(format!("tau = {tau} needs entries tau and tau + 1 in {f}")));
    }
    let gap = f.get(tau + 1) - f.get(tau);
    if gap != 2 {
        return Err(Error::GapNotTwo { tau, gap });
    }
    Ok((f.bumped(tau + 1, -1).unwrap(), f.bumped(tau, 1).unwrap()))
}

/// Which coordinate the inductive solve moves at each step of its maximal chain.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ChainRule {
    /// Move the largest movable index first.
    #[default]
    LargestFirst,
    SmallestFirst,
}

/// Rows far enough from the facet that the normalization never depends on the
/// requested window.
fn canonical_rows(f: &DegreeSequence, rows: (i64, i64)) -> (i64, i64) {
    let n = f.codim() as i64;
    (rows.0.min(f.get(0) - 2 * n - 2), rows.1.max(f.get(n as usize) + n + 2))
}

fn normalize<S: Scalar>(f: Functional<S>, rows: (i64, i64)) -> Functional<S> {
    let k = primitive_factor(f.iter().map(|(_, _, v)| v)).unwrap_or_else(S::one);
    f.scale(&k).restrict(rows)
}

#[derive(Clone, Copy)]
enum Side {
    Upper,
    Lower,
}

/// Solves for the facet equation over display rows `box_rows`, moving along a
/// maximal chain away from `start` one orthogonality equation at a time.
fn inductive_solve<S: Scalar>(
    f: &DegreeSequence,
    tau: usize,
    side: Side,
    rule: ChainRule,
    box_rows: (i64, i64),
) -> Result<Functional<S>> {
    let (minus, plus) = facet_neighbors(f, tau)?;
    let n = f.codim();
    let mut fun = Functional::new(Orientation::Betti, n, box_rows);
    let (start, step): (DegreeSequence, i64) = match side {
        Side::Upper => (minus.clone(), -1),
        Side::Lower => (plus.clone(), 1),
    };
    let beta: Vec<S> = hk_pure_values(&start);
    match side {
        Side::Upper => {
            fun.set(tau, minus.get(tau), beta[tau + 1].clone());
            fun.set(tau + 1, minus.get(tau + 1), -beta[tau].clone());
        }
        Side::Lower => {
            fun.set(tau, plus.get(tau), -beta[tau + 1].clone());
            fun.set(tau + 1, plus.get(tau + 1), beta[tau].clone());
        }
    }
    // known cells: j >= start_i (upper) or j <= start_i (lower); everything
    // known but unseeded is zero
    let target: Vec<i64> = match side {
        Side::Upper => (0..=n).map(|i| i as i64 + box_rows.0).collect(),
        Side::Lower => (0..=n).map(|i| i as i64 + box_rows.1).collect(),
    };
    let mut d = start;
    loop {
        let movable = |i: usize, d: &DegreeSequence| {
            d.get(i) != target[i] && d.bumped(i, step).is_some()
        };
        let order: Vec<usize> = match rule {
            ChainRule::LargestFirst => (0..=n).rev().collect(),
            ChainRule::SmallestFirst => (0..=n).collect(),
        };
        let Some(i0) = order.into_iter().find(|&i| movable(i, &d)) else {
            break;
        };
        d = d.bumped(i0, step).unwrap();
        let beta: Vec<S> = hk_pure_values(&d);
        let rest = (0..=n)
            .filter(|&i| i != i0)
            .fold(S::zero(), |acc, i| acc + fun.get(i, d.get(i)) * beta[i].clone());
        fun.set(i0, d.get(i0), -rest / beta[i0].clone());
    }
    if d.entries() != target.as_slice() {
        return Err(Error::WindowTooNarrow(format!("chain stopped at {d} before reaching the window edge")));
    }
    Ok(fun)
}

/// The upper equation of `facet(f, τ)`: vanishes on pure tables `≤ f⁻` and on
/// all tables `≥ f⁺`, over display rows `rows`, primitive integral.
pub fn upper_facet_equation<S: Scalar>(f: &DegreeSequence, tau: usize, rows: (i64, i64)) -> Result<Functional<S>> {
    upper_facet_equation_with(f, tau, rows, ChainRule::default())
}

pub fn upper_facet_equation_with<S: Scalar>(
    f: &DegreeSequence,
    tau: usize,
    rows: (i64, i64),
    rule: ChainRule,
) -> Result<Functional<S>> {
    let full = canonical_rows(f, rows);
    Ok(normalize(inductive_solve(f, tau, Side::Upper, rule, full)?, rows))
}

/// The lower equation: vanishes on pure tables `≥ f⁺` and on all tables `≤ f⁻`.
pub fn lower_facet_equation<S: Scalar>(f: &DegreeSequence, tau: usize, rows: (i64, i64)) -> Result<Functional<S>> {
    lower_facet_equation_with(f, tau, rows, ChainRule::default())
}

pub fn lower_facet_equation_with<S: Scalar>(
    f: &DegreeSequence,
    tau: usize,
    rows: (i64, i64),
    rule: ChainRule,
) -> Result<Functional<S>> {
    let full = canonical_rows(f, rows);
    let rule = match rule {
        ChainRule::LargestFirst => ChainRule::SmallestFirst,
        ChainRule::SmallestFirst => ChainRule::LargestFirst,
    };
    Ok(normalize(inductive_solve(f, tau, Side::Lower, rule, full)?, rows))
}

/// The root sequence, rank and dual regularity of the monad whose modified
/// pairing gives the upper equation of `facet(f, τ)`.
pub fn facet_monad_data(f: &DegreeSequence, tau: usize) -> Result<(RootSequence, num_bigint::BigInt, i64)> {
    facet_neighbors(f, tau)?;
    let n = f.codim();
    if n < 2 {
        return Err(Error::InvalidArgument(format!("{f} is too short for a monad")));
    }
    let z: Vec<i64> = (0..=n).filter(|&i| i != tau && i != tau + 1).map(|i| -f.get(i)).collect();
    let z = RootSequence::new(z)?;
    let rank = rank_gcd_bound(&z);
    Ok((z, rank, f.get(n) - n as i64 + 1))
}

/// The upper equation recomputed as `⟨-, E⟩_{f_τ, τ}` for the supernatural
/// monad `E` of [`facet_monad_data`], primitive, without comparing it to the
/// chain solve.
pub fn monad_facet_equation<S: Scalar>(f: &DegreeSequence, tau: usize, rows: (i64, i64)) -> Result<Functional<S>> {
    let (z, rank, a) = facet_monad_data(f, tau)?;
    let full = canonical_rows(f, rows);
    let n = f.codim() as i64;
    let window = (-(full.1 + n), -full.0);
    let monad = monad_table(&z, &S::from_bigint(&rank), a, window)?;
    let raw = betti_functional(&monad, f.get(tau), tau, full)?;
    Ok(normalize(raw, rows))
}

/// [`monad_facet_equation`], failing with an assertion error if it differs
/// from [`upper_facet_equation`].
pub fn facet_from_supernatural<S: Scalar>(f: &DegreeSequence, tau: usize, rows: (i64, i64)) -> Result<Functional<S>> {
    let out = monad_facet_equation(f, tau, rows)?;
    let chain = upper_facet_equation(f, tau, rows)?;
    if out != chain {
        return Err(Error::Assertion(format!("monad functional for facet({f}, {tau}) differs from the chain solve")));
    }
    Ok(out)
}

/// `(f, τ, cutoff)` of the cohomology facet through `z⁺ > z > z⁻` at index `i`.
pub fn cohomology_facet_data(z: &RootSequence, i: usize) -> Result<(DegreeSequence, usize, i64)> {
    if i == 0 || i > z.len() {
        return Err(Error::InvalidArgument(format!("index {i} outside 1..={}", z.len())));
    }
    if z.bumped(i, 1).is_none() || z.bumped(i, -1).is_none() {
        return Err(Error::NotAFacet(format!("z_{i} of {z} cannot move by one in both directions")));
    }
    let zi = z.z(i);
    let mut all: Vec<i64> = z.entries().iter().filter(|&&r| r != zi).map(|r| -r).collect();
    all.extend([-(zi + 1), -zi, -(zi - 1)]);
    all.sort_unstable();
    let f = DegreeSequence::new(all)?;
    let tau = f.entries().iter().position(|&v| v == -zi).unwrap();
    Ok((f.clone(), tau, f.get(tau) - 1))
}

/// The cohomology-side facet equation through `z⁺ > z > z⁻`, primitive.
pub fn cohomology_facet<S: Scalar>(z: &RootSequence, i: usize, window: Option<(i64, i64)>) -> Result<Functional<S>> {
    let (f, tau, cutoff) = cohomology_facet_data(z, i)?;
    Ok(cohomology_functional::<S>(&f, cutoff, tau, window)?.primitive())
}

/// `b_{i+1,j} = -b_{i,j}` for every `j < f_i` with both cells in the window.
pub fn diagonal_check<S: Scalar>(fun: &Functional<S>, f: &DegreeSequence) -> bool {
    if fun.orientation() != Orientation::Betti {
        return false;
    }
    let (lo, hi) = fun.window();
    (0..f.len().saturating_sub(1).min(fun.size())).all(|i| {
        ((i as i64 + 1 + lo)..f.get(i))
            .filter(|&j| j - i as i64 <= hi)
            .all(|j| fun.get(i + 1, j) == -fun.get(i, j))
    })
}
