//! Greedy decomposition of Betti tables into pure tables and of cohomology
//! tables into supernatural tables.

use num_bigint::BigInt;

use crate::error::{ConeEvidence, Error, Result};
use crate::exact::{first_negative_from, root_bound, Poly, Scalar};
use crate::pure::hk_pure_table;
use crate::supernatural::{rank_gcd_bound, supernatural_table};
use crate::tables::{
    cohomology_range, column_min_degrees, BettiTable, CohomologyTable, DegreeSequence, Extended, LinearTable,
    RootSequence,
};

/// Skeletons of extremal rays, ordered as a greedy decomposition emits them.
pub trait Skeleton: Clone + std::fmt::Debug + PartialEq {
    /// Whether `next` may follow `self` in a decomposition chain.
    fn precedes(&self, next: &Self) -> bool;

    fn entries(&self) -> &[i64];
}

impl Skeleton for DegreeSequence {
    fn precedes(&self, next: &Self) -> bool {
        self != next && self.termwise_le(next)
    }

    fn entries(&self) -> &[i64] {
        DegreeSequence::entries(self)
    }
}

impl Skeleton for RootSequence {
    fn precedes(&self, next: &Self) -> bool {
        self != next && next.termwise_le(self)
    }

    fn entries(&self) -> &[i64] {
        RootSequence::entries(self)
    }
}

/// One summand `coeff · table`, where `table` is the canonical table of `skeleton`.
#[derive(Clone, Debug, PartialEq)]
pub struct Part<K, T, S> {
    pub coeff: S,
    pub skeleton: K,
    pub table: T,
    /// Positions of the remainder that this step brought to zero.
    pub zeroed: Vec<(usize, i64)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition<K, T, S> {
    pub parts: Vec<Part<K, T, S>>,
    pub residual: T,
}

pub type BettiDecomposition<S> = Decomposition<DegreeSequence, BettiTable<S>, S>;
pub type CohomologyDecomposition<S> = Decomposition<RootSequence, CohomologyTable<S>, S>;

impl<K, T, S> Decomposition<K, T, S> {
    pub fn coefficients(&self) -> Vec<&S> {
        self.parts.iter().map(|p| &p.coeff).collect()
    }

    pub fn skeletons(&self) -> Vec<&K> {
        self.parts.iter().map(|p| &p.skeleton).collect()
    }
}

fn not_in_cone<T>(e: ConeEvidence) -> Result<T> {
    Err(Error::NotInCone(e))
}

/// Minimal-degree greedy: repeatedly subtract the largest multiple of the
/// pure table on the column-minimal degree sequence.
pub fn decompose_betti<S: Scalar>(b: &BettiTable<S>) -> Result<BettiDecomposition<S>> {
    if let Some((i, j, v)) = b.iter().find(|(_, _, v)| v.is_negative()) {
        return Err(Error::InvalidArgument(format!("negative entry {v} at ({i}, {j})")));
    }
    if let Some(i) = b.max_column().filter(|&i| i > b.n()) {
        return Err(Error::InvalidArgument(format!("column {i} exceeds n = {}", b.n())));
    }
    let limit = b.nonzero_count();
    let mut current = b.clone();
    let mut parts: Vec<Part<DegreeSequence, BettiTable<S>, S>> = Vec::new();
    while !current.is_zero() {
        let step = parts.len();
        if step >= limit {
            return not_in_cone(ConeEvidence::StepLimit { steps: step });
        }
        let d = match column_min_degrees(&current) {
            Ok(d) => d,
            Err(Error::NotStrictlyIncreasing(candidate)) => {
                return not_in_cone(ConeEvidence::NotStrictlyIncreasing { step, candidate })
            }
            Err(Error::GapInColumns(column)) => return not_in_cone(ConeEvidence::GapInColumns { step, column }),
            Err(e) => return Err(e),
        };
        if let Some(prev) = parts.last() {
            if !prev.skeleton.precedes(&d) {
                return not_in_cone(ConeEvidence::ChainBroken {
                    step,
                    previous: prev.skeleton.entries().to_vec(),
                    next: d.entries().to_vec(),
                });
            }
        }
        let alpha = hk_pure_table::<S>(&d, b.n())?;
        let r = alpha
            .iter()
            .map(|(i, j, a)| current.get(i, j) / a.clone())
            .min()
            .expect("pure tables are nonempty");
        let next = current.add_scaled(&-r.clone(), &alpha)?;
        let zeroed = alpha.iter().filter(|&(i, j, _)| next.get(i, j).is_zero()).map(|(i, j, _)| (i, j)).collect();
        current = next;
        parts.push(Part { coeff: r, skeleton: d, table: alpha, zeroed });
    }
    Ok(Decomposition { parts, residual: current })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CohomologyOptions {
    /// Fail with `WindowTooNarrow` instead of widening the window when a tail
    /// constrains a step more tightly than the window does.
    pub strict_window: bool,
}

/// Root-sequence greedy with pivot `z_i = R_i - i` from the cohomology range.
pub fn decompose_cohomology<S: Scalar>(c: &CohomologyTable<S>) -> Result<CohomologyDecomposition<S>> {
    decompose_cohomology_with(c, CohomologyOptions::default())
}

const WIDEN_ROUNDS: usize = 64;

pub fn decompose_cohomology_with<S: Scalar>(
    c: &CohomologyTable<S>,
    options: CohomologyOptions,
) -> Result<CohomologyDecomposition<S>> {
    if !c.complete() {
        return Err(Error::IncompleteTable);
    }
    if let Some((i, d, v)) = c.iter().find(|(_, _, v)| v.is_negative()) {
        return Err(Error::InvalidArgument(format!("negative value {v} at ({i}, {d})")));
    }
    let m = c.m();
    let mut current = c.clone();
    let mut parts: Vec<Part<RootSequence, CohomologyTable<S>, S>> = Vec::new();
    let mut widenings = 0;
    while !current.is_zero() {
        let step = parts.len();
        let range = match cohomology_range(&current) {
            Ok(r) => r,
            Err(Error::EmptyTable) => break,
            Err(e) => return Err(e),
        };
        let mut z = Vec::with_capacity(m);
        for i in 1..=m {
            match range.big_r(i) {
                Extended::Finite(v) => z.push(v - i as i64),
                e => {
                    return not_in_cone(ConeEvidence::InvalidRootCandidate { step, detail: format!("R_{i} = {e}") });
                }
            }
        }
        let z = match RootSequence::new(z) {
            Ok(z) => z,
            Err(e) => return not_in_cone(ConeEvidence::InvalidRootCandidate { step, detail: e.to_string() }),
        };
        if let Some(prev) = parts.last() {
            if !prev.skeleton.precedes(&z) {
                return not_in_cone(ConeEvidence::ChainBroken {
                    step,
                    previous: prev.skeleton.entries().to_vec(),
                    next: z.entries().to_vec(),
                });
            }
        }
        let (lo, hi) = current.window();
        current = current.widen(lo.min(z.last() - 1), hi.max(z.first() + 1))?;
        let rank = S::from_bigint(&rank_gcd_bound(&z));
        let sigma = supernatural_table(&z, &rank, current.window())?;

        let mut q: Option<S> = None;
        for (i, d, s) in sigma.iter() {
            let ratio = current.value(i, d)? / s.clone();
            q = Some(q.map_or(ratio.clone(), |x| x.min(ratio)));
        }
        let Some(q_window) = q else {
            return not_in_cone(ConeEvidence::NoPositiveMultiple { step, skeleton: z.entries().to_vec() });
        };
        let (hi, lo) = (current.window().1, current.window().0);
        let high = tail_limit(current.tail_high(), sigma.tail_high(), hi + 1, &q_window)?;
        let low = tail_limit(&current.tail_low().reflect(), &sigma.tail_low().reflect(), 1 - lo, &q_window)?;
        let (q, binding) = match (high, low) {
            (TailLimit::Free, TailLimit::Free) => (q_window, None),
            (TailLimit::At(qh, dh), TailLimit::Free) => (qh, Some((dh, 0))),
            (TailLimit::Free, TailLimit::At(ql, xl)) => (ql, Some((-xl, 1))),
            (TailLimit::At(qh, dh), TailLimit::At(ql, xl)) => {
                if qh <= ql {
                    (qh, Some((dh, 0)))
                } else {
                    (ql, Some((-xl, 1)))
                }
            }
            (TailLimit::Zero, _) | (_, TailLimit::Zero) => {
                return not_in_cone(ConeEvidence::NoPositiveMultiple { step, skeleton: z.entries().to_vec() });
            }
            (TailLimit::Asymptotic, _) | (_, TailLimit::Asymptotic) => {
                return Err(Error::WindowTooNarrow(format!(
                    "step {step}: tails of the remainder and of {z} cannot be separated beyond the window"
                )));
            }
        };
        if let Some((d, _)) = binding {
            if options.strict_window || widenings >= WIDEN_ROUNDS {
                return Err(Error::WindowTooNarrow(format!(
                    "step {step}: the largest multiple of {z} is limited by the tail at twist {d}"
                )));
            }
            widenings += 1;
            let (lo, hi) = current.window();
            current = current.widen(lo.min(d), hi.max(d))?;
            continue;
        }
        if !q.is_positive() {
            return not_in_cone(ConeEvidence::NoPositiveMultiple { step, skeleton: z.entries().to_vec() });
        }
        let next = current.add_scaled(&-q.clone(), &sigma)?;
        let zeroed: Vec<(usize, i64)> = sigma.iter().filter(|&(i, d, _)| next.value(i, d).map(|v| v.is_zero()).unwrap_or(false)).map(|(i, d, _)| (i, d)).collect();
        if zeroed.is_empty() {
            return not_in_cone(ConeEvidence::StepLimit { steps: step });
        }
        current = next;
        parts.push(Part { coeff: q, skeleton: z, table: sigma, zeroed });
    }
    Ok(Decomposition { parts, residual: current })
}

enum TailLimit<S> {
    /// `t - q·s >= 0` beyond the window for the window's `q`.
    Free,
    /// A smaller `q` attained at the given point.
    At(S, i64),
    /// The largest admissible `q` is the leading-coefficient ratio, approached only in the limit.
    Asymptotic,
    /// No positive multiple keeps the tail nonnegative.
    Zero,
}

/// How the tail `t` of the remainder limits subtracting `q · s` at points
/// `x >= start`, where `s > 0`.
fn tail_limit<S: Scalar>(t: &Poly<S>, s: &Poly<S>, start: i64, q: &S) -> Result<TailLimit<S>> {
    let Some(ls) = s.leading() else {
        return Ok(TailLimit::Free);
    };
    let lt = match (t.degree(), s.degree()) {
        (Some(a), Some(b)) if a == b => t.leading().unwrap().clone(),
        (Some(a), Some(b)) if a > b => return Ok(TailLimit::Free),
        _ => S::zero(),
    };
    let limit = lt / ls.clone();
    let mut q = q.clone();
    let lowered = limit < q;
    if lowered {
        if !limit.is_positive() {
            return Ok(TailLimit::Zero);
        }
        q = limit;
    }
    let Some(x) = first_negative_from(&(t.clone() - s.scale(&q)), start)? else {
        return Ok(if lowered { TailLimit::Asymptotic } else { TailLimit::Free });
    };
    // below the limit ratio the negative region is bounded, so one scan is exact
    q = t.eval_int(x) / s.eval_int(x);
    let mut at = x;
    let bound: i64 = root_bound(&(t.clone() - s.scale(&q)))?
        .try_into()
        .map_err(|_| Error::WindowTooNarrow("tail root bound exceeds i64".into()))?;
    for y in start..=bound.max(x) {
        let r = t.eval_int(y) / s.eval_int(y);
        if r < q {
            q = r;
            at = y;
        }
    }
    Ok(TailLimit::At(q, at))
}

fn verify_parts<K: Skeleton, T: LinearTable<S> + PartialEq, S: Scalar>(
    input: &T,
    dec: &Decomposition<K, T, S>,
    same: impl Fn(&T, &T) -> bool,
) -> bool {
    if dec.parts.iter().any(|p| !p.coeff.is_positive()) {
        return false;
    }
    if dec.parts.windows(2).any(|w| !w[0].skeleton.precedes(&w[1].skeleton)) {
        return false;
    }
    let mut total = dec.residual.clone();
    for p in &dec.parts {
        match total.add_scaled(&p.coeff, &p.table) {
            Ok(t) => total = t,
            Err(_) => return false,
        }
    }
    same(&total, input)
}

/// Exact reconstruction, positive coefficients, chain order, and canonical
/// part tables.
pub fn verify_betti_decomposition<S: Scalar>(input: &BettiTable<S>, dec: &BettiDecomposition<S>) -> bool {
    let canonical = dec
        .parts
        .iter()
        .all(|p| hk_pure_table::<S>(&p.skeleton, input.n()).is_ok_and(|t| t == p.table));
    canonical && verify_parts(input, dec, |a, b| a == b)
}

pub fn verify_cohomology_decomposition<S: Scalar>(input: &CohomologyTable<S>, dec: &CohomologyDecomposition<S>) -> bool {
    let canonical = dec.parts.iter().all(|p| {
        let rank = S::from_bigint(&rank_gcd_bound(&p.skeleton));
        supernatural_table(&p.skeleton, &rank, p.table.window()).is_ok_and(|t| t == p.table)
    });
    canonical && verify_parts(input, dec, same_cohomology)
}

/// Equal values at every twist, whatever the windows.
pub fn same_cohomology<S: Scalar>(a: &CohomologyTable<S>, b: &CohomologyTable<S>) -> bool {
    if a.m() != b.m() {
        return false;
    }
    let (lo, hi) = (a.window().0.min(b.window().0), a.window().1.max(b.window().1));
    match (a.widen(lo, hi), b.widen(lo, hi)) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    }
}

/// Cone membership with a certificate either way.
#[derive(Clone, Debug, PartialEq)]
pub enum Membership<D> {
    InCone(D),
    NotInCone(ConeEvidence),
}

impl<D> Membership<D> {
    pub fn is_in_cone(&self) -> bool {
        matches!(self, Membership::InCone(_))
    }
}

/// Tables with a greedy decomposition into extremal rays.
pub trait Decomposable: Sized {
    type Output;

    fn decompose(&self) -> Result<Self::Output>;
}

impl<S: Scalar> Decomposable for BettiTable<S> {
    type Output = BettiDecomposition<S>;

    fn decompose(&self) -> Result<Self::Output> {
        decompose_betti(self)
    }
}

impl<S: Scalar> Decomposable for CohomologyTable<S> {
    type Output = CohomologyDecomposition<S>;

    fn decompose(&self) -> Result<Self::Output> {
        decompose_cohomology(self)
    }
}

/// Errors other than cone failure (bad windows, malformed input) are propagated.
pub fn is_in_cone<T: Decomposable>(t: &T) -> Result<Membership<T::Output>> {
    match t.decompose() {
        Ok(d) => Ok(Membership::InCone(d)),
        Err(Error::NotInCone(e)) => Ok(Membership::NotInCone(e)),
        Err(e) => Err(e),
    }
}

/// The rank scaling used for canonical supernatural tables.
pub fn canonical_rank(z: &RootSequence) -> BigInt {
    rank_gcd_bound(z)
}
