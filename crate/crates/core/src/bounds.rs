//! Numeric consequences of the cone descriptions: multiplicity bounds, the
//! linear-strand bound, the Euler characteristic polynomial and slope bounds.

use crate::error::{Error, Result};
use crate::exact::{factorial, Poly, Scalar};
use crate::tables::{cohomology_range, BettiTable, CohomologyTable, Extended};

/// `(1/c!) ∏ min_i` and `(1/c!) ∏ max_i` over columns `1..=c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityBounds<S> {
    pub lower: S,
    pub upper: S,
    /// `β_{0,0}`; the bounds apply to `e / β_{0,0}` when this is not one.
    pub beta00: S,
}

impl<S: Scalar> MultiplicityBounds<S> {
    pub fn normalized(&self, e: &S) -> Result<S> {
        if self.beta00.is_zero() {
            return Err(Error::HypothesisViolated("beta_{0,0} = 0, no normalized multiplicity".into()));
        }
        Ok(e.clone() / self.beta00.clone())
    }

    pub fn needs_normalization(&self) -> bool {
        !self.beta00.is_one()
    }

    /// `lower ≤ e / β_{0,0} ≤ upper`.
    pub fn brackets(&self, e: &S) -> Result<bool> {
        let x = self.normalized(e)?;
        Ok(self.lower <= x && x <= self.upper)
    }
}

pub fn multiplicity_bounds<S: Scalar>(b: &BettiTable<S>, c: usize) -> Result<MultiplicityBounds<S>> {
    if b.min_degree(0).is_none() {
        return Err(Error::EmptyColumn(0));
    }
    let mut lower = S::one();
    let mut upper = S::one();
    for i in 1..=c {
        let (lo, hi) = b.min_degree(i).zip(b.max_degree(i)).ok_or(Error::EmptyColumn(i))?;
        lower = lower * S::from_int(lo);
        upper = upper * S::from_int(hi);
    }
    let f = S::from_bigint(&factorial(c));
    Ok(MultiplicityBounds { lower: lower / f.clone(), upper: upper / f, beta00: b.get(0, 0) })
}

/// `(c + 2 - p) / (2p)`.
pub fn strand_bound<S: Scalar>(p: usize, c: usize) -> Result<S> {
    if p == 0 || p > c {
        return Err(Error::InvalidArgument(format!("need 1 <= p <= c, got p = {p}, c = {c}")));
    }
    Ok(S::from_int((c + 2 - p) as i64) / S::from_int(2 * p as i64))
}

/// `β_{p,p} ≤ strand_bound(p, c) · β_{p-1,p-1}`, given `β_{p+1,p+1} = 0`.
pub fn strand_check<S: Scalar>(b: &BettiTable<S>, p: usize, c: usize) -> Result<bool> {
    let bound = strand_bound::<S>(p, c)?;
    let next = b.get(p + 1, p as i64 + 1);
    if !next.is_zero() {
        return Err(Error::HypothesisViolated(format!("beta_{{{0},{0}}} = {next} is not zero", p + 1)));
    }
    Ok(b.get(p, p as i64) <= bound * b.get(p - 1, p as i64 - 1))
}

/// `χ(d) = Σ_i (-1)^i γ_{i,d}`, interpolated from the window and checked
/// against the rest of the window and both tails.
pub fn chi_polynomial<S: Scalar>(c: &CohomologyTable<S>) -> Result<Poly<S>> {
    if !c.complete() {
        return Err(Error::IncompleteTable);
    }
    let m = c.m();
    let (lo, hi) = c.window();
    if hi - lo + 1 < m as i64 + 2 {
        return Err(Error::WindowTooNarrow(format!("{} twists cannot pin down a degree-{m} polynomial", hi - lo + 1)));
    }
    let chi_at = |d: i64| -> Result<S> {
        (0..=m).try_fold(S::zero(), |acc, i| {
            let v = c.value(i, d)?;
            Ok(if i % 2 == 0 { acc + v } else { acc - v })
        })
    };
    let points = (lo..lo + m as i64 + 1).map(|d| Ok((d, chi_at(d)?))).collect::<Result<Vec<_>>>()?;
    let chi = Poly::interpolate(&points);
    for d in lo + m as i64 + 1..=hi {
        if chi.eval_int(d) != chi_at(d)? {
            return Err(Error::InconsistentTable(format!("alternating sum at twist {d} leaves the interpolant")));
        }
    }
    if &chi != c.tail_high() {
        return Err(Error::InconsistentTable("upper tail disagrees with the alternating sums".into()));
    }
    let low = if m % 2 == 0 { c.tail_low().clone() } else { c.tail_low().scale(&-S::one()) };
    if chi != low {
        return Err(Error::InconsistentTable("lower tail disagrees with the alternating sums".into()));
    }
    Ok(chi)
}

/// Rank, degree and slope read from the two leading coefficients of `χ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeBounds<S> {
    pub rank: S,
    pub degree: S,
    pub lower: S,
    pub mu: S,
    pub upper: S,
}

impl<S: Scalar> SlopeBounds<S> {
    pub fn brackets(&self) -> bool {
        self.lower <= self.mu && self.mu <= self.upper
    }
}

pub fn slope_bounds<S: Scalar>(c: &CohomologyTable<S>) -> Result<SlopeBounds<S>> {
    let m = c.m();
    if m == 0 {
        return Err(Error::InvalidArgument("slope needs m >= 1".into()));
    }
    let chi = chi_polynomial(c)?;
    let am = chi.coeff(m);
    if !am.is_positive() || chi.degree() != Some(m) {
        return Err(Error::HypothesisViolated("chi does not have positive leading coefficient in degree m".into()));
    }
    let rank = S::from_bigint(&factorial(m)) * am;
    let degree = S::from_bigint(&factorial(m - 1)) * chi.coeff(m - 1)
        - rank.clone() * S::from_int(m as i64 + 1) / S::from_int(2);
    let mu = degree.clone() / rank.clone();
    let range = cohomology_range(c)?;
    let sum = |f: &dyn Fn(usize) -> Extended| -> Result<S> {
        (1..=m).try_fold(S::zero(), |acc, i| match f(i) {
            Extended::Finite(v) => Ok(acc + S::from_int(v)),
            e => Err(Error::HypothesisViolated(format!("cohomology range entry {i} is {e}"))),
        })
    };
    let k = -S::one() / S::from_int(m as i64);
    Ok(SlopeBounds {
        lower: k.clone() * sum(&|i| range.big_r(i))?,
        upper: k * sum(&|i| range.r(i))?,
        rank,
        degree,
        mu,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pure::{hk_pure_table, multiplicity};
    use crate::supernatural::supernatural_table;
    use crate::tables::{DegreeSequence, RootSequence};
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn seq(v: &[i64]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn multiplicity_examples() {
        let b9 = BettiTable::<Q>::from_display_rows(
            7,
            0,
            &[&[1], &[0, 10, 16, 9, 0, 0], &[0, 0, 9, 16, 10, 0], &[0, 0, 0, 0, 0, 1]],
        );
        let mb = multiplicity_bounds(&b9, 5).unwrap();
        assert_eq!((mb.lower.clone(), mb.upper.clone()), (q(48, 5), q(16, 1)));
        assert!(!mb.needs_normalization());
        let e = multiplicity(&b9, 5).unwrap();
        assert_eq!(e, q(12, 1));
        assert!(mb.brackets(&e).unwrap());
        let b0 = hk_pure_table::<Q>(&seq(&[0, 2, 3, 5, 6, 8]), 7).unwrap();
        let mb = multiplicity_bounds(&b0, 5).unwrap();
        assert_eq!((mb.lower.clone(), mb.upper.clone()), (q(12, 1), q(12, 1)));
        assert!(mb.brackets(&multiplicity(&b0, 5).unwrap()).unwrap());
        let bp = hk_pure_table::<Q>(&seq(&[0, 2, 3, 4, 6, 8]), 5).unwrap();
        let mb = multiplicity_bounds(&bp, 5).unwrap();
        assert_eq!(mb.lower, q(2 * 3 * 4 * 6 * 8, 120));
        assert!(mb.needs_normalization());
        assert_eq!(multiplicity(&bp, 5).unwrap(), mb.lower.clone() * q(5, 1));
        assert!(matches!(multiplicity_bounds(&BettiTable::<Q>::from_entries(5, [(0, 0, q(1, 1))]), 2), Err(Error::EmptyColumn(1))));
    }

    #[test]
    fn strand() {
        assert_eq!(strand_bound::<Q>(1, 4).unwrap(), q(5, 2));
        assert_eq!(strand_bound::<Q>(1, 1).unwrap(), q(1, 1));
        let b = hk_pure_table::<Q>(&seq(&[0, 1, 3, 4, 5]), 4).unwrap();
        assert_eq!(b.get(1, 1) / b.get(0, 0), q(5, 2));
        assert!(strand_check(&b, 1, 4).unwrap());
        let k = hk_pure_table::<Q>(&seq(&[0, 1, 2, 3]), 3).unwrap();
        assert!(matches!(strand_check(&k, 1, 3), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn chi_and_slope() {
        let z = RootSequence::new(vec![3, -1, -4]).unwrap();
        let t = supernatural_table(&z, &q(3, 1), (-7, 5)).unwrap();
        let chi = chi_polynomial(&t).unwrap();
        assert_eq!(chi, Poly::from_roots(&[3, -1, -4]).scale(&q(1, 2)));
        let s = slope_bounds(&t).unwrap();
        assert_eq!((s.rank.clone(), s.degree.clone()), (q(3, 1), q(-4, 1)));
        assert_eq!((s.lower.clone(), s.mu.clone(), s.upper.clone()), (q(-4, 3), q(-4, 3), q(-4, 3)));

        let mut bad = t.clone();
        bad.set(1, 0, q(7, 1)).unwrap();
        assert!(matches!(chi_polynomial(&bad), Err(Error::InconsistentTable(_))));

        let other = supernatural_table(&RootSequence::new(vec![4, 0, -3]).unwrap(), &q(1, 1), (-7, 5)).unwrap();
        let mix = t.add_scaled(&q(2, 1), &other).unwrap();
        let s = slope_bounds(&mix).unwrap();
        assert!(s.lower < s.mu && s.mu < s.upper);
        let sum = chi_polynomial(&t).unwrap() + chi_polynomial(&other).unwrap().scale(&q(2, 1));
        assert_eq!(chi_polynomial(&mix).unwrap(), sum);
    }
}
