use std::collections::BTreeMap;

use num_rational::BigRational;

use super::diagnostics::{Diagnostics, Issue};
use super::sequences::DegreeSequence;
use crate::error::{Error, Result};
use crate::exact::{binomial_poly, Poly, Scalar};

/// Finitely supported table `β_{i,j}`: column `i` is the homological index,
/// `j` the internal degree. Only nonzero entries are stored.
///
/// Displayed with `β_{i,i+ℓ}` in column `i`, row `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiTable<S = BigRational> {
    n: usize,
    entries: BTreeMap<(usize, i64), S>,
}

impl<S: Scalar> BettiTable<S> {
    pub fn new(n: usize) -> Self {
        BettiTable { n, entries: BTreeMap::new() }
    }

    /// Duplicate positions are summed.
    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (usize, i64, S)>) -> Self {
        let mut t = Self::new(n);
        for (i, j, v) in entries {
            let cur = t.get(i, j);
            t.set(i, j, cur + v);
        }
        t
    }

    /// Builds a table from display rows: `rows[r][i]` is `β_{i, i + first_row + r}`.
    pub fn from_display_rows(n: usize, first_row: i64, rows: &[&[i64]]) -> Self {
        let mut t = Self::new(n);
        for (r, row) in rows.iter().enumerate() {
            for (i, &v) in row.iter().enumerate() {
                t.set(i, i as i64 + first_row + r as i64, S::from_int(v));
            }
        }
        t
    }

    /// The table with `values[i]` at `(i, d_i)`.
    pub fn pure(n: usize, d: &DegreeSequence, values: &[S]) -> Self {
        Self::from_entries(n, d.entries().iter().zip(values).enumerate().map(|(i, (&j, v))| (i, j, v.clone())))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: i64) -> S {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(S::zero)
    }

    pub fn set(&mut self, i: usize, j: i64, v: S) {
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    /// Nonzero entries in (column, degree) order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, &S)> + '_ {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries `(degree, value)` of column `i`.
    pub fn column(&self, i: usize) -> impl Iterator<Item = (i64, &S)> + '_ {
        self.entries.range((i, i64::MIN)..=(i, i64::MAX)).map(|(&(_, j), v)| (j, v))
    }

    pub fn max_column(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    pub fn min_degree(&self, i: usize) -> Option<i64> {
        self.column(i).next().map(|(j, _)| j)
    }

    pub fn max_degree(&self, i: usize) -> Option<i64> {
        self.column(i).last().map(|(j, _)| j)
    }

    /// The range of display rows `ℓ = j - i` with a nonzero entry.
    pub fn row_range(&self) -> Option<(i64, i64)> {
        let rows = self.entries.keys().map(|&(i, j)| j - i as i64);
        let lo = rows.clone().min()?;
        Some((lo, rows.max()?))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_entries(self.n, self.iter().map(|(i, j, v)| (i, j, v.clone() * c.clone())))
    }

    /// `self + coeff · other`.
    pub fn add_scaled(&self, coeff: &S, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::IncompatibleShapes(format!("n = {} vs n = {}", self.n, other.n)));
        }
        let mut out = self.clone();
        for (i, j, v) in other.iter() {
            out.set(i, j, out.get(i, j) + coeff.clone() * v.clone());
        }
        Ok(out)
    }
}

/// Column-range violations, negative entries and emptiness.
pub fn validate_betti<S: Scalar>(b: &BettiTable<S>) -> Diagnostics {
    let mut d = Diagnostics::default();
    if b.is_zero() {
        d.push(Issue::EmptyTable);
    }
    for (i, j, v) in b.iter() {
        if i > b.n() {
            d.push(Issue::ColumnOutOfRange { column: i, n: b.n() });
        }
        if v.is_negative() {
            d.push(Issue::NegativeEntry { row: i, index: j, value: v.to_string() });
        }
    }
    d
}

/// `(d_0, ..., d_c)` with `d_i` the minimal degree in column `i`.
pub fn column_min_degrees<S: Scalar>(b: &BettiTable<S>) -> Result<DegreeSequence> {
    let c = b.max_column().ok_or(Error::EmptyTable)?;
    let mut mins = Vec::with_capacity(c + 1);
    for i in 0..=c {
        mins.push(b.min_degree(i).ok_or(Error::GapInColumns(i))?);
    }
    if mins.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotStrictlyIncreasing(mins));
    }
    DegreeSequence::new(mins)
}

/// Hilbert polynomial `Σ_j p_S(d - j) Σ_i (-1)^i β_{i,j}` with
/// `p_S(t) = binom(t + n - 1, n - 1)`.
pub fn hilbert_polynomial<S: Scalar>(b: &BettiTable<S>) -> Poly<S> {
    let n = b.n() as i64;
    if n == 0 {
        return Poly::zero();
    }
    let mut alt: BTreeMap<i64, S> = BTreeMap::new();
    for (i, j, v) in b.iter() {
        let e = alt.entry(j).or_insert_with(S::zero);
        *e = if i % 2 == 0 { e.clone() + v.clone() } else { e.clone() - v.clone() };
    }
    alt.into_iter()
        .filter(|(_, v)| !v.is_zero())
        .fold(Poly::zero(), |acc, (j, v)| acc + binomial_poly((n - 1) - j, (n - 1) as u32).scale(&v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::binomial;

    type Q = BigRational;

    fn b0() -> BettiTable<Q> {
        BettiTable::from_display_rows(7, 0, &[&[1], &[0, 10, 16], &[0, 0, 0, 16, 10], &[0, 0, 0, 0, 0, 1]])
    }

    #[test]
    fn display_rows_place_entries() {
        let b = b0();
        assert_eq!(b.get(0, 0), Q::from_int(1));
        assert_eq!(b.get(2, 3), Q::from_int(16));
        assert_eq!(b.get(3, 5), Q::from_int(16));
        assert_eq!(b.get(5, 8), Q::from_int(1));
        assert_eq!(b.row_range(), Some((0, 3)));
        assert!(validate_betti(&b).is_valid());
    }

    #[test]
    fn validation_flags() {
        let b = BettiTable::from_entries(3, [(4, 5, Q::from_int(1))]);
        assert!(!validate_betti(&b).is_valid());
        assert!(!validate_betti(&BettiTable::<Q>::new(3)).is_valid());
        let b = BettiTable::from_entries(3, [(0, 0, Q::from_int(-1))]);
        assert!(!validate_betti(&b).is_valid());
    }

    #[test]
    fn minimal_degrees() {
        assert_eq!(column_min_degrees(&b0()).unwrap().entries(), &[0, 2, 3, 5, 6, 8]);
        let b = BettiTable::from_entries(3, [(0, 5, Q::from_int(1)), (1, 5, Q::from_int(1))]);
        assert!(matches!(column_min_degrees(&b), Err(Error::NotStrictlyIncreasing(_))));
        let b = BettiTable::from_entries(3, [(0, 0, Q::from_int(1)), (2, 5, Q::from_int(1))]);
        assert!(matches!(column_min_degrees(&b), Err(Error::GapInColumns(1))));
    }

    fn hilbert_oracle(b: &BettiTable<Q>, d: i64) -> Q {
        let n = b.n() as i64;
        b.iter()
            .map(|(i, j, v)| {
                let s = if i % 2 == 0 { v.clone() } else { -v.clone() };
                s * Q::from_bigint(&binomial(d - j + n - 1, (n - 1) as u32))
            })
            .fold(Q::from_int(0), |a, x| a + x)
    }

    #[test]
    fn hilbert_polynomials() {
        let koszul = BettiTable::<Q>::from_display_rows(3, 0, &[&[1, 3, 3, 1]]);
        assert!(koszul.row_range() == Some((0, 0)));
        let koszul = BettiTable::from_entries(3, (0..4).map(|i| (i, i as i64, Q::from_bigint(&binomial(3, i as u32)))));
        assert!(hilbert_polynomial(&koszul).is_zero());

        let p = hilbert_polynomial(&b0());
        let pts: Vec<_> = (0..=6).map(|d| (d, hilbert_oracle(&b0(), d))).collect();
        assert_eq!(p, Poly::interpolate(&pts));
        assert_eq!(p, Poly::from_coeffs(vec![Q::from_int(-6), Q::from_int(12)]));

        let d = DegreeSequence::new(vec![0, 2, 3, 4, 6, 8]).unwrap();
        let vals: Vec<Q> = [5, 60, 128, 90, 20, 3].iter().map(|&v| Q::from_int(v)).collect();
        let bp = BettiTable::pure(5, &d, &vals);
        assert!(hilbert_polynomial(&bp).is_zero());
        for d in 0..=5 {
            assert_eq!(hilbert_oracle(&bp, d), Q::from_int(0));
        }
    }

    #[test]
    fn scaled_sums() {
        let b = b0();
        assert_eq!(b.add_scaled(&Q::from_int(0), &b0()).unwrap(), b);
        assert!(b.add_scaled(&Q::from_int(1), &BettiTable::new(3)).is_err());
        let twice = b.add_scaled(&Q::from_int(1), &b).unwrap();
        assert_eq!(twice, b.scale(&Q::from_int(2)));
        assert!(b.add_scaled(&Q::from_int(-1), &b).unwrap().is_zero());
    }
}
