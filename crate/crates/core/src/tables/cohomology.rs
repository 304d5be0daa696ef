use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::diagnostics::{Diagnostics, Issue};
use crate::error::{Error, Result};
use crate::exact::{first_negative_from, Poly, Scalar};

/// Values `γ(i, d) = h^i(E(d))` on a finite twist window, plus exact
/// polynomial tails for row 0 above the window and row `m` below it.
///
/// Storage is twist-indexed. The usual display puts `γ(i, D - i)` in row `i`
/// (counted from the bottom) and column `D`; see [`CohomologyTable::display_value`].
#[derive(Clone, PartialEq, Eq)]
pub struct CohomologyTable<S = BigRational> {
    m: usize,
    lo: i64,
    hi: i64,
    values: BTreeMap<(usize, i64), S>,
    tail_high: Poly<S>,
    tail_low: Poly<S>,
    complete: bool,
}

impl<S: Scalar> CohomologyTable<S> {
    /// An all-zero table. `complete` asserts rows `1..m-1` vanish outside the window.
    pub fn new(m: usize, window: (i64, i64), complete: bool) -> Result<Self> {
        if window.0 > window.1 {
            return Err(Error::InvalidArgument(format!("empty window [{}, {}]", window.0, window.1)));
        }
        Ok(CohomologyTable {
            m,
            lo: window.0,
            hi: window.1,
            values: BTreeMap::new(),
            tail_high: Poly::zero(),
            tail_low: Poly::zero(),
            complete,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn tail_high(&self) -> &Poly<S> {
        &self.tail_high
    }

    pub fn tail_low(&self) -> &Poly<S> {
        &self.tail_low
    }

    pub fn set_tails(&mut self, high: Poly<S>, low: Poly<S>) {
        self.tail_high = high;
        self.tail_low = low;
    }

    pub fn set(&mut self, row: usize, twist: i64, v: S) -> Result<()> {
        if row > self.m || twist < self.lo || twist > self.hi {
            return Err(Error::InvalidArgument(format!(
                "position ({row}, {twist}) outside rows 0..={} and window [{}, {}]",
                self.m, self.lo, self.hi
            )));
        }
        if v.is_zero() {
            self.values.remove(&(row, twist));
        } else {
            self.values.insert((row, twist), v);
        }
        Ok(())
    }

    /// Nonzero stored window values `(row, twist, value)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, &S)> + '_ {
        self.values.iter().map(|(&(i, d), v)| (i, d, v))
    }

    pub fn nonzero_count(&self) -> usize {
        self.values.len()
    }

    /// `γ(row, twist)`, reading tails outside the window.
    ///
    /// Outside the window only the two tail regimes are known unless the
    /// table is complete, in which case everything else is zero.
    pub fn value(&self, row: usize, twist: i64) -> Result<S> {
        if row > self.m {
            return Ok(S::zero());
        }
        if twist >= self.lo && twist <= self.hi {
            return Ok(self.values.get(&(row, twist)).cloned().unwrap_or_else(S::zero));
        }
        if twist > self.hi && row == 0 {
            return Ok(self.tail_high.eval_int(twist));
        }
        if twist < self.lo && row == self.m {
            return Ok(self.tail_low.eval_int(twist));
        }
        if self.complete {
            Ok(S::zero())
        } else {
            Err(Error::IncompleteTable)
        }
    }

    /// `γ(row, column - row)`: the entry in display row `row`, column `column`.
    pub fn display_value(&self, row: usize, column: i64) -> Result<S> {
        self.value(row, column - row as i64)
    }

    /// Display columns fully determined by the window.
    pub fn display_columns(&self) -> (i64, i64) {
        (self.lo + self.m as i64, self.hi)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty() && self.tail_high.is_zero() && self.tail_low.is_zero()
    }

    /// The same table over a larger window, materialising tail values.
    pub fn widen(&self, lo: i64, hi: i64) -> Result<Self> {
        if lo > self.lo || hi < self.hi {
            return Err(Error::InvalidArgument(format!(
                "[{lo}, {hi}] does not contain [{}, {}]",
                self.lo, self.hi
            )));
        }
        if (lo, hi) == (self.lo, self.hi) {
            return Ok(self.clone());
        }
        if !self.complete {
            return Err(Error::IncompleteTable);
        }
        let mut out = self.clone();
        out.lo = lo;
        out.hi = hi;
        for d in (lo..self.lo).chain(self.hi + 1..=hi) {
            for row in 0..=self.m {
                out.set(row, d, self.value(row, d)?)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = self.clone();
        out.values = self
            .values
            .iter()
            .filter(|_| !c.is_zero())
            .map(|(k, v)| (*k, v.clone() * c.clone()))
            .collect();
        out.tail_high = self.tail_high.scale(c);
        out.tail_low = self.tail_low.scale(c);
        out
    }

    /// `self + coeff · other`. Different windows are reconciled by widening
    /// both to their union, which needs both tables complete.
    pub fn add_scaled(&self, coeff: &S, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::IncompatibleShapes(format!("m = {} vs m = {}", self.m, other.m)));
        }
        let (lo, hi) = (self.lo.min(other.lo), self.hi.max(other.hi));
        let widen = |t: &Self| {
            t.widen(lo, hi).map_err(|_| {
                Error::IncompatibleShapes(format!(
                    "windows [{}, {}] and [{}, {}] differ and a table is incomplete",
                    self.lo, self.hi, other.lo, other.hi
                ))
            })
        };
        let (mut out, b) = (widen(self)?, widen(other)?);
        for (i, d, v) in b.iter() {
            let cur = out.value(i, d)?;
            out.set(i, d, cur + coeff.clone() * v.clone())?;
        }
        out.tail_high = out.tail_high.clone() + b.tail_high.scale(coeff);
        out.tail_low = out.tail_low.clone() + b.tail_low.scale(coeff);
        out.complete = self.complete && other.complete;
        Ok(out)
    }

    /// First and last twist with a nonzero value in `row`, tails included.
    fn row_extent(&self, row: usize) -> Option<(Extended, Extended)> {
        let mut lo: Option<Extended> = None;
        let mut hi: Option<Extended> = None;
        let mut see = |e: Extended| {
            lo = Some(lo.map_or(e, |x| x.min(e)));
            hi = Some(hi.map_or(e, |x| x.max(e)));
        };
        for (_, d, _) in self.values.range((row, i64::MIN)..=(row, i64::MAX)).map(|(&(i, d), v)| (i, d, v)) {
            see(Extended::Finite(d));
        }
        if row == 0 && !self.tail_high.is_zero() {
            see(Extended::PosInf);
            let first = (self.hi + 1..).find(|&d| !self.tail_high.eval_int(d).is_zero()).unwrap();
            see(Extended::Finite(first));
        }
        if row == self.m && !self.tail_low.is_zero() {
            see(Extended::NegInf);
            let last = (1..).map(|k| self.lo - k).find(|&d| !self.tail_low.eval_int(d).is_zero()).unwrap();
            see(Extended::Finite(last));
        }
        Some((lo?, hi?))
    }
}

impl<S: Scalar> fmt::Debug for CohomologyTable<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let values: Vec<String> = self.iter().map(|(i, d, v)| format!("({i},{d})={v}")).collect();
        f.debug_struct("CohomologyTable")
            .field("m", &self.m)
            .field("window", &(self.lo, self.hi))
            .field("complete", &self.complete)
            .field("values", &values)
            .field("tail_high", &self.tail_high)
            .field("tail_low", &self.tail_low)
            .finish()
    }
}

/// An integer or a symbolic infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    NegInf,
    Finite(i64),
    PosInf,
}

impl Extended {
    pub fn finite(self) -> Option<i64> {
        match self {
            Extended::Finite(v) => Some(v),
            _ => None,
        }
    }

    fn add(self, k: i64) -> Self {
        match self {
            Extended::Finite(v) => Extended::Finite(v + k),
            e => e,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::NegInf => write!(f, "-inf"),
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::PosInf => write!(f, "inf"),
        }
    }
}

/// The cohomology range: `r = (r_1, ..., r_{m+1})` and `R = (R_0, ..., R_m)`.
///
/// In display coordinates `D` (entry `γ(j, D - j)`), `r_i` is the first column
/// with a nonzero entry in some row `j < i`, and `R_i` is one more than the last
/// column with a nonzero entry in some row `j >= i`. Thus a nonzero `γ(i, D - i)`
/// forces `r_{i+1} <= D < R_i`, and for a supernatural table with roots `z`
/// both equal `z_i + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyRange {
    pub r: Vec<Extended>,
    pub big_r: Vec<Extended>,
}

impl CohomologyRange {
    /// `r_i` for `1 <= i <= m + 1`.
    pub fn r(&self, i: usize) -> Extended {
        self.r[i - 1]
    }

    /// `R_i` for `0 <= i <= m`.
    pub fn big_r(&self, i: usize) -> Extended {
        self.big_r[i]
    }
}

pub fn cohomology_range<S: Scalar>(c: &CohomologyTable<S>) -> Result<CohomologyRange> {
    if !c.complete() {
        return Err(Error::WindowTooNarrow("cohomology range needs a complete table".into()));
    }
    if c.is_zero() {
        return Err(Error::EmptyTable);
    }
    let m = c.m();
    let extents: Vec<Option<(Extended, Extended)>> = (0..=m)
        .map(|j| c.row_extent(j).map(|(a, b)| (a.add(j as i64), b.add(j as i64))))
        .collect();
    let r = (1..=m + 1)
        .map(|i| extents[..i].iter().flatten().map(|e| e.0).min().unwrap_or(Extended::PosInf))
        .collect();
    let big_r = (0..=m)
        .map(|i| extents[i..].iter().flatten().map(|e| e.1.add(1)).max().unwrap_or(Extended::NegInf))
        .collect();
    Ok(CohomologyRange { r, big_r })
}

/// Structural checks: nonnegativity of window values and tails, tail
/// degrees, a nonzero entry in every display column, and weakly decreasing
/// highest and lowest nonzero rows as the display column grows.
///
/// For incomplete tables only the display columns determined by the window
/// are examined.
pub fn validate_cohomology<S: Scalar>(c: &CohomologyTable<S>) -> Diagnostics {
    let mut diag = Diagnostics::default();
    let m = c.m();
    let (lo, hi) = c.window();
    if c.is_zero() {
        diag.push(Issue::EmptyTable);
        return diag;
    }
    for (i, d, v) in c.iter() {
        if v.is_negative() {
            diag.push(Issue::NegativeEntry { row: i, index: d, value: v.to_string() });
        }
    }
    for (row, tail) in [(0, c.tail_high()), (m, c.tail_low())] {
        if let Some(deg) = tail.degree() {
            if deg > m {
                diag.push(Issue::TailDegree { row, degree: deg, m });
            }
        }
    }
    match first_negative_from(c.tail_high(), hi + 1) {
        Ok(Some(d)) => diag.push(Issue::NegativeTail { row: 0, twist: d }),
        Ok(None) => {}
        Err(_) => diag.push(Issue::NegativeTail { row: 0, twist: hi + 1 }),
    }
    match first_negative_from(&c.tail_low().reflect(), 1 - lo) {
        Ok(Some(x)) => diag.push(Issue::NegativeTail { row: m, twist: -x }),
        Ok(None) => {}
        Err(_) => diag.push(Issue::NegativeTail { row: m, twist: lo - 1 }),
    }
    let (first, last) = if c.complete() { (lo, hi) } else { c.display_columns() };
    let mut prev: Option<(usize, usize)> = None;
    for col in first..=last {
        let rows: Vec<usize> = (0..=m)
            .filter(|&i| c.display_value(i, col).map(|v| !v.is_zero()).unwrap_or(false))
            .collect();
        let (Some(&bottom), Some(&top)) = (rows.first(), rows.last()) else {
            diag.push(Issue::ZeroDisplayColumn { column: col });
            continue;
        };
        if let Some((pb, pt)) = prev {
            if top > pt {
                diag.push(Issue::TopRowIncreases { column: col, from: pt, to: top });
            }
            if bottom > pb {
                diag.push(Issue::BottomRowIncreases { column: col, from: pb, to: bottom });
            }
        }
        prev = Some((bottom, top));
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    type Q = BigRational;

    /// The supernatural table of roots (3,-1,-4), rank 3, entered by hand.
    fn hand_table() -> CohomologyTable<Q> {
        let mut c = CohomologyTable::new(3, (-7, 5), true).unwrap();
        for (row, d, v) in [
            (0, 4, 20),
            (0, 5, 54),
            (1, 0, 6),
            (1, 1, 10),
            (1, 2, 9),
            (2, -3, 6),
            (2, -2, 5),
            (3, -5, 16),
            (3, -6, 45),
            (3, -7, 90),
        ] {
            c.set(row, d, Q::from_int(v)).unwrap();
        }
        let p = Poly::from_roots(&[3, -1, -4]).scale(&Q::new(1.into(), 2.into()));
        c.set_tails(p.clone(), -p);
        c
    }

    #[test]
    fn range_of_supernatural_shape() {
        let range = cohomology_range(&hand_table()).unwrap();
        use Extended::*;
        assert_eq!(range.r, vec![Finite(4), Finite(1), Finite(-1), NegInf]);
        assert_eq!(range.big_r, vec![PosInf, Finite(4), Finite(1), Finite(-1)]);
    }

    #[test]
    fn range_matches_brute_force_definition() {
        // only rows 0 and m nonzero, no tails; brute force over a wide range of columns
        let mut c = CohomologyTable::<Q>::new(2, (-4, 4), true).unwrap();
        c.set(0, 3, Q::from_int(2)).unwrap();
        c.set(0, 1, Q::from_int(1)).unwrap();
        c.set(2, -2, Q::from_int(1)).unwrap();
        let range = cohomology_range(&c).unwrap();
        let nonzero = |j: usize, col: i64| !c.display_value(j, col).unwrap().is_zero();
        for i in 1..=3usize {
            let r = (-20..20).find(|&col| (0..i).any(|j| nonzero(j, col)));
            assert_eq!(range.r(i), r.map_or(Extended::PosInf, Extended::Finite));
        }
        for i in 0..=2usize {
            let big = (-20..20).rev().find(|&col| (i..=2).any(|j| nonzero(j, col)));
            assert_eq!(range.big_r(i), big.map_or(Extended::NegInf, |v| Extended::Finite(v + 1)));
        }
        assert!(cohomology_range(&CohomologyTable::<Q>::new(2, (0, 1), true).unwrap()).is_err());
        let inc = CohomologyTable::<Q>::new(2, (0, 1), false).unwrap();
        assert!(matches!(cohomology_range(&inc), Err(Error::WindowTooNarrow(_))));
    }

    #[test]
    fn validation() {
        assert!(validate_cohomology(&hand_table()).is_valid());

        let mut jump = CohomologyTable::<Q>::new(2, (0, 6), true).unwrap();
        jump.set(0, 1, Q::from_int(1)).unwrap();
        jump.set(0, 2, Q::from_int(1)).unwrap();
        jump.set(1, 2, Q::from_int(1)).unwrap();
        jump.set(0, 4, Q::from_int(1)).unwrap();
        let d = validate_cohomology(&jump);
        assert!(d.issues.iter().any(|i| matches!(i, Issue::TopRowIncreases { .. })));

        let mut gap = hand_table();
        gap.set(0, 4, Q::from_int(0)).unwrap();
        let d = validate_cohomology(&gap);
        assert!(d.issues.contains(&Issue::ZeroDisplayColumn { column: 4 }));

        let mut neg = hand_table();
        neg.set_tails(neg.tail_high().clone(), neg.tail_high().clone());
        assert!(validate_cohomology(&neg).issues.iter().any(|i| matches!(i, Issue::NegativeTail { row: 3, .. })));
    }

    #[test]
    fn widen_and_add() {
        let c = hand_table();
        let w = c.widen(-9, 8).unwrap();
        assert_eq!(w.value(0, 7).unwrap(), Q::from_int(176));
        for row in 0..=3 {
            for d in -12..12 {
                assert_eq!(w.value(row, d).unwrap(), c.value(row, d).unwrap());
            }
        }
        let sum = c.add_scaled(&Q::from_int(1), &w).unwrap();
        assert_eq!(sum, w.scale(&Q::from_int(2)));
        assert_eq!(c.add_scaled(&Q::from_int(0), &c).unwrap(), c);
        assert!(c.add_scaled(&Q::from_int(1), &CohomologyTable::new(2, (0, 1), true).unwrap()).is_err());
    }
}
