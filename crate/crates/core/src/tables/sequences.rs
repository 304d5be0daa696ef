use std::fmt;

use crate::error::{Error, Result};

/// Strictly increasing integers `d_0 < d_1 < ... < d_c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<i64>);

/// Strictly decreasing integers `z_1 > z_2 > ... > z_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSequence(Vec<i64>);

impl DegreeSequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSequence(entries, "degree sequence is empty"));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSequence(entries, "degree sequence must be strictly increasing"));
        }
        Ok(DegreeSequence(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The codimension `c` (length minus one).
    pub fn codim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn shift(&self, t: i64) -> Self {
        DegreeSequence(self.0.iter().map(|d| d + t).collect())
    }

    /// Reverse and negate: the degree sequence of the dual complex.
    pub fn dual(&self) -> Self {
        DegreeSequence(self.0.iter().rev().map(|d| -d).collect())
    }

    /// Termwise `self <= other`; false for different lengths.
    pub fn termwise_le(&self, other: &Self) -> bool {
        termwise_le(&self.0, &other.0)
    }

    /// `self` with entry `i` moved by `delta`, if the result is still a degree sequence.
    pub fn bumped(&self, i: usize, delta: i64) -> Option<Self> {
        let mut e = self.0.clone();
        e[i] += delta;
        DegreeSequence::new(e).ok()
    }
}

impl RootSequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSequence(entries, "root sequence is empty"));
        }
        if entries.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidSequence(entries, "root sequence must be strictly decreasing"));
        }
        Ok(RootSequence(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Projective dimension `m`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `z_i`, one-based as in the usual notation.
    pub fn z(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn first(&self) -> i64 {
        self.0[0]
    }

    pub fn last(&self) -> i64 {
        *self.0.last().unwrap()
    }

    pub fn termwise_le(&self, other: &Self) -> bool {
        termwise_le(&self.0, &other.0)
    }

    /// `self` with `z_i` (one-based) moved by `delta`, if still strictly decreasing.
    pub fn bumped(&self, i: usize, delta: i64) -> Option<Self> {
        let mut e = self.0.clone();
        e[i - 1] += delta;
        RootSequence::new(e).ok()
    }
}

fn termwise_le(a: &[i64], b: &[i64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

macro_rules! seq_display {
    ($t:ty) => {
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }

        impl AsRef<[i64]> for $t {
            fn as_ref(&self) -> &[i64] {
                &self.0
            }
        }
    };
}

seq_display!(DegreeSequence);
seq_display!(RootSequence);

/// A totally ordered set of skeletons, stored in emission order.
///
/// Degree-sequence chains strictly increase termwise; root-sequence chains
/// strictly decrease termwise (the order in which greedy decompositions emit them).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain<T>(Vec<T>);

impl Chain<DegreeSequence> {
    pub fn increasing(items: Vec<DegreeSequence>) -> Result<Self> {
        for w in items.windows(2) {
            if !(w[0].termwise_le(&w[1]) && w[0] != w[1]) {
                return Err(Error::InvalidArgument(format!("{} < {} fails termwise", w[0], w[1])));
            }
        }
        Ok(Chain(items))
    }
}

impl Chain<RootSequence> {
    pub fn decreasing(items: Vec<RootSequence>) -> Result<Self> {
        for w in items.windows(2) {
            if !(w[1].termwise_le(&w[0]) && w[0] != w[1]) {
                return Err(Error::InvalidArgument(format!("{} > {} fails termwise", w[0], w[1])));
            }
        }
        Ok(Chain(items))
    }
}

impl<T> Chain<T> {
    pub fn items(&self) -> &[T] {
        &self.0
    }

    pub fn into_items(self) -> Vec<T> {
        self.0
    }
}
