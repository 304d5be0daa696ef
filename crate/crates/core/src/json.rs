//! JSON forms of tables, functionals and decompositions.
//!
//! Rationals are strings (`"3"`, `"-11/90"`); zero entries are omitted and
//! entries are written in sorted order, so serializing a parsed canonical
//! document reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use crate::decompose::Decomposition;
use crate::error::{Error, Result};
use crate::exact::{parse_scalar, Poly, Scalar};
use crate::pairing::{Functional, Orientation};
use crate::tables::{BettiTable, CohomologyTable};

fn scalar<S: Scalar>(text: &str) -> Result<S> {
    parse_scalar(text).ok_or_else(|| Error::Parse(format!("not a rational: {text:?}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BettiEntry {
    pub col: usize,
    pub deg: i64,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BettiJson {
    pub n: usize,
    pub entries: Vec<BettiEntry>,
}

impl BettiJson {
    pub fn from_table<S: Scalar>(b: &BettiTable<S>) -> Self {
        let entries = b.iter().map(|(col, deg, v)| BettiEntry { col, deg, value: v.to_string() }).collect();
        BettiJson { n: b.n(), entries }
    }

    pub fn to_table<S: Scalar>(&self) -> Result<BettiTable<S>> {
        let entries = self.entries.iter().map(|e| Ok((e.col, e.deg, scalar(&e.value)?))).collect::<Result<Vec<_>>>()?;
        Ok(BettiTable::from_entries(self.n, entries))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyEntry {
    pub row: usize,
    pub twist: i64,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyJson {
    pub m: usize,
    pub window: (i64, i64),
    pub complete: bool,
    pub values: Vec<CohomologyEntry>,
    /// Coefficients, constant term first.
    #[serde(default)]
    pub tail_high: Vec<String>,
    #[serde(default)]
    pub tail_low: Vec<String>,
}

fn poly_strings<S: Scalar>(p: &Poly<S>) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn poly_parse<S: Scalar>(v: &[String]) -> Result<Poly<S>> {
    Ok(Poly::from_coeffs(v.iter().map(|s| scalar(s)).collect::<Result<Vec<_>>>()?))
}

impl CohomologyJson {
    pub fn from_table<S: Scalar>(c: &CohomologyTable<S>) -> Self {
        CohomologyJson {
            m: c.m(),
            window: c.window(),
            complete: c.complete(),
            values: c.iter().map(|(row, twist, v)| CohomologyEntry { row, twist, value: v.to_string() }).collect(),
            tail_high: poly_strings(c.tail_high()),
            tail_low: poly_strings(c.tail_low()),
        }
    }

    pub fn to_table<S: Scalar>(&self) -> Result<CohomologyTable<S>> {
        let mut t = CohomologyTable::new(self.m, self.window, self.complete)?;
        for e in &self.values {
            if e.row > self.m {
                return Err(Error::Parse(format!("row {} exceeds m = {}", e.row, self.m)));
            }
            let v: S = scalar(&e.value)?;
            let cur = t.value(e.row, e.twist)?;
            t.set(e.row, e.twist, cur + v)?;
        }
        t.set_tails(poly_parse(&self.tail_high)?, poly_parse(&self.tail_low)?);
        Ok(t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrientationJson {
    Betti,
    Cohomology,
}

/// `(index, position)` is `(column, degree)` on the Betti side and
/// `(row, twist)` on the cohomology side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientJson {
    pub index: usize,
    pub position: i64,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionalJson {
    pub orientation: OrientationJson,
    pub size: usize,
    pub window: (i64, i64),
    pub coefficients: Vec<CoefficientJson>,
}

impl FunctionalJson {
    pub fn from_functional<S: Scalar>(f: &Functional<S>) -> Self {
        FunctionalJson {
            orientation: match f.orientation() {
                Orientation::Betti => OrientationJson::Betti,
                Orientation::Cohomology => OrientationJson::Cohomology,
            },
            size: f.size(),
            window: f.window(),
            coefficients: f
                .iter()
                .map(|(index, position, v)| CoefficientJson { index, position, value: v.to_string() })
                .collect(),
        }
    }

    pub fn to_functional<S: Scalar>(&self) -> Result<Functional<S>> {
        let orientation = match self.orientation {
            OrientationJson::Betti => Orientation::Betti,
            OrientationJson::Cohomology => Orientation::Cohomology,
        };
        let mut f = Functional::new(orientation, self.size, self.window);
        for c in &self.coefficients {
            if !f.covers(c.index, c.position) {
                return Err(Error::Parse(format!("coefficient ({}, {}) outside the window", c.index, c.position)));
            }
            let v: S = scalar(&c.value)?;
            f.set(c.index, c.position, f.get(c.index, c.position) + v);
        }
        Ok(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartJson {
    pub coeff: String,
    pub skeleton: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionJson {
    pub parts: Vec<PartJson>,
}

impl DecompositionJson {
    pub fn from_decomposition<K, T, S>(d: &Decomposition<K, T, S>) -> Self
    where
        K: AsRef<[i64]>,
        S: Scalar,
    {
        DecompositionJson {
            parts: d
                .parts
                .iter()
                .map(|p| PartJson { coeff: p.coeff.to_string(), skeleton: p.skeleton.as_ref().to_vec() })
                .collect(),
        }
    }
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

pub fn from_str<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn betti_to_json<S: Scalar>(b: &BettiTable<S>) -> String {
    to_string(&BettiJson::from_table(b))
}

pub fn betti_from_json<S: Scalar>(text: &str) -> Result<BettiTable<S>> {
    from_str::<BettiJson>(text)?.to_table()
}

pub fn cohomology_to_json<S: Scalar>(c: &CohomologyTable<S>) -> String {
    to_string(&CohomologyJson::from_table(c))
}

pub fn cohomology_from_json<S: Scalar>(text: &str) -> Result<CohomologyTable<S>> {
    from_str::<CohomologyJson>(text)?.to_table()
}

pub fn functional_to_json<S: Scalar>(f: &Functional<S>) -> String {
    to_string(&FunctionalJson::from_functional(f))
}

pub fn functional_from_json<S: Scalar>(text: &str) -> Result<Functional<S>> {
    from_str::<FunctionalJson>(text)?.to_functional()
}
