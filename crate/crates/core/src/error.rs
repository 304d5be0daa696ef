use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a greedy decomposition stopped short of the zero table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeEvidence {
    /// The remainder's per-column minimal degrees do not form a degree sequence.
    NotStrictlyIncreasing { step: usize, candidate: Vec<i64> },
    /// An empty column precedes a nonempty one in the remainder.
    GapInColumns { step: usize, column: usize },
    /// The cohomology range of the remainder does not yield a root sequence.
    InvalidRootCandidate { step: usize, detail: String },
    /// The largest admissible multiple of the pivot is zero.
    NoPositiveMultiple { step: usize, skeleton: Vec<i64> },
    /// The newly emitted skeleton is not comparable with the previous one.
    ChainBroken { step: usize, previous: Vec<i64>, next: Vec<i64> },
    /// More steps than nonzero entries of the input.
    StepLimit { steps: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial does not take integer values at all integers")]
    NotIntegerValued,
    #[error("invalid sequence {0:?}: {1}")]
    InvalidSequence(Vec<i64>, &'static str),
    #[error("column minima {0:?} are not strictly increasing")]
    NotStrictlyIncreasing(Vec<i64>),
    #[error("column {0} is empty but a later column is not")]
    GapInColumns(usize),
    #[error("table is empty")]
    EmptyTable,
    #[error("tables have incompatible shapes: {0}")]
    IncompatibleShapes(String),
    #[error("window too narrow: {0}")]
    WindowTooNarrow(String),
    #[error("cohomology table is not marked complete")]
    IncompleteTable,
    #[error("table is not in the cone: {0:?}")]
    NotInCone(ConeEvidence),
    #[error("dual regularity violated: a = {a} < {min}")]
    RegularityViolation { a: i64, min: i64 },
    #[error("no facet at tau = {tau}: entries {tau} and {} differ by {gap}, not 2", tau + 1)]
    GapNotTwo { tau: usize, gap: i64 },
    #[error("not a facet: {0}")]
    NotAFacet(String),
    #[error("first {0} Herzog-Kuehl moments do not all vanish")]
    MomentsNonzero(usize),
    #[error("column {0} is empty")]
    EmptyColumn(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("inconsistent cohomology table: {0}")]
    InconsistentTable(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency check failed: {0}")]
    Assertion(String),
    #[error("parse error: {0}")]
    Parse(String),
}
