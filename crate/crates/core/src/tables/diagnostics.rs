use std::fmt;

/// A single validation finding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Issue {
    EmptyTable,
    ColumnOutOfRange { column: usize, n: usize },
    /// `row`/`index` are (column, degree) for Betti tables and (row, twist) for cohomology tables.
    NegativeEntry { row: usize, index: i64, value: String },
    ZeroDisplayColumn { column: i64 },
    TopRowIncreases { column: i64, from: usize, to: usize },
    BottomRowIncreases { column: i64, from: usize, to: usize },
    NegativeTail { row: usize, twist: i64 },
    TailDegree { row: usize, degree: usize, m: usize },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::EmptyTable => write!(f, "table is empty"),
            Issue::ColumnOutOfRange { column, n } => write!(f, "column {column} exceeds n = {n}"),
            Issue::NegativeEntry { row, index, value } => write!(f, "negative entry {value} at ({row}, {index})"),
            Issue::ZeroDisplayColumn { column } => write!(f, "display column {column} is entirely zero"),
            Issue::TopRowIncreases { column, from, to } => {
                write!(f, "highest nonzero row rises from {from} to {to} at display column {column}")
            }
            Issue::BottomRowIncreases { column, from, to } => {
                write!(f, "lowest nonzero row rises from {from} to {to} at display column {column}")
            }
            Issue::NegativeTail { row, twist } => write!(f, "tail of row {row} is negative at twist {twist}"),
            Issue::TailDegree { row, degree, m } => write!(f, "tail of row {row} has degree {degree} > {m}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub issues: Vec<Issue>,
}

impl Diagnostics {
    pub fn push(&mut self, issue: Issue) {
        self.issues.push(issue);
    }

    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "valid");
        }
        for (k, issue) in self.issues.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{issue}")?;
        }
        Ok(())
    }
}
