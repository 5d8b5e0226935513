use alloc::string::String;
use alloc::vec::Vec;

use crate::exactnum::ExactInt;

/// One exact two-sided comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub claim: &'static str,
    /// Where the comparison was made, e.g. `s=12` or `(3,5)`.
    pub index: String,
    pub lhs: ExactInt,
    pub rhs: ExactInt,
}

impl Comparison {
    pub fn new(claim: &'static str, index: String, lhs: ExactInt, rhs: ExactInt) -> Self {
        Comparison { claim, index, lhs, rhs }
    }

    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// A list of comparisons; it passes when every row is an equality.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub rows: Vec<Comparison>,
}

impl Report {
    pub fn push(&mut self, row: Comparison) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, other: Report) {
        self.rows.extend(other.rows);
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(Comparison::equal)
    }

    pub fn first_failure(&self) -> Option<&Comparison> {
        self.rows.iter().find(|r| !r.equal())
    }
}

impl FromIterator<Comparison> for Report {
    fn from_iter<I: IntoIterator<Item = Comparison>>(iter: I) -> Self {
        Report { rows: iter.into_iter().collect() }
    }
}
