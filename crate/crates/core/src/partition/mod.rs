//! Integer partitions, the constraint families built on them, counts, the
//! Andrews-style recursive systems, and the explicit bijections that prove
//! those systems.
//!
//! Partitions are stored largest-first, `λ₁ ≥ λ₂ ≥ … ≥ λ_m`. Index formulas
//! that count "from the right" are expressed through [`Partition::part`],
//! which is 1-based and returns 0 for non-positive indices.

mod bijection;
mod count;
mod enumerate;
mod predicates;
mod system;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bijection::{Bijection, Direction};
pub use count::{count, count_by_length, CountFamily, Family, FamilyTag};
pub use enumerate::{
    count_partitions, enumerate_partitions, for_each_partition, Constraint, Unconstrained,
};
pub use predicates::{
    c_predicate, congruence_a_predicate, gordon_b_predicate, new_parts, shifted_b_predicate,
    shifted_c_predicate, CForm, NewPartProfile,
};
pub(crate) use predicates::{congruence_allows, new_parts_unchecked};
pub use system::{
    andrews_system_check, AndrewsSystem, Counterexample, EquationResult, Side, SystemReport,
};

/// A finite non-increasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// The empty partition, the unique partition of 0.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts given largest-first.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not non-increasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Number of parts `m`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// `λ_j` with 1-based `j`; `λ_j = 0` for `j ≤ 0`.
    ///
    /// Panics if `j` exceeds the length.
    pub fn part(&self, j: i64) -> u32 {
        if j <= 0 {
            0
        } else {
            self.0[(j - 1) as usize]
        }
    }

    /// Smallest part `λ_m`, 0 for the empty partition.
    pub fn smallest(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: u32) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, p) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_parts() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn right_indexing_pads_with_zero() {
        let p = Partition::new(vec![4, 4, 3, 2, 2, 2]).unwrap();
        assert_eq!(p.part(0), 0);
        assert_eq!(p.part(-3), 0);
        assert_eq!(p.part(1), 4);
        assert_eq!(p.part(6), 2);
        assert_eq!(p.weight(), 17);
        assert_eq!(p.to_string(), "(4,4,3,2,2,2)");
    }

    #[test]
    fn serde_validates() {
        let p: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(p.parts(), &[3, 1]);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
