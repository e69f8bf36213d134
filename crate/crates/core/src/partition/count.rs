use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::enumerate::{count_partitions, for_each_partition, Constraint};
use super::predicates::{
    c_predicate_unchecked, congruence_allows, shifted_b_unchecked, shifted_c_unchecked, CForm,
};
use super::Partition;
use crate::error::{check_ri, Error, Result};

/// The partition sets counted on either side of the identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "lowercase")]
pub enum Family {
    /// Parts not congruent to `0, ±i` mod `2r+1`.
    A { r: usize, i: usize },
    /// Gap `λ_j − λ_{j+r−1} ≥ 2`, at most `i−1` ones.
    B { r: usize, i: usize },
    /// Some new part vanishes.
    C { r: usize, i: usize },
    /// Smallest part exceeds `m + k − i`.
    #[serde(rename = "c2k")]
    ShiftedC { k: u32, i: usize },
    /// Parts `≥ k`, at most `i−1` equal to `k`, pairwise gaps `≥ 2`.
    #[serde(rename = "b2k")]
    ShiftedB { k: u32, i: usize },
}

impl Family {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Family::A { r, i } | Family::B { r, i } | Family::C { r, i } => check_ri(r, i),
            Family::ShiftedC { k, i } | Family::ShiftedB { k, i } => {
                if !(1..=2).contains(&i) {
                    Err(Error::ParameterRange(format!("i = {i}, need i in {{1, 2}}")))
                } else if k < 1 {
                    Err(Error::ParameterRange("k must be at least 1".into()))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Membership without parameter validation.
    pub(crate) fn contains(&self, p: &Partition) -> bool {
        match *self {
            Family::A { r, i } => p.parts().iter().all(|&x| congruence_allows(x, r, i)),
            Family::B { r, i } => {
                p.parts().windows(r).all(|w| w[0] >= w[r - 1] + 2) && p.multiplicity(1) < i
            }
            Family::C { r, i } => c_predicate_unchecked(p, r, i, CForm::Vanishing),
            Family::ShiftedC { k, i } => shifted_c_unchecked(p, k, i),
            Family::ShiftedB { k, i } => shifted_b_unchecked(p, k, i),
        }
    }
}

impl Constraint for Family {
    fn accepts(&self, partition: &Partition) -> bool {
        self.contains(partition)
    }

    fn admits_prefix(&self, prefix: &[u32]) -> bool {
        let last = *prefix.last().expect("prefix is never empty");
        match *self {
            Family::A { r, i } => congruence_allows(last, r, i),
            Family::B { r, i } => {
                let n = prefix.len();
                let window_ok = n < r || prefix[n - r] >= last + 2;
                let ones = if last == 1 { prefix.iter().rev().take_while(|&&x| x == 1).count() } else { 0 };
                window_ok && ones < i
            }
            Family::ShiftedB { k, i } => {
                let n = prefix.len();
                last >= k
                    && (n < 2 || prefix[n - 2] >= last + 2)
                    && (last != k || i >= 2)
            }
            Family::C { .. } | Family::ShiftedC { .. } => true,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::A { r, i } => write!(f, "A(r={r},i={i})"),
            Family::B { r, i } => write!(f, "B(r={r},i={i})"),
            Family::C { r, i } => write!(f, "C(r={r},i={i})"),
            Family::ShiftedC { k, i } => write!(f, "c2k(k={k},i={i})"),
            Family::ShiftedB { k, i } => write!(f, "b2k(k={k},i={i})"),
        }
    }
}

/// Family tag as accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyTag {
    A,
    B,
    C,
    C2k,
    B2k,
    C3,
    B3,
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(FamilyTag::A),
            "B" | "b" => Ok(FamilyTag::B),
            "C" | "c" => Ok(FamilyTag::C),
            "c2k" => Ok(FamilyTag::C2k),
            "b2k" => Ok(FamilyTag::B2k),
            "c3" => Ok(FamilyTag::C3),
            "b3" => Ok(FamilyTag::B3),
            other => Err(Error::ParameterRange(format!("unknown family tag {other:?}"))),
        }
    }
}

impl FamilyTag {
    /// Resolves a tag with its parameters; `c3`/`b3` fix `r = 3`.
    pub fn with_params(self, r: usize, i: usize, k: u32) -> Family {
        match self {
            FamilyTag::A => Family::A { r, i },
            FamilyTag::B => Family::B { r, i },
            FamilyTag::C => Family::C { r, i },
            FamilyTag::C3 => Family::C { r: 3, i },
            FamilyTag::B3 => Family::B { r: 3, i },
            FamilyTag::C2k => Family::ShiftedC { k, i },
            FamilyTag::B2k => Family::ShiftedB { k, i },
        }
    }
}

/// A partition family with an optional fixed number of parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CountFamily {
    pub family: Family,
    pub length: Option<usize>,
}

impl CountFamily {
    pub fn new(family: Family) -> Self {
        CountFamily { family, length: None }
    }

    pub fn with_length(family: Family, length: usize) -> Self {
        CountFamily { family, length: Some(length) }
    }
}

impl Constraint for CountFamily {
    fn accepts(&self, partition: &Partition) -> bool {
        self.length.is_none_or(|m| partition.len() == m) && self.family.contains(partition)
    }

    fn admits_prefix(&self, prefix: &[u32]) -> bool {
        self.family.admits_prefix(prefix)
    }
}

/// Exact number of partitions of `n` in the family.
pub fn count(family: &CountFamily, n: u32) -> Result<BigUint> {
    family.family.validate()?;
    Ok(count_partitions(n, family.length, family))
}

/// `counts[m]` = number of partitions of `n` in `family` with exactly `m`
/// parts, for `m ≤ max_m`.
pub fn count_by_length(family: &Family, n: u32, max_m: usize) -> Result<Vec<BigUint>> {
    family.validate()?;
    let mut counts = vec![BigUint::default(); max_m + 1];
    for_each_partition(n, Some(max_m), family, |p| counts[p.len()] += 1u32);
    Ok(counts)
}
