//! Explicit bijections behind the recursive systems for the shifted
//! Rogers-Ramanujan counts and for the `r = 3` new-part counts.
//!
//! Each map carries two membership tests: `domain_contains`, the case split
//! written directly in terms of the parts, and `domain_by_sets`, the same set
//! described as a difference of counted families. The test-suite checks that
//! the two agree before the map itself is trusted.

use serde::{Deserialize, Serialize};

use super::predicates::{c_predicate_unchecked, shifted_c_unchecked, CForm};
use super::Partition;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Bijection {
    /// Deletes the smallest part `m+k−1`:
    /// `c₂ᵏ(m,n) − c₁ᵏ(m,n) → c₁ᵏ(m−1, n−m−k+1)`.
    RrSecondEq { k: u32 },
    /// Subtracts 1 from every part: `c₁ᵏ(m,n) → c₂ᵏ(m, n−m)`.
    RrShift { k: u32 },
    /// Removes `λ_m` and `λ_{m−λ_m}`: `c₃,₃(m,n) − c₃,₂(m,n) → c₃,₁(m−2, n−m)`.
    G3SecondEq,
    /// Three-case map `c₃,₂(m,n) − c₃,₁(m,n) → c₃,₂(m−1, n−m)`.
    G3ThirdEq,
    /// Subtracts 1 from every part: `c₃,₁(m,n) → c₃,₃(m, n−m)`.
    G3FourthEq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Inverse,
}

/// The three disjoint pieces of the `G3ThirdEq` domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ThirdCase {
    /// `λ_m = 1`, `λ_{m−1} ≥ m`.
    UnitTail,
    /// `1 < λ_m < m`, `λ_m + λ_{m−λ_m+1} = m+1 ≤ λ_m + λ_{m−λ_m}`.
    Tight,
    /// `1 < λ_m < m`, `λ_m + λ_{m−λ_m+1} < m+1 ≤ λ_m + λ_{m−λ_m}`.
    Loose,
}

fn c3(p: &Partition, i: usize) -> bool {
    c_predicate_unchecked(p, 3, i, CForm::Vanishing)
}

fn len_i(p: &Partition) -> i64 {
    p.len() as i64
}

fn part_i(p: &Partition, j: i64) -> i64 {
    i64::from(p.part(j))
}

fn build(parts: Vec<u32>) -> Partition {
    Partition::new(parts).expect("bijection produced a non-partition")
}

impl Bijection {
    pub fn name(&self) -> &'static str {
        match self {
            Bijection::RrSecondEq { .. } => "rr_second_eq",
            Bijection::RrShift { .. } => "rr_shift",
            Bijection::G3SecondEq => "g3_second_eq",
            Bijection::G3ThirdEq => "g3_third_eq",
            Bijection::G3FourthEq => "g3_fourth_eq",
        }
    }

    /// Parses a map name; `k` is used by the shifted Rogers-Ramanujan maps.
    pub fn from_name(name: &str, k: u32) -> Result<Self> {
        match name {
            "rr_second_eq" => Ok(Bijection::RrSecondEq { k }),
            "rr_shift" => Ok(Bijection::RrShift { k }),
            "g3_second_eq" => Ok(Bijection::G3SecondEq),
            "g3_third_eq" => Ok(Bijection::G3ThirdEq),
            "g3_fourth_eq" => Ok(Bijection::G3FourthEq),
            other => Err(Error::ParameterRange(format!("unknown bijection {other:?}"))),
        }
    }

    pub fn all(k: u32) -> [Bijection; 5] {
        [
            Bijection::RrSecondEq { k },
            Bijection::RrShift { k },
            Bijection::G3SecondEq,
            Bijection::G3ThirdEq,
            Bijection::G3FourthEq,
        ]
    }

    /// `(Δweight, Δlength)` as a function of the source length `m`:
    /// the image of a partition of `n` with `m` parts has weight
    /// `n − Δweight` and `m − Δlength` parts.
    pub fn bookkeeping(&self, m: usize) -> (u64, usize) {
        let m64 = m as u64;
        match *self {
            Bijection::RrSecondEq { k } => (m64 + u64::from(k) - 1, 1),
            Bijection::RrShift { .. } | Bijection::G3FourthEq => (m64, 0),
            Bijection::G3SecondEq => (m64, 2),
            Bijection::G3ThirdEq => (m64, 1),
        }
    }

    /// Source set written as a case split on the parts.
    pub fn domain_contains(&self, p: &Partition) -> bool {
        let m = len_i(p);
        match *self {
            Bijection::RrSecondEq { k } => m >= 1 && part_i(p, m) == m + i64::from(k) - 1,
            Bijection::RrShift { k } => m == 0 || part_i(p, m) > m + i64::from(k) - 1,
            Bijection::G3SecondEq => {
                if m == 0 {
                    return false;
                }
                let last = part_i(p, m);
                m > last && last + part_i(p, m - last) == m
            }
            Bijection::G3ThirdEq => third_case(p).is_some(),
            Bijection::G3FourthEq => {
                if m == 0 {
                    return true;
                }
                let last = part_i(p, m);
                last != 1
                    && (last > m || (last + part_i(p, m + 1 - last) >= m + 2))
            }
        }
    }

    /// Source set written as a difference of counted families.
    pub fn domain_by_sets(&self, p: &Partition) -> bool {
        match *self {
            Bijection::RrSecondEq { k } => {
                shifted_c_unchecked(p, k, 2) && !shifted_c_unchecked(p, k, 1)
            }
            Bijection::RrShift { k } => shifted_c_unchecked(p, k, 1),
            Bijection::G3SecondEq => c3(p, 3) && !c3(p, 2),
            Bijection::G3ThirdEq => c3(p, 2) && !c3(p, 1),
            Bijection::G3FourthEq => c3(p, 1),
        }
    }

    /// Target set, as a counted family.
    pub fn codomain_contains(&self, p: &Partition) -> bool {
        match *self {
            Bijection::RrSecondEq { k } => shifted_c_unchecked(p, k, 1),
            Bijection::RrShift { k } => shifted_c_unchecked(p, k, 2),
            Bijection::G3SecondEq => c3(p, 1),
            Bijection::G3ThirdEq => c3(p, 2),
            Bijection::G3FourthEq => c3(p, 3),
        }
    }

    pub fn apply(&self, direction: Direction, p: &Partition) -> Result<Partition> {
        match direction {
            Direction::Forward => self.forward(p),
            Direction::Inverse => self.inverse(p),
        }
    }

    fn violation(&self, p: &Partition) -> Error {
        Error::DomainViolation { map: self.name().to_string(), input: p.to_string() }
    }

    pub fn forward(&self, p: &Partition) -> Result<Partition> {
        if !self.domain_contains(p) {
            return Err(self.violation(p));
        }
        let parts = p.parts();
        let m = parts.len();
        let image = match *self {
            Bijection::RrSecondEq { .. } => parts[..m - 1].to_vec(),
            Bijection::RrShift { .. } | Bijection::G3FourthEq => {
                parts.iter().map(|&x| x - 1).collect()
            }
            Bijection::G3SecondEq => {
                // drop positions m and m − λ_m (1-based)
                let second = m - parts[m - 1] as usize;
                parts
                    .iter()
                    .enumerate()
                    .filter(|&(idx, _)| idx + 1 != m && idx + 1 != second)
                    .map(|(_, &x)| x)
                    .collect()
            }
            Bijection::G3ThirdEq => {
                let last = parts[m - 1] as usize;
                match third_case(p).expect("checked above") {
                    ThirdCase::UnitTail => parts[..m - 1].iter().map(|&x| x - 1).collect(),
                    ThirdCase::Tight => {
                        // keep λ_1..λ_{m−λ_m}, drop λ_{m+1−λ_m}, lower the rest
                        let mut out = parts[..m - last].to_vec();
                        out.extend(parts[m + 1 - last..].iter().map(|&x| x - 1));
                        out
                    }
                    ThirdCase::Loose => {
                        // lower λ_1..λ_{m−λ_m}, keep λ_{m+1−λ_m}..λ_{m−1}
                        let mut out: Vec<u32> = parts[..m - last].iter().map(|&x| x - 1).collect();
                        out.extend_from_slice(&parts[m - last..m - 1]);
                        out
                    }
                }
            }
        };
        Ok(build(image))
    }

    pub fn inverse(&self, mu: &Partition) -> Result<Partition> {
        if !self.codomain_contains(mu) {
            return Err(self.violation(mu));
        }
        let parts = mu.parts();
        let image = match *self {
            Bijection::RrSecondEq { k } => {
                let m = parts.len() as u32 + 1;
                let mut out = parts.to_vec();
                out.push(m + k - 1);
                out
            }
            Bijection::RrShift { .. } | Bijection::G3FourthEq => {
                parts.iter().map(|&x| x + 1).collect()
            }
            Bijection::G3SecondEq => g3_second_inverse(mu),
            Bijection::G3ThirdEq => g3_third_inverse(mu),
        };
        let image = build(image);
        debug_assert!(self.domain_contains(&image), "{} inverse left the domain", self.name());
        Ok(image)
    }
}

fn third_case(p: &Partition) -> Option<ThirdCase> {
    let m = len_i(p);
    if m == 0 {
        return None;
    }
    let last = part_i(p, m);
    if last == 1 {
        // for m = 1 the condition on λ_{m−1} is vacuous: (1) ↦ ()
        return (m == 1 || part_i(p, m - 1) >= m).then_some(ThirdCase::UnitTail);
    }
    if last >= m {
        return None;
    }
    let upper = last + part_i(p, m - last);
    let lower = last + part_i(p, m - last + 1);
    if upper < m + 1 {
        return None;
    }
    match lower.cmp(&(m + 1)) {
        std::cmp::Ordering::Equal => Some(ThirdCase::Tight),
        std::cmp::Ordering::Less => Some(ThirdCase::Loose),
        std::cmp::Ordering::Greater => None,
    }
}

/// Inverse of the `G3SecondEq` removal; `mu` has `m − 2` parts.
fn g3_second_inverse(mu: &Partition) -> Vec<u32> {
    let m = len_i(mu) + 2;
    let tail = if mu.is_empty() { i64::MAX } else { part_i(mu, m - 2) };
    let parts = mu.parts();
    if tail > m - 2 {
        let mut out = parts.to_vec();
        out.push((m - 1) as u32);
        out.push(1);
        return out;
    }
    // A = {1 ≤ a ≤ μ_{m−2} : m − a > μ_{m−a−1}}, k = max A + 1
    let k_prime = (1..=tail)
        .filter(|&a| m - a > part_i(mu, m - a - 1))
        .max()
        .expect("a = 1 always lies in A");
    let k = k_prime + 1;
    // (μ_1..μ_{m−k−1}, m−k, μ_{m−k}..μ_{m−2}, k)
    let split = (m - k - 1) as usize;
    let mut out = parts[..split].to_vec();
    out.push((m - k) as u32);
    out.extend_from_slice(&parts[split..]);
    out.push(k as u32);
    out
}

/// Inverse of the three-case map; `mu` has `m − 1` parts.
fn g3_third_inverse(mu: &Partition) -> Vec<u32> {
    let m = len_i(mu) + 1;
    let parts = mu.parts();
    if mu.is_empty() || part_i(mu, m - 1) > m - 2 {
        let mut out: Vec<u32> = parts.iter().map(|&x| x + 1).collect();
        out.push(1);
        return out;
    }
    let tail = part_i(mu, m - 1);
    if tail + part_i(mu, m - tail) < m {
        // (μ_1..μ_{m−1−μ_{m−1}}, m − μ_{m−1}, μ_{m−μ_{m−1}}+1..μ_{m−1}+1)
        let split = (m - 1 - tail) as usize;
        let mut out = parts[..split].to_vec();
        out.push((m - tail) as u32);
        out.extend(parts[split..].iter().map(|&x| x + 1));
        return out;
    }
    let k = if m <= part_i(mu, m - 2) + 2 {
        2
    } else {
        // B = {2 ≤ b ≤ μ_{m−1} : m > μ_{m−b} + b}, k = max B + 1
        (2..=tail)
            .filter(|&b| m > part_i(mu, m - b) + b)
            .max()
            .expect("b = 2 always lies in B")
            + 1
    };
    // (μ_1+1..μ_{m−k}+1, μ_{m−k+1}..μ_{m−1}, k)
    let split = (m - k) as usize;
    let mut out: Vec<u32> = parts[..split].iter().map(|&x| x + 1).collect();
    out.extend_from_slice(&parts[split..]);
    out.push(k as u32);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn g3_second_example() {
        let image = Bijection::G3SecondEq.forward(&part(&[2, 2, 1])).unwrap();
        assert_eq!(image, part(&[2]));
        assert_eq!(Bijection::G3SecondEq.inverse(&image).unwrap(), part(&[2, 2, 1]));
    }

    #[test]
    fn rr_shift_example() {
        let map = Bijection::RrShift { k: 1 };
        assert_eq!(map.forward(&part(&[4, 3])).unwrap(), part(&[3, 2]));
        assert_eq!(map.inverse(&part(&[3, 2])).unwrap(), part(&[4, 3]));
    }

    #[test]
    fn rr_second_deletes_smallest() {
        let map = Bijection::RrSecondEq { k: 2 };
        // m = 2, smallest part must be m + k − 1 = 3
        assert_eq!(map.forward(&part(&[5, 3])).unwrap(), part(&[5]));
        assert!(matches!(map.forward(&part(&[5, 4])), Err(Error::DomainViolation { .. })));
    }

    #[test]
    fn single_one_maps_to_empty() {
        let map = Bijection::G3ThirdEq;
        assert!(map.domain_by_sets(&part(&[1])));
        assert_eq!(map.forward(&part(&[1])).unwrap(), Partition::empty());
        assert_eq!(map.inverse(&Partition::empty()).unwrap(), part(&[1]));
    }

    #[test]
    fn names_round_trip() {
        for map in Bijection::all(2) {
            assert_eq!(Bijection::from_name(map.name(), 2).unwrap(), map);
        }
        assert!(Bijection::from_name("nope", 1).is_err());
    }
}
