use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{check_ri, Error, Result};

/// Difference-at-distance-`r−1` condition with at most `i−1` ones.
pub fn gordon_b_predicate(p: &Partition, r: usize, i: usize) -> Result<bool> {
    check_ri(r, i)?;
    let parts = p.parts();
    let gaps_ok = parts.windows(r).all(|w| w[0] >= w[r - 1] + 2);
    Ok(gaps_ok && p.multiplicity(1) < i)
}

/// No part congruent to `0` or `±i` modulo `2r+1`.
pub fn congruence_a_predicate(p: &Partition, r: usize, i: usize) -> Result<bool> {
    check_ri(r, i)?;
    Ok(p.parts().iter().all(|&x| congruence_allows(x, r, i)))
}

pub(crate) fn congruence_allows(part: u32, r: usize, i: usize) -> bool {
    let modulus = 2 * r as u32 + 1;
    let residue = part % modulus;
    residue != 0 && residue != i as u32 && residue != modulus - i as u32
}

/// The new parts `p_{i,1}, …, p_{i,r}` of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewPartProfile {
    pub r: usize,
    pub i: usize,
    /// `values[ℓ−1] = p_{i,ℓ}` for `ℓ = 1..=r`.
    pub values: Vec<u32>,
    /// Nonzero entries among `p_{i,1}..p_{i,r−1}`.
    pub nonzero: usize,
}

impl NewPartProfile {
    pub fn get(&self, ell: usize) -> u32 {
        self.values[ell - 1]
    }

    /// `Σ_{ℓ=1}^{upto} p_{i,ℓ}`.
    pub fn prefix_sum(&self, upto: usize) -> u64 {
        self.values[..upto].iter().map(|&v| u64::from(v)).sum()
    }

    pub fn has_zero(&self) -> bool {
        self.values.contains(&0)
    }
}

/// Computes the `(i,ℓ)`-new parts for `ℓ = 1..=r`.
///
/// `p_{i,1} = λ_m`; for `2 ≤ ℓ ≤ i`, `p_{i,ℓ} = λ_{m−S}`; for `ℓ > i`,
/// `p_{i,ℓ} = λ_{m+ℓ−i−S}`, where `S = Σ_{j<ℓ} p_{i,j}`. Once an entry is
/// zero every later entry is zero.
pub fn new_parts(p: &Partition, r: usize, i: usize) -> Result<NewPartProfile> {
    check_ri(r, i)?;
    Ok(new_parts_unchecked(p, r, i))
}

pub(crate) fn new_parts_unchecked(p: &Partition, r: usize, i: usize) -> NewPartProfile {
    let m = p.len() as i64;
    let mut values = Vec::with_capacity(r);
    let mut sum: i64 = 0;
    for ell in 1..=r {
        let value = if ell > 1 && values[ell - 2] == 0 {
            0
        } else {
            let index = if ell == 1 {
                m
            } else if ell <= i {
                m - sum
            } else {
                m + ell as i64 - i as i64 - sum
            };
            p.part(index)
        };
        values.push(value);
        sum += i64::from(value);
    }
    let nonzero = values[..r - 1].iter().filter(|&&v| v != 0).count();
    NewPartProfile { r, i, values, nonzero }
}

/// Which statement of the new-part condition to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CForm {
    /// At most `i−1` ones, and either `N_i < r−1` or
    /// `N_i = r−1` with `m ≤ Σ_{j<r} p_{i,j} − (r−i)`.
    Conjecture,
    /// Some `p_{i,ℓ}` with `1 ≤ ℓ ≤ r` vanishes.
    Vanishing,
}

pub fn c_predicate(p: &Partition, r: usize, i: usize, form: CForm) -> Result<bool> {
    check_ri(r, i)?;
    Ok(c_predicate_unchecked(p, r, i, form))
}

pub(crate) fn c_predicate_unchecked(p: &Partition, r: usize, i: usize, form: CForm) -> bool {
    let profile = new_parts_unchecked(p, r, i);
    match form {
        CForm::Vanishing => profile.has_zero(),
        CForm::Conjecture => {
            if p.multiplicity(1) >= i {
                return false;
            }
            if profile.nonzero < r - 1 {
                return true;
            }
            let bound = profile.prefix_sum(r - 1) as i64 - (r - i) as i64;
            p.len() as i64 <= bound
        }
    }
}

fn check_shifted(p: &Partition, m: usize, k: u32, i: usize) -> Result<()> {
    if !(1..=2).contains(&i) {
        return Err(Error::ParameterRange(format!("i = {i}, need i in {{1, 2}}")));
    }
    if k < 1 {
        return Err(Error::ParameterRange("k must be at least 1".into()));
    }
    if p.len() != m {
        return Err(Error::LengthMismatch { expected: m, actual: p.len() });
    }
    Ok(())
}

/// Smallest part exceeds `m + k − i`.
pub fn shifted_c_predicate(p: &Partition, m: usize, k: u32, i: usize) -> Result<bool> {
    check_shifted(p, m, k, i)?;
    Ok(shifted_c_unchecked(p, k, i))
}

pub(crate) fn shifted_c_unchecked(p: &Partition, k: u32, i: usize) -> bool {
    p.is_empty() || i64::from(p.smallest()) > p.len() as i64 + i64::from(k) - i as i64
}

/// Smallest part at least `k`, at most `i−1` parts equal to `k`, and no
/// equal or consecutive parts.
pub fn shifted_b_predicate(p: &Partition, m: usize, k: u32, i: usize) -> Result<bool> {
    check_shifted(p, m, k, i)?;
    Ok(shifted_b_unchecked(p, k, i))
}

pub(crate) fn shifted_b_unchecked(p: &Partition, k: u32, i: usize) -> bool {
    let parts = p.parts();
    (p.is_empty() || p.smallest() >= k)
        && p.multiplicity(k) < i
        && parts.windows(2).all(|w| w[0] >= w[1] + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn gordon_b_examples() {
        assert!(gordon_b_predicate(&Partition::empty(), 3, 1).unwrap());
        assert!(gordon_b_predicate(&part(&[3, 1]), 2, 2).unwrap());
        assert!(!gordon_b_predicate(&part(&[2, 1]), 2, 2).unwrap());
        assert!(!gordon_b_predicate(&part(&[2, 2, 1]), 3, 2).unwrap());
        // two ones allowed only when i = 3
        assert!(gordon_b_predicate(&part(&[3, 1, 1]), 3, 3).unwrap());
        assert!(!gordon_b_predicate(&part(&[3, 1, 1]), 3, 2).unwrap());
        assert!(gordon_b_predicate(&part(&[3, 1]), 2, 0).is_err());
        assert!(gordon_b_predicate(&part(&[3, 1]), 1, 1).is_err());
    }

    #[test]
    fn congruence_examples() {
        assert!(congruence_a_predicate(&Partition::empty(), 2, 2).unwrap());
        assert!(congruence_a_predicate(&part(&[4, 1]), 2, 2).unwrap());
        assert!(!congruence_a_predicate(&part(&[5]), 2, 2).unwrap());
        assert!(!congruence_a_predicate(&part(&[3]), 2, 2).unwrap());
        assert!(congruence_a_predicate(&part(&[3]), 2, 1).unwrap());
    }

    #[test]
    fn new_parts_worked_example() {
        let profile = new_parts(&part(&[4, 4, 3, 2, 2, 2]), 4, 4).unwrap();
        assert_eq!(&profile.values[..3], &[2, 2, 4]);
        assert_eq!(profile.nonzero, 3);
    }

    #[test]
    fn new_parts_small_cases() {
        let empty = new_parts(&Partition::empty(), 4, 2).unwrap();
        assert_eq!(empty.values, vec![0; 4]);
        assert_eq!(empty.nonzero, 0);

        let profile = new_parts(&part(&[2, 1]), 3, 3).unwrap();
        assert_eq!(profile.values, vec![1, 2, 0]);
        assert_eq!(profile.nonzero, 2);
    }

    #[test]
    fn zero_propagates() {
        // (5,1) with r = 4, i = 1: p1 = 1, p2 = λ_{2+2-1-1} = λ_2 = 1,
        // p3 = λ_{2+3-1-2} = λ_2 = 1, p4 = λ_{2+4-1-3} = λ_2 = 1
        let profile = new_parts(&part(&[5, 1]), 4, 1).unwrap();
        assert_eq!(profile.values, vec![1, 1, 1, 1]);
        // (3) with r = 3, i = 3: p1 = 3, p2 = λ_{-2} = 0, p3 forced 0
        let profile = new_parts(&part(&[3]), 3, 3).unwrap();
        assert_eq!(profile.values, vec![3, 0, 0]);
    }

    #[test]
    fn c_predicate_examples() {
        for form in [CForm::Conjecture, CForm::Vanishing] {
            assert!(c_predicate(&Partition::empty(), 4, 2, form).unwrap());
            assert!(c_predicate(&part(&[2, 1]), 3, 3, form).unwrap());
            assert!(!c_predicate(&part(&[1, 1]), 2, 2, form).unwrap());
        }
    }

    #[test]
    fn shifted_examples() {
        assert!(shifted_c_predicate(&Partition::empty(), 0, 1, 1).unwrap());
        assert!(shifted_b_predicate(&Partition::empty(), 0, 1, 1).unwrap());
        assert!(!shifted_c_predicate(&part(&[4, 2]), 2, 2, 2).unwrap());
        assert!(shifted_b_predicate(&part(&[5, 3]), 2, 2, 1).unwrap());
        assert!(!shifted_b_predicate(&part(&[5, 2]), 2, 2, 1).unwrap());
        assert!(shifted_b_predicate(&part(&[5, 2]), 2, 2, 2).unwrap());
        assert!(!shifted_b_predicate(&part(&[4, 3]), 2, 1, 2).unwrap());
        assert_eq!(
            shifted_c_predicate(&part(&[4, 2]), 3, 2, 2),
            Err(Error::LengthMismatch { expected: 3, actual: 2 })
        );
        assert!(shifted_c_predicate(&part(&[4, 2]), 2, 2, 3).is_err());
    }
}
