use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::Partition;

/// A monomial `x_{a₁}^{e₁}⋯x_{a_k}^{e_k}` in the weighted variables
/// `wt(x_j) = j`. Stored as `(variable, exponent)` pairs sorted by variable,
/// with no zero exponents.
///
/// Serialized as the associated partition, largest part first.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Partition", into = "Partition")]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: u32) -> Self {
        Monomial::power(v, 1)
    }

    pub fn power(v: u32, e: u32) -> Self {
        assert!(v >= 1, "variables are indexed from 1");
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { exps: vec![(v, e)] }
        }
    }

    /// Builds from arbitrary `(variable, exponent)` pairs, merging repeats.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut exps: Vec<(u32, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        assert!(exps.iter().all(|&(v, _)| v >= 1), "variables are indexed from 1");
        exps.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((last, acc)) if *last == v => *acc += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { exps: merged }
    }

    /// `x_{λ₁}⋯x_{λ_m}`.
    pub fn from_partition(p: &Partition) -> Self {
        Monomial::from_pairs(p.parts().iter().map(|&v| (v, 1)))
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.degree() as usize);
        for &(v, e) in self.exps.iter().rev() {
            parts.extend(std::iter::repeat_n(v, e as usize));
        }
        Partition::from_sorted_unchecked(parts)
    }

    /// `(variable, exponent)` pairs in increasing variable order.
    pub fn exps(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: u32) -> u32 {
        self.exps.binary_search_by_key(&v, |&(w, _)| w).map_or(0, |idx| self.exps[idx].1)
    }

    pub fn weight(&self) -> u64 {
        self.exps.iter().map(|&(v, e)| u64::from(v) * u64::from(e)).sum()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn min_var(&self) -> Option<u32> {
        self.exps.first().map(|&(v, _)| v)
    }

    pub fn max_var(&self) -> Option<u32> {
        self.exps.last().map(|&(v, _)| v)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut theirs = other.exps.iter().peekable();
        for &(v, e) in &self.exps {
            loop {
                match theirs.peek() {
                    Some(&&(w, _)) if w < v => {
                        theirs.next();
                    }
                    Some(&&(w, f)) if w == v => {
                        if f < e {
                            return false;
                        }
                        theirs.next();
                        break;
                    }
                    _ => return false,
                }
            }
        }
        true
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.exps.iter().chain(other.exps.iter()).copied())
    }

    /// `self / gcd(self, x_v)`: lowers the exponent of `x_v` by one if present.
    pub fn colon_var(&self, v: u32) -> Monomial {
        let exps = self
            .exps
            .iter()
            .filter_map(|&(w, e)| if w == v { (e > 1).then_some((w, e - 1)) } else { Some((w, e)) })
            .collect();
        Monomial { exps }
    }
}

impl From<Partition> for Monomial {
    fn from(p: Partition) -> Self {
        Monomial::from_partition(&p)
    }
}

impl From<Monomial> for Partition {
    fn from(m: Monomial) -> Self {
        m.to_partition()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (idx, &(v, e)) in self.exps.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Drops every monomial divisible by another one in the list, and sorts the
/// survivors by `(weight, degree, monomial)`.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| (a.degree(), a.weight(), a).cmp(&(b.degree(), b.weight(), b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| (a.weight(), a.degree(), a).cmp(&(b.weight(), b.degree(), b)));
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_correspondence() {
        let p = Partition::new(vec![3, 1, 1]).unwrap();
        let m = Monomial::from_partition(&p);
        assert_eq!(m.exps(), &[(1, 2), (3, 1)]);
        assert_eq!((m.weight(), m.degree()), (5, 3));
        assert_eq!(m.to_partition(), p);
        assert_eq!(m.to_string(), "x1^2*x3");
        assert_eq!(serde_json::to_string(&m).unwrap(), "[3,1,1]");
    }

    #[test]
    fn divisibility_and_colon() {
        let a = Monomial::from_pairs([(1, 1), (2, 2)]);
        let b = Monomial::from_pairs([(1, 2), (2, 2), (5, 1)]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert!(Monomial::one().divides(&a));
        assert!(!Monomial::var(3).divides(&b));
        assert_eq!(a.colon_var(1), Monomial::power(2, 2));
        assert_eq!(a.colon_var(4), a);
        assert_eq!(a.mul(&a), Monomial::from_pairs([(1, 2), (2, 4)]));
    }

    #[test]
    fn minimalize_removes_multiples() {
        let gens = vec![
            Monomial::from_pairs([(1, 2)]),
            Monomial::from_pairs([(1, 3)]),
            Monomial::from_pairs([(1, 1), (2, 1)]),
            Monomial::from_pairs([(1, 2)]),
        ];
        assert_eq!(minimalize(gens), vec![Monomial::power(1, 2), Monomial::from_pairs([(1, 1), (2, 1)])]);
    }
}
