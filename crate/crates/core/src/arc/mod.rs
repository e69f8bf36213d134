//! The differential ideal `[x₁ʳ]` in `k[x₁, x₂, …]` with `D(x_i) = x_{i+1}`,
//! and its leading ideal under weighted monomial orders, computed one weight
//! at a time by exact elimination.

mod echelon;

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::hilbert::Monomial;

pub use echelon::{
    graded_echelon, graded_ideal_spanning_set, leading_ideal_minimal_generators,
    leading_ideal_report, leading_monomials_at_weight, report_from_weights, CandidateDiff,
    GradedEchelon, LeadingIdealReport, WeightRow,
};

/// A finite integer combination of monomials.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct DiffPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl DiffPolynomial {
    pub fn zero() -> Self {
        DiffPolynomial::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigInt::from(1))
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut p = DiffPolynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The common weight of all terms, `None` if zero or mixed.
    pub fn weight(&self) -> Option<u64> {
        let mut weights = self.terms.keys().map(Monomial::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> DiffPolynomial {
        DiffPolynomial { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// One application of `D`, by the Leibniz rule.
    pub fn derive_once(&self) -> DiffPolynomial {
        let mut out = DiffPolynomial::zero();
        for (m, c) in &self.terms {
            for &(v, e) in m.exps() {
                let moved = m.colon_var(v).mul(&Monomial::var(v + 1));
                out.add_term(moved, c * BigInt::from(e));
            }
        }
        out
    }

    /// The leading term under `order`.
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }
}

/// `D^j(f)`.
pub fn derive(f: &DiffPolynomial, j: usize) -> DiffPolynomial {
    let mut out = f.clone();
    for _ in 0..j {
        out = out.derive_once();
    }
    out
}

impl fmt::Display for DiffPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DiffPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Weighted monomial orders: both compare the weight first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Ties broken at the first differing variable from `x₁`; the larger
    /// exponent wins.
    Wlex,
    /// Ties broken at the last differing variable; the larger exponent loses.
    Wrevlex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        a.weight().cmp(&b.weight()).then_with(|| {
            let top = a.max_var().unwrap_or(0).max(b.max_var().unwrap_or(0));
            match self {
                MonomialOrder::Wlex => (1..=top)
                    .map(|v| a.exponent(v).cmp(&b.exponent(v)))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal),
                MonomialOrder::Wrevlex => (1..=top)
                    .rev()
                    .map(|v| b.exponent(v).cmp(&a.exponent(v)))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal),
            }
        })
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> crate::error::Result<Self> {
        match s {
            "wlex" => Ok(MonomialOrder::Wlex),
            "wrevlex" => Ok(MonomialOrder::Wrevlex),
            other => Err(crate::error::Error::ParameterRange(format!("unknown order {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn leibniz_on_square() {
        let f = DiffPolynomial::monomial(Monomial::power(1, 2));
        assert_eq!(derive(&f, 0), f);
        assert_eq!(derive(&f, 1), DiffPolynomial::term(m(&[(1, 1), (2, 1)]), 2.into()));
        let mut second = DiffPolynomial::term(m(&[(2, 2)]), 2.into());
        second.add_term(m(&[(1, 1), (3, 1)]), 2.into());
        assert_eq!(derive(&f, 2), second);
        assert_eq!(derive(&f, 5).weight(), Some(7));
    }

    #[test]
    fn orders_at_weight_four() {
        let a = m(&[(1, 1), (3, 1)]);
        let b = m(&[(2, 2)]);
        assert_eq!(MonomialOrder::Wlex.compare(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::Wrevlex.compare(&a, &b), Ordering::Less);
        let heavy = m(&[(5, 1)]);
        assert_eq!(MonomialOrder::Wlex.compare(&heavy, &a), Ordering::Greater);
        assert_eq!(MonomialOrder::Wrevlex.compare(&a, &a), Ordering::Equal);
    }
}
