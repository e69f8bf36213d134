//! Formal power series in `q` truncated modulo `q^{N+1}`, with exact
//! integer coefficients, and the sums and products built from them.

mod sums;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use sums::{
    andrews_gordon_sum, chain_sum_r3, conjecture_sum, double_sum_r3, h_closed_form,
    lemma_qbin_sum, partition_series, product_side, q_binomial, ClosedForm,
};

/// `Σ_{k ≤ N} c_k q^k` modulo `q^{N+1}`. Always holds exactly `N+1`
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<String>,
}

impl TryFrom<SeriesRepr> for TruncatedSeries {
    type Error = String;

    fn try_from(repr: SeriesRepr) -> std::result::Result<Self, String> {
        if repr.coeffs.len() != repr.order + 1 {
            return Err(format!(
                "order {} needs {} coefficients, got {}",
                repr.order,
                repr.order + 1,
                repr.coeffs.len()
            ));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(|e| format!("bad coefficient {c:?}: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}

impl From<TruncatedSeries> for SeriesRepr {
    fn from(s: TruncatedSeries) -> Self {
        SeriesRepr { order: s.order(), coeffs: s.coeffs.iter().map(BigInt::to_string).collect() }
    }
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, 1, order)
    }

    /// `coeff · q^power`, which is zero when `power > order`.
    pub fn monomial(power: usize, coeff: impl Into<BigInt>, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = coeff.into();
        }
        s
    }

    /// Takes `c_0..c_N`; the order is `len − 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ParameterRange("a series needs at least one coefficient".into()));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Convenience constructor; panics on an empty slice.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        TruncatedSeries { coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect() }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^k`; panics for `k > N`.
    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Adds `coeff · q^power` in place, ignoring powers beyond the order.
    pub fn add_term(&mut self, power: usize, coeff: &BigInt) {
        if power <= self.order() {
            self.coeffs[power] += coeff;
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// Multiplication by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![BigInt::zero(); n];
        if k < n {
            coeffs[k..].clone_from_slice(&self.coeffs[..n - k]);
        }
        TruncatedSeries { coeffs }
    }

    /// The same series at a smaller order.
    pub fn restrict(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderOutOfRange { requested: order, available: self.order() });
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() })
    }

    /// Exact division by `q^k`. The quotient is known to order `N − k`.
    pub fn div_q_power(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::OrderOutOfRange { requested: k, available: self.order() });
        }
        if let Some(idx) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::InexactDivision { shift: k, index: idx });
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[k..].to_vec() })
    }

    /// In-place multiplication by `1/(1 − q^k)`, `k ≥ 1`.
    pub fn mul_geometric(&mut self, k: usize) {
        assert!(k >= 1, "1/(1 - q^0) is not a power series");
        for idx in k..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(idx);
            hi[0] += &lo[idx - k];
        }
    }

    /// In-place multiplication by `1 − q^k`.
    pub fn mul_one_minus(&mut self, k: usize) {
        if k == 0 {
            self.coeffs.iter_mut().for_each(|c| c.set_zero());
            return;
        }
        for idx in (k..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(idx);
            hi[0] -= &lo[idx - k];
        }
    }

    /// Multiplicative inverse of a series with constant term `±1`.
    pub fn invert_unit(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(Error::NonUnit(c0.to_string()));
        }
        let n = self.coeffs.len();
        let mut inv: Vec<BigInt> = Vec::with_capacity(n);
        inv.push(c0.clone());
        for k in 1..n {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &inv[k - j];
                }
            }
            // c0 is ±1, so dividing by c0 is multiplying by it
            inv.push(-(acc * c0));
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        TruncatedSeries { coeffs: (0..n).map(|k| f(&self.coeffs[k], &other.coeffs[k])).collect() }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (a_idx, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b_idx, b) in rhs.coeffs[..n - a_idx].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[a_idx + b_idx] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;

            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}q")?,
                _ => write!(f, "{c}q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// `(q)_n = (1−q)(1−q²)⋯(1−qⁿ)` to the given order.
pub fn pochhammer(n: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for k in 1..=n.min(order) {
        s.mul_one_minus(k);
    }
    s
}

/// `1/(q)_n` to the given order, by repeated geometric prefix sums.
pub fn inv_pochhammer(n: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for k in 1..=n.min(order) {
        s.mul_geometric(k);
    }
    s
}

/// Multiplies `s` in place by `1/(q)_n`.
pub(crate) fn divide_by_pochhammer(s: &mut TruncatedSeries, n: usize) {
    let limit = n.min(s.order());
    for k in 1..=limit {
        s.mul_geometric(k);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_inverse() {
        let s = TruncatedSeries::from_ints(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(s.invert_unit().unwrap(), TruncatedSeries::from_ints(&[1, 1, 1, 1, 1, 1]));
        assert!(TruncatedSeries::from_ints(&[2, 1]).invert_unit().is_err());
        let neg = TruncatedSeries::from_ints(&[-1, 1, 0]);
        assert_eq!(&neg * &neg.invert_unit().unwrap(), TruncatedSeries::one(2));
    }

    #[test]
    fn pochhammer_inverse_pair() {
        let p2 = pochhammer(2, 10);
        assert_eq!(p2, TruncatedSeries::from_ints(&[1, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(&p2 * &p2.invert_unit().unwrap(), TruncatedSeries::one(10));
        assert_eq!(p2.invert_unit().unwrap(), inv_pochhammer(2, 10));
        assert_eq!(pochhammer(0, 4), TruncatedSeries::one(4));
    }

    #[test]
    fn exact_division_is_checked() {
        let s = TruncatedSeries::from_ints(&[0, 0, 3, 1]);
        assert_eq!(s.div_q_power(2).unwrap(), TruncatedSeries::from_ints(&[3, 1]));
        assert_eq!(s.div_q_power(3), Err(Error::InexactDivision { shift: 3, index: 2 }));
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = TruncatedSeries::from_ints(&[1, 2, 3]);
        let b = TruncatedSeries::from_ints(&[1, 1]);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!(&a * &b, TruncatedSeries::from_ints(&[1, 3]));
        assert_eq!(a.shift(1), TruncatedSeries::from_ints(&[0, 1, 2]));
    }

    #[test]
    fn json_round_trip() {
        let s = TruncatedSeries::from_ints(&[1, -4, 0]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"order":2,"coeffs":["1","-4","0"]}"#);
        assert_eq!(serde_json::from_str::<TruncatedSeries>(&text).unwrap(), s);
        assert!(serde_json::from_str::<TruncatedSeries>(r#"{"order":3,"coeffs":["1"]}"#).is_err());
    }
}
