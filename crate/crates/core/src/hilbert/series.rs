use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::ideal::{ideal_generators, IdealFamily, MonomialIdeal};
use super::monomial::{minimalize, Monomial};
use crate::error::{Error, Result};
use crate::qseries::TruncatedSeries;

fn check_order(ideal: &MonomialIdeal, order: usize) -> Result<()> {
    if order as u64 > ideal.weight_bound {
        return Err(Error::OrderOutOfRange { requested: order, available: ideal.weight_bound as usize });
    }
    Ok(())
}

/// Hilbert-Poincaré series of `k[x_f, …]/I` by counting standard monomials,
/// i.e. partitions with parts `≥ f` divisible by no generator.
pub fn standard_monomial_series(ideal: &MonomialIdeal, order: usize) -> Result<TruncatedSeries> {
    check_order(ideal, order)?;
    let first = ideal.first_var as usize;
    // generators grouped by their largest variable; parts are added in
    // increasing order so only those can start dividing
    let mut by_top: Vec<Vec<&Monomial>> = vec![Vec::new(); order + 1];
    for g in &ideal.generators {
        if g.is_one() {
            return Ok(TruncatedSeries::zero(order));
        }
        let top = g.max_var().expect("non-constant") as usize;
        if g.weight() as usize <= order {
            by_top[top].push(g);
        }
    }
    let mut counts = vec![0u64; order + 1];
    let mut exps = vec![0u32; order + 1];
    standard_walk(first, 0, order, &by_top, &mut exps, &mut counts);
    TruncatedSeries::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

fn standard_walk(
    floor: usize,
    weight: usize,
    order: usize,
    by_top: &[Vec<&Monomial>],
    exps: &mut [u32],
    counts: &mut [u64],
) {
    counts[weight] += 1;
    let mut v = floor;
    while weight + v <= order {
        exps[v] += 1;
        let blocked = by_top[v]
            .iter()
            .any(|g| g.exps().iter().all(|&(w, e)| exps[w as usize] >= e));
        if !blocked {
            standard_walk(v, weight + v, order, by_top, exps, counts);
        }
        exps[v] -= 1;
        v += 1;
    }
}

/// The same series through `HP(E) = q^v HP(E : x_v) + HP(E + x_v)`,
/// splitting on the smallest variable of a non-linear generator.
pub fn hp_via_exact_sequence(ideal: &MonomialIdeal, order: usize) -> Result<TruncatedSeries> {
    check_order(ideal, order)?;
    let mut memo = HashMap::new();
    Ok(hp_split(ideal.generators.clone(), order, ideal.first_var as usize, &mut memo))
}

type Memo = HashMap<(Vec<Monomial>, usize), TruncatedSeries>;

fn hp_split(gens: Vec<Monomial>, order: usize, first: usize, memo: &mut Memo) -> TruncatedSeries {
    let gens: Vec<Monomial> = gens.into_iter().filter(|g| g.weight() as usize <= order).collect();
    if gens.iter().any(Monomial::is_one) {
        return TruncatedSeries::zero(order);
    }
    let key = (gens, order);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let gens = &key.0;
    let pivot = gens.iter().filter(|g| g.degree() > 1).filter_map(Monomial::min_var).min();
    let result = match pivot {
        None => {
            let mut s = TruncatedSeries::one(order);
            for v in first..=order {
                if !gens.iter().any(|g| g.min_var() == Some(v as u32)) {
                    s.mul_geometric(v);
                }
            }
            s
        }
        Some(v) => {
            let v_us = v as usize;
            let colon = minimalize(gens.iter().map(|g| g.colon_var(v)).collect());
            let reduced = hp_split(colon, order - v_us, first, memo);
            let mut shifted = TruncatedSeries::zero(order);
            for (k, c) in reduced.coeffs().iter().enumerate() {
                shifted.add_term(k + v_us, c);
            }
            let mut with_var = gens.clone();
            with_var.push(Monomial::var(v));
            let rest = hp_split(minimalize(with_var), order, first, memo);
            &shifted + &rest
        }
    };
    memo.insert(key, result.clone());
    result
}

/// How the two indices of an `H` series are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HConvention {
    /// `H_l^k = HP(S_k / J_k^l)`.
    Tail,
    /// `H_{r,c}^m = HP` of the block ideal in `k[x_m, …]`.
    Block,
}

/// `H_l^k` (first = l, second = k) or `H_{r,c}^m` (first = c, second = m).
pub fn h_series(
    r: usize,
    first: usize,
    second: usize,
    order: usize,
    convention: HConvention,
) -> Result<TruncatedSeries> {
    let family = match convention {
        HConvention::Tail => IdealFamily::J { r, k: second as u32, l: first },
        HConvention::Block => IdealFamily::Block { r, c: first as u32, m: second as u32 },
    };
    let ideal = ideal_generators(family, order.max(1) as u64)?;
    standard_monomial_series(&ideal, order)
}

/// `H^k = HP(S_k / J_k)`.
pub fn h_plain(r: usize, k: usize, order: usize) -> Result<TruncatedSeries> {
    h_series(r, r, k, order, HConvention::Tail)
}
