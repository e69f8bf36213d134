use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{divide_by_pochhammer, pochhammer, TruncatedSeries};
use crate::error::{check_ri, Error, Result};
use crate::partition::{congruence_allows, new_parts_unchecked, Partition};

/// `Π_{k ≥ 1} 1/(1 − q^k)`, the generating series of all partitions.
pub fn partition_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for k in 1..=order {
        s.mul_geometric(k);
    }
    s
}

/// `Π 1/(1 − qⁿ)` over `n ≥ 1`, `n ≢ 0, ±i (mod 2r+1)`.
pub fn product_side(r: usize, i: usize, order: usize) -> Result<TruncatedSeries> {
    check_ri(r, i)?;
    let mut s = TruncatedSeries::one(order);
    for n in 1..=order {
        if congruence_allows(n as u32, r, i) {
            s.mul_geometric(n);
        }
    }
    Ok(s)
}

/// The Andrews-Gordon multi-sum over `n₁, …, n_{r−1} ≥ 0` with
/// `N_j = n_j + ⋯ + n_{r−1}`:
/// `q^{N₁²+⋯+N_{r−1}² + N_i+⋯+N_{r−1}} / ((q)_{n₁}⋯(q)_{n_{r−1}})`.
pub fn andrews_gordon_sum(r: usize, i: usize, order: usize) -> Result<TruncatedSeries> {
    check_ri(r, i)?;
    let mut acc = TruncatedSeries::zero(order);
    let mut big_n = Vec::with_capacity(r - 1);
    ag_descend(r, i, order, usize::MAX, 0, &mut big_n, &mut acc);
    Ok(acc)
}

fn ag_descend(
    r: usize,
    i: usize,
    order: usize,
    bound: usize,
    exponent: usize,
    big_n: &mut Vec<usize>,
    acc: &mut TruncatedSeries,
) {
    let j = big_n.len() + 1;
    if j == r {
        let mut term = TruncatedSeries::monomial(exponent, 1, order);
        for (idx, &n_j) in big_n.iter().enumerate() {
            let next = big_n.get(idx + 1).copied().unwrap_or(0);
            divide_by_pochhammer(&mut term, n_j - next);
        }
        *acc = &*acc + &term;
        return;
    }
    let linear = usize::from(j >= i);
    let mut value = 0;
    loop {
        if value > bound {
            break;
        }
        // later N's only add nonnegative amounts
        let e = exponent + value * value + linear * value;
        if e > order {
            break;
        }
        big_n.push(value);
        ag_descend(r, i, order, value, e, big_n, acc);
        big_n.pop();
        value += 1;
    }
}

/// Gaussian binomial `(q)_n / ((q)_j (q)_{n−j})`.
pub fn q_binomial(n: usize, j: usize, order: usize) -> Result<TruncatedSeries> {
    if j > n {
        return Err(Error::ParameterRange(format!("q-binomial needs j <= n, got j = {j}, n = {n}")));
    }
    let mut s = pochhammer(n, order);
    divide_by_pochhammer(&mut s, j);
    divide_by_pochhammer(&mut s, n - j);
    Ok(s)
}

/// `Σ q^{ℓ₁+⋯+ℓ_j − j²}` over chains `j ≤ ℓ_j ≤ ⋯ ≤ ℓ₁ ≤ n`, by direct
/// enumeration.
pub fn lemma_qbin_sum(n: usize, j: usize, order: usize) -> Result<TruncatedSeries> {
    if j > n {
        return Err(Error::ParameterRange(format!("chain sum needs j <= n, got j = {j}, n = {n}")));
    }
    let mut counts = vec![0u64; order + 1];
    let shift = j * j;
    for_each_chain(j as u32, n as u32, order + shift, Some(j), &mut |chain, sum| {
        if chain.len() == j {
            counts[sum - shift] += 1;
        }
    });
    TruncatedSeries::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

/// Left side of the `r = 3` analytic identity:
/// `Σ q^{(n₁+n₂)² + n₂²} / ((q)_{n₁}(q)_{n₂})`.
pub fn double_sum_r3(order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(order);
    for n2 in 0.. {
        if 2 * n2 * n2 > order {
            break;
        }
        for n1 in 0.. {
            let e = (n1 + n2) * (n1 + n2) + n2 * n2;
            if e > order {
                break;
            }
            let mut term = TruncatedSeries::monomial(e, 1, order);
            divide_by_pochhammer(&mut term, n1);
            divide_by_pochhammer(&mut term, n2);
            acc = &acc + &term;
        }
    }
    acc
}

/// Right side of the `r = 3` analytic identity:
/// `Σ q^{n² + ℓ₁+⋯+ℓ_j} / (q)_n` over `0 ≤ j ≤ ℓ_j ≤ ⋯ ≤ ℓ₁ ≤ n`.
pub fn chain_sum_r3(order: usize) -> TruncatedSeries {
    chain_form(order, 0, |n| (1, n), |chain| chain.last().is_none_or(|&s| s as usize >= chain.len()))
}

/// The conjectured closed chain form of `H¹_{r,1}`: chains `μ` with parts in
/// `[1, n]` and `1 ≤ j ≤ Σ_{ℓ=1}^{r−2} p_{r,ℓ}(μ)`, together with
/// `1 + Σ_{n≥1} q^{n²}/(q)_n`.
pub fn conjecture_sum(r: usize, order: usize) -> Result<TruncatedSeries> {
    if r < 3 {
        return Err(Error::ParameterRange(format!("conjecture sum needs r >= 3, got {r}")));
    }
    Ok(chain_form(order, 0, |n| (1, n), |chain| {
        chain.is_empty() || chain.len() as u64 <= new_part_bound(chain, r)
    }))
}

/// `Σ_{ℓ=1}^{r−2} p_{r,ℓ}(μ)` for a chain stored largest-first.
fn new_part_bound(mu: &[u32], r: usize) -> u64 {
    let profile = new_parts_unchecked(&Partition::from_sorted_unchecked(mu.to_vec()), r, r);
    profile.prefix_sum(r - 2)
}

/// Which closed form of `H_{r,c}^m` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum ClosedForm {
    Rank2,
    Rank3,
    General { r: usize },
}

/// Evaluates a closed form for the Hilbert series `H_{r,c}^m` of the block
/// ideal by bounded enumeration.
///
/// For the general form the chain condition is
/// `1 ≤ j ≤ Σ_{ℓ=1}^{r−2} p_{r,ℓ}(μ) + c − 1` where `μ = (ℓ₁, …, ℓ_{j−c+1})`
/// is the largest `j−c+1` chain entries (empty when `j < c`).
pub fn h_closed_form(form: ClosedForm, c: usize, m: usize, order: usize) -> Result<TruncatedSeries> {
    if c < 1 || m < 1 {
        return Err(Error::ParameterRange(format!("need c, m >= 1, got c = {c}, m = {m}")));
    }
    let mut acc = TruncatedSeries::zero(order);
    for n in 0..m {
        if n * m > order {
            break;
        }
        let mut term = TruncatedSeries::monomial(n * m, 1, order);
        divide_by_pochhammer(&mut term, n);
        acc = &acc + &term;
    }
    let lo = m as u32;
    let tail = match form {
        ClosedForm::Rank2 => chain_form(order, m, |n| (lo, n), |chain| chain.len() < c),
        ClosedForm::Rank3 => chain_form(order, m, |n| (lo, n), |chain| {
            let j = chain.len();
            // ℓ_{j−c+1}, or 0 when the index is not positive
            let pivot = if j >= c { chain[j - c] as usize } else { 0 };
            j < pivot + c
        }),
        ClosedForm::General { r } => {
            if r < 3 {
                return Err(Error::ParameterRange(format!("general form needs r >= 3, got {r}")));
            }
            chain_form(order, m, |n| (lo, n), |chain| {
                let j = chain.len();
                let mu = if j >= c { &chain[..j + 1 - c] } else { &chain[..0] };
                (j as u64) < new_part_bound(mu, r) + c as u64
            })
        }
    };
    Ok(&acc + &tail)
}

/// `Σ_{n ≥ n_min} Σ_{chains} q^{n² + |chain|} / (q)_n` over chains with parts
/// in `range(n)` accepted by `keep`. The empty chain is offered to `keep`.
fn chain_form(
    order: usize,
    n_min: usize,
    range: impl Fn(u32) -> (u32, u32),
    mut keep: impl FnMut(&[u32]) -> bool,
) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(order);
    for n in n_min.. {
        let base = n * n;
        if base > order {
            break;
        }
        let budget = order - base;
        let mut counts = vec![0u64; budget + 1];
        let (lo, hi) = range(n as u32);
        for_each_chain(lo, hi, budget, None, &mut |chain, sum| {
            if keep(chain) {
                counts[sum] += 1;
            }
        });
        let mut term = TruncatedSeries::zero(order);
        for (sum, &count) in counts.iter().enumerate() {
            if count > 0 {
                term.add_term(base + sum, &BigInt::from(count));
            }
        }
        divide_by_pochhammer(&mut term, n);
        acc = &acc + &term;
    }
    acc
}

/// Visits every non-increasing chain with entries in `[lo, hi]` and sum at
/// most `budget`, including the empty chain, largest entry first.
fn for_each_chain(
    lo: u32,
    hi: u32,
    budget: usize,
    max_len: Option<usize>,
    visit: &mut dyn FnMut(&[u32], usize),
) {
    fn go(
        lo: u32,
        top: u32,
        left: usize,
        sum: usize,
        max_len: Option<usize>,
        chain: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32], usize),
    ) {
        visit(chain, sum);
        if max_len.is_some_and(|cap| chain.len() >= cap) {
            return;
        }
        let top = top.min(left.min(u32::MAX as usize) as u32);
        let mut part = lo.max(1);
        while part <= top {
            chain.push(part);
            go(lo, part, left - part as usize, sum + part as usize, max_len, chain, visit);
            chain.pop();
            part += 1;
        }
    }
    let mut chain = Vec::new();
    if lo > hi {
        visit(&chain, 0);
        return;
    }
    go(lo, hi, budget, 0, max_len, &mut chain, visit);
}
