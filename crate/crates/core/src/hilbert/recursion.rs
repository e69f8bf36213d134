use serde::{Deserialize, Serialize};

use super::series::{h_plain, h_series, HConvention};
use crate::error::{check_ri, Error, Result};
use crate::qseries::{product_side, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableKind {
    /// Lepowsky-Zhu coefficients expanding `G_l` in the `G_t`.
    #[serde(rename = "A_lz")]
    ALz,
    /// Coefficients expanding `H_i^1` in the `H_l^d`.
    #[serde(rename = "B_hp")]
    BHp,
}

/// Coefficient polynomials indexed by a level `L ≥ 2` and `1 ≤ j ≤ r`.
/// The entry at `(L, j)` carries the third index `(r−1)L + j`, so the two
/// kinds are aligned entry by entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientTable {
    pub kind: TableKind,
    pub r: usize,
    /// `i` for the B table, `l` for the A table.
    pub index: usize,
    pub order: usize,
    /// `levels[L − 2][j − 1]`.
    pub levels: Vec<Vec<TruncatedSeries>>,
}

impl CoefficientTable {
    pub fn max_level(&self) -> usize {
        self.levels.len() + 1
    }

    pub fn entry(&self, level: usize, j: usize) -> &TruncatedSeries {
        &self.levels[level - 2][j - 1]
    }

    pub fn third_index(&self, level: usize, j: usize) -> usize {
        (self.r - 1) * level + j
    }

    /// Recomputes every level above the first from the recursion
    /// `T[L][j] = q^{(j−1)L} Σ_{k=1}^{r−j+1} T[L−1][k]` and reports the first
    /// `(level, j)` where the stored entry differs.
    pub fn recursion_defect(&self) -> Option<(usize, usize)> {
        for level in 3..=self.max_level() {
            let next = step(self.r, level, &self.levels[level - 3], self.order);
            for j in 1..=self.r {
                if &next[j - 1] != self.entry(level, j) {
                    return Some((level, j));
                }
            }
        }
        None
    }
}

fn step(r: usize, level: usize, prev: &[TruncatedSeries], order: usize) -> Vec<TruncatedSeries> {
    (1..=r)
        .map(|j| {
            let mut acc = TruncatedSeries::zero(order);
            for k in 1..=r - j + 1 {
                acc = &acc + &prev[k - 1];
            }
            acc.shift((j - 1) * level)
        })
        .collect()
}

/// `q^{2(j−1)}(1 + q + ⋯ + q^{top})`.
fn initial(j: usize, top: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for e in 0..=top {
        s.add_term(2 * (j - 1) + e, &1.into());
    }
    s
}

fn build(kind: TableKind, r: usize, index: usize, split: usize, max_level: usize, order: usize) -> CoefficientTable {
    // split: entries j ≤ split use the fixed top degree, the rest `r − j`
    let fixed_top = match kind {
        TableKind::BHp => index - 1,
        TableKind::ALz => r - index,
    };
    let first: Vec<TruncatedSeries> = (1..=r)
        .map(|j| initial(j, if j <= split { fixed_top } else { r - j }, order))
        .collect();
    let mut levels = vec![first];
    for level in 3..=max_level {
        let next = step(r, level, levels.last().expect("seeded"), order);
        levels.push(next);
    }
    CoefficientTable { kind, r, index, order, levels }
}

fn check_level(max_level: usize) -> Result<()> {
    if max_level < 2 {
        return Err(Error::ParameterRange(format!("tables start at level 2, got {max_level}")));
    }
    Ok(())
}

/// The B coefficients with `H_i^1 = Σ_j B[L][j] · H^{L+1}_{r−j+1}`.
pub fn hp_coefficient_table(r: usize, i: usize, max_level: usize, order: usize) -> Result<CoefficientTable> {
    check_ri(r, i)?;
    check_level(max_level)?;
    Ok(build(TableKind::BHp, r, i, r - i + 1, max_level, order))
}

/// The Lepowsky-Zhu A coefficients with `G_l = Σ_j A[L][j] · G_{(r−1)L+j}`.
pub fn lz_coefficient_table(r: usize, l: usize, max_level: usize, order: usize) -> Result<CoefficientTable> {
    check_ri(r, l)?;
    check_level(max_level)?;
    Ok(build(TableKind::ALz, r, l, l, max_level, order))
}

/// For `t > r`: `(j, i)` with `t = (r−1)j + i`, `2 ≤ i ≤ r`, and the two
/// sources `G_a − G_b` of the division by `q^{(i−1)j}`.
fn lz_step(r: usize, t: usize) -> (usize, usize, usize, usize) {
    let j = (t - 2) / (r - 1);
    let i = t - (r - 1) * j;
    let a = (r - 1) * (j - 1) + r - i + 1;
    (j, i, a, a + 1)
}

/// `G_1, …, G_{t_max}`: products for `t ≤ r`, then
/// `G_{(r−1)j+i} = (G_{(r−1)(j−1)+r−i+1} − G_{(r−1)(j−1)+r−i+2}) / q^{(i−1)j}`
/// with every division checked exact. Index 0 of the result is `G_1`.
pub fn lz_g_series(r: usize, t_max: usize, order: usize) -> Result<Vec<TruncatedSeries>> {
    if r < 2 || t_max < r {
        return Err(Error::ParameterRange(format!("need r >= 2 and t_max >= r, got r={r}, t_max={t_max}")));
    }
    // each division loses (i−1)j coefficients; push the needed precision
    // down to the sources first
    let mut need = vec![order; t_max + 1];
    for t in (r + 1..=t_max).rev() {
        let (j, i, a, b) = lz_step(r, t);
        let want = need[t] + (i - 1) * j;
        need[a] = need[a].max(want);
        need[b] = need[b].max(want);
    }
    let mut g: Vec<TruncatedSeries> = Vec::with_capacity(t_max);
    for l in 1..=r {
        g.push(product_side(r, r + 1 - l, need[l])?);
    }
    for t in r + 1..=t_max {
        let (j, i, a, b) = lz_step(r, t);
        let shift = (i - 1) * j;
        let top = need[t] + shift;
        let diff = &g[a - 1].restrict(top)? - &g[b - 1].restrict(top)?;
        g.push(diff.div_q_power(shift)?);
    }
    g.iter().map(|s| s.restrict(order)).collect()
}

/// Checks `G_{(r−1)j−i+2} = q^{(i−1)j} G_{(r−1)j+i} + G_{(r−1)j−i+3}` on the
/// stored series; returns the first failing `t`.
pub fn lz_resubstitution_defect(r: usize, g: &[TruncatedSeries]) -> Option<usize> {
    (r + 1..=g.len()).find(|&t| {
        let (j, i, a, b) = lz_step(r, t);
        g[a - 1] != &g[t - 1].shift((i - 1) * j) + &g[b - 1]
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisRow {
    pub d: usize,
    pub i: usize,
    pub index: usize,
    pub required: usize,
    pub valuation: Option<usize>,
    pub holds: bool,
}

/// `G_{(r−1)d+i} − 1` divisible by `q^{d+1}` (`i < r`) or `q^{d+2}` (`i = r`)
/// for `1 ≤ d ≤ d_max`, read off at order `max(order, d_max + 2)`.
pub fn empirical_hypothesis(r: usize, d_max: usize, order: usize) -> Result<Vec<HypothesisRow>> {
    let order = order.max(d_max + 2);
    let g = lz_g_series(r, (r - 1) * d_max + r, order)?;
    let one = TruncatedSeries::one(order);
    let mut rows = Vec::new();
    for d in 1..=d_max {
        for i in 1..=r {
            let index = (r - 1) * d + i;
            let required = if i == r { d + 2 } else { d + 1 };
            let valuation = (&g[index - 1] - &one).valuation();
            let holds = valuation.is_none_or(|v| v >= required);
            rows.push(HypothesisRow { d, i, index, required, valuation, holds });
        }
    }
    Ok(rows)
}

/// Both sides of `H_l^k = Σ_{j=1}^{l} q^{(l−j)k} H_{r−l+j}^{k+1}`.
pub fn h_lemma_sides(r: usize, l: usize, k: usize, order: usize) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let lhs = h_series(r, l, k, order, HConvention::Tail)?;
    let mut rhs = TruncatedSeries::zero(order);
    for j in 1..=l {
        let h = h_series(r, r - l + j, k + 1, order, HConvention::Tail)?;
        rhs = &rhs + &h.shift((l - j) * k);
    }
    Ok((lhs, rhs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub level: usize,
    /// `H_i^1 = Σ_j B[L][j] H^{L+1}_{r−j+1}` at the full order.
    pub h_expansion: bool,
    /// `G_l = Σ_j A[L][j] G_{(r−1)L+j}` at the full order.
    pub g_expansion: bool,
    /// `A[L][m] = B[L][m]` for every `m`.
    pub coefficients_equal: bool,
    /// `B[L][1] ≡ H_i^1` and `A[L][1] ≡ G_l` up to order `min(N, L−1)`.
    pub leading_term_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub r: usize,
    pub i: usize,
    pub l: usize,
    pub order: usize,
    pub max_level: usize,
    pub rows: Vec<ConvergenceRow>,
    /// `B[max_level][1]` matches both series up to `min(N, max_level − 1)`.
    pub limit_agrees: bool,
    /// `H_i^1 = G_l` at order `N`.
    pub h_equals_g: bool,
}

impl ConvergenceReport {
    pub fn passed(&self) -> bool {
        self.limit_agrees
            && self.h_equals_g
            && self.rows.iter().all(|r| r.h_expansion && r.g_expansion && r.coefficients_equal && r.leading_term_agrees)
    }
}

/// Runs both expansions at every level `2 ≤ L ≤ max_level` and compares the
/// q-adic limits of the leading coefficients.
pub fn convergence_check(r: usize, i: usize, max_level: usize, order: usize) -> Result<ConvergenceReport> {
    check_ri(r, i)?;
    check_level(max_level)?;
    let l = r + 1 - i;
    let b = hp_coefficient_table(r, i, max_level, order)?;
    let a = lz_coefficient_table(r, l, max_level, order)?;
    let h_target = h_series(r, i, 1, order, HConvention::Tail)?;
    let g = lz_g_series(r, (r - 1) * max_level + r, order)?;
    let g_target = g[l - 1].clone();

    let mut rows = Vec::with_capacity(max_level - 1);
    for level in 2..=max_level {
        let mut h_sum = TruncatedSeries::zero(order);
        let mut g_sum = TruncatedSeries::zero(order);
        for j in 1..=r {
            // H^{L+1}_{r−j+1}; at level L it is H^{L+1} itself for j = 1
            let h = if j == 1 {
                h_plain(r, level + 1, order)?
            } else {
                h_series(r, r - j + 1, level + 1, order, HConvention::Tail)?
            };
            h_sum = &h_sum + &(b.entry(level, j) * &h);
            g_sum = &g_sum + &(a.entry(level, j) * &g[(r - 1) * level + j - 1]);
        }
        let cut = order.min(level - 1);
        let lead_b = b.entry(level, 1).restrict(cut)?;
        let lead_a = a.entry(level, 1).restrict(cut)?;
        rows.push(ConvergenceRow {
            level,
            h_expansion: h_sum == h_target,
            g_expansion: g_sum == g_target,
            coefficients_equal: (1..=r).all(|m| a.entry(level, m) == b.entry(level, m)),
            leading_term_agrees: lead_b == h_target.restrict(cut)? && lead_a == g_target.restrict(cut)?,
        });
    }
    let cut = order.min(max_level - 1);
    let limit = b.entry(max_level, 1).restrict(cut)?;
    Ok(ConvergenceReport {
        r,
        i,
        l,
        order,
        max_level,
        rows,
        limit_agrees: limit == h_target.restrict(cut)? && limit == g_target.restrict(cut)?,
        h_equals_g: h_target == g_target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn first_entries_for_rogers_ramanujan() {
        let b = hp_coefficient_table(2, 2, 3, 6).unwrap();
        let a = lz_coefficient_table(2, 1, 3, 6).unwrap();
        assert_eq!(b.third_index(2, 1), 3);
        assert_eq!(ints(b.entry(2, 1)), vec![1, 1, 0, 0, 0, 0, 0]);
        assert_eq!(a.entry(2, 1), b.entry(2, 1));
        assert_eq!(b.recursion_defect(), None);
    }

    #[test]
    fn lz_steps_cover_all_indices() {
        assert_eq!(lz_step(2, 3), (1, 2, 1, 2));
        assert_eq!(lz_step(3, 4), (1, 2, 2, 3));
        assert_eq!(lz_step(3, 5), (1, 3, 1, 2));
        assert_eq!(lz_step(3, 6), (2, 2, 4, 5));
    }

    #[test]
    fn g_series_start_with_products() {
        let g = lz_g_series(3, 10, 15).unwrap();
        assert_eq!(g[0], product_side(3, 3, 15).unwrap());
        assert_eq!(g[2], product_side(3, 1, 15).unwrap());
        assert_eq!(lz_resubstitution_defect(3, &g), None);
    }

    #[test]
    fn rogers_ramanujan_convergence() {
        let report = convergence_check(2, 2, 12, 10).unwrap();
        assert!(report.passed(), "{report:?}");
    }
}
