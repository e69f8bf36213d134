use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{DiffPolynomial, MonomialOrder};
use crate::error::{check_ri, Result};
use crate::hilbert::{ideal_generators, minimalize, IdealFamily, Monomial};
use crate::partition::{enumerate_partitions, Unconstrained};

fn monomials_of_weight(w: u64) -> Vec<Monomial> {
    enumerate_partitions(w as u32, None, &Unconstrained).iter().map(Monomial::from_partition).collect()
}

/// `(j, m · D^j(x₁ʳ))` for every `j ≤ n − r` and monomial `m` of weight
/// `n − r − j`.
fn spanning_rows(r: usize, n: u64) -> Vec<(u64, DiffPolynomial)> {
    let r64 = r as u64;
    if n < r64 {
        return Vec::new();
    }
    let base = DiffPolynomial::monomial(Monomial::power(1, r as u32));
    let mut rows = Vec::new();
    let mut f = base;
    for j in 0..=n - r64 {
        for m in monomials_of_weight(n - r64 - j) {
            rows.push((j, f.mul_monomial(&m)));
        }
        f = f.derive_once();
    }
    rows
}

/// Products spanning the weight-`n` piece of `[x₁ʳ]`, ordered by `j` and
/// then by multiplier.
pub fn graded_ideal_spanning_set(r: usize, n: u64) -> Vec<DiffPolynomial> {
    spanning_rows(r, n).into_iter().map(|(_, p)| p).collect()
}

/// Row-reduced form of the weight-`n` piece of `[x₁ʳ]`.
#[derive(Clone, Debug)]
pub struct GradedEchelon {
    pub weight: u64,
    pub order: MonomialOrder,
    /// Weight-`n` monomials, largest first.
    pub basis: Vec<Monomial>,
    /// Echelon rows with primitive integer coefficients.
    pub rows: Vec<DiffPolynomial>,
    /// Pivot monomials, largest first.
    pub leading: Vec<Monomial>,
}

impl GradedEchelon {
    pub fn rank(&self) -> usize {
        self.leading.len()
    }

    pub fn standard_count(&self) -> usize {
        self.basis.len() - self.rank()
    }
}

type SparseRow = Vec<(usize, BigInt)>;

/// `b/g · row − a/g · pivot` where `a`, `b` lead `row`, `pivot`.
fn eliminate(row: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let a = &row[0].1;
    let b = &pivot[0].1;
    let g = a.gcd(b);
    let (fa, fb) = (b / &g, a / &g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut x, mut y) = (1, 1);
    while x < row.len() || y < pivot.len() {
        let take_row = y >= pivot.len() || (x < row.len() && row[x].0 < pivot[y].0);
        let take_pivot = x >= row.len() || (y < pivot.len() && pivot[y].0 < row[x].0);
        let (col, value) = if take_row {
            x += 1;
            (row[x - 1].0, &row[x - 1].1 * &fa)
        } else if take_pivot {
            y += 1;
            (pivot[y - 1].0, -(&pivot[y - 1].1 * &fb))
        } else {
            x += 1;
            y += 1;
            (row[x - 1].0, &row[x - 1].1 * &fa - &pivot[y - 1].1 * &fb)
        };
        if !value.is_zero() {
            out.push((col, value));
        }
    }
    out
}

/// Divides out the content and makes the leading coefficient positive.
fn primitive(mut row: SparseRow) -> SparseRow {
    let mut g = BigInt::zero();
    for (_, c) in &row {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in row.iter_mut() {
            *c /= &g;
        }
    }
    row
}

/// Fraction-free elimination of the spanning set against the weight-`n`
/// monomials sorted by `order`. Rows are processed by leading monomial,
/// largest first, fewer derivations first on ties.
pub fn graded_echelon(r: usize, n: u64, order: MonomialOrder) -> GradedEchelon {
    let mut basis = monomials_of_weight(n);
    basis.sort_by(|a, b| order.compare(b, a));
    let column: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(idx, m)| (m, idx)).collect();

    let mut rows: Vec<(u64, SparseRow)> = spanning_rows(r, n)
        .into_iter()
        .map(|(j, p)| {
            let mut row: SparseRow = p.terms().iter().map(|(m, c)| (column[m], c.clone())).collect();
            row.sort_by_key(|&(col, _)| col);
            (j, row)
        })
        .filter(|(_, row)| !row.is_empty())
        .collect();
    rows.sort_by_key(|(j, row)| (row[0].0, *j));

    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for (_, mut row) in rows {
        while let Some(&(lead, _)) = row.first() {
            match pivots.get(&lead) {
                Some(pivot) => row = eliminate(&row, pivot),
                None => {
                    pivots.insert(lead, primitive(row));
                    break;
                }
            }
        }
    }

    let leading = pivots.keys().map(|&col| basis[col].clone()).collect();
    let echelon_rows = pivots
        .values()
        .map(|row| {
            let mut p = DiffPolynomial::zero();
            for (col, c) in row {
                p.add_term(basis[*col].clone(), c.clone());
            }
            p
        })
        .collect();
    GradedEchelon { weight: n, order, basis, rows: echelon_rows, leading }
}

/// Monomials of weight `n` in the leading ideal of `[x₁ʳ]`, largest first.
pub fn leading_monomials_at_weight(r: usize, n: u64, order: MonomialOrder) -> Vec<Monomial> {
    graded_echelon(r, n, order).leading
}

/// Minimal generators of the leading ideal up to weight `max_weight`,
/// sorted by weight and then by the order.
pub fn leading_ideal_minimal_generators(r: usize, max_weight: u64, order: MonomialOrder) -> Vec<Monomial> {
    let all = (r as u64..=max_weight).flat_map(|n| leading_monomials_at_weight(r, n, order)).collect();
    sort_by_order(minimalize(all), order)
}

fn sort_by_order(mut gens: Vec<Monomial>, order: MonomialOrder) -> Vec<Monomial> {
    gens.sort_by(|a, b| order.compare(a, b));
    gens
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRow {
    pub weight: u64,
    pub monomials: usize,
    pub leading: usize,
    pub standard: usize,
    pub candidate: usize,
    /// The computed and candidate monomials of this weight coincide.
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateDiff {
    pub candidate: IdealFamily,
    /// Candidate generators the computation does not produce.
    pub missing: Vec<Monomial>,
    /// Computed generators absent from the candidate.
    pub extra: Vec<Monomial>,
    pub shared: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadingIdealReport {
    pub r: usize,
    pub order: MonomialOrder,
    pub max_weight: u64,
    pub generators: Vec<Monomial>,
    pub per_weight: Vec<WeightRow>,
    pub candidate_diff: CandidateDiff,
}

impl LeadingIdealReport {
    pub fn agrees(&self) -> bool {
        self.candidate_diff.missing.is_empty()
            && self.candidate_diff.extra.is_empty()
            && self.per_weight.iter().all(|w| w.agrees)
    }
}

/// Compares per-weight leading monomials (`leading_by_weight[n]` for
/// `0 ≤ n ≤ max_weight`) with the candidate ideal: `I_{r,r}` for wrevlex,
/// `I′_{r,r}` for wlex.
pub fn report_from_weights(
    r: usize,
    order: MonomialOrder,
    leading_by_weight: &[Vec<Monomial>],
) -> Result<LeadingIdealReport> {
    check_ri(r, r)?;
    let max_weight = leading_by_weight.len().saturating_sub(1) as u64;
    let family = match order {
        MonomialOrder::Wrevlex => IdealFamily::Iri { r, i: r },
        MonomialOrder::Wlex => IdealFamily::IPrime { r, i: r },
    };
    let candidate = ideal_generators(family, max_weight.max(1))?;

    let mut per_weight = Vec::with_capacity(leading_by_weight.len());
    for (n, leading) in leading_by_weight.iter().enumerate() {
        let all = monomials_of_weight(n as u64);
        let expected: BTreeSet<&Monomial> = all.iter().filter(|m| candidate.contains(m)).collect();
        let got: BTreeSet<&Monomial> = leading.iter().collect();
        per_weight.push(WeightRow {
            weight: n as u64,
            monomials: all.len(),
            leading: leading.len(),
            standard: all.len() - leading.len(),
            candidate: expected.len(),
            agrees: expected == got,
        });
    }

    let generators = sort_by_order(minimalize(leading_by_weight.iter().flatten().cloned().collect()), order);
    let computed: BTreeSet<&Monomial> = generators.iter().collect();
    let wanted: BTreeSet<&Monomial> = candidate.generators.iter().collect();
    let pick = |set: BTreeSet<&&Monomial>| sort_by_order(set.into_iter().map(|m| (*m).clone()).collect(), order);
    let candidate_diff = CandidateDiff {
        candidate: family,
        missing: pick(wanted.difference(&computed).collect()),
        extra: pick(computed.difference(&wanted).collect()),
        shared: pick(computed.intersection(&wanted).collect()),
    };
    Ok(LeadingIdealReport { r, order, max_weight, generators, per_weight, candidate_diff })
}

/// Computes every weight up to `max_weight` and compares with the candidate.
pub fn leading_ideal_report(r: usize, max_weight: u64, order: MonomialOrder) -> Result<LeadingIdealReport> {
    check_ri(r, r)?;
    let by_weight: Vec<Vec<Monomial>> =
        (0..=max_weight).map(|n| leading_monomials_at_weight(r, n, order)).collect();
    report_from_weights(r, order, &by_weight)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(ms: &[Monomial]) -> Vec<Vec<u32>> {
        ms.iter().map(|m| m.to_partition().into_parts()).collect()
    }

    #[test]
    fn small_spanning_sets() {
        assert_eq!(graded_ideal_spanning_set(2, 2), vec![DiffPolynomial::monomial(Monomial::power(1, 2))]);
        let three = graded_ideal_spanning_set(2, 3);
        assert_eq!(three.len(), 2);
        assert_eq!(three[0], DiffPolynomial::monomial(Monomial::power(1, 3)));
        assert_eq!(three[1], DiffPolynomial::term(Monomial::from_pairs([(1, 1), (2, 1)]), 2.into()));
        assert!(graded_ideal_spanning_set(3, 2).is_empty());
    }

    #[test]
    fn weight_four_leads_differ_by_order() {
        assert_eq!(parts(&leading_monomials_at_weight(2, 4, MonomialOrder::Wlex)), vec![
            vec![1, 1, 1, 1],
            vec![2, 1, 1],
            vec![3, 1],
        ]);
        assert_eq!(parts(&leading_monomials_at_weight(2, 4, MonomialOrder::Wrevlex)), vec![
            vec![1, 1, 1, 1],
            vec![2, 1, 1],
            vec![2, 2],
        ]);
    }

    #[test]
    fn elimination_keeps_primitive_rows() {
        let e = graded_echelon(2, 6, MonomialOrder::Wlex);
        assert_eq!(e.rows.len(), e.rank());
        for row in &e.rows {
            let (_, lead) = row.leading(MonomialOrder::Wlex).unwrap();
            assert!(lead.is_positive());
        }
        assert_eq!(e.rank() + e.standard_count(), 11);
    }
}
