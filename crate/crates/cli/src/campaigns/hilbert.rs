use gordon_core::error::{Error, Result};
use gordon_core::hilbert::{
    convergence_check, empirical_hypothesis, h_lemma_sides, h_plain, hp_coefficient_table,
    hp_via_exact_sequence, ideal_generators, lz_coefficient_table, lz_g_series,
    lz_resubstitution_defect, standard_monomial_series, IdealFamily,
};
use gordon_core::partition::{count, CountFamily, Family};
use gordon_core::qseries::{product_side, TruncatedSeries};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use super::check_ranks;
use crate::args::{HilbertArgs, IdealArg, LzArgs, RecursionArgs};
use crate::report::{Campaign, CheckClass};

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |v| v.to_string())
}

pub fn verify_recursion(a: &RecursionArgs) -> Result<Campaign> {
    check_ranks(&a.r)?;
    if a.max_d < 2 {
        return Err(Error::ParameterRange(format!("max-d = {}, need at least 2", a.max_d)));
    }
    let mut c = Campaign::new();
    c.table("lemma", &["r", "l", "k", "order", "equal"]);
    c.table("tables", &["r", "i", "level", "j", "third_index", "valuation", "A=B"]);
    c.table("tails", &["r", "d", "valuation"]);
    for &r in &a.r {
        let jobs: Vec<(usize, usize)> = (1..=r).flat_map(|l| (1..=a.max_k).map(move |k| (l, k))).collect();
        let sides: Vec<_> = jobs.par_iter().map(|&(l, k)| h_lemma_sides(r, l, k, a.order)).collect();
        for (&(l, k), pair) in jobs.iter().zip(sides) {
            let (lhs, rhs) = pair?;
            let equal = c.check(CheckClass::Theorem, "lemma", format!("r={r} l={l} k={k}"), &lhs, &rhs);
            c.row("lemma", vec![r.to_string(), l.to_string(), k.to_string(), a.order.to_string(), equal.to_string()]);
        }

        for i in 1..=r {
            let b = hp_coefficient_table(r, i, a.max_d, a.order)?;
            let t = lz_coefficient_table(r, r + 1 - i, a.max_d, a.order)?;
            for (name, defect) in [("B recursion", b.recursion_defect()), ("A recursion", t.recursion_defect())] {
                let got = defect.map_or_else(|| "none".to_string(), |(level, j)| format!("level {level} j {j}"));
                c.check(CheckClass::Theorem, name, format!("r={r} i={i}"), &"none".to_string(), &got);
            }
            for level in 2..=a.max_d {
                for j in 1..=r {
                    let at = format!("r={r} i={i} L={level} j={j}");
                    let equal = c.check(CheckClass::Theorem, "A=B", at.clone(), t.entry(level, j), b.entry(level, j));
                    let v = b.entry(level, j).valuation();
                    c.holds(CheckClass::Theorem, "table valuation", at, v.is_none_or(|v| v >= (j - 1) * level));
                    c.row("tables", vec![
                        r.to_string(),
                        i.to_string(),
                        level.to_string(),
                        j.to_string(),
                        b.third_index(level, j).to_string(),
                        opt(v),
                        equal.to_string(),
                    ]);
                }
            }
        }

        let one = TruncatedSeries::one(a.order);
        let tails: Vec<_> = (1..=a.max_d + 2).into_par_iter().map(|d| h_plain(r, d, a.order)).collect();
        for (d, h) in (1..).zip(tails) {
            let v = (&h? - &one).valuation();
            c.holds(CheckClass::Theorem, "tail valuation", format!("r={r} d={d}"), v.is_none_or(|v| v >= d));
            c.row("tails", vec![r.to_string(), d.to_string(), opt(v)]);
        }
    }
    Ok(c)
}

pub fn verify_lz(a: &LzArgs) -> Result<Campaign> {
    check_ranks(&a.r)?;
    let max_level = a.max_level.unwrap_or(a.order + 2);
    let mut c = Campaign::new();
    c.table("hypothesis", &["r", "d", "i", "index", "required", "valuation", "holds"]);
    c.table("convergence", &["r", "i", "l", "max_level", "order", "levels_ok", "limit_agrees", "h_equals_g"]);
    for &r in &a.r {
        let g = lz_g_series(r, (r - 1) * a.max_d + r, a.order)?;
        for l in 1..=r {
            let product = product_side(r, r + 1 - l, a.order)?;
            c.check(CheckClass::Theorem, "G=product", format!("r={r} l={l}"), &product, &g[l - 1]);
        }
        c.check(CheckClass::Theorem, "resubstitution", format!("r={r}"), &opt(None), &opt(lz_resubstitution_defect(r, &g)));

        for row in empirical_hypothesis(r, a.max_d, a.order)? {
            c.holds(CheckClass::Theorem, "hypothesis", format!("r={r} d={} i={}", row.d, row.i), row.holds);
            c.row("hypothesis", vec![
                r.to_string(),
                row.d.to_string(),
                row.i.to_string(),
                row.index.to_string(),
                row.required.to_string(),
                opt(row.valuation),
                row.holds.to_string(),
            ]);
        }

        let reports: Vec<_> = (1..=r).into_par_iter().map(|i| convergence_check(r, i, max_level, a.order)).collect();
        for report in reports {
            let report = report?;
            let levels_ok = report
                .rows
                .iter()
                .all(|row| row.h_expansion && row.g_expansion && row.coefficients_equal && row.leading_term_agrees);
            let at = format!("r={} i={}", report.r, report.i);
            c.holds(CheckClass::Theorem, "convergence levels", at.clone(), levels_ok);
            c.holds(CheckClass::Theorem, "convergence limit", at.clone(), report.limit_agrees);
            c.holds(CheckClass::Theorem, "H=G", at, report.h_equals_g);
            c.row("convergence", vec![
                r.to_string(),
                report.i.to_string(),
                report.l.to_string(),
                max_level.to_string(),
                a.order.to_string(),
                levels_ok.to_string(),
                report.limit_agrees.to_string(),
                report.h_equals_g.to_string(),
            ]);
        }
    }
    Ok(c)
}

pub fn hilbert(a: &HilbertArgs) -> Result<Campaign> {
    let family = match a.family {
        IdealArg::Iri => IdealFamily::Iri { r: a.r, i: a.i },
        IdealArg::IPrime => IdealFamily::IPrime { r: a.r, i: a.i },
        IdealArg::J => IdealFamily::J { r: a.r, k: a.k, l: a.l },
        IdealArg::Block => IdealFamily::Block { r: a.r, c: a.c, m: a.m },
    };
    let ideal = ideal_generators(family, a.order.max(1) as u64)?;
    let (standard, exact) = rayon::join(
        || standard_monomial_series(&ideal, a.order),
        || hp_via_exact_sequence(&ideal, a.order),
    );
    let (standard, exact) = (standard?, exact?);
    let mut c = Campaign::new();
    c.check(CheckClass::Theorem, "two methods", format!("{family:?}"), &standard, &exact);

    let oracle = match family {
        IdealFamily::Iri { r, i } => Some(Family::B { r, i }),
        IdealFamily::IPrime { r, i } => Some(Family::C { r, i }),
        _ => None,
    };
    let mut columns = vec!["power", "standard", "exact_sequence"];
    if oracle.is_some() {
        columns.push("partition_count");
    }
    c.table("series", &columns);
    for n in 0..=a.order {
        let mut row = vec![n.to_string(), standard.coeff(n).to_string(), exact.coeff(n).to_string()];
        if let Some(f) = oracle {
            let expected = BigInt::from(count(&CountFamily::new(f), n as u32)?);
            c.check(CheckClass::Theorem, "partition count", format!("{f} n={n}"), &expected, standard.coeff(n));
            row.push(expected.to_string());
        }
        c.row("series", row);
    }
    c.table("generators", &["generator", "weight"]);
    for g in &ideal.generators {
        c.row("generators", vec![g.to_string(), g.weight().to_string()]);
    }
    c.set_data(json!({ "family": family, "series": standard }));
    Ok(c)
}
