use std::collections::HashSet;

use gordon_core::error::{Error, Result};
use gordon_core::partition::{
    andrews_system_check, c_predicate, count as count_family, count_by_length, enumerate_partitions,
    AndrewsSystem, Bijection, CForm, CountFamily, Family, FamilyTag, Partition, Side, Unconstrained,
};
use gordon_core::qseries::{andrews_gordon_sum, conjecture_sum, h_closed_form, product_side, ClosedForm};
use gordon_core::hilbert::{h_series, HConvention};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use super::{check_ranks, class_for_r};
use crate::args::{BijectionArgs, ConjectureArgs, CountArgs, Gordon3Args, GordonArgs, RrkArgs};
use crate::report::{Campaign, CheckClass};

fn total(family: Family, n: u32) -> Result<BigInt> {
    Ok(count_family(&CountFamily::new(family), n)?.into())
}

fn counts_upto(family: Family, max_n: u32) -> Result<Vec<BigInt>> {
    (0..=max_n).into_par_iter().map(|n| total(family, n)).collect()
}

fn all_partitions(max_n: u32) -> Vec<Vec<Partition>> {
    (0..=max_n).into_par_iter().map(|n| enumerate_partitions(n, None, &Unconstrained)).collect()
}

pub fn count(a: &CountArgs) -> Result<Campaign> {
    let tag: FamilyTag = a.family.parse()?;
    let family = tag.with_params(a.r, a.i, a.k);
    let cf = match a.length {
        Some(m) => CountFamily::with_length(family, m),
        None => CountFamily::new(family),
    };
    let value = count_family(&cf, a.n)?;
    let mut c = Campaign::new();
    c.table("count", &["family", "n", "length", "value"]);
    let length = a.length.map_or_else(|| "any".to_string(), |m| m.to_string());
    c.row("count", vec![family.to_string(), a.n.to_string(), length, value.to_string()]);
    c.set_data(json!({ "family": cf, "n": a.n, "value": value.to_string() }));
    Ok(c)
}

pub fn verify_gordon(a: &GordonArgs) -> Result<Campaign> {
    check_ranks(&a.r)?;
    let mut c = Campaign::new();
    c.table("counts", &["r", "i", "n", "A", "B", "product", "sum"]);
    let order = a.max_n as usize;
    for &r in &a.r {
        for i in 1..=r {
            let product = product_side(r, i, order)?;
            let sum = andrews_gordon_sum(r, i, order)?;
            let ca = counts_upto(Family::A { r, i }, a.max_n)?;
            let cb = counts_upto(Family::B { r, i }, a.max_n)?;
            for n in 0..=order {
                let at = format!("r={r} i={i} n={n}");
                c.check(CheckClass::Theorem, "A=B", at.clone(), &ca[n], &cb[n]);
                c.check(CheckClass::Theorem, "product=A", at.clone(), &ca[n], product.coeff(n));
                c.check(CheckClass::Theorem, "sum=product", at, product.coeff(n), sum.coeff(n));
                let cells = [&ca[n], &cb[n], product.coeff(n), sum.coeff(n)].map(|v| v.to_string());
                let mut row = vec![r.to_string(), i.to_string(), n.to_string()];
                row.extend(cells);
                c.row("counts", row);
            }
        }
    }
    Ok(c)
}

fn length_grid(family: Family, max_m: usize, max_n: usize) -> Result<Vec<Vec<BigInt>>> {
    (0..=max_n)
        .into_par_iter()
        .map(|n| Ok(count_by_length(&family, n as u32, max_m)?.into_iter().map(BigInt::from).collect()))
        .collect()
}

fn system_rows(c: &mut Campaign, system: AndrewsSystem, max_m: usize, max_n: usize) -> Result<()> {
    let label = match system {
        AndrewsSystem::RrK { k } => format!("rrk(k={k})"),
        AndrewsSystem::Gordon3 => "gordon3".to_string(),
    };
    c.table("system", &["system", "side", "equation", "checked", "holds"]);
    for side in [Side::New, Side::Classical] {
        let report = andrews_system_check(system, side, max_m, max_n)?;
        let side_name = match side {
            Side::New => "new",
            Side::Classical => "classical",
        };
        for eq in report.equations {
            let at = format!("{label} {side_name} {}", eq.name);
            let (expected, got) = match &eq.counterexample {
                Some(ce) => (format!("{} at m={} n={}", ce.lhs, ce.m, ce.n), ce.rhs.clone()),
                None => (String::new(), String::new()),
            };
            c.check(CheckClass::Theorem, "system", at, &expected, &got);
            c.row("system", vec![
                label.clone(),
                side_name.to_string(),
                eq.name,
                eq.checked.to_string(),
                eq.holds.to_string(),
            ]);
        }
    }
    Ok(())
}

pub fn verify_rrk(a: &RrkArgs) -> Result<Campaign> {
    let mut c = Campaign::new();
    c.table("counts", &["k", "i", "n", "m", "c", "b"]);
    let zero = BigInt::default();
    for &k in &a.k {
        for i in 1..=2 {
            let cg = length_grid(Family::ShiftedC { k, i }, a.max_m, a.max_n)?;
            let bg = length_grid(Family::ShiftedB { k, i }, a.max_m, a.max_n)?;
            for n in 0..=a.max_n {
                for m in 0..=a.max_m {
                    let at = format!("k={k} i={i} m={m} n={n}");
                    c.check(CheckClass::Theorem, "c=b", at, &cg[n][m], &bg[n][m]);
                    if cg[n][m] != zero || bg[n][m] != zero {
                        let row = [k as usize, i, n, m].map(|v| v.to_string());
                        let mut row = row.to_vec();
                        row.extend([cg[n][m].to_string(), bg[n][m].to_string()]);
                        c.row("counts", row);
                    }
                }
            }
        }
        system_rows(&mut c, AndrewsSystem::RrK { k }, a.max_m, a.max_n)?;
        if k == 1 {
            for i in 1..=2 {
                let cg = length_grid(Family::ShiftedC { k, i }, a.max_m, a.max_n)?;
                let bg = length_grid(Family::B { r: 2, i }, a.max_m, a.max_n)?;
                for n in 0..=a.max_n {
                    for m in 0..=a.max_m {
                        let at = format!("i={i} m={m} n={n}");
                        c.check(CheckClass::Theorem, "fixed length c=B(2,i)", at, &bg[n][m], &cg[n][m]);
                    }
                }
            }
        }
    }
    Ok(c)
}

/// Exhaustive checks of one map over every partition of weight at most
/// `max_n`: both domain descriptions agree, images land in the codomain with
/// the stated weight and length, the inverse undoes the map, no two inputs
/// collide, and every codomain element is hit by an input of the range.
pub fn bijection_laws(c: &mut Campaign, map: Bijection, partitions: &[Vec<Partition>]) {
    let name = map.name();
    let max_n = partitions.len().saturating_sub(1) as u64;
    let mut images = HashSet::new();
    let mut domain = 0usize;
    let mut failures = 0usize;
    for p in partitions.iter().flatten() {
        let by_cases = map.domain_contains(p);
        if !c.holds(CheckClass::Theorem, "domain forms", format!("{name} {p}"), by_cases == map.domain_by_sets(p)) {
            failures += 1;
        }
        if !by_cases {
            continue;
        }
        domain += 1;
        let ok = match map.forward(p) {
            Ok(image) => {
                let (dw, dl) = map.bookkeeping(p.len());
                let fine = map.codomain_contains(&image)
                    && image.weight() + dw == p.weight()
                    && image.len() + dl == p.len()
                    && map.inverse(&image).as_ref() == Ok(p)
                    && images.insert(image);
                c.holds(CheckClass::Theorem, "forward", format!("{name} {p}"), fine)
            }
            Err(_) => c.holds(CheckClass::Theorem, "forward", format!("{name} {p}"), false),
        };
        if !ok {
            failures += 1;
        }
    }
    let mut codomain = 0usize;
    for mu in partitions.iter().flatten() {
        if !map.codomain_contains(mu) {
            continue;
        }
        let ok = match map.inverse(mu) {
            Ok(pre) => {
                codomain += 1;
                map.domain_contains(&pre)
                    && map.forward(&pre).as_ref() == Ok(mu)
                    && (pre.weight() > max_n || images.contains(mu))
            }
            Err(_) => false,
        };
        if !c.holds(CheckClass::Theorem, "inverse", format!("{name} {mu}"), ok) {
            failures += 1;
        }
    }
    c.table("bijections", &["map", "max_n", "domain", "codomain", "failures"]);
    c.row("bijections", vec![
        name.to_string(),
        max_n.to_string(),
        domain.to_string(),
        codomain.to_string(),
        failures.to_string(),
    ]);
}

pub fn verify_gordon3(a: &Gordon3Args) -> Result<Campaign> {
    let mut c = Campaign::new();
    c.table("counts", &["i", "n", "C", "B"]);
    for i in 1..=3 {
        let cc = counts_upto(Family::C { r: 3, i }, a.max_n as u32)?;
        let cb = counts_upto(Family::B { r: 3, i }, a.max_n as u32)?;
        for n in 0..=a.max_n {
            c.check(CheckClass::Theorem, "C=B", format!("i={i} n={n}"), &cc[n], &cb[n]);
            c.row("counts", vec![i.to_string(), n.to_string(), cc[n].to_string(), cb[n].to_string()]);
        }
    }
    system_rows(&mut c, AndrewsSystem::Gordon3, a.max_m, a.max_n)?;
    let partitions = all_partitions(a.bijection_n);
    for map in [Bijection::G3SecondEq, Bijection::G3ThirdEq, Bijection::G3FourthEq] {
        bijection_laws(&mut c, map, &partitions);
    }
    Ok(c)
}

pub fn verify_bijections(a: &BijectionArgs) -> Result<Campaign> {
    if a.k.contains(&0) {
        return Err(Error::ParameterRange("k must be at least 1".into()));
    }
    let mut maps = Vec::new();
    for &k in &a.k {
        for map in Bijection::all(k) {
            let shifted = matches!(map, Bijection::RrSecondEq { .. } | Bijection::RrShift { .. });
            if (shifted || k == a.k[0]) && !maps.contains(&map) {
                maps.push(map);
            }
        }
    }
    if let Some(name) = &a.map {
        let wanted: Vec<Bijection> = a.k.iter().map(|&k| Bijection::from_name(name, k)).collect::<Result<_>>()?;
        maps.retain(|m| wanted.contains(m));
    }
    let partitions = all_partitions(a.max_n);
    let mut c = Campaign::new();
    for map in maps {
        bijection_laws(&mut c, map, &partitions);
    }
    Ok(c)
}

pub fn verify_conjecture(a: &ConjectureArgs) -> Result<Campaign> {
    check_ranks(&a.r)?;
    let mut c = Campaign::new();
    c.table("counts", &["r", "i", "n", "C", "B"]);
    c.table("predicate_forms", &["r", "i", "max_n", "partitions", "disagreements"]);
    c.table("series", &["r", "check", "order", "equal"]);
    let partitions = all_partitions(a.max_n);
    for &r in &a.r {
        let class = class_for_r(r);
        for i in 1..=r {
            let cc = counts_upto(Family::C { r, i }, a.max_n)?;
            let cb = counts_upto(Family::B { r, i }, a.max_n)?;
            for n in 0..=a.max_n as usize {
                c.check(class, "C=B", format!("r={r} i={i} n={n}"), &cc[n], &cb[n]);
                c.row("counts", vec![r.to_string(), i.to_string(), n.to_string(), cc[n].to_string(), cb[n].to_string()]);
            }
            let mut seen = 0usize;
            let mut disagreements = 0usize;
            for p in partitions.iter().flatten() {
                seen += 1;
                let conj = c_predicate(p, r, i, CForm::Conjecture)?;
                let vanishing = c_predicate(p, r, i, CForm::Vanishing)?;
                if !c.check(class, "predicate forms", format!("r={r} i={i} {p}"), &vanishing, &conj) {
                    disagreements += 1;
                }
            }
            c.row("predicate_forms", vec![
                r.to_string(),
                i.to_string(),
                a.max_n.to_string(),
                seen.to_string(),
                disagreements.to_string(),
            ]);
        }
        if r >= 3 {
            let lhs = conjecture_sum(r, a.order)?;
            let rhs = andrews_gordon_sum(r, r, a.order)?;
            let equal = c.check(class, "conjecture sum", format!("r={r} order={}", a.order), &rhs, &lhs);
            c.row("series", vec![r.to_string(), "conjecture_sum".into(), a.order.to_string(), equal.to_string()]);
        }
        closed_forms(&mut c, r, a.max_c, a.max_m, a.order)?;
    }
    Ok(c)
}

fn closed_forms(c: &mut Campaign, r: usize, max_c: usize, max_m: usize, order: usize) -> Result<()> {
    let forms: Vec<(&str, ClosedForm, CheckClass)> = match r {
        2 => vec![("rank2", ClosedForm::Rank2, CheckClass::Theorem)],
        3 => vec![
            ("rank3", ClosedForm::Rank3, CheckClass::Theorem),
            ("general", ClosedForm::General { r }, CheckClass::Theorem),
        ],
        _ => vec![("general", ClosedForm::General { r }, CheckClass::Conjecture)],
    };
    for c_idx in 1..=max_c {
        for m in 1..=max_m {
            let truth = h_series(r, c_idx, m, order, HConvention::Block)?;
            for (name, form, class) in &forms {
                let got = h_closed_form(*form, c_idx, m, order)?;
                let at = format!("{name} r={r} c={c_idx} m={m} order={order}");
                let equal = c.check(*class, "closed form", at, &truth, &got);
                c.row("series", vec![
                    r.to_string(),
                    format!("closed_form_{name}(c={c_idx},m={m})"),
                    order.to_string(),
                    equal.to_string(),
                ]);
            }
        }
    }
    Ok(())
}
