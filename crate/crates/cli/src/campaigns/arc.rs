use gordon_core::arc::{leading_monomials_at_weight, report_from_weights, MonomialOrder};
use gordon_core::error::Result;
use gordon_core::partition::{count, CountFamily, Family};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::args::LeadingIdealArgs;
use crate::report::{Campaign, CheckClass};

pub fn leading_ideal(a: &LeadingIdealArgs) -> Result<Campaign> {
    let r = a.r;
    let by_weight: Vec<_> =
        (0..=a.max_weight).into_par_iter().map(|n| leading_monomials_at_weight(r, n, a.order)).collect();
    let report = report_from_weights(r, a.order, &by_weight)?;

    let mut c = Campaign::new();
    c.table("weights", &["weight", "monomials", "leading", "standard", "candidate", "b_rr_count", "agrees"]);
    let candidate_class = match a.order {
        MonomialOrder::Wrevlex => CheckClass::Theorem,
        MonomialOrder::Wlex => CheckClass::Conjecture,
    };
    for row in &report.per_weight {
        let b = BigInt::from(count(&CountFamily::new(Family::B { r, i: r }), row.weight as u32)?);
        let at = format!("r={r} weight={}", row.weight);
        c.check(CheckClass::Theorem, "standard count", at.clone(), &b, &BigInt::from(row.standard));
        c.holds(candidate_class, "candidate", at, row.agrees);
        c.row("weights", vec![
            row.weight.to_string(),
            row.monomials.to_string(),
            row.leading.to_string(),
            row.standard.to_string(),
            row.candidate.to_string(),
            b.to_string(),
            row.agrees.to_string(),
        ]);
    }
    let diff = &report.candidate_diff;
    for m in &diff.missing {
        c.holds(candidate_class, "candidate generator", format!("missing {m}"), false);
    }
    for m in &diff.extra {
        c.holds(candidate_class, "candidate generator", format!("extra {m}"), false);
    }
    c.table("generators", &["generator", "weight", "in_candidate"]);
    for g in &report.generators {
        let shared = diff.shared.contains(g);
        c.row("generators", vec![g.to_string(), g.weight().to_string(), shared.to_string()]);
    }
    c.set_data(serde_json::to_value(&report).expect("report serializes"));
    Ok(c)
}
