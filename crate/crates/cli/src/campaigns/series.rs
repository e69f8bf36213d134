use gordon_core::error::Result;
use gordon_core::qseries::{
    andrews_gordon_sum, chain_sum_r3, conjecture_sum, double_sum_r3, h_closed_form, inv_pochhammer,
    lemma_qbin_sum, partition_series, pochhammer, product_side, q_binomial, ClosedForm, TruncatedSeries,
};

use crate::args::{FormArg, SeriesArgs, SeriesKind};
use crate::report::Campaign;

pub fn series(a: &SeriesArgs) -> Result<Campaign> {
    let s = match a.kind {
        SeriesKind::Partitions => partition_series(a.order),
        SeriesKind::Pochhammer => pochhammer(a.n, a.order),
        SeriesKind::InvPochhammer => inv_pochhammer(a.n, a.order),
        SeriesKind::Product => product_side(a.r, a.i, a.order)?,
        SeriesKind::AndrewsGordon => andrews_gordon_sum(a.r, a.i, a.order)?,
        SeriesKind::QBinomial => q_binomial(a.n, a.j, a.order)?,
        SeriesKind::LemmaQBinomial => lemma_qbin_sum(a.n, a.j, a.order)?,
        SeriesKind::DoubleSumR3 => double_sum_r3(a.order),
        SeriesKind::ChainSumR3 => chain_sum_r3(a.order),
        SeriesKind::Conjecture => conjecture_sum(a.r, a.order)?,
        SeriesKind::ClosedForm => {
            let form = match a.form {
                FormArg::Rank2 => ClosedForm::Rank2,
                FormArg::Rank3 => ClosedForm::Rank3,
                FormArg::General => ClosedForm::General { r: a.r },
            };
            h_closed_form(form, a.c, a.m, a.order)?
        }
    };
    let mut c = Campaign::new();
    coefficient_table(&mut c, "coefficients", &s);
    c.set_data(serde_json::to_value(&s).expect("series serializes"));
    Ok(c)
}

pub(super) fn coefficient_table(c: &mut Campaign, name: &str, s: &TruncatedSeries) {
    c.table(name, &["power", "coefficient"]);
    for (k, v) in s.coeffs().iter().enumerate() {
        c.row(name, vec![k.to_string(), v.to_string()]);
    }
}
