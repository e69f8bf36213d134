//! Monomial ideals in the weighted variables `x₁, x₂, …` and their
//! Hilbert-Poincaré series, computed both by counting standard monomials and
//! through the colon/sum exact sequence, plus the coefficient recursions that
//! connect `H_i^1` to the Lepowsky-Zhu series `G_l`.

mod ideal;
mod monomial;
mod recursion;
mod series;

pub use ideal::{ideal_generators, IdealFamily, Intrinsic, MonomialIdeal};
pub use monomial::{minimalize, Monomial};
pub use recursion::{
    convergence_check, empirical_hypothesis, h_lemma_sides, hp_coefficient_table,
    lz_coefficient_table, lz_g_series, lz_resubstitution_defect, CoefficientTable,
    ConvergenceReport, ConvergenceRow, HypothesisRow, TableKind,
};
pub use series::{h_plain, h_series, hp_via_exact_sequence, standard_monomial_series, HConvention};
