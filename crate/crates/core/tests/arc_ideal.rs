use gordon_core::arc::{
    derive, graded_echelon, graded_ideal_spanning_set, leading_ideal_minimal_generators,
    leading_ideal_report, DiffPolynomial, MonomialOrder,
};
use gordon_core::hilbert::{ideal_generators, IdealFamily, Monomial};
use gordon_core::partition::{count, count_partitions, CountFamily, Family, Unconstrained};
use num_bigint::BigUint;

#[test]
fn derivatives_are_quasi_homogeneous() {
    for r in 1..=4u32 {
        let f = DiffPolynomial::monomial(Monomial::power(1, r));
        for j in 0..=8 {
            assert_eq!(derive(&f, j).weight(), Some(u64::from(r) + j as u64));
        }
    }
}

#[test]
fn spanning_set_size() {
    let expected: BigUint = (0..=6).map(|j| count_partitions(6 - j, None, &Unconstrained)).sum();
    assert_eq!(BigUint::from(graded_ideal_spanning_set(2, 8).len()), expected);
}

#[test]
fn revlex_leading_ideal_is_the_classical_ideal() {
    for r in 2..=3 {
        let report = leading_ideal_report(r, 12, MonomialOrder::Wrevlex).unwrap();
        assert!(report.agrees(), "r={r}: {:?}", report.candidate_diff);
        let classical = ideal_generators(IdealFamily::Iri { r, i: r }, 12).unwrap();
        let mut ours = report.generators.clone();
        ours.sort();
        let mut theirs = classical.generators.clone();
        theirs.sort();
        assert_eq!(ours, theirs);
    }
}

#[test]
fn revlex_generators_at_weight_six() {
    let gens = leading_ideal_minimal_generators(2, 6, MonomialOrder::Wrevlex);
    let parts: Vec<Vec<u32>> = gens.iter().map(|m| m.to_partition().into_parts()).collect();
    assert_eq!(parts, vec![vec![1, 1], vec![2, 1], vec![2, 2], vec![3, 2], vec![3, 3]]);
}

#[test]
fn standard_counts_are_order_independent() {
    for r in 2..=3 {
        for n in 0..=12u64 {
            let lex = graded_echelon(r, n, MonomialOrder::Wlex);
            let rev = graded_echelon(r, n, MonomialOrder::Wrevlex);
            assert_eq!(lex.rank() + lex.standard_count(), lex.basis.len());
            assert_eq!(lex.standard_count(), rev.standard_count(), "r={r} n={n}");
            let b = count(&CountFamily::new(Family::B { r, i: r }), n as u32).unwrap();
            assert_eq!(BigUint::from(lex.standard_count()), b, "r={r} n={n}");
        }
    }
}

#[test]
fn lex_leading_ideal_matches_candidate_for_r2() {
    let report = leading_ideal_report(2, 12, MonomialOrder::Wlex).unwrap();
    assert!(report.agrees(), "{:?}", report.candidate_diff);
}

#[test]
fn elimination_is_deterministic() {
    let a = graded_echelon(3, 11, MonomialOrder::Wlex);
    let b = graded_echelon(3, 11, MonomialOrder::Wlex);
    assert_eq!(a.leading, b.leading);
    assert_eq!(a.rows, b.rows);
}
