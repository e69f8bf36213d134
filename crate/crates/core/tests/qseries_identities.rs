use gordon_core::partition::{count, count_partitions, CountFamily, Family, Unconstrained};
use gordon_core::qseries::{
    andrews_gordon_sum, chain_sum_r3, conjecture_sum, double_sum_r3, lemma_qbin_sum,
    partition_series, product_side, q_binomial, TruncatedSeries,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn series_strategy(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-50i64..50, order + 1).prop_map(|c| TruncatedSeries::from_ints(&c))
}

#[test]
fn product_side_counts_congruence_partitions() {
    for r in 2..=5 {
        for i in 1..=r {
            let s = product_side(r, i, 30).unwrap();
            for n in 0..=30u32 {
                let a = count(&CountFamily::new(Family::A { r, i }), n).unwrap();
                assert_eq!(s.coeff(n as usize), &BigInt::from(a), "r={r} i={i} n={n}");
            }
        }
    }
}

#[test]
fn andrews_gordon_sum_equals_product() {
    for r in 2..=5 {
        for i in 1..=r {
            assert_eq!(
                andrews_gordon_sum(r, i, 30).unwrap(),
                product_side(r, i, 30).unwrap(),
                "r={r} i={i}"
            );
        }
    }
}

#[test]
fn chain_lemma_gives_q_binomials() {
    for n in 0..=12 {
        for j in 0..=n {
            assert_eq!(lemma_qbin_sum(n, j, 40).unwrap(), q_binomial(n, j, 40).unwrap(), "n={n} j={j}");
        }
    }
}

#[test]
fn rank_three_analytic_identity() {
    let left = double_sum_r3(30);
    assert_eq!(left, chain_sum_r3(30));
    assert_eq!(left, product_side(3, 3, 30).unwrap());
    assert_eq!(conjecture_sum(3, 30).unwrap(), andrews_gordon_sum(3, 3, 30).unwrap());
}

#[test]
fn euler_product_counts_partitions() {
    let s = partition_series(40);
    for n in 0..=40u32 {
        assert_eq!(s.coeff(n as usize), &BigInt::from(count_partitions(n, None, &Unconstrained)));
    }
}

#[test]
fn generating_series_are_nonnegative() {
    let zero = BigInt::from(0);
    for s in [chain_sum_r3(25), conjecture_sum(4, 25).unwrap(), product_side(4, 2, 25).unwrap()] {
        assert!(s.coeffs().iter().all(|c| c >= &zero));
    }
}

proptest! {
    #[test]
    fn ring_laws(a in series_strategy(50), b in series_strategy(50), c in series_strategy(50)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &TruncatedSeries::one(50), a);
    }

    #[test]
    fn unit_inverse(tail in series_strategy(30), sign in prop::bool::ANY) {
        let mut coeffs = tail.into_coeffs();
        coeffs[0] = BigInt::from(if sign { 1 } else { -1 });
        let s = TruncatedSeries::from_coeffs(coeffs).unwrap();
        prop_assert_eq!(&s * &s.invert_unit().unwrap(), TruncatedSeries::one(30));
    }

    #[test]
    fn truncation_is_stable(big in 10usize..35, small in 0usize..10, r in 2usize..5) {
        let i = 1 + small % r;
        prop_assert_eq!(product_side(r, i, big).unwrap().restrict(small).unwrap(), product_side(r, i, small).unwrap());
        prop_assert_eq!(andrews_gordon_sum(r, i, big).unwrap().restrict(small).unwrap(), andrews_gordon_sum(r, i, small).unwrap());
        prop_assert_eq!(chain_sum_r3(big).restrict(small).unwrap(), chain_sum_r3(small));
    }
}
