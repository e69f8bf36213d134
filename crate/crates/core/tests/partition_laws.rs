use std::collections::HashSet;

use gordon_core::partition::{
    c_predicate, count, enumerate_partitions, gordon_b_predicate, new_parts, Bijection, CForm,
    CountFamily, Direction, Family, Partition, Unconstrained,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn all_partitions(n: u32) -> Vec<Partition> {
    enumerate_partitions(n, None, &Unconstrained)
}

fn count_of(family: Family, n: u32) -> BigUint {
    count(&CountFamily::new(family), n).unwrap()
}

#[test]
fn gordon_counts_agree_small_r() {
    for r in 2..=3 {
        for i in 1..=r {
            for n in 0..=20 {
                assert_eq!(
                    count_of(Family::A { r, i }, n),
                    count_of(Family::B { r, i }, n),
                    "r={r} i={i} n={n}"
                );
            }
        }
    }
}

#[test]
fn shifted_counts_agree() {
    for k in 1..=3 {
        for i in 1..=2 {
            for n in 0..=20 {
                for m in 0..=8 {
                    let c = count(&CountFamily::with_length(Family::ShiftedC { k, i }, m), n).unwrap();
                    let b = count(&CountFamily::with_length(Family::ShiftedB { k, i }, m), n).unwrap();
                    assert_eq!(c, b, "k={k} i={i} m={m} n={n}");
                }
            }
        }
    }
}

#[test]
fn fixed_length_refinement() {
    for i in 1..=2 {
        for n in 0..=25 {
            for m in 0..=n as usize {
                let c = count(&CountFamily::with_length(Family::ShiftedC { k: 1, i }, m), n).unwrap();
                let b = count(&CountFamily::with_length(Family::B { r: 2, i }, m), n).unwrap();
                assert_eq!(c, b, "i={i} m={m} n={n}");
            }
        }
    }
}

#[test]
fn predicate_forms_agree() {
    for n in 0..=22 {
        for p in all_partitions(n) {
            for r in 2..=5 {
                for i in 1..=r {
                    assert_eq!(
                        c_predicate(&p, r, i, CForm::Conjecture).unwrap(),
                        c_predicate(&p, r, i, CForm::Vanishing).unwrap(),
                        "{p} r={r} i={i}"
                    );
                }
            }
        }
    }
}

#[test]
fn new_part_count_matches_conjecture_range() {
    // N_i is at most r − 1 and the vector is zero after its first zero
    for n in 0..=14 {
        for p in all_partitions(n) {
            let profile = new_parts(&p, 4, 2).unwrap();
            assert!(profile.nonzero <= 3);
            if let Some(first_zero) = profile.values.iter().position(|&v| v == 0) {
                assert!(profile.values[first_zero..].iter().all(|&v| v == 0));
            }
        }
    }
}

#[test]
fn bijection_laws_exhaustive() {
    for k in 1..=3 {
        for map in Bijection::all(k) {
            if k > 1 && !matches!(map, Bijection::RrSecondEq { .. } | Bijection::RrShift { .. }) {
                continue;
            }
            let mut images = HashSet::new();
            let mut domain_size = 0usize;
            for n in 0..=20u32 {
                for p in all_partitions(n) {
                    let by_cases = map.domain_contains(&p);
                    assert_eq!(by_cases, map.domain_by_sets(&p), "{} domain on {p}", map.name());
                    if !by_cases {
                        assert!(map.forward(&p).is_err());
                        continue;
                    }
                    domain_size += 1;
                    let image = map.apply(Direction::Forward, &p).unwrap();
                    assert!(map.codomain_contains(&image), "{} sent {p} to {image}", map.name());
                    let (dw, dl) = map.bookkeeping(p.len());
                    assert_eq!(image.weight() + dw, p.weight(), "{} weight on {p}", map.name());
                    assert_eq!(image.len() + dl, p.len(), "{} length on {p}", map.name());
                    assert_eq!(map.apply(Direction::Inverse, &image).unwrap(), p);
                    assert!(images.insert(image), "{} not injective at {p}", map.name());
                }
            }
            assert!(domain_size > 0);
            // surjectivity onto the codomain restricted to the reachable weights
            for n in 0..=10u32 {
                for mu in all_partitions(n) {
                    if !map.codomain_contains(&mu) {
                        continue;
                    }
                    let pre = map.inverse(&mu).unwrap();
                    if pre.weight() <= 20 {
                        assert!(images.contains(&mu), "{} misses {mu}", map.name());
                    }
                    assert_eq!(map.forward(&pre).unwrap(), mu);
                }
            }
        }
    }
}

#[test]
fn second_equation_fixture() {
    let p = Partition::new(vec![2, 2, 1]).unwrap();
    let image = Bijection::G3SecondEq.forward(&p).unwrap();
    assert_eq!(image.parts(), &[2]);
    // (m, n) = (3, 5) lands in length 1, weight 2
    assert_eq!((image.len(), image.weight()), (1, 2));
}

proptest! {
    #[test]
    fn b_predicate_is_literal(parts in prop::collection::vec(1u32..12, 0..8), r in 2usize..5) {
        let p = Partition::from_unsorted(parts).unwrap();
        for i in 1..=r {
            let literal = (0..p.len()).all(|j| j + r > p.len() || p.parts()[j] >= p.parts()[j + r - 1] + 2)
                && p.parts().iter().filter(|&&x| x == 1).count() < i;
            prop_assert_eq!(gordon_b_predicate(&p, r, i).unwrap(), literal);
        }
    }
}
