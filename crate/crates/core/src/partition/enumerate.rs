use num_bigint::BigUint;

use super::Partition;

/// A predicate on partitions, optionally with a prefix test used to prune
/// the enumeration tree.
pub trait Constraint {
    fn accepts(&self, partition: &Partition) -> bool;

    /// Called each time a part is appended to a prefix (largest parts first)
    /// whose shorter prefixes were all admitted. Returning `false` asserts that
    /// no completion of `prefix` is accepted.
    fn admits_prefix(&self, _prefix: &[u32]) -> bool {
        true
    }
}

impl<F> Constraint for F
where
    F: Fn(&Partition) -> bool,
{
    fn accepts(&self, partition: &Partition) -> bool {
        self(partition)
    }
}

/// Accepts every partition.
#[derive(Clone, Copy, Debug, Default)]
pub struct Unconstrained;

impl Constraint for Unconstrained {
    fn accepts(&self, _partition: &Partition) -> bool {
        true
    }
}

/// Visits the partitions of `n` with at most `max_len` parts that satisfy
/// `constraint`, in lexicographic order of their part sequences.
pub fn for_each_partition<C, V>(n: u32, max_len: Option<usize>, constraint: &C, mut visit: V)
where
    C: Constraint + ?Sized,
    V: FnMut(&Partition),
{
    let mut prefix = Vec::new();
    descend(n, n, max_len.unwrap_or(usize::MAX), &mut prefix, constraint, &mut visit);
}

fn descend<C, V>(
    remaining: u32,
    max_part: u32,
    max_len: usize,
    prefix: &mut Vec<u32>,
    constraint: &C,
    visit: &mut V,
) where
    C: Constraint + ?Sized,
    V: FnMut(&Partition),
{
    if remaining == 0 {
        let candidate = Partition::from_sorted_unchecked(prefix.clone());
        if constraint.accepts(&candidate) {
            visit(&candidate);
        }
        return;
    }
    if prefix.len() >= max_len {
        return;
    }
    for part in 1..=remaining.min(max_part) {
        prefix.push(part);
        if constraint.admits_prefix(prefix) {
            descend(remaining - part, part, max_len, prefix, constraint, visit);
        }
        prefix.pop();
    }
}

/// All partitions of `n` (with at most `max_len` parts) satisfying `constraint`.
pub fn enumerate_partitions<C>(n: u32, max_len: Option<usize>, constraint: &C) -> Vec<Partition>
where
    C: Constraint + ?Sized,
{
    let mut out = Vec::new();
    for_each_partition(n, max_len, constraint, |p| out.push(p.clone()));
    out
}

pub fn count_partitions<C>(n: u32, max_len: Option<usize>, constraint: &C) -> BigUint
where
    C: Constraint + ?Sized,
{
    let mut total = BigUint::default();
    for_each_partition(n, max_len, constraint, |_| total += 1u32);
    total
}
