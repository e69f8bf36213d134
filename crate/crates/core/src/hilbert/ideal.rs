use serde::{Deserialize, Serialize};

use super::monomial::{minimalize, Monomial};
use crate::error::{check_ri, Error, Result};
use crate::partition::{c_predicate, CForm};

/// The monomial ideal families that appear in the identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum IdealFamily {
    /// `(x₁^i, x_j^{r−n} x_{j+1}^n | j ≥ 1, 0 ≤ n ≤ r−1)`.
    #[serde(rename = "I_ri")]
    Iri { r: usize, i: usize },
    /// `x₁^i` together with the block monomials whose block sizes follow the
    /// last entry of the previous block (minus one after block `i`).
    #[serde(rename = "Iprime_ri")]
    IPrime { r: usize, i: usize },
    /// `J_k^l ⊂ k[x_k, x_{k+1}, …]`:
    /// `x_k^l, x_k^{l−t} x_{k+1}^{r−l+t} (1 ≤ t < l)` and `J_{k+1}`.
    #[serde(rename = "J_k_l")]
    J { r: usize, k: u32, l: usize },
    /// `r` blocks of integers `≥ m`, the first of size `c`, each later one
    /// sized by the last entry of the previous block, in `k[x_m, …]`.
    Block { r: usize, c: u32, m: u32 },
    Custom,
}

/// Membership rule that does not go through generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Intrinsic {
    /// A monomial lies in the ideal iff its partition has no vanishing
    /// `(i, ℓ)`-new part.
    NewParts { r: usize, i: usize },
}

/// A monomial ideal in `k[x_f, x_{f+1}, …]` known through its minimal
/// generators of weight at most `weight_bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    pub family: IdealFamily,
    pub weight_bound: u64,
    pub first_var: u32,
    pub generators: Vec<Monomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intrinsic: Option<Intrinsic>,
}

impl MonomialIdeal {
    /// An ideal from explicit generators, minimalized and cut at `weight_bound`.
    pub fn custom(generators: Vec<Monomial>, first_var: u32, weight_bound: u64) -> Result<Self> {
        if first_var < 1 {
            return Err(Error::ParameterRange("variables start at x_1".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.min_var().is_some_and(|v| v < first_var)) {
            return Err(Error::ParameterRange(format!("{g} uses a variable below x_{first_var}")));
        }
        let generators =
            minimalize(generators.into_iter().filter(|g| g.weight() <= weight_bound).collect());
        Ok(MonomialIdeal { family: IdealFamily::Custom, weight_bound, first_var, generators, intrinsic: None })
    }

    /// Divisibility by some generator. Only meaningful up to the weight bound.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Membership through the intrinsic rule, if the family has one.
    pub fn intrinsic_contains(&self, m: &Monomial) -> Option<bool> {
        self.intrinsic.map(|rule| match rule {
            Intrinsic::NewParts { r, i } => {
                !c_predicate(&m.to_partition(), r, i, CForm::Vanishing).expect("validated parameters")
            }
        })
    }
}

/// All minimal generators of weight `≤ weight_bound` of the named family.
pub fn ideal_generators(family: IdealFamily, weight_bound: u64) -> Result<MonomialIdeal> {
    if weight_bound < 1 {
        return Err(Error::ParameterRange("weight bound must be at least 1".into()));
    }
    let w = weight_bound;
    let (first_var, raw, intrinsic) = match family {
        IdealFamily::Iri { r, i } => {
            check_ri(r, i)?;
            let mut gens = vec![Monomial::power(1, i as u32)];
            gens.extend(consecutive_pairs(r, 1, w));
            (1, gens, None)
        }
        IdealFamily::J { r, k, l } => {
            if r < 2 || l < 1 || l > r || k < 1 {
                return Err(Error::ParameterRange(format!("J needs r >= 2, 1 <= l <= r, k >= 1; got r={r}, l={l}, k={k}")));
            }
            let mut gens = vec![Monomial::power(k, l as u32)];
            for t in 1..l {
                gens.push(Monomial::from_pairs([(k, (l - t) as u32), (k + 1, (r - l + t) as u32)]));
            }
            gens.extend(consecutive_pairs(r, k + 1, w));
            (k, gens, None)
        }
        IdealFamily::IPrime { r, i } => {
            check_ri(r, i)?;
            let mut gens = vec![Monomial::power(1, i as u32)];
            blocks(r, 1, 1, w, &|j, last| if j <= i { last } else { last - 1 }, &mut gens);
            (1, gens, Some(Intrinsic::NewParts { r, i }))
        }
        IdealFamily::Block { r, c, m } => {
            if r < 1 || c < 1 || m < 1 {
                return Err(Error::ParameterRange(format!("block ideal needs r, c, m >= 1; got r={r}, c={c}, m={m}")));
            }
            let mut gens = Vec::new();
            blocks(r, c, m, w, &|_, last| last, &mut gens);
            (m, gens, None)
        }
        IdealFamily::Custom => {
            return Err(Error::ParameterRange("custom ideals are built from explicit generators".into()))
        }
    };
    let generators = minimalize(raw.into_iter().filter(|g| g.weight() <= w).collect());
    Ok(MonomialIdeal { family, weight_bound, first_var, generators, intrinsic })
}

/// `x_j^{r−n} x_{j+1}^n` for `j ≥ from`, `0 ≤ n ≤ r−1`, weight `≤ w`.
fn consecutive_pairs(r: usize, from: u32, w: u64) -> Vec<Monomial> {
    let mut gens = Vec::new();
    let mut j = from;
    while u64::from(j) * r as u64 <= w {
        for n in 0..r as u32 {
            gens.push(Monomial::from_pairs([(j, r as u32 - n), (j + 1, n)]));
        }
        j += 1;
    }
    gens
}

/// Products of `r` consecutive non-decreasing blocks of integers `≥ lo`.
/// Block 1 has `first_size` entries; block `j ≥ 2` has `size(j, last)`
/// entries, `last` being the final entry of block `j−1`. A block of size 0
/// ends the product early.
fn blocks(
    r: usize,
    first_size: u32,
    lo: u32,
    w: u64,
    size: &dyn Fn(usize, u32) -> u32,
    out: &mut Vec<Monomial>,
) {
    struct Walk<'a> {
        r: usize,
        w: u64,
        size: &'a dyn Fn(usize, u32) -> u32,
        parts: Vec<u32>,
    }

    impl Walk<'_> {
        // Fill `left` more entries of block `block`, all `≥ floor`.
        fn go(&mut self, block: usize, left: u32, floor: u32, weight: u64, out: &mut Vec<Monomial>) {
            if left == 0 {
                let last = *self.parts.last().expect("blocks are non-empty");
                let next = if block < self.r { (self.size)(block + 1, last) } else { 0 };
                if next == 0 {
                    out.push(Monomial::from_pairs(self.parts.iter().map(|&v| (v, 1))));
                } else {
                    self.go(block + 1, next, last, weight, out);
                }
                return;
            }
            // every remaining entry is at least `v`
            let mut v = floor;
            while weight + u64::from(left) * u64::from(v) <= self.w {
                self.parts.push(v);
                self.go(block, left - 1, v, weight + u64::from(v), out);
                self.parts.pop();
                v += 1;
            }
        }
    }

    let mut walk = Walk { r, w, size, parts: Vec::new() };
    walk.go(1, first_size, lo, 0, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
        ideal.generators.iter().map(|g| g.to_partition().into_parts()).collect()
    }

    #[test]
    fn rogers_ramanujan_ideal_pattern() {
        let ideal = ideal_generators(IdealFamily::Iri { r: 2, i: 2 }, 5).unwrap();
        assert_eq!(gens(&ideal), vec![vec![1, 1], vec![2, 1], vec![2, 2], vec![3, 2]]);
    }

    #[test]
    fn smallest_block_generator() {
        let ideal = ideal_generators(IdealFamily::IPrime { r: 2, i: 2 }, 6).unwrap();
        assert_eq!(ideal.generators[0], Monomial::power(1, 2));
        assert!(ideal.contains(&Monomial::from_pairs([(1, 1), (5, 1)])));
    }

    #[test]
    fn rank_three_blocks_match_explicit_shape() {
        // x_c x_{k_1}⋯x_{k_c} x_{i_1}⋯x_{i_{k_c}}, 1 ≤ c ≤ k_1 ≤ ⋯ ≤ k_c ≤ i_{k_c} ≤ ⋯ ≤ i_1
        let w = 14;
        let ideal = ideal_generators(IdealFamily::IPrime { r: 3, i: 3 }, w).unwrap();
        let mut explicit = Vec::new();
        for c in 1..=w as u32 {
            let mut ks = Vec::new();
            nondecreasing(c as usize, c, w - u64::from(c), &mut ks, &mut |ks| {
                let kc = *ks.last().unwrap();
                let used = u64::from(c) + ks.iter().map(|&k| u64::from(k)).sum::<u64>();
                let mut is = Vec::new();
                nondecreasing(kc as usize, kc, w - used, &mut is, &mut |is| {
                    let mut pairs = vec![(c, 1)];
                    pairs.extend(ks.iter().map(|&k| (k, 1)));
                    pairs.extend(is.iter().map(|&i| (i, 1)));
                    explicit.push(Monomial::from_pairs(pairs));
                });
            });
        }
        assert_eq!(ideal.generators, minimalize(explicit));
    }

    // Non-decreasing sequences of length `len`, entries `≥ floor`, sum `≤ budget`.
    fn nondecreasing(len: usize, floor: u32, budget: u64, buf: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if buf.len() == len {
            f(buf);
            return;
        }
        let left = (len - buf.len()) as u64;
        let mut v = floor;
        while left * u64::from(v) <= budget {
            buf.push(v);
            nondecreasing(len, v, budget - u64::from(v), buf, f);
            buf.pop();
            v += 1;
        }
    }

    #[test]
    fn ideal_json_has_partitions() {
        let ideal = ideal_generators(IdealFamily::J { r: 2, k: 2, l: 1 }, 7).unwrap();
        let text = serde_json::to_string(&ideal).unwrap();
        assert!(text.contains(r#""family":{"tag":"J_k_l","r":2,"k":2,"l":1}"#), "{text}");
        assert!(text.contains(r#""generators":[[2],[3,3],[4,3]]"#), "{text}");
        let back: MonomialIdeal = serde_json::from_str(&text).unwrap();
        assert_eq!(back, ideal);
    }
}
