//! Multisets of invariant factors and the passage from graded invariants to
//! a Smith normal form.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A multiset of positive integers. Each entry may carry the degree it was
/// produced in; entries without a degree use `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InvariantMultiset {
    entries: BTreeMap<(Option<usize>, BigUint), u64>,
}

impl InvariantMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, value: BigUint, degree: Option<usize>, multiplicity: u64) {
        if multiplicity > 0 {
            *self.entries.entry((degree, value)).or_insert(0) += multiplicity;
        }
    }

    /// Number of elements counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(value, multiplicity, degree)` ordered by degree, then value.
    pub fn entries(&self) -> impl Iterator<Item = (&BigUint, u64, Option<usize>)> {
        self.entries.iter().map(|((d, v), &m)| (v, m, *d))
    }

    /// Value → multiplicity, forgetting degrees.
    pub fn by_value(&self) -> BTreeMap<BigUint, u64> {
        let mut out = BTreeMap::new();
        for ((_, v), &m) in &self.entries {
            *out.entry(v.clone()).or_insert(0) += m;
        }
        out
    }

    /// Same values with the same multiplicities, degrees ignored.
    pub fn same_values(&self, other: &Self) -> bool {
        self.by_value() == other.by_value()
    }

    pub fn max(&self) -> Option<BigUint> {
        self.entries.keys().map(|(_, v)| v).max().cloned()
    }

    /// Multiplicity of the largest value.
    pub fn max_multiplicity(&self) -> u64 {
        self.by_value()
            .into_iter()
            .next_back()
            .map_or(0, |(_, m)| m)
    }

    /// The values as a sorted list with repetitions.
    pub fn expand(&self) -> Vec<BigUint> {
        self.by_value()
            .into_iter()
            .flat_map(|(v, m)| std::iter::repeat_n(v, m as usize))
            .collect()
    }

    /// Per-degree view: degree → value → multiplicity.
    pub fn by_degree(&self) -> BTreeMap<Option<usize>, BTreeMap<BigUint, u64>> {
        let mut out: BTreeMap<Option<usize>, BTreeMap<BigUint, u64>> = BTreeMap::new();
        for ((d, v), &m) in &self.entries {
            *out.entry(*d).or_default().entry(v.clone()).or_insert(0) += m;
        }
        out
    }

    pub fn from_values<I: IntoIterator<Item = BigUint>>(values: I) -> Self {
        let mut out = Self::new();
        for v in values {
            out.insert(v, None, 1);
        }
        out
    }
}

/// Largest value first: `32^1 4^2 2^1 1^5`.
impl fmt::Display for InvariantMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .by_value()
            .into_iter()
            .rev()
            .map(|(v, m)| format!("{v}^{m}"))
            .collect();
        if parts.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Pairwise coprime integers `> 1` such that every input is a product of
/// powers of them.
fn coprime_base(values: &[BigUint]) -> Vec<BigUint> {
    let one = BigUint::one();
    let mut base: Vec<BigUint> = values.iter().filter(|v| **v > one).cloned().collect();
    base.sort();
    base.dedup();
    'outer: loop {
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                let g = base[i].gcd(&base[j]);
                if g > one {
                    let (a, b) = (base.swap_remove(j), base.swap_remove(i));
                    for x in [&a / &g, &b / &g, g] {
                        if x > one && !base.contains(&x) {
                            base.push(x);
                        }
                    }
                    continue 'outer;
                }
            }
        }
        return base;
    }
}

fn valuation(mut n: BigUint, b: &BigUint) -> u64 {
    let mut v = 0;
    while !n.is_zero() && (&n % b).is_zero() {
        n /= b;
        v += 1;
    }
    v
}

/// The divisibility chain with the same per-prime valuation multisets as
/// `values`: for each prime, its exponents are sorted ascending and
/// recombined position by position.
pub fn graded_to_snf(values: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::one(); values.len()];
    for b in coprime_base(values) {
        let mut exps: Vec<u64> = values.iter().map(|v| valuation(v.clone(), &b)).collect();
        exps.sort_unstable();
        for (slot, e) in out.iter_mut().zip(exps) {
            for _ in 0..e {
                *slot *= &b;
            }
        }
    }
    out
}
