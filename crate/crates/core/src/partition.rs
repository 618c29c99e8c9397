//! Partitions and the statistics attached to them.
//!
//! A [`Partition`] is stored as its weakly decreasing list of positive parts.
//! Enumeration functions return partitions of a fixed size in *descending*
//! lexicographic order, `(d)` first and `(1^d)` last; every matrix in the crate
//! is indexed in this order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!(
                "{parts:?} is not a weakly decreasing list of positive parts"
            )));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// Builds `(k_1^{m_1} k_2^{m_2} …)` from `(part, multiplicity)` pairs.
    pub fn from_multiplicities<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let parts = pairs
            .into_iter()
            .flat_map(|(k, m)| std::iter::repeat_n(k, m))
            .collect();
        Self::from_parts(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `m_r(λ)`.
    pub fn multiplicity(&self, r: usize) -> usize {
        self.parts.iter().filter(|&&p| p == r).count()
    }

    /// Distinct parts with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// No part divisible by `ell`.
    pub fn is_class_regular(&self, ell: usize) -> bool {
        self.parts.iter().all(|p| p % ell != 0)
    }

    /// No part repeated `ell` or more times.
    pub fn is_regular(&self, ell: usize) -> bool {
        self.multiplicities().iter().all(|&(_, m)| m < ell)
    }

    pub(crate) fn require_class_regular(&self, ell: usize) -> Result<()> {
        if self.is_class_regular(ell) {
            Ok(())
        } else {
            Err(Error::NotClassRegular {
                partition: self.to_string(),
                ell,
            })
        }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_parts(parts)
    }

    /// `kλ = (kλ_1, kλ_2, …)`.
    pub fn scale_parts(&self, k: usize) -> Partition {
        Self {
            parts: self.parts.iter().map(|p| p * k).collect(),
        }
    }

    /// `λ^k = (1^{k m_1} 2^{k m_2} …)`: every part repeated `k` times.
    pub fn repeat_parts(&self, k: usize) -> Partition {
        Self {
            parts: self
                .parts
                .iter()
                .flat_map(|&p| std::iter::repeat_n(p, k))
                .collect(),
        }
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        Self {
            parts: (1..=first)
                .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
                .collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `2,1,1`, `(2,1,1)`, `()` and `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if t.is_empty() || t == "∅" {
            return Ok(Self::empty());
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// All partitions of `d`, descending lexicographic order.
pub fn partitions(d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(d, d, &mut current, &mut out);
    out
}

fn fill(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for k in (1..=max.min(rest)).rev() {
        current.push(k);
        fill(rest - k, k, current, out);
        current.pop();
    }
}

/// Partitions of `d` with no part divisible by `ell`.
pub fn class_regular_partitions(d: usize, ell: usize) -> Vec<Partition> {
    partitions(d)
        .into_iter()
        .filter(|p| p.is_class_regular(ell))
        .collect()
}

/// Partitions of `d` with every multiplicity below `ell`.
pub fn regular_partitions(d: usize, ell: usize) -> Vec<Partition> {
    partitions(d)
        .into_iter()
        .filter(|p| p.is_regular(ell))
        .collect()
}

/// `z_λ = Π_r r^{m_r} m_r!`.
pub fn z(lambda: &Partition) -> BigUint {
    lambda
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (r, m)| {
            let mut acc = acc;
            for j in 1..=m {
                acc *= r * j;
            }
            acc
        })
}

/// `d_p(λ) = Σ_n d_p(m_n(λ))`.
pub fn partition_defect(lambda: &Partition, p: u64) -> Result<u64> {
    arith::require_prime(p)?;
    Ok(lambda
        .multiplicities()
        .iter()
        .map(|&(_, m)| arith::legendre_unchecked(m as u64, p))
        .sum())
}

/// Largest `i` with `base^i | n`.
fn base_valuation(mut n: usize, base: usize) -> (usize, usize) {
    let mut i = 0;
    while n.is_multiple_of(base) {
        n /= base;
        i += 1;
    }
    (i, n)
}

/// Splits `λ = λ^(0) + bλ^(1) + … + b^N λ^(N)` with every `λ^(i)`
/// `b`-class-regular. A part `b^i n'` with `b ∤ n'` becomes a part `n'` of
/// `λ^(i)`. The result has at least one entry; trailing empty components are
/// dropped.
pub fn p_adic_decomposition(lambda: &Partition, base: usize) -> Result<Vec<Partition>> {
    if base < 2 {
        return Err(Error::InvalidParameter(format!("base {base} < 2")));
    }
    let mut layers: Vec<Vec<usize>> = vec![Vec::new()];
    for &part in &lambda.parts {
        let (i, rest) = base_valuation(part, base);
        if layers.len() <= i {
            layers.resize(i + 1, Vec::new());
        }
        layers[i].push(rest);
    }
    Ok(layers.into_iter().map(Partition::from_parts).collect())
}

/// Inverse of [`p_adic_decomposition`].
pub fn recompose(layers: &[Partition], base: usize) -> Partition {
    let mut parts = Vec::new();
    let mut scale = 1;
    for layer in layers {
        parts.extend(layer.parts.iter().map(|p| p * scale));
        scale *= base;
    }
    Partition::from_parts(parts)
}

/// Writes an `ell`-class-regular `μ` as `μ̂ ∪ μ̌^ℓ` with `μ̂` `ell`-regular:
/// `m_k(μ) = m_k(μ̂) + ℓ m_k(μ̌)`, `0 ≤ m_k(μ̂) < ℓ`.
pub fn ell_split(mu: &Partition, ell: usize) -> Result<(Partition, Partition)> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ell {ell} < 2")));
    }
    mu.require_class_regular(ell)?;
    let mults = mu.multiplicities();
    let hat = Partition::from_multiplicities(mults.iter().map(|&(k, m)| (k, m % ell)));
    let check = Partition::from_multiplicities(mults.iter().map(|&(k, m)| (k, m / ell)));
    Ok((hat, check))
}

/// Glaisher's bijection from `ell`-class-regular to `ell`-regular partitions:
/// each multiplicity `m_k = Σ a_i ℓ^i` (base `ℓ`) becomes `a_i` parts `ℓ^i k`.
pub fn glaisher(lambda: &Partition, ell: usize) -> Result<Partition> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ell {ell} < 2")));
    }
    lambda.require_class_regular(ell)?;
    let mut parts = Vec::new();
    for (k, mut m) in lambda.multiplicities() {
        let mut scale = k;
        while m > 0 {
            parts.extend(std::iter::repeat_n(scale, m % ell));
            m /= ell;
            scale *= ell;
        }
    }
    Ok(Partition::from_parts(parts))
}

/// Inverse of [`glaisher`]: a part `ℓ^i k` with `ℓ ∤ k` becomes `ℓ^i`
/// parts `k`.
pub fn glaisher_inverse(lambda: &Partition, ell: usize) -> Result<Partition> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ell {ell} < 2")));
    }
    if !lambda.is_regular(ell) {
        return Err(Error::InvalidParameter(format!(
            "{lambda} is not {ell}-regular"
        )));
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &part in &lambda.parts {
        let (i, k) = base_valuation(part, ell);
        *counts.entry(k).or_default() += ell.pow(i as u32);
    }
    Ok(Partition::from_multiplicities(counts))
}

/// First-column hook lengths `β_i = λ_i + l(λ) - i`.
fn beta_numbers(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    lambda
        .parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i)
        .collect()
}

fn from_beta_numbers(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    Partition::from_parts(
        beta.iter()
            .enumerate()
            .map(|(i, &b)| b + 1 + i - l)
            .collect(),
    )
}

/// The `ell`-core: slide every bead of the `ell`-runner abacus as far up its
/// runner as it goes.
pub fn ell_core(lambda: &Partition, ell: usize) -> Partition {
    ell_core_and_weight(lambda, ell).0
}

/// `(core, weight)` with `|λ| = |core| + ℓ·weight`.
pub fn ell_core_and_weight(lambda: &Partition, ell: usize) -> (Partition, usize) {
    assert!(ell >= 1, "ell must be positive");
    let beta = beta_numbers(lambda);
    let mut runner = vec![0usize; ell];
    for &b in &beta {
        runner[b % ell] += 1;
    }
    let mut core_beta = Vec::with_capacity(beta.len());
    for (r, &count) in runner.iter().enumerate() {
        core_beta.extend((0..count).map(|j| r + j * ell));
    }
    let moved: usize = beta.iter().sum::<usize>() - core_beta.iter().sum::<usize>();
    (from_beta_numbers(core_beta), moved / ell)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(partitions(2), vec![p(&[2]), p(&[1, 1])]);
        let four = partitions(4);
        assert_eq!(four.len(), 5);
        assert_eq!(four[0], p(&[4]));
        assert_eq!(four[4], p(&[1, 1, 1, 1]));
        assert_eq!(four[1], p(&[3, 1]));
        assert_eq!(four[2], p(&[2, 2]));
        let counts: Vec<usize> = (0..=10).map(|d| partitions(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn enumeration_is_descending_and_valid() {
        for d in 0..=12 {
            let all = partitions(d);
            for w in all.windows(2) {
                assert!(w[0] > w[1]);
            }
            assert!(all.iter().all(|l| l.size() == d));
        }
    }

    #[test]
    fn regular_subsets() {
        assert_eq!(class_regular_partitions(3, 2), vec![p(&[3]), p(&[1, 1, 1])]);
        assert_eq!(
            class_regular_partitions(4, 4),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(class_regular_partitions(6, 6).len(), 10);
        assert_eq!(regular_partitions(3, 2), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(regular_partitions(8, 4).len(), 16);
        for ell in 2..=6 {
            for d in 0..=14 {
                assert_eq!(
                    class_regular_partitions(d, ell).len(),
                    regular_partitions(d, ell).len()
                );
            }
        }
    }

    #[test]
    fn validation_and_parsing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("(3,1,1)".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1, 1]).to_string(), "(3,1,1)");
        assert_eq!(Partition::empty().to_string(), "∅");
    }

    #[test]
    fn z_values() {
        assert_eq!(z(&p(&[2, 2, 1])), BigUint::from(8u32));
        assert_eq!(z(&p(&[1, 1, 1, 1, 1])), BigUint::from(120u32));
        assert_eq!(z(&p(&[7])), BigUint::from(7u32));
        assert_eq!(z(&Partition::empty()), BigUint::one());
    }

    #[test]
    fn defects() {
        assert_eq!(partition_defect(&p(&[2, 2, 1, 1, 1, 1]), 2).unwrap(), 4);
        assert_eq!(partition_defect(&Partition::empty(), 3).unwrap(), 0);
        assert_eq!(partition_defect(&p(&[1]), 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn p_adic_examples() {
        assert_eq!(
            p_adic_decomposition(&p(&[4, 2, 1, 1]), 2).unwrap(),
            vec![p(&[1, 1]), p(&[1]), p(&[1])]
        );
        assert_eq!(
            p_adic_decomposition(&p(&[3, 1]), 2).unwrap(),
            vec![p(&[3, 1])]
        );
        assert_eq!(
            p_adic_decomposition(&Partition::empty(), 3).unwrap(),
            vec![Partition::empty()]
        );
    }

    #[test]
    fn p_adic_round_trip_exhaustive() {
        for base in [2, 3, 4, 6] {
            for d in 0..=10 {
                for lambda in partitions(d) {
                    let layers = p_adic_decomposition(&lambda, base).unwrap();
                    assert!(layers.iter().all(|l| l.is_class_regular(base)));
                    assert_eq!(recompose(&layers, base), lambda);
                }
            }
        }
    }

    #[test]
    fn split_examples() {
        let (hat, check) = ell_split(&p(&[1; 8]), 4).unwrap();
        assert_eq!(hat, Partition::empty());
        assert_eq!(check, p(&[1, 1]));
        let (hat, check) = ell_split(&p(&[2, 1, 1, 1, 1, 1, 1]), 4).unwrap();
        assert_eq!(hat, p(&[2, 1, 1]));
        assert_eq!(check, p(&[1]));
        assert!(ell_split(&p(&[4]), 4).is_err());
    }

    #[test]
    fn split_exhaustive() {
        for ell in [2, 3, 4, 6] {
            for n in 0..=12 {
                for mu in class_regular_partitions(n, ell) {
                    let (hat, check) = ell_split(&mu, ell).unwrap();
                    assert!(hat.is_regular(ell) && hat.is_class_regular(ell));
                    assert!(check.is_class_regular(ell));
                    assert_eq!(hat.union(&check.repeat_parts(ell)), mu);
                }
            }
        }
    }

    #[test]
    fn glaisher_examples() {
        assert_eq!(glaisher(&p(&[1, 1, 1]), 2).unwrap(), p(&[2, 1]));
        assert_eq!(glaisher(&p(&[3, 2, 1]), 4).unwrap(), p(&[3, 2, 1]));
        assert!(glaisher(&p(&[2]), 2).is_err());
    }

    #[test]
    fn glaisher_is_a_bijection() {
        for ell in [2, 3, 4] {
            for d in 0..=12 {
                let mut image: Vec<Partition> = class_regular_partitions(d, ell)
                    .iter()
                    .map(|l| {
                        let g = glaisher(l, ell).unwrap();
                        assert_eq!(&glaisher_inverse(&g, ell).unwrap(), l);
                        g
                    })
                    .collect();
                image.sort();
                image.dedup();
                let mut target = regular_partitions(d, ell);
                target.sort();
                assert_eq!(image, target, "ell={ell} d={d}");
            }
        }
    }

    /// Hook lengths from the diagram, independent of beta numbers.
    fn hook_lengths(lambda: &Partition) -> Vec<usize> {
        let conj = lambda.conjugate();
        let mut out = Vec::new();
        for (i, &row) in lambda.parts().iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.parts()[j] - i - 1);
            }
        }
        out
    }

    #[test]
    fn core_examples() {
        assert_eq!(ell_core(&p(&[3, 1]), 4), Partition::empty());
        assert_eq!(ell_core(&p(&[2, 2]), 4), p(&[2, 2]));
        let mut hooks = hook_lengths(&p(&[2, 2]));
        hooks.sort();
        assert_eq!(hooks, vec![1, 2, 2, 3]);
        assert_eq!(ell_core_and_weight(&p(&[4, 4]), 2), (Partition::empty(), 4));
    }

    #[test]
    fn core_is_idempotent_and_hook_free() {
        for ell in [2, 3, 4, 5] {
            for d in 0..=12 {
                for lambda in partitions(d) {
                    let (core, w) = ell_core_and_weight(&lambda, ell);
                    assert_eq!(core.size() + ell * w, d);
                    assert_eq!(ell_core(&core, ell), core);
                    assert!(hook_lengths(&core).iter().all(|h| h % ell != 0));
                    // a partition without hooks divisible by ell is its own core
                    if hook_lengths(&lambda).iter().all(|h| h % ell != 0) {
                        assert_eq!(core, lambda);
                    }
                }
            }
        }
    }
}
