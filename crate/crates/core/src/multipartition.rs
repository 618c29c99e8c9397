//! Multipartitions and their flattening into coloured partitions.
//!
//! A multipartition `(λ^(1) | … | λ^(k))` corresponds to a single partition
//! `λ` (all parts merged) plus a colour `i_j ∈ 1..=k` per part recording the
//! component it came from, with colours weakly increasing along runs of equal
//! parts. Multipartitions of a given size are ordered by `λ` descending and
//! then by the colour sequence lexicographically.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParameter(
                "a multipartition needs at least one component".into(),
            ));
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Number of components `k`.
    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        self.components.iter().map(Partition::size).collect()
    }

    pub fn to_indexed(&self) -> IndexedPartition {
        let mut tagged: Vec<(usize, usize)> = self
            .components
            .iter()
            .enumerate()
            .flat_map(|(c, comp)| comp.parts().iter().map(move |&p| (p, c + 1)))
            .collect();
        tagged.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        IndexedPartition {
            base: Partition::from_parts(tagged.iter().map(|t| t.0).collect()),
            colors: tagged.into_iter().map(|t| t.1).collect(),
        }
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A partition with one colour per part, `i_j ≤ i_{j+1}` when
/// `λ_j = λ_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexedPartition {
    base: Partition,
    colors: Vec<usize>,
}

impl IndexedPartition {
    pub fn new(base: Partition, colors: Vec<usize>, k: usize) -> Result<Self> {
        let admissible = colors.len() == base.len()
            && colors.iter().all(|&c| (1..=k).contains(&c))
            && base
                .parts()
                .windows(2)
                .zip(colors.windows(2))
                .all(|(p, c)| p[0] != p[1] || c[0] <= c[1]);
        if !admissible {
            return Err(Error::InvalidColors {
                partition: base.to_string(),
                colors,
            });
        }
        Ok(Self { base, colors })
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Splits the parts back into `k` components by colour.
    pub fn to_multipartition(&self, k: usize) -> Result<Multipartition> {
        if self.colors.iter().any(|&c| c == 0 || c > k) {
            return Err(Error::InvalidColors {
                partition: self.base.to_string(),
                colors: self.colors.clone(),
            });
        }
        let mut comps = vec![Vec::new(); k];
        for (&p, &c) in self.base.parts().iter().zip(&self.colors) {
            comps[c - 1].push(p);
        }
        Multipartition::new(comps.into_iter().map(Partition::from_parts).collect())
    }
}

/// Weakly increasing sequences of length `m` over `1..=k`, lexicographic.
pub fn weakly_increasing_tuples(k: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn go(k: usize, m: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for c in lo..=k {
            cur.push(c);
            go(k, m, c, cur, out);
            cur.pop();
        }
    }
    go(k, m, 1, &mut cur, &mut out);
    out
}

/// The admissible colour sequences `Ω(λ)` with colours in `1..=k`, in
/// lexicographic order.
pub fn color_sequences(lambda: &Partition, k: usize) -> Vec<Vec<usize>> {
    let mut seqs = vec![Vec::new()];
    for (_, m) in lambda.multiplicities() {
        let runs = weakly_increasing_tuples(k, m);
        seqs = seqs
            .iter()
            .flat_map(|prefix| {
                runs.iter().map(move |run| {
                    let mut s = prefix.clone();
                    s.extend_from_slice(run);
                    s
                })
            })
            .collect();
    }
    seqs
}

/// All multipartitions with `k` components of total size `d`, in canonical
/// order.
pub fn multipartitions(k: usize, d: usize) -> Vec<Multipartition> {
    assert!(k >= 1, "k must be positive");
    indexed_partitions(k, d)
        .iter()
        .map(|ip| ip.to_multipartition(k).expect("colours are in range"))
        .collect()
}

/// The coloured partitions of size `d`, in the same order as
/// [`multipartitions`].
pub fn indexed_partitions(k: usize, d: usize) -> Vec<IndexedPartition> {
    partitions(d)
        .into_iter()
        .flat_map(|lambda| {
            color_sequences(&lambda, k)
                .into_iter()
                .map(move |colors| IndexedPartition {
                    base: lambda.clone(),
                    colors,
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Brute force: every way of splitting `d` into `k` ordered sizes and
    /// picking a partition of each.
    fn brute_multipartitions(k: usize, d: usize) -> HashSet<Vec<Partition>> {
        if k == 1 {
            return partitions(d).into_iter().map(|l| vec![l]).collect();
        }
        let mut out = HashSet::new();
        for first in 0..=d {
            for head in partitions(first) {
                for tail in brute_multipartitions(k - 1, d - first) {
                    let mut v = vec![head.clone()];
                    v.extend(tail);
                    out.insert(v);
                }
            }
        }
        out
    }

    #[test]
    fn counts() {
        assert_eq!(multipartitions(2, 2).len(), 5);
        assert_eq!(multipartitions(4, 2).len(), 14);
        assert_eq!(multipartitions(4, 4).len(), 105);
        assert_eq!(multipartitions(3, 3).len(), 22);
        assert_eq!(multipartitions(1, 5).len(), 7);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for k in 1..=3 {
            for d in 0..=5 {
                let got: HashSet<Vec<Partition>> = multipartitions(k, d)
                    .into_iter()
                    .map(|m| m.components().to_vec())
                    .collect();
                assert_eq!(got, brute_multipartitions(k, d), "k={k} d={d}");
                assert_eq!(got.len(), multipartitions(k, d).len());
            }
        }
    }

    #[test]
    fn indexing_examples() {
        let m = Multipartition::new(vec![p(&[2]), p(&[1])]).unwrap();
        let ip = m.to_indexed();
        assert_eq!(ip.base(), &p(&[2, 1]));
        assert_eq!(ip.colors(), &[1, 2]);
        let m = Multipartition::new(vec![p(&[1]), p(&[1])]).unwrap();
        assert_eq!(m.to_indexed().colors(), &[1, 2]);
        assert!(IndexedPartition::new(p(&[1, 1]), vec![2, 1], 2).is_err());
        assert!(IndexedPartition::new(p(&[2, 1]), vec![2, 1], 2).is_ok());
        assert!(IndexedPartition::new(p(&[2, 1]), vec![3, 1], 2).is_err());
    }

    #[test]
    fn round_trip_m3_3() {
        let all = multipartitions(3, 3);
        assert_eq!(all.len(), 22);
        let indexed = indexed_partitions(3, 3);
        for (m, ip) in all.iter().zip(&indexed) {
            assert_eq!(&m.to_indexed(), ip);
            assert_eq!(&ip.to_multipartition(3).unwrap(), m);
            let again = IndexedPartition::new(ip.base().clone(), ip.colors().to_vec(), 3).unwrap();
            assert_eq!(&again, ip);
        }
    }

    #[test]
    fn canonical_order() {
        let all = indexed_partitions(2, 2);
        let shown: Vec<(Vec<usize>, Vec<usize>)> = all
            .iter()
            .map(|ip| (ip.base().parts().to_vec(), ip.colors().to_vec()))
            .collect();
        assert_eq!(
            shown,
            vec![
                (vec![2], vec![1]),
                (vec![2], vec![2]),
                (vec![1, 1], vec![1, 1]),
                (vec![1, 1], vec![1, 2]),
                (vec![1, 1], vec![2, 2]),
            ]
        );
    }

    #[test]
    fn tuples() {
        assert_eq!(weakly_increasing_tuples(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(
            weakly_increasing_tuples(2, 2),
            vec![vec![1, 1], vec![1, 2], vec![2, 2]]
        );
        assert_eq!(weakly_increasing_tuples(3, 3).len(), 10);
    }
}
