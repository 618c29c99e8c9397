//! Graded invariant factors of `X_{ℓ,d}`, of blocks and of the full Cartan
//! matrix, together with the checks that tie them to matrix computations.

mod matrices;
mod multiset;
mod theta;
mod verify;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::genfunc::{core_count, count_multipartitions, multiplicity_m, to_u64};
use crate::partition::{class_regular_partitions, partitions, Partition};

pub use matrices::{
    induced_power_sum_operator, inverse_transition_tensor, lie_cartan, matrix_b_ell, matrix_x_a,
    matrix_x_ell, matrix_x_for, reduction_target, transition_inverse, SizeLimits,
};
pub use multiset::{graded_to_snf, InvariantMultiset};
pub use theta::{
    kor_r, largest_block_invariant, theta, theta_prime_power, theta_prime_power_factored,
};
pub use verify::{
    counting_lemma, verify_conjecture_snf, verify_determinants, verify_kor_multiset,
    verify_reduction, verify_series, verify_splitting, verify_theta_products, Claim, Comparison,
    LemmaRow, Status, VerificationReport,
};

/// `ϑ_ℓ(λ)` for one partition, with its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedInvariant {
    pub partition: Partition,
    pub value: BigUint,
}

/// `ϑ_ℓ(λ)` for every `λ ⊢ d`, in canonical partition order.
pub fn graded_invariants(ell: u64, d: usize) -> Result<Vec<GradedInvariant>> {
    partitions(d)
        .into_iter()
        .map(|partition| {
            let value = theta(&partition, ell)?;
            Ok(GradedInvariant { partition, value })
        })
        .collect()
}

fn require_ell(ell: u64) -> Result<usize> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ell {ell} < 2")));
    }
    usize::try_from(ell).map_err(|_| Error::InvalidParameter(format!("ell {ell} too large")))
}

/// One degree of a table: the graded invariants in that degree and how
/// often each of them occurs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: usize,
    /// Sorted ascending, one entry per partition of the degree.
    pub values: Vec<BigUint>,
    /// `(block multiplicity, number of cores)` by weight, largest weight
    /// first. Empty for block tables.
    pub terms: Vec<(BigInt, BigInt)>,
    pub multiplicity: BigInt,
}

impl DegreeRow {
    /// `40×1+14×5+4×20+1×32=222`.
    pub fn breakdown(&self) -> String {
        let terms: Vec<String> = self
            .terms
            .iter()
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| format!("{a}×{b}"))
            .collect();
        if terms.is_empty() {
            return self.multiplicity.to_string();
        }
        format!("{}={}", terms.join("+"), self.multiplicity)
    }
}

impl fmt::Display for DegreeRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let values: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(
            f,
            "{}\t{}\t{}",
            self.degree,
            values.join(", "),
            self.breakdown()
        )
    }
}

fn sorted_values(ell: u64, d: usize) -> Result<Vec<BigUint>> {
    let mut values: Vec<BigUint> = graded_invariants(ell, d)?
        .into_iter()
        .map(|g| g.value)
        .collect();
    values.sort();
    Ok(values)
}

/// Rows for the full Cartan matrix of `S_n` at `ℓ`. The multiplicity in
/// degree `d` is `Σ_{w ≥ d} k(ℓ-2, w-d) · #{ℓ-cores of n - ℓw}`.
pub fn full_invariant_table(ell: u64, n: usize) -> Result<Vec<DegreeRow>> {
    let l = require_ell(ell)?;
    let top = n / l;
    (0..=top)
        .map(|d| {
            let terms: Vec<(BigInt, BigInt)> = (d..=top)
                .rev()
                .map(|w| {
                    Ok((
                        count_multipartitions(l - 2, w - d),
                        core_count(l, n - l * w)?,
                    ))
                })
                .collect::<Result<_>>()?;
            let multiplicity = multiplicity_m(l, n, d)?;
            debug_assert_eq!(
                multiplicity,
                terms.iter().map(|(a, b)| a * b).sum::<BigInt>()
            );
            Ok(DegreeRow {
                degree: d,
                values: sorted_values(ell, d)?,
                terms,
                multiplicity,
            })
        })
        .collect()
}

/// Rows for one block of weight `w`: degree `d` occurs `k(ℓ-2, w-d)` times.
pub fn block_invariant_table(ell: u64, w: usize) -> Result<Vec<DegreeRow>> {
    let l = require_ell(ell)?;
    (0..=w)
        .map(|d| {
            let multiplicity = count_multipartitions(l - 2, w - d);
            Ok(DegreeRow {
                degree: d,
                values: sorted_values(ell, d)?,
                terms: Vec::new(),
                multiplicity,
            })
        })
        .collect()
}

fn table_to_multiset(rows: &[DegreeRow]) -> Result<InvariantMultiset> {
    let mut out = InvariantMultiset::new();
    for row in rows {
        let m = to_u64(&row.multiplicity)?;
        for v in &row.values {
            out.insert(v.clone(), Some(row.degree), m);
        }
    }
    Ok(out)
}

/// Graded invariants of the Cartan matrix of an `ℓ`-block of weight `w`.
pub fn block_invariants(ell: u64, w: usize) -> Result<InvariantMultiset> {
    table_to_multiset(&block_invariant_table(ell, w)?)
}

/// Graded invariants of the full Cartan matrix `C_ℓ(n)`.
pub fn full_invariants(ell: u64, n: usize) -> Result<InvariantMultiset> {
    table_to_multiset(&full_invariant_table(ell, n)?)
}

/// The numbers `r_ℓ(μ)` over `μ ∈ Par_ℓ(n)`, without degrees.
pub fn kor_invariants(ell: u64, n: usize) -> Result<InvariantMultiset> {
    let l = require_ell(ell)?;
    let mut out = InvariantMultiset::new();
    for mu in class_regular_partitions(n, l) {
        out.insert(kor_r(&mu, ell)?, None, 1);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(pairs: &[(u64, u64)]) -> std::collections::BTreeMap<BigUint, u64> {
        pairs.iter().map(|&(v, m)| (BigUint::from(v), m)).collect()
    }

    #[test]
    fn full_examples() {
        let c48 = full_invariants(4, 8).unwrap();
        assert_eq!(c48.by_value(), ms(&[(1, 11), (2, 1), (4, 3), (32, 1)]));
        // the table rows give 2 once (degree 3, multiplicity 1); the total
        // must be |Par_6(18)| = 297
        let c618 = full_invariants(6, 18).unwrap();
        assert_eq!(c618.total(), 297);
        assert_eq!(
            c618.by_value(),
            ms(&[
                (1, 222),
                (2, 1),
                (3, 9),
                (6, 54),
                (18, 1),
                (72, 9),
                (1296, 1)
            ])
        );
        let c624 = full_invariants(6, 24).unwrap();
        assert_eq!(
            c624.by_value(),
            ms(&[
                (1, 751),
                (2, 9),
                (3, 55),
                (6, 222),
                (9, 1),
                (12, 1),
                (18, 9),
                (72, 54),
                (216, 1),
                (1296, 9),
                (31104, 1)
            ])
        );
    }

    #[test]
    fn table_rows() {
        let rows = full_invariant_table(6, 18).unwrap();
        let breakdowns: Vec<String> = rows.iter().map(DegreeRow::breakdown).collect();
        assert_eq!(
            breakdowns,
            [
                "40×1+14×5+4×20+1×32=222",
                "14×1+4×5+1×20=54",
                "4×1+1×5=9",
                "1×1=1"
            ]
        );
        assert_eq!(rows[2].values, [3u32, 72].map(BigUint::from).to_vec());
        let rows = full_invariant_table(6, 24).unwrap();
        assert_eq!(rows[0].breakdown(), "105×1+40×5+14×20+4×32+1×38=751");
        assert_eq!(
            rows[4].values,
            [3u32, 9, 12, 216, 31104].map(BigUint::from).to_vec()
        );
    }

    #[test]
    fn block_examples() {
        let b42 = block_invariants(4, 2).unwrap();
        assert_eq!(b42.to_string(), "32^1 4^2 2^1 1^5");
        assert_eq!(block_invariants(5, 0).unwrap().by_value(), ms(&[(1, 1)]));
        let b = block_invariants(6, 4).unwrap();
        assert_eq!(
            b.by_value(),
            ms(&[
                (1, 105),
                (2, 4),
                (3, 15),
                (6, 40),
                (9, 1),
                (12, 1),
                (18, 4),
                (72, 14),
                (216, 1),
                (1296, 4),
                (31104, 1)
            ])
        );
        // k(0, x) = [x = 0]: an ℓ = 2 block only sees its top degree
        let b2 = block_invariant_table(2, 3).unwrap();
        assert!(b2[..3].iter().all(|r| r.multiplicity.is_zero()));
        assert_eq!(b2[3].multiplicity, BigInt::from(1));
        // a block of weight w has k(ℓ-1, w) invariants
        for ell in [2u64, 3, 4, 6] {
            for w in 0..=5 {
                assert_eq!(
                    BigInt::from(block_invariants(ell, w).unwrap().total()),
                    count_multipartitions(ell as usize - 1, w)
                );
            }
        }
    }

    #[test]
    fn full_total_counts_class_regular_partitions() {
        for ell in [2u64, 3, 4, 6] {
            for n in 0..=16 {
                assert_eq!(
                    full_invariants(ell, n).unwrap().total() as usize,
                    class_regular_partitions(n, ell as usize).len(),
                    "ℓ={ell} n={n}"
                );
            }
        }
    }

    #[test]
    fn kor_examples() {
        let k = kor_invariants(4, 8).unwrap();
        assert_eq!(k.by_value(), ms(&[(1, 11), (2, 1), (4, 3), (32, 1)]));
        assert_eq!(kor_invariants(7, 5).unwrap().by_value(), ms(&[(1, 7)]));
    }

    #[test]
    fn graded_list() {
        let g = graded_invariants(4, 2).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].value, BigUint::from(2u32));
        assert_eq!(g[1].value, BigUint::from(32u32));
        assert!(graded_invariants(1, 2).is_err());
    }
}
