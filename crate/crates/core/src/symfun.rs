//! Power-sum to monomial transition matrices.
//!
//! `p_λ = Σ_μ M(p,m)_{λμ} m_μ`. The expansion is built one power sum at a
//! time: multiplying `m_μ` by `p_n` adds `n` to one entry of the exponent
//! vector, so `p_n·m_μ = Σ_ν c_ν m_ν` where `ν` runs over the ways of
//! raising one part `v` of `μ` (or a new zero part) to `v + n`, and `c_ν` is
//! the multiplicity of `v + n` in `ν`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::Ring;

use crate::linalg::Matrix;
use crate::multipartition::{multipartitions, Multipartition};
use crate::partition::{partitions, Partition};
use crate::IntMatrix;

/// A square basis-change matrix together with its row/column labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix<L> {
    pub degree: usize,
    pub labels: Vec<L>,
    pub matrix: IntMatrix,
}

/// Monomial expansion of a symmetric function.
type MonomialExpansion = BTreeMap<Partition, BigInt>;

fn times_power_sum(f: &MonomialExpansion, n: usize) -> MonomialExpansion {
    let mut out = MonomialExpansion::new();
    for (mu, c) in f {
        let mut values: Vec<usize> = mu.multiplicities().iter().map(|&(v, _)| v).collect();
        values.push(0);
        for v in values {
            let mut parts = mu.parts().to_vec();
            match parts.iter().position(|&p| p == v) {
                Some(i) => parts[i] += n,
                None => parts.push(n),
            }
            let nu = Partition::from_parts(parts);
            let coef = nu.multiplicity(v + n);
            *out.entry(nu).or_insert_with(BigInt::zero) += c * BigInt::from(coef);
        }
    }
    out
}

/// `p_λ` in the monomial basis.
pub fn power_sum_in_monomials(lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut f = MonomialExpansion::new();
    f.insert(Partition::empty(), BigInt::one());
    for &n in lambda.parts() {
        f = times_power_sum(&f, n);
    }
    f
}

/// `M(p,m)` on `Par(d)` in canonical order; lower triangular.
pub fn transition_p_to_m(d: usize) -> TransitionMatrix<Partition> {
    let labels = partitions(d);
    let position: HashMap<&Partition, usize> =
        labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut matrix = Matrix::zeros(labels.len(), labels.len());
    for (i, lambda) in labels.iter().enumerate() {
        for (mu, c) in power_sum_in_monomials(lambda) {
            matrix[(i, position[&mu])] = c;
        }
    }
    TransitionMatrix {
        degree: d,
        labels,
        matrix,
    }
}

/// `M(p,m)^{⊗k}` on `k`-multipartitions of `d`: the entry at `(λ, μ)` is
/// `Π_c M(p,m)_{λ^(c) μ^(c)}` when every component has matching size, and
/// zero otherwise.
pub fn transition_tensor(k: usize, d: usize) -> TransitionMatrix<Multipartition> {
    let labels = multipartitions(k, d);
    let per_degree: Vec<IntMatrix> = (0..=d).map(|e| transition_p_to_m(e).matrix).collect();
    let matrix = assemble_tensor(&labels, &per_degree);
    TransitionMatrix {
        degree: d,
        labels,
        matrix,
    }
}

/// Tensor-power assembly over multipartition labels. `per_degree[e]` is a
/// square matrix indexed by `partitions(e)` in canonical order.
pub fn assemble_tensor<T: Ring>(labels: &[Multipartition], per_degree: &[Matrix<T>]) -> Matrix<T> {
    let positions: Vec<HashMap<Partition, usize>> = (0..per_degree.len())
        .map(|e| {
            partitions(e)
                .into_iter()
                .enumerate()
                .map(|(i, l)| (l, i))
                .collect()
        })
        .collect();
    let sizes: Vec<Vec<usize>> = labels.iter().map(Multipartition::component_sizes).collect();
    Matrix::from_fn(labels.len(), labels.len(), |a, b| {
        if sizes[a] != sizes[b] {
            return T::zero();
        }
        labels[a]
            .components()
            .iter()
            .zip(labels[b].components())
            .fold(T::one(), |acc, (x, y)| {
                let pos = &positions[x.size()];
                acc * per_degree[x.size()][(pos[x], pos[y])].clone()
            })
    })
}
