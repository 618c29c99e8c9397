//! The matrices `X_{ℓ,d}` and `X_{A,d}` and their building blocks.

use num_bigint::BigInt;
use num_traits::{Pow, ToPrimitive};

use crate::error::{Error, Result};
use crate::genfunc::{count_multipartitions, partition_series};
use crate::linalg::{symmetric_power, Matrix};
use crate::multipartition::multipartitions;
use crate::partition::partitions;
use crate::series::Series;
use crate::symfun::{assemble_tensor, transition_p_to_m, transition_tensor};
use crate::{IntMatrix, RatMatrix};

/// Caps on matrix dimensions, checked before anything is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeLimits {
    pub max_partitions: usize,
    pub max_multipartitions: usize,
}

impl Default for SizeLimits {
    fn default() -> Self {
        Self {
            max_partitions: 1000,
            max_multipartitions: 3000,
        }
    }
}

impl SizeLimits {
    pub fn check_partitions(&self, d: usize) -> Result<usize> {
        let series: Series<BigInt> = partition_series(d + 1);
        let size = series.coeffs()[d].to_usize().unwrap_or(usize::MAX);
        if size > self.max_partitions {
            return Err(Error::SizeLimit {
                what: "partitions".into(),
                size,
                limit: self.max_partitions,
            });
        }
        Ok(size)
    }

    pub fn check_multipartitions(&self, k: usize, d: usize) -> Result<usize> {
        let size = count_multipartitions(k, d).to_usize().unwrap_or(usize::MAX);
        if size > self.max_multipartitions {
            return Err(Error::SizeLimit {
                what: "multipartitions".into(),
                size,
                limit: self.max_multipartitions,
            });
        }
        Ok(size)
    }
}

fn require_ell(ell: u64) -> Result<()> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ell {ell} < 2")));
    }
    Ok(())
}

/// Cartan matrix of the Lie algebra `sl_ℓ`: `(ℓ-1)×(ℓ-1)` tridiagonal with
/// `2` on the diagonal and `-1` beside it.
pub fn lie_cartan(ell: u64) -> Result<IntMatrix> {
    require_ell(ell)?;
    let n = (ell - 1) as usize;
    Ok(Matrix::from_fn(n, n, |i, j| match i.abs_diff(j) {
        0 => BigInt::from(2),
        1 => BigInt::from(-1),
        _ => BigInt::from(0),
    }))
}

/// `diag(ℓ^{l(λ)})` over `Par(d)`.
pub fn matrix_b_ell(ell: u64, d: usize) -> Result<IntMatrix> {
    require_ell(ell)?;
    let base = BigInt::from(ell);
    Ok(Matrix::diagonal(
        partitions(d)
            .iter()
            .map(|l| Pow::pow(&base, l.len() as u32))
            .collect(),
    ))
}

/// `P^{-1} B P`, which must come out integral.
fn conjugate(p: &IntMatrix, b: &IntMatrix, p_inverse: &RatMatrix) -> Result<IntMatrix> {
    p_inverse
        .mul(&b.to_rational())?
        .mul(&p.to_rational())?
        .to_integral()
}

/// `X_{ℓ,d} = M(p,m)^{-1} B_{ℓ,d} M(p,m)`.
pub fn matrix_x_ell(ell: u64, d: usize, limits: &SizeLimits) -> Result<IntMatrix> {
    require_ell(ell)?;
    limits.check_partitions(d)?;
    let m = transition_p_to_m(d).matrix;
    let m_inv = m.to_rational().inverse()?;
    conjugate(&m, &matrix_b_ell(ell, d)?, &m_inv)
}

/// The block-diagonal operator induced by a `k×k` matrix `y` on the degree-`d`
/// power sums in `k` colours. Rows and columns are the `k`-multipartitions of
/// `d` in canonical order; the block of a base partition `λ` is the
/// Kronecker product, over the distinct parts of `λ` from largest to
/// smallest, of `S^{m}(y)` where `m` is the multiplicity of the part.
pub fn induced_power_sum_operator(y: &IntMatrix, d: usize) -> Result<IntMatrix> {
    if !y.is_square() || y.rows() == 0 {
        return Err(Error::DimensionMismatch(format!(
            "need a nonempty square matrix, got {}×{}",
            y.rows(),
            y.cols()
        )));
    }
    let mut blocks = Vec::new();
    for lambda in partitions(d) {
        let mut block = IntMatrix::identity(1);
        for (_, m) in lambda.multiplicities() {
            block = block.kron(&symmetric_power(y, m)?);
        }
        blocks.push(block);
    }
    Ok(Matrix::direct_sum(&blocks))
}

/// `(M(p,m)^{⊗k})^{-1}`, assembled from the per-degree inverses.
pub fn inverse_transition_tensor(k: usize, d: usize) -> Result<RatMatrix> {
    let per_degree: Vec<RatMatrix> = (0..=d)
        .map(|e| transition_p_to_m(e).matrix.to_rational().inverse())
        .collect::<Result<_>>()?;
    Ok(assemble_tensor(&multipartitions(k, d), &per_degree))
}

/// `X_{Y,d} = T^{-1} B_{Y,d} T` for the tensor transition matrix `T` in
/// `k = dim Y` colours.
pub fn matrix_x_for(y: &IntMatrix, d: usize, limits: &SizeLimits) -> Result<IntMatrix> {
    let k = y.rows();
    limits.check_multipartitions(k, d)?;
    let b = induced_power_sum_operator(y, d)?;
    let t = transition_tensor(k, d).matrix;
    conjugate(&t, &b, &inverse_transition_tensor(k, d)?)
}

/// `X_{A,d}` for the Cartan matrix of `sl_ℓ`.
pub fn matrix_x_a(ell: u64, d: usize, limits: &SizeLimits) -> Result<IntMatrix> {
    matrix_x_for(&lie_cartan(ell)?, d, limits)
}

/// `⊕_{s=0}^{d} I_{k(ℓ-2, d-s)} ⊗ X_{ℓ,s}`, the target of the reduction.
pub fn reduction_target(ell: u64, d: usize, limits: &SizeLimits) -> Result<IntMatrix> {
    require_ell(ell)?;
    limits.check_multipartitions((ell - 1) as usize, d)?;
    let mut blocks = Vec::new();
    for s in 0..=d {
        let copies = count_multipartitions((ell - 2) as usize, d - s)
            .to_usize()
            .unwrap_or(usize::MAX);
        if copies > 0 {
            blocks.push(IntMatrix::identity(copies).kron(&matrix_x_ell(ell, s, limits)?));
        }
    }
    Ok(Matrix::direct_sum(&blocks))
}

/// Exact rational inverse, exposed for consumers that need `M(p,m)^{-1}`.
pub fn transition_inverse(d: usize) -> Result<RatMatrix> {
    transition_p_to_m(d).matrix.to_rational().inverse()
}
