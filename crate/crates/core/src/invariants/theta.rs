//! Closed forms for the graded invariant factors `ϑ_ℓ(λ)` and the numbers
//! `r_ℓ(μ)`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::arith::{self, factorial_pi_part, factorize, prime_divisors};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `ϑ_{p^r}(λ) = Π_{ν_p(n) < r} p^{(r - ν_p(n)) m_n(λ) + d_p(m_n(λ))}`.
///
/// The equivalent form `Π (p^r)_n^{m_n} (m_n!)_p` with
/// `(p^r)_n = p^r / gcd(p^r, n)` is evaluated as well and the two must agree.
pub fn theta_prime_power(lambda: &Partition, p: u64, r: u32) -> Result<BigUint> {
    arith::require_prime(p)?;
    if r == 0 {
        return Err(Error::InvalidParameter("theta needs r ≥ 1".into()));
    }
    let by_exponent = theta_prime_power_exponent(lambda, p, r);
    let value = Pow::pow(BigUint::from(p), by_exponent);
    debug_assert_eq!(value, theta_prime_power_factored(lambda, p, r));
    Ok(value)
}

/// `log_p ϑ_{p^r}(λ)`.
pub(crate) fn theta_prime_power_exponent(lambda: &Partition, p: u64, r: u32) -> u64 {
    lambda
        .multiplicities()
        .into_iter()
        .filter_map(|(n, m)| {
            let v = arith::valuation_unchecked(n as u64, p);
            (v < r).then(|| u64::from(r - v) * m as u64 + arith::legendre_unchecked(m as u64, p))
        })
        .sum()
}

/// The second form, `Π (p^r)_n^{m_n(λ)} (m_n(λ)!)_p`, with the `p`-part of
/// `m!` taken from the factorial itself.
pub fn theta_prime_power_factored(lambda: &Partition, p: u64, r: u32) -> BigUint {
    let pr = Pow::pow(BigUint::from(p), r);
    let pb = BigUint::from(p);
    lambda
        .multiplicities()
        .into_iter()
        .filter(|&(n, _)| arith::valuation_unchecked(n as u64, p) < r)
        .fold(BigUint::one(), |acc, (n, m)| {
            let ell_n = &pr / pr.gcd(&BigUint::from(n));
            let mut fact: BigUint = (1..=m as u64).map(BigUint::from).product();
            let mut p_part = BigUint::one();
            while (&fact % &pb).is_zero() {
                fact /= &pb;
                p_part *= &pb;
            }
            acc * Pow::pow(ell_n, m) * p_part
        })
}

/// `ϑ_ℓ(λ) = Π_i ϑ_{p_i^{r_i}}(λ)` over `ℓ = Π p_i^{r_i}`.
pub fn theta(lambda: &Partition, ell: u64) -> Result<BigUint> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ell {ell} < 2")));
    }
    factorize(ell)
        .into_iter()
        .try_fold(BigUint::one(), |acc, (p, r)| {
            Ok(acc * theta_prime_power(lambda, p, r)?)
        })
}

/// `r_ℓ(μ) = Π_k ℓ_k^{⌊m_k/ℓ⌋} · (⌊m_k/ℓ⌋!)_{π_k}` with `ℓ_k = ℓ/gcd(ℓ, k)`
/// and `π_k` the primes dividing `ℓ_k`. Defined for `ℓ`-class-regular `μ`.
pub fn kor_r(mu: &Partition, ell: u64) -> Result<BigUint> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ell {ell} < 2")));
    }
    mu.require_class_regular(ell as usize)?;
    Ok(mu
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (k, m)| {
            let f = (m as u64) / ell;
            if f == 0 {
                return acc;
            }
            let ell_k = ell / arith::gcd(ell, k as u64);
            acc * Pow::pow(BigUint::from(ell_k), f) * factorial_pi_part(f, &prime_divisors(ell_k))
        }))
}

/// `ℓ^w · w!_{π(ℓ)}`, the largest graded invariant of a weight-`w` block.
pub fn largest_block_invariant(ell: u64, w: u64) -> BigUint {
    Pow::pow(BigUint::from(ell), w) * factorial_pi_part(w, &prime_divisors(ell))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{class_regular_partitions, p_adic_decomposition, partitions};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(theta_prime_power(&p(&[1, 1]), 2, 2).unwrap(), big(32));
        assert_eq!(theta_prime_power(&p(&[1]), 2, 2).unwrap(), big(4));
        assert_eq!(theta_prime_power(&p(&[2]), 2, 2).unwrap(), big(2));
        assert_eq!(
            theta_prime_power(&Partition::empty(), 5, 3).unwrap(),
            big(1)
        );
        assert!(theta_prime_power(&p(&[1]), 6, 1).is_err());
        // ϑ_{p^r}(1^d) = p^{rd} (d!)_p
        for (pr, r) in [(2u64, 1u32), (2, 3), (3, 2), (5, 1)] {
            for d in 0..=8usize {
                let fact: u64 = (1..=d as u64).product();
                let mut pp = 1u64;
                let mut f = fact;
                while f.is_multiple_of(pr) {
                    f /= pr;
                    pp *= pr;
                }
                let expected = Pow::pow(big(pr), r as u64 * d as u64) * pp;
                assert_eq!(theta_prime_power(&p(&vec![1; d]), pr, r).unwrap(), expected);
            }
        }
    }

    #[test]
    fn composite_examples() {
        assert_eq!(theta(&p(&[2, 1]), 6).unwrap(), big(18));
        assert_eq!(theta(&p(&[1, 1, 1, 1]), 6).unwrap(), big(31104));
        assert_eq!(theta(&p(&[4]), 6).unwrap(), big(3));
        assert_eq!(theta(&p(&[1, 1]), 4).unwrap(), big(32));
        let mut degree4: Vec<BigUint> =
            partitions(4).iter().map(|l| theta(l, 6).unwrap()).collect();
        degree4.sort();
        assert_eq!(degree4, [3u64, 9, 12, 216, 31104].map(big).to_vec());
        let mut degree3: Vec<BigUint> =
            partitions(3).iter().map(|l| theta(l, 6).unwrap()).collect();
        degree3.sort();
        assert_eq!(degree3, [2u64, 18, 1296].map(big).to_vec());
        assert!(theta(&p(&[1]), 1).is_err());
    }

    #[test]
    fn both_forms_agree() {
        for pr in [2u64, 3, 5] {
            for r in 1..=4 {
                for d in 0..=10 {
                    for lambda in partitions(d) {
                        assert_eq!(
                            Pow::pow(big(pr), theta_prime_power_exponent(&lambda, pr, r)),
                            theta_prime_power_factored(&lambda, pr, r),
                            "λ={lambda} p={pr} r={r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn one_column_is_the_unique_maximum() {
        for (pr, r) in [(2u64, 1u32), (2, 2), (3, 1), (3, 3), (5, 2)] {
            for d in 1..=10usize {
                let top = theta_prime_power(&p(&vec![1; d]), pr, r).unwrap();
                for lambda in partitions(d) {
                    if lambda.len() != d {
                        assert!(theta_prime_power(&lambda, pr, r).unwrap() < top);
                    }
                }
            }
        }
    }

    #[test]
    fn kor_examples() {
        assert_eq!(kor_r(&p(&[1; 8]), 4).unwrap(), big(32));
        assert_eq!(kor_r(&p(&[2, 2, 1, 1, 1, 1]), 4).unwrap(), big(4));
        assert_eq!(kor_r(&p(&[3, 2, 1]), 4).unwrap(), big(1));
        assert_eq!(kor_r(&p(&[2, 2, 2, 2]), 4).unwrap(), big(2));
        assert!(kor_r(&p(&[4]), 4).is_err());
    }

    #[test]
    fn theta_depends_on_class_regular_layer() {
        for ell in [4usize, 6] {
            for d in 0..=8 {
                for lambda in partitions(d) {
                    let layer0 = p_adic_decomposition(&lambda, ell).unwrap().swap_remove(0);
                    assert_eq!(
                        theta(&lambda, ell as u64).unwrap(),
                        theta(&layer0, ell as u64).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn kor_on_repeated_partition_is_theta() {
        for ell in [4usize, 6, 12] {
            for a in 0..=10 {
                for alpha in class_regular_partitions(a, ell) {
                    assert_eq!(
                        kor_r(&alpha.repeat_parts(ell), ell as u64).unwrap(),
                        theta(&alpha, ell as u64).unwrap(),
                        "α={alpha} ℓ={ell}"
                    );
                }
            }
        }
    }

    #[test]
    fn largest_invariant() {
        assert_eq!(largest_block_invariant(4, 2), big(32));
        assert_eq!(largest_block_invariant(6, 4), big(31104));
        for ell in [4u64, 6, 12] {
            for w in 0..=6usize {
                assert_eq!(
                    largest_block_invariant(ell, w as u64),
                    theta(&p(&vec![1; w]), ell).unwrap()
                );
            }
        }
    }
}
