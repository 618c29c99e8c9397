//! Elementary number theory on machine integers: primality, factorisation,
//! `p`-adic valuations and Legendre's formula.

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Prime factorisation `n = Π p^e` with primes ascending. `factorize(1)` is
/// empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Primes dividing `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Exponent of `p` in `n` for `n ≥ 1`.
pub fn p_valuation(n: u64, p: u64) -> Result<u32> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::InvalidParameter("valuation of zero".into()));
    }
    Ok(valuation_unchecked(n, p))
}

pub(crate) fn valuation_unchecked(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// `Σ_{j≥1} ⌊a/p^j⌋`, the exponent of `p` in `a!`.
pub fn legendre_defect(a: u64, p: u64) -> Result<u64> {
    require_prime(p)?;
    Ok(legendre_unchecked(a, p))
}

pub(crate) fn legendre_unchecked(a: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut q = a / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    total
}

/// The `π`-part of `a!` for a set of primes `π`: `Π_{p∈π} (a!)_p`.
pub fn factorial_pi_part(a: u64, primes: &[u64]) -> BigUint {
    primes.iter().fold(BigUint::one(), |acc, &p| {
        acc * Pow::pow(BigUint::from(p), legendre_unchecked(a, p))
    })
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}
