//! The named generating functions and the identities relating them.
//!
//! | name   | series                          | counts                                  |
//! |--------|---------------------------------|-----------------------------------------|
//! | `P`    | `Π 1/(1-q^i)`                   | partitions `p(d)`                       |
//! | `P_ℓ`  | `P(q)/P(q^ℓ)`                   | `ℓ`-class-regular partitions            |
//! | `T`    | `Σ q^i/(1-q^i)`                 | divisors                                |
//! | `T_ℓ`  | `T(q) - T(q^ℓ)`                 | divisors not divisible by `ℓ`           |
//! | `L`    | `P·T`                           | total length `l(d)`                     |
//! | `L_ℓ`  | `P_ℓ·T_ℓ`                       | total length over `Par_ℓ(d)`            |
//! | `D0_ℓ` | `P(q)/P(q^ℓ)^ℓ`                 | `ℓ`-cores                               |
//! | `C_ℓ`  | `P_ℓ(q)·T(q^ℓ)`                 | exponent of `ℓ` in `det C_ℓ(n)`         |
//! | `B_ℓ`  | `P^{ℓ-1}·T`                     | exponent of `ℓ` in a weight-`w` block   |
//! | `P^k`  | `P^k`                           | `k`-multipartitions                     |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Ring;
use crate::series::Series;
use crate::IntSeries;

/// Truncation order used when none is given.
pub const DEFAULT_ORDER: usize = 64;

/// `P(q) = Π_{i≥1} 1/(1-q^i)`.
pub fn partition_series<T: Ring>(order: usize) -> Series<T> {
    let mut s = Series::one(order);
    for i in 1..=order {
        s.mul_geometric_in_place(i);
    }
    s
}

/// `P(q)/P(q^ℓ)`.
pub fn class_regular_series<T: Ring>(ell: usize, order: usize) -> Result<Series<T>> {
    let p = partition_series::<T>(order);
    Ok(&p * &p.substitute_power(ell)?.invert()?)
}

/// `T(q) = Σ_{i≥1} q^i/(1-q^i)`.
pub fn divisor_series<T: Ring>(order: usize) -> Series<T> {
    let mut t = Series::zero(order);
    for i in 1..=order {
        let term = &Series::monomial(T::one(), i, order) * &Series::geometric(i, order);
        t = &t + &term;
    }
    t
}

/// `T(q) - T(q^ℓ)`.
pub fn class_regular_divisor_series<T: Ring>(ell: usize, order: usize) -> Result<Series<T>> {
    let t = divisor_series::<T>(order);
    Ok(&t - &t.substitute_power(ell)?)
}

/// `L = P·T`.
pub fn length_series<T: Ring>(order: usize) -> Series<T> {
    &partition_series::<T>(order) * &divisor_series(order)
}

/// `L_ℓ = P_ℓ·T_ℓ`.
pub fn class_regular_length_series<T: Ring>(ell: usize, order: usize) -> Result<Series<T>> {
    Ok(&class_regular_series::<T>(ell, order)? * &class_regular_divisor_series(ell, order)?)
}

/// `D⁰_ℓ = P(q)/P(q^ℓ)^ℓ`.
pub fn core_series<T: Ring>(ell: usize, order: usize) -> Result<Series<T>> {
    let p = partition_series::<T>(order);
    let inv = p.substitute_power(ell)?.invert()?;
    Ok(&p * &inv.pow(ell))
}

/// `C_ℓ = P_ℓ(q)·T(q^ℓ)`.
pub fn cartan_series<T: Ring>(ell: usize, order: usize) -> Result<Series<T>> {
    let t = divisor_series::<T>(order).substitute_power(ell)?;
    Ok(&class_regular_series::<T>(ell, order)? * &t)
}

/// `B_ℓ = P^{ℓ-1}·T`.
pub fn block_series<T: Ring>(ell: usize, order: usize) -> Result<Series<T>> {
    if ell < 1 {
        return Err(Error::InvalidParameter("B_ℓ needs ℓ ≥ 1".into()));
    }
    Ok(&partition_series::<T>(order).pow(ell - 1) * &divisor_series(order))
}

/// `P_ℓ(q)/P(q^ℓ)`; its coefficient at `q^{n-ℓd}` is the multiplicity
/// `m_ℓ^n(d)`.
pub fn multiplicity_series<T: Ring>(ell: usize, order: usize) -> Result<Series<T>> {
    let pl = class_regular_series::<T>(ell, order)?;
    let inv = partition_series::<T>(order)
        .substitute_power(ell)?
        .invert()?;
    Ok(&pl * &inv)
}

/// Names accepted by [`named_series`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesName {
    P,
    ClassRegular(usize),
    T,
    ClassRegularDivisors(usize),
    L,
    ClassRegularLength(usize),
    Cores(usize),
    Cartan(usize),
    Block(usize),
    Multipartitions(usize),
}

impl SeriesName {
    fn ell(self) -> Option<usize> {
        match self {
            SeriesName::ClassRegular(l)
            | SeriesName::ClassRegularDivisors(l)
            | SeriesName::ClassRegularLength(l)
            | SeriesName::Cores(l)
            | SeriesName::Cartan(l)
            | SeriesName::Block(l) => Some(l),
            _ => None,
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesName::P => f.write_str("P"),
            SeriesName::ClassRegular(l) => write!(f, "P_{l}"),
            SeriesName::T => f.write_str("T"),
            SeriesName::ClassRegularDivisors(l) => write!(f, "T_{l}"),
            SeriesName::L => f.write_str("L"),
            SeriesName::ClassRegularLength(l) => write!(f, "L_{l}"),
            SeriesName::Cores(l) => write!(f, "D0_{l}"),
            SeriesName::Cartan(l) => write!(f, "C_{l}"),
            SeriesName::Block(l) => write!(f, "B_{l}"),
            SeriesName::Multipartitions(k) => write!(f, "P^{k}"),
        }
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    /// `P`, `T`, `L`, `P_6`, `T_6`, `L_6`, `D0_6`, `C_6`, `B_6`, `P^4`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownName(s.to_string());
        let num = |x: &str| x.parse::<usize>().map_err(|_| unknown());
        match s {
            "P" => return Ok(SeriesName::P),
            "T" => return Ok(SeriesName::T),
            "L" => return Ok(SeriesName::L),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("P^") {
            return Ok(SeriesName::Multipartitions(num(k)?));
        }
        let (head, tail) = s.split_once('_').ok_or_else(unknown)?;
        let l = num(tail)?;
        match head {
            "P" => Ok(SeriesName::ClassRegular(l)),
            "T" => Ok(SeriesName::ClassRegularDivisors(l)),
            "L" => Ok(SeriesName::ClassRegularLength(l)),
            "D0" => Ok(SeriesName::Cores(l)),
            "C" => Ok(SeriesName::Cartan(l)),
            "B" => Ok(SeriesName::Block(l)),
            _ => Err(unknown()),
        }
    }
}

pub fn named_series<T: Ring>(name: SeriesName, order: usize) -> Result<Series<T>> {
    if let Some(l) = name.ell() {
        if l < 2 {
            return Err(Error::InvalidParameter(format!("{name} needs ℓ ≥ 2")));
        }
    }
    match name {
        SeriesName::P => Ok(partition_series(order)),
        SeriesName::ClassRegular(l) => class_regular_series(l, order),
        SeriesName::T => Ok(divisor_series(order)),
        SeriesName::ClassRegularDivisors(l) => class_regular_divisor_series(l, order),
        SeriesName::L => Ok(length_series(order)),
        SeriesName::ClassRegularLength(l) => class_regular_length_series(l, order),
        SeriesName::Cores(l) => core_series(l, order),
        SeriesName::Cartan(l) => cartan_series(l, order),
        SeriesName::Block(l) => block_series(l, order),
        SeriesName::Multipartitions(k) => Ok(partition_series(order).pow(k)),
    }
}

pub(crate) fn to_u64(x: &BigInt) -> Result<u64> {
    x.to_u64()
        .ok_or_else(|| Error::InvalidParameter(format!("count {x} does not fit in 64 bits")))
}

/// `k(k, d)`, the number of `k`-multipartitions of `d`. `k = 0` gives
/// `[d = 0]`.
pub fn count_multipartitions(k: usize, d: usize) -> BigInt {
    partition_series::<BigInt>(d).pow(k).coeffs()[d].clone()
}

/// `d_ℓ^0(n)`, the number of `ℓ`-cores of size `n`.
pub fn core_count(ell: usize, n: usize) -> Result<BigInt> {
    Ok(core_series::<BigInt>(ell, n)?.coeffs()[n].clone())
}

/// `m_ℓ^n(d)`: how many times each `λ ⊢ d` contributes `ϑ_ℓ(λ)` to the
/// invariants of `C_ℓ(n)`.
pub fn multiplicity_m(ell: usize, n: usize, d: usize) -> Result<BigInt> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ell {ell} < 2")));
    }
    if d > n / ell {
        return Err(Error::InvalidParameter(format!(
            "degree {d} exceeds ⌊{n}/{ell}⌋"
        )));
    }
    let k = n - ell * d;
    Ok(multiplicity_series::<BigInt>(ell, k)?.coeffs()[k].clone())
}

// Direct routes used by the identity checks. Each one counts the same
// numbers as a named series without going through the product formula.

/// Number of divisors of each `d ≤ order`, by trial division.
pub fn divisor_counts_direct(order: usize) -> IntSeries {
    divisor_counts_filtered(order, |_| true)
}

/// Number of divisors of `d` not divisible by `ell`.
pub fn class_regular_divisor_counts_direct(ell: usize, order: usize) -> IntSeries {
    divisor_counts_filtered(order, |k| k % ell != 0)
}

fn divisor_counts_filtered(order: usize, keep: impl Fn(usize) -> bool) -> IntSeries {
    Series::from_coeffs(
        (0..=order)
            .map(|d| BigInt::from((1..=d).filter(|&k| d % k == 0 && keep(k)).count()))
            .collect(),
    )
}

/// `Π_{ℓ∤i} 1/(1-q^i)`.
pub fn class_regular_product(ell: usize, order: usize) -> IntSeries {
    let mut s = Series::one(order);
    for i in (1..=order).filter(|i| i % ell != 0) {
        s.mul_geometric_in_place(i);
    }
    s
}

/// Total length by counting parts: the partitions of `d` with at least `j`
/// parts equal to `k` are in bijection with `Par(d - jk)`, so
/// `l(d) = Σ_{k allowed} Σ_{j≥1} p(d - jk)` where `p` counts the partitions
/// in `counts`.
fn total_length_from_counts(counts: &IntSeries, allowed: impl Fn(usize) -> bool) -> IntSeries {
    let order = counts.order();
    let c = counts.coeffs();
    Series::from_coeffs(
        (0..=order)
            .map(|d| {
                let mut total = BigInt::zero();
                for k in (1..=d).filter(|&k| allowed(k)) {
                    let mut j = k;
                    while j <= d {
                        total += &c[d - j];
                        j += k;
                    }
                }
                total
            })
            .collect(),
    )
}

/// `l(d) = Σ_{λ⊢d} l(λ)` by counting parts.
pub fn total_length_direct(order: usize) -> IntSeries {
    total_length_from_counts(&partition_series(order), |_| true)
}

/// `l_ℓ(d)` by counting parts of `ℓ`-class-regular partitions.
pub fn class_regular_total_length_direct(ell: usize, order: usize) -> IntSeries {
    total_length_from_counts(&class_regular_product(ell, order), |k| k % ell != 0)
}

/// `c_ℓ(n) = Σ_d m_ℓ^n(d)·l(d)`: the exponent of `ℓ` in the product of all
/// graded invariant factors of `C_ℓ(n)`.
pub fn cartan_exponent_by_degree(ell: usize, order: usize) -> Result<IntSeries> {
    let m = multiplicity_series::<BigInt>(ell, order)?;
    let l = total_length_direct(order);
    Ok(Series::from_coeffs(
        (0..=order)
            .map(|n| {
                (0..=n / ell)
                    .map(|d| &m.coeffs()[n - ell * d] * &l.coeffs()[d])
                    .sum()
            })
            .collect(),
    ))
}

/// Generating-function identities checked coefficientwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `L = P·T`
    LengthProduct,
    /// `L_ℓ = P_ℓ·T_ℓ`
    ClassRegularLengthProduct { ell: usize },
    /// `L = P_ℓ·L(q^ℓ) + P(q^ℓ)·L_ℓ`
    LengthDecomposition { ell: usize },
    /// `T = T(q^ℓ) + T_ℓ`
    DivisorSplit { ell: usize },
    /// `C_ℓ = P_ℓ·T(q^ℓ)`
    CartanDeterminant { ell: usize },
    /// `C_{ab} = P_a·C_b(q^a)`
    CartanReduction { a: usize, b: usize },
    /// `C_ℓ = B_ℓ(q^ℓ)·D⁰_ℓ`, blocks being graded by weight
    FullAndBlock { ell: usize },
    /// `B_ℓ = P^{ℓ-1}·T = P^{ℓ-2}·L`
    BlockDeterminant { ell: usize },
}

impl Identity {
    pub fn name(&self) -> &'static str {
        match self {
            Identity::LengthProduct => "LPT",
            Identity::ClassRegularLengthProduct { .. } => "l-LPT",
            Identity::LengthDecomposition { .. } => "L-dec",
            Identity::DivisorSplit { .. } => "T-split",
            Identity::CartanDeterminant { .. } => "Cartan-det",
            Identity::CartanReduction { .. } => "Cartan-reduction",
            Identity::FullAndBlock { .. } => "full-and-block",
            Identity::BlockDeterminant { .. } => "block-det",
        }
    }

    /// Every identity at every `ℓ, a, b` in `lo..=hi`.
    pub fn all_in_range(lo: usize, hi: usize) -> Vec<Identity> {
        let mut out = vec![Identity::LengthProduct];
        for ell in lo..=hi {
            out.push(Identity::ClassRegularLengthProduct { ell });
            out.push(Identity::LengthDecomposition { ell });
            out.push(Identity::DivisorSplit { ell });
            out.push(Identity::CartanDeterminant { ell });
            out.push(Identity::FullAndBlock { ell });
            out.push(Identity::BlockDeterminant { ell });
        }
        for a in lo..=hi {
            for b in lo..=hi {
                out.push(Identity::CartanReduction { a, b });
            }
        }
        out
    }

    /// Both sides to order `order`.
    pub fn sides(&self, order: usize) -> Result<(IntSeries, IntSeries)> {
        let n = order;
        let check_ell = |l: usize| {
            if l < 2 {
                Err(Error::InvalidParameter(format!("ℓ = {l} < 2")))
            } else {
                Ok(())
            }
        };
        Ok(match *self {
            Identity::LengthProduct => (total_length_direct(n), length_series(n)),
            Identity::ClassRegularLengthProduct { ell } => {
                check_ell(ell)?;
                (
                    class_regular_total_length_direct(ell, n),
                    class_regular_length_series(ell, n)?,
                )
            }
            Identity::LengthDecomposition { ell } => {
                check_ell(ell)?;
                let l = total_length_direct(n);
                let p = partition_series::<BigInt>(n);
                let rhs = &(&class_regular_product(ell, n) * &l.substitute_power(ell)?)
                    + &(&p.substitute_power(ell)? * &class_regular_total_length_direct(ell, n));
                (l, rhs)
            }
            Identity::DivisorSplit { ell } => {
                check_ell(ell)?;
                let t = divisor_counts_direct(n);
                let rhs = &t.substitute_power(ell)? + &class_regular_divisor_counts_direct(ell, n);
                (t, rhs)
            }
            Identity::CartanDeterminant { ell } => {
                check_ell(ell)?;
                (cartan_exponent_by_degree(ell, n)?, cartan_series(ell, n)?)
            }
            Identity::CartanReduction { a, b } => {
                check_ell(a)?;
                check_ell(b)?;
                let rhs = &class_regular_series::<BigInt>(a, n)?
                    * &cartan_series::<BigInt>(b, n)?.substitute_power(a)?;
                (cartan_series(a * b, n)?, rhs)
            }
            Identity::FullAndBlock { ell } => {
                check_ell(ell)?;
                (
                    cartan_series(ell, n)?,
                    &block_series::<BigInt>(ell, n)?.substitute_power(ell)? * &core_series(ell, n)?,
                )
            }
            Identity::BlockDeterminant { ell } => {
                check_ell(ell)?;
                let rhs = &partition_series::<BigInt>(n).pow(ell - 2) * &total_length_direct(n);
                (block_series(ell, n)?, rhs)
            }
        })
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Identity::LengthProduct => f.write_str("LPT"),
            Identity::CartanReduction { a, b } => write!(f, "Cartan-reduction(a={a},b={b})"),
            Identity::ClassRegularLengthProduct { ell }
            | Identity::LengthDecomposition { ell }
            | Identity::DivisorSplit { ell }
            | Identity::CartanDeterminant { ell }
            | Identity::FullAndBlock { ell }
            | Identity::BlockDeterminant { ell } => write!(f, "{}(ell={ell})", self.name()),
        }
    }
}

/// Outcome of comparing both sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub order: usize,
    /// Lowest degree where the two sides differ.
    pub first_mismatch: Option<usize>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares both sides of `identity` up to `q^order`.
pub fn check_identity(identity: Identity, order: usize) -> Result<IdentityCheck> {
    let (lhs, rhs) = identity.sides(order)?;
    let first_mismatch = lhs
        .coeffs()
        .iter()
        .zip(rhs.coeffs())
        .position(|(a, b)| a != b);
    Ok(IdentityCheck {
        identity,
        order,
        first_mismatch,
    })
}
