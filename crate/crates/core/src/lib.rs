//! Exact integer computations around the Cartan matrices of Iwahori-Hecke
//! algebras at a root of unity and of the symmetric groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`partition`] and [`multipartition`]: enumeration and statistics of
//!   partitions (`z_λ`, defects, `p`-adic decompositions, Glaisher, cores).
//! * [`series`] and [`genfunc`]: truncated power series and the named
//!   generating functions (`P`, `P_ℓ`, `T`, `L`, core counts, Cartan
//!   determinant exponents) together with identity checks between them.
//! * [`linalg`]: dense exact matrices, Kronecker products, symmetric powers,
//!   determinants, inverses and the Smith normal form.
//! * [`symfun`]: power-sum to monomial transition matrices.
//! * [`invariants`]: the matrices `X_{ℓ,d}` and `X_{A,d}`, the graded
//!   invariant factors `ϑ_ℓ(λ)`, the numbers `r_ℓ(μ)` and the verification
//!   procedures that compare all of them.
//!
//! Series and matrices are generic over the scalar ring through
//! [`num_traits`]; the aliases below fix the arbitrary-precision choices used
//! throughout the computations.

pub mod arith;
pub mod error;
pub mod genfunc;
pub mod invariants;
pub mod linalg;
pub mod multipartition;
pub mod partition;
pub mod scalar;
pub mod series;
pub mod symfun;

pub use error::{Error, Result};
pub use multipartition::{IndexedPartition, Multipartition};
pub use partition::Partition;
pub use scalar::{Field, Ring};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Power series with arbitrary-precision integer coefficients.
pub type IntSeries = series::Series<BigInt>;
/// Dense matrix over arbitrary-precision integers.
pub type IntMatrix = linalg::Matrix<BigInt>;
/// Dense matrix over arbitrary-precision rationals.
pub type RatMatrix = linalg::Matrix<BigRational>;
/// Smith normal form over arbitrary-precision integers.
pub type IntSnf = linalg::SnfResult<BigInt>;
