//! Checks that compare closed forms against direct matrix and series
//! computations.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Signed};

use super::{full_invariants, graded_invariants, kor_invariants, matrices::*};
use crate::arith::{factorize, gcd};
use crate::error::Result;
use crate::genfunc::{check_identity, length_series, multiplicity_m, Identity};
use crate::linalg::smith_normal_form;
use crate::partition::{
    class_regular_partitions, ell_split, p_adic_decomposition, partitions, Partition,
};
use crate::IntMatrix;

use super::multiset::graded_to_snf;

/// Outcome of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Holds, and the statement is proven in this range.
    Verified,
    /// Fails although the statement is proven in this range.
    Refuted,
    /// Holds outside the proven range.
    UnprovenMatch,
    /// Fails outside the proven range.
    UnprovenMismatch,
}

impl Status {
    fn from_outcome(holds: bool, proven: bool) -> Self {
        match (holds, proven) {
            (true, true) => Status::Verified,
            (false, true) => Status::Refuted,
            (true, false) => Status::UnprovenMatch,
            (false, false) => Status::UnprovenMismatch,
        }
    }

    pub fn is_success(self) -> bool {
        matches!(self, Status::Verified | Status::UnprovenMatch)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::UnprovenMatch => "unproven-match",
            Status::UnprovenMismatch => "unproven-mismatch",
        })
    }
}

/// What a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    ConjectureSnf,
    Splitting,
    Reduction,
    KorMultiset,
    Determinants,
    Series,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::ConjectureSnf => "snf",
            Claim::Splitting => "splitting",
            Claim::Reduction => "reduction",
            Claim::KorMultiset => "kor",
            Claim::Determinants => "det",
            Claim::Series => "series",
        })
    }
}

/// One side-by-side comparison inside a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub label: String,
    pub left: String,
    pub right: String,
    pub holds: bool,
}

impl Comparison {
    fn new(
        label: impl Into<String>,
        left: impl fmt::Display,
        right: impl fmt::Display,
        holds: bool,
    ) -> Self {
        Self {
            label: label.into(),
            left: left.to_string(),
            right: right.to_string(),
            holds,
        }
    }

    fn equal<T: PartialEq + fmt::Display>(label: impl Into<String>, left: T, right: T) -> Self {
        let holds = left == right;
        Self::new(label, left, right, holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: Claim,
    pub params: Vec<(&'static str, u64)>,
    pub status: Status,
    pub comparisons: Vec<Comparison>,
}

impl VerificationReport {
    fn new(
        claim: Claim,
        params: Vec<(&'static str, u64)>,
        comparisons: Vec<Comparison>,
        proven: bool,
    ) -> Self {
        let holds = comparisons.iter().all(|c| c.holds);
        Self {
            claim,
            params,
            status: Status::from_outcome(holds, proven),
            comparisons,
        }
    }

    pub fn holds(&self) -> bool {
        self.comparisons.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Comparison> {
        self.comparisons.iter().filter(|c| !c.holds)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(f, "{} ({}): {}", self.claim, params.join(", "), self.status)
    }
}

struct Chain<'a>(&'a [BigUint]);

impl fmt::Display for Chain<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn snf_factors(m: &IntMatrix) -> Vec<BigUint> {
    smith_normal_form(m, false)
        .into_factors()
        .into_iter()
        .map(|x| x.into_parts().1)
        .collect()
}

/// `ℓ = p^r` with `r ≤ p`.
fn in_theorem_range(ell: u64) -> bool {
    match factorize(ell).as_slice() {
        [(p, r)] => u64::from(*r) <= *p,
        _ => false,
    }
}

/// Smith form of `X_{ℓ,d}` against the chain built from `{ϑ_ℓ(λ) : λ ⊢ d}`.
pub fn verify_conjecture_snf(
    ell: u64,
    d: usize,
    limits: &SizeLimits,
) -> Result<VerificationReport> {
    let x = matrix_x_ell(ell, d, limits)?;
    let computed = snf_factors(&x);
    let thetas: Vec<BigUint> = graded_invariants(ell, d)?
        .into_iter()
        .map(|g| g.value)
        .collect();
    let predicted = graded_to_snf(&thetas);
    let holds = computed == predicted;
    Ok(VerificationReport::new(
        Claim::ConjectureSnf,
        vec![("ell", ell), ("d", d as u64)],
        vec![Comparison::new(
            "SNF(X) vs graded invariants",
            Chain(&computed),
            Chain(&predicted),
            holds,
        )],
        in_theorem_range(ell),
    ))
}

/// `X_{ab,d} = X_{a,d} X_{b,d}`, and for coprime `a, b` the Smith forms
/// multiply entrywise.
pub fn verify_splitting(
    a: u64,
    b: u64,
    d: usize,
    limits: &SizeLimits,
) -> Result<VerificationReport> {
    let xa = matrix_x_ell(a, d, limits)?;
    let xb = matrix_x_ell(b, d, limits)?;
    let xab = matrix_x_ell(a * b, d, limits)?;
    let product = xa.mul(&xb)?;
    let mut comparisons = vec![Comparison::equal("X_ab = X_a X_b", xab.clone(), product)];
    if gcd(a, b) == 1 {
        let sa = snf_factors(&xa);
        let sb = snf_factors(&xb);
        let entrywise: Vec<BigUint> = sa.iter().zip(&sb).map(|(x, y)| x * y).collect();
        let sab = snf_factors(&xab);
        let holds = sab == entrywise;
        comparisons.push(Comparison::new(
            "SNF(X_ab) = SNF(X_a)·SNF(X_b)",
            Chain(&sab),
            Chain(&entrywise),
            holds,
        ));
    }
    Ok(VerificationReport::new(
        Claim::Splitting,
        vec![("a", a), ("b", b), ("d", d as u64)],
        comparisons,
        true,
    ))
}

/// `X_{A,d}` against `⊕_s I_{k(ℓ-2,d-s)} ⊗ X_{ℓ,s}` through Smith forms, with
/// the unimodular `X_U, X_V` built from a Smith reduction `U A V` of `A`.
pub fn verify_reduction(ell: u64, d: usize, limits: &SizeLimits) -> Result<VerificationReport> {
    let a = lie_cartan(ell)?;
    let xa = matrix_x_a(ell, d, limits)?;
    let target = reduction_target(ell, d, limits)?;
    let left = snf_factors(&xa);
    let right = snf_factors(&target);
    let same = left == right;
    let mut comparisons = vec![Comparison::new(
        "SNF(X_A) = SNF(target)",
        Chain(&left),
        Chain(&right),
        same,
    )];

    let snf_a = smith_normal_form(&a, true);
    let (u, v) = (
        snf_a.left().expect("transforms requested").clone(),
        snf_a.right().expect("transforms requested").clone(),
    );
    let xu = matrix_x_for(&u, d, limits)?;
    let xv = matrix_x_for(&v, d, limits)?;
    for (name, x) in [("X_U", &xu), ("X_V", &xv)] {
        let det = x.det_integer()?;
        comparisons.push(Comparison::equal(
            format!("|det {name}| = 1"),
            det.abs(),
            BigInt::one(),
        ));
    }
    let diagonal = snf_a.diagonal_form(a.rows(), a.cols());
    let reduced = xu.mul(&xa)?.mul(&xv)?;
    comparisons.push(Comparison::equal(
        "X_U X_A X_V = X_D",
        reduced,
        matrix_x_for(&diagonal, d, limits)?,
    ));
    Ok(VerificationReport::new(
        Claim::Reduction,
        vec![("ell", ell), ("d", d as u64)],
        comparisons,
        true,
    ))
}

/// One line of the counting lemma for a fixed class-regular `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaRow {
    pub alpha: Partition,
    /// `|{μ ∈ Par_ℓ(n) : μ̌ = α}|`
    pub direct: BigInt,
    /// `Σ_d m_ℓ^n(d) · |{λ ⊢ d : λ^(0) = α}|`
    pub weighted: BigInt,
}

/// Both sides of the counting lemma for every `α ∈ Par_ℓ(a)`, `a ≤ ⌊n/ℓ⌋`.
/// The sum over `d` starts at `d = 0`.
pub fn counting_lemma(ell: u64, n: usize) -> Result<Vec<LemmaRow>> {
    let l = ell as usize;
    let mut direct: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for mu in class_regular_partitions(n, l) {
        let (_, check) = ell_split(&mu, l)?;
        *direct.entry(check).or_default() += 1;
    }
    let top = n / l.max(1);
    let mut weighted: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for d in 0..=top {
        let m = multiplicity_m(l, n, d)?;
        for lambda in partitions(d) {
            let layer0 = p_adic_decomposition(&lambda, l)?.swap_remove(0);
            *weighted.entry(layer0).or_default() += &m;
        }
    }
    let mut rows = Vec::new();
    for a in 0..=top {
        for alpha in class_regular_partitions(a, l) {
            rows.push(LemmaRow {
                direct: direct.get(&alpha).cloned().unwrap_or_default(),
                weighted: weighted.get(&alpha).cloned().unwrap_or_default(),
                alpha,
            });
        }
    }
    Ok(rows)
}

/// `{r_ℓ(μ)} = ` full graded invariants as multisets, plus the counting lemma.
pub fn verify_kor_multiset(ell: u64, n: usize) -> Result<VerificationReport> {
    let kor = kor_invariants(ell, n)?;
    let full = full_invariants(ell, n)?;
    let holds = kor.same_values(&full);
    let mut comparisons = vec![Comparison::new(
        "{r_ℓ(μ)} = full invariants",
        &kor,
        &full,
        holds,
    )];
    let rows = counting_lemma(ell, n)?;
    let bad: Vec<&LemmaRow> = rows.iter().filter(|r| r.direct != r.weighted).collect();
    comparisons.push(match bad.first() {
        None => Comparison::new(
            "counting lemma",
            format!("{} partitions α", rows.len()),
            "all equal",
            true,
        ),
        Some(r) => Comparison::new(
            format!("counting lemma at α={}", r.alpha),
            &r.direct,
            &r.weighted,
            false,
        ),
    });
    Ok(VerificationReport::new(
        Claim::KorMultiset,
        vec![("ell", ell), ("n", n as u64)],
        comparisons,
        true,
    ))
}

fn total_lengths(d_max: usize) -> Vec<BigInt> {
    length_series::<BigInt>(d_max + 1).coeffs().to_vec()
}

fn theta_product_comparisons(
    ell: u64,
    d_max: usize,
    lengths: &[BigInt],
) -> Result<Vec<Comparison>> {
    let base = BigInt::from(ell);
    (0..=d_max)
        .map(|d| {
            let product: BigUint = graded_invariants(ell, d)?
                .into_iter()
                .map(|g| g.value)
                .product();
            let exponent = u32::try_from(&lengths[d]).expect("length fits");
            Ok(Comparison::equal(
                format!("Π ϑ over Par({d}) = ℓ^l({d})"),
                BigInt::from(product),
                Pow::pow(&base, exponent),
            ))
        })
        .collect()
}

/// For each `d ≤ d_max`: `det X_{ℓ,d} = ℓ^{l(d)}` and `Π_{λ⊢d} ϑ_ℓ(λ) = ℓ^{l(d)}`.
pub fn verify_determinants(
    ell: u64,
    d_max: usize,
    limits: &SizeLimits,
) -> Result<VerificationReport> {
    let lengths = total_lengths(d_max);
    let base = BigInt::from(ell);
    let mut comparisons = Vec::new();
    for (d, length) in lengths.iter().enumerate().take(d_max + 1) {
        let det = matrix_x_ell(ell, d, limits)?.det_integer()?;
        let exponent = u32::try_from(length).expect("length fits");
        comparisons.push(Comparison::equal(
            format!("det X_{{ℓ,{d}}} = ℓ^l({d})"),
            det,
            Pow::pow(&base, exponent),
        ));
    }
    comparisons.extend(theta_product_comparisons(ell, d_max, &lengths)?);
    Ok(VerificationReport::new(
        Claim::Determinants,
        vec![("ell", ell), ("d_max", d_max as u64)],
        comparisons,
        true,
    ))
}

/// Only the closed-form side of [`verify_determinants`]; no matrices.
pub fn verify_theta_products(ell: u64, d_max: usize) -> Result<VerificationReport> {
    let lengths = total_lengths(d_max);
    Ok(VerificationReport::new(
        Claim::Determinants,
        vec![("ell", ell), ("d_max", d_max as u64)],
        theta_product_comparisons(ell, d_max, &lengths)?,
        true,
    ))
}

/// Every generating-function identity with parameters in `lo..=hi`.
pub fn verify_series(lo: usize, hi: usize, order: usize) -> Result<VerificationReport> {
    let comparisons = Identity::all_in_range(lo, hi)
        .into_iter()
        .map(|identity| {
            let check = check_identity(identity, order)?;
            let right = match check.first_mismatch {
                None => format!("equal to O(q^{order})"),
                Some(k) => format!("differs at q^{k}"),
            };
            Ok(Comparison::new(
                identity.to_string(),
                "both sides",
                right,
                check.holds(),
            ))
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new(
        Claim::Series,
        vec![
            ("lo", lo as u64),
            ("hi", hi as u64),
            ("order", order as u64),
        ],
        comparisons,
        true,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> SizeLimits {
        SizeLimits::default()
    }

    #[test]
    fn conjecture_examples() {
        let r = verify_conjecture_snf(4, 2, &limits()).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.comparisons[0].left, "(2, 32)");
        for d in 0..=6 {
            assert_eq!(
                verify_conjecture_snf(9, d, &limits()).unwrap().status,
                Status::Verified
            );
        }
        for d in 0..=5 {
            assert_eq!(
                verify_conjecture_snf(8, d, &limits()).unwrap().status,
                Status::UnprovenMatch
            );
        }
        assert!(in_theorem_range(2) && in_theorem_range(4) && in_theorem_range(27));
        assert!(!in_theorem_range(8) && !in_theorem_range(6) && !in_theorem_range(16));
    }

    #[test]
    fn splitting_examples() {
        let r = verify_splitting(2, 3, 2, &limits()).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.comparisons[0].left, "[[6,0],[15,36]]");
        assert_eq!(r.comparisons.len(), 2);
        let r = verify_splitting(2, 2, 4, &limits()).unwrap();
        assert_eq!(r.comparisons.len(), 1);
        assert_eq!(r.status, Status::Verified);
    }

    #[test]
    fn reduction_examples() {
        let r = verify_reduction(4, 2, &limits()).unwrap();
        assert_eq!(r.status, Status::Verified, "{:?}", r.comparisons);
        assert_eq!(r.comparisons[0].left, "(1, 1, 1, 1, 1, 2, 4, 4, 32)");
        for d in 0..=3 {
            assert!(verify_reduction(3, d, &limits()).unwrap().holds());
        }
        for d in 0..=4 {
            assert!(verify_reduction(2, d, &limits()).unwrap().holds());
        }
    }

    #[test]
    fn kor_examples() {
        for (ell, n) in [(4, 8), (6, 18), (5, 3), (2, 9)] {
            let r = verify_kor_multiset(ell, n).unwrap();
            assert_eq!(r.status, Status::Verified, "{:?}", r.comparisons);
        }
    }

    #[test]
    fn determinant_examples() {
        let r = verify_determinants(4, 5, &limits()).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.comparisons[2].left, "64");
        let r = verify_theta_products(6, 3).unwrap();
        assert_eq!(r.comparisons[3].left, "46656");
        assert!(r.holds());
    }

    #[test]
    fn series_report() {
        let r = verify_series(2, 4, 30).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.to_string(), "series (lo=2, hi=4, order=30): verified");
    }
}
