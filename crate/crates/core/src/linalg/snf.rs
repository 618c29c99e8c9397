//! Smith normal form over a Euclidean ring.
//!
//! Diagonalisation repeatedly moves the nonzero entry of least absolute
//! value in the active submatrix to the pivot and clears its row and column
//! by division with remainder. The divisibility chain is then enforced by
//! pairwise gcd/lcm merges of diagonal entries.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::EuclideanRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult<T> {
    factors: Vec<T>,
    left: Option<Matrix<T>>,
    right: Option<Matrix<T>>,
}

impl<T: EuclideanRing> SnfResult<T> {
    /// `d_1 | d_2 | …`, non-negative, zeros last; `min(rows, cols)` entries.
    pub fn invariant_factors(&self) -> &[T] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<T> {
        self.factors
    }

    /// Unimodular `L` with `L·M·R = diag(factors)`.
    pub fn left(&self) -> Option<&Matrix<T>> {
        self.left.as_ref()
    }

    /// Unimodular `R` with `L·M·R = diag(factors)`.
    pub fn right(&self) -> Option<&Matrix<T>> {
        self.right.as_ref()
    }

    /// The rectangular diagonal matrix with the invariant factors.
    pub fn diagonal_form(&self, rows: usize, cols: usize) -> Matrix<T> {
        let mut d = Matrix::zeros(rows, cols);
        for (i, f) in self.factors.iter().enumerate() {
            d[(i, i)] = f.clone();
        }
        d
    }
}

struct Reducer<T: EuclideanRing> {
    a: Matrix<T>,
    left: Option<Matrix<T>>,
    right: Option<Matrix<T>>,
}

impl<T: EuclideanRing> Reducer<T> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(l) = &mut self.left {
            l.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(r) = &mut self.right {
            r.swap_cols(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, f: &T) {
        self.a.add_row_multiple(dst, src, f);
        if let Some(l) = &mut self.left {
            l.add_row_multiple(dst, src, f);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, f: &T) {
        self.a.add_col_multiple(dst, src, f);
        if let Some(r) = &mut self.right {
            r.add_col_multiple(dst, src, f);
        }
    }

    /// Position of the least nonzero `|entry|` in rows/cols `t..`.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, T)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = self.a[(i, j)].abs();
                if v.is_zero() {
                    continue;
                }
                if best.as_ref().is_none_or(|b| v < b.2) {
                    let one = v.is_one();
                    best = Some((i, j, v));
                    if one {
                        return best.map(|b| (b.0, b.1));
                    }
                }
            }
        }
        best.map(|b| (b.0, b.1))
    }

    fn diagonalise(&mut self) {
        let k = self.a.rows().min(self.a.cols());
        for t in 0..k {
            loop {
                let Some((i, j)) = self.min_entry(t) else {
                    return;
                };
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                let pivot = self.a[(t, t)].clone();
                let mut clean = true;
                for i in t + 1..self.a.rows() {
                    if !self.a[(i, t)].is_zero() {
                        let q = self.a[(i, t)].clone() / pivot.clone();
                        self.add_row(i, t, &-q);
                        clean &= self.a[(i, t)].is_zero();
                    }
                }
                for j in t + 1..self.a.cols() {
                    if !self.a[(t, j)].is_zero() {
                        let q = self.a[(t, j)].clone() / pivot.clone();
                        self.add_col(j, t, &-q);
                        clean &= self.a[(t, j)].is_zero();
                    }
                }
                if clean {
                    break;
                }
            }
        }
    }

    fn normalise_signs(&mut self) {
        let k = self.a.rows().min(self.a.cols());
        for t in 0..k {
            if self.a[(t, t)].is_negative() {
                self.a.negate_row(t);
                if let Some(l) = &mut self.left {
                    l.negate_row(t);
                }
            }
        }
    }

    /// Turns `diag(a, b)` at positions `i < j` into `diag(gcd, lcm)`.
    fn merge(&mut self, i: usize, j: usize) {
        let a = self.a[(i, i)].clone();
        let b = self.a[(j, j)].clone();
        if b.is_zero() || (!a.is_zero() && b.is_multiple_of(&a)) {
            return;
        }
        let egcd = a.extended_gcd(&b);
        let (mut g, mut s, mut t) = (egcd.gcd, egcd.x, egcd.y);
        if g.is_negative() {
            g = -g;
            s = -s;
            t = -t;
        }
        let a_g = a.clone() / g.clone();
        let b_g = b.clone() / g.clone();
        // L = [[s, t], [-b/g, a/g]], R = [[1, -t b/g], [1, s a/g]], both det 1
        if let Some(l) = &mut self.left {
            l.combine_rows(i, j, [&s, &t, &-b_g.clone(), &a_g]);
        }
        if let Some(r) = &mut self.right {
            let one = T::one();
            let r_ij = -(t.clone() * b_g.clone());
            let r_jj = s.clone() * a_g.clone();
            r.combine_cols(i, j, [&one, &one, &r_ij, &r_jj]);
        }
        self.a[(i, i)] = g;
        self.a[(j, j)] = a_g * b;
    }

    fn enforce_chain(&mut self) {
        let k = self.a.rows().min(self.a.cols());
        for i in 0..k {
            for j in i + 1..k {
                self.merge(i, j);
            }
        }
    }
}

/// Smith normal form of `m`; with `want_transforms` also returns unimodular
/// `L`, `R` such that `L·m·R` is the diagonal form.
pub fn smith_normal_form<T: EuclideanRing>(m: &Matrix<T>, want_transforms: bool) -> SnfResult<T> {
    let mut r = Reducer {
        a: m.clone(),
        left: want_transforms.then(|| Matrix::identity(m.rows())),
        right: want_transforms.then(|| Matrix::identity(m.cols())),
    };
    r.diagonalise();
    r.normalise_signs();
    r.enforce_chain();
    SnfResult {
        factors: r.a.diagonal_entries(),
        left: r.left,
        right: r.right,
    }
}

/// Smith normal form of a rational matrix whose entries must all be
/// integers.
pub fn smith_normal_form_rational<T>(
    m: &Matrix<num_rational::Ratio<T>>,
    want_transforms: bool,
) -> Result<SnfResult<T>>
where
    T: EuclideanRing,
    num_rational::Ratio<T>: crate::scalar::Ring,
{
    let int = m.to_integral()?;
    Ok(smith_normal_form(&int, want_transforms))
}

/// Checks `d_i | d_{i+1}` with zeros only at the end.
pub fn is_divisibility_chain<T: EuclideanRing>(factors: &[T]) -> bool {
    factors.windows(2).all(|w| {
        (w[0].is_zero() && w[1].is_zero()) || (!w[0].is_zero() && w[1].is_multiple_of(&w[0]))
    })
}

/// Verifies `L·m·R = diag(factors)` and that `L`, `R` have determinant
/// `±1`.
pub fn verify_transforms<T: EuclideanRing>(m: &Matrix<T>, snf: &SnfResult<T>) -> Result<bool> {
    let (Some(l), Some(r)) = (snf.left(), snf.right()) else {
        return Err(Error::InvalidParameter(
            "transforms were not requested".into(),
        ));
    };
    let lmr = l.mul(m)?.mul(r)?;
    let unit = |d: T| d.abs().is_one();
    Ok(lmr == snf.diagonal_form(m.rows(), m.cols())
        && unit(l.det_integer()?)
        && unit(r.det_integer()?))
}
