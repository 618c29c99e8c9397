use std::fmt;
use std::ops::{Index, IndexMut};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::multipartition::weakly_increasing_tuples;
use crate::scalar::{EuclideanRing, Field, Ring};

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(vec![T::one(); n])
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)].is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<T> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let cur = std::mem::replace(&mut out[(i, j)], T::zero());
                        out[(i, j)] = cur + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product. Row `(i, k)` of the result is `i * rhs.rows + k`
    /// (the left factor is the more significant index), likewise columns.
    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let (i, k) = (r / rhs.rows, r % rhs.rows);
            let (j, l) = (c / rhs.cols, c % rhs.cols);
            self[(i, j)].clone() * rhs[(k, l)].clone()
        })
    }

    /// Block-diagonal matrix with the given blocks in order.
    pub fn direct_sum(blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Reorders rows and columns: entry `(i, j)` of the result is
    /// `self[(row_perm[i], col_perm[j])]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        Self::from_fn(row_perm.len(), col_perm.len(), |i, j| {
            self[(row_perm[i], col_perm[j])].clone()
        })
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += factor * row[src]`.
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &T) {
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let v = s.clone() * factor.clone();
                let d = &mut self.data[dst * self.cols + j];
                *d = std::mem::replace(d, T::zero()) + v;
            }
        }
    }

    /// `col[dst] += factor * col[src]`.
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &T) {
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if !s.is_zero() {
                let v = s.clone() * factor.clone();
                let d = &mut self.data[i * self.cols + dst];
                *d = std::mem::replace(d, T::zero()) + v;
            }
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let d = &mut self.data[i * self.cols + j];
            *d = -std::mem::replace(d, T::zero());
        }
    }

    /// Replaces rows `a`, `b` by `(p·a + q·b, r·a + s·b)`.
    pub(crate) fn combine_rows(&mut self, a: usize, b: usize, coef: [&T; 4]) {
        let [p, q, r, s] = coef;
        for j in 0..self.cols {
            let x = self.data[a * self.cols + j].clone();
            let y = self.data[b * self.cols + j].clone();
            self.data[a * self.cols + j] = p.clone() * x.clone() + q.clone() * y.clone();
            self.data[b * self.cols + j] = r.clone() * x + s.clone() * y;
        }
    }

    /// Replaces columns `a`, `b` by `(p·a + q·b, r·a + s·b)`.
    pub(crate) fn combine_cols(&mut self, a: usize, b: usize, coef: [&T; 4]) {
        let [p, q, r, s] = coef;
        for i in 0..self.rows {
            let x = self.data[i * self.cols + a].clone();
            let y = self.data[i * self.cols + b].clone();
            self.data[i * self.cols + a] = p.clone() * x.clone() + q.clone() * y.clone();
            self.data[i * self.cols + b] = r.clone() * x + s.clone() * y;
        }
    }
}

/// The `m`-th symmetric power of a square matrix `Y`.
///
/// Rows and columns are indexed by weakly increasing `m`-tuples over the
/// index set of `Y`, in lexicographic order. Entry `(i, j)` is the
/// coefficient of `x_{j_1}⋯x_{j_m}` in `Π_t (Σ_k y_{i_t k} x_k)`, i.e. the sum
/// of `y_{i_1 j'_1}⋯y_{i_m j'_m}` over the distinct rearrangements `j'` of
/// `j`. This makes `S^m(YZ) = S^m(Y) S^m(Z)`, and for diagonal `Y` reduces
/// to `Π_t y_{i_t i_t}` on the diagonal.
pub fn symmetric_power<T: Ring>(y: &Matrix<T>, m: usize) -> Result<Matrix<T>> {
    if !y.is_square() {
        return Err(Error::DimensionMismatch(
            "symmetric power of a non-square matrix".into(),
        ));
    }
    let k = y.rows();
    let tuples = weakly_increasing_tuples(k, m);
    let rearrangements: Vec<Vec<Vec<usize>>> =
        tuples.iter().map(|t| distinct_permutations(t)).collect();
    Ok(Matrix::from_fn(tuples.len(), tuples.len(), |a, b| {
        let rows = &tuples[a];
        rearrangements[b]
            .iter()
            .map(|cols| {
                rows.iter()
                    .zip(cols)
                    .fold(T::one(), |acc, (&i, &j)| acc * y[(i - 1, j - 1)].clone())
            })
            .fold(T::zero(), |acc, x| acc + x)
    }))
}

/// Distinct orderings of a sorted sequence, generated in lexicographic
/// order.
fn distinct_permutations(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    loop {
        // next lexicographic permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

impl<T: Field> Matrix<T> {
    /// Determinant by Gaussian elimination over a field.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[(r, c)].is_zero()) else {
                return Ok(T::zero());
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let pivot = a[(c, c)].clone();
            det = det * pivot.clone();
            for r in c + 1..n {
                if !a[(r, c)].is_zero() {
                    let f = -(a[(r, c)].clone() / pivot.clone());
                    a.add_row_multiple(r, c, &f);
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "inverse of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n)
                .find(|&r| !a[(r, c)].is_zero())
                .ok_or(Error::Singular)?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let pivot = a[(c, c)].clone();
            for j in 0..n {
                a[(c, j)] = a[(c, j)].clone() / pivot.clone();
                inv[(c, j)] = inv[(c, j)].clone() / pivot.clone();
            }
            for r in 0..n {
                if r != c && !a[(r, c)].is_zero() {
                    let f = -a[(r, c)].clone();
                    a.add_row_multiple(r, c, &f);
                    inv.add_row_multiple(r, c, &f);
                }
            }
        }
        Ok(inv)
    }
}

impl<T: EuclideanRing> Matrix<T> {
    /// Determinant by Bareiss' fraction-free elimination; exact over any
    /// Euclidean ring.
    pub fn det_integer(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                    return Ok(T::zero());
                };
                a.swap_rows(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[(i, j)].clone() * a[(k, k)].clone()
                        - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = v / prev.clone();
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * a[(n - 1, n - 1)].clone())
    }

    /// Embeds into the rationals.
    pub fn to_rational(&self) -> Matrix<Ratio<T>>
    where
        Ratio<T>: Ring,
    {
        self.map(|x| Ratio::from_integer(x.clone()))
    }
}

impl<T> Matrix<Ratio<T>>
where
    T: Clone + Integer + Signed,
    Ratio<T>: Ring,
    T: Ring,
{
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(Ratio::is_integer)
    }

    /// The integer matrix with the same entries, or the first non-integral
    /// position.
    pub fn to_integral(&self) -> Result<Matrix<T>> {
        if let Some(pos) = self.data.iter().position(|x| !x.is_integer()) {
            return Err(Error::NonIntegral {
                row: pos / self.cols,
                col: pos % self.cols,
            });
        }
        Ok(self.map(|x| x.to_integer()))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    /// `[[a,b],[c,d]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
