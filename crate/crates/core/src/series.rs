//! Truncated formal power series `c_0 + c_1 q + … + c_N q^N`.
//!
//! Binary operations truncate to the smaller of the two orders.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Series<T> {
    /// Series from its coefficients `c_0..=c_N`; the order is `N`.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(T::one(), 0, order)
    }

    /// `c q^k` truncated at `order` (zero if `k > order`).
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `q^d`.
    pub fn coeff(&self, d: usize) -> Result<&T> {
        self.coeffs.get(d).ok_or(Error::DegreeOutOfRange {
            degree: d,
            order: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, T::zero());
        Self { coeffs }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeffs[0].clone();
        if !c0.abs().is_one() {
            return Err(Error::NonUnitConstant);
        }
        // c0 is its own inverse
        let mut out: Vec<T> = Vec::with_capacity(self.coeffs.len());
        out.push(c0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = T::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc + self.coeffs[k].clone() * out[n - k].clone();
                }
            }
            out.push(-(acc * c0.clone()));
        }
        Ok(Self { coeffs: out })
    }

    /// `S(q^a)`, same truncation order.
    pub fn substitute_power(&self, a: usize) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidParameter(
                "substitute_power needs a ≥ 1".into(),
            ));
        }
        let n = self.order();
        let mut out = Self::zero(n);
        for (k, c) in self.coeffs.iter().enumerate() {
            match k.checked_mul(a) {
                Some(j) if j <= n => out.coeffs[j] = c.clone(),
                _ => break,
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `1 / (1 - q^k)` truncated at `order`.
    pub fn geometric(k: usize, order: usize) -> Self {
        assert!(k >= 1);
        let mut s = Self::zero(order);
        for j in (0..=order).step_by(k) {
            s.coeffs[j] = T::one();
        }
        s
    }

    /// Multiplies in place by `1 / (1 - q^k)`, a running prefix sum with
    /// stride `k`.
    pub(crate) fn mul_geometric_in_place(&mut self, k: usize) {
        for j in k..self.coeffs.len() {
            let prev = self.coeffs[j - k].clone();
            self.coeffs[j] = self.coeffs[j].clone() + prev;
        }
    }
}

impl<'a, T: Ring> Add for &'a Series<T> {
    type Output = Series<T>;

    fn add(self, rhs: &'a Series<T>) -> Series<T> {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<'a, T: Ring> Sub for &'a Series<T> {
    type Output = Series<T>;

    fn sub(self, rhs: &'a Series<T>) -> Series<T> {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<'a, T: Ring> Mul for &'a Series<T> {
    type Output = Series<T>;

    fn mul(self, rhs: &'a Series<T>) -> Series<T> {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Series { coeffs }
    }
}

impl<T: Ring> Neg for &Series<T> {
    type Output = Series<T>;

    fn neg(self) -> Series<T> {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Ring> fmt::Display for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}q")?,
                _ => write!(f, "{c}q^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}
