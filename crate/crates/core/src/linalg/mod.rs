//! Dense matrices over a [`Scalar`] ring.
//!
//! Storage is row-major. Arithmetic operators on references panic on shape
//! mismatch; [`Matrix::matmul`] is the fallible form for untrusted shapes.

mod eigen;
mod range;

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

pub use eigen::HermEig;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidData(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidData("ragged rows".into()));
        }
        Ok(Matrix { rows: n, cols: m, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// Matrix unit with a single one at `(i, j)` (zero-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = S::one();
        m
    }

    pub fn diag(values: &[S]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { values[i].clone() } else { S::zero() })
    }

    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[S] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&S) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn matmul(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension { op: "matmul", left: self.shape(), right: rhs.shape() });
        }
        let mut out: Matrix<S> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    let acc = &mut out.data[i * rhs.cols + j];
                    *acc = acc.clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Matrix<S>, op: &'static str, f: impl Fn(&S, &S) -> S) -> Result<Matrix<S>> {
        if self.shape() != rhs.shape() {
            return Err(Error::Dimension { op, left: self.shape(), right: rhs.shape() });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_add(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        self.zip_with(rhs, "add", |a, b| a.clone() + b.clone())
    }

    pub fn try_sub(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        self.zip_with(rhs, "sub", |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, s: &S) -> Matrix<S> {
        self.map(|a| a.clone() * s.clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix<S> {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Matrix<S> {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// `self^k` for a square matrix; `k = 0` gives the identity.
    pub fn pow(&self, k: u32) -> Matrix<S> {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Largest entry modulus; zero exactly for the zero matrix.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Scalar::modulus).fold(0.0, f64::max)
    }

    /// `max_abs(self - rhs)`; panics on shape mismatch.
    pub fn distance(&self, rhs: &Matrix<S>) -> f64 {
        (self - rhs).max_abs()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.is_zero())
    }

    pub fn commutator(&self, rhs: &Matrix<S>) -> Matrix<S> {
        &(self * rhs) - &(rhs * self)
    }

    pub fn kron(&self, rhs: &Matrix<S>) -> Matrix<S> {
        let (r, c) = rhs.shape();
        Self::from_fn(self.rows * r, self.cols * c, |i, j| {
            self[(i / r, j / c)].clone() * rhs[(i % r, j % c)].clone()
        })
    }

    pub fn block_diag(blocks: &[Matrix<S>]) -> Matrix<S> {
        let rows = blocks.iter().map(Matrix::rows).sum();
        let cols = blocks.iter().map(Matrix::cols).sum();
        let mut out = Matrix::zeros(rows, cols);
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

    pub fn hstack(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        if self.rows != rhs.rows {
            return Err(Error::Dimension { op: "hstack", left: self.shape(), right: rhs.shape() });
        }
        Ok(Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - self.cols)].clone()
            }
        }))
    }

    /// Hermitian defect `max |A - A^+|`.
    pub fn hermitian_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.distance(&self.adjoint())
    }
}

impl<T: Real> Matrix<Complex<T>> {
    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn from_real_diag(values: &[T]) -> Self {
        let entries: Vec<_> = values.iter().map(|&v| Complex::new(v, T::zero())).collect();
        Self::diag(&entries)
    }

    pub fn scale_real(&self, s: T) -> Self {
        self.map(|z| z * s)
    }

    /// Euclidean norm of column `j`.
    pub fn column_norm(&self, j: usize) -> T {
        (0..self.rows).map(|i| self[(i, j)].norm_sqr()).fold(T::zero(), |a, b| a + b).sqrt()
    }

    /// Converts entries between float precisions.
    pub fn cast<U: Real>(&self) -> Matrix<Complex<U>> {
        self.map(|z| {
            Complex::new(
                U::from(z.re).expect("finite entry"),
                U::from(z.im).expect("finite entry"),
            )
        })
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;

    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.matmul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Add for &Matrix<S> {
    type Output = Matrix<S>;

    fn add(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Sub for &Matrix<S> {
    type Output = Matrix<S>;

    fn sub(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Neg for &Matrix<S> {
    type Output = Matrix<S>;

    fn neg(self) -> Matrix<S> {
        self.map(|a| -a.clone())
    }
}

/// Sum of matrices of a common shape; `None` for an empty iterator.
pub fn sum<'a, S: Scalar>(mut it: impl Iterator<Item = &'a Matrix<S>>) -> Option<Matrix<S>> {
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, m| &acc + m))
}
