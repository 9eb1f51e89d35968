use num_complex::Complex;

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Eigendecomposition of a Hermitian matrix: `A = V diag(values) V^+`.
#[derive(Clone, Debug)]
pub struct HermEig<T: Real> {
    /// Ascending.
    pub values: Vec<T>,
    /// Orthonormal eigenvectors as columns, in the order of `values`.
    pub vectors: Matrix<Complex<T>>,
}

impl<T: Real> HermEig<T> {
    pub fn reconstruct(&self) -> Matrix<Complex<T>> {
        let d = Matrix::from_real_diag(&self.values);
        &(&self.vectors * &d) * &self.vectors.adjoint()
    }
}

const MAX_SWEEPS: usize = 100;

impl<T: Real> Matrix<Complex<T>> {
    /// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
    ///
    /// Rejects inputs whose Hermitian defect exceeds `tol`; the Hermitian
    /// part `(A + A^+)/2` is what gets diagonalised.
    pub fn herm_eig(&self, tol: f64) -> Result<HermEig<T>> {
        if !self.is_square() {
            return Err(Error::Dimension { op: "herm_eig", left: self.shape(), right: self.shape() });
        }
        let defect = self.hermitian_defect();
        if defect.is_nan() || defect > tol {
            return Err(Error::NotHermitian { defect });
        }
        let n = self.rows;
        let half = T::lit(0.5);
        let mut a = Matrix::from_fn(n, n, |i, j| (self[(i, j)] + self[(j, i)].conj()) * half);
        let mut v = Matrix::<Complex<T>>::identity(n);

        let norm = a.as_slice().iter().map(|z| z.norm_sqr()).fold(T::zero(), |x, y| x + y).sqrt();
        let eps = T::eps();
        let negligible = eps * eps * norm;

        for _ in 0..MAX_SWEEPS {
            let off = off_diagonal_norm(&a);
            if off <= eps * norm * T::lit(1e-2) || off == T::zero() {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    rotate(&mut a, &mut v, p, q, negligible);
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).expect("finite eigenvalues"));
        let values = order.iter().map(|&i| a[(i, i)].re).collect();
        let vectors = Matrix::from_fn(n, n, |i, j| v[(i, order[j])]);
        Ok(HermEig { values, vectors })
    }
}

fn off_diagonal_norm<T: Real>(a: &Matrix<Complex<T>>) -> T {
    let n = a.rows();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s = s + a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Annihilates `a[p][q]` with the unitary
/// `U = [[c, s e^{i phi}], [-s e^{-i phi}, c]]` acting on coordinates `p, q`.
fn rotate<T: Real>(a: &mut Matrix<Complex<T>>, v: &mut Matrix<Complex<T>>, p: usize, q: usize, negligible: T) {
    let b = a[(p, q)];
    let abs_b = b.norm();
    if abs_b <= negligible {
        return;
    }
    let phase = b / abs_b;
    let two = T::lit(2.0);
    let tau = (a[(q, q)].re - a[(p, p)].re) / (two * abs_b);
    if !tau.is_finite() {
        return;
    }
    let sign = if tau >= T::zero() { T::one() } else { -T::one() };
    let t = sign / (tau.abs() + (T::one() + tau * tau).sqrt());
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;
    let s_fwd = phase * s;
    let s_back = phase.conj() * s;

    let n = a.rows();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * c - s_back * akq;
        a[(k, q)] = s_fwd * akp + akq * c;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = apk * c - s_fwd * aqk;
        a[(q, k)] = s_back * apk + aqk * c;
    }
    a[(p, q)] = Complex::new(T::zero(), T::zero());
    a[(q, p)] = Complex::new(T::zero(), T::zero());
    a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
    a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * c - s_back * vkq;
        v[(k, q)] = s_fwd * vkp + vkq * c;
    }
}
