use num_complex::Complex;

use super::Matrix;
use crate::scalar::Real;

impl<T: Real> Matrix<Complex<T>> {
    /// Orthonormal basis of the column space, as columns.
    ///
    /// Pivoted modified Gram-Schmidt with one reorthogonalisation pass. A
    /// column is accepted while its residual norm exceeds
    /// `rank_tol * (largest column norm)`; the column count is the numerical
    /// rank at that threshold.
    pub fn orthonormal_range(&self, rank_tol: f64) -> Matrix<Complex<T>> {
        let rows = self.rows();
        let mut work: Vec<Vec<Complex<T>>> = (0..self.cols()).map(|j| self.column(j)).collect();
        let reference = work.iter().map(|c| norm(c)).fold(T::zero(), T::max);
        let threshold = T::lit(rank_tol) * reference;
        let mut basis: Vec<Vec<Complex<T>>> = Vec::new();
        if reference == T::zero() {
            return Matrix::from_columns(rows, &basis);
        }

        while basis.len() < rows && !work.is_empty() {
            let (pivot, pivot_norm) = work
                .iter()
                .enumerate()
                .map(|(j, c)| (j, norm(c)))
                .fold((0, T::neg_infinity()), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pivot_norm.is_nan() || pivot_norm <= threshold {
                break;
            }
            let mut q = work.swap_remove(pivot);
            for b in &basis {
                project_out(&mut q, b);
            }
            let nq = norm(&q);
            if nq == T::zero() {
                break;
            }
            q.iter_mut().for_each(|z| *z = *z / nq);
            for w in work.iter_mut() {
                project_out(w, &q);
            }
            basis.push(q);
        }
        Matrix::from_columns(rows, &basis)
    }
}

fn norm<T: Real>(v: &[Complex<T>]) -> T {
    v.iter().map(|z| z.norm_sqr()).fold(T::zero(), |a, b| a + b).sqrt()
}

/// `w -= q (q^+ w)` for unit `q`.
fn project_out<T: Real>(w: &mut [Complex<T>], q: &[Complex<T>]) {
    let overlap = q.iter().zip(w.iter()).fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * b);
    for (wi, qi) in w.iter_mut().zip(q) {
        *wi = *wi - *qi * overlap;
    }
}

#[cfg(test)]
mod tests {
    use crate::{random_unitary, CMatrix};

    #[test]
    fn rank_one_projector() {
        let p = CMatrix::from_real_diag(&[1.0, 0.0, 0.0]);
        let r = p.orthonormal_range(1e-8);
        assert_eq!(r.shape(), (3, 1));
        assert!((r[(0, 0)].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zero_matrix_has_empty_range() {
        let r = CMatrix::zeros(3, 3).orthonormal_range(1e-8);
        assert_eq!(r.shape(), (3, 0));
    }

    #[test]
    fn rotated_rank_two_projector() {
        for seed in 0..4 {
            let u = random_unitary::<f64>(3, seed);
            let p = &(&u * &CMatrix::from_real_diag(&[1.0, 1.0, 0.0])) * &u.adjoint();
            let r = p.orthonormal_range(1e-8);
            assert_eq!(r.cols(), 2);
            let gram = &r.adjoint() * &r;
            assert!(gram.distance(&CMatrix::identity(2)) < 1e-12);
            // same subspace: the projectors agree
            assert!((&r * &r.adjoint()).distance(&p) < 1e-12);
        }
    }
}
