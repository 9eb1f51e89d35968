//! Seeded random matrices. ChaCha8 keeps the streams identical across
//! platforms, so files derived from a seed are byte-stable.

use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::linalg::Matrix;
use crate::scalar::Real;

fn gaussian_columns(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Vec<Vec<Complex<f64>>> {
    (0..cols)
        .map(|_| {
            (0..rows)
                .map(|_| {
                    let re: f64 = StandardNormal.sample(rng);
                    let im: f64 = StandardNormal.sample(rng);
                    Complex::new(re, im)
                })
                .collect()
        })
        .collect()
}

/// Haar-distributed `n x n` unitary: Gram-Schmidt on a complex Ginibre
/// matrix (positive diagonal of R fixes the phases).
pub fn random_unitary<T: Real>(n: usize, seed: u64) -> Matrix<Complex<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cols = gaussian_columns(&mut rng, n, n);
    for j in 0..n {
        // two passes for orthogonality at working precision
        for _ in 0..2 {
            for k in 0..j {
                let (done, rest) = cols.split_at_mut(j);
                let q = &done[k];
                let w = &mut rest[0];
                let overlap: Complex<f64> = q.iter().zip(w.iter()).map(|(a, b)| a.conj() * b).sum();
                for (wi, qi) in w.iter_mut().zip(q) {
                    *wi -= qi * overlap;
                }
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        cols[j].iter_mut().for_each(|z| *z /= norm);
    }
    Matrix::from_columns(n, &cols).cast()
}

/// `(G + G^+)/2` for a seeded complex Gaussian `G`.
pub fn random_hermitian(n: usize, seed: u64) -> Matrix<Complex<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = Matrix::from_columns(n, &gaussian_columns(&mut rng, n, n));
    (&g + &g.adjoint()).scale_real(0.5)
}

/// Normalised random state vector, as an `n x 1` matrix.
pub fn random_state<T: Real>(n: usize, seed: u64) -> Matrix<Complex<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = Matrix::from_columns(n, &gaussian_columns(&mut rng, n, 1));
    let norm = v.column_norm(0);
    v.scale_real(1.0 / norm).cast()
}
