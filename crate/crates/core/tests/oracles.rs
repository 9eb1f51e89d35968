//! Checks against independent reference computations.

use num_complex::{Complex, Complex64};
use orthofermion::algebra::{AlgebraElement, Generator};
use orthofermion::osusy::{eigenspace_reps, OsusySystem};
use orthofermion::{random_hermitian, random_unitary, CMatrix, Matrix};

fn triple_loop(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let mut out = CMatrix::zeros(a.rows(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..a.cols() {
                acc += a[(i, k)] * b[(k, j)];
            }
            out[(i, j)] = acc;
        }
    }
    out
}

#[test]
fn matmul_against_triple_loop() {
    for seed in 0..10 {
        let a = random_hermitian(3, seed);
        let b = random_unitary::<f64>(3, seed + 100);
        assert!(a.matmul(&b).unwrap().distance(&triple_loop(&a, &b)) < 1e-14);
    }
}

/// Brute-force spectrum of the truncated model: H is diagonal in the
/// product basis with `n` on `|n,0>` and `n+1` (or 0 at the cutoff) on
/// `|n,a>`, so eigenvalue counts come from enumerating basis states.
fn brute_force_spectrum(p: usize, levels: usize) -> std::collections::BTreeMap<usize, usize> {
    let mut counts = std::collections::BTreeMap::new();
    for n in 0..levels {
        *counts.entry(n).or_insert(0) += 1;
        let e = if n + 1 < levels { n + 1 } else { 0 };
        *counts.entry(e).or_insert(0) += p;
    }
    counts
}

#[test]
fn spectrum_matches_enumeration() {
    for p in 1..=4 {
        for levels in 2..=6 {
            let sys = OsusySystem::<f64>::build(p, levels).unwrap();
            // H's diagonal in the product basis reproduces the enumeration
            let diag: Vec<f64> = (0..sys.dim()).map(|i| sys.h[(i, i)].re).collect();
            assert!(sys.h.distance(&CMatrix::from_real_diag(&diag)) < 1e-13);

            let spec = sys.spectral(1e-8).unwrap();
            let oracle = brute_force_spectrum(p, levels);
            let got: Vec<(usize, usize)> =
                spec.energies.iter().map(|e| e.round() as usize).zip(spec.multiplicities.iter().copied()).collect();
            let want: Vec<(usize, usize)> = oracle.into_iter().collect();
            assert_eq!(got, want, "p={p} levels={levels}");
        }
    }
}

#[test]
fn eigenspace_copies_p2_levels4() {
    let sys = OsusySystem::<f64>::build(2, 4).unwrap();
    let spec = sys.spectral(1e-8).unwrap();
    let reps = eigenspace_reps(&sys, &spec, 1e-10).unwrap();
    let copies: Vec<usize> = reps.iter().map(|r| r.copies).collect();
    assert_eq!(copies, vec![0, 1, 1, 1]);
}

#[test]
fn rho0_of_explicit_element() {
    // 2 Pi + i c_1 - c_2^+ + 3 c_1^+ c_2 at p = 2, assembled by hand
    type Z = Complex<i64>;
    let x = AlgebraElement::<Z>::zero(2)
        .with(Generator::Pi, Z::new(2, 0))
        .with(Generator::C(1), Z::new(0, 1))
        .with(Generator::CDag(2), Z::new(-1, 0))
        .with(Generator::CDagC(1, 2), Z::new(3, 0));
    let z = Z::new(0, 0);
    let want = Matrix::from_rows(vec![
        vec![Z::new(2, 0), Z::new(0, 1), z],
        vec![z, z, Z::new(3, 0)],
        vec![Z::new(-1, 0), z, z],
    ])
    .unwrap();
    assert_eq!(x.rho0(), want);
}
