use num_complex::{Complex, Complex64};
use orthofermion::algebra::{AlgebraElement, Generator, StructureTable};
use orthofermion::reptheory::random_rep;
use orthofermion::{random_hermitian, random_unitary, CMatrix};
use proptest::prelude::*;

type Z = Complex<i64>;

fn gaussian_int() -> impl Strategy<Value = Z> {
    (-5i64..=5, -5i64..=5).prop_map(|(re, im)| Z::new(re, im))
}

fn element(p: usize) -> impl Strategy<Value = AlgebraElement<Z>> {
    proptest::collection::vec(gaussian_int(), (p + 1) * (p + 1))
        .prop_map(move |c| AlgebraElement::from_coefficients(p, c).unwrap())
}

fn complex_matrix(rows: usize, cols: usize) -> impl Strategy<Value = CMatrix> {
    proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), rows * cols)
        .prop_map(move |v| CMatrix::new(rows, cols, v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rho0_is_a_star_homomorphism((x, y) in (1usize..=4).prop_flat_map(|p| (element(p), element(p)))) {
        let p = x.p;
        let table = StructureTable::new(p);
        let xy = table.mul(&x, &y).unwrap();
        prop_assert_eq!(xy.rho0(), &x.rho0() * &y.rho0());
        prop_assert_eq!(x.adjoint().rho0(), x.rho0().adjoint());
        prop_assert_eq!(x.adjoint().adjoint(), x);
    }

    #[test]
    fn adjoint_is_an_anti_homomorphism(n in 1usize..6, m in 1usize..6, k in 1usize..6, seed in 0u64..1000) {
        let a = random_unitary::<f64>(n.max(m), seed);
        let a = CMatrix::from_fn(n, m, |i, j| a[(i, j)]);
        let b = random_hermitian(m.max(k), seed + 1);
        let b = CMatrix::from_fn(m, k, |i, j| b[(i, j)]);
        let lhs = (&a * &b).adjoint();
        let rhs = &b.adjoint() * &a.adjoint();
        prop_assert!(lhs.distance(&rhs) <= 1e-13 * (1.0 + lhs.max_abs()));
        prop_assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn herm_eig_reconstructs(n in 1usize..=64, seed in 0u64..10_000) {
        let a = random_hermitian(n, seed);
        let tol = 1e-10;
        let eig = a.herm_eig(tol).unwrap();
        prop_assert!(eig.reconstruct().distance(&a) <= 10.0 * tol * a.max_abs());
        let gram = &eig.vectors.adjoint() * &eig.vectors;
        prop_assert!(gram.distance(&CMatrix::identity(n)) < 1e-12);
        prop_assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn orthonormal_range_is_orthonormal(a in (1usize..8, 1usize..8).prop_flat_map(|(r, c)| complex_matrix(r, c))) {
        let q = a.orthonormal_range(1e-8);
        prop_assert!(q.cols() <= a.rows().min(a.cols()));
        prop_assert!((&q.adjoint() * &q).distance(&CMatrix::identity(q.cols())) < 1e-12);
        // a lies in span(q)
        let residual = &a - &(&(&q * &q.adjoint()) * &a);
        prop_assert!(residual.max_abs() < 1e-7 * (1.0 + a.max_abs()));
    }

    #[test]
    fn decomposition_dimension_law(p in 1usize..=4, copies in 0usize..=3, trivial in 0usize..=3, seed in 0u64..500) {
        prop_assume!(copies + trivial >= 1);
        let rep = random_rep::<f64>(p, copies, trivial, seed).unwrap();
        let d = rep.decompose(1e-10, 1e-8).unwrap();
        prop_assert_eq!(d.multiplicity * (p + 1) + d.trivial_dim, rep.dim());
        prop_assert_eq!((d.multiplicity, d.trivial_dim), (copies, trivial));
        let unit = rep.infer_unit(1e-10).unwrap();
        let pi = orthofermion::pi_of(rep.matrices(), &unit).unwrap();
        prop_assert!((&pi * &pi).distance(&pi) < 1e-10);
        prop_assert!(pi.hermitian_defect() < 1e-10);
        prop_assert_eq!(pi.orthonormal_range(1e-8).cols(), d.multiplicity);
    }
}

#[test]
fn structure_table_agrees_with_matrix_units() {
    // products of matrix units E_ij E_kl = delta_jk E_il, checked per basis pair
    for p in 1..=4 {
        for x in Generator::basis(p) {
            for y in Generator::basis(p) {
                let (i, j) = x.matrix_unit();
                let (k, l) = y.matrix_unit();
                let want = if j == k { Some((i, l)) } else { None };
                assert_eq!(x.product(y).map(Generator::matrix_unit), want);
            }
        }
    }
}
