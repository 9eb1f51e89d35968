//! Representations of the orthofermion algebra on inner-product spaces:
//! relation checking, inference of the representative of the unit, and the
//! constructive decomposition into canonical copies plus a trivial block.

use num_complex::Complex;

use crate::canonical::{canonical, pi_of, CanonicalRep};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::random::random_unitary;
use crate::report::ResidualReport;
use crate::scalar::{Real, Scalar};

/// `p` square matrices of a common dimension, representing `c_1 .. c_p`.
/// The representative of `c_a^+` is always the adjoint of that of `c_a`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthoRep<S> {
    p: usize,
    dim: usize,
    c: Vec<Matrix<S>>,
}

impl<S: Scalar> OrthoRep<S> {
    pub fn new(c: Vec<Matrix<S>>) -> Result<Self> {
        let p = c.len();
        if p == 0 {
            return Err(Error::Order(0));
        }
        let dim = c[0].rows();
        if dim == 0 {
            return Err(Error::InvalidData("representation space has dimension 0".into()));
        }
        for m in &c {
            if m.shape() != (dim, dim) {
                return Err(Error::Dimension { op: "OrthoRep::new", left: (dim, dim), right: m.shape() });
            }
        }
        Ok(OrthoRep { p, dim, c })
    }

    /// The zero (trivial) representation.
    pub fn zero(p: usize, dim: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::Order(0));
        }
        Self::new(vec![Matrix::zeros(dim, dim); p])
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c_a`, 1-based.
    pub fn c(&self, a: usize) -> &Matrix<S> {
        &self.c[a - 1]
    }

    pub fn matrices(&self) -> &[Matrix<S>] {
        &self.c
    }

    pub fn into_matrices(self) -> Vec<Matrix<S>> {
        self.c
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::Order(other.p));
        }
        let c = self.c.iter().zip(&other.c).map(|(a, b)| Matrix::block_diag(&[a.clone(), b.clone()])).collect();
        Self::new(c)
    }

    /// `U c_a U^+` for each `a`.
    pub fn conjugate(&self, u: &Matrix<S>) -> Result<Self> {
        let udag = u.adjoint();
        let c = self.c.iter().map(|m| u.matmul(m)?.matmul(&udag)).collect::<Result<Vec<_>>>()?;
        Self::new(c)
    }

    /// Residuals of the defining relations with `unit` standing for `1`:
    /// `c_a c_b = 0`, `c_a c_b^+ + delta_ab sum c^+ c = delta_ab 1`, the
    /// projector laws for `Pi = 1 - sum c^+ c`, and the absorption laws
    /// `Pi c_a = c_a`, `c_a^+ Pi = c_a^+`, `c_a Pi = 0`, `Pi c_a^+ = 0`.
    /// Each family reports its maximum over all index pairs.
    pub fn verify(&self, unit: &Matrix<S>, tol: f64) -> Result<ResidualReport> {
        if unit.shape() != (self.dim, self.dim) {
            return Err(Error::Dimension { op: "verify", left: (self.dim, self.dim), right: unit.shape() });
        }
        let dag: Vec<Matrix<S>> = self.c.iter().map(Matrix::adjoint).collect();
        let number = self.number_operator();
        let pi = pi_of(&self.c, unit)?;

        let mut nil = 0.0_f64;
        let mut anti = 0.0_f64;
        for (a, ca) in self.c.iter().enumerate() {
            for (b, cb) in self.c.iter().enumerate() {
                nil = nil.max((ca * cb).max_abs());
                let mut lhs = ca * &dag[b];
                if a == b {
                    lhs = &(&lhs + &number) - unit;
                }
                anti = anti.max(lhs.max_abs());
            }
        }
        let fold = |f: &dyn Fn(usize) -> f64| (0..self.p).map(f).fold(0.0_f64, f64::max);

        let mut report = ResidualReport::new();
        report.check("c_a c_b = 0", nil, tol);
        report.check("c_a c_b^+ + delta sum c^+c = delta 1", anti, tol);
        report.check("Pi^2 = Pi", (&pi * &pi).distance(&pi), tol);
        report.check("Pi^+ = Pi", pi.hermitian_defect(), tol);
        report.check("Pi c_a = c_a", fold(&|a| (&pi * &self.c[a]).distance(&self.c[a])), tol);
        report.check("c_a^+ Pi = c_a^+", fold(&|a| (&dag[a] * &pi).distance(&dag[a])), tol);
        report.check("c_a Pi = 0", fold(&|a| (&self.c[a] * &pi).max_abs()), tol);
        report.check("Pi c_a^+ = 0", fold(&|a| (&pi * &dag[a]).max_abs()), tol);
        Ok(report)
    }

    /// `sum_a c_a^+ c_a`.
    pub fn number_operator(&self) -> Matrix<S> {
        self.c
            .iter()
            .fold(Matrix::zeros(self.dim, self.dim), |acc, m| &acc + &(&m.adjoint() * m))
    }

    /// Candidate for the representative of `1` solved from the diagonal
    /// relation, `R = c_1 c_1^+ + sum c^+ c`, together with the consistency
    /// checks: every `c_a c_a^+ + sum c^+ c` agrees with `R`, and
    /// `R c_a = c_a R = c_a`.
    pub fn unit_candidate(&self, tol: f64) -> (Matrix<S>, ResidualReport) {
        let number = self.number_operator();
        let candidates: Vec<Matrix<S>> =
            self.c.iter().map(|m| &(m * &m.adjoint()) + &number).collect();
        let r = candidates[0].clone();
        let spread = candidates.iter().map(|m| m.distance(&r)).fold(0.0, f64::max);
        let left = self.c.iter().map(|m| (&r * m).distance(m)).fold(0.0, f64::max);
        let right = self.c.iter().map(|m| (m * &r).distance(m)).fold(0.0, f64::max);
        let mut report = ResidualReport::new();
        report.check("unit candidates agree", spread, tol);
        report.check("R c_a = c_a", left, tol);
        report.check("c_a R = c_a", right, tol);
        (r, report)
    }

    pub fn infer_unit(&self, tol: f64) -> Result<Matrix<S>> {
        let (r, report) = self.unit_candidate(tol);
        if report.all_pass() {
            Ok(r)
        } else {
            Err(Error::not_rep(format!("unit inference failed: {}", report.failures().join(", "))))
        }
    }
}

impl<S: Scalar> From<CanonicalRep<S>> for OrthoRep<S> {
    fn from(rep: CanonicalRep<S>) -> Self {
        OrthoRep { p: rep.p, dim: rep.p + 1, c: rep.c }
    }
}

/// Result of [`OrthoRep::decompose`].
#[derive(Clone, Debug)]
pub struct Decomposition<T: Real> {
    pub p: usize,
    /// Number of canonical copies, `dim V_0`.
    pub multiplicity: usize,
    pub trivial_dim: usize,
    /// Unitary whose columns are `(e_i, c_1^+ e_i, .., c_p^+ e_i)` for each
    /// vacuum vector `e_i`, followed by a basis of the trivial complement.
    pub basis: Matrix<Complex<T>>,
    pub residuals: ResidualReport,
}

impl<T: Real> Decomposition<T> {
    /// `blockdiag(canonical c_a x multiplicity, 0_{trivial_dim})`.
    pub fn expected_block(&self, a: usize) -> Matrix<Complex<T>> {
        let rep = canonical::<Complex<T>>(self.p).expect("p >= 1");
        let mut blocks = vec![rep.c(a).clone(); self.multiplicity];
        blocks.push(Matrix::zeros(self.trivial_dim, self.trivial_dim));
        Matrix::block_diag(&blocks)
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
}

impl<T: Real> OrthoRep<Complex<T>> {
    /// Splits the space into canonical blocks and a trivial block.
    ///
    /// The vacuum space `V_0 = Im(Pi)` gets an orthonormal basis `e_i`; each
    /// `e_i` generates the canonical block spanned by `e_i, c_a^+ e_i`; the
    /// orthogonal complement of all blocks is annihilated by every `c_a`.
    pub fn decompose(&self, tol: f64, rank_tol: f64) -> Result<Decomposition<T>> {
        let unit = self.infer_unit(tol)?;
        let relations = self.verify(&unit, tol)?;
        if !relations.all_pass() {
            return Err(Error::not_rep(format!("relations violated: {}", relations.failures().join(", "))));
        }
        let (p, dim) = (self.p, self.dim);
        let pi = pi_of(&self.c, &unit)?;
        let vacua = pi.orthonormal_range(rank_tol);
        let m = vacua.cols();
        let trace = pi.trace().re.to_f64().unwrap_or(f64::NAN);
        if trace.is_nan() || (trace - m as f64).abs() >= 0.5 {
            return Err(Error::NumericalDegeneracy {
                reason: format!("vacuum projector rank {m} disagrees with its trace"),
                defect: (trace - m as f64).abs(),
            });
        }

        let mut columns: Vec<Vec<Complex<T>>> = Vec::with_capacity(dim);
        for i in 0..m {
            let e = Matrix::from_columns(dim, &[vacua.column(i)]);
            columns.push(e.column(0));
            for c in &self.c {
                columns.push((&c.adjoint() * &e).column(0));
            }
        }
        let blocks = Matrix::from_columns(dim, &columns);
        let gram = (&blocks.adjoint() * &blocks).distance(&Matrix::identity(blocks.cols()));
        if gram > tol {
            return Err(Error::NumericalDegeneracy { reason: "canonical block vectors not orthonormal".into(), defect: gram });
        }

        let n_star = m * (p + 1);
        let complement = if n_star < dim {
            let proj = &Matrix::identity(dim) - &(&blocks * &blocks.adjoint());
            let comp = proj.orthonormal_range(rank_tol);
            if comp.cols() != dim - n_star {
                return Err(Error::NumericalDegeneracy {
                    reason: format!("complement has rank {} instead of {}", comp.cols(), dim - n_star),
                    defect: 0.0,
                });
            }
            comp
        } else {
            Matrix::zeros(dim, 0)
        };
        let annihilation = self
            .c
            .iter()
            .map(|c| (c * &complement).max_abs().max((&c.adjoint() * &complement).max_abs()))
            .fold(0.0, f64::max);
        if annihilation > tol {
            return Err(Error::not_rep(format!("complement not annihilated (residual {annihilation:e})")));
        }

        let basis = blocks.hstack(&complement)?;
        let mut decomposition = Decomposition {
            p,
            multiplicity: m,
            trivial_dim: dim - n_star,
            basis,
            residuals: ResidualReport::new(),
        };
        let contract = 10.0 * tol;
        let mut report = ResidualReport::new();
        report.check("gram", gram, tol);
        report.check("complement annihilation", annihilation, tol);
        let u = &decomposition.basis;
        report.check("unitarity", (&u.adjoint() * u).distance(&Matrix::identity(dim)), contract);
        let udag = u.adjoint();
        for a in 1..=p {
            let block = &(&udag * self.c(a)) * u;
            report.check(format!("block c_{a}"), block.distance(&decomposition.expected_block(a)), contract);
        }
        if !report.all_pass() {
            return Err(Error::NumericalDegeneracy {
                reason: format!("decomposition contract violated: {}", report.failures().join(", ")),
                defect: report.max_residual(),
            });
        }
        decomposition.residuals = report;
        Ok(decomposition)
    }
}

/// `copies` canonical blocks plus a `trivial`-dimensional zero block,
/// conjugated by a Haar unitary drawn from `seed`.
pub fn random_rep<T: Real>(p: usize, copies: usize, trivial: usize, seed: u64) -> Result<OrthoRep<Complex<T>>> {
    if copies + trivial == 0 {
        return Err(Error::InvalidData("random_rep needs copies + trivial >= 1".into()));
    }
    let rep = canonical::<Complex<T>>(p)?;
    let dim = copies * (p + 1) + trivial;
    let c = rep
        .c
        .iter()
        .map(|m| {
            let mut blocks = vec![m.clone(); copies];
            blocks.push(Matrix::zeros(trivial, trivial));
            Matrix::block_diag(&blocks)
        })
        .collect();
    OrthoRep::new(c)?.conjugate(&random_unitary::<T>(dim, seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ExactRep, Rep, ZMatrix};
    use num_complex::Complex64;

    #[test]
    fn canonical_verifies_exactly() {
        for p in 1..=5 {
            let rep: ExactRep = canonical(p).unwrap().into();
            let r = rep.verify(&ZMatrix::identity(p + 1), 0.0).unwrap();
            assert!(r.all_pass());
            assert_eq!(r.max_residual(), 0.0);
        }
    }

    #[test]
    fn zero_rep_verifies_with_zero_unit() {
        let rep = ExactRep::zero(3, 4).unwrap();
        assert_eq!(rep.infer_unit(0.0).unwrap(), ZMatrix::zeros(4, 4));
        assert!(rep.verify(&ZMatrix::zeros(4, 4), 0.0).unwrap().all_pass());
    }

    #[test]
    fn perturbation_is_reported() {
        let mut c = canonical::<Complex64>(2).unwrap().c;
        c[0][(2, 2)] = Complex64::new(1e-3, 0.0);
        let rep = Rep::new(c).unwrap();
        let r = rep.verify(&crate::CMatrix::identity(3), 1e-10).unwrap();
        assert!(!r.all_pass());
        let worst = r.max_residual();
        assert!((5e-4..2e-3).contains(&worst), "{worst}");
    }

    #[test]
    fn verify_rejects_wrong_unit_shape() {
        let rep: Rep = canonical(2).unwrap().into();
        assert!(matches!(rep.verify(&crate::CMatrix::identity(2), 1e-10), Err(Error::Dimension { .. })));
    }

    #[test]
    fn infer_unit_examples() {
        let rep: ExactRep = canonical(3).unwrap().into();
        assert_eq!(rep.infer_unit(0.0).unwrap(), ZMatrix::identity(4));

        let sum = ExactRep::from(canonical(2).unwrap()).direct_sum(&ExactRep::zero(2, 2).unwrap()).unwrap();
        let one = Complex::new(1, 0);
        let zero = Complex::new(0, 0);
        assert_eq!(sum.infer_unit(0.0).unwrap(), ZMatrix::diag(&[one, one, one, zero, zero]));
    }

    #[test]
    fn infer_unit_rejects_inconsistent_input() {
        // c_1 = E_12, c_2 = E_12: c_1 c_2 != 0 and the candidates disagree
        let rep = ExactRep::new(vec![ZMatrix::unit(3, 0, 1), ZMatrix::unit(3, 0, 1)]).unwrap();
        assert!(matches!(rep.infer_unit(0.0), Err(Error::NotARepresentation { .. })));
    }

    #[test]
    fn decompose_canonical() {
        let rep: Rep = canonical(2).unwrap().into();
        let d = rep.decompose(1e-10, 1e-8).unwrap();
        assert_eq!((d.multiplicity, d.trivial_dim), (1, 0));
        // identity up to a phase on the block
        let u = &d.basis;
        let phase = u[(0, 0)];
        assert!((phase.norm() - 1.0).abs() < 1e-12);
        assert!(u.distance(&crate::CMatrix::identity(3).scale(&phase)) < 1e-12);
    }

    #[test]
    fn decompose_zero_rep() {
        let d = Rep::zero(2, 4).unwrap().decompose(1e-10, 1e-8).unwrap();
        assert_eq!((d.multiplicity, d.trivial_dim), (0, 4));
    }

    #[test]
    fn decompose_scrambled_sum() {
        let rep = random_rep::<f64>(2, 2, 2, 7).unwrap();
        let d = rep.decompose(1e-10, 1e-8).unwrap();
        assert_eq!((d.multiplicity, d.trivial_dim), (2, 2));
        let u = &d.basis;
        for a in 1..=2 {
            let block = &(&u.adjoint() * rep.c(a)) * u;
            assert!(block.distance(&d.expected_block(a)) < 1e-9);
        }
    }

    #[test]
    fn decompose_rejects_non_representation() {
        let rep = Rep::new(vec![crate::CMatrix::unit(2, 0, 1).scale(&Complex64::new(2.0, 0.0))]).unwrap();
        assert!(matches!(rep.decompose(1e-10, 1e-8), Err(Error::NotARepresentation { .. })));
    }

    #[test]
    fn random_rep_examples() {
        let r = random_rep::<f64>(2, 1, 0, 5).unwrap();
        let d = r.decompose(1e-10, 1e-8).unwrap();
        assert_eq!((d.multiplicity, d.trivial_dim), (1, 0));

        let z = random_rep::<f64>(1, 0, 3, 5).unwrap();
        assert_eq!(z.dim(), 3);
        assert!(z.matrices().iter().all(|m| m.max_abs() < 1e-15));

        let r = random_rep::<f64>(3, 2, 1, 7).unwrap();
        let unit = r.infer_unit(1e-12).unwrap();
        assert!(r.verify(&unit, 1e-12).unwrap().all_pass());
        let d = r.decompose(1e-10, 1e-8).unwrap();
        assert_eq!((d.multiplicity, d.trivial_dim), (2, 1));

        assert!(random_rep::<f64>(2, 0, 0, 1).is_err());
    }

    #[test]
    fn decompose_in_single_precision() {
        let r = random_rep::<f32>(2, 2, 1, 11).unwrap();
        let d = r.decompose(1e-4, 1e-3).unwrap();
        assert_eq!((d.multiplicity, d.trivial_dim), (2, 1));
    }
}
