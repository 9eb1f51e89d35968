//! Truncated bose-orthofermi model `Q_a = sqrt(2) a^+ c_a` and the
//! generators it carries: the parasupersymmetry charge `Q`, the fractional
//! supersymmetry charge `𝒬`, and `Q~`.
//!
//! The boson space keeps occupations `0..levels` with a hard cutoff
//! (`a^+ |levels-1> = 0`). `H` is defined from the truncated charges through
//! `2H = Q_1 Q_1^+ + sum Q^+ Q`, which keeps every orthosupersymmetry relation
//! exact on the truncated space. States `|levels-1, a>` then land in the
//! `E = 0` eigenspace alongside the true vacuum `|0, 0>`.

use num_complex::Complex;

use crate::canonical::{canonical, cyclic_from, ladder_from};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::ResidualReport;
use crate::reptheory::{Decomposition, OrthoRep};
use crate::scalar::Real;
use crate::DEFAULT_RANK_TOL;

type CM<T> = Matrix<Complex<T>>;

#[derive(Clone, Debug)]
pub struct OsusySystem<T: Real> {
    pub p: usize,
    pub levels: usize,
    /// `Q_1 .. Q_p`.
    pub q: Vec<CM<T>>,
    pub h: CM<T>,
}

/// Boson annihilator on occupations `0..levels`: `a|n> = sqrt(n)|n-1>`.
pub fn truncated_annihilator<T: Real>(levels: usize) -> CM<T> {
    Matrix::from_fn(levels, levels, |i, j| {
        if j == i + 1 {
            Complex::new(T::lit(j as f64).sqrt(), T::zero())
        } else {
            Complex::new(T::zero(), T::zero())
        }
    })
}

impl<T: Real> OsusySystem<T> {
    /// Basis index `n * (p + 1) + k` for boson occupation `n` and
    /// orthofermion ket `|k>`.
    pub fn build(p: usize, levels: usize) -> Result<Self> {
        if levels < 2 {
            return Err(Error::Truncation(levels));
        }
        let rep = canonical::<Complex<T>>(p)?;
        let adag = truncated_annihilator::<T>(levels).adjoint();
        let sqrt2 = T::lit(2.0).sqrt();
        let q: Vec<CM<T>> = rep.c.iter().map(|c| adag.kron(c).scale_real(sqrt2)).collect();
        let mut two_h = &q[0] * &q[0].adjoint();
        for qa in &q {
            two_h = &two_h + &(&qa.adjoint() * qa);
        }
        let h = two_h.scale_real(T::lit(0.5));
        Ok(OsusySystem { p, levels, q, h })
    }

    pub fn dim(&self) -> usize {
        self.levels * (self.p + 1)
    }

    /// `Q_a`, 1-based.
    pub fn q(&self, a: usize) -> &CM<T> {
        &self.q[a - 1]
    }

    /// `[H, Q_a] = 0`, `Q_a Q_b = 0`, `Q_a Q_b^+ + delta sum Q^+Q = 2 delta H`
    /// and `min spec(H) >= 0`, each maximised over indices.
    pub fn relations(&self, tol: f64) -> Result<ResidualReport> {
        let number = self.q.iter().fold(Matrix::zeros(self.dim(), self.dim()), |acc, m| &acc + &(&m.adjoint() * m));
        let two_h = self.h.scale_real(T::lit(2.0));
        let (mut comm, mut nil, mut anti) = (0.0_f64, 0.0_f64, 0.0_f64);
        for (a, qa) in self.q.iter().enumerate() {
            comm = comm.max(self.h.commutator(qa).max_abs());
            for (b, qb) in self.q.iter().enumerate() {
                nil = nil.max((qa * qb).max_abs());
                let mut lhs = qa * &qb.adjoint();
                if a == b {
                    lhs = &(&lhs + &number) - &two_h;
                }
                anti = anti.max(lhs.max_abs());
            }
        }
        let min_eig = self.h.herm_eig(tol)?.values[0].to_f64().unwrap_or(f64::NAN);
        let mut report = ResidualReport::new();
        report.check("[H,Q_a] = 0", comm, tol);
        report.check("Q_a Q_b = 0", nil, tol);
        report.check("Q_a Q_b^+ + delta sum Q^+Q = 2 delta H", anti, tol);
        report.check("min eig H >= 0", (-min_eig).max(0.0), tol);
        report.diagnostic("min eig H", min_eig);
        Ok(report)
    }

    pub fn spectral(&self, cluster_tol: f64) -> Result<SpectralData<T>> {
        SpectralData::of(&self.h, cluster_tol)
    }
}

/// Clustered spectral resolution `H = sum_E E Lambda_E`.
#[derive(Clone, Debug)]
pub struct SpectralData<T: Real> {
    /// Distinct cluster energies, ascending.
    pub energies: Vec<T>,
    /// `Lambda_E`.
    pub projectors: Vec<CM<T>>,
    /// Orthonormal basis of each eigenspace, as columns.
    pub bases: Vec<CM<T>>,
    pub multiplicities: Vec<usize>,
    /// Largest minus smallest raw eigenvalue inside each cluster.
    pub spreads: Vec<f64>,
}

impl<T: Real> SpectralData<T> {
    /// Diagonalises `h` and groups eigenvalues whose consecutive gaps are at
    /// most `cluster_tol * max(1, max|E|)`. A group reaching within that
    /// distance of zero is pinned to `E = 0`. A group wider than the
    /// threshold is ambiguous and rejected.
    pub fn of(h: &CM<T>, cluster_tol: f64) -> Result<Self> {
        let eig = h.herm_eig(crate::DEFAULT_TOL * h.max_abs().max(1.0))?;
        let values: Vec<f64> = eig.values.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect();
        let scale = values.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
        let eff = cluster_tol * scale;

        let mut groups: Vec<(usize, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=values.len() {
            if i == values.len() || values[i] - values[i - 1] > eff {
                groups.push((start, i));
                start = i;
            }
        }

        let n = h.rows();
        let mut out = SpectralData {
            energies: Vec::new(),
            projectors: Vec::new(),
            bases: Vec::new(),
            multiplicities: Vec::new(),
            spreads: Vec::new(),
        };
        for (lo, hi) in groups {
            let members = &values[lo..hi];
            let spread = members[members.len() - 1] - members[0];
            let mean = members.iter().sum::<f64>() / members.len() as f64;
            if spread > eff {
                return Err(Error::Clustering { energy: mean, spread, tol: eff });
            }
            let energy = if members.iter().any(|v| v.abs() <= eff) { 0.0 } else { mean };
            let columns: Vec<_> = (lo..hi).map(|j| eig.vectors.column(j)).collect();
            let basis = Matrix::from_columns(n, &columns);
            out.projectors.push(&basis * &basis.adjoint());
            out.bases.push(basis);
            out.energies.push(T::lit(energy));
            out.multiplicities.push(hi - lo);
            out.spreads.push(spread);
        }
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }

    fn dim(&self) -> usize {
        self.projectors.first().map_or(0, Matrix::rows)
    }

    /// `max |sum_E Lambda_E - 1|`.
    pub fn completeness_residual(&self) -> f64 {
        let n = self.dim();
        let total = self.projectors.iter().fold(Matrix::zeros(n, n), |acc, p| &acc + p);
        total.distance(&Matrix::identity(n))
    }

    /// `max |Lambda_E Lambda_E' - delta Lambda_E|` over all pairs.
    pub fn orthogonality_residual(&self) -> f64 {
        let mut worst = 0.0_f64;
        for (i, a) in self.projectors.iter().enumerate() {
            for (j, b) in self.projectors.iter().enumerate() {
                let prod = a * b;
                let r = if i == j { prod.distance(a) } else { prod.max_abs() };
                worst = worst.max(r);
            }
        }
        worst
    }

    /// `sum_{E > 0} E^a Lambda_E`.
    ///
    /// Only positive clusters contribute, for every exponent: `a = 0` gives
    /// the projector onto the positive spectrum and negative `a` acts as a
    /// pseudo-inverse power that vanishes on `ker H`.
    pub fn power(&self, a: T) -> CM<T> {
        let n = self.dim();
        self.energies
            .iter()
            .zip(&self.projectors)
            .filter(|(e, _)| **e > T::zero())
            .fold(Matrix::zeros(n, n), |acc, (e, proj)| &acc + &proj.scale_real(e.powf(a)))
    }
}

/// The orthofermion representation carried by one eigenspace of `H`.
#[derive(Clone, Debug)]
pub struct EigenspaceRep<T: Real> {
    pub energy: T,
    /// Orthonormal basis `B_E` of the eigenspace.
    pub basis: CM<T>,
    /// `c_a^(E)`: zero for `E = 0`, else `(2E)^(-1/2) B_E^+ Q_a B_E`.
    pub rep: OrthoRep<Complex<T>>,
    pub decomposition: Decomposition<T>,
    /// Number of canonical copies, `n_E`.
    pub copies: usize,
    /// `max |(1 - Lambda_E) Q_a B_E|`: how far `Q_a` leaks out of the eigenspace.
    pub leakage: f64,
    /// `max |B_E^+ Q_a B_E|`; must vanish when `E = 0`.
    pub restricted_norm: f64,
}

impl<T: Real> EigenspaceRep<T> {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

/// Restricts the charges to every eigenspace and decomposes the resulting
/// orthofermion representations. Positive eigenspaces must split into
/// canonical copies only, so `dim = n_E (p + 1)`.
pub fn eigenspace_reps<T: Real>(
    sys: &OsusySystem<T>,
    spec: &SpectralData<T>,
    tol: f64,
) -> Result<Vec<EigenspaceRep<T>>> {
    let n = sys.dim();
    let mut out = Vec::with_capacity(spec.len());
    for ((&energy, basis), proj) in spec.energies.iter().zip(&spec.bases).zip(&spec.projectors) {
        let e = energy.to_f64().unwrap_or(f64::NAN);
        let complement = &Matrix::identity(n) - proj;
        let bdag = basis.adjoint();
        let mut restricted = Vec::with_capacity(sys.p);
        let mut leakage = 0.0_f64;
        for qa in &sys.q {
            let moved = qa * basis;
            leakage = leakage.max((&complement * &moved).max_abs());
            restricted.push(&bdag * &moved);
        }
        let restricted_norm = restricted.iter().map(Matrix::max_abs).fold(0.0, f64::max);
        let scale = sys.h.max_abs().max(1.0);
        if leakage > tol * scale {
            return Err(Error::not_rep(format!("charges leak out of the eigenspace ({leakage:e})")).at_energy(e));
        }

        let c: Vec<CM<T>> = if energy < T::zero() {
            return Err(Error::not_rep("negative energy").at_energy(e));
        } else if energy == T::zero() {
            if restricted_norm > tol * scale {
                return Err(Error::not_rep(format!("charges do not vanish on ker H ({restricted_norm:e})")).at_energy(e));
            }
            vec![Matrix::zeros(basis.cols(), basis.cols()); sys.p]
        } else {
            let s = (T::lit(2.0) * energy).sqrt().recip();
            restricted.iter().map(|m| m.scale_real(s)).collect()
        };
        let rep = OrthoRep::new(c).map_err(|err| err.at_energy(e))?;
        let decomposition = rep.decompose(tol, DEFAULT_RANK_TOL).map_err(|err| err.at_energy(e))?;
        let copies = decomposition.multiplicity;
        if energy > T::zero() && copies * (sys.p + 1) != basis.cols() {
            return Err(Error::not_rep(format!(
                "eigenspace of dimension {} is not {copies} canonical copies",
                basis.cols()
            ))
            .at_energy(e));
        }
        out.push(EigenspaceRep { energy, basis: basis.clone(), rep, decomposition, copies, leakage, restricted_norm });
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct SusyGenerators<T: Real> {
    /// Parasupersymmetry charge `Q`: `sqrt(2E) L^(E)` on each positive eigenspace.
    pub para: CM<T>,
    /// Fractional charge `𝒬`: `E^(1/(p+1)) F^(E)` on each positive eigenspace.
    pub frac: CM<T>,
    /// `Q~ = Q_1^+ + sum_{a>=2} Q_a^+ Q_{a-1} + Q_p`.
    pub tilde: CM<T>,
}

/// Assembles `Q` and `𝒬` eigenspace by eigenspace from the ladder operators
/// of the restricted representations; both vanish on `ker H`.
pub fn build_generators<T: Real>(sys: &OsusySystem<T>, reps: &[EigenspaceRep<T>]) -> SusyGenerators<T> {
    let n = sys.dim();
    let mut para = Matrix::zeros(n, n);
    let mut frac = Matrix::zeros(n, n);
    let root = T::lit(1.0 / (sys.p as f64 + 1.0));
    for r in reps.iter().filter(|r| r.energy > T::zero()) {
        let l = ladder_from(r.rep.matrices()).scale_real((T::lit(2.0) * r.energy).sqrt());
        let f = cyclic_from(r.rep.matrices()).scale_real(r.energy.powf(root));
        let bdag = r.basis.adjoint();
        para = &para + &(&(&r.basis * &l) * &bdag);
        frac = &frac + &(&(&r.basis * &f) * &bdag);
    }

    let mut tilde = &sys.q[0].adjoint() + &sys.q[sys.p - 1];
    for w in sys.q.windows(2) {
        tilde = &tilde + &(&w[1].adjoint() * &w[0]);
    }
    SusyGenerators { para, frac, tilde }
}

/// `Q_1 + (2H)^(-1/2) sum_{a>=2} Q_{a-1}^+ Q_a`.
pub fn closed_form_para<T: Real>(sys: &OsusySystem<T>, spec: &SpectralData<T>) -> CM<T> {
    let inv_sqrt = spec.power(T::lit(-0.5)).scale_real(T::lit(0.5).sqrt());
    &sys.q[0] + &(&inv_sqrt * &hop_sum(sys))
}

/// `2^(-1/2) H^s Q_1 + 2^(-1) H^(-p/(p+1)) sum Q_{a-1}^+ Q_a + 2^(-1/2) H^s Q_p^+`
/// with the outer exponent `s` supplied by the caller.
pub fn closed_form_frac_with<T: Real>(sys: &OsusySystem<T>, spec: &SpectralData<T>, outer: T) -> CM<T> {
    let p = T::lit(sys.p as f64);
    let half_root = T::lit(0.5).sqrt();
    let h_outer = spec.power(outer).scale_real(half_root);
    let h_inner = spec.power(-p / (p + T::one())).scale_real(T::lit(0.5));
    let ends = &sys.q[0] + &sys.q[sys.p - 1].adjoint();
    &(&h_outer * &ends) + &(&h_inner * &hop_sum(sys))
}

/// Outer exponent matching `E^(1/(p+1)) F^(E)`: `1/(p+1) - 1/2`.
pub fn frac_outer_exponent<T: Real>(p: usize) -> T {
    T::lit(-(p as f64 - 1.0) / (2.0 * (p as f64 + 1.0)))
}

pub fn closed_form_frac<T: Real>(sys: &OsusySystem<T>, spec: &SpectralData<T>) -> CM<T> {
    closed_form_frac_with(sys, spec, frac_outer_exponent(sys.p))
}

/// `sum_{a=2}^p Q_{a-1}^+ Q_a`.
fn hop_sum<T: Real>(sys: &OsusySystem<T>) -> CM<T> {
    sys.q.windows(2).fold(Matrix::zeros(sys.dim(), sys.dim()), |acc, w| &acc + &(&w[0].adjoint() * &w[1]))
}

/// `sum_{k=0}^p Q^{p-k} Q^+ Q^k`.
pub fn para_sum<T: Real>(q: &CM<T>, p: usize) -> CM<T> {
    let qdag = q.adjoint();
    (0..=p as u32).fold(Matrix::zeros(q.rows(), q.cols()), |acc, k| {
        &acc + &(&(&q.pow(p as u32 - k) * &qdag) * &q.pow(k))
    })
}

/// Identity suite for the generators. Thresholds are `tol * max|H|^d` with
/// `d` the degree of the identity in units of `H` (each charge counts 1/2).
///
/// The sum rule comes out as `sum Q^{p-k} Q^+ Q^k = 2p Q^{p-1} H` for the
/// charge normalised by `sqrt(2E)`; the coefficient-`p` variant is recorded
/// as a diagnostic, and so is the fractional closed form with outer exponent
/// `-(p-1)/(p+1)`. For `p = 1` the sum rule is skipped (`Q^0` is ambiguous
/// on `ker H`).
pub fn check_generators<T: Real>(
    sys: &OsusySystem<T>,
    spec: &SpectralData<T>,
    gens: &SusyGenerators<T>,
    tol: f64,
) -> ResidualReport {
    let p = sys.p;
    let n = sys.dim();
    let h = &sys.h;
    let hmax = h.max_abs();
    let thr = |degree: f64| if hmax > 0.0 { tol * hmax.powf(degree) } else { tol };
    let q = &gens.para;
    let pp = p as u32;
    let mut r = ResidualReport::new();

    r.check("Q^(p+1) = 0", q.pow(pp + 1).max_abs(), thr((p as f64 + 1.0) / 2.0));
    if p >= 2 {
        let lhs = para_sum(q, p);
        let qh = &q.pow(pp - 1) * h;
        let two_p = T::lit(2.0 * p as f64);
        r.check("sum Q^(p-k) Q^+ Q^k = 2p Q^(p-1) H", lhs.distance(&qh.scale_real(two_p)), thr((p as f64 + 1.0) / 2.0));
        r.diagnostic("sum Q^(p-k) Q^+ Q^k - p Q^(p-1) H", lhs.distance(&qh.scale_real(T::lit(p as f64))));
    } else {
        r.notice("p = 1: parasupersymmetry sum rule skipped (Q^0 convention)");
    }
    r.check("𝒬^(p+1) = H", gens.frac.pow(pp + 1).distance(h), thr(1.0));
    let two_h = h.scale_real(T::lit(2.0));
    r.check("Q~^(p+1) = (2H)^p", gens.tilde.pow(pp + 1).distance(&two_h.pow(pp)), thr(p as f64));
    r.check("[Q,H] = 0", q.commutator(h).max_abs(), thr(1.5));
    r.check("[𝒬,H] = 0", gens.frac.commutator(h).max_abs(), thr(1.0 + 1.0 / (p as f64 + 1.0)));
    r.check("Q = closed form", q.distance(&closed_form_para(sys, spec)), thr(0.5));
    r.check("𝒬 = closed form", gens.frac.distance(&closed_form_frac(sys, spec)), thr(1.0 / (p as f64 + 1.0)));
    let full = T::lit(-(p as f64 - 1.0) / (p as f64 + 1.0));
    r.diagnostic("𝒬 - closed form with exponent -(p-1)/(p+1)", gens.frac.distance(&closed_form_frac_with(sys, spec, full)));
    r.diagnostic("dim", n as f64);
    r
}

/// Full pipeline: model, relations, spectrum, eigenspace decompositions,
/// generators and their identity suite.
#[derive(Clone, Debug)]
pub struct Analysis<T: Real> {
    pub system: OsusySystem<T>,
    pub spectral: SpectralData<T>,
    pub eigenspaces: Vec<EigenspaceRep<T>>,
    pub generators: SusyGenerators<T>,
    pub report: ResidualReport,
}

pub fn analyze<T: Real>(p: usize, levels: usize, tol: f64, cluster_tol: f64) -> Result<Analysis<T>> {
    let system = OsusySystem::<T>::build(p, levels)?;
    let spectral = system.spectral(cluster_tol)?;
    let eigenspaces = eigenspace_reps(&system, &spectral, tol)?;
    let generators = build_generators(&system, &eigenspaces);

    let mut report = ResidualReport::new();
    report.absorb("relations: ", system.relations(tol)?);
    let mut spectrum = ResidualReport::new();
    spectrum.check("sum Lambda_E = 1", spectral.completeness_residual(), tol);
    spectrum.check("Lambda_E Lambda_E' = delta Lambda_E", spectral.orthogonality_residual(), tol);
    let positive = spectral.power(T::zero());
    spectrum.check("H^1 = H", spectral.power(T::one()).distance(&system.h), tol * system.h.max_abs().max(1.0));
    let inv_sqrt = spectral.power(T::lit(-0.5));
    spectrum.check("(H^(-1/2))^2 H = Lambda_(E>0)", (&(&inv_sqrt * &inv_sqrt) * &system.h).distance(&positive), tol);
    report.absorb("spectral: ", spectrum);
    let mut degeneracy = ResidualReport::new();
    for es in &eigenspaces {
        let e = es.energy.to_f64().unwrap_or(f64::NAN);
        if es.energy > T::zero() {
            let rem = (es.dim() % (p + 1)) as f64;
            degeneracy.check(format!("E={e:.6}: dim divisible by p+1"), rem, 0.0);
        } else {
            degeneracy.check(format!("E={e:.6}: Q_a^(0) = 0"), es.restricted_norm, tol);
        }
    }
    report.absorb("degeneracy: ", degeneracy);
    report.absorb("generators: ", check_generators(&system, &spectral, &generators, tol));
    Ok(Analysis { system, spectral, eigenspaces, generators, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_state;
    use crate::CMatrix;

    fn sys(p: usize, levels: usize) -> OsusySystem<f64> {
        OsusySystem::build(p, levels).unwrap()
    }

    #[test]
    fn truncation_error() {
        assert_eq!(OsusySystem::<f64>::build(2, 1).unwrap_err(), Error::Truncation(1));
        assert_eq!(OsusySystem::<f64>::build(0, 3).unwrap_err(), Error::Order(0));
    }

    #[test]
    fn hamiltonian_is_diagonal_number_form() {
        // H = N (x) Pi + a a^+ (x) (1 - Pi): diagonal with integer entries
        let s = sys(2, 4);
        let expected: Vec<f64> = (0..4)
            .flat_map(|n| {
                let top = if n + 1 < 4 { (n + 1) as f64 } else { 0.0 };
                [n as f64, top, top]
            })
            .collect();
        assert!(s.h.distance(&CMatrix::from_real_diag(&expected)) < 1e-14);
    }

    #[test]
    fn small_system_shapes() {
        let s = sys(1, 2);
        assert_eq!(s.dim(), 4);
        assert_eq!(s.q(1).orthonormal_range(1e-8).cols(), 1);
        assert!(s.relations(1e-12).unwrap().all_pass());
    }

    #[test]
    fn expectation_of_h_nonnegative() {
        for (p, levels) in [(1, 3), (2, 4), (3, 5)] {
            let s = sys(p, levels);
            for seed in 0..100 {
                let psi = random_state::<f64>(s.dim(), seed);
                let e = (&(&psi.adjoint() * &s.h) * &psi)[(0, 0)];
                assert!(e.re >= -1e-14 && e.im.abs() < 1e-14);
            }
        }
    }

    #[test]
    fn spectrum_p2_levels4() {
        let s = sys(2, 4);
        let spec = s.spectral(1e-8).unwrap();
        assert_eq!(spec.energies.len(), 4);
        for (e, want) in spec.energies.iter().zip([0.0, 1.0, 2.0, 3.0]) {
            assert!((e - want).abs() < 1e-12);
        }
        assert_eq!(spec.multiplicities, vec![3, 3, 3, 3]);
    }

    #[test]
    fn spectral_of_diagonal_matrix() {
        let h = CMatrix::from_real_diag(&[2.0, 0.5, 2.0, 5.0]);
        let spec = SpectralData::of(&h, 1e-8).unwrap();
        assert_eq!(spec.energies, vec![0.5, 2.0, 5.0]);
        assert_eq!(spec.multiplicities, vec![1, 2, 1]);
    }

    #[test]
    fn ambiguous_clustering_rejected() {
        let h = CMatrix::from_real_diag(&[1.0, 1.0 + 0.8e-8, 1.0 + 1.6e-8]);
        assert!(matches!(SpectralData::of(&h, 1e-8), Err(Error::Clustering { .. })));
    }

    #[test]
    fn completeness_p3_levels5() {
        let spec = sys(3, 5).spectral(1e-8).unwrap();
        assert!(spec.completeness_residual() < 1e-10);
        assert!(spec.orthogonality_residual() < 1e-10);
    }

    #[test]
    fn eigenspace_reps_p2_levels4() {
        let s = sys(2, 4);
        let spec = s.spectral(1e-8).unwrap();
        let reps = eigenspace_reps(&s, &spec, 1e-10).unwrap();
        let zero = &reps[0];
        assert_eq!(zero.energy, 0.0);
        assert_eq!((zero.decomposition.multiplicity, zero.decomposition.trivial_dim), (0, 3));
        let one = &reps[1];
        assert!((one.energy - 1.0).abs() < 1e-12);
        assert_eq!((one.copies, one.dim()), (1, 3));
        assert!(reps[1..].iter().all(|r| r.dim() % 3 == 0));
    }

    #[test]
    fn spectral_power_examples() {
        let s = sys(2, 4);
        let spec = s.spectral(1e-8).unwrap();
        assert!(spec.power(1.0).distance(&s.h) < 1e-10);
        let positive = spec.power(0.0);
        let kernel = &CMatrix::identity(s.dim()) - &spec.projectors[0];
        assert!(positive.distance(&kernel) < 1e-12);
        let m = spec.power(-0.5);
        assert!((&(&m * &m) * &s.h).distance(&positive) < 1e-9);
    }

    #[test]
    fn generator_identities_p2_levels4() {
        let a = analyze::<f64>(2, 4, 1e-10, 1e-8).unwrap();
        let h = &a.system.h;
        assert!(a.generators.para.pow(3).max_abs() < 1e-9);
        assert!(a.generators.frac.pow(3).distance(h) < 1e-9);
        let two_h = h.scale_real(2.0);
        assert!(a.generators.tilde.pow(3).distance(&two_h.pow(2)) < 1e-8);
        assert!(a.report.all_pass(), "{:?}", a.report.failures());
    }

    #[test]
    fn closed_form_para_matches_spectral() {
        let a = analyze::<f64>(2, 4, 1e-10, 1e-8).unwrap();
        assert!(a.generators.para.distance(&closed_form_para(&a.system, &a.spectral)) < 1e-9);
    }

    #[test]
    fn sum_rule_coefficient_is_two_p() {
        // the sqrt(2E) normalisation doubles the coefficient of the canonical L identity
        let a = analyze::<f64>(3, 5, 1e-10, 1e-8).unwrap();
        let q = &a.generators.para;
        let lhs = para_sum(q, 3);
        let qh = &q.pow(2) * &a.system.h;
        assert!(lhs.distance(&qh.scale_real(6.0)) < 1e-8);
        assert!(lhs.distance(&qh.scale_real(3.0)) > 1.0);
    }

    #[test]
    fn frac_closed_form_needs_halved_outer_exponent() {
        let a = analyze::<f64>(2, 4, 1e-10, 1e-8).unwrap();
        let good = closed_form_frac(&a.system, &a.spectral);
        assert!(a.generators.frac.distance(&good) < 1e-9);
        let full = closed_form_frac_with(&a.system, &a.spectral, -1.0 / 3.0);
        assert!(a.generators.frac.distance(&full) > 1e-2);
    }

    #[test]
    fn p1_skips_sum_rule() {
        let a = analyze::<f64>(1, 2, 1e-10, 1e-8).unwrap();
        assert!(a.report.all_pass());
        assert!(a.report.notices().iter().any(|n| n.contains("sum rule skipped")));
        assert!(a.report.checks().all(|(k, _)| !k.contains("sum Q^(p-k)")));
    }

    #[test]
    fn single_precision_pipeline() {
        let a = analyze::<f32>(2, 3, 1e-4, 1e-4).unwrap();
        assert_eq!(a.spectral.multiplicities, vec![3, 3, 3]);
        assert!(a.report.all_pass(), "{:?}", a.report.failures());
    }
}
