//! The canonical `(p+1)`-dimensional irreducible representation, the vacuum
//! projector and the ladder operators `L`, `F`.
//!
//! Basis: ket `|n>` is zero-based matrix row/column `n`, so `|0>` is the
//! vacuum and `|a> = c_a^+ |0>`.

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::report::ResidualReport;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalRep<S> {
    pub p: usize,
    /// `c[a - 1]` represents `c_a`.
    pub c: Vec<Matrix<S>>,
}

/// `[c_a]_{ij} = delta_{i,0} delta_{j,a}` (zero-based).
pub fn canonical<S: Scalar>(p: usize) -> Result<CanonicalRep<S>> {
    if p < 1 {
        return Err(Error::Order(p));
    }
    let c = (1..=p).map(|a| Matrix::unit(p + 1, 0, a)).collect();
    Ok(CanonicalRep { p, c })
}

impl<S: Scalar> CanonicalRep<S> {
    pub fn dim(&self) -> usize {
        self.p + 1
    }

    /// `c_a`, 1-based.
    pub fn c(&self, a: usize) -> &Matrix<S> {
        &self.c[a - 1]
    }

    pub fn pi(&self) -> Matrix<S> {
        pi_of(&self.c, &Matrix::identity(self.dim())).expect("canonical shapes agree")
    }

    pub fn ket(&self, n: usize) -> Matrix<S> {
        Matrix::from_fn(self.dim(), 1, |i, _| if i == n { S::one() } else { S::zero() })
    }
}

/// `Pi = unit - sum_a c_a^+ c_a`.
pub fn pi_of<S: Scalar>(c: &[Matrix<S>], unit: &Matrix<S>) -> Result<Matrix<S>> {
    let mut pi = unit.clone();
    for m in c {
        let n = m.adjoint().matmul(m)?;
        pi = pi.try_sub(&n)?;
    }
    Ok(pi)
}

/// `L = c_1 + sum_{a=2}^p c_{a-1}^+ c_a` for any family of matrices.
pub fn ladder_from<S: Scalar>(c: &[Matrix<S>]) -> Matrix<S> {
    let mut l = c[0].clone();
    for w in c.windows(2) {
        l = &l + &(&w[0].adjoint() * &w[1]);
    }
    l
}

/// `F = L + c_p^+`.
pub fn cyclic_from<S: Scalar>(c: &[Matrix<S>]) -> Matrix<S> {
    let last = c.last().expect("at least one generator");
    &ladder_from(c) + &last.adjoint()
}

pub fn ladder_l<S: Scalar>(p: usize) -> Result<Matrix<S>> {
    Ok(ladder_from(&canonical::<S>(p)?.c))
}

pub fn ladder_f<S: Scalar>(p: usize) -> Result<Matrix<S>> {
    Ok(cyclic_from(&canonical::<S>(p)?.c))
}

/// Evaluates the ladder-operator identity catalogue on the canonical
/// representation. Each entry is `max_abs(lhs - rhs)` against `tol`.
///
/// Conventions at the edges: `L^0 = 1`, and `c_0 = Pi` wherever `c_{p-1}`
/// appears with `p = 1`. The identity `L^{p-k} L^+ L^k = L^{p-1}` is checked
/// for `k` in `1..p`; at `k = p` the left side is `L^+ L^p`, covered by its
/// own entry.
pub fn ladder_identities<S: Scalar>(p: usize, tol: f64) -> Result<ResidualReport> {
    let rep = canonical::<S>(p)?;
    let n = rep.dim();
    let one = Matrix::<S>::identity(n);
    let pi = rep.pi();
    let l = ladder_from(&rep.c);
    let ldag = l.adjoint();
    let f = cyclic_from(&rep.c);
    let cp = rep.c(p);
    let c_or_pi = |k: usize| if k == 0 { pi.clone() } else { rep.c(k).clone() };
    let lpow = |k: usize| l.pow(k as u32);

    let mut report = ResidualReport::new();
    let mut put = |name: String, lhs: Matrix<S>, rhs: Matrix<S>| report.check(name, lhs.distance(&rhs), tol);

    put("LdagL=1-Pi".into(), &ldag * &l, &one - &pi);
    put("LLdag=1-cp^+cp".into(), &l * &ldag, &one - &(&cp.adjoint() * cp));
    for k in 1..=p + 2 {
        let closed = if k < p {
            let mut m = rep.c(k).clone();
            for a in 1..=p - k {
                m = &m + &(&rep.c(a).adjoint() * rep.c(a + k));
            }
            m
        } else if k == p {
            cp.clone()
        } else {
            Matrix::zeros(n, n)
        };
        put(format!("L^k=closed_form[k={k}]"), lpow(k), closed);
    }
    put("L^pLdag=c_(p-1)".into(), &lpow(p) * &ldag, c_or_pi(p - 1));
    put("LdagL^p=L^(p-1)-c_(p-1)".into(), &ldag * &lpow(p), &lpow(p - 1) - &c_or_pi(p - 1));
    for k in 1..=p {
        put(format!("L^kPi=0[k={k}]"), &lpow(k) * &pi, Matrix::zeros(n, n));
        put(format!("PiL^k=c_k[k={k}]"), &pi * &lpow(k), rep.c(k).clone());
    }
    for k in 1..p {
        put(format!("L^(p-k)LdagL^k=L^(p-1)[k={k}]"), &(&lpow(p - k) * &ldag) * &lpow(k), lpow(p - 1));
    }
    put("L^(p+1)=0".into(), lpow(p + 1), Matrix::zeros(n, n));
    let sum = linalg::sum((0..=p).map(|k| &(&lpow(p - k) * &ldag) * &lpow(k)).collect::<Vec<_>>().iter())
        .expect("p >= 1");
    put("parasusy_sum".into(), sum, lpow(p - 1).scale(&S::from_i64(p as i64)));
    put("F^(p+1)=1".into(), f.pow(p as u32 + 1), one.clone());
    put("F-L=cp^+".into(), &f - &l, cp.adjoint());
    Ok(report)
}
