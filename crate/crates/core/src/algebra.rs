//! The abstract orthofermion algebra of order `p` as a structure-constant
//! algebra on the `(p+1)^2` basis `{Pi, c_a, c_a^+, c_a^+ c_b}`.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Basis monomials. Orthofermion indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Pi,
    C(usize),
    CDag(usize),
    /// `c_a^+ c_b`
    CDagC(usize, usize),
}

impl Generator {
    /// Product of two basis monomials; `None` is zero.
    ///
    /// Every structure constant is 0 or 1, read off from
    /// `c_a c_b = 0`, `c_a c_b^+ = delta_ab Pi`, `Pi c_a = c_a`, `c_a Pi = 0`
    /// and their adjoints.
    pub fn product(self, rhs: Generator) -> Option<Generator> {
        use Generator::*;
        match (self, rhs) {
            (Pi, Pi) => Some(Pi),
            (Pi, C(a)) => Some(C(a)),
            (Pi, CDag(_)) | (Pi, CDagC(..)) => None,

            (C(_), Pi) | (C(_), C(_)) => None,
            (C(a), CDag(b)) => (a == b).then_some(Pi),
            (C(a), CDagC(b, g)) => (a == b).then_some(C(g)),

            (CDag(a), Pi) => Some(CDag(a)),
            (CDag(a), C(b)) => Some(CDagC(a, b)),
            (CDag(_), CDag(_)) | (CDag(_), CDagC(..)) => None,

            (CDagC(..), Pi) | (CDagC(..), C(_)) => None,
            (CDagC(a, b), CDag(g)) => (b == g).then_some(CDag(a)),
            (CDagC(a, b), CDagC(g, d)) => (b == g).then_some(CDagC(a, d)),
        }
    }

    pub fn adjoint(self) -> Generator {
        use Generator::*;
        match self {
            Pi => Pi,
            C(a) => CDag(a),
            CDag(a) => C(a),
            CDagC(a, b) => CDagC(b, a),
        }
    }

    /// Position of the matrix unit this monomial maps to under the canonical
    /// representation (zero-based row, column).
    pub fn matrix_unit(self) -> (usize, usize) {
        use Generator::*;
        match self {
            Pi => (0, 0),
            C(a) => (0, a),
            CDag(a) => (a, 0),
            CDagC(a, b) => (a, b),
        }
    }

    /// All `(p+1)^2` basis monomials in coefficient order.
    pub fn basis(p: usize) -> Vec<Generator> {
        let mut out = vec![Generator::Pi];
        out.extend((1..=p).map(Generator::C));
        out.extend((1..=p).map(Generator::CDag));
        for a in 1..=p {
            out.extend((1..=p).map(|b| Generator::CDagC(a, b)));
        }
        out
    }

    fn index(self, p: usize) -> usize {
        use Generator::*;
        match self {
            Pi => 0,
            C(a) => a,
            CDag(a) => p + a,
            CDagC(a, b) => 2 * p + (a - 1) * p + b,
        }
    }
}

/// Tabulated products of basis monomials for one order `p`.
#[derive(Clone, Debug)]
pub struct StructureTable {
    p: usize,
    table: Vec<Option<usize>>,
}

impl StructureTable {
    pub fn new(p: usize) -> Self {
        let basis = Generator::basis(p);
        let table = basis
            .iter()
            .flat_map(|&x| basis.iter().map(move |&y| x.product(y).map(|g| g.index(p))))
            .collect();
        StructureTable { p, table }
    }

    pub fn dim(&self) -> usize {
        (self.p + 1) * (self.p + 1)
    }

    pub fn mul<S: Scalar>(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        if x.p != self.p || y.p != self.p {
            return Err(Error::Order(if x.p != self.p { x.p } else { y.p }));
        }
        let n = self.dim();
        let (xc, yc) = (x.coefficients(), y.coefficients());
        let mut out = vec![S::zero(); n];
        for (i, xi) in xc.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in yc.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                if let Some(k) = self.table[i * n + j] {
                    out[k] = out[k].clone() + xi.clone() * yj.clone();
                }
            }
        }
        AlgebraElement::from_coefficients(self.p, out)
    }
}

/// `x = lambda Pi + sum (nu_a c_a + mu_a c_a^+) + sum sigma_ab c_a^+ c_b`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<S> {
    pub p: usize,
    pub lambda: S,
    pub nu: Vec<S>,
    pub mu: Vec<S>,
    /// `p x p`, entry `(a-1, b-1)` multiplies `c_a^+ c_b`.
    pub sigma: Matrix<S>,
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero(p: usize) -> Self {
        AlgebraElement { p, lambda: S::zero(), nu: vec![S::zero(); p], mu: vec![S::zero(); p], sigma: Matrix::zeros(p, p) }
    }

    /// The adjoined unit, `1 = Pi + sum_a c_a^+ c_a`.
    pub fn unit(p: usize) -> Self {
        AlgebraElement { lambda: S::one(), sigma: Matrix::identity(p), ..Self::zero(p) }
    }

    pub fn generator(p: usize, g: Generator) -> Self {
        Self::zero(p).with(g, S::one())
    }

    pub fn with(mut self, g: Generator, value: S) -> Self {
        *self.coefficient_mut(g) = value;
        self
    }

    pub fn coefficient_mut(&mut self, g: Generator) -> &mut S {
        match g {
            Generator::Pi => &mut self.lambda,
            Generator::C(a) => &mut self.nu[a - 1],
            Generator::CDag(a) => &mut self.mu[a - 1],
            Generator::CDagC(a, b) => &mut self.sigma[(a - 1, b - 1)],
        }
    }

    pub fn coefficients(&self) -> Vec<S> {
        let mut out = Vec::with_capacity((self.p + 1) * (self.p + 1));
        out.push(self.lambda.clone());
        out.extend(self.nu.iter().cloned());
        out.extend(self.mu.iter().cloned());
        out.extend(self.sigma.as_slice().iter().cloned());
        out
    }

    pub fn from_coefficients(p: usize, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != (p + 1) * (p + 1) {
            return Err(Error::InvalidData(format!(
                "{} coefficients for an order-{p} algebra element",
                coeffs.len()
            )));
        }
        let mut it = coeffs.into_iter();
        let lambda = it.next().expect("length checked");
        let nu: Vec<S> = it.by_ref().take(p).collect();
        let mu: Vec<S> = it.by_ref().take(p).collect();
        let sigma = Matrix::new(p, p, it.collect())?;
        Ok(AlgebraElement { p, lambda, nu, mu, sigma })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        StructureTable::new(self.p).mul(self, rhs)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.p != rhs.p {
            return Err(Error::Order(rhs.p));
        }
        let coeffs = self.coefficients().into_iter().zip(rhs.coefficients()).map(|(a, b)| a + b).collect();
        Self::from_coefficients(self.p, coeffs)
    }

    /// The `*` operation: conjugate `lambda`, swap-conjugate `nu`/`mu`,
    /// conjugate-transpose `sigma`.
    pub fn adjoint(&self) -> Self {
        AlgebraElement {
            p: self.p,
            lambda: self.lambda.conj(),
            nu: self.mu.iter().map(Scalar::conj).collect(),
            mu: self.nu.iter().map(Scalar::conj).collect(),
            sigma: self.sigma.adjoint(),
        }
    }

    /// Image under the canonical representation as a `(p+1) x (p+1)` matrix.
    pub fn rho0(&self) -> Matrix<S> {
        let n = self.p + 1;
        let mut m = Matrix::zeros(n, n);
        for (g, v) in Generator::basis(self.p).into_iter().zip(self.coefficients()) {
            let (i, j) = g.matrix_unit();
            m[(i, j)] = v;
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients().iter().all(|z| z.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::ZMatrix;
    use num_complex::Complex;

    type Z = Complex<i64>;
    type El = AlgebraElement<Z>;

    fn g(p: usize, g: Generator) -> El {
        El::generator(p, g)
    }

    #[test]
    fn c_times_cdag_is_pi() {
        let x = g(1, Generator::C(1)).mul(&g(1, Generator::CDag(1))).unwrap();
        assert_eq!(x, g(1, Generator::Pi));
    }

    #[test]
    fn c1_times_c2_vanishes() {
        assert!(g(2, Generator::C(1)).mul(&g(2, Generator::C(2))).unwrap().is_zero());
    }

    #[test]
    fn pi_idempotent() {
        assert_eq!(g(3, Generator::Pi).mul(&g(3, Generator::Pi)).unwrap(), g(3, Generator::Pi));
    }

    #[test]
    fn order_mismatch() {
        assert_eq!(g(2, Generator::Pi).mul(&g(3, Generator::Pi)), Err(Error::Order(3)));
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(g(2, Generator::Pi).adjoint(), g(2, Generator::Pi));
        assert_eq!(g(2, Generator::C(2)).adjoint(), g(2, Generator::CDag(2)));
        let x = El::zero(2).with(Generator::CDagC(1, 2), Z::new(2, 1));
        let y = El::zero(2).with(Generator::CDagC(2, 1), Z::new(2, -1));
        assert_eq!(x.adjoint(), y);
    }

    #[test]
    fn rho0_examples() {
        assert_eq!(g(2, Generator::C(1)).rho0(), ZMatrix::unit(3, 0, 1));
        assert_eq!(g(2, Generator::Pi).rho0(), ZMatrix::unit(3, 0, 0));
        let ones = El::from_coefficients(1, vec![Z::new(1, 0); 4]).unwrap();
        assert_eq!(ones.rho0(), ZMatrix::from_fn(2, 2, |_, _| Z::new(1, 0)));
    }

    #[test]
    fn unit_maps_to_identity_and_acts_as_unit() {
        for p in 1..=4 {
            let one = El::unit(p);
            assert_eq!(one.rho0(), ZMatrix::identity(p + 1));
            for b in Generator::basis(p) {
                assert_eq!(one.mul(&g(p, b)).unwrap(), g(p, b));
                assert_eq!(g(p, b).mul(&one).unwrap(), g(p, b));
            }
        }
    }

    #[test]
    fn associative_on_basis_triples() {
        for p in 1..=3 {
            let table = StructureTable::new(p);
            let basis: Vec<El> = Generator::basis(p).into_iter().map(|b| g(p, b)).collect();
            for x in &basis {
                for y in &basis {
                    let xy = table.mul(x, y).unwrap();
                    for z in &basis {
                        let left = table.mul(&xy, z).unwrap();
                        let right = table.mul(x, &table.mul(y, z).unwrap()).unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn rho0_is_bijective_on_basis() {
        for p in 1..=4 {
            let mut seen = std::collections::HashSet::new();
            for b in Generator::basis(p) {
                let m = g(p, b).rho0();
                assert_eq!(m.as_slice().iter().filter(|z| !z.is_zero()).count(), 1);
                assert!(seen.insert(b.matrix_unit()));
            }
            assert_eq!(seen.len(), (p + 1) * (p + 1));
        }
    }
}
