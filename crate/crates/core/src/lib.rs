//! Orthofermion algebra of order `p`: the abstract algebra, its canonical
//! irreducible representation and ladder operators, decomposition of
//! arbitrary representations into canonical and trivial blocks, and the
//! parasupersymmetry / fractional supersymmetry generators of an
//! orthosupersymmetric system, all checked on concrete matrices.
//!
//! Matrix code is generic over the entry [`Scalar`]; the numerical parts are
//! generic over the [`Real`] float type. Concrete aliases below cover the
//! common cases.

pub mod algebra;
pub mod canonical;
pub mod error;
pub mod linalg;
pub mod osusy;
pub mod random;
pub mod report;
pub mod reptheory;
pub mod scalar;

use num_complex::Complex;

pub use algebra::{AlgebraElement, Generator, StructureTable};
pub use canonical::{canonical, ladder_f, ladder_identities, ladder_l, pi_of, CanonicalRep};
pub use error::{Error, Result};
pub use linalg::{HermEig, Matrix};
pub use osusy::{OsusySystem, SpectralData, SusyGenerators};
pub use random::{random_hermitian, random_state, random_unitary};
pub use report::{Check, ResidualReport};
pub use reptheory::{Decomposition, OrthoRep};
pub use scalar::{Real, Scalar};

/// Double-precision complex matrix.
pub type CMatrix = Matrix<Complex<f64>>;
/// Single-precision complex matrix.
pub type CMatrix32 = Matrix<Complex<f32>>;
/// Gaussian-integer matrix; arithmetic is exact.
pub type ZMatrix = Matrix<Complex<i64>>;

pub type Rep = OrthoRep<Complex<f64>>;
pub type Rep32 = OrthoRep<Complex<f32>>;
pub type ExactRep = OrthoRep<Complex<i64>>;
pub type System = OsusySystem<f64>;

/// Default relation tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Default relative rank / clustering threshold.
pub const DEFAULT_RANK_TOL: f64 = 1e-8;
