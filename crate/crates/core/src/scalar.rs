use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{Float, FromPrimitive, Num, One, ToPrimitive, Zero};

/// Matrix entry type: a commutative ring with a conjugation.
///
/// Implemented for `Complex<T>` over any signed numeric `T`, so the same
/// operator code runs on Gaussian integers (exact) and on `f32`/`f64`.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn conj(&self) -> Self;

    /// Modulus as `f64`, used for residual norms regardless of the entry type.
    fn modulus(&self) -> f64;

    fn from_i64(n: i64) -> Self;
}

impl<T> Scalar for Complex<T>
where
    T: Clone + Num + Neg<Output = T> + ToPrimitive + FromPrimitive + Debug + Send + Sync + 'static,
{
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn modulus(&self) -> f64 {
        let re = self.re.to_f64().unwrap_or(f64::NAN);
        let im = self.im.to_f64().unwrap_or(f64::NAN);
        re.hypot(im)
    }

    fn from_i64(n: i64) -> Self {
        Complex::new(T::from_i64(n).expect("integer constant out of range"), T::zero())
    }
}

/// Floating-point real type underlying the numerical algorithms (f32 or f64).
pub trait Real: Float + FromPrimitive + ToPrimitive + Debug + Send + Sync + 'static {
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal not representable")
    }

    fn eps() -> Self {
        Self::epsilon()
    }
}

impl<T> Real for T where T: Float + FromPrimitive + ToPrimitive + Debug + Send + Sync + 'static {}
