//! Coefficient arithmetic for the two scalar modes.
//!
//! Every computation in this crate runs either in exact rational arithmetic
//! ([`Exact`]) or in double precision (`f64`). The mode is fixed by the type
//! parameter threaded through the algebra, so mixing modes inside one
//! computation is a compile error rather than a runtime surprise.

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Absolute per-component tolerance for float-mode comparisons.
///
/// Everything compared in this crate is a short product of unit-vector
/// components, so magnitudes stay O(1) and a fixed absolute tolerance works.
pub const FLOAT_TOL: f64 = 1e-12;

/// Exact scalar mode: arbitrary-precision rationals, kept in reduced form.
pub type Exact = BigRational;

/// A coefficient field the bivector algebra can be built over.
///
/// Implemented for [`Exact`] and `f64`. Equality, unit-norm validation and
/// constant construction are the only places the two modes behave
/// differently, so those are the only trait hooks.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(n: i64) -> Self;

    /// The fraction `num/den`.
    ///
    /// Panics if `den` is zero; callers validate denominators first.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Lossless in exact mode, nearest double in float mode.
    fn from_exact(value: &Exact) -> Self;

    /// False only for float-mode NaN or infinity.
    fn is_finite_value(&self) -> bool;

    /// Mode-appropriate equality: exact comparison in rational mode,
    /// absolute difference within [`FLOAT_TOL`] in float mode.
    fn close_to(&self, other: &Self) -> bool;

    /// Multiplier that rescales a vector of squared norm `norm_sq` to unit
    /// length, or `None` if the vector is not acceptably unit. Exact mode
    /// demands squared norm exactly 1; float mode accepts a norm within
    /// [`FLOAT_TOL`] of 1 and renormalizes.
    fn unit_scale(norm_sq: &Self) -> Option<Self>;

    fn is_negative_value(&self) -> bool;

    fn to_f64(&self) -> f64;
}

impl Scalar for Exact {
    fn from_int(n: i64) -> Self {
        Exact::from_integer(n.into())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Exact::new(num.into(), den.into())
    }

    fn from_exact(value: &Exact) -> Self {
        value.clone()
    }

    fn is_finite_value(&self) -> bool {
        true
    }

    fn close_to(&self, other: &Self) -> bool {
        self == other
    }

    fn unit_scale(norm_sq: &Self) -> Option<Self> {
        if norm_sq.is_one() {
            Some(Self::one())
        } else {
            None
        }
    }

    fn is_negative_value(&self) -> bool {
        self.is_negative()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn from_exact(value: &Exact) -> Self {
        ToPrimitive::to_f64(value).unwrap_or(f64::NAN)
    }

    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }

    fn close_to(&self, other: &Self) -> bool {
        (self - other).abs() <= FLOAT_TOL
    }

    fn unit_scale(norm_sq: &Self) -> Option<Self> {
        let norm = norm_sq.sqrt();
        if (norm - 1.0).abs() <= FLOAT_TOL {
            Some(1.0 / norm)
        } else {
            None
        }
    }

    fn is_negative_value(&self) -> bool {
        *self < 0.0
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_ratio_reduces() {
        assert_eq!(Exact::from_ratio(6, 10), Exact::from_ratio(3, 5));
        assert_eq!(Exact::from_ratio(3, 5).to_string(), "3/5");
        assert_eq!(Exact::from_ratio(-4, 2).to_string(), "-2");
    }

    #[test]
    fn float_close_to_uses_absolute_tolerance() {
        assert!(1.0f64.close_to(&(1.0 + 0.5e-12)));
        assert!(!1.0f64.close_to(&(1.0 + 1.0e-11)));
    }

    #[test]
    fn unit_scale_exact_requires_exact_norm() {
        assert!(Exact::unit_scale(&Exact::from_int(1)).is_some());
        assert!(Exact::unit_scale(&Exact::from_ratio(99, 100)).is_none());
    }

    #[test]
    fn unit_scale_float_renormalizes_within_tolerance() {
        let n2 = (1.0 + 5e-13f64).powi(2);
        let c = f64::unit_scale(&n2).unwrap();
        assert!((c * (1.0 + 5e-13) - 1.0).abs() < 1e-15);
        assert!(f64::unit_scale(&1.1).is_none());
    }
}
