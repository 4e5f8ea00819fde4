//! The even subalgebra of Cl(3,0): quaternions presented on a bivector basis.
//!
//! Elements are `s + x1*b1 + x2*b2 + x3*b3`, where the basis bivectors
//! multiply by the structure constants
//!
//! ```text
//! b_j b_k = -delta_jk - sum_l eps_jkl b_l
//! ```
//!
//! (Kronecker delta, Levi-Civita epsilon). The product is associative and
//! noncommutative, `1` is a two-sided identity, and every nonzero element
//! has an inverse. Unit pure bivectors square to `-1`.
//!
//! On top of the fixed basis sit the sign-dependent bases
//! `b_j(lambda) = lambda * b_j` for `lambda = +1, -1`. Their multiplication
//! table can be tabulated two ways, selected by [`TableMode`]:
//!
//! * [`TableMode::Correct`] expands products in terms of the sign-dependent
//!   basis itself: `-delta_jk - sum_l lambda eps_jkl b_l(lambda)`. This
//!   agrees with the actual product for every `lambda`.
//! * [`TableMode::Erroneous`] substitutes the fixed basis where the
//!   sign-dependent basis belongs: `-delta_jk - sum_l lambda eps_jkl b_l`.
//!   For `lambda = -1` this drops a sign factor and flips the bivector part
//!   of every off-diagonal entry.
//!
//! All values are immutable; every operation is a pure function.

use crate::scalar::Scalar;
use rand::Rng;
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};

/// Errors from constructing or inverting algebra elements.
#[derive(Debug, thiserror::Error)]
pub enum GaError {
    #[error("basis index {0} out of range (expected 1, 2 or 3)")]
    BasisIndex(usize),
    #[error("cannot invert the zero element")]
    ZeroInverse,
    #[error("not a unit vector: squared norm {0}")]
    NotUnit(String),
    #[error("non-finite component {0}")]
    NonFinite(String),
}

/// The hidden-variable sign: a value in `{+1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_scalar<S: Scalar>(self) -> S {
        S::from_int(self.value())
    }

    /// A fair coin toss.
    pub fn fair<R: Rng + ?Sized>(rng: &mut R) -> Sign {
        if rng.random::<bool>() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// Which expansion the sign-dependent multiplication table uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableMode {
    /// Products expressed in the sign-dependent basis; matches the true product.
    Correct,
    /// Products expressed in the fixed basis; wrong for `lambda = -1`.
    Erroneous,
}

impl fmt::Display for TableMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableMode::Correct => write!(f, "correct"),
            TableMode::Erroneous => write!(f, "erroneous"),
        }
    }
}

/// A real 3-vector of direction components.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector3<S: Scalar>([S; 3]);

impl<S: Scalar> Vector3<S> {
    /// Validates that every component is finite.
    pub fn new(v1: S, v2: S, v3: S) -> Result<Self, GaError> {
        let v = [v1, v2, v3];
        for c in &v {
            if !c.is_finite_value() {
                return Err(GaError::NonFinite(c.to_string()));
            }
        }
        Ok(Vector3(v))
    }

    pub fn zero() -> Self {
        Vector3([S::zero(), S::zero(), S::zero()])
    }

    pub(crate) fn from_components(v: [S; 3]) -> Self {
        Vector3(v)
    }

    pub fn components(&self) -> &[S; 3] {
        &self.0
    }

    pub fn dot(&self, other: &Self) -> S {
        self.0
            .iter()
            .zip(&other.0)
            .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
    }

    /// The Euclidean cross product. Embedding the result with [`embed`]
    /// gives the wedge product of the two embedded vectors.
    pub fn cross(&self, other: &Self) -> Vector3<S> {
        let a = &self.0;
        let b = &other.0;
        Vector3([
            a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
            a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
            a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
        ])
    }

    pub fn close_to(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(x, y)| x.close_to(y))
    }
}

impl<S: Scalar> Neg for &Vector3<S> {
    type Output = Vector3<S>;
    fn neg(self) -> Vector3<S> {
        Vector3([
            -self.0[0].clone(),
            -self.0[1].clone(),
            -self.0[2].clone(),
        ])
    }
}

impl<S: Scalar> fmt::Display for Vector3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// A [`Vector3`] validated (and in float mode renormalized) to unit length.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitVector3<S: Scalar>(Vector3<S>);

impl<S: Scalar> UnitVector3<S> {
    pub fn new(v: Vector3<S>) -> Result<Self, GaError> {
        let norm_sq = v.dot(&v);
        match S::unit_scale(&norm_sq) {
            Some(c) => {
                let [v1, v2, v3] = v.0;
                Ok(UnitVector3(Vector3([v1 * c.clone(), v2 * c.clone(), v3 * c])))
            }
            None => Err(GaError::NotUnit(norm_sq.to_string())),
        }
    }

    pub fn from_components(v1: S, v2: S, v3: S) -> Result<Self, GaError> {
        Self::new(Vector3::new(v1, v2, v3)?)
    }

    pub fn as_vector(&self) -> &Vector3<S> {
        &self.0
    }
}

impl<S: Scalar> Deref for UnitVector3<S> {
    type Target = Vector3<S>;
    fn deref(&self) -> &Vector3<S> {
        &self.0
    }
}

impl<S: Scalar> fmt::Display for UnitVector3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A uniformly distributed point on the unit sphere.
pub fn random_unit_vector<R: Rng + ?Sized>(rng: &mut R) -> UnitVector3<f64> {
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).sqrt();
    UnitVector3::from_components(r * phi.cos(), r * phi.sin(), z)
        .expect("sphere point is unit length")
}

/// An element of the bivector algebra: a real part plus three bivector
/// coefficients. The decomposition is unique.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<S: Scalar> {
    s: S,
    x: [S; 3],
}

impl<S: Scalar> Multivector<S> {
    /// Validates that every component is finite.
    pub fn new(s: S, x: [S; 3]) -> Result<Self, GaError> {
        for c in std::iter::once(&s).chain(&x) {
            if !c.is_finite_value() {
                return Err(GaError::NonFinite(c.to_string()));
            }
        }
        Ok(Multivector { s, x })
    }

    /// A real element.
    pub fn scalar(s: S) -> Result<Self, GaError> {
        Self::new(s, [S::zero(), S::zero(), S::zero()])
    }

    pub(crate) fn from_parts(s: S, x: [S; 3]) -> Self {
        Multivector { s, x }
    }

    pub fn zero() -> Self {
        Self::from_parts(S::zero(), [S::zero(), S::zero(), S::zero()])
    }

    pub fn one() -> Self {
        Self::from_parts(S::one(), [S::zero(), S::zero(), S::zero()])
    }

    pub fn scalar_part(&self) -> &S {
        &self.s
    }

    pub fn bivector_coeffs(&self) -> &[S; 3] {
        &self.x
    }

    pub fn is_real(&self) -> bool {
        self.x.iter().all(|c| c.is_zero())
    }

    pub fn is_pure_bivector(&self) -> bool {
        self.s.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_zero() && self.is_real()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_parts(
            self.s.clone() * c.clone(),
            [
                self.x[0].clone() * c.clone(),
                self.x[1].clone() * c.clone(),
                self.x[2].clone() * c.clone(),
            ],
        )
    }

    /// Negates the bivector part. `p * conj(p)` is the real squared norm.
    pub fn conj(&self) -> Self {
        Self::from_parts(
            self.s.clone(),
            [
                -self.x[0].clone(),
                -self.x[1].clone(),
                -self.x[2].clone(),
            ],
        )
    }

    /// `s^2 + x1^2 + x2^2 + x3^2`.
    pub fn norm_sq(&self) -> S {
        self.x
            .iter()
            .fold(self.s.clone() * self.s.clone(), |acc, c| {
                acc + c.clone() * c.clone()
            })
    }

    /// The two-sided multiplicative inverse, `conj(p) / norm_sq(p)`.
    pub fn inverse(&self) -> Result<Self, GaError> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(GaError::ZeroInverse);
        }
        Ok(self.conj().scale(&(S::one() / n)))
    }

    /// Splits into the real part and the bivector coefficients.
    pub fn decompose(&self) -> (S, Vector3<S>) {
        (self.s.clone(), Vector3(self.x.clone()))
    }

    /// Rebuilds an element from the parts returned by [`Multivector::decompose`].
    pub fn recompose(s: S, x: Vector3<S>) -> Self {
        Self::from_parts(s, x.0)
    }

    pub fn close_to(&self, other: &Self) -> bool {
        self.s.close_to(&other.s)
            && self.x.iter().zip(&other.x).all(|(a, b)| a.close_to(b))
    }

    /// Rendering that drops zero terms and unit coefficients, e.g. `-b3`
    /// or `-1/2 + b1`. The zero element renders as `0`.
    pub fn compact(&self) -> String {
        let mut terms: Vec<String> = Vec::new();
        if !self.s.is_zero() {
            terms.push(self.s.to_string());
        }
        for (i, c) in self.x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = format!("b{}", i + 1);
            if c.is_one() {
                terms.push(name);
            } else if (-c.clone()).is_one() {
                terms.push(format!("-{name}"));
            } else {
                terms.push(format!("{c}*{name}"));
            }
        }
        match terms.split_first() {
            None => "0".to_string(),
            Some((first, rest)) => rest.iter().fold(first.clone(), |mut acc, t| {
                if let Some(tail) = t.strip_prefix('-') {
                    acc.push_str(" - ");
                    acc.push_str(tail);
                } else {
                    acc.push_str(" + ");
                    acc.push_str(t);
                }
                acc
            }),
        }
    }
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    /// Canonical rendering: `s + x1*b1 + x2*b2 + x3*b3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*b1 + {}*b2 + {}*b3",
            self.s, self.x[0], self.x[1], self.x[2]
        )
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: &Multivector<S>) -> Multivector<S> {
        Multivector::from_parts(
            self.s.clone() + rhs.s.clone(),
            [
                self.x[0].clone() + rhs.x[0].clone(),
                self.x[1].clone() + rhs.x[1].clone(),
                self.x[2].clone() + rhs.x[2].clone(),
            ],
        )
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: &Multivector<S>) -> Multivector<S> {
        self + &(-rhs)
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        self.scale(&(-S::one()))
    }
}

/// For distinct 0-based indices, the third index and the Levi-Civita sign.
fn eps_complement(j: usize, k: usize) -> (usize, i64) {
    debug_assert!(j != k && j < 3 && k < 3);
    let l = 3 - j - k;
    let sign = if (j + 1) % 3 == k { 1 } else { -1 };
    (l, sign)
}

impl<S: Scalar> Mul for &Multivector<S> {
    type Output = Multivector<S>;

    /// The bivector product, expanded bilinearly over the basis table
    /// `b_j b_k = -delta_jk - sum_l eps_jkl b_l`.
    fn mul(self, rhs: &Multivector<S>) -> Multivector<S> {
        let mut s = self.s.clone() * rhs.s.clone();
        let mut x = [S::zero(), S::zero(), S::zero()];
        for k in 0..3 {
            x[k] = self.s.clone() * rhs.x[k].clone() + rhs.s.clone() * self.x[k].clone();
        }
        for j in 0..3 {
            for k in 0..3 {
                let c = self.x[j].clone() * rhs.x[k].clone();
                if j == k {
                    s = s - c;
                } else {
                    let (l, sign) = eps_complement(j, k);
                    x[l] = x[l].clone() - S::from_int(sign) * c;
                }
            }
        }
        Multivector::from_parts(s, x)
    }
}

macro_rules! forward_owned_binop {
    ($trait_:ident, $fn_:ident) => {
        impl<S: Scalar> $trait_ for Multivector<S> {
            type Output = Multivector<S>;
            fn $fn_(self, rhs: Multivector<S>) -> Multivector<S> {
                $trait_::$fn_(&self, &rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        -&self
    }
}

/// The basis bivector `b_j`, `j` in `1..=3`.
pub fn basis<S: Scalar>(j: usize) -> Result<Multivector<S>, GaError> {
    if !(1..=3).contains(&j) {
        return Err(GaError::BasisIndex(j));
    }
    let mut x = [S::zero(), S::zero(), S::zero()];
    x[j - 1] = S::one();
    Ok(Multivector::from_parts(S::zero(), x))
}

/// The pure bivector with the given vector of coefficients.
pub fn embed<S: Scalar>(v: &Vector3<S>) -> Multivector<S> {
    Multivector::from_parts(S::zero(), v.components().clone())
}

/// The sign-dependent basis bivector `b_j(lambda) = lambda * b_j`.
pub fn lambda_basis<S: Scalar>(j: usize, lambda: Sign) -> Result<Multivector<S>, GaError> {
    Ok(basis::<S>(j)?.scale(&lambda.to_scalar()))
}

/// One entry of the sign-dependent multiplication table,
/// `-delta_jk - sum_l lambda eps_jkl B_l`, where `B_l` is the
/// sign-dependent basis in [`TableMode::Correct`] and the fixed basis in
/// [`TableMode::Erroneous`].
pub fn table_product<S: Scalar>(
    j: usize,
    k: usize,
    lambda: Sign,
    mode: TableMode,
) -> Result<Multivector<S>, GaError> {
    if !(1..=3).contains(&j) {
        return Err(GaError::BasisIndex(j));
    }
    if !(1..=3).contains(&k) {
        return Err(GaError::BasisIndex(k));
    }
    if j == k {
        return Ok(Multivector::from_parts(
            -S::one(),
            [S::zero(), S::zero(), S::zero()],
        ));
    }
    let (l0, eps) = eps_complement(j - 1, k - 1);
    let l = l0 + 1;
    let coeff = -(lambda.to_scalar::<S>() * S::from_int(eps));
    let b = match mode {
        TableMode::Correct => lambda_basis::<S>(l, lambda)?,
        TableMode::Erroneous => basis::<S>(l)?,
    };
    Ok(b.scale(&coeff))
}
