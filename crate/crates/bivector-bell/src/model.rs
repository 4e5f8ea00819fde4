//! Measurement functions and correlation estimators over the bivector algebra.
//!
//! The hidden variable is a fair-coin sign `lambda`. The two measurement
//! functions are bivector products that collapse to real numbers:
//!
//! ```text
//! A(a, lambda) = (-a)(lambda a) = lambda
//! B(b, lambda) = (lambda b)(b)  = -lambda
//! ```
//!
//! so the product of any measurement pair is identically `-1`. The raw
//! correlation is the plain average of those products; the normalized
//! correlation divides it by `-a` on the left and by `b` on the right, which
//! turns the constant `-1` into `a b = -a.b - a^b` for every sample size.
//!
//! [`estimator_by_table`] recomputes the same average by expanding the
//! per-trial products through the sign-dependent multiplication table, so
//! that the two [`TableMode`]s can be compared: the correct table reproduces
//! the normalized correlation exactly, while the erroneous substitution makes
//! the wedge term proportional to the empirical mean of the lambda stream.

use crate::ga::{basis, embed, lambda_basis, table_product, Multivector, Sign, TableMode, UnitVector3};
use crate::scalar::Scalar;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    #[error("lambda stream must be nonempty")]
    EmptyStream,
    #[error("balanced stream needs an even positive length, got {0}")]
    UnbalancedLength(usize),
}

/// An ordered, nonempty sequence of hidden-variable signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaStream {
    signs: Vec<Sign>,
}

impl LambdaStream {
    pub fn from_signs(signs: Vec<Sign>) -> Result<Self, ModelError> {
        if signs.is_empty() {
            return Err(ModelError::EmptyStream);
        }
        Ok(LambdaStream { signs })
    }

    /// `n` independent fair coin tosses from a seeded generator.
    pub fn fair(n: usize, seed: u64) -> Result<Self, ModelError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::from_signs((0..n).map(|_| Sign::fair(&mut rng)).collect())
    }

    /// Exactly `n/2` of each sign, alternating. Requires even `n`.
    pub fn balanced(n: usize) -> Result<Self, ModelError> {
        if n == 0 || n % 2 != 0 {
            return Err(ModelError::UnbalancedLength(n));
        }
        Ok(LambdaStream {
            signs: (0..n)
                .map(|i| if i % 2 == 0 { Sign::Plus } else { Sign::Minus })
                .collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn iter(&self) -> impl Iterator<Item = Sign> + '_ {
        self.signs.iter().copied()
    }

    /// The empirical mean of the signs, in `[-1, +1]`.
    pub fn mean<S: Scalar>(&self) -> S {
        let total: i64 = self.signs.iter().map(|s| s.value()).sum();
        S::from_ratio(total, self.signs.len() as i64)
    }
}

/// A finite-sample correlation value together with how it was computed.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationEstimate<S: Scalar> {
    pub value: Multivector<S>,
    pub n: usize,
    pub mode: TableMode,
}

/// The first measurement function, `(-a)(lambda a)`.
///
/// Evaluates to the real number `lambda` for every unit `a`.
pub fn measure_a<S: Scalar>(a: &UnitVector3<S>, lambda: Sign) -> Multivector<S> {
    let a_mv = embed(a.as_vector());
    &(-&a_mv) * &a_mv.scale(&lambda.to_scalar())
}

/// The second measurement function, `(lambda b)(b)`.
///
/// Evaluates to the real number `-lambda` for every unit `b`.
pub fn measure_b<S: Scalar>(b: &UnitVector3<S>, lambda: Sign) -> Multivector<S> {
    let b_mv = embed(b.as_vector());
    &b_mv.scale(&lambda.to_scalar()) * &b_mv
}

/// The plain average of measurement products over the stream,
/// `(1/n) sum_i A(a, lambda_i) B(b, lambda_i)`.
///
/// Every term is `-1`, so the average is the real number `-1` for every
/// pair of settings and every stream.
pub fn raw_correlation<S: Scalar>(
    a: &UnitVector3<S>,
    b: &UnitVector3<S>,
    stream: &LambdaStream,
) -> Multivector<S> {
    let sum = stream
        .iter()
        .fold(Multivector::<S>::zero(), |acc, lambda| {
            &acc + &(&measure_a(a, lambda) * &measure_b(b, lambda))
        });
    sum.scale(&S::from_ratio(1, stream.len() as i64))
}

/// The raw correlation divided by `-a` on the left and by `b` on the right.
///
/// Equals `a b = -a.b - a^b` for every stream length, so it carries a
/// nonzero bivector part whenever `a != +-b`.
pub fn normalized_correlation<S: Scalar>(
    a: &UnitVector3<S>,
    b: &UnitVector3<S>,
    stream: &LambdaStream,
) -> CorrelationEstimate<S> {
    let left = (-&embed(a.as_vector()))
        .inverse()
        .expect("unit vector has an inverse");
    let right = embed(b.as_vector())
        .inverse()
        .expect("unit vector has an inverse");
    CorrelationEstimate {
        value: &(&left * &raw_correlation(a, b, stream)) * &right,
        n: stream.len(),
        mode: TableMode::Correct,
    }
}

/// The bilinear expansion `sum_jk a_j b_k T_jk(lambda)` of one trial's
/// product through the sign-dependent table in the chosen mode.
///
/// In [`TableMode::Correct`] this is `-a.b - a^b` independent of `lambda`;
/// in [`TableMode::Erroneous`] it is `-a.b - lambda (a^b)`.
pub fn table_pair_product<S: Scalar>(
    a: &UnitVector3<S>,
    b: &UnitVector3<S>,
    lambda: Sign,
    mode: TableMode,
) -> Multivector<S> {
    let ac = a.components();
    let bc = b.components();
    let mut out = Multivector::<S>::zero();
    for j in 0..3 {
        for k in 0..3 {
            let entry = table_product::<S>(j + 1, k + 1, lambda, mode).expect("index in range");
            out = &out + &entry.scale(&(ac[j].clone() * bc[k].clone()));
        }
    }
    out
}

/// Averages [`table_pair_product`] over the stream.
///
/// The correct mode matches [`normalized_correlation`] exactly at every `n`.
/// The erroneous mode yields `-a.b - mean(lambda) (a^b)`: on balanced
/// streams the wedge term vanishes exactly, and on fair-coin streams it
/// shrinks like `1/sqrt(n)` toward [`christian_claim`].
pub fn estimator_by_table<S: Scalar>(
    a: &UnitVector3<S>,
    b: &UnitVector3<S>,
    stream: &LambdaStream,
    mode: TableMode,
) -> CorrelationEstimate<S> {
    let sum = stream
        .iter()
        .fold(Multivector::<S>::zero(), |acc, lambda| {
            &acc + &table_pair_product(a, b, lambda, mode)
        });
    CorrelationEstimate {
        value: sum.scale(&S::from_ratio(1, stream.len() as i64)),
        n: stream.len(),
        mode,
    }
}

/// The claimed closed form `-a.b`, a pure scalar.
pub fn christian_claim<S: Scalar>(a: &UnitVector3<S>, b: &UnitVector3<S>) -> Multivector<S> {
    Multivector::recompose(-a.dot(b), crate::ga::Vector3::zero())
}

/// The corrected closed form `-a.b - a^b`.
pub fn corrected_closed_form<S: Scalar>(
    a: &UnitVector3<S>,
    b: &UnitVector3<S>,
) -> Multivector<S> {
    Multivector::recompose(-a.dot(b), -&a.cross(b))
}

/// Convenience: the coordinate axis `e_j` as a unit direction.
pub fn axis<S: Scalar>(j: usize) -> UnitVector3<S> {
    let (s, x) = basis::<S>(j).expect("axis index in range").decompose();
    debug_assert!(s.is_zero());
    UnitVector3::new(x).expect("basis vector is unit")
}
