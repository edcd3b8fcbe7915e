//! Exact arithmetic: arbitrary-precision rationals, dense univariate
//! polynomials and truncated formal power series.
//!
//! Nothing in this module touches floating point. Series are generic over a
//! [`Coefficient`] ring so the same Cauchy product serves both numeric
//! expansions (coefficients in [`Rational`]) and symbolic ones (coefficients
//! in [`Poly`]).

mod poly;
mod series;

pub use poly::Poly;
pub use series::{series_exp, series_inv, series_mul, TruncatedSeries};

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact fraction, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series with zero constant term is not invertible")]
    NotInvertible,
    #[error("cannot exponentiate a series with nonzero constant term")]
    NonZeroConstantTerm,
}

/// Commutative ring operations needed by [`TruncatedSeries`].
pub trait Coefficient:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

pub fn rational_from_int<T: Into<BigInt>>(value: T) -> Rational {
    Rational::from_integer(value.into())
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Returns the integer value when `value` has denominator 1.
pub fn to_integer(value: &Rational) -> Option<BigInt> {
    value.is_integer().then(|| value.to_integer())
}

/// True when `value` is in lowest terms with positive denominator.
pub fn is_canonical(value: &Rational) -> bool {
    use num_integer::Integer;
    use num_traits::Signed;
    let denom = value.denom();
    if !denom.is_positive() {
        return false;
    }
    if value.numer().is_zero() {
        return denom.is_one();
    }
    value.numer().gcd(denom).is_one()
}

/// Exact Horner evaluation of `p` at `x`.
pub fn poly_eval(p: &Poly, x: &Rational) -> Rational {
    p.eval(x)
}
