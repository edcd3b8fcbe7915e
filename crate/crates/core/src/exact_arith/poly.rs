use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;

/// Dense polynomial in one variable over the rationals.
///
/// `coeffs[j]` is the coefficient of `x^j`. The zero polynomial is the empty
/// vector and no other polynomial carries a trailing zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^power`.
    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Poly::new(coeffs)
    }

    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^j`; zero past the degree.
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with `deg(0) = -1`.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// `p(x + shift)`, expanded.
    pub fn shift(&self, shift: &Rational) -> Poly {
        // Horner in the polynomial ring: ((c_d)(x+t) + c_{d-1})(x+t) + ...
        let linear = Poly::new(vec![shift.clone(), Rational::one()]);
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            acc * linear.clone() + Poly::constant(c.clone())
        })
    }

    fn zip_with(&self, other: &Poly, f: impl Fn(&Rational, &Rational) -> Rational) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        let coeffs = (0..len)
            .map(|j| {
                let a = self.coeffs.get(j).unwrap_or(&zero);
                let b = other.coeffs.get(j).unwrap_or(&zero);
                f(a, b)
            })
            .collect();
        Poly::new(coeffs)
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(Rational::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational;

    fn p(coeffs: &[(i64, i64)]) -> Poly {
        Poly::new(coeffs.iter().map(|&(n, d)| rational(n, d)).collect())
    }

    #[test]
    fn zero_poly_normal_form() {
        assert_eq!(Poly::zero().degree(), -1);
        assert_eq!(p(&[(0, 1), (0, 1)]), Poly::zero());
        assert_eq!(p(&[(1, 1), (0, 1)]).degree(), 0);
        let x = Poly::x();
        assert_eq!(&x - &x, Poly::zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Poly::zero().eval(&rational(17, 3)), rational(0, 1));
        assert_eq!(
            p(&[(-1, 1), (0, 1), (1, 1)]).eval(&rational(3, 1)),
            rational(8, 1)
        );
        // (x - 5)/30 at 2
        assert_eq!(
            p(&[(-1, 6), (1, 30)]).eval(&rational(2, 1)),
            rational(-1, 10)
        );
    }

    #[test]
    fn product_and_shift() {
        let a = p(&[(1, 1), (1, 1)]);
        let b = p(&[(-1, 1), (1, 1)]);
        assert_eq!(&a * &b, p(&[(-1, 1), (0, 1), (1, 1)]));
        // (x^2 - 1) shifted by 1 is x^2 + 2x
        let shifted = p(&[(-1, 1), (0, 1), (1, 1)]).shift(&rational(1, 1));
        assert_eq!(shifted, p(&[(0, 1), (2, 1), (1, 1)]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(-1, 6), (1, 30)]).to_string(), "[-1/6, 1/30]");
        assert_eq!(Poly::zero().to_string(), "[]");
    }
}
