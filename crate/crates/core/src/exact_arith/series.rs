use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ArithError, Coefficient, Rational};

/// Power series in `s` modulo `s^(order + 1)`.
///
/// Holds exactly `order + 1` coefficients; `coeffs[i]` multiplies `s^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C> {
    order: usize,
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut series = Self::zero(order);
        series.coeffs[0] = C::one();
        series
    }

    /// Builds a series from leading coefficients; missing terms are zero and
    /// terms past `order` are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut series = Self::zero(order);
        for (slot, c) in series.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        series
    }

    /// Builds a series by evaluating `term(i)` for `i = 0..=order`.
    pub fn from_fn(order: usize, term: impl FnMut(usize) -> C) -> Self {
        TruncatedSeries {
            order,
            coeffs: (0..=order).map(term).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn map<D: Coefficient>(&self, f: impl FnMut(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<(), ArithError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(ArithError::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_order(other)?;
        let mut coeffs = vec![C::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                let term = a.clone() * b.clone();
                let slot = &mut coeffs[i + j];
                *slot = slot.clone() + term;
            }
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }
}

impl TruncatedSeries<Rational> {
    pub fn scale(&self, factor: &Rational) -> Self {
        self.map(|c| c * factor)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inv(&self) -> Result<Self, ArithError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(ArithError::NotInvertible);
        }
        let a0_inv = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(a0_inv.clone());
        for i in 1..=self.order {
            let acc = (1..=i).fold(Rational::zero(), |acc, j| {
                acc + &self.coeffs[j] * &out[i - j]
            });
            out.push(-(acc * &a0_inv));
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// `e^h` for `h` with zero constant term, via the derivative recursion
    /// `f_0 = 1`, `f_i = (1/i) * sum_{j=1..i} f_{i-j} h'_{j-1}` where
    /// `h'_{j-1} = j * h_j`.
    pub fn exp(&self) -> Result<Self, ArithError> {
        if !self.coeffs[0].is_zero() {
            return Err(ArithError::NonZeroConstantTerm);
        }
        let derivative: Vec<Rational> = (1..=self.order)
            .map(|j| &self.coeffs[j] * BigInt::from(j))
            .collect();
        let mut f: Vec<Rational> = Vec::with_capacity(self.order + 1);
        f.push(Rational::one());
        for i in 1..=self.order {
            let sum = (1..=i).fold(Rational::zero(), |acc, j| {
                acc + &f[i - j] * &derivative[j - 1]
            });
            f.push(sum / BigInt::from(i));
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: f,
        })
    }
}

pub fn series_mul<C: Coefficient>(
    a: &TruncatedSeries<C>,
    b: &TruncatedSeries<C>,
) -> Result<TruncatedSeries<C>, ArithError> {
    a.mul(b)
}

pub fn series_inv(a: &TruncatedSeries<Rational>) -> Result<TruncatedSeries<Rational>, ArithError> {
    a.inv()
}

pub fn series_exp(h: &TruncatedSeries<Rational>) -> Result<TruncatedSeries<Rational>, ArithError> {
    h.exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{factorial, is_canonical, rational, Poly};
    use proptest::prelude::*;

    fn series(order: usize, coeffs: &[(i64, i64)]) -> TruncatedSeries<Rational> {
        TruncatedSeries::from_coeffs(order, coeffs.iter().map(|&(n, d)| rational(n, d)))
    }

    #[test]
    fn mul_examples() {
        let a = series(2, &[(1, 1), (1, 1)]);
        let b = series(2, &[(1, 1), (-1, 1)]);
        assert_eq!(
            series_mul(&a, &b).unwrap(),
            series(2, &[(1, 1), (0, 1), (-1, 1)])
        );

        let f = series(3, &[(3, 1), (-2, 7), (5, 2), (1, 9)]);
        let zero = TruncatedSeries::zero(3);
        assert_eq!(series_mul(&f, &zero).unwrap(), zero);

        let a = series(2, &[(1, 1), (1, 2), (1, 12)]);
        let b = series(2, &[(1, 1), (-1, 2), (1, 12)]);
        assert_eq!(
            series_mul(&a, &b).unwrap(),
            series(2, &[(1, 1), (0, 1), (-1, 12)])
        );
    }

    #[test]
    fn mul_order_mismatch() {
        let a = TruncatedSeries::<Rational>::one(2);
        let b = TruncatedSeries::<Rational>::one(3);
        assert_eq!(
            series_mul(&a, &b),
            Err(ArithError::OrderMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn inv_examples() {
        let one = TruncatedSeries::<Rational>::one(3);
        assert_eq!(series_inv(&one).unwrap(), one);

        // (e^s - 1)/s = sum s^i/(i+1)!
        let e_minus_one =
            TruncatedSeries::from_fn(2, |i| Rational::from_integer(factorial(i + 1)).recip());
        assert_eq!(
            series_inv(&e_minus_one).unwrap(),
            series(2, &[(1, 1), (-1, 2), (1, 12)])
        );

        let one_plus_s = series(3, &[(1, 1), (1, 1)]);
        assert_eq!(
            series_inv(&one_plus_s).unwrap(),
            series(3, &[(1, 1), (-1, 1), (1, 1), (-1, 1)])
        );
    }

    #[test]
    fn inv_requires_unit_constant() {
        let s = series(2, &[(0, 1), (1, 1)]);
        assert_eq!(series_inv(&s), Err(ArithError::NotInvertible));
    }

    // Independent route: e^h = sum_m h^m / m!, truncated. h^m vanishes below
    // s^m so m <= order suffices.
    fn exp_by_powers(h: &TruncatedSeries<Rational>) -> TruncatedSeries<Rational> {
        let order = h.order();
        let mut total = TruncatedSeries::one(order);
        let mut power = TruncatedSeries::one(order);
        for m in 1..=order {
            power = power.mul(h).unwrap();
            let term = power.scale(&Rational::from_integer(factorial(m)).recip());
            total = total.add(&term).unwrap();
        }
        total
    }

    #[test]
    fn exp_examples() {
        let zero = TruncatedSeries::<Rational>::zero(4);
        assert_eq!(series_exp(&zero).unwrap(), TruncatedSeries::one(4));

        let s = series(3, &[(0, 1), (1, 1)]);
        assert_eq!(
            series_exp(&s).unwrap(),
            series(3, &[(1, 1), (1, 1), (1, 2), (1, 6)])
        );

        let h = series(2, &[(0, 1), (-1, 2), (-1, 24)]);
        let expected = series(2, &[(1, 1), (-1, 2), (1, 12)]);
        assert_eq!(exp_by_powers(&h), expected);
        assert_eq!(series_exp(&h).unwrap(), expected);
    }

    #[test]
    fn exp_rejects_constant_term() {
        let h = series(2, &[(1, 1), (1, 1)]);
        assert_eq!(series_exp(&h), Err(ArithError::NonZeroConstantTerm));
    }

    #[test]
    fn polynomial_coefficients() {
        // (1 + x s)^2 = 1 + 2x s + x^2 s^2
        let a = TruncatedSeries::from_coeffs(2, [Poly::one(), Poly::x()]);
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq.coeff(1), &Poly::x().scale(&rational(2, 1)));
        assert_eq!(sq.coeff(2), &(&Poly::x() * &Poly::x()));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..=50, 1i64..=12).prop_map(|(n, d)| rational(n, d))
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries<Rational>> {
        proptest::collection::vec(arb_rational(), order + 1)
            .prop_map(move |c| TruncatedSeries::from_coeffs(order, c))
    }

    fn arb_unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries<Rational>> {
        (
            arb_series(order),
            arb_rational().prop_filter("nonzero", |c| !c.is_zero()),
        )
            .prop_map(|(s, c0)| {
                let mut coeffs = s.into_coeffs();
                coeffs[0] = c0;
                TruncatedSeries::from_coeffs(coeffs.len() - 1, coeffs)
            })
    }

    fn arb_nilpotent(order: usize) -> impl Strategy<Value = TruncatedSeries<Rational>> {
        arb_series(order).prop_map(|s| {
            let mut coeffs = s.into_coeffs();
            coeffs[0] = Rational::zero();
            TruncatedSeries::from_coeffs(coeffs.len() - 1, coeffs)
        })
    }

    fn all_canonical(s: &TruncatedSeries<Rational>) -> bool {
        s.coeffs().iter().all(is_canonical)
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(
            (a, b, c) in (0usize..6).prop_flat_map(|n| (arb_series(n), arb_series(n), arb_series(n)))
        ) {
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(&ab, &b.mul(&a).unwrap());
            prop_assert_eq!(ab.mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert!(all_canonical(&ab));
        }

        #[test]
        fn exp_matches_power_sum(h in (0usize..6).prop_flat_map(arb_nilpotent)) {
            prop_assert_eq!(h.exp().unwrap(), exp_by_powers(&h));
        }

        #[test]
        fn exp_is_a_homomorphism(
            (h1, h2) in (0usize..6).prop_flat_map(|n| (arb_nilpotent(n), arb_nilpotent(n)))
        ) {
            let lhs = h1.add(&h2).unwrap().exp().unwrap();
            let rhs = h1.exp().unwrap().mul(&h2.exp().unwrap()).unwrap();
            prop_assert!(all_canonical(&lhs));
            prop_assert_eq!(lhs, rhs);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn inverse_is_inverse(a in (0usize..7).prop_flat_map(arb_unit_series)) {
            let b = a.inv().unwrap();
            prop_assert!(all_canonical(&b));
            prop_assert_eq!(a.mul(&b).unwrap(), TruncatedSeries::one(a.order()));
        }
    }
}
