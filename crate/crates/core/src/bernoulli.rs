//! Bernoulli numbers, power sums and Bernoulli–Barnes polynomials.
//!
//! Sign convention: the numbers here are defined by
//!
//! ```text
//! s/(e^s - 1) = 1 - B_1 s + sum_{i>=2} B_i s^i / i!
//! ```
//!
//! so `B_1 = +1/2`. Many references use `B_1 = -1/2`; every formula in this
//! crate that reads `B_1` expects the positive value.
//!
//! The Bernoulli–Barnes polynomials `B_i(x; a_1..a_k)` are the coefficients of
//!
//! ```text
//! s^k e^{xs} / prod_i (e^{a_i s} - 1) = sum_i B_i(x; a) s^i / i!
//! ```

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::exact_arith::{factorial, Poly, Rational, TruncatedSeries};
use crate::partset::PartSet;

/// `B_0..=B_m` under the `B_1 = +1/2` convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.values[i]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

static BERNOULLI_CACHE: LazyLock<Mutex<Vec<Rational>>> = LazyLock::new(|| Mutex::new(Vec::new()));

fn compute_bernoulli(m: usize) -> Vec<Rational> {
    // (e^s - 1)/s = sum_i s^i/(i+1)!
    let quotient =
        TruncatedSeries::from_fn(m, |i| Rational::from_integer(factorial(i + 1)).recip());
    let inverse = quotient.inv().expect("(e^s - 1)/s has constant term 1");
    inverse
        .into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(i, c)| match i {
            0 => c,
            1 => -c,
            _ => c * factorial(i),
        })
        .collect()
}

pub fn bernoulli_numbers(m: usize) -> BernoulliTable {
    let mut cache = BERNOULLI_CACHE.lock().unwrap_or_else(|e| e.into_inner());
    if cache.len() <= m {
        // Grow geometrically so repeated small extensions stay cheap.
        let target = m.max(2 * cache.len());
        *cache = compute_bernoulli(target);
    }
    BernoulliTable {
        values: cache[..=m].to_vec(),
    }
}

/// Coefficients of `ln(s/(e^s - 1)) = -sum_{i>=1} B_i/(i! * i) s^i` for
/// `i = 1..=m`.
pub fn log_coefficients(m: usize) -> Vec<Rational> {
    let table = bernoulli_numbers(m);
    (1..=m)
        .map(|i| -(table.get(i) / (factorial(i) * BigInt::from(i))))
        .collect()
}

/// `p_m(A) = sum_i a_i^m`; `p_0 = k`.
pub fn power_sum(parts: &PartSet, m: usize) -> BigUint {
    parts
        .parts()
        .iter()
        .map(|&a| BigUint::from(a).pow(m as u32))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BBPoly {
    pub index: usize,
    pub parts: PartSet,
    pub poly: Poly,
}

/// `B_0..=B_max_index` for an arbitrary list of positive parts.
///
/// Repeated parts and the empty list are allowed here; for the empty list
/// the generating function is `e^{xs}` and `B_i = x^i`.
pub fn bernoulli_barnes_polys(parts: &[u64], max_index: usize) -> Vec<Poly> {
    let order = max_index;
    let mut scalar = TruncatedSeries::<Rational>::one(order);
    let mut product = BigInt::one();
    for &a in parts {
        assert!(a > 0, "parts must be positive");
        let a_big = BigInt::from(a);
        // (e^{as} - 1)/(as) = sum_j a^j s^j/(j+1)!
        let quotient = TruncatedSeries::from_fn(order, |j| {
            Rational::new(a_big.pow(j as u32), factorial(j + 1))
        });
        let factor = quotient.inv().expect("constant term is 1");
        scalar = scalar.mul(&factor).expect("same order");
        product *= a_big;
    }
    let scalar = scalar.scale(&Rational::from_integer(product).recip());

    let lifted = scalar.map(|c| Poly::constant(c.clone()));
    let exp_xs = TruncatedSeries::from_fn(order, |j| {
        Poly::monomial(Rational::from_integer(factorial(j)).recip(), j)
    });
    let full = lifted.mul(&exp_xs).expect("same order");
    full.into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.scale(&Rational::from_integer(factorial(i))))
        .collect()
}

type BarnesKey = (Vec<u64>, usize);

static BARNES_CACHE: LazyLock<Mutex<HashMap<BarnesKey, Arc<Vec<Poly>>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Memoized polynomials keyed by `(parts, max_index)`.
pub(crate) fn cached_barnes(parts: &PartSet, max_index: usize) -> Arc<Vec<Poly>> {
    let key = (parts.parts().to_vec(), max_index);
    let mut cache = BARNES_CACHE.lock().unwrap_or_else(|e| e.into_inner());
    cache
        .entry(key)
        .or_insert_with(|| Arc::new(bernoulli_barnes_polys(parts.parts(), max_index)))
        .clone()
}

pub fn bernoulli_barnes(parts: &PartSet, max_index: usize) -> Vec<BBPoly> {
    cached_barnes(parts, max_index)
        .iter()
        .enumerate()
        .map(|(index, poly)| BBPoly {
            index,
            parts: parts.clone(),
            poly: poly.clone(),
        })
        .collect()
}
