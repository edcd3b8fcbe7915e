//! Reduction formulas for `p_A(n)` when the parts are pairwise coprime.
//!
//! With `P = a_1 * ... * a_k`, `n = qP + r` and `0 <= r < P`:
//!
//! * `p_A(n) = p_A(r) + (-1)^k (n - r) sum_{i=0}^{k-2} (r - n)^i / ((i+1)! (k-i-2)!) B_{k-i-2}(-r; A)`
//! * `p_A(P - x) = (-1)^k P sum_{i=0}^{k-2} (-P)^i / ((i+1)! (k-i-2)!) B_{k-i-2}(x; A)` for `1 <= x < sum(A)`
//! * for `sum(A) <= x <= P` the same right-hand side equals
//!   `p_A(P - x) + (-1)^k p_A(x - sum(A))`.
//!
//! The same correction `p_A(n) - p_A(r)` is also available through the
//! power-series recursion ([`section3_correction`]) and, for `k <= 5`, through
//! hand-expanded closed forms. The three routes share no code beyond the
//! oracle, which lets each check the others.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::bernoulli::{bernoulli_numbers, cached_barnes, power_sum};
use crate::error::{Error, Result};
use crate::exact_arith::{factorial, to_integer, Rational, TruncatedSeries};
use crate::oracle::{oracle_count, CountTable};
use crate::partset::PartSet;

/// Euclidean split `n = q * P + r` against the product of the parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInput {
    pub parts: PartSet,
    pub n: u64,
    pub q: u64,
    pub r: u64,
}

pub fn decompose(parts: &PartSet, n: u64) -> ReductionInput {
    let (q, r) = match parts.product_u64() {
        Some(product) => (n / product, n % product),
        None => (0, n),
    };
    ReductionInput {
        parts: parts.clone(),
        n,
        q,
        r,
    }
}

fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn require_integer(what: &'static str, parts: &PartSet, value: Rational) -> Result<BigInt> {
    to_integer(&value).ok_or_else(|| Error::NonIntegral {
        what,
        value,
        parts: parts.parts().to_vec(),
    })
}

fn require_at_least_two(what: &'static str, parts: &PartSet) -> Result<()> {
    if parts.k() < 2 {
        return Err(Error::TooFewParts {
            what,
            min: 2,
            parts: parts.parts().to_vec(),
        });
    }
    Ok(())
}

/// `sum_{i=0}^{k-2} t^i / ((i+1)! (k-i-2)!) * B_{k-i-2}(at; A)`.
fn barnes_combination(parts: &PartSet, at: &Rational, t: &Rational) -> Rational {
    let k = parts.k();
    let top = k - 2;
    let polys = cached_barnes(parts, top);
    let mut t_power = Rational::one();
    let mut total = Rational::zero();
    for i in 0..=top {
        let denom = factorial(i + 1) * factorial(top - i);
        total += &t_power * polys[top - i].eval(at) / denom;
        t_power *= t;
    }
    total
}

/// `p_A(n) - p_A(r)` from the Bernoulli–Barnes polynomials at `-r`.
pub fn theorem1_correction(input: &ReductionInput) -> Result<Rational> {
    let parts = &input.parts;
    parts.require_coprime()?;
    let k = parts.k();
    // k = 1: the sum over i in 0..=k-2 is empty.
    if k < 2 || input.q == 0 {
        return Ok(Rational::zero());
    }
    let diff = BigInt::from(input.n) - BigInt::from(input.r);
    let at = -Rational::from_integer(BigInt::from(input.r));
    let t = Rational::from_integer(-diff.clone());
    let value = barnes_combination(parts, &at, &t) * (sign(k) * diff);
    require_integer("theorem1 correction", parts, value.clone())?;
    Ok(value)
}

fn count_with_base(
    parts: &PartSet,
    n: u64,
    table: Option<&CountTable>,
    correction: impl FnOnce(&ReductionInput) -> Result<Rational>,
    what: &'static str,
) -> Result<BigInt> {
    let input = decompose(parts, n);
    let delta = require_integer(what, parts, correction(&input)?)?;
    let base = lookup(parts, table, input.r)?;
    Ok(BigInt::from(base) + delta)
}

fn lookup(parts: &PartSet, table: Option<&CountTable>, n: u64) -> Result<BigUint> {
    match table.and_then(|t| t.get(n)) {
        Some(v) => Ok(v.clone()),
        None => oracle_count(parts, n),
    }
}

/// `p_A(n)` via [`theorem1_correction`] plus the oracle at `r`.
pub fn theorem1_count(parts: &PartSet, n: u64) -> Result<BigInt> {
    count_with_base(parts, n, None, theorem1_correction, "theorem1 count")
}

/// As [`theorem1_count`], reading `p_A(r)` from a precomputed table when it
/// covers `r`.
pub fn theorem1_count_in(table: &CountTable, n: u64) -> Result<BigInt> {
    count_with_base(
        table.parts(),
        n,
        Some(table),
        theorem1_correction,
        "theorem1 count",
    )
}

fn theorem2_formula(parts: &PartSet, x: u64) -> Rational {
    let product = BigInt::from(parts.product().clone());
    let at = Rational::from_integer(BigInt::from(x));
    let t = Rational::from_integer(-product.clone());
    barnes_combination(parts, &at, &t) * (sign(parts.k()) * product)
}

fn out_of_range(parts: &PartSet, x: u64, low: u64, high: String) -> Error {
    Error::OutOfRange {
        x,
        low,
        high,
        parts: parts.parts().to_vec(),
    }
}

/// `p_A(P - x)` for `1 <= x <= sum(A) - 1`.
pub fn theorem2_count(parts: &PartSet, x: u64) -> Result<BigInt> {
    require_at_least_two("theorem2", parts)?;
    parts.require_coprime()?;
    let high = parts.sum() - 1;
    if x < 1 || x > high || BigUint::from(x) > *parts.product() {
        return Err(out_of_range(parts, x, 1, high.to_string()));
    }
    require_integer("theorem2 count", parts, theorem2_formula(parts, x))
}

/// `p_A(P - x) + (-1)^k p_A(x - sum(A))` for `sum(A) <= x <= P`.
pub fn theorem3_rhs(parts: &PartSet, x: u64) -> Result<Rational> {
    require_at_least_two("theorem3", parts)?;
    parts.require_coprime()?;
    let low = parts.sum();
    if x < low || BigUint::from(x) > *parts.product() {
        return Err(out_of_range(parts, x, low, parts.product().to_string()));
    }
    let value = theorem2_formula(parts, x);
    require_integer("theorem3 rhs", parts, value.clone())?;
    Ok(value)
}

/// `p_A(n) - p_A(r)` as `(-1)^k q f_{k-2}`, where `f = e^h` and
/// `h(s) = -r s + sum_{i>=1} B_i/(i! i) ((r - n)^i - p_i(A)) s^i`.
pub fn section3_correction(input: &ReductionInput) -> Result<Rational> {
    let parts = &input.parts;
    require_at_least_two("series recursion", parts)?;
    parts.require_coprime()?;
    let k = parts.k();
    // One spare term beyond the s^{k-2} coefficient that is read.
    let order = k;
    let bernoulli = bernoulli_numbers(order);
    let shift = BigInt::from(input.r) - BigInt::from(input.n);
    let h = TruncatedSeries::from_fn(order, |i| {
        if i == 0 {
            return Rational::zero();
        }
        let weight = bernoulli.get(i) / (factorial(i) * BigInt::from(i));
        let inner = shift.pow(i as u32) - BigInt::from(power_sum(parts, i));
        let mut term = weight * inner;
        if i == 1 {
            term -= Rational::from_integer(BigInt::from(input.r));
        }
        term
    });
    let f = h.exp()?;
    let value = f.coeff(k - 2) * (sign(k) * BigInt::from(input.q));
    require_integer("series correction", parts, value.clone())?;
    Ok(value)
}

pub fn section3_count(parts: &PartSet, n: u64) -> Result<BigInt> {
    count_with_base(parts, n, None, section3_correction, "series count")
}

pub fn section3_count_in(table: &CountTable, n: u64) -> Result<BigInt> {
    count_with_base(
        table.parts(),
        n,
        Some(table),
        section3_correction,
        "series count",
    )
}

/// Symmetric quantities of the parts used by the closed forms.
struct Symmetric {
    e1: BigInt,
    e2: BigInt,
    p2: BigInt,
    product: BigInt,
}

impl Symmetric {
    fn of(parts: &PartSet) -> Self {
        let a: Vec<BigInt> = parts.parts().iter().map(|&v| BigInt::from(v)).collect();
        let e1: BigInt = a.iter().sum();
        let p2: BigInt = a.iter().map(|v| v * v).sum();
        let mut e2 = BigInt::zero();
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                e2 += &a[i] * &a[j];
            }
        }
        let product = a.iter().product();
        Symmetric {
            e1,
            e2,
            p2,
            product,
        }
    }

    /// `sum_i a_i^2 (e1 - a_i)`
    fn mixed_cubic(&self, parts: &PartSet) -> BigInt {
        parts
            .parts()
            .iter()
            .map(|&v| {
                let v = BigInt::from(v);
                &v * &v * (&self.e1 - &v)
            })
            .sum()
    }

    /// `sum_{i<j} P / (a_i a_j)`
    fn complementary_products(&self, parts: &PartSet) -> BigInt {
        let a = parts.parts();
        let mut total = BigInt::zero();
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                total += &self.product / (BigInt::from(a[i]) * BigInt::from(a[j]));
            }
        }
        total
    }
}

fn require_closed_form_arity(parts: &PartSet) -> Result<()> {
    if !(2..=5).contains(&parts.k()) {
        return Err(Error::UnsupportedArity {
            k: parts.k(),
            parts: parts.parts().to_vec(),
        });
    }
    Ok(())
}

/// Hand-expanded `p_A(n) - p_A(r)` for `k = 2..=5`.
pub fn closed_form_correction(parts: &PartSet, n: u64) -> Result<Rational> {
    require_closed_form_arity(parts)?;
    parts.require_coprime()?;
    let input = decompose(parts, n);
    let sym = Symmetric::of(parts);
    let n = BigInt::from(input.n);
    let r = BigInt::from(input.r);
    let q = BigInt::from(input.q);
    let s = &n + &r;
    let value = match parts.k() {
        2 => Rational::new(&n - &r, sym.product.clone()),
        3 => Rational::new(&q * (&s + &sym.e1), BigInt::from(2)),
        4 => {
            let inner = BigInt::from(3) * &s * &sym.e1 + BigInt::from(2) * &s * &s
                - BigInt::from(2) * &n * &r
                + &sym.e1 * &sym.e1
                + &sym.e2;
            Rational::new(q * inner, BigInt::from(12))
        }
        _ => {
            let inner = &s * (&n * &n + &r * &r)
                + BigInt::from(2) * (&n * &n + &n * &r + &r * &r) * &sym.e1
                + &s * &sym.p2
                + sym.mixed_cubic(parts)
                + BigInt::from(3) * &s * &sym.e2
                + BigInt::from(3) * sym.complementary_products(parts);
            Rational::new(q * inner, BigInt::from(24))
        }
    };
    Ok(value)
}

/// Hand-expanded `p_A(P - x)` for `k = 2..=5` and `1 <= x <= sum(A) - 1`.
pub fn closed_form_theorem2(parts: &PartSet, x: u64) -> Result<Rational> {
    require_closed_form_arity(parts)?;
    parts.require_coprime()?;
    let high = parts.sum() - 1;
    if x < 1 || x > high || BigUint::from(x) > *parts.product() {
        return Err(out_of_range(parts, x, 1, high.to_string()));
    }
    let sym = Symmetric::of(parts);
    let x = BigInt::from(x);
    let n = &sym.product - &x;
    let d = &n - &x;
    let value = match parts.k() {
        2 => Rational::one(),
        3 => Rational::new(&sym.product + &sym.e1, BigInt::from(2)) - Rational::from_integer(x),
        4 => {
            let inner = BigInt::from(3) * &d * &sym.e1
                + BigInt::from(2) * &d * &d
                + BigInt::from(2) * &n * &x
                + &sym.e1 * &sym.e1
                + &sym.e2;
            Rational::new(inner, BigInt::from(12))
        }
        _ => {
            let inner = &d * (&n * &n + &x * &x)
                + BigInt::from(2) * (&n * &n - &n * &x + &x * &x) * &sym.e1
                + &d * &sym.p2
                + sym.mixed_cubic(parts)
                + BigInt::from(3) * &d * &sym.e2
                + BigInt::from(3) * sym.complementary_products(parts);
            Rational::new(inner, BigInt::from(24))
        }
    };
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Theorem1,
    Section3,
    ClosedForm,
    Theorem2,
    ClosedFormTheorem2,
    Theorem3,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem1 => "theorem1",
            Check::Section3 => "section3",
            Check::ClosedForm => "closed-form",
            Check::Theorem2 => "theorem2",
            Check::ClosedFormTheorem2 => "closed-form-theorem2",
            Check::Theorem3 => "theorem3",
        }
    }

    /// Name of the scalar argument: `n` for counts, `x` for the
    /// `P - x` family.
    pub fn input_name(self) -> &'static str {
        match self {
            Check::Theorem1 | Check::Section3 | Check::ClosedForm => "n",
            _ => "x",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Oracle value against formula value for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub check: Check,
    pub parts: Vec<u64>,
    pub input: u64,
    pub lhs: BigInt,
    pub rhs: Rational,
    pub holds: bool,
}

impl TheoremReport {
    pub fn new(check: Check, parts: &PartSet, input: u64, lhs: BigInt, rhs: Rational) -> Self {
        let holds = rhs.is_integer() && rhs.numer() == &lhs;
        TheoremReport {
            check,
            parts: parts.parts().to_vec(),
            input,
            lhs,
            rhs,
            holds,
        }
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} parts={:?} {}={}: oracle={} formula={} {}",
            self.check,
            self.parts,
            self.check.input_name(),
            self.input,
            self.lhs,
            self.rhs,
            if self.holds { "ok" } else { "MISMATCH" }
        )
    }
}

fn oracle_at(table: &CountTable, n: u64) -> Result<BigInt> {
    lookup(table.parts(), Some(table), n).map(BigInt::from)
}

/// Runs `check` on one argument, taking oracle values from `table` where it
/// reaches.
pub fn run_check(check: Check, table: &CountTable, arg: u64) -> Result<TheoremReport> {
    let parts = table.parts();
    let (lhs, rhs) = match check {
        Check::Theorem1 => (
            oracle_at(table, arg)?,
            Rational::from_integer(theorem1_count_in(table, arg)?),
        ),
        Check::Section3 => (
            oracle_at(table, arg)?,
            Rational::from_integer(section3_count_in(table, arg)?),
        ),
        Check::ClosedForm => {
            let input = decompose(parts, arg);
            (
                oracle_at(table, arg)? - oracle_at(table, input.r)?,
                closed_form_correction(parts, arg)?,
            )
        }
        Check::Theorem2 | Check::ClosedFormTheorem2 => {
            let rhs = if check == Check::Theorem2 {
                Rational::from_integer(theorem2_count(parts, arg)?)
            } else {
                closed_form_theorem2(parts, arg)?
            };
            let product = parts.product_u64().expect("x <= product fits u64");
            (oracle_at(table, product - arg)?, rhs)
        }
        Check::Theorem3 => {
            let rhs = theorem3_rhs(parts, arg)?;
            let product = parts.product_u64().expect("x <= product fits u64");
            let direct = oracle_at(table, product - arg)?;
            let reflected = oracle_at(table, arg - parts.sum())?;
            (direct + sign(parts.k()) * reflected, rhs)
        }
    };
    Ok(TheoremReport::new(check, parts, arg, lhs, rhs))
}

/// Whether `x` lies in the domain of the `P - x` family for `check`.
pub fn in_domain(check: Check, parts: &PartSet, x: u64) -> bool {
    let below_product = BigUint::from(x) <= *parts.product();
    match check {
        Check::Theorem2 | Check::ClosedFormTheorem2 => x >= 1 && x < parts.sum() && below_product,
        Check::Theorem3 => x >= parts.sum() && below_product,
        _ => true,
    }
}
