use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

/// A set of allowed part sizes `a_1 < a_2 < ... < a_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartSet {
    parts: Vec<u64>,
    product: BigUint,
    sum: u64,
    pairwise_coprime: bool,
}

impl PartSet {
    /// Accepts parts in any order; rejects an empty list, zero parts and
    /// repeated parts.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParts("no parts given".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParts(format!("zero part in {parts:?}")));
        }
        parts.sort_unstable();
        if let Some(w) = parts.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParts(format!("repeated part {}", w[0])));
        }
        let sum = parts
            .iter()
            .try_fold(0u64, |acc, &a| acc.checked_add(a))
            .ok_or_else(|| Error::InvalidParts(format!("sum of {parts:?} overflows")))?;
        let product = parts
            .iter()
            .fold(BigUint::one(), |acc, &a| acc * BigUint::from(a));
        let pairwise_coprime = pairwise_coprime(&parts);
        Ok(PartSet {
            parts,
            product,
            sum,
            pairwise_coprime,
        })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn product(&self) -> &BigUint {
        &self.product
    }

    /// The product when it fits a machine word.
    pub fn product_u64(&self) -> Option<u64> {
        u64::try_from(&self.product).ok()
    }

    pub fn sum(&self) -> u64 {
        self.sum
    }

    pub fn min_part(&self) -> u64 {
        self.parts[0]
    }

    pub fn max_part(&self) -> u64 {
        self.parts[self.parts.len() - 1]
    }

    pub fn is_pairwise_coprime(&self) -> bool {
        self.pairwise_coprime
    }

    pub fn require_coprime(&self) -> Result<()> {
        if self.pairwise_coprime {
            Ok(())
        } else {
            Err(Error::NotCoprime {
                parts: self.parts.clone(),
            })
        }
    }

    /// The set with `part` removed; `None` if it is absent or the last part.
    pub fn without(&self, part: u64) -> Option<PartSet> {
        let rest: Vec<u64> = self.parts.iter().copied().filter(|&a| a != part).collect();
        if rest.len() == self.parts.len() || rest.is_empty() {
            return None;
        }
        PartSet::new(rest).ok()
    }
}

pub fn pairwise_coprime(parts: &[u64]) -> bool {
    parts
        .iter()
        .enumerate()
        .all(|(i, a)| parts[i + 1..].iter().all(|b| a.gcd(b) == 1))
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}
