//! Ground-truth denumerants by coefficient extraction.
//!
//! `p_A(n)` is the coefficient of `λ^n` in `prod_i 1/(1 - λ^{a_i})`. The
//! table is built one part at a time: starting from `1, 0, 0, ...`, dividing
//! by `1 - λ^a` is the in-place prefix recurrence `c[n] += c[n - a]`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partset::PartSet;

/// `counts[n] = p_A(n)` for `0 <= n <= upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    parts: PartSet,
    upper: usize,
    counts: Vec<BigUint>,
}

impl CountTable {
    pub fn parts(&self) -> &PartSet {
        &self.parts
    }

    pub fn upper(&self) -> usize {
        self.upper
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `p_A(n)`, or `None` past the table.
    pub fn get(&self, n: u64) -> Option<&BigUint> {
        usize::try_from(n).ok().and_then(|n| self.counts.get(n))
    }
}

/// Counts for a list of parts that may repeat.
pub fn oracle_table_multiset(parts: &[u64], upper: usize) -> Vec<BigUint> {
    let mut counts = vec![BigUint::zero(); upper + 1];
    counts[0] = BigUint::one();
    for &a in parts {
        let Ok(a) = usize::try_from(a) else { continue };
        if a == 0 || a > upper {
            continue;
        }
        for n in a..=upper {
            let (low, high) = counts.split_at_mut(n);
            high[0] += &low[n - a];
        }
    }
    counts
}

pub fn oracle_table(parts: &PartSet, upper: usize) -> CountTable {
    CountTable {
        parts: parts.clone(),
        upper,
        counts: oracle_table_multiset(parts.parts(), upper),
    }
}

pub(crate) fn table_index(parts: &PartSet, n: u64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::TooLarge {
        value: n.to_string(),
        parts: parts.parts().to_vec(),
    })
}

pub fn oracle_count(parts: &PartSet, n: u64) -> Result<BigUint> {
    let upper = table_index(parts, n)?;
    let mut table = oracle_table(parts, upper).counts;
    Ok(table.swap_remove(upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ps(parts: &[u64]) -> PartSet {
        PartSet::new(parts.to_vec()).unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    // Exhaustive enumeration of all (x_1, ..., x_k) with sum a_i x_i = n.
    fn enumerate(parts: &[u64], n: u64) -> u64 {
        match parts.split_first() {
            None => u64::from(n == 0),
            Some((&a, rest)) => (0..=n / a).map(|x| enumerate(rest, n - a * x)).sum(),
        }
    }

    #[test]
    fn table_examples() {
        let t = oracle_table(&ps(&[1]), 5);
        assert_eq!(t.counts(), &vec![big(1); 6][..]);
        assert_eq!(oracle_table(&ps(&[2, 3]), 5).get(5), Some(&big(1)));
        assert_eq!(oracle_table(&ps(&[2, 3, 5]), 20).get(20), Some(&big(11)));
        assert_eq!(oracle_table(&ps(&[2, 4]), 7).get(7), Some(&big(0)));
        assert_eq!(oracle_table(&ps(&[2, 4]), 7).get(8), None);
    }

    #[test]
    fn count_examples() {
        assert_eq!(oracle_count(&ps(&[2, 3, 5]), 29).unwrap(), big(19));
        assert_eq!(oracle_count(&ps(&[7]), 21).unwrap(), big(1));
        assert_eq!(oracle_count(&ps(&[7]), 20).unwrap(), big(0));
        assert_eq!(oracle_count(&ps(&[2, 3, 5]), 0).unwrap(), big(1));
    }

    #[test]
    fn enumeration_agrees_on_frozen_values() {
        assert_eq!(enumerate(&[2, 3, 5], 20), 11);
        assert_eq!(enumerate(&[2, 3, 5], 29), 19);
        assert_eq!(enumerate(&[2, 3, 5], 59), 68);
        assert_eq!(enumerate(&[3, 5, 7], 90), 46);
    }

    #[test]
    fn leading_zeros_and_base() {
        let t = oracle_table(&ps(&[4, 7, 9]), 40);
        assert_eq!(t.counts()[0], big(1));
        assert!(t.counts()[1..4].iter().all(Zero::is_zero));
    }

    #[test]
    fn multiset_counts() {
        // Two distinguishable parts of size 1: n + 1 solutions.
        let counts = oracle_table_multiset(&[1, 1], 6);
        assert_eq!(counts[6], big(7));
        assert_eq!(
            oracle_table_multiset(&[], 3),
            vec![big(1), big(0), big(0), big(0)]
        );
    }

    #[test]
    fn large_values_do_not_overflow() {
        let t = oracle_table(&ps(&(1..=12).collect::<Vec<_>>()), 5000);
        assert!(t.counts()[5000] > big(u64::MAX));
    }

    fn arb_parts() -> impl Strategy<Value = Vec<u64>> {
        proptest::collection::btree_set(1u64..=12, 1..=4).prop_map(|s| s.into_iter().collect())
    }

    proptest! {
        #[test]
        fn matches_enumeration(parts in arb_parts(), n in 0u64..60) {
            let a = ps(&parts);
            prop_assert_eq!(oracle_count(&a, n).unwrap(), big(enumerate(&parts, n)));
        }

        #[test]
        fn peel_largest_part(parts in arb_parts(), upper in 0usize..80) {
            prop_assume!(parts.len() >= 2);
            let a = ps(&parts);
            let largest = a.max_part() as usize;
            let rest = a.without(a.max_part()).unwrap();
            let full = oracle_table(&a, upper);
            let reduced = oracle_table(&rest, upper);
            for n in largest..=upper {
                prop_assert_eq!(
                    &full.counts()[n],
                    &(&reduced.counts()[n] + &full.counts()[n - largest])
                );
            }
        }

        #[test]
        fn generating_function_inverse(parts in arb_parts(), upper in 0usize..80) {
            let a = ps(&parts);
            let table = oracle_table(&a, upper);
            // prod (1 - λ^a) as signed integer coefficients
            let mut denom = vec![0i64; upper + 1];
            denom[0] = 1;
            for &p in a.parts() {
                let p = p as usize;
                for n in (p..=upper).rev() {
                    denom[n] -= denom[n - p];
                }
            }
            for n in 0..=upper {
                let acc: num_bigint::BigInt = denom[..=n]
                    .iter()
                    .zip(table.counts()[..=n].iter().rev())
                    .map(|(&d, c)| num_bigint::BigInt::from(d) * num_bigint::BigInt::from(c.clone()))
                    .sum();
                prop_assert_eq!(acc, num_bigint::BigInt::from(u64::from(n == 0)));
            }
        }

        #[test]
        fn single_part_divisibility(a in 1u64..20, n in 0u64..200) {
            let expected = big(u64::from(n % a == 0));
            prop_assert_eq!(oracle_count(&ps(&[a]), n).unwrap(), expected);
        }
    }
}
