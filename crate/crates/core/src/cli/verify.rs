//! Seeded random sweeps that check every reduction formula against the
//! oracle.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::oracle::oracle_table;
use crate::partset::{pairwise_coprime, PartSet};
use crate::reductions::{in_domain, run_check, Check};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub k_min: usize,
    pub k_max: usize,
    pub max_part: u64,
    pub trials: usize,
    pub seed: u64,
    pub max_product: u64,
    pub max_attempts: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            k_min: 2,
            k_max: 5,
            max_part: 13,
            trials: 500,
            seed: 0,
            max_product: 100_000,
            max_attempts: 10_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureDetail {
    Mismatch { lhs: BigInt, rhs: Rational },
    Error(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub trial: usize,
    pub check: Check,
    pub parts: Vec<u64>,
    pub input: u64,
    pub detail: FailureDetail,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub trials: usize,
    pub checks: usize,
    pub seed: u64,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Rejection sampling: draw `k` distinct values from `[1, max_part]` and
/// keep the draw iff it is pairwise coprime.
pub fn random_coprime_partset<R: Rng + ?Sized>(
    k: usize,
    max_part: u64,
    rng: &mut R,
    max_attempts: usize,
) -> Result<PartSet> {
    sample_partset(k, max_part, None, rng, max_attempts)
}

fn sample_partset<R: Rng + ?Sized>(
    k: usize,
    max_part: u64,
    max_product: Option<u64>,
    rng: &mut R,
    max_attempts: usize,
) -> Result<PartSet> {
    let exhausted = Error::SamplingExhausted {
        k,
        max_part,
        attempts: max_attempts,
    };
    let range = usize::try_from(max_part).map_err(|_| exhausted.clone())?;
    if k == 0 || k > range {
        return Err(exhausted);
    }
    for _ in 0..max_attempts {
        let draw: Vec<u64> = sample(rng, range, k)
            .into_iter()
            .map(|i| i as u64 + 1)
            .collect();
        if !pairwise_coprime(&draw) {
            continue;
        }
        let parts = PartSet::new(draw)?;
        let small_enough = match max_product {
            Some(cap) => parts.product_u64().is_some_and(|p| p <= cap),
            None => true,
        };
        if small_enough {
            return Ok(parts);
        }
    }
    Err(exhausted)
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

struct TrialOutcome {
    checks: usize,
    failures: Vec<Failure>,
}

fn run_trial(config: &VerifyConfig, trial: usize) -> Result<TrialOutcome> {
    let mut rng = trial_rng(config.seed, trial);
    let k = rng.gen_range(config.k_min..=config.k_max);
    let parts = sample_partset(
        k,
        config.max_part,
        Some(config.max_product),
        &mut rng,
        config.max_attempts,
    )?;
    let product = parts.product_u64().expect("product capped");
    let q = rng.gen_range(0..=3u64);
    let r = rng.gen_range(0..product);
    let n = q * product + r;

    let mut plan: Vec<(Check, u64)> = vec![(Check::Theorem1, n)];
    if k >= 2 {
        plan.push((Check::Section3, n));
        if k <= 5 {
            plan.push((Check::ClosedForm, n));
        }
        let high2 = (parts.sum() - 1).min(product);
        if high2 >= 1 {
            let x = rng.gen_range(1..=high2);
            plan.push((Check::Theorem2, x));
            if k <= 5 {
                plan.push((Check::ClosedFormTheorem2, x));
            }
        }
        if parts.sum() <= product {
            let x = rng.gen_range(parts.sum()..=product);
            plan.push((Check::Theorem3, x));
        }
    }

    let table = oracle_table(&parts, n.max(product) as usize);
    let mut failures = Vec::new();
    for &(check, arg) in &plan {
        debug_assert!(in_domain(check, &parts, arg));
        let detail = match run_check(check, &table, arg) {
            Ok(report) if report.holds => continue,
            Ok(report) => FailureDetail::Mismatch {
                lhs: report.lhs,
                rhs: report.rhs,
            },
            Err(e) => FailureDetail::Error(e.to_string()),
        };
        failures.push(Failure {
            trial,
            check,
            parts: parts.parts().to_vec(),
            input: arg,
            detail,
        });
    }
    Ok(TrialOutcome {
        checks: plan.len(),
        failures,
    })
}

/// Runs `config.trials` independent trials in parallel. Each trial owns an
/// RNG stream derived from `(seed, trial)`, so results do not depend on
/// scheduling.
pub fn run_verify(config: &VerifyConfig) -> Result<VerifyReport> {
    let start = Instant::now();
    let outcomes = (0..config.trials)
        .into_par_iter()
        .map(|trial| run_trial(config, trial))
        .collect::<Result<Vec<_>>>()?;
    let checks = outcomes.iter().map(|o| o.checks).sum();
    let failures = outcomes.into_iter().flat_map(|o| o.failures).collect();
    Ok(VerifyReport {
        trials: config.trials,
        checks,
        seed: config.seed,
        failures,
        elapsed: start.elapsed(),
    })
}
