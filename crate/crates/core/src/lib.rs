//! Exact restricted partition functions (denumerants) `p_A(n)` and the
//! Bernoulli–Barnes reduction formulas for pairwise coprime part sets.
//!
//! * [`exact_arith`]: rationals, polynomials, truncated power series.
//! * [`bernoulli`]: Bernoulli numbers, power sums, Bernoulli–Barnes polynomials.
//! * [`oracle`]: `p_A(n)` by coefficient extraction, the ground truth.
//! * [`reductions`]: the reduction formulas, the series recursion and the
//!   closed forms for `k <= 5`.
//! * [`cli`]: the command-line front end.

pub mod bernoulli;
pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod oracle;
pub mod partset;
pub mod reductions;

pub use error::{Error, Result};
pub use partset::PartSet;
