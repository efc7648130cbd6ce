//! Closed-form versus direct-sum timing.
//!
//! The direct sum is evaluated against a fresh memoized triple (its cost is
//! the honest cost of walking the recurrence and accumulating k weighted
//! terms); the closed form is evaluated through the log-time companion
//! power. Timings are only reported after the two values are confirmed
//! exactly equal.

use crate::identities::{find, CheckOutcome, Indices};
use crate::numeric::GaussianRational;
use crate::sequence::{FastTerms, HoradamParams, SequenceTriple};
use std::time::Instant;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum BenchError {
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error("precondition unmet at k={k}: {reason}")]
    PreconditionUnmet { k: i64, reason: String },
    #[error("sides disagree at k={k}: lhs={lhs} rhs={rhs}")]
    Mismatch { k: i64, lhs: String, rhs: String },
    #[error("k must be non-negative, got {0}")]
    NegativeK(i64),
}

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub k: i64,
    pub sum_nanos: u128,
    pub closed_nanos: u128,
    pub value: GaussianRational,
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub identity: String,
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn render_table(&self) -> String {
        let mut out = format!(
            "{:>8}  {:>14} {:>14}  {}\n",
            "k", "sum(ms)", "closed(ms)", "value"
        );
        for row in &self.rows {
            out.push_str(&format!(
                "{:>8}  {:>14.3} {:>14.3}  {}\n",
                row.k,
                row.sum_nanos as f64 / 1e6,
                row.closed_nanos as f64 / 1e6,
                row.value
            ));
        }
        out
    }
}

/// Time the two sides of `id` at each k, holding the other indices fixed.
///
/// Fails without reporting timings when a hypothesis is unmet or the sides
/// disagree at any requested k.
pub fn benchmark(
    id: &str,
    params: &HoradamParams,
    k_values: &[i64],
    base: Indices,
    max_index: i64,
) -> Result<BenchReport, BenchError> {
    let identity = find(id).ok_or_else(|| BenchError::UnknownIdentity(id.to_string()))?;
    let mut rows = Vec::new();
    for &k in k_values {
        if k < 0 {
            return Err(BenchError::NegativeK(k));
        }
        let ix = Indices { k, ..base };

        let triple = SequenceTriple::with_guard(params.clone(), max_index);
        let sum_started = Instant::now();
        let lhs = (identity.lhs)(&triple, ix);
        let sum_nanos = sum_started.elapsed().as_nanos();

        let fast = FastTerms::with_guard(params.clone(), max_index);
        let closed_started = Instant::now();
        let rhs = (identity.rhs)(&fast, ix);
        let closed_nanos = closed_started.elapsed().as_nanos();

        let (lhs, rhs) = match (lhs, rhs) {
            (Ok(l), Ok(r)) => (l, r),
            (Err(skip), _) | (_, Err(skip)) => {
                return Err(BenchError::PreconditionUnmet {
                    k,
                    reason: skip.0,
                })
            }
        };
        if lhs != rhs {
            return Err(BenchError::Mismatch {
                k,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        // cross-check against the memoized evaluation path
        debug_assert!(matches!(
            identity.check_terms(&triple, ix),
            CheckOutcome::Pass(_)
        ));
        rows.push(BenchRow {
            k,
            sum_nanos,
            closed_nanos,
            value: lhs,
        });
    }
    Ok(BenchReport {
        identity: id.to_string(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::Preset;

    #[test]
    fn values_agree_and_rows_are_per_k() {
        let params = Preset::Fibonacci.params().unwrap();
        let base = Indices::new(12, 3, 1, 0);
        let report = benchmark("eq-f9x35z3", &params, &[0, 5, 40], base, 100_000).unwrap();
        assert_eq!(report.rows.len(), 3);
        // k = 0 collapses the sum to the single term w_m
        assert_eq!(report.rows[0].value, GaussianRational::from_int(144));
    }

    #[test]
    fn unmet_preconditions_do_not_produce_rows() {
        let params = Preset::Fibonacci.params().unwrap();
        // r = 0 makes u_{r-1} vanish for the binomial family
        let base = Indices::new(2, 0, 0, 0);
        let err = benchmark("eq-f9x35z3", &params, &[3], base, 100_000).unwrap_err();
        assert!(matches!(err, BenchError::PreconditionUnmet { .. }));
        assert!(matches!(
            benchmark("nope", &params, &[1], base, 100_000),
            Err(BenchError::UnknownIdentity(_))
        ));
        assert!(matches!(
            benchmark("eq-f9x35z3", &params, &[-1], base, 100_000),
            Err(BenchError::NegativeK(_))
        ));
    }
}
