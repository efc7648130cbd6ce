//! Grid-sweep verification: evaluate every catalog identity at every
//! applicable point of a parameter/index grid and tally pass,
//! precondition-skip and violation counts, with capped failure witnesses.
//!
//! Checks are independent and side-effect-free, so the sweep is
//! parallelized over (identity, parameter-set) tasks; tasks are merged in a
//! fixed order, so the report is identical to a sequential run.

pub mod bench;
pub mod config;

pub use bench::{benchmark, BenchReport, BenchRow};
pub use config::parse_grid_config;

use crate::identities::{registry, CheckOutcome, Identity, Indices};
use crate::sequence::{HoradamParams, Preset, SequenceTriple};
use serde::Serialize;
use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::Instant;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum VerifyError {
    #[error("invalid grid: {0}")]
    Config(String),
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error("grid file syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// One labelled parameter set of a grid.
#[derive(Clone, Debug)]
pub struct ParamSet {
    pub label: String,
    pub params: HoradamParams,
}

impl ParamSet {
    pub fn from_preset_token(token: &str) -> Result<Self, VerifyError> {
        let preset = Preset::parse_token(token)
            .map_err(|e| VerifyError::Config(format!("bad params token '{}': {}", token, e)))?;
        let params = preset
            .params()
            .map_err(|e| VerifyError::Config(e.to_string()))?;
        Ok(ParamSet {
            label: token.trim().to_string(),
            params,
        })
    }
}

/// A verification grid: parameter sets, inclusive index ranges, an optional
/// identity filter, and a quarantine list.
#[derive(Clone, Debug)]
pub struct GridSpec {
    pub param_sets: Vec<ParamSet>,
    pub m_range: RangeInclusive<i64>,
    pub n_range: RangeInclusive<i64>,
    pub r_range: RangeInclusive<i64>,
    pub k_range: RangeInclusive<i64>,
    pub identity_filter: Option<Vec<String>>,
    /// Extra ids to exclude, on top of the catalog's default quarantine.
    pub quarantine: Vec<String>,
    pub witness_cap: usize,
    pub jobs: Option<usize>,
}

/// The stock grid: the classic presets, a seeded G sequence, real parameter
/// sets covering q = 2, q = -3 and p = 3, and one Gaussian set; indices
/// m, n in [-6, 8], r in [-3, 5], k in [0, 6].
pub fn default_grid() -> GridSpec {
    let tokens = [
        "fibonacci",
        "lucas",
        "pell",
        "jacobsthal",
        "g(3,7)",
        "custom(0,1,3,2)",
        "custom(2,1,1,-3)",
        "custom(1+i,2,1+i,-i)",
    ];
    GridSpec {
        param_sets: tokens
            .iter()
            .map(|t| ParamSet::from_preset_token(t).expect("stock grid tokens are valid"))
            .collect(),
        m_range: -6..=8,
        n_range: -6..=8,
        r_range: -3..=5,
        k_range: 0..=6,
        identity_filter: None,
        quarantine: Vec::new(),
        witness_cap: 20,
        jobs: None,
    }
}

/// A violation witness: the instance and both conflicting values.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub identity: String,
    pub params: String,
    pub m: i64,
    pub n: i64,
    pub r: i64,
    pub k: i64,
    pub lhs: String,
    pub rhs: String,
}

/// Per-identity tallies; pass + skip + violation equals the instances
/// evaluated for that identity.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityTally {
    pub identity: String,
    pub pass: u64,
    pub skip: u64,
    pub violation: u64,
    pub skip_reasons: BTreeMap<String, u64>,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identities: Vec<IdentityTally>,
    pub quarantined: Vec<String>,
    pub total_instances: u64,
    pub total_pass: u64,
    pub total_skip: u64,
    pub total_violations: u64,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Fixed-width table, one line per identity plus a totals row.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let width = self
            .identities
            .iter()
            .map(|t| t.identity.len())
            .max()
            .unwrap_or(8)
            .max(8);
        out.push_str(&format!(
            "{:width$}  {:>9} {:>9} {:>9}\n",
            "identity",
            "pass",
            "skip",
            "violation",
            width = width
        ));
        for t in &self.identities {
            out.push_str(&format!(
                "{:width$}  {:>9} {:>9} {:>9}\n",
                t.identity,
                t.pass,
                t.skip,
                t.violation,
                width = width
            ));
        }
        out.push_str(&format!(
            "{:width$}  {:>9} {:>9} {:>9}\n",
            "total",
            self.total_pass,
            self.total_skip,
            self.total_violations,
            width = width
        ));
        if !self.quarantined.is_empty() {
            out.push_str(&format!("quarantined: {}\n", self.quarantined.join(", ")));
        }
        out.push_str(&format!(
            "{} instances in {} ms\n",
            self.total_instances, self.elapsed_ms
        ));
        out
    }
}

/// How the closed form is compared against the direct sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum CheckMode {
    Normal,
    /// Negative control: the closed form is sign-flipped before comparing,
    /// so every instance with a nonzero value must be reported violated.
    NegatedRhs,
}

fn validate(spec: &GridSpec) -> Result<(), VerifyError> {
    if spec.param_sets.is_empty() {
        return Err(VerifyError::Config("no parameter sets".into()));
    }
    for range in [&spec.m_range, &spec.n_range, &spec.r_range, &spec.k_range] {
        if range.is_empty() {
            return Err(VerifyError::Config("empty index range".into()));
        }
    }
    if *spec.k_range.start() < 0 {
        return Err(VerifyError::Config("k range must be non-negative".into()));
    }
    if let Some(filter) = &spec.identity_filter {
        for id in filter {
            if crate::identities::find(id).is_none() {
                return Err(VerifyError::UnknownIdentity(id.clone()));
            }
        }
    }
    for id in &spec.quarantine {
        if crate::identities::find(id).is_none() {
            return Err(VerifyError::UnknownIdentity(id.clone()));
        }
    }
    Ok(())
}

/// Identities the spec selects, minus the effective quarantine list.
fn select_identities(spec: &GridSpec) -> (Vec<&'static Identity>, Vec<String>) {
    let mut selected = Vec::new();
    let mut quarantined = Vec::new();
    for entry in registry() {
        let wanted = match &spec.identity_filter {
            Some(filter) => filter.iter().any(|id| id == entry.id),
            None => true,
        };
        if !wanted {
            continue;
        }
        if entry.default_quarantined || spec.quarantine.iter().any(|id| id == entry.id) {
            quarantined.push(entry.id.to_string());
        } else {
            selected.push(entry);
        }
    }
    (selected, quarantined)
}

fn axis(range: &RangeInclusive<i64>, used: bool) -> Vec<i64> {
    if used {
        range.clone().collect()
    } else {
        vec![0]
    }
}

fn run_task(
    entry: &Identity,
    set: &ParamSet,
    spec: &GridSpec,
    mode: CheckMode,
) -> IdentityTally {
    let triple = SequenceTriple::new(set.params.clone());
    let mut tally = IdentityTally {
        identity: entry.id.to_string(),
        pass: 0,
        skip: 0,
        violation: 0,
        skip_reasons: BTreeMap::new(),
        witnesses: Vec::new(),
    };
    let ms = axis(&spec.m_range, entry.uses.m);
    let ns = axis(&spec.n_range, entry.uses.n);
    let rs = axis(&spec.r_range, entry.uses.r);
    let ks = axis(&spec.k_range, entry.uses.k);
    for &m in &ms {
        for &n in &ns {
            for &r in &rs {
                for &k in &ks {
                    let ix = Indices::new(m, n, r, k);
                    let outcome = match mode {
                        CheckMode::Normal => entry.check_terms(&triple, ix),
                        CheckMode::NegatedRhs => entry.check_terms_negated_rhs(&triple, ix),
                    };
                    match outcome {
                        CheckOutcome::Pass(_) => tally.pass += 1,
                        CheckOutcome::PreconditionUnmet(reason) => {
                            tally.skip += 1;
                            *tally.skip_reasons.entry(reason).or_insert(0) += 1;
                        }
                        CheckOutcome::Violated { lhs, rhs } => {
                            tally.violation += 1;
                            tally.witnesses.push(Witness {
                                identity: entry.id.to_string(),
                                params: set.label.clone(),
                                m,
                                n,
                                r,
                                k,
                                lhs: lhs.to_string(),
                                rhs: rhs.to_string(),
                            });
                        }
                    }
                }
            }
        }
    }
    tally
}

fn merge(tallies: Vec<IdentityTally>, witness_cap: usize) -> Vec<IdentityTally> {
    let mut merged: Vec<IdentityTally> = Vec::new();
    for tally in tallies {
        match merged.last_mut() {
            Some(last) if last.identity == tally.identity => {
                last.pass += tally.pass;
                last.skip += tally.skip;
                last.violation += tally.violation;
                for (reason, count) in tally.skip_reasons {
                    *last.skip_reasons.entry(reason).or_insert(0) += count;
                }
                last.witnesses.extend(tally.witnesses);
            }
            _ => merged.push(tally),
        }
    }
    for tally in &mut merged {
        tally.witnesses.truncate(witness_cap);
    }
    merged
}

fn run_grid_mode(spec: &GridSpec, mode: CheckMode) -> Result<VerificationReport, VerifyError> {
    validate(spec)?;
    let start = Instant::now();
    let (identities, quarantined) = select_identities(spec);
    // tasks in (identity, parameter set) order so the merged report is
    // deterministic no matter how the pool schedules them
    let tasks: Vec<(&Identity, &ParamSet)> = identities
        .iter()
        .flat_map(|entry| {
            spec.param_sets
                .iter()
                .filter(|set| entry.constraint.matches(&set.params))
                .map(move |set| (*entry, set))
        })
        .collect();
    let run_all = || -> Vec<IdentityTally> {
        use rayon::prelude::*;
        tasks
            .par_iter()
            .map(|(entry, set)| run_task(entry, set, spec, mode))
            .collect()
    };
    let tallies = match spec.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| VerifyError::Config(e.to_string()))?
            .install(run_all),
        None => run_all(),
    };
    let identities = merge(tallies, spec.witness_cap);
    let total_pass = identities.iter().map(|t| t.pass).sum();
    let total_skip = identities.iter().map(|t| t.skip).sum();
    let total_violations = identities.iter().map(|t| t.violation).sum();
    Ok(VerificationReport {
        total_instances: total_pass + total_skip + total_violations,
        total_pass,
        total_skip,
        total_violations,
        identities,
        quarantined,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Evaluate every selected identity at every applicable grid point.
pub fn run_grid(spec: &GridSpec) -> Result<VerificationReport, VerifyError> {
    run_grid_mode(spec, CheckMode::Normal)
}

/// Negative control for the harness itself: runs the grid comparing each
/// direct sum against the sign-flipped closed form. A sound catalog must
/// violate at every instance whose value is nonzero; anything else points
/// at a vacuous-pass bug.
pub fn run_grid_negative_control(spec: &GridSpec) -> Result<VerificationReport, VerifyError> {
    run_grid_mode(spec, CheckMode::NegatedRhs)
}

/// Count the grid instances whose checked value is nonzero (the instances
/// the negative control is required to flag).
pub fn count_nonzero_passes(spec: &GridSpec) -> Result<u64, VerifyError> {
    validate(spec)?;
    let (identities, _) = select_identities(spec);
    let mut nonzero = 0u64;
    for entry in identities {
        for set in &spec.param_sets {
            if !entry.constraint.matches(&set.params) {
                continue;
            }
            let triple = SequenceTriple::new(set.params.clone());
            for &m in &axis(&spec.m_range, entry.uses.m) {
                for &n in &axis(&spec.n_range, entry.uses.n) {
                    for &r in &axis(&spec.r_range, entry.uses.r) {
                        for &k in &axis(&spec.k_range, entry.uses.k) {
                            if let CheckOutcome::Pass(v) =
                                entry.check_terms(&triple, Indices::new(m, n, r, k))
                            {
                                if !v.is_zero() {
                                    nonzero += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(nonzero)
}
