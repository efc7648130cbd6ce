//! The identity catalog: weighted summation identities over w(a,b;p,q),
//! each with a direct-sum side (the O(k) evaluation) and a closed-form side,
//! checked as exact scalar equalities at concrete instances.
//!
//! Every displayed equation is a first-class [`Identity`] with a stable
//! kebab-case id, the index tuple it consumes, its preconditions, and an
//! optional route through the generic lemma machinery in [`lemmas`]. The
//! complete catalog lives in [`registry`].

pub mod classics;
pub mod kernel;
pub mod lemma_entries;
pub mod lemmas;
pub mod ratio_weights;
pub mod registry;
pub mod u_weights;
pub mod v_weights;

pub use lemmas::{
    lemma1_closed, lemma1_sum, lemma3_closed, lemma3_sum, lemma5_closed, lemma5_sum,
    Lemma3Variant, Lemma5Variant, LemmaConfig, LemmaForm,
};
pub use registry::{find, registry};

use crate::numeric::{GaussianRational, NumericError, Rational};
use crate::sequence::{HoradamParams, Preset, SequenceError, SequenceTriple, Terms};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// Largest |index| accepted by evaluators before index arithmetic runs;
/// keeps all internal i64 expressions overflow-free.
const MAX_RAW_INDEX: i64 = 1 << 20;

/// An unmet hypothesis: the instance is skipped, not failed.
///
/// The reason is the requirement that did not hold, e.g. `w_{r-1}!=0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skip(pub String);

impl Skip {
    pub fn new(reason: impl Into<String>) -> Self {
        Skip(reason.into())
    }
}

impl fmt::Display for Skip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<SequenceError> for Skip {
    fn from(e: SequenceError) -> Self {
        match e {
            SequenceError::IndexGuardExceeded { .. } => Skip::new("index-guard"),
            other => Skip::new(other.to_string()),
        }
    }
}

impl From<NumericError> for Skip {
    fn from(e: NumericError) -> Self {
        match e {
            NumericError::DivisionByZero => Skip::new("division-by-zero"),
            other => Skip::new(other.to_string()),
        }
    }
}

pub type EvalResult = Result<GaussianRational, Skip>;

/// The index tuple (m, n, r, k). Identities read only the components they
/// declare in [`IndexUse`]; k is always non-negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Indices {
    pub m: i64,
    pub n: i64,
    pub r: i64,
    pub k: i64,
}

impl Indices {
    pub fn new(m: i64, n: i64, r: i64, k: i64) -> Self {
        Indices { m, n, r, k }
    }
}

/// Which of (m, n, r, k) an identity consumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexUse {
    pub m: bool,
    pub n: bool,
    pub r: bool,
    pub k: bool,
}

impl IndexUse {
    pub const M_K: IndexUse = IndexUse { m: true, n: false, r: false, k: true };
    pub const M_R_K: IndexUse = IndexUse { m: true, n: false, r: true, k: true };
    pub const N_R_K: IndexUse = IndexUse { m: false, n: true, r: true, k: true };
    pub const M_N_R_K: IndexUse = IndexUse { m: true, n: true, r: true, k: true };
    pub const R_K: IndexUse = IndexUse { m: false, n: false, r: true, k: true };
    pub const K: IndexUse = IndexUse { m: false, n: false, r: false, k: true };
    pub const M_R: IndexUse = IndexUse { m: true, n: false, r: true, k: false };
    pub const M_N_R: IndexUse = IndexUse { m: true, n: true, r: true, k: false };
    pub const N: IndexUse = IndexUse { m: false, n: false, r: true, k: false };

    /// Short listing form, e.g. `m,r,k`.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if self.m {
            parts.push("m");
        }
        if self.n {
            parts.push("n");
        }
        if self.r {
            parts.push("r");
        }
        if self.k {
            parts.push("k");
        }
        if parts.is_empty() {
            "-".into()
        } else {
            parts.join(",")
        }
    }
}

/// Parameter applicability of a catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamConstraint {
    /// Applies to every (a,b,p,q).
    Any,
    /// Applies only to the exact parameters of one of the classic presets.
    Exact(Preset),
    /// Applies to every sequence with p = 1, q = -1 (arbitrary seeds).
    GFamily,
}

impl ParamConstraint {
    pub fn matches(&self, params: &HoradamParams) -> bool {
        match self {
            ParamConstraint::Any => true,
            ParamConstraint::Exact(preset) => {
                preset.params().map(|p| &p == params).unwrap_or(false)
            }
            ParamConstraint::GFamily => {
                params.p().is_one() && params.q() == &GaussianRational::from_int(-1)
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            ParamConstraint::Any => "any".into(),
            ParamConstraint::Exact(p) => format!("{:?}", p).to_lowercase(),
            ParamConstraint::GFamily => "p=1,q=-1".into(),
        }
    }
}

/// Result of checking one identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    /// Both sides evaluate to this common scalar.
    Pass(GaussianRational),
    /// A hypothesis failed; the instance does not count as pass or fail.
    PreconditionUnmet(String),
    /// The sides disagree; both values are kept as the witness.
    Violated {
        lhs: GaussianRational,
        rhs: GaussianRational,
    },
}

pub type EvalFn = Box<dyn Fn(&dyn Terms, Indices) -> EvalResult + Send + Sync>;
pub type ViaLemmaFn =
    Box<dyn Fn(&dyn Terms, Indices) -> Result<(GaussianRational, GaussianRational), Skip> + Send + Sync>;

/// One checkable identity: a stable id, its anchor formula, the indices it
/// consumes, and paired direct-sum / closed-form evaluators.
pub struct Identity {
    pub id: &'static str,
    /// Human-readable statement of the equality in index notation.
    pub anchor: &'static str,
    pub uses: IndexUse,
    /// Listing summary of the hypotheses, `-` when there are none.
    pub preconditions: &'static str,
    pub constraint: ParamConstraint,
    /// Entries whose shipped form is known not to hold are excluded from
    /// default verification runs and must be requested explicitly.
    pub default_quarantined: bool,
    pub lhs: EvalFn,
    pub rhs: EvalFn,
    /// Same equality computed through the generic lemma with the proof's
    /// (x, y, alpha, beta), returned as (sum side, closed side).
    pub via_lemma: Option<ViaLemmaFn>,
}

impl Identity {
    /// Evaluate both sides at an instance and compare exactly.
    pub fn check_terms(&self, src: &dyn Terms, idx: Indices) -> CheckOutcome {
        self.check_inner(src, idx, false)
    }

    /// Negative-control variant: compares the direct sum against the
    /// sign-flipped closed form. Used to prove the harness cannot pass
    /// vacuously; a healthy identity must violate wherever its value is
    /// nonzero.
    pub fn check_terms_negated_rhs(&self, src: &dyn Terms, idx: Indices) -> CheckOutcome {
        self.check_inner(src, idx, true)
    }

    fn check_inner(&self, src: &dyn Terms, idx: Indices, negate_rhs: bool) -> CheckOutcome {
        if !self.constraint.matches(src.params()) {
            return CheckOutcome::PreconditionUnmet(format!(
                "params-not-applicable (requires {})",
                self.constraint.describe()
            ));
        }
        if idx.k < 0 {
            return CheckOutcome::PreconditionUnmet("k>=0".into());
        }
        if [idx.m, idx.n, idx.r, idx.k]
            .iter()
            .any(|&v| v.unsigned_abs() > MAX_RAW_INDEX as u64)
        {
            return CheckOutcome::PreconditionUnmet("index-guard".into());
        }
        let lhs = match (self.lhs)(src, idx) {
            Ok(v) => v,
            Err(skip) => return CheckOutcome::PreconditionUnmet(skip.0),
        };
        let rhs = match (self.rhs)(src, idx) {
            Ok(v) => v,
            Err(skip) => return CheckOutcome::PreconditionUnmet(skip.0),
        };
        let rhs = if negate_rhs { -&rhs } else { rhs };
        if lhs == rhs {
            CheckOutcome::Pass(lhs)
        } else {
            CheckOutcome::Violated { lhs, rhs }
        }
    }
}

/// An identity id plus everything needed to evaluate it once.
#[derive(Clone, Debug)]
pub struct IdentityInstance {
    pub id: String,
    pub params: HoradamParams,
    pub indices: Indices,
}

/// Look up the identity and check it at the instance, building a fresh
/// memoized triple. Returns `None` for an unknown id.
pub fn check(instance: &IdentityInstance) -> Option<CheckOutcome> {
    let identity = find(&instance.id)?;
    let triple = SequenceTriple::new(instance.params.clone());
    Some(identity.check_terms(&triple, instance.indices))
}

// ---- Shared evaluation helpers ----

/// Exact binomial coefficient C(k, j); zero outside 0 <= j <= k.
pub fn binomial(k: i64, j: i64) -> BigInt {
    if j < 0 || j > k || k < 0 {
        return BigInt::zero();
    }
    let j = j.min(k - j);
    let mut acc = BigInt::one();
    for i in 0..j {
        acc = acc * BigInt::from(k - i) / BigInt::from(i + 1);
    }
    acc
}

pub(crate) fn scalar_from_bigint(n: &BigInt) -> GaussianRational {
    GaussianRational::new(Rational::from(n.clone()), Rational::zero())
}

/// Σ_{j=0}^{k} t^j · f(j), accumulating the weight power incrementally.
pub(crate) fn power_sum(
    k: i64,
    t: &GaussianRational,
    mut f: impl FnMut(i64) -> EvalResult,
) -> EvalResult {
    debug_assert!(k >= 0);
    let mut acc = GaussianRational::zero();
    let mut weight = GaussianRational::one();
    for j in 0..=k {
        if j > 0 {
            weight = &weight * t;
        }
        acc = &acc + &(&weight * &f(j)?);
    }
    Ok(acc)
}

/// Σ_{j=0}^{k} C(k,j) · t^j · f(j), with exact binomials built by the
/// multiplicative recurrence C(k,j+1) = C(k,j)·(k-j)/(j+1).
pub(crate) fn binomial_power_sum(
    k: i64,
    t: &GaussianRational,
    mut f: impl FnMut(i64) -> EvalResult,
) -> EvalResult {
    debug_assert!(k >= 0);
    let mut acc = GaussianRational::zero();
    let mut weight = GaussianRational::one();
    let mut coeff = BigInt::one();
    for j in 0..=k {
        if j > 0 {
            weight = &weight * t;
            coeff = coeff * BigInt::from(k - (j - 1)) / BigInt::from(j);
        }
        let term = &scalar_from_bigint(&coeff) * &f(j)?;
        acc = &acc + &(&weight * &term);
    }
    Ok(acc)
}

/// Require a scalar to be nonzero; `what` names the hypothesis, stated as
/// the requirement that failed (e.g. `w_{r-1}!=0`).
pub(crate) fn nonzero(v: GaussianRational, what: &str) -> Result<GaussianRational, Skip> {
    if v.is_zero() {
        Err(Skip::new(what))
    } else {
        Ok(v)
    }
}

/// base^e, reporting zero-base negative-exponent as an unmet hypothesis.
pub(crate) fn pow(base: &GaussianRational, e: i64, what: &str) -> EvalResult {
    base.int_pow(e).map_err(|_| Skip::new(what))
}

/// The quotient (a·u[n] - b·u[n-1]) / (a·u[n] + (b - pa)·u[n-1]).
///
/// The denominator equals w[n]; a zero denominator is an unmet hypothesis
/// tagged with the given name.
pub(crate) fn seed_ratio(src: &dyn Terms, n: i64, what: &str) -> EvalResult {
    let params = src.params();
    let (a, b, p) = (params.a(), params.b(), params.p());
    let u_n = src.u(n)?;
    let u_n1 = src.u(n - 1)?;
    let denom = &(a * &u_n) + &(&(b - &(p * a)) * &u_n1);
    if denom.is_zero() {
        return Err(Skip::new(what));
    }
    let numer = &(a * &u_n) - &(b * &u_n1);
    Ok(numer.checked_div(&denom)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(10, 0), BigInt::one());
        assert_eq!(binomial(10, 10), BigInt::one());
        assert_eq!(binomial(4, 7), BigInt::zero());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn binomial_symmetry() {
        for k in 0..=24i64 {
            for j in 0..=k {
                assert_eq!(binomial(k, j), binomial(k, k - j));
            }
        }
    }

    #[test]
    fn power_sum_accumulates() {
        // Σ 2^j · j for j = 0..3 = 0 + 2 + 8 + 24
        let t = GaussianRational::from_int(2);
        let got = power_sum(3, &t, |j| Ok(GaussianRational::from_int(j))).unwrap();
        assert_eq!(got, GaussianRational::from_int(34));
    }

    #[test]
    fn binomial_power_sum_is_binomial_theorem() {
        // Σ C(5,j)·x^j = (1+x)^5 at x = 3
        let t = GaussianRational::from_int(3);
        let got = binomial_power_sum(5, &t, |_| Ok(GaussianRational::one())).unwrap();
        assert_eq!(got, GaussianRational::from_int(1024));
    }
}
