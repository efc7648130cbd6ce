//! Generic weighted-sum machinery.
//!
//! A [`LemmaConfig`] captures a relation X[m] = x·X[m-alpha] + y·Y[m-beta]
//! between term sources X and Y (with Y = X for the single-sequence forms),
//! where x, y are fixed nonzero scalars and alpha, beta are integers. Three
//! families of finite-sum consequences are evaluated from it:
//!
//! - `lemma1_*`: the two-sequence geometric-weight sum and its closed form;
//! - `lemma3_*`: four single-sequence rearrangements (swap the roles of the
//!   two recurrence terms, or divide through by one of them);
//! - `lemma5_*`: four binomially weighted variants.
//!
//! Each family exposes the sum side and the closed side separately so the
//! caller can compare them, time them, or rescale them into the shape a
//! specific catalog identity displays.

use super::{binomial_power_sum, power_sum, EvalResult, Skip};
use crate::numeric::GaussianRational;

/// Evaluation form: `Standard` divides the summand by x^j (closed side
/// carries 1/x^k); `Rescaled` multiplies both sides through by the k-th
/// weight power, turning the weights into ascending x^j.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaForm {
    Standard,
    Rescaled,
}

/// The four single-sequence rearrangements of lemma 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma3Variant {
    /// Weights 1/x^j, prefactor y.
    V1,
    /// Weights 1/y^j, prefactor x (x and y, alpha and beta swapped).
    V2,
    /// Weights 1/(-y/x)^j, no prefactor.
    V3,
    /// Weights 1/(-x/y)^j, no prefactor.
    V4,
}

/// The four binomial variants of lemma 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma5Variant {
    /// Weights C(k,j)(x/y)^j, closed form X[m]/y^k.
    B1,
    /// Weights C(k,j)/(-y)^j, closed form (-x/y)^k·X[m].
    B2,
    /// Weights C(k,j)/(-x)^j, closed form (-y/x)^k·X[m].
    B3,
    /// Weights C(k,j)(y/x)^j, closed form X[m]/x^k (B1 with roles swapped).
    B4,
}

type TermFn<'a> = Box<dyn Fn(i64) -> EvalResult + 'a>;

/// A validated recurrence relation X[m] = x·X[m-alpha] + y·Y[m-beta].
pub struct LemmaConfig<'a> {
    x: GaussianRational,
    y: GaussianRational,
    alpha: i64,
    beta: i64,
    x_seq: TermFn<'a>,
    y_seq: TermFn<'a>,
    single: bool,
}

/// Indices probed by [`LemmaConfig::new`] to confirm the relation holds.
const PROBE_WINDOW: std::ops::RangeInclusive<i64> = -3..=3;

impl<'a> LemmaConfig<'a> {
    /// Two-sequence config. Requires x != 0 and y != 0 and verifies the
    /// recurrence exactly at every index of the probe window.
    pub fn new(
        x: GaussianRational,
        y: GaussianRational,
        alpha: i64,
        beta: i64,
        x_seq: impl Fn(i64) -> EvalResult + 'a,
        y_seq: impl Fn(i64) -> EvalResult + 'a,
    ) -> Result<Self, Skip> {
        Self::build(x, y, alpha, beta, Box::new(x_seq), Box::new(y_seq), false)
    }

    /// Single-sequence config (Y = X), required by lemma 3 and lemma 5.
    pub fn single(
        x: GaussianRational,
        y: GaussianRational,
        alpha: i64,
        beta: i64,
        seq: impl Fn(i64) -> EvalResult + Clone + 'a,
    ) -> Result<Self, Skip> {
        let seq2 = seq.clone();
        Self::build(x, y, alpha, beta, Box::new(seq), Box::new(seq2), true)
    }

    fn build(
        x: GaussianRational,
        y: GaussianRational,
        alpha: i64,
        beta: i64,
        x_seq: TermFn<'a>,
        y_seq: TermFn<'a>,
        single: bool,
    ) -> Result<Self, Skip> {
        if x.is_zero() {
            return Err(Skip::new("x!=0"));
        }
        if y.is_zero() {
            return Err(Skip::new("y!=0"));
        }
        let cfg = LemmaConfig {
            x,
            y,
            alpha,
            beta,
            x_seq,
            y_seq,
            single,
        };
        for m in PROBE_WINDOW {
            let lhs = cfg.x_term(m)?;
            let rhs = &(&cfg.x * &cfg.x_term(m - alpha)?) + &(&cfg.y * &cfg.y_term(m - beta)?);
            if lhs != rhs {
                return Err(Skip::new(format!("recurrence-probe-failed at m={}", m)));
            }
        }
        Ok(cfg)
    }

    pub fn x(&self) -> &GaussianRational {
        &self.x
    }
    pub fn y(&self) -> &GaussianRational {
        &self.y
    }
    pub fn alpha(&self) -> i64 {
        self.alpha
    }
    pub fn beta(&self) -> i64 {
        self.beta
    }

    fn x_term(&self, i: i64) -> EvalResult {
        (self.x_seq)(i)
    }
    fn y_term(&self, i: i64) -> EvalResult {
        (self.y_seq)(i)
    }

    fn require_single(&self) -> Result<(), Skip> {
        if self.single {
            Ok(())
        } else {
            Err(Skip::new("single-sequence config required"))
        }
    }

    fn require_k(&self, k: i64) -> Result<(), Skip> {
        if k >= 0 {
            Ok(())
        } else {
            Err(Skip::new("k>=0"))
        }
    }
}

/// Sum side of lemma 1:
/// standard  y·Σ_{j=0}^k Y[m - k·alpha - beta + alpha·j] / x^j,
/// rescaled  y·Σ_{j=0}^k x^j · Y[m - beta - alpha·j].
pub fn lemma1_sum(cfg: &LemmaConfig, form: LemmaForm, m: i64, k: i64) -> EvalResult {
    cfg.require_k(k)?;
    let (alpha, beta) = (cfg.alpha, cfg.beta);
    let sum = match form {
        LemmaForm::Standard => {
            let t = cfg.x.checked_recip()?;
            power_sum(k, &t, |j| cfg.y_term(m - k * alpha - beta + alpha * j))?
        }
        LemmaForm::Rescaled => power_sum(k, &cfg.x, |j| cfg.y_term(m - beta - alpha * j))?,
    };
    Ok(&cfg.y * &sum)
}

/// Closed side of lemma 1:
/// standard  X[m]/x^k - x·X[m - (k+1)·alpha],
/// rescaled  X[m] - x^{k+1}·X[m - (k+1)·alpha].
pub fn lemma1_closed(cfg: &LemmaConfig, form: LemmaForm, m: i64, k: i64) -> EvalResult {
    cfg.require_k(k)?;
    let tail = cfg.x_term(m - (k + 1) * cfg.alpha)?;
    let head = cfg.x_term(m)?;
    match form {
        LemmaForm::Standard => {
            let scale = cfg.x.int_pow(-k)?;
            Ok(&(&head * &scale) - &(&cfg.x * &tail))
        }
        LemmaForm::Rescaled => {
            let scale = cfg.x.int_pow(k + 1)?;
            Ok(&head - &(&scale * &tail))
        }
    }
}

/// Sum side of the requested lemma 3 variant.
pub fn lemma3_sum(
    cfg: &LemmaConfig,
    variant: Lemma3Variant,
    form: LemmaForm,
    m: i64,
    k: i64,
) -> EvalResult {
    cfg.require_single()?;
    cfg.require_k(k)?;
    let (x, y) = (&cfg.x, &cfg.y);
    let (alpha, beta) = (cfg.alpha, cfg.beta);
    match (variant, form) {
        (Lemma3Variant::V1, LemmaForm::Standard) => {
            let t = x.checked_recip()?;
            let s = power_sum(k, &t, |j| cfg.x_term(m - k * alpha - beta + alpha * j))?;
            Ok(y * &s)
        }
        (Lemma3Variant::V2, LemmaForm::Standard) => {
            let t = y.checked_recip()?;
            let s = power_sum(k, &t, |j| cfg.x_term(m - k * beta - alpha + beta * j))?;
            Ok(x * &s)
        }
        (Lemma3Variant::V3, LemmaForm::Standard) => {
            // 1/(-y/x) = -x/y
            let t = -&(x.checked_div(y)?);
            let d = beta - alpha;
            power_sum(k, &t, |j| cfg.x_term(m - d * k + alpha + d * j))
        }
        (Lemma3Variant::V4, LemmaForm::Standard) => {
            let t = -&(y.checked_div(x)?);
            let d = alpha - beta;
            power_sum(k, &t, |j| cfg.x_term(m - d * k + beta + d * j))
        }
        (Lemma3Variant::V1, LemmaForm::Rescaled) => {
            let s = power_sum(k, x, |j| cfg.x_term(m - beta - alpha * j))?;
            Ok(y * &s)
        }
        (Lemma3Variant::V2, LemmaForm::Rescaled) => {
            let s = power_sum(k, y, |j| cfg.x_term(m - alpha - beta * j))?;
            Ok(x * &s)
        }
        (Lemma3Variant::V3, LemmaForm::Rescaled) => {
            // weights 1/(-x/y)^j = (-y/x)^j
            let t = -&(y.checked_div(x)?);
            let d = beta - alpha;
            power_sum(k, &t, |j| cfg.x_term(m + alpha - d * j))
        }
        (Lemma3Variant::V4, LemmaForm::Rescaled) => {
            let t = -&(x.checked_div(y)?);
            let d = alpha - beta;
            power_sum(k, &t, |j| cfg.x_term(m + beta - d * j))
        }
    }
}

/// Closed side of the requested lemma 3 variant.
pub fn lemma3_closed(
    cfg: &LemmaConfig,
    variant: Lemma3Variant,
    form: LemmaForm,
    m: i64,
    k: i64,
) -> EvalResult {
    cfg.require_single()?;
    cfg.require_k(k)?;
    let (x, y) = (&cfg.x, &cfg.y);
    let (alpha, beta) = (cfg.alpha, cfg.beta);
    let head = cfg.x_term(m)?;
    match (variant, form) {
        (Lemma3Variant::V1, LemmaForm::Standard) => {
            let tail = cfg.x_term(m - (k + 1) * alpha)?;
            Ok(&(&head * &x.int_pow(-k)?) - &(x * &tail))
        }
        (Lemma3Variant::V2, LemmaForm::Standard) => {
            let tail = cfg.x_term(m - (k + 1) * beta)?;
            Ok(&(&head * &y.int_pow(-k)?) - &(y * &tail))
        }
        (Lemma3Variant::V3, LemmaForm::Standard) => {
            let tail = cfg.x_term(m - (k + 1) * (beta - alpha))?;
            let w = (-&(x.checked_div(y)?)).int_pow(k)?;
            Ok(&(&(x * &head) * &w) + &(y * &tail))
        }
        (Lemma3Variant::V4, LemmaForm::Standard) => {
            let tail = cfg.x_term(m - (k + 1) * (alpha - beta))?;
            let w = (-&(y.checked_div(x)?)).int_pow(k)?;
            Ok(&(&(y * &head) * &w) + &(x * &tail))
        }
        (Lemma3Variant::V1, LemmaForm::Rescaled) => {
            let tail = cfg.x_term(m - (k + 1) * alpha)?;
            Ok(&head - &(&x.int_pow(k + 1)? * &tail))
        }
        (Lemma3Variant::V2, LemmaForm::Rescaled) => {
            let tail = cfg.x_term(m - (k + 1) * beta)?;
            Ok(&head - &(&y.int_pow(k + 1)? * &tail))
        }
        (Lemma3Variant::V3, LemmaForm::Rescaled) => {
            let tail = cfg.x_term(m - (k + 1) * (beta - alpha))?;
            let w = (-&(x.checked_div(y)?)).int_pow(-k)?;
            Ok(&(x * &head) + &(&(y * &tail) * &w))
        }
        (Lemma3Variant::V4, LemmaForm::Rescaled) => {
            let tail = cfg.x_term(m - (k + 1) * (alpha - beta))?;
            let w = (-&(y.checked_div(x)?)).int_pow(-k)?;
            Ok(&(y * &head) + &(&(x * &tail) * &w))
        }
    }
}

/// Sum side of the requested lemma 5 (binomial) variant.
pub fn lemma5_sum(cfg: &LemmaConfig, variant: Lemma5Variant, m: i64, k: i64) -> EvalResult {
    cfg.require_single()?;
    cfg.require_k(k)?;
    let (x, y) = (&cfg.x, &cfg.y);
    let (alpha, beta) = (cfg.alpha, cfg.beta);
    match variant {
        Lemma5Variant::B1 => {
            let t = x.checked_div(y)?;
            let d = beta - alpha;
            binomial_power_sum(k, &t, |j| cfg.x_term(m - k * beta + d * j))
        }
        Lemma5Variant::B2 => {
            let t = (-y).checked_recip()?;
            binomial_power_sum(k, &t, |j| cfg.x_term(m + (alpha - beta) * k + beta * j))
        }
        Lemma5Variant::B3 => {
            let t = (-x).checked_recip()?;
            binomial_power_sum(k, &t, |j| cfg.x_term(m + (beta - alpha) * k + alpha * j))
        }
        Lemma5Variant::B4 => {
            let t = y.checked_div(x)?;
            let d = alpha - beta;
            binomial_power_sum(k, &t, |j| cfg.x_term(m - k * alpha + d * j))
        }
    }
}

/// Closed side of the requested lemma 5 variant.
pub fn lemma5_closed(cfg: &LemmaConfig, variant: Lemma5Variant, m: i64, k: i64) -> EvalResult {
    cfg.require_single()?;
    cfg.require_k(k)?;
    let (x, y) = (&cfg.x, &cfg.y);
    let head = cfg.x_term(m)?;
    let scale = match variant {
        Lemma5Variant::B1 => y.int_pow(-k)?,
        Lemma5Variant::B2 => (-&(x.checked_div(y)?)).int_pow(k)?,
        Lemma5Variant::B3 => (-&(y.checked_div(x)?)).int_pow(k)?,
        Lemma5Variant::B4 => x.int_pow(-k)?,
    };
    Ok(&head * &scale)
}
