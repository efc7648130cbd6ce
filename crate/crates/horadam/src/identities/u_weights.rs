//! Weighted sums built from the shift relation
//! w[m] = u_r·w[m-r] - q·u_{r-1}·w[m-r-1]: geometric weights over powers of
//! u_r, -q·u_{r-2} or their quotient, and the binomially weighted forms that
//! collapse a whole sum to a single term.
//!
//! One closed form here is shipped with a corrected sign relative to how it
//! is sometimes printed: the binomial sum with weights (-1)^j/u_r^j applied
//! at the pinned index (the `eq-fxtzfk3-particular` shape) carries no
//! (-1)^k factor; the recurrence arbitrates (see the negative-control
//! tests).

use super::lemmas::{
    lemma3_closed, lemma3_sum, lemma5_closed, lemma5_sum, Lemma3Variant, Lemma5Variant,
    LemmaConfig, LemmaForm,
};
use super::{
    binomial_power_sum, nonzero, pow, power_sum, seed_ratio, EvalResult, GaussianRational,
    Identity, IndexUse, Indices, ParamConstraint, Skip,
};
use crate::sequence::{Preset, Terms};

/// Config from the shift relation at offset r: x = u_r, y = -q·u_{r-1},
/// alpha = r, beta = r+1. Hypotheses: u_r != 0 and u_{r-1} != 0.
fn shift_cfg(src: &dyn Terms, r: i64) -> Result<LemmaConfig<'_>, Skip> {
    let x = nonzero(src.u(r)?, "u_r!=0 (lemma route)")?;
    let y = -&(src.params().q() * &nonzero(src.u(r - 1)?, "u_{r-1}!=0 (lemma route)")?);
    LemmaConfig::single(x, y, r, r + 1, move |i| Ok(src.w(i)?))
}

/// The same relation taken one offset lower: x = -q·u_{r-2}, y = u_{r-1},
/// alpha = r, beta = r-1.
fn shift_cfg_low(src: &dyn Terms, r: i64) -> Result<LemmaConfig<'_>, Skip> {
    let x = -&(src.params().q() * &nonzero(src.u(r - 2)?, "u_{r-2}!=0 (lemma route)")?);
    let y = nonzero(src.u(r - 1)?, "u_{r-1}!=0 (lemma route)")?;
    LemmaConfig::single(x, y, r, r - 1, move |i| Ok(src.w(i)?))
}

// ---- geometric weights (u_r family) ----

fn vybd467_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let u_r = nonzero(src.u(ix.r)?, "u_r!=0")?;
    let t = u_r.checked_recip()?;
    let coeff = &(src.params().q() * &u_r.int_pow(ix.k)?) * &src.u(ix.r - 1)?;
    let sum = power_sum(ix.k, &t, |j| {
        Ok(src.w(ix.m - ix.k * ix.r - ix.r - 1 + ix.r * j)?)
    })?;
    Ok(&coeff * &sum)
}

fn vybd467_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let u_r = nonzero(src.u(ix.r)?, "u_r!=0")?;
    let head = &u_r.int_pow(ix.k + 1)? * &src.w(ix.m - ix.k * ix.r - ix.r)?;
    Ok(&head - &src.w(ix.m)?)
}

fn vybd467_via_lemma(
    src: &dyn Terms,
    ix: Indices,
) -> Result<(GaussianRational, GaussianRational), Skip> {
    let cfg = shift_cfg(src, ix.r)?;
    let scale = -&cfg.x().int_pow(ix.k)?;
    let sum = lemma3_sum(&cfg, Lemma3Variant::V1, LemmaForm::Standard, ix.m, ix.k)?;
    let closed = lemma3_closed(&cfg, Lemma3Variant::V1, LemmaForm::Standard, ix.m, ix.k)?;
    Ok((&sum * &scale, &closed * &scale))
}

/// Weight 1/(-q·u_{r-2}); hypothesis u_{r-2} != 0.
fn low_weight(src: &dyn Terms, r: i64) -> Result<GaussianRational, Skip> {
    let u_r2 = nonzero(src.u(r - 2)?, "u_{r-2}!=0")?;
    Ok((-&(src.params().q() * &u_r2)).checked_recip()?)
}

fn vwqo0w9_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = low_weight(src, ix.r)?;
    let sum = power_sum(ix.k, &t, |j| {
        Ok(src.w(ix.m - ix.k * ix.r - ix.r + 1 + ix.r * j)?)
    })?;
    Ok(&src.u(ix.r - 1)? * &sum)
}

fn vwqo0w9_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = low_weight(src, ix.r)?;
    let head = &src.w(ix.m)? * &t.int_pow(ix.k)?;
    let tail = &(src.params().q() * &src.u(ix.r - 2)?) * &src.w(ix.m - (ix.k + 1) * ix.r)?;
    Ok(&head + &tail)
}

fn vwqo0w9_via_lemma(
    src: &dyn Terms,
    ix: Indices,
) -> Result<(GaussianRational, GaussianRational), Skip> {
    let cfg = shift_cfg_low(src, ix.r)?;
    let sum = lemma3_sum(&cfg, Lemma3Variant::V1, LemmaForm::Standard, ix.m, ix.k)?;
    let closed = lemma3_closed(&cfg, Lemma3Variant::V1, LemmaForm::Standard, ix.m, ix.k)?;
    Ok((sum, closed))
}

/// Weight u_r/(q·u_{r-1}); hypothesis u_{r-1} != 0.
fn quotient_weight(src: &dyn Terms, r: i64) -> Result<GaussianRational, Skip> {
    let u_r1 = nonzero(src.u(r - 1)?, "u_{r-1}!=0")?;
    Ok(src.u(r)?.checked_div(&(src.params().q() * &u_r1))?)
}

fn utwljqu_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = quotient_weight(src, ix.r)?;
    power_sum(ix.k, &t, |j| Ok(src.w(ix.m - ix.k + ix.r + j)?))
}

fn utwljqu_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = quotient_weight(src, ix.r)?;
    let head = &(&src.u(ix.r)? * &t.int_pow(ix.k)?) * &src.w(ix.m)?;
    let tail = &(src.params().q() * &src.u(ix.r - 1)?) * &src.w(ix.m - ix.k - 1)?;
    Ok(&head - &tail)
}

fn utwljqu_via_lemma(
    src: &dyn Terms,
    ix: Indices,
) -> Result<(GaussianRational, GaussianRational), Skip> {
    let cfg = shift_cfg(src, ix.r)?;
    let sum = lemma3_sum(&cfg, Lemma3Variant::V3, LemmaForm::Standard, ix.m, ix.k)?;
    let closed = lemma3_closed(&cfg, Lemma3Variant::V3, LemmaForm::Standard, ix.m, ix.k)?;
    Ok((sum, closed))
}

fn vybd467_particular_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let u_r = nonzero(src.u(ix.r)?, "u_r!=0")?;
    let t = u_r.checked_recip()?;
    let coeff = &(src.params().q() * &u_r.int_pow(ix.k)?) * &src.u(ix.r - 1)?;
    Ok(&coeff * &power_sum(ix.k, &t, |j| Ok(src.w(ix.r * j)?))?)
}

fn vybd467_particular_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let u_r = nonzero(src.u(ix.r)?, "u_r!=0")?;
    let head = &src.params().b().clone() * &u_r.int_pow(ix.k + 1)?;
    Ok(&head - &src.w(ix.k * ix.r + ix.r + 1)?)
}

fn vwqo0w9_particular_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = low_weight(src, ix.r)?;
    Ok(&src.u(ix.r - 1)? * &power_sum(ix.k, &t, |j| Ok(src.w(ix.r * j)?))?)
}

fn vwqo0w9_particular_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = low_weight(src, ix.r)?;
    let params = src.params();
    let head = &src.w(ix.k * ix.r + ix.r - 1)? * &t.int_pow(ix.k)?;
    let seed = &(params.a() * params.p()) - params.b();
    Ok(&head + &(&seed * &src.u(ix.r - 2)?))
}

fn btkvoap_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = quotient_weight(src, ix.r)?;
    power_sum(ix.k, &t, |j| Ok(src.w(j)?))
}

fn btkvoap_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = quotient_weight(src, ix.r)?;
    let head = &(&src.u(ix.r)? * &src.w(ix.k - ix.r)?) * &t.int_pow(ix.k)?;
    let ratio = seed_ratio(src, ix.r + 1, "a*u_{r+1}+(b-p*a)*u_r!=0")?;
    let tail = &(&(&pow(src.params().q(), -ix.r, "q!=0")? * &ratio) * &src.u(ix.r - 1)?)
        * &src.w(ix.r + 1)?;
    Ok(&head - &tail)
}

// ---- btkvoap displays ----

fn btkvoap_g_entry() -> Identity {
    Identity {
        id: "eq-btkvoap-g",
        anchor: "sum (-1)^j*G_j/(F_r/F_{r+1})^j = (-1)^k*F_{r+1}*G_{k-r}/(F_r/F_{r+1})^k - (-1)^r*(F_{r+2}G_0-F_{r+1}G_1)/(F_{r+2}G_0+F_{r+1}(G_1-G_0))*F_r*G_{r+1}",
        uses: IndexUse::R_K,
        preconditions: "F_r!=0, F_{r+2}G_0+F_{r+1}(G_1-G_0)!=0",
        constraint: ParamConstraint::GFamily,
        default_quarantined: false,
        lhs: Box::new(|src, ix| {
            // weight (-1)^j (F_{r+1}/F_r)^j with F_{x} = u(x-1)
            let f_r = nonzero(src.u(ix.r - 1)?, "F_r!=0")?;
            let t = -&(src.u(ix.r)?.checked_div(&f_r)?);
            power_sum(ix.k, &t, |j| Ok(src.w(j)?))
        }),
        rhs: Box::new(|src, ix| {
            let f_r = nonzero(src.u(ix.r - 1)?, "F_r!=0")?;
            let t = -&(src.u(ix.r)?.checked_div(&f_r)?);
            let head = &(&t.int_pow(ix.k)? * &src.u(ix.r)?) * &src.w(ix.k - ix.r)?;
            let (a, b) = (src.params().a(), src.params().b());
            let f_r2 = src.u(ix.r + 1)?;
            let f_r1 = src.u(ix.r)?;
            let den = &(&f_r2 * a) + &(&f_r1 * &(b - a));
            let den = nonzero(den, "F_{r+2}G_0+F_{r+1}(G_1-G_0)!=0")?;
            let num = &(&f_r2 * a) - &(&f_r1 * b);
            let ratio = num.checked_div(&den)?;
            let sign = GaussianRational::from_int(-1).int_pow(ix.r)?;
            let tail = &(&(&sign * &ratio) * &f_r) * &src.w(ix.r + 1)?;
            Ok(&head - &tail)
        }),
        via_lemma: None,
    }
}

fn btkvoap_display(
    id: &'static str,
    anchor: &'static str,
    preset: Preset,
    preconditions: &'static str,
    halving: bool,
) -> Identity {
    // weight t = s·w(r+1)/w(r), tail sign s^r·w(r)·w(r+1), s = -1 or -1/2
    let s = move || {
        if halving {
            GaussianRational::from_ratio(-1, 2)
        } else {
            GaussianRational::from_int(-1)
        }
    };
    Identity {
        id,
        anchor,
        uses: IndexUse::R_K,
        preconditions,
        constraint: ParamConstraint::Exact(preset),
        default_quarantined: false,
        lhs: Box::new(move |src, ix| {
            let w_r = nonzero(src.w(ix.r)?, "w_r!=0")?;
            let t = &s() * &src.w(ix.r + 1)?.checked_div(&w_r)?;
            power_sum(ix.k, &t, |j| Ok(src.w(j)?))
        }),
        rhs: Box::new(move |src, ix| {
            let w_r = nonzero(src.w(ix.r)?, "w_r!=0")?;
            let t = &s() * &src.w(ix.r + 1)?.checked_div(&w_r)?;
            let head = &(&t.int_pow(ix.k)? * &src.w(ix.r + 1)?) * &src.w(ix.k - ix.r)?;
            let tail = &(&s().int_pow(ix.r)? * &w_r) * &src.w(ix.r + 1)?;
            Ok(&head + &tail)
        }),
        via_lemma: None,
    }
}

// ---- binomial weights (u_r family) ----

/// Weight -u_r/(q·u_{r-1}) and the prefactor base -q·u_{r-1}.
fn binom_weight(src: &dyn Terms, r: i64) -> Result<(GaussianRational, GaussianRational), Skip> {
    let u_r1 = nonzero(src.u(r - 1)?, "u_{r-1}!=0")?;
    let base = -&(src.params().q() * &u_r1);
    let t = -&(src.u(r)?.checked_div(&(src.params().q() * &u_r1))?);
    Ok((t, base))
}

fn f9x35z3_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let (t, base) = binom_weight(src, ix.r)?;
    let sum = binomial_power_sum(ix.k, &t, |j| {
        Ok(src.w(ix.m - ix.k * (ix.r + 1) + j)?)
    })?;
    Ok(&base.int_pow(ix.k)? * &sum)
}

fn f9x35z3_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    Ok(src.w(ix.m)?)
}

fn f9x35z3_via_lemma(
    src: &dyn Terms,
    ix: Indices,
) -> Result<(GaussianRational, GaussianRational), Skip> {
    let cfg = shift_cfg(src, ix.r)?;
    let scale = cfg.y().int_pow(ix.k)?;
    let sum = lemma5_sum(&cfg, Lemma5Variant::B1, ix.m, ix.k)?;
    let closed = lemma5_closed(&cfg, Lemma5Variant::B1, ix.m, ix.k)?;
    Ok((&sum * &scale, &closed * &scale))
}

fn r5w2cg1_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let u_r2 = nonzero(src.u(ix.r - 2)?, "u_{r-2}!=0")?;
    let t = (src.params().q() * &u_r2).checked_recip()?;
    binomial_power_sum(ix.k, &t, |j| Ok(src.w(ix.m - ix.k + ix.r * j)?))
}

fn r5w2cg1_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let u_r2 = nonzero(src.u(ix.r - 2)?, "u_{r-2}!=0")?;
    let scale = src.u(ix.r - 1)?.checked_div(&(src.params().q() * &u_r2))?;
    Ok(&scale.int_pow(ix.k)? * &src.w(ix.m)?)
}

fn r5w2cg1_via_lemma(
    src: &dyn Terms,
    ix: Indices,
) -> Result<(GaussianRational, GaussianRational), Skip> {
    let cfg = shift_cfg_low(src, ix.r)?;
    let sum = lemma5_sum(&cfg, Lemma5Variant::B3, ix.m, ix.k)?;
    let closed = lemma5_closed(&cfg, Lemma5Variant::B3, ix.m, ix.k)?;
    Ok((sum, closed))
}

fn fxtzfk3_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let u_r = nonzero(src.u(ix.r)?, "u_r!=0")?;
    let t = -&u_r.checked_recip()?;
    binomial_power_sum(ix.k, &t, |j| Ok(src.w(ix.m + ix.k + ix.r * j)?))
}

fn fxtzfk3_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let u_r = nonzero(src.u(ix.r)?, "u_r!=0")?;
    let scale = (src.params().q() * &src.u(ix.r - 1)?).checked_div(&u_r)?;
    Ok(&scale.int_pow(ix.k)? * &src.w(ix.m)?)
}

fn fxtzfk3_via_lemma(
    src: &dyn Terms,
    ix: Indices,
) -> Result<(GaussianRational, GaussianRational), Skip> {
    let cfg = shift_cfg(src, ix.r)?;
    let sum = lemma5_sum(&cfg, Lemma5Variant::B3, ix.m, ix.k)?;
    let closed = lemma5_closed(&cfg, Lemma5Variant::B3, ix.m, ix.k)?;
    Ok((sum, closed))
}

fn f9x35z3_particular_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let (t, base) = binom_weight(src, ix.r)?;
    let sum = binomial_power_sum(ix.k, &t, |j| Ok(src.w(j)?))?;
    Ok(&base.int_pow(ix.k)? * &sum)
}

fn f9x35z3_particular_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    Ok(src.w(ix.k * (ix.r + 1))?)
}

fn wbtbfxw_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let u_r2 = nonzero(src.u(ix.r - 2)?, "u_{r-2}!=0")?;
    let t = (src.params().q() * &u_r2).checked_recip()?;
    binomial_power_sum(ix.k, &t, |j| Ok(src.w(ix.r * j)?))
}

fn wbtbfxw_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let u_r2 = nonzero(src.u(ix.r - 2)?, "u_{r-2}!=0")?;
    let scale = src.u(ix.r - 1)?.checked_div(&(src.params().q() * &u_r2))?;
    Ok(&scale.int_pow(ix.k)? * &src.w(ix.k)?)
}

fn fxtzfk3_particular_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let u_r = nonzero(src.u(ix.r)?, "u_r!=0")?;
    let t = -&u_r.checked_recip()?;
    binomial_power_sum(ix.k, &t, |j| Ok(src.w(ix.r * j)?))
}

fn fxtzfk3_particular_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let u_r = nonzero(src.u(ix.r)?, "u_r!=0")?;
    let scale = src.u(ix.r - 1)?.checked_div(&u_r)?;
    let ratio = seed_ratio(src, ix.k, "a*u_k+(b-p*a)*u_{k-1}!=0")?;
    Ok(&(&scale.int_pow(ix.k)? * &ratio) * &src.w(ix.k)?)
}

/// Binomial display with weights s^j/X_{r-1}^j and closed form
/// (s·X_r/X_{r-1})^k·X_k; s is -1 (G, Pell) or -1/2 (Jacobsthal).
fn wbtbfxw_display(
    id: &'static str,
    anchor: &'static str,
    constraint: ParamConstraint,
    preconditions: &'static str,
    halving: bool,
    via_fundamental: bool,
) -> Identity {
    let s = move || {
        if halving {
            GaussianRational::from_ratio(-1, 2)
        } else {
            GaussianRational::from_int(-1)
        }
    };
    // F_x = u(x-1) on the G family, P_x/J_x = w(x) on the exact presets
    let lower = move |src: &dyn Terms, x: i64| -> EvalResult {
        if via_fundamental {
            Ok(src.u(x - 1)?)
        } else {
            Ok(src.w(x)?)
        }
    };
    Identity {
        id,
        anchor,
        uses: IndexUse::R_K,
        preconditions,
        constraint,
        default_quarantined: false,
        lhs: Box::new(move |src, ix| {
            let den = nonzero(lower(src, ix.r - 1)?, "X_{r-1}!=0")?;
            let t = &s() * &den.checked_recip()?;
            binomial_power_sum(ix.k, &t, |j| Ok(src.w(ix.r * j)?))
        }),
        rhs: Box::new(move |src, ix| {
            let den = nonzero(lower(src, ix.r - 1)?, "X_{r-1}!=0")?;
            let scale = &s() * &lower(src, ix.r)?.checked_div(&den)?;
            Ok(&scale.int_pow(ix.k)? * &src.w(ix.k)?)
        }),
        via_lemma: None,
    }
}

fn vajda_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    binomial_power_sum(ix.k, &GaussianRational::one(), |j| {
        Ok(src.w(ix.m - 2 * ix.k + j)?)
    })
}

fn vajda_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    Ok(src.w(ix.m)?)
}

pub(super) fn entries() -> Vec<Identity> {
    vec![
        Identity {
            id: "eq-vybd467",
            anchor: "q*u_r^k*u_{r-1}*sum w_{m-kr-r-1+rj}/u_r^j = u_r^(k+1)*w_{m-kr-r} - w_m",
            uses: IndexUse::M_R_K,
            preconditions: "u_r!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(vybd467_lhs),
            rhs: Box::new(vybd467_rhs),
            via_lemma: Some(Box::new(vybd467_via_lemma)),
        },
        Identity {
            id: "eq-vwqo0w9",
            anchor: "u_{r-1}*sum w_{m-kr-r+1+rj}/(-q*u_{r-2})^j = w_m/(-q*u_{r-2})^k + q*u_{r-2}*w_{m-(k+1)r}",
            uses: IndexUse::M_R_K,
            preconditions: "u_{r-2}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(vwqo0w9_lhs),
            rhs: Box::new(vwqo0w9_rhs),
            via_lemma: Some(Box::new(vwqo0w9_via_lemma)),
        },
        Identity {
            id: "eq-utwljqu",
            anchor: "sum w_{m-k+r+j}/(q*u_{r-1}/u_r)^j = u_r*w_m/(q*u_{r-1}/u_r)^k - q*u_{r-1}*w_{m-k-1}",
            uses: IndexUse::M_R_K,
            preconditions: "u_{r-1}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(utwljqu_lhs),
            rhs: Box::new(utwljqu_rhs),
            via_lemma: Some(Box::new(utwljqu_via_lemma)),
        },
        Identity {
            id: "eq-vybd467-particular",
            anchor: "q*u_r^k*u_{r-1}*sum w_{rj}/u_r^j = b*u_r^(k+1) - w_{kr+r+1}",
            uses: IndexUse::R_K,
            preconditions: "u_r!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(vybd467_particular_lhs),
            rhs: Box::new(vybd467_particular_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-vwqo0w9-particular",
            anchor: "u_{r-1}*sum w_{rj}/(-q*u_{r-2})^j = w_{kr+r-1}/(-q*u_{r-2})^k + (a*p-b)*u_{r-2}",
            uses: IndexUse::R_K,
            preconditions: "u_{r-2}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(vwqo0w9_particular_lhs),
            rhs: Box::new(vwqo0w9_particular_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-btkvoap",
            anchor: "sum w_j/(q*u_{r-1}/u_r)^j = u_r*w_{k-r}/(q*u_{r-1}/u_r)^k - q^(-r)*(a*u_{r+1}-b*u_r)/(a*u_{r+1}+(b-p*a)*u_r)*u_{r-1}*w_{r+1}",
            uses: IndexUse::R_K,
            preconditions: "u_{r-1}!=0, a*u_{r+1}+(b-p*a)*u_r!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(btkvoap_lhs),
            rhs: Box::new(btkvoap_rhs),
            via_lemma: None,
        },
        btkvoap_g_entry(),
        btkvoap_display(
            "eq-btkvoap-pell",
            "sum (-1)^j*P_j/(P_r/P_{r+1})^j = (-1)^k*P_{r+1}*P_{k-r}/(P_r/P_{r+1})^k + (-1)^r*P_r*P_{r+1}",
            Preset::Pell,
            "P_r!=0",
            false,
        ),
        btkvoap_display(
            "eq-btkvoap-jacobsthal",
            "sum (-1)^j/2^j*J_j/(J_r/J_{r+1})^j = (-1)^k/2^k*J_{r+1}*J_{k-r}/(J_r/J_{r+1})^k + (-1)^r/2^r*J_r*J_{r+1}",
            Preset::Jacobsthal,
            "J_r!=0",
            true,
        ),
        Identity {
            id: "eq-f9x35z3",
            anchor: "(-q*u_{r-1})^k*sum C(k,j)*(-u_r/(q*u_{r-1}))^j*w_{m-k(r+1)+j} = w_m",
            uses: IndexUse::M_R_K,
            preconditions: "u_{r-1}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(f9x35z3_lhs),
            rhs: Box::new(f9x35z3_rhs),
            via_lemma: Some(Box::new(f9x35z3_via_lemma)),
        },
        Identity {
            id: "eq-r5w2cg1",
            anchor: "sum C(k,j)*w_{m-k+rj}/(q*u_{r-2})^j = (u_{r-1}/(q*u_{r-2}))^k*w_m",
            uses: IndexUse::M_R_K,
            preconditions: "u_{r-2}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(r5w2cg1_lhs),
            rhs: Box::new(r5w2cg1_rhs),
            via_lemma: Some(Box::new(r5w2cg1_via_lemma)),
        },
        Identity {
            id: "eq-fxtzfk3",
            anchor: "sum (-1)^j*C(k,j)*w_{m+k+rj}/u_r^j = (q*u_{r-1}/u_r)^k*w_m",
            uses: IndexUse::M_R_K,
            preconditions: "u_r!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(fxtzfk3_lhs),
            rhs: Box::new(fxtzfk3_rhs),
            via_lemma: Some(Box::new(fxtzfk3_via_lemma)),
        },
        Identity {
            id: "eq-f9x35z3-particular",
            anchor: "(-q*u_{r-1})^k*sum C(k,j)*(-u_r/(q*u_{r-1}))^j*w_j = w_{k(r+1)}",
            uses: IndexUse::R_K,
            preconditions: "u_{r-1}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(f9x35z3_particular_lhs),
            rhs: Box::new(f9x35z3_particular_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-wbtbfxw",
            anchor: "sum C(k,j)*w_{rj}/(q*u_{r-2})^j = (u_{r-1}/(q*u_{r-2}))^k*w_k",
            uses: IndexUse::R_K,
            preconditions: "u_{r-2}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(wbtbfxw_lhs),
            rhs: Box::new(wbtbfxw_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-fxtzfk3-particular",
            anchor: "sum (-1)^j*C(k,j)*w_{rj}/u_r^j = (u_{r-1}/u_r)^k*(a*u_k-b*u_{k-1})/(a*u_k+(b-p*a)*u_{k-1})*w_k",
            uses: IndexUse::R_K,
            preconditions: "u_r!=0, a*u_k+(b-p*a)*u_{k-1}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(fxtzfk3_particular_lhs),
            rhs: Box::new(fxtzfk3_particular_rhs),
            via_lemma: None,
        },
        wbtbfxw_display(
            "eq-wbtbfxw-g",
            "sum (-1)^j*C(k,j)*G_{rj}/F_{r-1}^j = (-1)^k*(F_r/F_{r-1})^k*G_k",
            ParamConstraint::GFamily,
            "F_{r-1}!=0",
            false,
            true,
        ),
        wbtbfxw_display(
            "eq-wbtbfxw-pell",
            "sum (-1)^j*C(k,j)*P_{rj}/P_{r-1}^j = (-1)^k*(P_r/P_{r-1})^k*P_k",
            ParamConstraint::Exact(Preset::Pell),
            "P_{r-1}!=0",
            false,
            false,
        ),
        wbtbfxw_display(
            "eq-wbtbfxw-jacobsthal",
            "sum (-1)^j/2^j*C(k,j)*J_{rj}/J_{r-1}^j = (-1)^k/2^k*(J_r/J_{r-1})^k*J_k",
            ParamConstraint::Exact(Preset::Jacobsthal),
            "J_{r-1}!=0",
            true,
            false,
        ),
        Identity {
            id: "vajda-48",
            anchor: "sum C(k,j)*w_{m-2k+j} = w_m on p=1, q=-1 (binomial telescoping at r=1)",
            uses: IndexUse::M_K,
            preconditions: "-",
            constraint: ParamConstraint::GFamily,
            default_quarantined: false,
            lhs: Box::new(vajda_lhs),
            rhs: Box::new(vajda_rhs),
            via_lemma: None,
        },
    ]
}
