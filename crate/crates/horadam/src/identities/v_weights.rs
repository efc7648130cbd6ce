//! Weighted sums built from the symmetric relation
//! v_r·w[m] = w[m+r] + q^r·w[m-r]: geometric weights over powers of
//! q^r/v_r, v_r or -q^r, and the binomially weighted forms.
//!
//! Two closed forms in this family circulate in print with a spurious
//! (-1)^k: the binomial sum with weights (-1)^j/v_r^j (the `eq-d00yx5i`
//! shape) and its pinned particular (`eq-xf5dcmx`). The shipped entries
//! carry the recurrence-validated sign; the printed spellings are kept as
//! `*-printed` entries, quarantined by default.

use super::lemmas::{
    lemma3_closed, lemma3_sum, lemma5_closed, lemma5_sum, Lemma3Variant, Lemma5Variant,
    LemmaConfig, LemmaForm,
};
use super::{
    binomial_power_sum, nonzero, pow, power_sum, seed_ratio, EvalResult, GaussianRational,
    Identity, IndexUse, Indices, ParamConstraint, Skip,
};
use crate::sequence::Terms;

/// Config from the symmetric relation: x = 1/v_r, y = q^r/v_r, alpha = -r,
/// beta = r. Hypothesis: v_r != 0.
fn symmetric_cfg(src: &dyn Terms, r: i64) -> Result<LemmaConfig<'_>, Skip> {
    let v_r = nonzero(src.v(r)?, "v_r!=0")?;
    let x = v_r.checked_recip()?;
    let y = pow(src.params().q(), r, "q!=0")?.checked_div(&v_r)?;
    LemmaConfig::single(x, y, -r, r, move |i| Ok(src.w(i)?))
}

/// Weight t = v_r/q^r with the hypothesis v_r != 0 recorded up front.
fn vq_weight(src: &dyn Terms, r: i64) -> Result<GaussianRational, Skip> {
    let v_r = nonzero(src.v(r)?, "v_r!=0")?;
    Ok(&v_r * &pow(src.params().q(), -r, "q!=0")?)
}

// ---- geometric weights ----

fn u5k6v3w_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = vq_weight(src, ix.r)?;
    power_sum(ix.k, &t, |j| {
        Ok(src.w(ix.m - ix.k * ix.r + ix.r + ix.r * j)?)
    })
}

fn u5k6v3w_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = vq_weight(src, ix.r)?;
    let head = &(&src.v(ix.r)? * &t.int_pow(ix.k)?) * &src.w(ix.m)?;
    let tail = &pow(src.params().q(), ix.r, "q!=0")? * &src.w(ix.m - (ix.k + 1) * ix.r)?;
    Ok(&head - &tail)
}

fn u5k6v3w_via_lemma(
    src: &dyn Terms,
    ix: Indices,
) -> Result<(GaussianRational, GaussianRational), Skip> {
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let cfg = symmetric_cfg(src, ix.r)?;
    let sum = lemma3_sum(&cfg, Lemma3Variant::V2, LemmaForm::Standard, ix.m, ix.k)?;
    let closed = lemma3_closed(&cfg, Lemma3Variant::V2, LemmaForm::Standard, ix.m, ix.k)?;
    Ok((&sum * &v_r, &closed * &v_r))
}

fn x6yh3ef_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let t = v_r.checked_recip()?;
    let coeff = &v_r.int_pow(ix.k)? * &pow(src.params().q(), ix.r, "q!=0")?;
    let sum = power_sum(ix.k, &t, |j| Ok(src.w(ix.m - ix.r + ix.r * j)?))?;
    Ok(&coeff * &sum)
}

fn x6yh3ef_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let head = &v_r.int_pow(ix.k + 1)? * &src.w(ix.m)?;
    Ok(&head - &src.w(ix.m + (ix.k + 1) * ix.r)?)
}

fn x6yh3ef_via_lemma(
    src: &dyn Terms,
    ix: Indices,
) -> Result<(GaussianRational, GaussianRational), Skip> {
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let scale = v_r.int_pow(ix.k + 1)?;
    let cfg = symmetric_cfg(src, ix.r)?;
    let sum = lemma3_sum(&cfg, Lemma3Variant::V1, LemmaForm::Rescaled, ix.m, ix.k)?;
    let closed = lemma3_closed(&cfg, Lemma3Variant::V1, LemmaForm::Rescaled, ix.m, ix.k)?;
    Ok((&sum * &scale, &closed * &scale))
}

/// Weight s = 1/(-q^r) = -q^(-r).
fn neg_q_weight(src: &dyn Terms, r: i64) -> Result<GaussianRational, Skip> {
    Ok(-&pow(src.params().q(), -r, "q!=0")?)
}

fn is4vgui_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let s = neg_q_weight(src, ix.r)?;
    let sum = power_sum(ix.k, &s, |j| {
        Ok(src.w(ix.m - 2 * ix.k * ix.r - ix.r + 2 * ix.r * j)?)
    })?;
    Ok(&v_r * &sum)
}

fn is4vgui_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    nonzero(src.v(ix.r)?, "v_r!=0")?;
    let s = neg_q_weight(src, ix.r)?;
    let head = &src.w(ix.m)? * &s.int_pow(ix.k)?;
    let tail = &pow(src.params().q(), ix.r, "q!=0")? * &src.w(ix.m - 2 * ix.r * (ix.k + 1))?;
    Ok(&head + &tail)
}

fn is4vgui_via_lemma(
    src: &dyn Terms,
    ix: Indices,
) -> Result<(GaussianRational, GaussianRational), Skip> {
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let cfg = symmetric_cfg(src, ix.r)?;
    let sum = lemma3_sum(&cfg, Lemma3Variant::V3, LemmaForm::Standard, ix.m, ix.k)?;
    let closed = lemma3_closed(&cfg, Lemma3Variant::V3, LemmaForm::Standard, ix.m, ix.k)?;
    Ok((&sum * &v_r, &closed * &v_r))
}

// ---- the pinned particulars ----

fn u5k6v3w_particular_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = vq_weight(src, ix.r)?;
    power_sum(ix.k, &t, |j| Ok(src.w(ix.r * j)?))
}

fn u5k6v3w_particular_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = vq_weight(src, ix.r)?;
    let head = &(&src.v(ix.r)? * &src.w(ix.k * ix.r - ix.r)?) * &t.int_pow(ix.k)?;
    let ratio = seed_ratio(src, 2 * ix.r, "a*u_{2r}+(b-p*a)*u_{2r-1}!=0")?;
    let tail = &(&pow(src.params().q(), -ix.r, "q!=0")? * &ratio) * &src.w(2 * ix.r)?;
    Ok(&head - &tail)
}

fn x6yh3ef_particular_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let t = v_r.checked_recip()?;
    let coeff = &v_r.int_pow(ix.k)? * &pow(src.params().q(), ix.r, "q!=0")?;
    Ok(&coeff * &power_sum(ix.k, &t, |j| Ok(src.w(ix.r * j)?))?)
}

fn x6yh3ef_particular_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let head = &v_r.int_pow(ix.k + 1)? * &src.w(ix.r)?;
    Ok(&head - &src.w((ix.k + 2) * ix.r)?)
}

fn is4vgui_particular_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let s = neg_q_weight(src, ix.r)?;
    Ok(&v_r * &power_sum(ix.k, &s, |j| Ok(src.w(2 * ix.r * j)?))?)
}

fn is4vgui_particular_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    nonzero(src.v(ix.r)?, "v_r!=0")?;
    let s = neg_q_weight(src, ix.r)?;
    let head = &src.w((2 * ix.k + 1) * ix.r)? * &s.int_pow(ix.k)?;
    let ratio = seed_ratio(src, ix.r, "a*u_r+(b-p*a)*u_{r-1}!=0")?;
    Ok(&head + &(&ratio * &src.w(ix.r)?))
}

// ---- binomial weights ----

fn e6qnu1m_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    nonzero(src.v(ix.r)?, "v_r!=0")?;
    let t = pow(src.params().q(), -ix.r, "q!=0")?;
    binomial_power_sum(ix.k, &t, |j| {
        Ok(src.w(ix.m - ix.k * ix.r + 2 * ix.r * j)?)
    })
}

fn e6qnu1m_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = vq_weight(src, ix.r)?;
    Ok(&t.int_pow(ix.k)? * &src.w(ix.m)?)
}

fn e6qnu1m_via_lemma(
    src: &dyn Terms,
    ix: Indices,
) -> Result<(GaussianRational, GaussianRational), Skip> {
    let cfg = symmetric_cfg(src, ix.r)?;
    let sum = lemma5_sum(&cfg, Lemma5Variant::B1, ix.m, ix.k)?;
    let closed = lemma5_closed(&cfg, Lemma5Variant::B1, ix.m, ix.k)?;
    Ok((sum, closed))
}

fn k130vx8_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = -&vq_weight(src, ix.r)?;
    binomial_power_sum(ix.k, &t, |j| {
        Ok(src.w(ix.m - 2 * ix.k * ix.r + ix.r * j)?)
    })
}

fn k130vx8_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    nonzero(src.v(ix.r)?, "v_r!=0")?;
    let s = neg_q_weight(src, ix.r)?;
    Ok(&src.w(ix.m)? * &s.int_pow(ix.k)?)
}

fn k130vx8_via_lemma(
    src: &dyn Terms,
    ix: Indices,
) -> Result<(GaussianRational, GaussianRational), Skip> {
    let cfg = symmetric_cfg(src, ix.r)?;
    let sum = lemma5_sum(&cfg, Lemma5Variant::B2, ix.m, ix.k)?;
    let closed = lemma5_closed(&cfg, Lemma5Variant::B2, ix.m, ix.k)?;
    Ok((sum, closed))
}

fn d00yx5i_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let t = -&v_r.checked_recip()?;
    binomial_power_sum(ix.k, &t, |j| {
        Ok(src.w(ix.m + ix.k * ix.r + ix.r * j)?)
    })
}

fn d00yx5i_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let scale = &pow(src.params().q(), ix.r * ix.k, "q!=0")? * &v_r.int_pow(-ix.k)?;
    Ok(&scale * &src.w(ix.m)?)
}

fn d00yx5i_printed_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let sign = GaussianRational::from_int(-1).int_pow(ix.k)?;
    Ok(&sign * &d00yx5i_rhs(src, ix)?)
}

fn d00yx5i_via_lemma(
    src: &dyn Terms,
    ix: Indices,
) -> Result<(GaussianRational, GaussianRational), Skip> {
    // B3 reindexed: divide both sides by (-v_r)^k to reverse the summation
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let scale = (-&v_r).int_pow(-ix.k)?;
    let cfg = symmetric_cfg(src, ix.r)?;
    let sum = lemma5_sum(&cfg, Lemma5Variant::B3, ix.m, ix.k)?;
    let closed = lemma5_closed(&cfg, Lemma5Variant::B3, ix.m, ix.k)?;
    Ok((&sum * &scale, &closed * &scale))
}

fn e6qnu1m_particular_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    nonzero(src.v(ix.r)?, "v_r!=0")?;
    let t = pow(src.params().q(), -ix.r, "q!=0")?;
    binomial_power_sum(ix.k, &t, |j| Ok(src.w(2 * ix.r * j)?))
}

fn e6qnu1m_particular_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = vq_weight(src, ix.r)?;
    Ok(&t.int_pow(ix.k)? * &src.w(ix.r * ix.k)?)
}

fn k130vx8_particular_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = -&vq_weight(src, ix.r)?;
    binomial_power_sum(ix.k, &t, |j| Ok(src.w(ix.r * j)?))
}

fn k130vx8_particular_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    nonzero(src.v(ix.r)?, "v_r!=0")?;
    let s = neg_q_weight(src, ix.r)?;
    Ok(&src.w(2 * ix.k * ix.r)? * &s.int_pow(ix.k)?)
}

fn xf5dcmx_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let t = -&v_r.checked_recip()?;
    binomial_power_sum(ix.k, &t, |j| Ok(src.w(ix.r * j)?))
}

fn xf5dcmx_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let ratio = seed_ratio(src, ix.k * ix.r, "a*u_{kr}+(b-p*a)*u_{kr-1}!=0")?;
    Ok(&(&ratio * &src.w(ix.k * ix.r)?) * &v_r.int_pow(-ix.k)?)
}

fn xf5dcmx_printed_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let sign = GaussianRational::from_int(-1).int_pow(ix.k)?;
    Ok(&sign * &xf5dcmx_rhs(src, ix)?)
}

// ---- the p = 1, q = -1 displays ----

fn e6qnu1m_g_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    nonzero(src.v(ix.r)?, "v_r!=0")?;
    let t = GaussianRational::from_int(-1).int_pow(ix.r)?;
    binomial_power_sum(ix.k, &t, |j| {
        Ok(src.w(ix.m - ix.k * ix.r + 2 * ix.r * j)?)
    })
}

fn e6qnu1m_g_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let sign = GaussianRational::from_int(-1).int_pow(ix.r * ix.k)?;
    Ok(&(&sign * &v_r.int_pow(ix.k)?) * &src.w(ix.m)?)
}

fn xf5dcmx_g_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    xf5dcmx_lhs(src, ix)
}

fn xf5dcmx_g_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    // (F_{kr+1}G_0 - F_{kr}G_1)/(F_{kr+1}G_0 + F_{kr}(G_1-G_0)) · G_{kr}/L_r^k
    let v_r = nonzero(src.v(ix.r)?, "v_r!=0")?;
    let (a, b) = (src.params().a(), src.params().b());
    let f_hi = src.u(ix.k * ix.r)?;
    let f_lo = src.u(ix.k * ix.r - 1)?;
    let den = &(&f_hi * a) + &(&f_lo * &(b - a));
    let den = nonzero(den, "F_{kr+1}G_0+F_{kr}(G_1-G_0)!=0")?;
    let num = &(&f_hi * a) - &(&f_lo * b);
    let ratio = num.checked_div(&den)?;
    Ok(&(&ratio * &src.w(ix.k * ix.r)?) * &v_r.int_pow(-ix.k)?)
}

pub(super) fn entries() -> Vec<Identity> {
    vec![
        Identity {
            id: "eq-u5k6v3w",
            anchor: "sum w_{m-kr+r+rj}/(q^r/v_r)^j = v_r*w_m/(q^r/v_r)^k - q^r*w_{m-(k+1)r}",
            uses: IndexUse::M_R_K,
            preconditions: "v_r!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(u5k6v3w_lhs),
            rhs: Box::new(u5k6v3w_rhs),
            via_lemma: Some(Box::new(u5k6v3w_via_lemma)),
        },
        Identity {
            id: "eq-x6yh3ef",
            anchor: "v_r^k*q^r*sum w_{m-r+rj}/v_r^j = v_r^(k+1)*w_m - w_{m+(k+1)r}",
            uses: IndexUse::M_R_K,
            preconditions: "v_r!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(x6yh3ef_lhs),
            rhs: Box::new(x6yh3ef_rhs),
            via_lemma: Some(Box::new(x6yh3ef_via_lemma)),
        },
        Identity {
            id: "eq-is4vgui",
            anchor: "v_r*sum w_{m-2kr-r+2rj}/(-q^r)^j = w_m/(-q^r)^k + q^r*w_{m-2r(k+1)}",
            uses: IndexUse::M_R_K,
            preconditions: "v_r!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(is4vgui_lhs),
            rhs: Box::new(is4vgui_rhs),
            via_lemma: Some(Box::new(is4vgui_via_lemma)),
        },
        Identity {
            id: "eq-u5k6v3w-particular",
            anchor: "sum w_{rj}/(q^r/v_r)^j = v_r*w_{kr-r}/(q^r/v_r)^k - q^(-r)*(a*u_{2r}-b*u_{2r-1})/(a*u_{2r}+(b-p*a)*u_{2r-1})*w_{2r}",
            uses: IndexUse::R_K,
            preconditions: "v_r!=0, a*u_{2r}+(b-p*a)*u_{2r-1}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(u5k6v3w_particular_lhs),
            rhs: Box::new(u5k6v3w_particular_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-x6yh3ef-particular",
            anchor: "v_r^k*q^r*sum w_{rj}/v_r^j = v_r^(k+1)*w_r - w_{(k+2)r}",
            uses: IndexUse::R_K,
            preconditions: "v_r!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(x6yh3ef_particular_lhs),
            rhs: Box::new(x6yh3ef_particular_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-is4vgui-particular",
            anchor: "v_r*sum w_{2rj}/(-q^r)^j = w_{(2k+1)r}/(-q^r)^k + (a*u_r-b*u_{r-1})/(a*u_r+(b-p*a)*u_{r-1})*w_r",
            uses: IndexUse::R_K,
            preconditions: "v_r!=0, a*u_r+(b-p*a)*u_{r-1}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(is4vgui_particular_lhs),
            rhs: Box::new(is4vgui_particular_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-e6qnu1m",
            anchor: "sum C(k,j)*w_{m-kr+2rj}/q^(rj) = (v_r/q^r)^k*w_m",
            uses: IndexUse::M_R_K,
            preconditions: "v_r!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(e6qnu1m_lhs),
            rhs: Box::new(e6qnu1m_rhs),
            via_lemma: Some(Box::new(e6qnu1m_via_lemma)),
        },
        Identity {
            id: "eq-k130vx8",
            anchor: "sum C(k,j)*(-v_r/q^r)^j*w_{m-2kr+rj} = w_m/(-q^r)^k",
            uses: IndexUse::M_R_K,
            preconditions: "v_r!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(k130vx8_lhs),
            rhs: Box::new(k130vx8_rhs),
            via_lemma: Some(Box::new(k130vx8_via_lemma)),
        },
        Identity {
            id: "eq-d00yx5i",
            anchor: "sum (-1)^j*C(k,j)*w_{m+kr+rj}/v_r^j = q^(rk)*w_m/v_r^k (sign validated by the recurrence)",
            uses: IndexUse::M_R_K,
            preconditions: "v_r!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(d00yx5i_lhs),
            rhs: Box::new(d00yx5i_rhs),
            via_lemma: Some(Box::new(d00yx5i_via_lemma)),
        },
        Identity {
            id: "eq-d00yx5i-printed",
            anchor: "sum (-1)^j*C(k,j)*w_{m+kr+rj}/v_r^j = (-1)^k*q^(rk)*w_m/v_r^k (rejected: spurious (-1)^k)",
            uses: IndexUse::M_R_K,
            preconditions: "v_r!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: true,
            lhs: Box::new(d00yx5i_lhs),
            rhs: Box::new(d00yx5i_printed_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-e6qnu1m-particular",
            anchor: "sum C(k,j)*w_{2rj}/q^(rj) = (v_r/q^r)^k*w_{rk}",
            uses: IndexUse::R_K,
            preconditions: "v_r!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(e6qnu1m_particular_lhs),
            rhs: Box::new(e6qnu1m_particular_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-k130vx8-particular",
            anchor: "sum C(k,j)*(-v_r/q^r)^j*w_{rj} = w_{2kr}/(-q^r)^k",
            uses: IndexUse::R_K,
            preconditions: "v_r!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(k130vx8_particular_lhs),
            rhs: Box::new(k130vx8_particular_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-xf5dcmx",
            anchor: "sum (-1)^j*C(k,j)*w_{rj}/v_r^j = (a*u_{kr}-b*u_{kr-1})/(a*u_{kr}+(b-p*a)*u_{kr-1})*w_{kr}/v_r^k (sign validated)",
            uses: IndexUse::R_K,
            preconditions: "v_r!=0, a*u_{kr}+(b-p*a)*u_{kr-1}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(xf5dcmx_lhs),
            rhs: Box::new(xf5dcmx_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-xf5dcmx-printed",
            anchor: "sum (-1)^j*C(k,j)*w_{rj}/v_r^j = (-1)^k*(...)*w_{kr}/v_r^k (rejected: spurious (-1)^k)",
            uses: IndexUse::R_K,
            preconditions: "v_r!=0, a*u_{kr}+(b-p*a)*u_{kr-1}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: true,
            lhs: Box::new(xf5dcmx_lhs),
            rhs: Box::new(xf5dcmx_printed_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-e6qnu1m-g",
            anchor: "sum (-1)^(rj)*C(k,j)*G_{m-kr+2rj} = (-1)^(rk)*L_r^k*G_m",
            uses: IndexUse::M_R_K,
            preconditions: "v_r!=0",
            constraint: ParamConstraint::GFamily,
            default_quarantined: false,
            lhs: Box::new(e6qnu1m_g_lhs),
            rhs: Box::new(e6qnu1m_g_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-xf5dcmx-g",
            anchor: "sum (-1)^j*C(k,j)*G_{rj}/L_r^j = (F_{kr+1}G_0-F_{kr}G_1)/(F_{kr+1}G_0+F_{kr}(G_1-G_0))*G_{kr}/L_r^k (sign validated)",
            uses: IndexUse::R_K,
            preconditions: "v_r!=0, F_{kr+1}G_0+F_{kr}(G_1-G_0)!=0",
            constraint: ParamConstraint::GFamily,
            default_quarantined: false,
            lhs: Box::new(xf5dcmx_g_lhs),
            rhs: Box::new(xf5dcmx_g_rhs),
            via_lemma: None,
        },
    ]
}
