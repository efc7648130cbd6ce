//! Weighted sums whose weights are ratios of w-terms.
//!
//! Family one sums w with weights (w_r/(q·w_{r-1}))^j and closes over u·w
//! products; family two sums u with weights (w_{n-r}/w_n)^j and closes over
//! w·w products scaled by q^(n-r)·e. Both evaluate the multiply-through
//! display forms, so the only divisions are the ones the printed weights
//! force; each also carries a route through the generic two-sequence lemma
//! with the identification used to derive it.

use super::lemmas::{lemma1_closed, lemma1_sum, LemmaConfig, LemmaForm};
use super::{
    nonzero, pow, power_sum, EvalResult, GaussianRational, Identity, IndexUse, Indices,
    ParamConstraint, Skip,
};
use crate::sequence::{Preset, Terms};

// ---- sums of w with weights from (w_r, w_{r-1}) ----

/// Weight t = w_r / (q·w_{r-1}); hypothesis: w_{r-1} != 0.
fn wr_weight(src: &dyn Terms, r: i64) -> Result<GaussianRational, Skip> {
    let w_r1 = nonzero(src.w(r - 1)?, "w_{r-1}!=0")?;
    Ok(src.w(r)?.checked_div(&(src.params().q() * &w_r1))?)
}

fn xvb2v42_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = wr_weight(src, ix.r)?;
    power_sum(ix.k, &t, |j| Ok(src.w(ix.m + ix.r - ix.k + j)?))
}

fn xvb2v42_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = wr_weight(src, ix.r)?;
    let head = &(&t.int_pow(ix.k)? * &src.u(ix.m)?) * &src.w(ix.r)?;
    let tail = &(src.params().q() * &src.u(ix.m - ix.k - 1)?) * &src.w(ix.r - 1)?;
    Ok(&head - &tail)
}

fn xvb2v42_via_lemma(
    src: &dyn Terms,
    ix: Indices,
) -> Result<(GaussianRational, GaussianRational), Skip> {
    let w_r = nonzero(src.w(ix.r)?, "w_r!=0 (lemma route)")?;
    let w_r1 = nonzero(src.w(ix.r - 1)?, "w_{r-1}!=0")?;
    let x = (src.params().q() * &w_r1).checked_div(&w_r)?;
    let y = w_r.checked_recip()?;
    let cfg = LemmaConfig::new(x, y, 1, -ix.r, |i| Ok(src.u(i)?), |i| Ok(src.w(i)?))?;
    let sum = lemma1_sum(&cfg, LemmaForm::Standard, ix.m, ix.k)?;
    let closed = lemma1_closed(&cfg, LemmaForm::Standard, ix.m, ix.k)?;
    Ok((&sum * &w_r, &closed * &w_r))
}

fn xvb2v42_particular_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = wr_weight(src, ix.r)?;
    let scale = pow(src.params().q(), ix.r - 1, "q!=0")?;
    Ok(&scale * &power_sum(ix.k, &t, |j| Ok(src.w(j)?))?)
}

fn xvb2v42_particular_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = wr_weight(src, ix.r)?;
    let scale = pow(src.params().q(), ix.r - 1, "q!=0")?;
    let head = &(&(&t.int_pow(ix.k)? * &scale) * &src.u(ix.k - ix.r)?) * &src.w(ix.r)?;
    let tail = &src.u(ix.r - 1)? * &src.w(ix.r - 1)?;
    Ok(&head + &tail)
}

/// Display weight t = -w_r/w_{r-1}, the q = -1 shape of [`wr_weight`].
fn neg_ratio_weight(src: &dyn Terms, r: i64) -> Result<GaussianRational, Skip> {
    let w_r1 = nonzero(src.w(r - 1)?, "w_{r-1}!=0")?;
    Ok(-&(src.w(r)?.checked_div(&w_r1)?))
}

/// The m-companion factors in the closed side: whether the display writes
/// them through the sequence itself (a = 0 cases) or through u.
#[derive(Clone, Copy)]
enum Companion {
    SelfShifted,
    Fundamental,
}

impl Companion {
    fn head(&self, src: &dyn Terms, m: i64) -> EvalResult {
        match self {
            Companion::SelfShifted => Ok(src.w(m + 1)?),
            Companion::Fundamental => Ok(src.u(m)?),
        }
    }

    fn tail(&self, src: &dyn Terms, m: i64, k: i64) -> EvalResult {
        match self {
            Companion::SelfShifted => Ok(src.w(m - k)?),
            Companion::Fundamental => Ok(src.u(m - k - 1)?),
        }
    }
}

fn xvb2v42_display(
    id: &'static str,
    anchor: &'static str,
    preset: Preset,
    companion: Companion,
) -> Identity {
    Identity {
        id,
        anchor,
        uses: IndexUse::M_R_K,
        preconditions: "w_{r-1}!=0",
        constraint: ParamConstraint::Exact(preset),
        default_quarantined: false,
        lhs: Box::new(|src, ix| {
            let t = neg_ratio_weight(src, ix.r)?;
            power_sum(ix.k, &t, |j| Ok(src.w(ix.m + ix.r - ix.k + j)?))
        }),
        rhs: Box::new(move |src, ix| {
            let t = neg_ratio_weight(src, ix.r)?;
            let head = &(&t.int_pow(ix.k)? * &companion.head(src, ix.m)?) * &src.w(ix.r)?;
            let tail = &companion.tail(src, ix.m, ix.k)? * &src.w(ix.r - 1)?;
            Ok(&head + &tail)
        }),
        via_lemma: None,
    }
}

fn xvb2v42_display_particular(
    id: &'static str,
    anchor: &'static str,
    preset: Preset,
    companion: Companion,
) -> Identity {
    Identity {
        id,
        anchor,
        uses: IndexUse::R_K,
        preconditions: "w_{r-1}!=0",
        constraint: ParamConstraint::Exact(preset),
        default_quarantined: false,
        lhs: Box::new(|src, ix| {
            let t = neg_ratio_weight(src, ix.r)?;
            power_sum(ix.k, &t, |j| Ok(src.w(ix.r + j)?))
        }),
        rhs: Box::new(move |src, ix| {
            let t = neg_ratio_weight(src, ix.r)?;
            Ok(&(&t.int_pow(ix.k)? * &companion.head(src, ix.k)?) * &src.w(ix.r)?)
        }),
        via_lemma: None,
    }
}

// ---- sums of u with weights from (w_n, w_{n-r}) ----

/// Weight t = w_{n-r}/w_n; hypotheses: w_n != 0 and w_{n-r} != 0.
fn wn_weight(src: &dyn Terms, n: i64, r: i64) -> Result<GaussianRational, Skip> {
    let w_n = nonzero(src.w(n)?, "w_n!=0")?;
    let w_nr = nonzero(src.w(n - r)?, "w_{n-r}!=0")?;
    Ok(w_nr.checked_div(&w_n)?)
}

fn ybopnqn_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = wn_weight(src, ix.n, ix.r)?;
    let coeff = &(&pow(src.params().q(), ix.n - ix.r, "q!=0")? * &src.e()) * &src.u(ix.r - 1)?;
    let sum = power_sum(ix.k, &t, |j| {
        Ok(src.u(ix.m - (ix.n + 1) - ix.k * ix.r + ix.r * j)?)
    })?;
    Ok(&coeff * &sum)
}

fn ybopnqn_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = wn_weight(src, ix.n, ix.r)?;
    let head = &(&src.w(ix.m)? * &src.w(ix.n - ix.r)?) * &t.int_pow(ix.k)?;
    let tail = &src.w(ix.n)? * &src.w(ix.m - (ix.k + 1) * ix.r)?;
    Ok(&head - &tail)
}

fn ybopnqn_via_lemma(
    src: &dyn Terms,
    ix: Indices,
) -> Result<(GaussianRational, GaussianRational), Skip> {
    let w_n = nonzero(src.w(ix.n)?, "w_n!=0")?;
    let w_nr = nonzero(src.w(ix.n - ix.r)?, "w_{n-r}!=0")?;
    let e = nonzero(src.e(), "e!=0 (lemma route)")?;
    let u_r1 = nonzero(src.u(ix.r - 1)?, "u_{r-1}!=0 (lemma route)")?;
    let x = w_n.checked_div(&w_nr)?;
    let q_pow = pow(src.params().q(), ix.n - ix.r, "q!=0")?;
    let y = (&(&q_pow * &e) * &u_r1).checked_div(&w_nr)?;
    let cfg = LemmaConfig::new(x, y, ix.r, ix.n + 1, |i| Ok(src.w(i)?), |i| Ok(src.u(i)?))?;
    let sum = lemma1_sum(&cfg, LemmaForm::Standard, ix.m, ix.k)?;
    let closed = lemma1_closed(&cfg, LemmaForm::Standard, ix.m, ix.k)?;
    Ok((&sum * &w_nr, &closed * &w_nr))
}

fn ndpr9xm_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = wn_weight(src, ix.n, ix.r)?;
    let coeff = &(&pow(src.params().q(), ix.n - ix.r, "q!=0")? * &src.e()) * &src.u(ix.r - 1)?;
    let sum = power_sum(ix.k, &t, |j| Ok(src.u(ix.r * j)?))?;
    Ok(&coeff * &sum)
}

fn ndpr9xm_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = wn_weight(src, ix.n, ix.r)?;
    let head = &(&src.w(ix.n + ix.k * ix.r + 1)? * &src.w(ix.n - ix.r)?) * &t.int_pow(ix.k)?;
    let tail = &src.w(ix.n)? * &src.w(ix.n - ix.r + 1)?;
    Ok(&head - &tail)
}

/// Sign and magnitude of the display coefficient replacing q^(n-r)·e·u_{r-1}.
enum DisplayCoeff {
    /// (-1)^(n-r) · (ab + a² - b²) · u_{r-1}  (the p = 1, q = -1 family)
    GFamily,
    /// (-1)^(n-r-1) · w_r  (Pell)
    PellLike,
    /// (-1)^(n-r-1) · 2^(n-r) · w_r  (Jacobsthal)
    JacobsthalLike,
}

impl DisplayCoeff {
    fn eval(&self, src: &dyn Terms, n: i64, r: i64) -> EvalResult {
        let minus_one = GaussianRational::from_int(-1);
        match self {
            DisplayCoeff::GFamily => {
                let params = src.params();
                let (a, b) = (params.a(), params.b());
                let e_g = &(&(a * b) + &(a * a)) - &(b * b);
                let sign = minus_one.int_pow(n - r)?;
                Ok(&(&sign * &e_g) * &src.u(r - 1)?)
            }
            DisplayCoeff::PellLike => {
                let sign = minus_one.int_pow(n - r - 1)?;
                Ok(&sign * &src.w(r)?)
            }
            DisplayCoeff::JacobsthalLike => {
                let sign = minus_one.int_pow(n - r - 1)?;
                let two_pow = GaussianRational::from_int(2).int_pow(n - r)?;
                Ok(&(&sign * &two_pow) * &src.w(r)?)
            }
        }
    }
}

fn ndpr9xm_display(
    id: &'static str,
    anchor: &'static str,
    constraint: ParamConstraint,
    coeff: DisplayCoeff,
    summand_via_w: bool,
) -> Identity {
    Identity {
        id,
        anchor,
        uses: IndexUse::N_R_K,
        preconditions: "w_n!=0, w_{n-r}!=0",
        constraint,
        default_quarantined: false,
        lhs: Box::new(move |src, ix| {
            let t = wn_weight(src, ix.n, ix.r)?;
            let c = coeff.eval(src, ix.n, ix.r)?;
            let sum = power_sum(ix.k, &t, |j| {
                if summand_via_w {
                    Ok(src.w(ix.r * j + 1)?)
                } else {
                    Ok(src.u(ix.r * j)?)
                }
            })?;
            Ok(&c * &sum)
        }),
        rhs: Box::new(ndpr9xm_rhs),
        via_lemma: None,
    }
}

pub(super) fn entries() -> Vec<Identity> {
    vec![
        Identity {
            id: "thm-xvb2v42",
            anchor: "sum (w_r/(q*w_{r-1}))^j*w_{m+r-k+j} = (w_r/(q*w_{r-1}))^k*u_m*w_r - q*u_{m-k-1}*w_{r-1}",
            uses: IndexUse::M_R_K,
            preconditions: "w_{r-1}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(xvb2v42_lhs),
            rhs: Box::new(xvb2v42_rhs),
            via_lemma: Some(Box::new(xvb2v42_via_lemma)),
        },
        Identity {
            id: "thm-xvb2v42-particular",
            anchor: "q^(r-1)*sum (w_r/(q*w_{r-1}))^j*w_j = (w_r/(q*w_{r-1}))^k*q^(r-1)*u_{k-r}*w_r + u_{r-1}*w_{r-1}",
            uses: IndexUse::R_K,
            preconditions: "w_{r-1}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(xvb2v42_particular_lhs),
            rhs: Box::new(xvb2v42_particular_rhs),
            via_lemma: None,
        },
        xvb2v42_display(
            "thm-xvb2v42-fibonacci",
            "sum (-1)^j*(F_r/F_{r-1})^j*F_{m+r-k+j} = (-1)^k*(F_r/F_{r-1})^k*F_{m+1}*F_r + F_{m-k}*F_{r-1}",
            Preset::Fibonacci,
            Companion::SelfShifted,
        ),
        xvb2v42_display(
            "thm-xvb2v42-lucas",
            "sum (-1)^j*(L_r/L_{r-1})^j*L_{m+r-k+j} = (-1)^k*(L_r/L_{r-1})^k*F_{m+1}*L_r + F_{m-k}*L_{r-1}",
            Preset::Lucas,
            Companion::Fundamental,
        ),
        xvb2v42_display(
            "thm-xvb2v42-pell",
            "sum (-1)^j*(P_r/P_{r-1})^j*P_{m+r-k+j} = (-1)^k*(P_r/P_{r-1})^k*P_{m+1}*P_r + P_{m-k}*P_{r-1}",
            Preset::Pell,
            Companion::SelfShifted,
        ),
        xvb2v42_display_particular(
            "thm-xvb2v42-fibonacci-particular",
            "sum (-1)^j*(F_r/F_{r-1})^j*F_{r+j} = (-1)^k*(F_r/F_{r-1})^k*F_{k+1}*F_r",
            Preset::Fibonacci,
            Companion::SelfShifted,
        ),
        xvb2v42_display_particular(
            "thm-xvb2v42-lucas-particular",
            "sum (-1)^j*(L_r/L_{r-1})^j*L_{r+j} = (-1)^k*(L_r/L_{r-1})^k*F_{k+1}*L_r",
            Preset::Lucas,
            Companion::Fundamental,
        ),
        xvb2v42_display_particular(
            "thm-xvb2v42-pell-particular",
            "sum (-1)^j*(P_r/P_{r-1})^j*P_{r+j} = (-1)^k*(P_r/P_{r-1})^k*P_{k+1}*P_r",
            Preset::Pell,
            Companion::SelfShifted,
        ),
        Identity {
            id: "thm-ybopnqn",
            anchor: "q^(n-r)*e*u_{r-1}*sum u_{m-(n+1)-kr+rj}/(w_n/w_{n-r})^j = w_m*w_{n-r}/(w_n/w_{n-r})^k - w_n*w_{m-(k+1)r}",
            uses: IndexUse::M_N_R_K,
            preconditions: "w_n!=0, w_{n-r}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(ybopnqn_lhs),
            rhs: Box::new(ybopnqn_rhs),
            via_lemma: Some(Box::new(ybopnqn_via_lemma)),
        },
        Identity {
            id: "eq-ndpr9xm",
            anchor: "q^(n-r)*e*u_{r-1}*sum u_{rj}/(w_n/w_{n-r})^j = w_{n+kr+1}*w_{n-r}/(w_n/w_{n-r})^k - w_n*w_{n-r+1}",
            uses: IndexUse::N_R_K,
            preconditions: "w_n!=0, w_{n-r}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(ndpr9xm_lhs),
            rhs: Box::new(ndpr9xm_rhs),
            via_lemma: None,
        },
        ndpr9xm_display(
            "eq-ndpr9xm-g",
            "(-1)^(n-r)*(G_0*G_1+G_0^2-G_1^2)*F_r*sum F_{rj+1}/(G_n/G_{n-r})^j = G_{n+kr+1}*G_{n-r}/(G_n/G_{n-r})^k - G_n*G_{n-r+1}",
            ParamConstraint::GFamily,
            DisplayCoeff::GFamily,
            false,
        ),
        ndpr9xm_display(
            "eq-ndpr9xm-pell",
            "(-1)^(n-r-1)*P_r*sum P_{rj+1}/(P_n/P_{n-r})^j = P_{n+kr+1}*P_{n-r}/(P_n/P_{n-r})^k - P_n*P_{n-r+1}",
            ParamConstraint::Exact(Preset::Pell),
            DisplayCoeff::PellLike,
            true,
        ),
        ndpr9xm_display(
            "eq-ndpr9xm-jacobsthal",
            "(-1)^(n-r-1)*2^(n-r)*J_r*sum J_{rj+1}/(J_n/J_{n-r})^j = J_{n+kr+1}*J_{n-r}/(J_n/J_{n-r})^k - J_n*J_{n-r+1}",
            ParamConstraint::Exact(Preset::Jacobsthal),
            DisplayCoeff::JacobsthalLike,
            true,
        ),
    ]
}
