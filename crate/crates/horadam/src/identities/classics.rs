//! Classical binomial identities recovered as pinned evaluations of the
//! general catalog, plus the two p = 1, q = -1 displays that only appear in
//! that specialized dress: they re-derive the same values through different
//! expression paths, which is exactly what makes them worth checking.

use super::{
    binomial_power_sum, nonzero, power_sum, EvalResult, GaussianRational, Identity,
    IndexUse, Indices, ParamConstraint, Preset,
};
use crate::sequence::Terms;

fn horadam_binomial_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    // (-q)^k · Σ C(k,j)·(-p/q)^j·w_j
    let params = src.params();
    let t = -&params.p().checked_div(params.q())?;
    let base = (-params.q()).int_pow(ix.k)?;
    Ok(&base * &binomial_power_sum(ix.k, &t, |j| Ok(src.w(j)?))?)
}

fn horadam_binomial_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    Ok(src.w(2 * ix.k)?)
}

fn stanica_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let t = GaussianRational::from_int(-1);
    binomial_power_sum(ix.k, &t, |j| Ok(src.w(j)?))
}

fn stanica_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    Ok(-&src.w(ix.k)?)
}

fn g_binomial_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    // Σ (-1)^j·C(k,j)·G_{rj}/F_{r+1}^j with F_x = u(x-1)
    let f_r1 = nonzero(src.u(ix.r)?, "F_{r+1}!=0")?;
    let t = -&f_r1.checked_recip()?;
    binomial_power_sum(ix.k, &t, |j| Ok(src.w(ix.r * j)?))
}

fn g_binomial_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    // (F_r/F_{r+1})^k · (G_0·F_{k+1} - G_1·F_k)/(G_0·F_{k-1} + G_1·F_k) · G_k
    let f_r1 = nonzero(src.u(ix.r)?, "F_{r+1}!=0")?;
    let scale = src.u(ix.r - 1)?.checked_div(&f_r1)?.int_pow(ix.k)?;
    let (a, b) = (src.params().a(), src.params().b());
    let den = &(a * &src.u(ix.k - 2)?) + &(b * &src.u(ix.k - 1)?);
    let den = nonzero(den, "G_0*F_{k-1}+G_1*F_k!=0")?;
    let num = &(a * &src.u(ix.k)?) - &(b * &src.u(ix.k - 1)?);
    let ratio = num.checked_div(&den)?;
    Ok(&(&scale * &ratio) * &src.w(ix.k)?)
}

fn g_shift_sum_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    // F_r · Σ G_{rj}/F_{r-1}^j
    let f_r_minus_1 = nonzero(src.u(ix.r - 2)?, "F_{r-1}!=0")?;
    let t = f_r_minus_1.checked_recip()?;
    Ok(&src.u(ix.r - 1)? * &power_sum(ix.k, &t, |j| Ok(src.w(ix.r * j)?))?)
}

fn g_shift_sum_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    // G_{kr+r-1}/F_{r-1}^k - F_{r-1}·(G_1 - G_0)
    let f_r_minus_1 = nonzero(src.u(ix.r - 2)?, "F_{r-1}!=0")?;
    let head = &src.w(ix.k * ix.r + ix.r - 1)? * &f_r_minus_1.int_pow(-ix.k)?;
    let (a, b) = (src.params().a(), src.params().b());
    let tail = &f_r_minus_1 * &(b - a);
    Ok(&head - &tail)
}

pub(super) fn entries() -> Vec<Identity> {
    vec![
        Identity {
            id: "horadam-binomial",
            anchor: "(-q)^k*sum C(k,j)*(-p/q)^j*w_j = w_{2k}",
            uses: IndexUse::K,
            preconditions: "-",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(horadam_binomial_lhs),
            rhs: Box::new(horadam_binomial_rhs),
            via_lemma: None,
        },
        Identity {
            id: "stanica-fibonacci",
            anchor: "sum (-1)^j*C(k,j)*F_j = -F_k",
            uses: IndexUse::K,
            preconditions: "-",
            constraint: ParamConstraint::Exact(Preset::Fibonacci),
            default_quarantined: false,
            lhs: Box::new(stanica_lhs),
            rhs: Box::new(stanica_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-fxtzfk3-particular-g",
            anchor: "sum (-1)^j*C(k,j)*G_{rj}/F_{r+1}^j = (F_r/F_{r+1})^k*(G_0*F_{k+1}-G_1*F_k)/(G_0*F_{k-1}+G_1*F_k)*G_k",
            uses: IndexUse::R_K,
            preconditions: "F_{r+1}!=0, G_0*F_{k-1}+G_1*F_k!=0",
            constraint: ParamConstraint::GFamily,
            default_quarantined: false,
            lhs: Box::new(g_binomial_lhs),
            rhs: Box::new(g_binomial_rhs),
            via_lemma: None,
        },
        Identity {
            id: "eq-vwqo0w9-particular-g",
            anchor: "F_r*sum G_{rj}/F_{r-1}^j = G_{kr+r-1}/F_{r-1}^k - F_{r-1}*(G_1-G_0)",
            uses: IndexUse::R_K,
            preconditions: "F_{r-1}!=0",
            constraint: ParamConstraint::GFamily,
            default_quarantined: false,
            lhs: Box::new(g_shift_sum_lhs),
            rhs: Box::new(g_shift_sum_rhs),
            via_lemma: None,
        },
    ]
}
