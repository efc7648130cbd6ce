//! The base relations: negative-index closed forms for u, v, w and the
//! three product/shift identities every weighted sum in the catalog is
//! derived from.
//!
//! Two of the negative-index forms circulate in print with the wrong power
//! of q; the backward recurrence is the arbiter here. The shipped
//! `kernel-eq-8` / `kernel-eq-9` entries carry the validated exponents, and
//! the rejected spellings are kept as `*-printed` entries, quarantined by
//! default, so the discrepancy stays demonstrable.

use super::{pow, seed_ratio, EvalResult, Identity, IndexUse, Indices, ParamConstraint};
use crate::sequence::Terms;

fn eq7_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    Ok(src.u(-ix.n)?)
}

fn eq7_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let q_pow = pow(src.params().q(), 1 - ix.n, "q!=0")?;
    Ok(-&(&q_pow * &src.u(ix.n - 2)?))
}

fn eq8_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    Ok(src.v(-ix.n)?)
}

fn eq8_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let q_pow = pow(src.params().q(), -ix.n, "q!=0")?;
    Ok(&q_pow * &src.v(ix.n)?)
}

fn eq8_printed_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let q_pow = pow(src.params().q(), ix.n, "q!=0")?;
    Ok(&q_pow * &src.v(ix.n)?)
}

fn eq9_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    Ok(src.w(-ix.n)?)
}

fn eq9_ratio_w(src: &dyn Terms, n: i64) -> EvalResult {
    let ratio = seed_ratio(src, n, "a*u_n+(b-p*a)*u_{n-1}!=0")?;
    Ok(&ratio * &src.w(n)?)
}

fn eq9_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let q_pow = pow(src.params().q(), -ix.n, "q!=0")?;
    Ok(&q_pow * &eq9_ratio_w(src, ix.n)?)
}

fn eq9_printed_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    eq9_ratio_w(src, ix.n)
}

fn eq10_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    Ok(src.w(ix.m + ix.r)?)
}

fn eq10_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let q = src.params().q();
    let first = &src.u(ix.r)? * &src.w(ix.m)?;
    let second = &(q * &src.u(ix.r - 1)?) * &src.w(ix.m - 1)?;
    Ok(&first - &second)
}

fn eq11_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    Ok(&src.v(ix.r)? * &src.w(ix.m)?)
}

fn eq11_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let q_pow = pow(src.params().q(), ix.r, "q!=0")?;
    Ok(&src.w(ix.m + ix.r)? + &(&q_pow * &src.w(ix.m - ix.r)?))
}

fn eq12_lhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    Ok(&src.w(ix.n - ix.r)? * &src.w(ix.m + ix.n + ix.r)?)
}

fn eq12_rhs(src: &dyn Terms, ix: Indices) -> EvalResult {
    let q_pow = pow(src.params().q(), ix.n - ix.r, "q!=0")?;
    let prod = &src.w(ix.n)? * &src.w(ix.m + ix.n)?;
    let correction = &(&q_pow * &src.e()) * &(&src.u(ix.r - 1)? * &src.u(ix.m + ix.r - 1)?);
    Ok(&prod + &correction)
}

pub(super) fn entries() -> Vec<Identity> {
    vec![
        Identity {
            id: "kernel-eq-7",
            anchor: "u_{-n} = -q^(1-n)*u_{n-2}",
            uses: IndexUse::N,
            preconditions: "-",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(eq7_lhs),
            rhs: Box::new(eq7_rhs),
            via_lemma: None,
        },
        Identity {
            id: "kernel-eq-8",
            anchor: "v_{-n} = q^(-n)*v_n (exponent validated by the backward recurrence)",
            uses: IndexUse::N,
            preconditions: "-",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(eq8_lhs),
            rhs: Box::new(eq8_rhs),
            via_lemma: None,
        },
        Identity {
            id: "kernel-eq-8-printed",
            anchor: "v_{-n} = q^n*v_n (rejected spelling; fails whenever q^(2n) != 1)",
            uses: IndexUse::N,
            preconditions: "-",
            constraint: ParamConstraint::Any,
            default_quarantined: true,
            lhs: Box::new(eq8_lhs),
            rhs: Box::new(eq8_printed_rhs),
            via_lemma: None,
        },
        Identity {
            id: "kernel-eq-9",
            anchor: "w_{-n} = q^(-n)*(a*u_n-b*u_{n-1})/(a*u_n+(b-p*a)*u_{n-1})*w_n",
            uses: IndexUse::N,
            preconditions: "a*u_n+(b-p*a)*u_{n-1}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(eq9_lhs),
            rhs: Box::new(eq9_rhs),
            via_lemma: None,
        },
        Identity {
            id: "kernel-eq-9-printed",
            anchor: "w_{-n} = (a*u_n-b*u_{n-1})/(a*u_n+(b-p*a)*u_{n-1})*w_n (rejected: missing q^(-n))",
            uses: IndexUse::N,
            preconditions: "a*u_n+(b-p*a)*u_{n-1}!=0",
            constraint: ParamConstraint::Any,
            default_quarantined: true,
            lhs: Box::new(eq9_lhs),
            rhs: Box::new(eq9_printed_rhs),
            via_lemma: None,
        },
        Identity {
            id: "kernel-eq-10",
            anchor: "w_{m+r} = u_r*w_m - q*u_{r-1}*w_{m-1}",
            uses: IndexUse::M_R,
            preconditions: "-",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(eq10_lhs),
            rhs: Box::new(eq10_rhs),
            via_lemma: None,
        },
        Identity {
            id: "kernel-eq-11",
            anchor: "v_r*w_m = w_{m+r} + q^r*w_{m-r}",
            uses: IndexUse::M_R,
            preconditions: "-",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(eq11_lhs),
            rhs: Box::new(eq11_rhs),
            via_lemma: None,
        },
        Identity {
            id: "kernel-eq-12",
            anchor: "w_{n-r}*w_{m+n+r} = w_n*w_{m+n} + q^(n-r)*e*u_{r-1}*u_{m+r-1}, e=pab-qa^2-b^2",
            uses: IndexUse::M_N_R,
            preconditions: "-",
            constraint: ParamConstraint::Any,
            default_quarantined: false,
            lhs: Box::new(eq12_lhs),
            rhs: Box::new(eq12_rhs),
            via_lemma: None,
        },
    ]
}
