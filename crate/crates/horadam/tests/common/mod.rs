//! Shared fixtures for the integration suites: deterministic random
//! scalars, randomized lemma configurations (geometric witnesses plus
//! configurations harvested from the sequence relations), and the stock
//! parameter sets.
#![allow(dead_code)]

use horadam::identities::LemmaConfig;
use horadam::numeric::GaussianRational;
use horadam::sequence::{HoradamParams, SequenceTriple, Terms};
use horadam::verify::{default_grid, ParamSet};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The stock grid's parameter sets (presets, seeded G, real and Gaussian
/// custom sets).
pub fn stock_param_sets() -> Vec<ParamSet> {
    default_grid().param_sets
}

/// A small random rational, nonzero when `nonzero` is set.
pub fn small_rational(rng: &mut ChaCha8Rng, nonzero: bool) -> GaussianRational {
    loop {
        let n = rng.gen_range(-6i64..=6);
        let d = rng.gen_range(1i64..=4);
        let v = GaussianRational::from_ratio(n, d);
        if !nonzero || !v.is_zero() {
            return v;
        }
    }
}

/// A small random Gaussian rational; imaginary parts show up in roughly a
/// third of the draws.
pub fn small_scalar(rng: &mut ChaCha8Rng, nonzero: bool) -> GaussianRational {
    loop {
        let re = small_rational(rng, false);
        let v = if rng.gen_range(0..3) == 0 {
            let im = small_rational(rng, false);
            &re + &(&GaussianRational::i() * &im)
        } else {
            re
        };
        if !nonzero || !v.is_zero() {
            return v;
        }
    }
}

/// Random parameters with nonzero p and q.
pub fn random_params(rng: &mut ChaCha8Rng) -> HoradamParams {
    loop {
        let a = small_scalar(rng, false);
        let b = small_scalar(rng, false);
        let p = small_scalar(rng, true);
        let q = small_scalar(rng, true);
        if let Ok(params) = HoradamParams::new(a, b, p, q) {
            return params;
        }
    }
}

/// A geometric single-sequence witness: X[i] = t^i satisfies
/// X[m] = x·X[m-alpha] + y·X[m-beta] with y = (1 - x·t^(-alpha))·t^beta.
pub fn geometric_single(rng: &mut ChaCha8Rng) -> Option<LemmaConfig<'static>> {
    let t = small_scalar(rng, true);
    let alpha = rng.gen_range(-3i64..=3);
    let beta = rng.gen_range(-3i64..=3);
    let x = small_scalar(rng, true);
    let correction = &GaussianRational::one() - &(&x * &t.int_pow(-alpha).ok()?);
    let y = &correction * &t.int_pow(beta).ok()?;
    if y.is_zero() {
        return None;
    }
    let seq = move |i: i64| Ok(t.int_pow(i).expect("t is nonzero"));
    LemmaConfig::single(x, y, alpha, beta, seq).ok()
}

/// A geometric two-sequence witness: X[i] = c·t^i, Y[i] = d·t^i.
pub fn geometric_pair(rng: &mut ChaCha8Rng) -> Option<LemmaConfig<'static>> {
    let t = small_scalar(rng, true);
    let c = small_scalar(rng, true);
    let d = small_scalar(rng, true);
    let alpha = rng.gen_range(-3i64..=3);
    let beta = rng.gen_range(-3i64..=3);
    let x = small_scalar(rng, true);
    // solve c·t^m = x·c·t^(m-alpha) + y·d·t^(m-beta) for y
    let residue = &c - &(&(&x * &c) * &t.int_pow(-alpha).ok()?);
    let y = (&residue * &t.int_pow(beta).ok()?).checked_div(&d).ok()?;
    if y.is_zero() {
        return None;
    }
    let tx = t.clone();
    let x_seq = move |i: i64| Ok(&c * &tx.int_pow(i).expect("t is nonzero"));
    let y_seq = move |i: i64| Ok(&d * &t.int_pow(i).expect("t is nonzero"));
    LemmaConfig::new(x, y, alpha, beta, x_seq, y_seq).ok()
}

/// A single-sequence config harvested from one of the sequence relations
/// of a random parameter set: the defining recurrence, the u_r shift, or
/// the v_r symmetric split.
pub fn recurrence_single(rng: &mut ChaCha8Rng) -> Option<LemmaConfig<'static>> {
    let params = random_params(rng);
    let triple = Arc::new(SequenceTriple::new(params.clone()));
    let kind = rng.gen_range(0..3);
    let r = rng.gen_range(-2i64..=4);
    let (x, y, alpha, beta) = match kind {
        0 => (params.p().clone(), -params.q(), 1, 2),
        1 => {
            let u_r = triple.u(r).ok()?;
            let u_r1 = triple.u(r - 1).ok()?;
            if u_r.is_zero() || u_r1.is_zero() {
                return None;
            }
            (u_r, -&(params.q() * &u_r1), r, r + 1)
        }
        _ => {
            let v_r = triple.v(r).ok()?;
            if v_r.is_zero() {
                return None;
            }
            let q_pow = params.q().int_pow(r).ok()?;
            (
                v_r.checked_recip().ok()?,
                q_pow.checked_div(&v_r).ok()?,
                -r,
                r,
            )
        }
    };
    let seq = move |i: i64| Ok(triple.w(i)?);
    LemmaConfig::single(x, y, alpha, beta, seq).ok()
}

/// A two-sequence config harvested from the u/w or w/u cross relations of
/// a random parameter set.
pub fn recurrence_pair(rng: &mut ChaCha8Rng) -> Option<LemmaConfig<'static>> {
    let params = random_params(rng);
    let triple = Arc::new(SequenceTriple::new(params.clone()));
    if rng.gen_bool(0.5) {
        // u[m] = (q·w_{r-1}/w_r)·u[m-1] + (1/w_r)·w[m+r]
        let r = rng.gen_range(-2i64..=4);
        let w_r = triple.w(r).ok()?;
        let w_r1 = triple.w(r - 1).ok()?;
        if w_r.is_zero() || w_r1.is_zero() {
            return None;
        }
        let x = (params.q() * &w_r1).checked_div(&w_r).ok()?;
        let y = w_r.checked_recip().ok()?;
        let tu = Arc::clone(&triple);
        let x_seq = move |i: i64| Ok(tu.u(i)?);
        let y_seq = move |i: i64| Ok(triple.w(i)?);
        LemmaConfig::new(x, y, 1, -r, x_seq, y_seq).ok()
    } else {
        // w[m] = (w_n/w_{n-r})·w[m-r] + q^(n-r)·(e·u_{r-1}/w_{n-r})·u[m-n-1]
        let r = rng.gen_range(-2i64..=3);
        let n = rng.gen_range(-2i64..=4);
        let w_n = triple.w(n).ok()?;
        let w_nr = triple.w(n - r).ok()?;
        let u_r1 = triple.u(r - 1).ok()?;
        let e = triple.e();
        if w_n.is_zero() || w_nr.is_zero() || u_r1.is_zero() || e.is_zero() {
            return None;
        }
        let x = w_n.checked_div(&w_nr).ok()?;
        let q_pow = params.q().int_pow(n - r).ok()?;
        let y = (&(&q_pow * &e) * &u_r1).checked_div(&w_nr).ok()?;
        let tw = Arc::clone(&triple);
        let x_seq = move |i: i64| Ok(tw.w(i)?);
        let y_seq = move |i: i64| Ok(triple.u(i)?);
        LemmaConfig::new(x, y, r, n + 1, x_seq, y_seq).ok()
    }
}
