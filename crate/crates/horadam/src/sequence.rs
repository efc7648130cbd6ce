//! Second-order linear recurrence engine.
//!
//! A [`HoradamSequence`] evaluates w(a,b;p,q), defined by w0 = a, w1 = b and
//! w[n] = p·w[n-1] - q·w[n-2], at any signed index. Terms are memoized in a
//! contiguous two-sided store anchored at indices 0 and 1, so every cached
//! value is recurrence-consistent by construction; the backward direction
//! uses w[-n] = (p·w[-n+1] - w[-n+2])/q, which is exact because q != 0.
//!
//! [`term_fast`] evaluates the same terms in O(log |n|) scalar products via
//! powers of the companion matrix [[p, -q], [1, 0]] (exactly inverted for
//! negative indices). [`SequenceTriple`] bundles w with its companions
//! u = w(1,p;p,q) and v = w(2,p;p,q) and the constant e = pab - qa² - b².

use crate::numeric::{parse_scalar, GaussianRational, NumericError};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;
use thiserror::Error;

/// Default bound on |index|; guards against runaway bignum growth.
pub const DEFAULT_INDEX_GUARD: i64 = 100_000;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("index {index} exceeds the configured guard {guard}")]
    IndexGuardExceeded { index: i64, guard: i64 },
    #[error("unknown preset '{0}'")]
    UnknownPreset(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

/// The tuple (a, b, p, q) defining w(a,b;p,q). Rejects p = 0 or q = 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HoradamParams {
    a: GaussianRational,
    b: GaussianRational,
    p: GaussianRational,
    q: GaussianRational,
}

impl HoradamParams {
    pub fn new(
        a: GaussianRational,
        b: GaussianRational,
        p: GaussianRational,
        q: GaussianRational,
    ) -> Result<Self, SequenceError> {
        if p.is_zero() {
            return Err(SequenceError::InvalidParams("p must be nonzero".into()));
        }
        if q.is_zero() {
            return Err(SequenceError::InvalidParams("q must be nonzero".into()));
        }
        Ok(HoradamParams { a, b, p, q })
    }

    pub fn from_ints(a: i64, b: i64, p: i64, q: i64) -> Result<Self, SequenceError> {
        Self::new(
            GaussianRational::from_int(a),
            GaussianRational::from_int(b),
            GaussianRational::from_int(p),
            GaussianRational::from_int(q),
        )
    }

    pub fn a(&self) -> &GaussianRational {
        &self.a
    }
    pub fn b(&self) -> &GaussianRational {
        &self.b
    }
    pub fn p(&self) -> &GaussianRational {
        &self.p
    }
    pub fn q(&self) -> &GaussianRational {
        &self.q
    }

    /// Seeds (1, p): the fundamental companion of this (p, q) pair.
    pub fn fundamental(&self) -> HoradamParams {
        HoradamParams {
            a: GaussianRational::one(),
            b: self.p.clone(),
            p: self.p.clone(),
            q: self.q.clone(),
        }
    }

    /// Seeds (2, p): the primordial companion of this (p, q) pair.
    pub fn primordial(&self) -> HoradamParams {
        HoradamParams {
            a: GaussianRational::from_int(2),
            b: self.p.clone(),
            p: self.p.clone(),
            q: self.q.clone(),
        }
    }
}

impl fmt::Display for HoradamParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "custom({},{},{},{})", self.a, self.b, self.p, self.q)
    }
}

impl fmt::Debug for HoradamParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The constant e = p·a·b - q·a² - b².
pub fn compute_e(params: &HoradamParams) -> GaussianRational {
    let (a, b, p, q) = (&params.a, &params.b, &params.p, &params.q);
    &(&(p * a) * b) - &(&(q * &(a * a)) + &(b * b))
}

/// Contiguous term cache: `fwd[n]` holds w[n] for n >= 0, `back[n]` holds
/// w[-1-n]. Extension is stepwise, one index at a time.
struct TermStore {
    fwd: Vec<GaussianRational>,
    back: Vec<GaussianRational>,
}

/// A lazily extended, two-sided view of one w(a,b;p,q) sequence.
///
/// The term store sits behind a mutex, so a shared instance is safe to use
/// from several threads; independent instances never contend.
pub struct HoradamSequence {
    params: HoradamParams,
    guard: i64,
    store: Mutex<TermStore>,
}

impl HoradamSequence {
    pub fn new(params: HoradamParams) -> Self {
        Self::with_guard(params, DEFAULT_INDEX_GUARD)
    }

    pub fn with_guard(params: HoradamParams, guard: i64) -> Self {
        let store = TermStore {
            fwd: vec![params.a.clone(), params.b.clone()],
            back: Vec::new(),
        };
        HoradamSequence {
            params,
            guard,
            store: Mutex::new(store),
        }
    }

    pub fn params(&self) -> &HoradamParams {
        &self.params
    }

    /// Exact w[n], extending the store from the nearest cached pair.
    pub fn term(&self, n: i64) -> Result<GaussianRational, SequenceError> {
        if n.unsigned_abs() > self.guard.unsigned_abs() {
            return Err(SequenceError::IndexGuardExceeded {
                index: n,
                guard: self.guard,
            });
        }
        let p = &self.params.p;
        let q = &self.params.q;
        let mut store = self.store.lock().expect("term store poisoned");
        if n >= 0 {
            let n = n as usize;
            while store.fwd.len() <= n {
                let len = store.fwd.len();
                let next = &(p * &store.fwd[len - 1]) - &(q * &store.fwd[len - 2]);
                store.fwd.push(next);
            }
            Ok(store.fwd[n].clone())
        } else {
            let slot = (-n - 1) as usize;
            while store.back.len() <= slot {
                // w[-n] = (p·w[-n+1] - w[-n+2]) / q
                let len = store.back.len();
                let (w1, w2) = if len == 0 {
                    (store.fwd[0].clone(), store.fwd[1].clone())
                } else if len == 1 {
                    (store.back[0].clone(), store.fwd[0].clone())
                } else {
                    (store.back[len - 1].clone(), store.back[len - 2].clone())
                };
                let next = (&(p * &w1) - &w2).checked_div(q)?;
                store.back.push(next);
            }
            Ok(store.back[slot].clone())
        }
    }
}

/// 2x2 matrix over the scalars, used for the companion-power evaluation.
#[derive(Clone)]
struct Mat2 {
    a: GaussianRational,
    b: GaussianRational,
    c: GaussianRational,
    d: GaussianRational,
}

impl Mat2 {
    fn identity() -> Self {
        Mat2 {
            a: GaussianRational::one(),
            b: GaussianRational::zero(),
            c: GaussianRational::zero(),
            d: GaussianRational::one(),
        }
    }

    fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    fn pow(mut self, mut e: u64) -> Mat2 {
        let mut acc = Mat2::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&self);
            }
            e >>= 1;
            if e > 0 {
                self = self.mul(&self);
            }
        }
        acc
    }
}

/// Exact w[n] in O(log |n|) scalar multiplications, stateless.
///
/// Applies [[p, -q], [1, 0]]^n to (w1, w0); for n < 0 the exact inverse
/// (determinant q != 0) is raised to |n| instead.
pub fn term_fast(params: &HoradamParams, n: i64) -> Result<GaussianRational, SequenceError> {
    term_fast_guarded(params, n, DEFAULT_INDEX_GUARD)
}

/// [`term_fast`] with an explicit index guard.
pub fn term_fast_guarded(
    params: &HoradamParams,
    n: i64,
    guard: i64,
) -> Result<GaussianRational, SequenceError> {
    if n.unsigned_abs() > guard.unsigned_abs() {
        return Err(SequenceError::IndexGuardExceeded { index: n, guard });
    }
    let p = &params.p;
    let q = &params.q;
    let m = if n >= 0 {
        Mat2 {
            a: p.clone(),
            b: -q,
            c: GaussianRational::one(),
            d: GaussianRational::zero(),
        }
    } else {
        // inverse of the companion matrix: (1/q)·[[0, q], [-1, p]]
        let qinv = q.checked_recip()?;
        Mat2 {
            a: GaussianRational::zero(),
            b: GaussianRational::one(),
            c: -&qinv,
            d: &p.clone() * &qinv,
        }
    };
    let power = m.pow(n.unsigned_abs());
    // (w[n+1], w[n])ᵀ = M^n (b, a)ᵀ; the bottom row yields w[n].
    Ok(&(&power.c * &params.b) + &(&power.d * &params.a))
}

/// w plus its companions u = w(1,p;p,q), v = w(2,p;p,q) and e = pab - qa² - b².
pub struct SequenceTriple {
    pub w: HoradamSequence,
    pub u: HoradamSequence,
    pub v: HoradamSequence,
    pub e: GaussianRational,
}

impl SequenceTriple {
    pub fn new(params: HoradamParams) -> Self {
        Self::with_guard(params, DEFAULT_INDEX_GUARD)
    }

    pub fn with_guard(params: HoradamParams, guard: i64) -> Self {
        let e = compute_e(&params);
        let u = HoradamSequence::with_guard(params.fundamental(), guard);
        let v = HoradamSequence::with_guard(params.primordial(), guard);
        let w = HoradamSequence::with_guard(params, guard);
        SequenceTriple { w, u, v, e }
    }

    pub fn params(&self) -> &HoradamParams {
        self.w.params()
    }
}

/// Named starting points: the classic sequences plus parametrized families.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Preset {
    /// w(0,1;1,-1)
    Fibonacci,
    /// w(2,1;1,-1)
    Lucas,
    /// w(0,1;2,-1)
    Pell,
    /// w(0,1;1,-2)
    Jacobsthal,
    /// w(a,b;1,-1)
    G(GaussianRational, GaussianRational),
    /// w(1,p;p,q)
    U(GaussianRational, GaussianRational),
    /// w(2,p;p,q)
    V(GaussianRational, GaussianRational),
    Custom(HoradamParams),
}

impl Preset {
    pub fn params(&self) -> Result<HoradamParams, SequenceError> {
        let one = GaussianRational::one;
        let int = GaussianRational::from_int;
        match self {
            Preset::Fibonacci => HoradamParams::new(int(0), one(), one(), int(-1)),
            Preset::Lucas => HoradamParams::new(int(2), one(), one(), int(-1)),
            Preset::Pell => HoradamParams::new(int(0), one(), int(2), int(-1)),
            Preset::Jacobsthal => HoradamParams::new(int(0), one(), one(), int(-2)),
            Preset::G(a, b) => HoradamParams::new(a.clone(), b.clone(), one(), int(-1)),
            Preset::U(p, q) => HoradamParams::new(one(), p.clone(), p.clone(), q.clone()),
            Preset::V(p, q) => HoradamParams::new(int(2), p.clone(), p.clone(), q.clone()),
            Preset::Custom(params) => Ok(params.clone()),
        }
    }

    /// Parse tokens like `fibonacci`, `g(3,7)`, `u(1,-1)`, `custom(1,2,3,-1)`.
    pub fn parse_token(token: &str) -> Result<Preset, SequenceError> {
        let token = token.trim();
        let (name, args) = match token.find('(') {
            None => (token, Vec::new()),
            Some(open) => {
                let inner = token[open + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| SequenceError::UnknownPreset(token.into()))?;
                let args = inner
                    .split(',')
                    .map(|s| parse_scalar(s.trim()))
                    .collect::<Result<Vec<_>, _>>()?;
                (&token[..open], args)
            }
        };
        let argc = args.len();
        let wrong =
            |expected: usize| -> Result<Preset, SequenceError> {
                Err(SequenceError::InvalidParams(format!(
                    "preset '{}' takes {} scalar argument(s), got {}",
                    name, expected, argc
                )))
            };
        match name {
            "fibonacci" if argc == 0 => Ok(Preset::Fibonacci),
            "lucas" if argc == 0 => Ok(Preset::Lucas),
            "pell" if argc == 0 => Ok(Preset::Pell),
            "jacobsthal" if argc == 0 => Ok(Preset::Jacobsthal),
            "fibonacci" | "lucas" | "pell" | "jacobsthal" => wrong(0),
            "g" if argc == 2 => Ok(Preset::G(args[0].clone(), args[1].clone())),
            "u" if argc == 2 => Ok(Preset::U(args[0].clone(), args[1].clone())),
            "v" if argc == 2 => Ok(Preset::V(args[0].clone(), args[1].clone())),
            "g" | "u" | "v" => wrong(2),
            "custom" if argc == 4 => Ok(Preset::Custom(HoradamParams::new(
                args[0].clone(),
                args[1].clone(),
                args[2].clone(),
                args[3].clone(),
            )?)),
            "custom" => wrong(4),
            _ => Err(SequenceError::UnknownPreset(token.into())),
        }
    }
}

impl FromStr for Preset {
    type Err = SequenceError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Preset::parse_token(s)
    }
}

/// Build the sequence triple for a preset.
pub fn preset(p: &Preset) -> Result<SequenceTriple, SequenceError> {
    Ok(SequenceTriple::new(p.params()?))
}

/// Closed form for u at negative indices: u[-n] = -q^(-n+1)·u[n-2].
pub fn negative_index_u(triple: &SequenceTriple, n: i64) -> Result<GaussianRational, SequenceError> {
    let q_pow = triple.params().q().int_pow(1 - n)?;
    Ok(-&(&q_pow * &triple.u.term(n - 2)?))
}

/// Closed form for v at negative indices: v[-n] = q^(-n)·v[n].
///
/// The reciprocal power is the form the backward recurrence validates; the
/// variant with q^(+n) fails whenever q^(2n) != 1 (e.g. q = -2, n = 1).
pub fn negative_index_v(triple: &SequenceTriple, n: i64) -> Result<GaussianRational, SequenceError> {
    let q_pow = triple.params().q().int_pow(-n)?;
    Ok(&q_pow * &triple.v.term(n)?)
}

/// Closed form for w at negative indices:
/// w[-n] = q^(-n) · (a·u[n] - b·u[n-1]) / (a·u[n] + (b - pa)·u[n-1]) · w[n].
///
/// The denominator equals w[n]; when it vanishes the form is undefined and
/// `PreconditionUnmet` is reported. The q^(-n) factor is required for the
/// value to match the backward recurrence (drop it and q = -1 sequences
/// fail at every odd n).
pub fn negative_index_w(
    triple: &SequenceTriple,
    n: i64,
) -> Result<Option<GaussianRational>, SequenceError> {
    let params = triple.params();
    let (a, b, p) = (params.a(), params.b(), params.p());
    let u_n = triple.u.term(n)?;
    let u_n1 = triple.u.term(n - 1)?;
    let denom = &(a * &u_n) + &(&(b - &(p * a)) * &u_n1);
    if denom.is_zero() {
        return Ok(None);
    }
    let numer = &(a * &u_n) - &(b * &u_n1);
    let ratio = numer.checked_div(&denom)?;
    let q_pow = params.q().int_pow(-n)?;
    Ok(Some(&(&q_pow * &ratio) * &triple.w.term(n)?))
}

/// Read-only access to the three sequences and parameters of one triple.
///
/// Identity evaluators are written against this trait so the same formulas
/// run off the memoized store (grid verification) or the log-time companion
/// power ([`FastTerms`], used to time closed forms in benchmarks).
pub trait Terms: Sync {
    fn w(&self, n: i64) -> Result<GaussianRational, SequenceError>;
    fn u(&self, n: i64) -> Result<GaussianRational, SequenceError>;
    fn v(&self, n: i64) -> Result<GaussianRational, SequenceError>;
    fn e(&self) -> GaussianRational;
    fn params(&self) -> &HoradamParams;
}

impl Terms for SequenceTriple {
    fn w(&self, n: i64) -> Result<GaussianRational, SequenceError> {
        self.w.term(n)
    }
    fn u(&self, n: i64) -> Result<GaussianRational, SequenceError> {
        self.u.term(n)
    }
    fn v(&self, n: i64) -> Result<GaussianRational, SequenceError> {
        self.v.term(n)
    }
    fn e(&self) -> GaussianRational {
        self.e.clone()
    }
    fn params(&self) -> &HoradamParams {
        self.w.params()
    }
}

/// Stateless term source backed by [`term_fast`].
pub struct FastTerms {
    params: HoradamParams,
    fundamental: HoradamParams,
    primordial: HoradamParams,
    e: GaussianRational,
    guard: i64,
}

impl FastTerms {
    pub fn new(params: HoradamParams) -> Self {
        Self::with_guard(params, DEFAULT_INDEX_GUARD)
    }

    pub fn with_guard(params: HoradamParams, guard: i64) -> Self {
        FastTerms {
            fundamental: params.fundamental(),
            primordial: params.primordial(),
            e: compute_e(&params),
            params,
            guard,
        }
    }
}

impl Terms for FastTerms {
    fn w(&self, n: i64) -> Result<GaussianRational, SequenceError> {
        term_fast_guarded(&self.params, n, self.guard)
    }
    fn u(&self, n: i64) -> Result<GaussianRational, SequenceError> {
        term_fast_guarded(&self.fundamental, n, self.guard)
    }
    fn v(&self, n: i64) -> Result<GaussianRational, SequenceError> {
        term_fast_guarded(&self.primordial, n, self.guard)
    }
    fn e(&self) -> GaussianRational {
        self.e.clone()
    }
    fn params(&self) -> &HoradamParams {
        &self.params
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn rejects_zero_p_or_q() {
        assert!(HoradamParams::from_ints(0, 1, 0, -1).is_err());
        assert!(HoradamParams::from_ints(0, 1, 1, 0).is_err());
    }

    #[test]
    fn one_recurrence_step() {
        // w2 = p·b - q·a
        let params = HoradamParams::from_ints(3, 5, 7, 2).unwrap();
        let seq = HoradamSequence::new(params);
        assert_eq!(seq.term(2).unwrap(), int(7 * 5 - 2 * 3));
    }

    #[test]
    fn pell_terms() {
        let triple = preset(&Preset::Pell).unwrap();
        let expect = [0, 1, 2, 5, 12, 29];
        for (n, v) in expect.iter().enumerate() {
            assert_eq!(triple.w.term(n as i64).unwrap(), int(*v));
        }
    }

    #[test]
    fn fibonacci_and_lucas_seeds() {
        let fib = preset(&Preset::Fibonacci).unwrap();
        assert_eq!(fib.w.term(0).unwrap(), int(0));
        assert_eq!(fib.w.term(1).unwrap(), int(1));
        let lucas = preset(&Preset::Lucas).unwrap();
        assert_eq!(lucas.w.term(0).unwrap(), int(2));
        assert_eq!(lucas.w.term(1).unwrap(), int(1));
    }

    #[test]
    fn fundamental_term_backward_step() {
        // u[-1] = (p·u0 - u1)/q = 0 for every (p, q)
        let triple = preset(&Preset::Custom(
            HoradamParams::from_ints(4, 9, 3, 5).unwrap(),
        ))
        .unwrap();
        assert_eq!(triple.u.term(-1).unwrap(), int(0));
    }

    #[test]
    fn term_is_deterministic_and_out_of_order() {
        let triple = preset(&Preset::Fibonacci).unwrap();
        let first = triple.w.term(-9).unwrap();
        let _ = triple.w.term(20).unwrap();
        assert_eq!(triple.w.term(-9).unwrap(), first);
        // F[-9] = F[9] = 34
        assert_eq!(first, int(34));
    }

    #[test]
    fn recurrence_invariant_over_cached_range() {
        let params = HoradamParams::new(
            GaussianRational::from_parts(1, 1, 1, 1),
            int(2),
            GaussianRational::from_parts(1, 1, 1, 1),
            -GaussianRational::i(),
        )
        .unwrap();
        let seq = HoradamSequence::new(params.clone());
        let _ = seq.term(12).unwrap();
        let _ = seq.term(-12).unwrap();
        for n in -10..=12 {
            let lhs = seq.term(n).unwrap();
            let rhs = &(params.p() * &seq.term(n - 1).unwrap())
                - &(params.q() * &seq.term(n - 2).unwrap());
            assert_eq!(lhs, rhs, "recurrence broke at n={}", n);
        }
    }

    #[test]
    fn index_guard() {
        let seq = HoradamSequence::with_guard(HoradamParams::from_ints(0, 1, 1, -1).unwrap(), 10);
        assert!(matches!(
            seq.term(11),
            Err(SequenceError::IndexGuardExceeded { .. })
        ));
        assert!(seq.term(-10).is_ok());
        assert!(matches!(
            term_fast_guarded(seq.params(), 11, 10),
            Err(SequenceError::IndexGuardExceeded { .. })
        ));
    }

    #[test]
    fn term_fast_examples() {
        let fib = Preset::Fibonacci.params().unwrap();
        assert_eq!(term_fast(&fib, 10).unwrap(), int(55));
        assert_eq!(term_fast(&fib, 0).unwrap(), int(0));
        let jac = Preset::Jacobsthal.params().unwrap();
        assert_eq!(term_fast(&jac, 5).unwrap(), int(11));
        let custom = HoradamParams::from_ints(3, 4, 2, 7).unwrap();
        assert_eq!(term_fast(&custom, 0).unwrap(), int(3));
    }

    #[test]
    fn compute_e_examples() {
        assert_eq!(compute_e(&Preset::Fibonacci.params().unwrap()), int(-1));
        assert_eq!(compute_e(&Preset::Lucas.params().unwrap()), int(5));
        assert_eq!(
            compute_e(&HoradamParams::from_ints(0, 0, 1, 1).unwrap()),
            int(0)
        );
    }

    #[test]
    fn negative_index_u_examples() {
        let fib = preset(&Preset::Fibonacci).unwrap();
        assert_eq!(negative_index_u(&fib, 1).unwrap(), int(0));
        assert_eq!(negative_index_u(&fib, 3).unwrap(), int(-1));
        // n = 0 must reproduce u0 = 1
        assert_eq!(negative_index_u(&fib, 0).unwrap(), int(1));
    }

    #[test]
    fn negative_index_w_examples() {
        let lucas = preset(&Preset::Lucas).unwrap();
        assert_eq!(negative_index_w(&lucas, 2).unwrap(), Some(int(3)));
        let pell = preset(&Preset::Pell).unwrap();
        assert_eq!(negative_index_w(&pell, 3).unwrap(), Some(int(5)));
        // a = 0 makes the denominator vanish at n = 0
        assert_eq!(negative_index_w(&pell, 0).unwrap(), None);
        let lucas_at_0 = negative_index_w(&lucas, 0).unwrap();
        assert_eq!(lucas_at_0, Some(int(2)));
    }

    #[test]
    fn preset_tokens() {
        assert_eq!(Preset::parse_token("pell").unwrap(), Preset::Pell);
        assert!(matches!(
            Preset::parse_token("g(3,7)").unwrap(),
            Preset::G(_, _)
        ));
        let custom = Preset::parse_token("custom(1+i,2,1+i,-i)").unwrap();
        let params = custom.params().unwrap();
        assert_eq!(params.q(), &-GaussianRational::i());
        assert!(Preset::parse_token("tribonacci").is_err());
        assert!(Preset::parse_token("g(3)").is_err());
        assert!(Preset::parse_token("custom(1,2,0,1)").is_err());
    }
}
