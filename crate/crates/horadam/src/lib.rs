//! Exact arithmetic for the generalized second-order recurrence
//! w(a,b;p,q) — w0 = a, w1 = b, w[n] = p·w[n-1] - q·w[n-2] — together with a
//! catalog of weighted summation identities over it, a grid-verification
//! harness, and a closed-form-versus-direct-sum benchmark.
//!
//! Everything is computed over the Gaussian rationals, so every identity
//! check is an exact equality. The classic Fibonacci, Lucas, Pell and
//! Jacobsthal sequences are built-in specializations.

pub mod identities;
pub mod numeric;
pub mod sequence;
pub mod verify;

pub use numeric::{format_scalar, parse_scalar, GaussianRational, NumericError, Rational};
pub use sequence::{
    compute_e, negative_index_u, negative_index_v, negative_index_w, preset, term_fast,
    FastTerms, HoradamParams, HoradamSequence, Preset, SequenceError, SequenceTriple, Terms,
};
