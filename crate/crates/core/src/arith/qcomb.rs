//! Symmetric q-integers, q-factorials and Gaussian binomial coefficients.
//!
//! The symmetric convention is used throughout: `[m] = (q^m - q^-m) /
//! (q - q^-1)`, so `[2] = q + q^-1` and `[-m] = -[m]`. The base parameter `d`
//! replaces `q` by `q^d`, matching the per-node deformation parameters
//! `q_i = q^{d_i}`.

use num::BigRational;

use super::laurent::LaurentPoly;
use crate::{Error, Result};

/// The symmetric q-integer `[m]` in the variable `q^d`.
///
/// Panics when `d < 1`; accepts any integer `m` with `[-m] = -[m]`.
pub fn q_integer(m: i64, d: u32) -> LaurentPoly {
    assert!(d >= 1, "q_integer: base exponent must be positive");
    if m == 0 {
        return LaurentPoly::zero();
    }
    if m < 0 {
        return -q_integer(-m, d);
    }
    // [m] = q^{m-1} + q^{m-3} + ... + q^{-(m-1)}, then q -> q^d.
    let d = i64::from(d);
    LaurentPoly::from_terms(
        (0..m).map(|j| ((m - 1 - 2 * j) * d, BigRational::from_integer(1.into()))),
    )
}

/// The q-factorial `[m]! = [m][m-1]...[1]` in the variable `q^d`.
///
/// Panics when `m < 0` or `d < 1`.
pub fn q_factorial(m: i64, d: u32) -> LaurentPoly {
    assert!(m >= 0, "q_factorial: negative argument");
    let mut acc = LaurentPoly::one();
    for j in 1..=m {
        acc = &acc * &q_integer(j, d);
    }
    acc
}

/// The Gaussian binomial `[m choose r]` in the variable `q^d`.
///
/// Requires `m >= r >= 0` and `d >= 1`; anything else is rejected with
/// [`Error::BadArgument`]. The result is always a Laurent polynomial, and
/// substituting `q = 1` recovers the ordinary binomial coefficient.
pub fn q_binomial(m: i64, r: i64, d: u32) -> Result<LaurentPoly> {
    if d < 1 {
        return Err(Error::BadArgument(format!("q_binomial: base exponent {} < 1", d)));
    }
    if r < 0 || m < r {
        return Err(Error::BadArgument(format!(
            "q_binomial: need m >= r >= 0, got m = {}, r = {}",
            m, r
        )));
    }
    // Multiply and divide one factor at a time; after step j the partial
    // product equals [m - r + j choose j], so each division is exact.
    let mut acc = LaurentPoly::one();
    for j in 1..=r {
        acc = &acc * &q_integer(m - r + j, d);
        acc = acc
            .exact_div(&q_integer(j, d))
            .expect("q_binomial: partial product must divide exactly");
    }
    Ok(acc)
}
