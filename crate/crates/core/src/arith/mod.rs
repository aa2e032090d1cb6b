//! Exact scalar arithmetic.
//!
//! Provides:
//!
//! * [`LaurentPoly`]: Laurent polynomials in `q` over the rationals.
//! * [`RationalFunction`]: the field `Q(q)` in a canonical reduced form.
//! * [`Cyclotomic`]: the fields `Q(zeta_k)` for twist orders `k <= 3`.
//! * [`q_integer`], [`q_factorial`], [`q_binomial`]: symmetric quantum
//!   combinatorics.
//! * [`ExactMatrix`] with [`ExactMatrix::exact_rank`]: sparse matrices and
//!   fraction-free rank over any of the scalar kinds.
//! * [`EchelonBasis`]: incremental span/membership computations over a field,
//!   with optional combination tracking.
//!
//! Everything here is immutable value arithmetic: operations return new
//! values, and no interior mutability or floating point appears anywhere.

mod cyclotomic;
mod laurent;
mod matrix;
mod qcomb;
mod ratfun;

pub use cyclotomic::Cyclotomic;
pub use laurent::LaurentPoly;
pub use matrix::{
    bareiss_rank, clear_ratfn_rows, clear_rational_rows, EchelonBasis, ExactMatrix, FieldOps,
    PivotRing, Scalar,
};
pub use qcomb::{q_binomial, q_factorial, q_integer};
pub use ratfun::RationalFunction;

use crate::Result;
use num::BigRational;

/// Substitutes `q = 1` into a rational function; fails on a genuine pole.
///
/// Free-function form of [`RationalFunction::specialize_at_one`], convenient
/// at call sites that work with borrowed coefficients.
pub fn specialize_at_one(f: &RationalFunction) -> Result<BigRational> {
    f.specialize_at_one()
}
