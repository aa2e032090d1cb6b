//! The structure constants `b_{ij}^r` pairing imaginary and real loop
//! generators, and their integer limits at `q = 1`.

use num::rational::BigRational;
use num::BigInt;

use super::data::CartanData;
use crate::arith::{q_integer, LaurentPoly};
use crate::{Error, Result};

/// The coefficient `b_{ij}^r` for finite nodes `i, j` and `r != 0`.
///
/// Zero when `max(d~_i, d~_j)` does not divide `r`; on the short diagonal
/// of `A_{2n}^(2)` it is `[2r] (q^{2r} + (-1)^{r-1} + q^{-2r}) / r`; in all
/// other cases `[r' a_ij]_{q_i} / r'` with `r' = r / max(d~_i, d~_j)`.
/// Even as a function of `r`.
pub fn b_coeff(cd: &CartanData, i: usize, j: usize, r: i64) -> Result<LaurentPoly> {
    check_nodes(cd, i, j);
    if r == 0 {
        return Err(Error::BadArgument("b coefficient needs r != 0".into()));
    }
    let dij = cd.d_tilde(i).max(cd.d_tilde(j));
    if r % dij != 0 {
        return Ok(LaurentPoly::zero());
    }
    if cd.affine_type().is_a2n_2() && cd.d(i) == 1 && cd.d(j) == 1 {
        let sign = if (r - 1).rem_euclid(2) == 0 { 1 } else { -1 };
        let middle = LaurentPoly::monomial(2 * r, BigRational::from(BigInt::from(1)))
            + LaurentPoly::int(sign)
            + LaurentPoly::monomial(-2 * r, BigRational::from(BigInt::from(1)));
        let inv_r = BigRational::new(BigInt::from(1), BigInt::from(r));
        return Ok((q_integer(2 * r, 1) * middle).scale(&inv_r));
    }
    let rp = r / dij;
    let inv_rp = BigRational::new(BigInt::from(1), BigInt::from(rp));
    Ok(q_integer(rp * cd.a(i, j), cd.d(i) as u32).scale(&inv_rp))
}

/// The limit of `b_{ij}^r` at `q = 1`, defined for every `r` including 0:
/// zero off the loop-period lattice, `2 (2 - (-1)^r)` on the short diagonal
/// of `A_{2n}^(2)`, and `a_ij` otherwise.
pub fn big_b_coeff(cd: &CartanData, i: usize, j: usize, r: i64) -> i64 {
    check_nodes(cd, i, j);
    let dij = cd.d_tilde(i).max(cd.d_tilde(j));
    if r % dij != 0 {
        return 0;
    }
    if cd.affine_type().is_a2n_2() && cd.d(i) == 1 && cd.d(j) == 1 {
        let sign = if r.rem_euclid(2) == 0 { 1 } else { -1 };
        return 2 * (2 - sign);
    }
    cd.a(i, j)
}

fn check_nodes(cd: &CartanData, i: usize, j: usize) {
    assert!(
        (1..=cd.finite_rank()).contains(&i) && (1..=cd.finite_rank()).contains(&j),
        "b coefficient: nodes ({i}, {j}) must be finite nodes"
    );
}
