//! Rational functions in `q` as canonical fractions of Laurent polynomials.
//!
//! Every value is kept in a normal form chosen so that structural equality is
//! mathematical equality: the denominator is an ordinary polynomial with
//! nonzero constant term and leading coefficient `1`, and shares no
//! nonconstant factor with the numerator. All powers of `q` therefore live in
//! the numerator, which may be a genuine Laurent polynomial.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigRational, Zero};

use super::laurent::LaurentPoly;
use crate::{Error, Result};

/// An element of the field `Q(q)`, stored as a reduced fraction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    /// Builds `num / den` and reduces to canonical form.
    ///
    /// Panics when `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "RationalFunction::new: zero denominator");
        if num.is_zero() {
            return RationalFunction { num, den: LaurentPoly::one() };
        }
        // Push the denominator's unit part (a power of q and its leading
        // coefficient) into the numerator, then cancel the polynomial gcd.
        let den_low = den.low_degree().unwrap();
        let den = den.mul_q_pow(-den_low);
        let num = num.mul_q_pow(-den_low);
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("RationalFunction::new: gcd does not divide numerator"),
                den.exact_div(&g).expect("RationalFunction::new: gcd does not divide denominator"),
            )
        };
        let lead = den.leading_coeff().clone();
        let den = den.scale(&lead.recip());
        let num = num.scale(&lead.recip());
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        RationalFunction { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RationalFunction { num: p, den: LaurentPoly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is `1`, i.e. the value is a Laurent
    /// polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "RationalFunction::recip: division by zero");
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// Substitutes `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        RationalFunction::new(self.num.invert_q(), self.den.invert_q())
    }

    /// Evaluates at a nonzero rational point; `None` when the denominator
    /// vanishes there.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Substitutes `q -> 1`.
    ///
    /// In canonical form the numerator and denominator share no factor, so a
    /// denominator root at `1` is a genuine pole and yields
    /// [`Error::PoleAtOne`]; this is how the classical specialization detects
    /// coefficients that do not lie in the integral form.
    pub fn specialize_at_one(&self) -> Result<BigRational> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne(self.to_string()));
        }
        Ok(self.num.eval_one() / d)
    }
}

// ---- Field operations ----

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "RationalFunction::div: division by zero");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        RationalFunction::from_laurent(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn q() -> LaurentPoly {
        LaurentPoly::q()
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one()
    }

    // ---- Canonical form ----

    #[test]
    fn common_factor_is_cancelled() {
        // (q^2 - 1) / (q - 1) reduces to q + 1.
        let f = RationalFunction::new(&(&q() * &q()) - &one(), &q() - &one());
        assert!(f.is_laurent());
        assert_eq!(f.numerator(), &(&q() + &one()));
    }

    #[test]
    fn denominator_q_powers_move_to_numerator() {
        // 1 / q^2 is stored as the Laurent monomial q^-2 over 1.
        let f = RationalFunction::new(one(), q().mul_q_pow(1));
        assert!(f.is_laurent());
        assert_eq!(f.numerator(), &LaurentPoly::q_pow(-2));
    }

    #[test]
    fn denominator_is_monic_with_constant_term() {
        // 1 / (2q^3 - 2q) normalizes the leading coefficient into the
        // numerator and strips the unit factor q.
        let den = LaurentPoly::from_terms(vec![(3, rat(2, 1)), (1, rat(-2, 1))]);
        let f = RationalFunction::new(one(), den);
        assert_eq!(f.denominator().leading_coeff(), &rat(1, 1));
        assert_eq!(f.denominator().low_degree(), Some(0));
        // Check the value is preserved at q = 3: 1 / (54 - 6) = 1/48.
        assert_eq!(f.eval(&rat(3, 1)), Some(rat(1, 48)));
    }

    #[test]
    fn equality_is_structural_after_normalization() {
        let a = RationalFunction::new(q(), &q() + &one());
        let b = RationalFunction::new(&q() * &q(), &(&q() * &q()) + &(&q() * &one()));
        assert_eq!(a, b);
    }

    // ---- Field laws on sample values ----

    #[test]
    fn add_and_mul_agree_with_evaluation() {
        let a = RationalFunction::new(one(), &q() - &one());
        let b = RationalFunction::new(q(), &q() + &one());
        let s = &a + &b;
        let p = &a * &b;
        let x = rat(5, 2);
        let ae = a.eval(&x).unwrap();
        let be = b.eval(&x).unwrap();
        assert_eq!(s.eval(&x).unwrap(), &ae + &be);
        assert_eq!(p.eval(&x).unwrap(), &ae * &be);
    }

    #[test]
    fn recip_roundtrip() {
        let a = RationalFunction::new(&q() + &one(), &(&q() * &q()) - &q());
        assert!((&a * &a.recip()).is_one());
    }

    // ---- Specialization ----

    #[test]
    fn specialize_cancels_removable_singularity() {
        let f = RationalFunction::new(&(&q() * &q()) - &one(), &q() - &one());
        assert_eq!(f.specialize_at_one().unwrap(), rat(2, 1));
    }

    #[test]
    fn specialize_rejects_true_pole() {
        let f = RationalFunction::new(one(), &q() - &one());
        assert!(matches!(f.specialize_at_one(), Err(Error::PoleAtOne(_))));
    }
}
