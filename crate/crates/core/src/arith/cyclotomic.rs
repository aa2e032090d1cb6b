//! Small cyclotomic fields `Q(zeta_k)` for `k` in `{1, 2, 3}`.
//!
//! These are exactly the scalar fields needed by twisted loop realizations,
//! where `k` is the order of the diagram automorphism. For `k <= 2` the field
//! degenerates to `Q` (`zeta_1 = 1`, `zeta_2 = -1`); for `k = 3` elements are
//! stored as `a + b zeta` with `zeta^2 = -1 - zeta`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};

/// An element of `Q(zeta_k)`, tagged with the order `k` of the root of unity.
///
/// Orders 1 and 2 carry plain rational values (`zeta_1 = 1`, `zeta_2 = -1`
/// are folded into the rational part on construction), so arithmetic coerces
/// mixed orders to the larger one; equality compares values, not tags.
#[derive(Clone)]
pub struct Cyclotomic {
    k: u8,
    a: BigRational,
    b: BigRational,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl Eq for Cyclotomic {}

impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
    }
}

impl Cyclotomic {
    /// The rational constant `c` viewed in `Q(zeta_k)`.
    ///
    /// Panics unless `k` is `1`, `2` or `3`.
    pub fn from_rational(k: u8, c: BigRational) -> Self {
        assert!(matches!(k, 1 | 2 | 3), "Cyclotomic: order must be 1, 2 or 3");
        Cyclotomic { k, a: c, b: BigRational::zero() }
    }

    pub fn from_int(k: u8, c: i64) -> Self {
        Cyclotomic::from_rational(k, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn zero(k: u8) -> Self {
        Cyclotomic::from_int(k, 0)
    }

    pub fn one(k: u8) -> Self {
        Cyclotomic::from_int(k, 1)
    }

    /// The primitive `k`-th root of unity: `1`, `-1`, or `zeta_3`.
    pub fn zeta(k: u8) -> Self {
        match k {
            1 => Cyclotomic::from_int(1, 1),
            2 => Cyclotomic::from_int(2, -1),
            3 => Cyclotomic { k: 3, a: BigRational::zero(), b: BigRational::one() },
            _ => panic!("Cyclotomic: order must be 1, 2 or 3"),
        }
    }

    /// `zeta_k^m` for any integer `m`.
    pub fn zeta_pow(k: u8, m: i64) -> Self {
        let r = m.rem_euclid(i64::from(k));
        let mut acc = Cyclotomic::one(k);
        let z = Cyclotomic::zeta(k);
        for _ in 0..r {
            acc = &acc * &z;
        }
        acc
    }

    pub fn order(&self) -> u8 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The rational part; total value is `rational_part + zeta_part * zeta`.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn zeta_part(&self) -> &BigRational {
        &self.b
    }

    /// Returns the value as a rational number when it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.b.is_zero() {
            Some(self.a.clone())
        } else {
            None
        }
    }

    /// Galois conjugate: `zeta -> zeta^2` (identity for `k <= 2`).
    pub fn conjugate(&self) -> Self {
        // zeta^2 = -1 - zeta, so a + b*zeta maps to (a - b) - b*zeta.
        Cyclotomic { k: self.k, a: &self.a - &self.b, b: -&self.b }
    }

    /// Field norm `x * conj(x) = a^2 - a b + b^2`, a rational number.
    pub fn norm(&self) -> BigRational {
        &(&self.a * &self.a) - &(&self.a * &self.b) + &(&self.b * &self.b)
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "Cyclotomic::recip: division by zero");
        let n = self.norm();
        let c = self.conjugate();
        Cyclotomic { k: self.k, a: &c.a / &n, b: &c.b / &n }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Cyclotomic { k: self.k, a: &self.a * c, b: &self.b * c }
    }

    /// The common order for a binary operation: values of order 1 and 2 are
    /// rationals, so the larger tag always absorbs the smaller.
    fn join_order(&self, rhs: &Cyclotomic) -> u8 {
        self.k.max(rhs.k)
    }
}

// ---- Field operations ----

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic { k: self.join_order(rhs), a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic { k: self.join_order(rhs), a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        // (a + b z)(c + d z) with z^2 = -1 - z.
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let cross = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        Cyclotomic { k: self.join_order(rhs), a: &ac - &bd, b: &cross - &bd }
    }
}

impl Div for &Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self * &rhs.recip()
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { k: self.k, a: -&self.a, b: -&self.b }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*z", self.b);
        }
        write!(f, "{} + {}*z", self.a, self.b)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // ---- Root-of-unity structure ----

    #[test]
    fn zeta_orders() {
        for k in [1u8, 2, 3] {
            let mut acc = Cyclotomic::one(k);
            let z = Cyclotomic::zeta(k);
            for _ in 0..k {
                acc = &acc * &z;
            }
            assert_eq!(acc, Cyclotomic::one(k), "zeta_{} should have order dividing {}", k, k);
        }
        // zeta_3 is primitive: zeta_3 != 1 and zeta_3^2 != 1.
        let z = Cyclotomic::zeta(3);
        assert_ne!(z, Cyclotomic::one(3));
        assert_ne!(&z * &z, Cyclotomic::one(3));
    }

    #[test]
    fn zeta_pow_wraps_negative_exponents() {
        let z = Cyclotomic::zeta(3);
        assert_eq!(Cyclotomic::zeta_pow(3, -1), &z * &z);
        assert_eq!(Cyclotomic::zeta_pow(3, 4), z);
        assert_eq!(Cyclotomic::zeta_pow(2, -3), Cyclotomic::from_int(2, -1));
    }

    #[test]
    fn minimal_polynomial_of_zeta3() {
        // 1 + z + z^2 = 0.
        let z = Cyclotomic::zeta(3);
        let s = &(&Cyclotomic::one(3) + &z) + &(&z * &z);
        assert!(s.is_zero());
    }

    // ---- Field structure ----

    #[test]
    fn recip_via_conjugate() {
        let z = Cyclotomic::zeta(3);
        let x = &Cyclotomic::from_int(3, 2) + &z.scale(&BigRational::from_integer(BigInt::from(5)));
        assert_eq!(&x * &x.recip(), Cyclotomic::one(3));
    }

    #[test]
    fn norm_is_multiplicative() {
        let z = Cyclotomic::zeta(3);
        let x = &Cyclotomic::from_int(3, 1) - &z;
        let y = &Cyclotomic::from_int(3, 3) + &z.scale(&BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!((&x * &y).norm(), &x.norm() * &y.norm());
    }

    #[test]
    fn low_orders_coerce_into_higher() {
        // Orders 1 and 2 hold plain rationals, so they embed in Q(zeta_3).
        let s = &Cyclotomic::one(2) + &Cyclotomic::zeta(3);
        assert_eq!(s.order(), 3);
        assert_eq!(s.rational_part(), &BigRational::from_integer(BigInt::from(1)));
        assert_eq!(s.zeta_part(), &BigRational::from_integer(BigInt::from(1)));
        assert_eq!(Cyclotomic::from_int(1, 5), Cyclotomic::from_int(3, 5));
    }
}
