//! Laurent polynomials in one variable `q` with rational coefficients.
//!
//! The representation is a sorted map from exponent to coefficient with the
//! invariant that no zero coefficient is ever stored, so structural equality
//! is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

/// A Laurent polynomial `sum c_e q^e` with `c_e` rational and `e` any integer.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    /// The zero polynomial (empty coefficient map).
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        LaurentPoly::constant(BigRational::one())
    }

    /// The variable `q`.
    pub fn q() -> Self {
        LaurentPoly::monomial(1, BigRational::one())
    }

    /// The monomial `q^e`.
    pub fn q_pow(e: i64) -> Self {
        LaurentPoly::monomial(e, BigRational::one())
    }

    /// The constant polynomial with value `c`.
    pub fn constant(c: BigRational) -> Self {
        LaurentPoly::monomial(0, c)
    }

    /// A convenience constructor for small integer constants.
    pub fn int(c: i64) -> Self {
        LaurentPoly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// The monomial `c q^e`; returns zero when `c` is zero.
    pub fn monomial(e: i64, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        LaurentPoly { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents and dropping zero totals.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let mut coeffs: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = coeffs.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    /// Highest exponent with a nonzero coefficient, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent with a nonzero coefficient, `None` for zero.
    pub fn low_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// True when no negative exponent occurs, i.e. the value lies in `Q[q]`.
    pub fn is_polynomial(&self) -> bool {
        self.low_degree().map_or(true, |e| e >= 0)
    }

    /// The coefficient of `q^e` (zero when absent).
    pub fn coeff(&self, e: i64) -> BigRational {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Leading coefficient (at the highest exponent).
    ///
    /// Panics on the zero polynomial.
    pub fn leading_coeff(&self) -> &BigRational {
        self.coeffs
            .values()
            .next_back()
            .expect("LaurentPoly::leading_coeff: zero polynomial")
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Multiplies by the monomial `q^e`.
    pub fn mul_q_pow(&self, e: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Substitutes `q -> 1`, i.e. sums all coefficients.
    pub fn eval_one(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.values() {
            acc += c;
        }
        acc
    }

    /// Substitutes a nonzero rational value for `q`.
    ///
    /// Panics when `x` is zero and a negative exponent is present.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            acc += c * rational_pow(x, *e);
        }
        acc
    }

    /// Substitutes `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact division in the Laurent ring; `None` when `self` is not a
    /// multiple of `divisor`.
    ///
    /// Panics when `divisor` is zero.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!divisor.is_zero(), "LaurentPoly::exact_div: division by zero");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        // Powers of q are units, so shift both operands into Q[q] with
        // nonzero constant term and divide there, restoring the shift after.
        let a_low = self.low_degree().unwrap();
        let b_low = divisor.low_degree().unwrap();
        let a = self.mul_q_pow(-a_low);
        let b = divisor.mul_q_pow(-b_low);
        let (quot, rem) = a.poly_div_rem(&b);
        if rem.is_zero() {
            Some(quot.mul_q_pow(a_low - b_low))
        } else {
            None
        }
    }

    /// Polynomial long division of `self` by `divisor`, both required to lie
    /// in `Q[q]`; returns `(quotient, remainder)`.
    ///
    /// Panics when either operand has a negative exponent or `divisor` is
    /// zero.
    pub fn poly_div_rem(&self, divisor: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        assert!(
            self.is_polynomial() && divisor.is_polynomial(),
            "LaurentPoly::poly_div_rem: operands must be ordinary polynomials"
        );
        assert!(!divisor.is_zero(), "LaurentPoly::poly_div_rem: division by zero");
        let d_deg = divisor.degree().unwrap();
        let d_lead = divisor.leading_coeff().clone();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let factor = rem.leading_coeff() / &d_lead;
            let term = LaurentPoly::monomial(r_deg - d_deg, factor);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        (quot, rem)
    }

    /// Monic greatest common divisor in `Q[q]`, computed on the polynomial
    /// parts (powers of `q` are units and are ignored); the result has
    /// nonzero constant term. Returns zero only when both inputs are zero.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut a = self.shift_to_poly();
        let mut b = other.shift_to_poly();
        while !b.is_zero() {
            let (_, r) = a.poly_div_rem(&b);
            a = b;
            b = r.shift_to_poly();
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading_coeff().clone();
        a.scale(&lead.recip())
    }

    /// Divides out the highest power of `q` so the result is an ordinary
    /// polynomial with nonzero constant term (zero stays zero).
    pub fn shift_to_poly(&self) -> LaurentPoly {
        match self.low_degree() {
            None => LaurentPoly::zero(),
            Some(low) => self.mul_q_pow(-low),
        }
    }

    /// Multiplicity of `q = 1` as a root, i.e. the largest `k` with
    /// `(q - 1)^k` dividing `self`. Zero polynomial returns `None`.
    pub fn order_at_one(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let q_minus_one = &LaurentPoly::q() - &LaurentPoly::one();
        let mut k = 0;
        let mut cur = self.clone();
        while cur.eval_one().is_zero() {
            cur = cur
                .exact_div(&q_minus_one)
                .expect("LaurentPoly::order_at_one: root without linear factor");
            k += 1;
        }
        Some(k)
    }

    /// Divides by `(q - 1)^k`; panics when the division is not exact.
    pub fn shed_one_root(&self, k: u32) -> LaurentPoly {
        let q_minus_one = &LaurentPoly::q() - &LaurentPoly::one();
        let mut cur = self.clone();
        for _ in 0..k {
            cur = cur
                .exact_div(&q_minus_one)
                .expect("LaurentPoly::shed_one_root: division not exact");
        }
        cur
    }
}

/// `x^e` for a rational base and integer exponent; panics on `0^negative`.
fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    assert!(
        !(x.is_zero() && e < 0),
        "LaurentPoly::eval: zero base with negative exponent"
    );
    let mut base = if e > 0 { x.clone() } else { x.recip() };
    let mut n = e.unsigned_abs();
    let mut acc = BigRational::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    acc
}

// ---- Arithmetic operators ----

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(e);
            }
        }
        LaurentPoly { coeffs }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(BigRational::zero);
            *entry -= c;
            if entry.is_zero() {
                coeffs.remove(e);
            }
        }
        LaurentPoly { coeffs }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                let e = e1 + e2;
                let entry = coeffs.entry(e).or_insert_with(BigRational::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    coeffs.remove(&e);
                }
            }
        }
        LaurentPoly { coeffs }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders terms in decreasing exponent order, e.g. `q^2 - 2 + q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let show_coeff = *e == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            if *e != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if *e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    // ---- Construction and normalization ----

    #[test]
    fn zero_terms_are_not_stored() {
        let p = LaurentPoly::from_terms(vec![(2, rat(1, 1)), (2, rat(-1, 1)), (0, rat(3, 1))]);
        assert_eq!(p.term_count(), 1);
        assert_eq!(p.coeff(0), rat(3, 1));
        assert_eq!(p.coeff(2), rat(0, 1));
    }

    #[test]
    fn add_cancels_to_zero() {
        let p = LaurentPoly::q_pow(-3);
        let q = -&p;
        assert!((&p + &q).is_zero());
    }

    #[test]
    fn degree_bounds() {
        let p = LaurentPoly::from_terms(vec![(-2, rat(1, 1)), (5, rat(7, 2))]);
        assert_eq!(p.degree(), Some(5));
        assert_eq!(p.low_degree(), Some(-2));
        assert!(!p.is_polynomial());
        assert!(LaurentPoly::zero().is_polynomial());
    }

    // ---- Ring operations ----

    #[test]
    fn multiplication_convolves_exponents() {
        // (q + q^-1)^2 = q^2 + 2 + q^-2
        let p = &LaurentPoly::q() + &LaurentPoly::q_pow(-1);
        let sq = &p * &p;
        assert_eq!(sq.coeff(2), rat(1, 1));
        assert_eq!(sq.coeff(0), rat(2, 1));
        assert_eq!(sq.coeff(-2), rat(1, 1));
        assert_eq!(sq.term_count(), 3);
    }

    #[test]
    fn eval_matches_horner_expectation() {
        // p = q^2 - 3q^-1 at q = 2: 4 - 3/2 = 5/2
        let p = LaurentPoly::from_terms(vec![(2, rat(1, 1)), (-1, rat(-3, 1))]);
        assert_eq!(p.eval(&rat(2, 1)), rat(5, 2));
        assert_eq!(p.eval_one(), rat(-2, 1));
    }

    #[test]
    fn exact_div_by_unit_monomial() {
        let p = LaurentPoly::from_terms(vec![(3, rat(2, 1)), (1, rat(-2, 1))]);
        let d = LaurentPoly::monomial(-1, rat(2, 1));
        let q = p.exact_div(&d).unwrap();
        // 2q^3 - 2q divided by 2q^-1 is q^4 - q^2.
        assert_eq!(q.coeff(4), rat(1, 1));
        assert_eq!(q.coeff(2), rat(-1, 1));
    }

    #[test]
    fn exact_div_detects_non_multiple() {
        let p = &LaurentPoly::q() + &LaurentPoly::one();
        let d = &LaurentPoly::q() - &LaurentPoly::one();
        assert!(p.exact_div(&d).is_none());
    }

    #[test]
    fn gcd_ignores_q_powers() {
        // gcd(q^3 - q, q^2 - 2q + 1) = q - 1 even with Laurent shifts.
        let a = LaurentPoly::from_terms(vec![(2, rat(1, 1)), (0, rat(-1, 1))]).mul_q_pow(-4);
        let b = LaurentPoly::from_terms(vec![(2, rat(1, 1)), (1, rat(-2, 1)), (0, rat(1, 1))]);
        let g = a.gcd(&b);
        let expected = &LaurentPoly::q() - &LaurentPoly::one();
        assert_eq!(g, expected);
    }

    #[test]
    fn order_at_one_counts_multiplicity() {
        // (q - 1)^2 (q + 1) has a double root at q = 1.
        let m = &LaurentPoly::q() - &LaurentPoly::one();
        let p = &(&m * &m) * &(&LaurentPoly::q() + &LaurentPoly::one());
        assert_eq!(p.order_at_one(), Some(2));
        assert_eq!(p.shed_one_root(2), &LaurentPoly::q() + &LaurentPoly::one());
    }

    #[test]
    fn display_is_descending_and_signed() {
        let p = LaurentPoly::from_terms(vec![(2, rat(1, 1)), (0, rat(-2, 1)), (-2, rat(1, 2))]);
        assert_eq!(p.to_string(), "q^2 - 2 + 1/2*q^-2");
    }
}
