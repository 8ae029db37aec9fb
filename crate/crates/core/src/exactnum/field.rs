use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::interval::{radical_interval, Interval};
use super::Rational;
use crate::{Error, Result};

/// Exact element `q0 + q1·√2 + q2·√3 + q3·√6` of ℚ(√2, √3).
///
/// The coordinates are reduced rationals, so two values are equal exactly
/// when their coordinates are equal. [`Ord`] is the order of the reals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldValue {
    c: [Rational; 4],
}

impl FieldValue {
    pub fn new(q0: Rational, q1: Rational, q2: Rational, q3: Rational) -> Self {
        FieldValue { c: [q0, q1, q2, q3] }
    }

    pub fn from_coords(c: [Rational; 4]) -> Self {
        FieldValue { c }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(q: Rational) -> Self {
        FieldValue { c: [q, Rational::zero(), Rational::zero(), Rational::zero()] }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(super::int(n))
    }

    /// `num / den` as a field value.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::rational(super::ratio(num, den))
    }

    pub fn sqrt2() -> Self {
        Self::new(Rational::zero(), Rational::one(), Rational::zero(), Rational::zero())
    }

    pub fn sqrt3() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn sqrt6() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::one())
    }

    /// Coordinates on the basis `(1, √2, √3, √6)`.
    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it has no radical part.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.c[0].clone())
    }

    /// True when the value lies in the subfield ℚ(√3) (no √2 or √6 part).
    pub(crate) fn in_sqrt3_subfield(&self) -> bool {
        self.c[1].is_zero() && self.c[3].is_zero()
    }

    /// Image under the automorphism √2 ↦ −√2.
    pub fn conj_sqrt2(&self) -> Self {
        let [a, b, c, d] = &self.c;
        Self::new(a.clone(), -b, c.clone(), -d)
    }

    /// Image under the automorphism √3 ↦ −√3.
    pub fn conj_sqrt3(&self) -> Self {
        let [a, b, c, d] = &self.c;
        Self::new(a.clone(), b.clone(), -c, -d)
    }

    /// Field norm down to ℚ: the product of all four conjugates.
    pub fn norm(&self) -> Rational {
        let half = self * &self.conj_sqrt2();
        let full = &half * &half.conj_sqrt3();
        debug_assert!(full.is_rational());
        full.c[0].clone()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let [a, b, c, d] = &self.c;
        Self::new(a * q, b * q, c * q, d * q)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self::rational(q.recip()));
        }
        // x · σ2(x) lies in ℚ(√3); multiplying by its √3-conjugate lands in ℚ.
        let s2 = self.conj_sqrt2();
        let half = self * &s2;
        let s3 = half.conj_sqrt3();
        let norm = (&half * &s3).c[0].clone();
        Ok((&s2 * &s3).scale(&norm.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    /// Exact sign: -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if self.is_rational() {
            return if self.c[0].is_positive() { 1 } else { -1 };
        }
        // Nonzero, so some precision separates the enclosure from zero.
        let mut bits = 32;
        loop {
            let iv = self.enclose(bits);
            if iv.lo().is_positive() {
                return 1;
            }
            if iv.hi().is_negative() {
                return -1;
            }
            bits *= 2;
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Rational interval containing the value, with the radicals enclosed
    /// to within `2^-bits`.
    pub fn enclose(&self, bits: u32) -> Interval {
        let [a, b, c, d] = &self.c;
        let mut acc = Interval::point(a.clone());
        for (coeff, n) in [(b, 2u32), (c, 3), (d, 6)] {
            if !coeff.is_zero() {
                acc = &acc + &radical_interval(n, bits).scale(coeff);
            }
        }
        acc
    }

    /// Nearest `f64`, accurate to well below `f64` resolution for values of
    /// moderate size. Not authoritative.
    pub fn to_f64(&self) -> f64 {
        let iv = self.enclose(96);
        iv.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

impl Ord for FieldValue {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match (self - other).signum() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

impl PartialOrd for FieldValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Rational> for FieldValue {
    fn from(q: Rational) -> Self {
        Self::rational(q)
    }
}

impl From<i64> for FieldValue {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

fn mul_coords(x: &[Rational; 4], y: &[Rational; 4]) -> [Rational; 4] {
    let [a0, a1, a2, a3] = x;
    let [b0, b1, b2, b3] = y;
    let two = Rational::from_integer(2.into());
    let three = Rational::from_integer(3.into());
    let six = Rational::from_integer(6.into());
    // √2√3 = √6, √2√6 = 2√3, √3√6 = 3√2
    [
        a0 * b0 + &two * a1 * b1 + &three * a2 * b2 + six * a3 * b3,
        a0 * b1 + a1 * b0 + three * (a2 * b3 + a3 * b2),
        a0 * b2 + a2 * b0 + two * (a1 * b3 + a3 * b1),
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
    ]
}

impl<'a> Add<&'a FieldValue> for &'a FieldValue {
    type Output = FieldValue;
    fn add(self, rhs: &'a FieldValue) -> FieldValue {
        let [a, b, c, d] = &self.c;
        let [e, f, g, h] = &rhs.c;
        FieldValue::new(a + e, b + f, c + g, d + h)
    }
}

impl<'a> Sub<&'a FieldValue> for &'a FieldValue {
    type Output = FieldValue;
    fn sub(self, rhs: &'a FieldValue) -> FieldValue {
        let [a, b, c, d] = &self.c;
        let [e, f, g, h] = &rhs.c;
        FieldValue::new(a - e, b - f, c - g, d - h)
    }
}

impl<'a> Mul<&'a FieldValue> for &'a FieldValue {
    type Output = FieldValue;
    fn mul(self, rhs: &'a FieldValue) -> FieldValue {
        FieldValue { c: mul_coords(&self.c, &rhs.c) }
    }
}

impl Neg for &FieldValue {
    type Output = FieldValue;
    fn neg(self) -> FieldValue {
        let [a, b, c, d] = &self.c;
        FieldValue::new(-a, -b, -c, -d)
    }
}

impl Neg for FieldValue {
    type Output = FieldValue;
    fn neg(self) -> FieldValue {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<FieldValue> for FieldValue {
            type Output = FieldValue;
            fn $m(self, rhs: FieldValue) -> FieldValue {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldValue> for FieldValue {
            type Output = FieldValue;
            fn $m(self, rhs: &'a FieldValue) -> FieldValue {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<FieldValue> for &'a FieldValue {
            type Output = FieldValue;
            fn $m(self, rhs: FieldValue) -> FieldValue {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&FieldValue> for FieldValue {
    fn add_assign(&mut self, rhs: &FieldValue) {
        for (l, r) in self.c.iter_mut().zip(rhs.c.iter()) {
            *l += r;
        }
    }
}

impl SubAssign<&FieldValue> for FieldValue {
    fn sub_assign(&mut self, rhs: &FieldValue) {
        for (l, r) in self.c.iter_mut().zip(rhs.c.iter()) {
            *l -= r;
        }
    }
}

/// Canonical text form `q0 + q1*r2 + q2*r3 + q3*r6`.
impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.c;
        write!(f, "{a} + {b}*r2 + {c}*r3 + {d}*r6")
    }
}

impl fmt::Debug for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (q, unit) in self.c.iter().zip(["", "√2", "√3", "√6"]) {
            if q.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (unit.is_empty(), q.is_one()) {
                (false, true) => f.write_str(unit)?,
                _ => write!(f, "{q}{unit}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn basis_products() {
        let r2 = FieldValue::sqrt2();
        let r3 = FieldValue::sqrt3();
        let r6 = FieldValue::sqrt6();
        assert_eq!(&r2 * &r2, FieldValue::integer(2));
        assert_eq!(&r2 * &r3, r6);
        assert_eq!(&r2 * &r6, r3.scale(&ratio(2, 1)));
        assert_eq!(&r3 * &r6, r2.scale(&ratio(3, 1)));
        assert_eq!(&r6 * &r6, FieldValue::integer(6));
    }

    #[test]
    fn difference_of_squares() {
        let a = FieldValue::one() + FieldValue::sqrt2();
        let b = FieldValue::integer(-1) + FieldValue::sqrt2();
        assert_eq!(a * b, FieldValue::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(FieldValue::one().checked_div(&FieldValue::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_of_mixed_value() {
        let x = FieldValue::new(ratio(1, 2), ratio(-3, 1), ratio(2, 7), ratio(5, 3));
        assert_eq!(&x * &x.inverse().unwrap(), FieldValue::one());
    }

    #[test]
    fn sign_examples() {
        assert_eq!(FieldValue::zero().signum(), 0);
        let a = FieldValue::integer(3) - FieldValue::sqrt2().scale(&ratio(2, 1));
        assert_eq!(a.signum(), 1);
        let b = FieldValue::sqrt2() + FieldValue::sqrt3() - FieldValue::sqrt6();
        assert_eq!(b.signum(), 1);
        assert_eq!((-b).signum(), -1);
    }

    #[test]
    fn sign_of_tiny_nonzero_value() {
        // (√2 - 1)^20 ≈ 2.2e-8, well below the first enclosure width
        let x = (FieldValue::sqrt2() - FieldValue::one()).pow(20);
        assert_eq!(x.signum(), 1);
        assert_eq!((-x).signum(), -1);
    }

    #[test]
    fn ordering_matches_reals() {
        let mut v =
            alloc::vec![FieldValue::sqrt3(), FieldValue::ratio(3, 2), FieldValue::sqrt2(), FieldValue::ratio(4, 3),];
        v.sort();
        assert_eq!(
            v,
            alloc::vec![FieldValue::ratio(4, 3), FieldValue::sqrt2(), FieldValue::ratio(3, 2), FieldValue::sqrt3()]
        );
    }

    #[test]
    fn norm_is_rational_product_of_conjugates() {
        let x = FieldValue::one() + FieldValue::sqrt2();
        assert_eq!(x.norm(), ratio(1, 1));
        assert_eq!(FieldValue::sqrt6().norm(), ratio(36, 1));
    }
}
