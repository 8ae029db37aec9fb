use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    /// Panics if `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval bounds out of order");
        Interval { lo, hi }
    }

    pub fn point(q: Rational) -> Self {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// True when `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Largest absolute value of any point in the interval.
    pub fn magnitude(&self) -> Rational {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn scale(&self, q: &Rational) -> Interval {
        let a = &self.lo * q;
        let b = &self.hi * q;
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn pow(&self, exp: u32) -> Interval {
        let mut acc = Interval::point(Rational::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl<'a> Add<&'a Interval> for &'a Interval {
    type Output = Interval;
    fn add(self, rhs: &'a Interval) -> Interval {
        Interval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl<'a> Sub<&'a Interval> for &'a Interval {
    type Output = Interval;
    fn sub(self, rhs: &'a Interval) -> Interval {
        Interval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl<'a> Mul<&'a Interval> for &'a Interval {
    type Output = Interval;
    fn mul(self, rhs: &'a Interval) -> Interval {
        let products = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if *p < lo {
                lo = p.clone();
            }
            if *p > hi {
                hi = p.clone();
            }
        }
        Interval { lo, hi }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }
}

/// Enclosure of `√n` with dyadic endpoints of width at most `2^-bits`.
pub fn radical_interval(n: u32, bits: u32) -> Interval {
    let scale = BigInt::one() << (2 * bits as usize);
    let root = (BigInt::from(n) * scale).sqrt();
    let den = BigInt::one() << bits as usize;
    let lo = Rational::new(root.clone(), den.clone());
    if &root * &root == BigInt::from(n) << (2 * bits as usize) {
        return Interval::point(lo);
    }
    let hi = Rational::new(root + 1, den);
    debug_assert!(!lo.is_zero() || n == 0);
    Interval { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn radical_bounds_bracket_the_root() {
        let iv = radical_interval(2, 20);
        assert!(iv.lo() * iv.lo() < ratio(2, 1));
        assert!(iv.hi() * iv.hi() > ratio(2, 1));
        assert!(iv.width() <= Rational::new(1.into(), BigInt::from(1u64 << 20)));
        assert_eq!(radical_interval(4, 10), Interval::point(ratio(2, 1)));
    }

    #[test]
    fn multiplication_handles_sign_mixtures() {
        let a = Interval::new(ratio(-1, 1), ratio(2, 1));
        let b = Interval::new(ratio(-3, 1), ratio(1, 1));
        assert_eq!(&a * &b, Interval::new(ratio(-6, 1), ratio(3, 1)));
    }
}
