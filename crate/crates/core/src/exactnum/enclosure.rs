use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::{FieldValue, Interval, Rational};
use crate::{Error, Result};

/// Polynomial with coefficients in ℚ(√2, √3), lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<FieldValue>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<FieldValue>) -> Self {
        Polynomial { coeffs }
    }

    /// `y^n − value`.
    pub fn pure_power(n: usize, value: FieldValue) -> Self {
        let mut coeffs = alloc::vec![FieldValue::zero(); n + 1];
        coeffs[0] = -value;
        coeffs[n] = FieldValue::one();
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldValue] {
        &self.coeffs
    }

    pub fn eval(&self, y: &FieldValue) -> FieldValue {
        self.coeffs.iter().rev().fold(FieldValue::zero(), |acc, c| &(&acc * y) + c)
    }

    pub fn eval_rational(&self, y: &Rational) -> FieldValue {
        self.coeffs.iter().rev().fold(FieldValue::zero(), |acc, c| &acc.scale(y) + c)
    }
}

/// Certified rational bracket `[lo, hi]` around a real number.
///
/// Unless it is a point, an enclosure knows a polynomial that changes sign
/// across the bracket, which is what lets [`Enclosure::refine`] bisect it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Enclosure {
    bounds: Interval,
    poly: Option<Polynomial>,
}

impl Enclosure {
    pub fn point(q: Rational) -> Self {
        Enclosure { bounds: Interval::point(q), poly: None }
    }

    /// Bracket around a root of `poly` in `[lo, hi]`. The polynomial must not
    /// have the same strict sign at both ends.
    pub fn root_of(poly: Polynomial, lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument("enclosure bounds out of order".into()));
        }
        let slo = poly.eval_rational(&lo).signum();
        let shi = poly.eval_rational(&hi).signum();
        if slo == 0 {
            return Ok(Self::point(lo));
        }
        if shi == 0 {
            return Ok(Self::point(hi));
        }
        if slo == shi {
            return Err(Error::NoSignChange);
        }
        Ok(Enclosure { bounds: Interval::new(lo, hi), poly: Some(poly) })
    }

    /// The positive real `n`-th root of a positive field value.
    pub fn positive_root(value: &FieldValue, n: usize) -> Result<Self> {
        if !value.is_positive() {
            return Err(Error::NotPositive("radicand"));
        }
        if let Some(q) = value.to_rational() {
            let exact = match n {
                1 => Some(q),
                2 => super::rational_sqrt(&q),
                3 => super::rational_cube_root(&q),
                _ => None,
            };
            if let Some(r) = exact {
                return Ok(Self::point(r));
            }
        }
        // max(1, value) bounds the root from above.
        let upper = value.enclose(16).hi().clone() + Rational::one();
        Self::root_of(Polynomial::pure_power(n, value.clone()), Rational::zero(), upper)
    }

    pub fn lo(&self) -> &Rational {
        self.bounds.lo()
    }

    pub fn hi(&self) -> &Rational {
        self.bounds.hi()
    }

    pub fn width(&self) -> Rational {
        self.bounds.width()
    }

    pub fn interval(&self) -> &Interval {
        &self.bounds
    }

    pub fn polynomial(&self) -> Option<&Polynomial> {
        self.poly.as_ref()
    }

    pub fn is_point(&self) -> bool {
        self.bounds.width().is_zero()
    }

    pub fn midpoint(&self) -> Rational {
        self.bounds.midpoint()
    }

    /// Bisect until the width is at most `target_width`. The result is
    /// always a subinterval of `self`.
    pub fn refine(&self, target_width: &Rational) -> Enclosure {
        let Some(poly) = &self.poly else {
            return self.clone();
        };
        let mut lo = self.lo().clone();
        let mut hi = self.hi().clone();
        let lo_sign = poly.eval_rational(&lo).signum();
        let two = Rational::from_integer(2.into());
        while &(&hi - &lo) > target_width {
            let mid = (&lo + &hi) / &two;
            match poly.eval_rational(&mid).signum() {
                0 => return Enclosure::point(mid),
                s if s == lo_sign => lo = mid,
                _ => hi = mid,
            }
        }
        Enclosure { bounds: Interval::new(lo, hi), poly: self.poly.clone() }
    }

    /// Enclosure refined to at most `width`, starting from a fresh bracket.
    pub fn positive_root_to(value: &FieldValue, n: usize, width: &Rational) -> Result<Self> {
        if !width.is_positive() {
            return Err(Error::NotPositive("width"));
        }
        Ok(Self::positive_root(value, n)?.refine(width))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{ratio, ten_pow_neg};

    #[test]
    fn cube_root_of_two() {
        let e = Enclosure::positive_root_to(&FieldValue::integer(2), 3, &ten_pow_neg(6)).unwrap();
        assert!(e.width() <= ten_pow_neg(6));
        assert!(e.lo() >= &ratio(1_259_920, 1_000_000));
        assert!(e.hi() <= &ratio(1_259_922, 1_000_000));
    }

    #[test]
    fn point_interval_is_fixed() {
        let e = Enclosure::point(ratio(3, 1));
        assert_eq!(e.refine(&ten_pow_neg(9)), e);
    }

    #[test]
    fn sqrt_two_straddles() {
        let e = Enclosure::positive_root_to(&FieldValue::integer(2), 2, &ten_pow_neg(4)).unwrap();
        assert!(e.lo() < &ratio(141_422, 100_000));
        assert!(e.hi() > &ratio(141_420, 100_000));
        assert!(e.width() <= ten_pow_neg(4));
    }

    #[test]
    fn exact_roots_collapse_to_points() {
        let e = Enclosure::positive_root_to(&FieldValue::integer(4), 2, &ten_pow_neg(3)).unwrap();
        assert!(e.is_point());
        assert_eq!(e.lo(), &ratio(2, 1));
    }

    #[test]
    fn no_sign_change_rejected() {
        let p = Polynomial::pure_power(2, FieldValue::integer(2));
        assert_eq!(Enclosure::root_of(p, ratio(2, 1), ratio(3, 1)), Err(Error::NoSignChange));
    }

    #[test]
    fn field_coefficients() {
        // y³ − 2·(√2)³ = y³ − 4√2 has root √2·2^(1/3) ≈ 1.781797
        let a = FieldValue::sqrt2();
        let e = Enclosure::positive_root_to(&(a.pow(3).scale(&ratio(2, 1))), 3, &ten_pow_neg(6)).unwrap();
        assert!(e.lo() > &ratio(1_781_796, 1_000_000) && e.hi() < &ratio(1_781_798, 1_000_000));
    }
}
