use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{FieldValue, Rational};
use crate::{Error, Result};

fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let r = n.nth_root(k);
    (r.pow(k) == *n).then_some(r)
}

/// Nonnegative rational square root of `q`, if `q` is a rational square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    // Ratio is reduced, so q is a square iff numerator and denominator are.
    let num = exact_root(q.numer(), 2)?;
    let den = exact_root(q.denom(), 2)?;
    Some(Rational::new(num, den))
}

/// Rational cube root of `q`, if `q` is a rational cube.
pub fn rational_cube_root(q: &Rational) -> Option<Rational> {
    let num = exact_root(q.numer(), 3)?;
    let den = exact_root(q.denom(), 3)?;
    Some(Rational::new(num, den))
}

/// Some square root of an element of ℚ(√3), when one exists there.
fn sqrt_in_sqrt3_subfield(x: &FieldValue) -> Option<FieldValue> {
    debug_assert!(x.in_sqrt3_subfield());
    let [a, _, c, _] = x.coords();
    let three = Rational::from_integer(3.into());
    if c.is_zero() {
        if let Some(r) = rational_sqrt(a) {
            return Some(FieldValue::rational(r));
        }
        // a = 3·t² gives √a = t·√3
        let t = rational_sqrt(&(a / &three))?;
        return Some(FieldValue::sqrt3().scale(&t));
    }
    // (g + h√3)² = a + c√3  ⇔  g² + 3h² = a, 2gh = c.
    // g² is a root of z² − a·z + 3c²/4, so g² = (a ± √(a² − 3c²)) / 2.
    let disc = rational_sqrt(&(a * a - &three * c * c))?;
    let two = Rational::from_integer(2.into());
    for g2 in [(a + &disc) / &two, (a - &disc) / &two] {
        if let Some(g) = rational_sqrt(&g2) {
            if g.is_zero() {
                continue;
            }
            let h = c / (&two * &g);
            return Some(FieldValue::new(g, Rational::zero(), h, Rational::zero()));
        }
    }
    None
}

/// Some square root of `x = α + β√2` (α, β ∈ ℚ(√3)), when one exists.
fn any_sqrt(x: &FieldValue) -> Option<FieldValue> {
    let [a, b, c, d] = x.coords();
    let alpha = FieldValue::new(a.clone(), Rational::zero(), c.clone(), Rational::zero());
    let beta = FieldValue::new(b.clone(), Rational::zero(), d.clone(), Rational::zero());
    let half = Rational::new(1.into(), 2.into());
    if beta.is_zero() {
        if let Some(g) = sqrt_in_sqrt3_subfield(&alpha) {
            return Some(g);
        }
        // α = 2δ² gives √α = δ·√2
        let delta = sqrt_in_sqrt3_subfield(&alpha.scale(&half))?;
        return Some(&delta * &FieldValue::sqrt2());
    }
    // (γ + δ√2)² = α + β√2  ⇔  γ² + 2δ² = α, 2γδ = β.
    // γ² = (α ± √(α² − 2β²)) / 2, all inside ℚ(√3).
    let disc = &alpha * &alpha - beta.square().scale(&Rational::from_integer(2.into()));
    let n = sqrt_in_sqrt3_subfield(&disc)?;
    for g2 in [(&alpha + &n).scale(&half), (&alpha - &n).scale(&half)] {
        if g2.is_zero() {
            continue;
        }
        if let Some(gamma) = sqrt_in_sqrt3_subfield(&g2) {
            let delta = beta.checked_div(&gamma.scale(&Rational::from_integer(2.into()))).ok()?;
            return Some(&gamma + &(&delta * &FieldValue::sqrt2()));
        }
    }
    None
}

impl FieldValue {
    /// Nonnegative square root inside ℚ(√2, √3), or `None` when the root
    /// lies outside the field.
    pub fn sqrt_in_field(&self) -> Result<Option<FieldValue>> {
        match self.signum() {
            -1 => Err(Error::NegativeRadicand),
            0 => Ok(Some(FieldValue::zero())),
            _ => Ok(any_sqrt(self).map(|y| {
                debug_assert_eq!(&y * &y, *self);
                y.abs()
            })),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    fn fv(a: i64, b: i64, c: i64, d: i64) -> FieldValue {
        FieldValue::new(ratio(a, 1), ratio(b, 1), ratio(c, 1), ratio(d, 1))
    }

    #[test]
    fn examples() {
        assert_eq!(FieldValue::integer(2).sqrt_in_field(), Ok(Some(FieldValue::sqrt2())));
        assert_eq!(FieldValue::ratio(9, 4).sqrt_in_field(), Ok(Some(FieldValue::ratio(3, 2))));
        assert_eq!(FieldValue::integer(5).sqrt_in_field(), Ok(None));
        assert_eq!(FieldValue::integer(-1).sqrt_in_field(), Err(Error::NegativeRadicand));
    }

    #[test]
    fn roots_across_subtowers() {
        assert_eq!(FieldValue::integer(6).sqrt_in_field().unwrap(), Some(FieldValue::sqrt6()));
        assert_eq!(FieldValue::integer(12).sqrt_in_field().unwrap(), Some(fv(0, 0, 2, 0)));
        // 2 + √3 = ((√2 + √6)/2)²
        let y = FieldValue::new(ratio(0, 1), ratio(1, 2), ratio(0, 1), ratio(1, 2));
        assert_eq!(fv(2, 0, 1, 0).sqrt_in_field().unwrap(), Some(y));
        // 3 − 2√2 = (√2 − 1)²
        assert_eq!(fv(3, -2, 0, 0).sqrt_in_field().unwrap(), Some(fv(-1, 1, 0, 0)));
        // √2 itself is not a square in the field
        assert_eq!(FieldValue::sqrt2().sqrt_in_field().unwrap(), None);
    }

    #[test]
    fn mixed_square_round_trips() {
        let y = FieldValue::new(ratio(1, 3), ratio(-2, 5), ratio(7, 2), ratio(1, 1));
        let x = y.square();
        assert_eq!(x.sqrt_in_field().unwrap(), Some(y.abs()));
    }

    #[test]
    fn cube_roots() {
        assert_eq!(rational_cube_root(&ratio(8, 1)), Some(ratio(2, 1)));
        assert_eq!(rational_cube_root(&ratio(27, 8)), Some(ratio(3, 2)));
        assert_eq!(rational_cube_root(&ratio(2, 1)), None);
        assert_eq!(rational_cube_root(&ratio(-27, 1)), Some(ratio(-3, 1)));
    }
}
