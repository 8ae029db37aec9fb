//! Exact arithmetic in ℚ(√2, √3).
//!
//! A [`FieldValue`] is `q0 + q1·√2 + q2·√3 + q3·√6` with arbitrary-precision
//! rational coordinates. Equality is structural (the basis is linearly
//! independent over ℚ), and the sign is decided by evaluating the value with
//! rational interval arithmetic at increasing precision.
//!
//! Values outside the field (cube roots, square roots of non-squares) are
//! carried by [`Enclosure`], a rational bracket around the unique root of a
//! polynomial with field coefficients, refined by bisection.

mod enclosure;
mod field;
mod interval;
mod parse;
mod sqrt;

use num_rational::BigRational;

pub use enclosure::{Enclosure, Polynomial};
pub use field::FieldValue;
pub use interval::{radical_interval, Interval};
pub use parse::parse_rational;
pub use sqrt::{rational_cube_root, rational_sqrt};

/// Arbitrary-precision rational, always in lowest terms.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// `10^-exp` as an exact rational.
pub fn ten_pow_neg(exp: u32) -> Rational {
    use num_traits::{One, Pow};
    Rational::new(One::one(), num_bigint::BigInt::from(10u32).pow(exp))
}
