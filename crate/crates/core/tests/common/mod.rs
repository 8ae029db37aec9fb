//! Oracles and generators shared by the property and acceptance tests.
//! Nothing here calls into the library's own sign or root machinery.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use platonic_core::FieldValue;
use proptest::prelude::*;

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn rational() -> impl Strategy<Value = BigRational> {
    (-1000i64..=1000, 1i64..=60).prop_map(|(n, d)| q(n, d))
}

pub fn positive_rational() -> impl Strategy<Value = BigRational> {
    (1i64..=1000, 1i64..=60).prop_map(|(n, d)| q(n, d))
}

/// Uniform small coordinates mixed with near-cancelling Pell-type values
/// `x - y√2` and `x√3 - y√6`-shaped combinations.
pub fn field_value() -> impl Strategy<Value = FieldValue> {
    let plain = (rational(), rational(), rational(), rational()).prop_map(|(a, b, c, d)| FieldValue::new(a, b, c, d));
    let sparse = (rational(), rational(), 0usize..4).prop_map(|(a, b, slot)| {
        let mut c = [BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::zero()];
        c[0] = a;
        c[slot.max(1)] = b;
        FieldValue::from_coords(c)
    });
    let pell = (1usize..18, any::<bool>(), any::<bool>(), 1i64..5).prop_map(|(k, flip, scale3, m)| {
        let (mut x, mut y) = (BigInt::one(), BigInt::one());
        for _ in 0..k {
            let nx = &x + &y * 2;
            let ny = &x + &y;
            x = nx;
            y = ny;
        }
        let (x, y) = if flip { (-x, -y) } else { (x, y) };
        let (xr, yr) = (BigRational::from_integer(x * m), BigRational::from_integer(-y * m));
        if scale3 {
            FieldValue::new(BigRational::zero(), BigRational::zero(), xr, yr)
        } else {
            FieldValue::new(xr, yr, BigRational::zero(), BigRational::zero())
        }
    });
    prop_oneof![4 => plain, 2 => sparse, 1 => pell, 1 => Just(FieldValue::zero())]
}

/// Sign by fixed-point decimal evaluation with `digits` fractional digits.
/// `None` when the error bound straddles zero.
pub fn decimal_sign(x: &FieldValue, digits: u32) -> Option<i8> {
    let c = x.coords();
    let den = c.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let n: Vec<BigInt> = c.iter().map(|r| (r * BigRational::from_integer(den.clone())).to_integer()).collect();
    let scale = BigInt::from(10u32).pow(digits);
    let s2 = &scale * &scale;
    // Each root is a floor, so the total error is below 1 + |n1| + |n2| + |n3|.
    let roots = [scale.clone(), (&s2 * 2u32).sqrt(), (&s2 * 3u32).sqrt(), (&s2 * 6u32).sqrt()];
    let approx: BigInt = n.iter().zip(roots.iter()).map(|(a, r)| a * r).sum();
    let err: BigInt = BigInt::one() + n[1].abs() + n[2].abs() + n[3].abs();
    if approx.abs() <= err {
        None
    } else if approx.is_positive() {
        Some(1)
    } else {
        Some(-1)
    }
}

/// Every `(fire, air, water)` integer triple with `4a + 8b + 20c = faces`,
/// by plain triple loop.
pub fn brute_force_decompositions(faces: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for a in 0..=faces / 4 {
        for b in 0..=faces / 8 {
            for c in 0..=faces / 20 {
                if 4 * a + 8 * b + 20 * c == faces {
                    out.push((a, b, c));
                }
            }
        }
    }
    out.sort();
    out
}

/// Brute-force search for a square root of `n` with coordinates `p/d` for
/// `|p| <= bound`, `d <= dens`.
pub fn grid_sqrt_exists(n: i64, bound: i64, dens: i64) -> bool {
    let target = FieldValue::integer(n);
    for d in 1..=dens {
        for a in -bound..=bound {
            for b in -bound..=bound {
                for c in -bound..=bound {
                    for e in -bound..=bound {
                        let x = FieldValue::new(q(a, d), q(b, d), q(c, d), q(e, d));
                        if x.square() == target {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}
