//! Geometric means and two-mean chains.
//!
//! `c` is a mean between `a` and `b` when `a/c = c/b`, i.e. `a·b = c²`.
//! Two means `c, d` between `a` and `b` satisfy `c² = a·d` and `d² = c·b`,
//! which forces `c³ = a²·b`; with `b = 2a` that is cube duplication.
//! Exact inputs are checked exactly; any enclosure input promotes the
//! whole check to certified interval arithmetic against a tolerance.

use alloc::vec::Vec;

use crate::exactnum::{rational_cube_root, ten_pow_neg, Enclosure, FieldValue, Interval, Rational};
use crate::tiling::Point;
use crate::{Error, Result};

/// Precision (in bits) used when an exact term joins an interval check.
const EXACT_TERM_BITS: u32 = 128;

/// Default enclosure width, `10⁻⁹`.
pub fn default_width() -> Rational {
    ten_pow_neg(9)
}

/// Default tolerance for enclosure-based checks, `10⁻⁶`.
pub fn default_tolerance() -> Rational {
    ten_pow_neg(6)
}

/// A chain term: an exact field value or a certified enclosure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Magnitude {
    Exact(FieldValue),
    Approx(Enclosure),
}

impl Magnitude {
    pub fn interval(&self) -> Interval {
        match self {
            Magnitude::Exact(x) => x.enclose(EXACT_TERM_BITS),
            Magnitude::Approx(e) => e.interval().clone(),
        }
    }

    pub fn as_exact(&self) -> Option<&FieldValue> {
        match self {
            Magnitude::Exact(x) => Some(x),
            Magnitude::Approx(_) => None,
        }
    }

    fn is_positive(&self) -> bool {
        match self {
            Magnitude::Exact(x) => x.is_positive(),
            Magnitude::Approx(e) => e.lo() > &Rational::from_integer(0.into()),
        }
    }
}

impl From<FieldValue> for Magnitude {
    fn from(x: FieldValue) -> Self {
        Magnitude::Exact(x)
    }
}

impl From<Enclosure> for Magnitude {
    fn from(e: Enclosure) -> Self {
        Magnitude::Approx(e)
    }
}

/// `a : c : b` or `a : c : d : b`, all terms strictly positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeanChain {
    terms: Vec<Magnitude>,
}

impl MeanChain {
    pub fn new(terms: Vec<Magnitude>) -> Result<Self> {
        if !(3..=4).contains(&terms.len()) {
            return Err(Error::InvalidArgument(alloc::format!("a mean chain has 3 or 4 terms, got {}", terms.len())));
        }
        if !terms.iter().all(Magnitude::is_positive) {
            return Err(Error::NotPositive("chain term"));
        }
        Ok(MeanChain { terms })
    }

    pub fn exact(terms: Vec<FieldValue>) -> Result<Self> {
        Self::new(terms.into_iter().map(Magnitude::Exact).collect())
    }

    pub fn terms(&self) -> &[Magnitude] {
        &self.terms
    }

    /// Validity of the chain: a single mean for 3 terms, two means for 4.
    pub fn check(&self, tolerance: &Rational) -> Result<bool> {
        match self.terms.as_slice() {
            [a, c, b] => check_mean_magnitudes(a, c, b, tolerance),
            [a, c, d, b] => check_two_means(a, c, d, b, tolerance),
            _ => unreachable!("length checked at construction"),
        }
    }
}

/// The chain read backwards. Cross products are symmetric, so validity is
/// unchanged.
pub fn invert_chain(chain: &MeanChain) -> MeanChain {
    let mut terms = chain.terms.clone();
    terms.reverse();
    MeanChain { terms }
}

fn require_positive(values: &[&FieldValue]) -> Result<()> {
    if values.iter().all(|v| v.is_positive()) {
        Ok(())
    } else {
        Err(Error::NotPositive("mean term"))
    }
}

/// True iff `a·b = c²` exactly.
pub fn check_single_mean(a: &FieldValue, c: &FieldValue, b: &FieldValue) -> Result<bool> {
    require_positive(&[a, c, b])?;
    Ok(a * b == c.square())
}

/// Certifies `|x − y| ≤ tol` for all values in the two intervals.
fn within(x: &Interval, y: &Interval, tol: &Rational) -> bool {
    (x - y).magnitude() <= *tol
}

fn check_mean_magnitudes(a: &Magnitude, c: &Magnitude, b: &Magnitude, tol: &Rational) -> Result<bool> {
    if let (Some(a), Some(c), Some(b)) = (a.as_exact(), c.as_exact(), b.as_exact()) {
        return check_single_mean(a, c, b);
    }
    let (ia, ic, ib) = (a.interval(), c.interval(), b.interval());
    Ok(within(&(&ia * &ib), &(&ic * &ic), tol))
}

/// Both cross-product identities `c² = a·d` and `d² = c·b`. Exact when all
/// four terms are exact, otherwise certified to within `tolerance`.
pub fn check_two_means(
    a: &Magnitude,
    c: &Magnitude,
    d: &Magnitude,
    b: &Magnitude,
    tolerance: &Rational,
) -> Result<bool> {
    if ![a, c, d, b].iter().all(|m| m.is_positive()) {
        return Err(Error::NotPositive("mean term"));
    }
    if let (Some(a), Some(c), Some(d), Some(b)) = (a.as_exact(), c.as_exact(), d.as_exact(), b.as_exact()) {
        return Ok(c.square() == a * d && d.square() == c * b);
    }
    let (ia, ic, id, ib) = (a.interval(), c.interval(), d.interval(), b.interval());
    Ok(within(&(&ic * &ic), &(&ia * &id), tolerance) && within(&(&id * &id), &(&ic * &ib), tolerance))
}

/// A constructed mean: exact when `√(a·b)` lies in the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mean {
    InField(FieldValue),
    OutOfField(Enclosure),
}

impl Mean {
    pub fn in_field(&self) -> bool {
        matches!(self, Mean::InField(_))
    }

    pub fn magnitude(&self) -> Magnitude {
        match self {
            Mean::InField(x) => Magnitude::Exact(x.clone()),
            Mean::OutOfField(e) => Magnitude::Approx(e.clone()),
        }
    }
}

/// The geometric mean `√(a·b)`, exact when possible, otherwise enclosed to
/// `width`.
pub fn construct_mean(a: &FieldValue, b: &FieldValue, width: &Rational) -> Result<Mean> {
    require_positive(&[a, b])?;
    let product = a * b;
    match product.sqrt_in_field()? {
        Some(c) => Ok(Mean::InField(c)),
        None => Ok(Mean::OutOfField(Enclosure::positive_root_to(&product, 2, width)?)),
    }
}

/// The semicircle construction: base `OB` of length `a + b`, foot of the
/// perpendicular at distance `a` from `O`, apex `D` at the mean height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeanTriangle {
    pub o: Point,
    pub b: Point,
    pub foot: Point,
    pub height: Mean,
    /// `D = (a, h)`, available when `h` is in the field.
    pub apex: Option<Point>,
    /// Exact right-angle check at `D` (dot product of `D−O`, `D−B`), when
    /// the apex is exact.
    pub right_angle: Option<bool>,
}

pub fn mean_triangle(a: &FieldValue, b: &FieldValue, width: &Rational) -> Result<MeanTriangle> {
    let height = construct_mean(a, b, width)?;
    let o = Point::origin();
    let end = Point::new(a + b, FieldValue::zero());
    let foot = Point::new(a.clone(), FieldValue::zero());
    let (apex, right_angle) = match &height {
        Mean::InField(h) => {
            let d = Point::new(a.clone(), h.clone());
            let dot = d.minus(&o).dot(&d.minus(&end));
            (Some(d), Some(dot.is_zero()))
        }
        Mean::OutOfField(_) => (None, None),
    };
    Ok(MeanTriangle { o, b: end, foot, height, apex, right_angle })
}

/// Side of the cube with twice the volume of the cube of side `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeDuplication {
    pub side: Enclosure,
    /// Certified bound on `|c³ − 2a³|` over the whole enclosure.
    pub residual_bound: Rational,
    /// Always false: the doubled side is never claimed constructible by
    /// square roots.
    pub in_sqrt_tower: bool,
}

/// Enclose `c = a·∛2`, the root of `c³ − 2a³`.
pub fn duplicate_cube(a: &FieldValue, width: &Rational) -> Result<CubeDuplication> {
    require_positive(&[a])?;
    let volume = a.pow(3).scale(&Rational::from_integer(2.into()));
    let side = Enclosure::positive_root_to(&volume, 3, width)?;
    debug_assert!(rational_cube_root(&Rational::from_integer(2.into())).is_none());
    let residual = &side.interval().pow(3) - &volume.enclose(EXACT_TERM_BITS);
    Ok(CubeDuplication { residual_bound: residual.magnitude(), side, in_sqrt_tower: false })
}

/// The single mean `a·√2` between `a` and `2a` (doubling a square).
pub fn square_duplication_mean(a: &FieldValue) -> Result<FieldValue> {
    require_positive(&[a])?;
    Ok(a * &FieldValue::sqrt2())
}

/// The two means `∛(a²b)` and `∛(ab²)` between `a` and `b`: exact when the
/// cubes are rational cubes, enclosed to `width` otherwise.
pub fn construct_two_means(a: &FieldValue, b: &FieldValue, width: &Rational) -> Result<(Magnitude, Magnitude)> {
    require_positive(&[a, b])?;
    let c_cubed = &a.square() * b;
    let d_cubed = a * &b.square();
    let one_mean = |v: FieldValue| -> Result<Magnitude> {
        if let Some(r) = v.to_rational().and_then(|q| rational_cube_root(&q)) {
            return Ok(Magnitude::Exact(FieldValue::rational(r)));
        }
        Ok(Magnitude::Approx(Enclosure::positive_root_to(&v, 3, width)?))
    };
    Ok((one_mean(c_cubed)?, one_mean(d_cubed)?))
}
