//! Size-scaling compositions of the basic triangles.
//!
//! Side-by-side composition (two isosceles copies, or three half-equilateral
//! copies) scales sides by √2 or √3 and gives the unbounded area sequences
//! `{n², 2n²}` and `{n², 3n²}`. The overlapping three-copy composition
//! scales sides by 3/2 instead, which allows size families bounded above.

use alloc::vec::Vec;

use super::dissection::{timaeus_equilateral, timaeus_square, Dissection, Mode, Target};
use super::geometry::{AffineMap, BasicKind, BasicTriangle, PlacedTriangle, Point};
use crate::exactnum::{FieldValue, Rational};
use crate::{Error, Result};

/// A larger triangle assembled from unit basic triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub kind: BasicKind,
    /// Target is the larger triangle; pieces are unit basic triangles.
    pub dissection: Dissection,
    /// The larger triangle's kind and size.
    pub result: BasicTriangle,
    pub side_ratio: FieldValue,
    pub area_ratio: FieldValue,
}

fn pt(x: FieldValue, y: FieldValue) -> Point {
    Point::new(x, y)
}

fn q(n: i64, d: i64) -> FieldValue {
    FieldValue::ratio(n, d)
}

fn triangle(v: [Point; 3]) -> PlacedTriangle {
    let [a, b, c] = v;
    PlacedTriangle::new(a, b, c).expect("canonical placement is non-degenerate")
}

fn finish(kind: BasicKind, whole: PlacedTriangle, pieces: Vec<PlacedTriangle>, mode: Mode) -> Composition {
    let result = whole.basic().cloned().expect("composed triangle is similar to the basic one");
    debug_assert_eq!(result.kind, kind);
    let unit = BasicTriangle::unit(kind);
    let area_ratio = whole.area().checked_div(&unit.area()).expect("basic area is nonzero");
    Composition {
        kind,
        side_ratio: result.scale.clone(),
        area_ratio,
        result,
        dissection: Dissection { target: Target::Triangle(whole), pieces, mode },
    }
}

/// Side-by-side composition: two isosceles right copies (side ×√2) or three
/// half-equilateral copies (side ×√3), with disjoint interiors.
pub fn cornford_scale(kind: BasicKind, copies: usize) -> Result<Composition> {
    match (kind, copies) {
        (BasicKind::IsoscelesRight, 2) => {
            // hypotenuse of the result on the x-axis, right angle at (1, 1)
            let apex = Point::from_ints(1, 1);
            let whole = triangle([Point::origin(), Point::from_ints(2, 0), apex.clone()]);
            let pieces = alloc::vec![
                triangle([Point::origin(), Point::from_ints(1, 0), apex.clone()]),
                triangle([Point::from_ints(1, 0), Point::from_ints(2, 0), apex]),
            ];
            Ok(finish(kind, whole, pieces, Mode::Disjoint))
        }
        (BasicKind::HalfEquilateral, 3) => {
            // right angle at the origin, short leg √3 on x, long leg 3 on y;
            // the 60° angle is bisected, then the isosceles remainder halved
            let r3 = FieldValue::sqrt3();
            let c = Point::origin();
            let a = pt(r3.clone(), FieldValue::zero());
            let b = Point::from_ints(0, 3);
            let d = Point::from_ints(0, 1);
            let m = a.midpoint(&b);
            let whole = triangle([c.clone(), a.clone(), b.clone()]);
            let pieces = alloc::vec![
                triangle([c, a.clone(), d.clone()]),
                triangle([a, d.clone(), m.clone()]),
                triangle([d, b, m]),
            ];
            Ok(finish(kind, whole, pieces, Mode::Disjoint))
        }
        _ => Err(Error::UnsupportedComposition(alloc::format!(
            "{} x{copies} (supported: isosceles-right x2, half-equilateral x3)",
            kind.name()
        ))),
    }
}

/// Overlapping composition: three unit copies covering a similar triangle
/// with sides scaled by exactly 3/2.
pub fn revisited_scale(kind: BasicKind) -> Composition {
    // Isosceles layout in the unit frame: right angle at the origin, legs
    // along the axes. The half-equilateral layout is its image under
    // (x, y) ↦ (x, √3·y), which keeps covering and maps unit isosceles
    // copies to unit half-equilateral copies.
    let stretch = match kind {
        BasicKind::IsoscelesRight => FieldValue::one(),
        BasicKind::HalfEquilateral => FieldValue::sqrt3(),
    };
    let p = |x: FieldValue, y: FieldValue| pt(x, &y * &stretch);
    let z = FieldValue::zero;
    let one = FieldValue::one;
    let whole = triangle([p(z(), z()), p(q(3, 2), z()), p(z(), q(3, 2))]);
    let pieces = alloc::vec![
        triangle([p(z(), z()), p(one(), z()), p(z(), one())]),
        triangle([p(q(1, 2), z()), p(q(3, 2), z()), p(q(1, 2), one())]),
        triangle([p(z(), q(1, 2)), p(one(), q(1, 2)), p(z(), q(3, 2))]),
    ];
    finish(kind, whole, pieces, Mode::Covering)
}

/// A face assembled from overlapping compositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCovering {
    pub kind: BasicKind,
    pub dissection: Dissection,
    /// Area of the face built the same way from unit basic triangles.
    pub basic_face_area: FieldValue,
    pub side_ratio: FieldValue,
    pub area_ratio: FieldValue,
}

/// Place a composition (built in the unit frame) onto a congruent right
/// triangle, matching right angle, short leg and long leg.
fn place(comp: &Composition, onto: &PlacedTriangle) -> Result<Vec<PlacedTriangle>> {
    let Target::Triangle(whole) = &comp.dissection.target else {
        return Err(Error::InvalidArgument("composition target must be a triangle".into()));
    };
    let src = whole.legs().ok_or(Error::DegenerateTriangle)?;
    let dst = onto.legs().ok_or(Error::DegenerateTriangle)?;
    let map = AffineMap::from_triangles(&src, &dst)?;
    debug_assert!(map.is_isometry());
    comp.dissection.pieces.iter().map(|t| t.mapped(&map)).collect()
}

/// The larger face covered by overlapping three-copy compositions: a square
/// from 12 isosceles right triangles, or an equilateral triangle from six
/// larger half-equilaterals (18 unit pieces).
pub fn revisited_face(kind: BasicKind) -> Result<FaceCovering> {
    let comp = revisited_scale(kind);
    // Quarters of the square are the larger isosceles triangles, so the
    // square side is their hypotenuse; likewise the equilateral side is
    // twice the half-equilateral's long leg.
    let (frame, basic_frame) = match kind {
        BasicKind::IsoscelesRight => {
            let side = FieldValue::sqrt2().scale(&Rational::new(3.into(), 2.into()));
            (timaeus_square(side)?, timaeus_square(FieldValue::sqrt2())?)
        }
        BasicKind::HalfEquilateral => {
            let side = FieldValue::sqrt3().scale(&Rational::from_integer(3.into()));
            (
                timaeus_equilateral(side)?,
                timaeus_equilateral(FieldValue::sqrt3().scale(&Rational::from_integer(2.into())))?,
            )
        }
    };
    let mut pieces = Vec::new();
    for slot in &frame.pieces {
        pieces.extend(place(&comp, slot)?);
    }
    let basic_face_area = basic_frame.target.area();
    let area_ratio = frame.target.area().checked_div(&basic_face_area)?;
    let side_ratio = match (&frame.target, &basic_frame.target) {
        (Target::Square { side: a }, Target::Square { side: b })
        | (Target::Equilateral { side: a }, Target::Equilateral { side: b }) => a.checked_div(b)?,
        _ => unreachable!("frames share a target shape"),
    };
    Ok(FaceCovering {
        kind,
        dissection: Dissection { target: frame.target, pieces, mode: Mode::Covering },
        basic_face_area,
        side_ratio,
        area_ratio,
    })
}

/// Area multipliers `{n², 2n²}` (squares) or `{n², 3n²}` (equilaterals) for
/// `1 ≤ n ≤ n_max`, sorted and deduplicated.
pub fn cornford_sequence(kind: BasicKind, n_max: u32) -> Result<Vec<u64>> {
    if n_max == 0 {
        return Err(Error::NotPositive("n_max"));
    }
    let k = cornford_factor(kind);
    let mut out: Vec<u64> = (1..=u64::from(n_max)).flat_map(|n| [n * n, k * n * n]).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// 2 for the isosceles (square) family, 3 for the half-equilateral one.
pub fn cornford_factor(kind: BasicKind) -> u64 {
    match kind {
        BasicKind::IsoscelesRight => 2,
        BasicKind::HalfEquilateral => 3,
    }
}

/// One scale checked by [`bounded_family`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub scale: FieldValue,
    pub area_multiplier: FieldValue,
    pub accepted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedFamilyReport {
    pub kind: BasicKind,
    pub bound: FieldValue,
    /// `B²`, strictly below 2.
    pub area_bound: FieldValue,
    pub members: Vec<FamilyMember>,
}

impl BoundedFamilyReport {
    pub fn all_accepted(&self) -> bool {
        self.members.iter().all(|m| m.accepted)
    }
}

/// Check a family of sizes `1 ≤ s ≤ B` against an upper bound `1 < B < √2`.
/// Every accepted member has area multiplier `s² ≤ B² < 2`.
pub fn bounded_family(kind: BasicKind, bound: &FieldValue, scales: &[FieldValue]) -> Result<BoundedFamilyReport> {
    let one = FieldValue::one();
    if bound <= &one {
        return Err(Error::BoundTooSmall(alloc::format!("{bound:?}")));
    }
    let area_bound = bound.square();
    if area_bound >= FieldValue::integer(2) {
        return Err(Error::BoundTooLarge(alloc::format!("{bound:?}")));
    }
    let members = scales
        .iter()
        .map(|s| FamilyMember { scale: s.clone(), area_multiplier: s.square(), accepted: &one <= s && s <= bound })
        .collect();
    Ok(BoundedFamilyReport { kind, bound: bound.clone(), area_bound, members })
}
