use core::fmt;

use crate::exactnum::{int, FieldValue, Rational};
use crate::{Error, Result};

/// Point in the plane with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: FieldValue,
    pub y: FieldValue,
}

impl Point {
    pub fn new(x: FieldValue, y: FieldValue) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(FieldValue::zero(), FieldValue::zero())
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(FieldValue::integer(x), FieldValue::integer(y))
    }

    pub fn minus(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn plus(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn scaled(&self, k: &FieldValue) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn dot(&self, other: &Point) -> FieldValue {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn dist2(&self, other: &Point) -> FieldValue {
        let d = self.minus(other);
        d.dot(&d)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let half = Rational::new(1.into(), 2.into());
        Point::new((&self.x + &other.x).scale(&half), (&self.y + &other.y).scale(&half))
    }

    /// `self + t·(other − self)`.
    pub fn lerp(&self, other: &Point, t: &FieldValue) -> Point {
        self.plus(&other.minus(self).scaled(t))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

/// Twice the signed area of `abc`; positive when counter-clockwise.
pub fn orient(a: &Point, b: &Point, c: &Point) -> FieldValue {
    let ab = b.minus(a);
    let ac = c.minus(a);
    &ab.x * &ac.y - &ab.y * &ac.x
}

/// The two foundational right triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasicKind {
    /// Half of a square: legs `(s, s)`, hypotenuse `s·√2`.
    IsoscelesRight,
    /// Half of an equilateral triangle: sides `(s, s·√3, 2s)`.
    HalfEquilateral,
}

impl BasicKind {
    pub fn name(self) -> &'static str {
        match self {
            BasicKind::IsoscelesRight => "isosceles-right",
            BasicKind::HalfEquilateral => "half-equilateral",
        }
    }
}

impl core::str::FromStr for BasicKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "isosceles-right" | "isosceles" => Ok(BasicKind::IsoscelesRight),
            "half-equilateral" | "scalene" => Ok(BasicKind::HalfEquilateral),
            _ => Err(Error::Parse(alloc::format!("unknown triangle kind {s:?}"))),
        }
    }
}

/// A basic triangle kind at a size: `scale` multiplies the basic short side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasicTriangle {
    pub kind: BasicKind,
    pub scale: FieldValue,
}

impl BasicTriangle {
    pub fn new(kind: BasicKind, scale: FieldValue) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::NotPositive("triangle scale"));
        }
        Ok(BasicTriangle { kind, scale })
    }

    pub fn unit(kind: BasicKind) -> Self {
        BasicTriangle { kind, scale: FieldValue::one() }
    }

    /// Squared side lengths, shortest first.
    pub fn sides_squared(&self) -> [FieldValue; 3] {
        let s2 = self.scale.square();
        match self.kind {
            BasicKind::IsoscelesRight => [s2.clone(), s2.clone(), s2.scale(&int(2))],
            BasicKind::HalfEquilateral => [s2.clone(), s2.scale(&int(3)), s2.scale(&int(4))],
        }
    }

    pub fn area(&self) -> FieldValue {
        let half = Rational::new(1.into(), 2.into());
        let s2 = self.scale.square().scale(&half);
        match self.kind {
            BasicKind::IsoscelesRight => s2,
            BasicKind::HalfEquilateral => &s2 * &FieldValue::sqrt3(),
        }
    }
}

/// A triangle with exact vertices, stored counter-clockwise. When its side
/// lengths match one of the basic kinds, `basic` records the kind and size.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlacedTriangle {
    vertices: [Point; 3],
    basic: Option<BasicTriangle>,
}

impl PlacedTriangle {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        let o = orient(&a, &b, &c).signum();
        let vertices = match o {
            0 => return Err(Error::DegenerateTriangle),
            1 => [a, b, c],
            _ => [a, c, b],
        };
        let basic = classify(&vertices);
        Ok(PlacedTriangle { vertices, basic })
    }

    pub fn vertices(&self) -> &[Point; 3] {
        &self.vertices
    }

    pub fn basic(&self) -> Option<&BasicTriangle> {
        self.basic.as_ref()
    }

    pub fn area(&self) -> FieldValue {
        let [a, b, c] = &self.vertices;
        orient(a, b, c).scale(&Rational::new(1.into(), 2.into()))
    }

    /// Closed point-in-triangle test.
    pub fn contains(&self, p: &Point) -> bool {
        let [a, b, c] = &self.vertices;
        !orient(a, b, p).is_negative() && !orient(b, c, p).is_negative() && !orient(c, a, p).is_negative()
    }

    pub fn edges(&self) -> [(Point, Point); 3] {
        let [a, b, c] = &self.vertices;
        [(a.clone(), b.clone()), (b.clone(), c.clone()), (c.clone(), a.clone())]
    }

    /// For a right triangle: `(right-angle vertex, end of the shorter leg,
    /// end of the longer leg)`. Equal legs keep counter-clockwise order.
    pub fn legs(&self) -> Option<[Point; 3]> {
        for i in 0..3 {
            let v = &self.vertices[i];
            let p = &self.vertices[(i + 1) % 3];
            let q = &self.vertices[(i + 2) % 3];
            if p.minus(v).dot(&q.minus(v)).is_zero() {
                let (short, long) = if v.dist2(p) <= v.dist2(q) { (p, q) } else { (q, p) };
                return Some([v.clone(), short.clone(), long.clone()]);
            }
        }
        None
    }

    /// Image under an affine map.
    pub fn mapped(&self, map: &AffineMap) -> Result<Self> {
        let [a, b, c] = &self.vertices;
        PlacedTriangle::new(map.apply(a), map.apply(b), map.apply(c))
    }
}

fn classify(v: &[Point; 3]) -> Option<BasicTriangle> {
    let mut d = [v[0].dist2(&v[1]), v[1].dist2(&v[2]), v[2].dist2(&v[0])];
    d.sort();
    let [d0, d1, d2] = d;
    if &d0 + &d1 != d2 {
        return None;
    }
    let kind = if d0 == d1 {
        BasicKind::IsoscelesRight
    } else if d1 == d0.scale(&int(3)) {
        BasicKind::HalfEquilateral
    } else {
        return None;
    };
    let scale = d0.sqrt_in_field().ok()??;
    Some(BasicTriangle { kind, scale })
}

/// Affine map `p ↦ M·p + t` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    m: [[FieldValue; 2]; 2],
    t: [FieldValue; 2],
}

impl AffineMap {
    pub fn identity() -> Self {
        AffineMap {
            m: [[FieldValue::one(), FieldValue::zero()], [FieldValue::zero(), FieldValue::one()]],
            t: [FieldValue::zero(), FieldValue::zero()],
        }
    }

    /// The unique affine map taking `src[i]` to `dst[i]`.
    pub fn from_triangles(src: &[Point; 3], dst: &[Point; 3]) -> Result<Self> {
        let e1 = src[1].minus(&src[0]);
        let e2 = src[2].minus(&src[0]);
        let det = &e1.x * &e2.y - &e1.y * &e2.x;
        let inv_det = det.inverse().map_err(|_| Error::DegenerateTriangle)?;
        // Inverse of [e1 e2] (columns), then D·S⁻¹ with D = [f1 f2].
        let s_inv = [[&e2.y * &inv_det, -(&e2.x * &inv_det)], [-(&e1.y * &inv_det), &e1.x * &inv_det]];
        let f1 = dst[1].minus(&dst[0]);
        let f2 = dst[2].minus(&dst[0]);
        let d = [[f1.x, f2.x], [f1.y, f2.y]];
        let mut m: [[FieldValue; 2]; 2] = Default::default();
        for (r, row) in m.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = &d[r][0] * &s_inv[0][c] + &d[r][1] * &s_inv[1][c];
            }
        }
        let image = [&m[0][0] * &src[0].x + &m[0][1] * &src[0].y, &m[1][0] * &src[0].x + &m[1][1] * &src[0].y];
        let t = [&dst[0].x - &image[0], &dst[0].y - &image[1]];
        Ok(AffineMap { m, t })
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            &self.m[0][0] * &p.x + &self.m[0][1] * &p.y + &self.t[0],
            &self.m[1][0] * &p.x + &self.m[1][1] * &p.y + &self.t[1],
        )
    }

    /// True when the linear part is orthogonal.
    pub fn is_isometry(&self) -> bool {
        let [[a, b], [c, d]] = &self.m;
        let one = FieldValue::one();
        (a * a + c * c) == one && (b * b + d * d) == one && (a * b + c * d).is_zero()
    }

    pub fn then(&self, next: &AffineMap) -> AffineMap {
        let mut m: [[FieldValue; 2]; 2] = Default::default();
        for (r, row) in m.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = &next.m[r][0] * &self.m[0][c] + &next.m[r][1] * &self.m[1][c];
            }
        }
        let p = next.apply(&Point::new(self.t[0].clone(), self.t[1].clone()));
        AffineMap { m, t: [p.x, p.y] }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification() {
        let t = PlacedTriangle::new(Point::from_ints(0, 0), Point::from_ints(1, 0), Point::from_ints(0, 1)).unwrap();
        assert_eq!(t.basic(), Some(&BasicTriangle::unit(BasicKind::IsoscelesRight)));
        let h = PlacedTriangle::new(
            Point::origin(),
            Point::from_ints(1, 0),
            Point::new(FieldValue::zero(), FieldValue::sqrt3()),
        )
        .unwrap();
        assert_eq!(h.basic(), Some(&BasicTriangle::unit(BasicKind::HalfEquilateral)));
        let g = PlacedTriangle::new(Point::origin(), Point::from_ints(3, 0), Point::from_ints(-1, 1)).unwrap();
        assert_eq!(g.basic(), None);
    }

    #[test]
    fn degenerate_rejected() {
        let r = PlacedTriangle::new(Point::origin(), Point::from_ints(1, 1), Point::from_ints(2, 2));
        assert_eq!(r, Err(Error::DegenerateTriangle));
    }

    #[test]
    fn vertices_are_counter_clockwise() {
        let t = PlacedTriangle::new(Point::origin(), Point::from_ints(0, 1), Point::from_ints(1, 0)).unwrap();
        assert_eq!(t.area(), FieldValue::ratio(1, 2));
        assert!(t.contains(&Point::new(FieldValue::ratio(1, 4), FieldValue::ratio(1, 4))));
        assert!(t.contains(&Point::from_ints(1, 0)));
        assert!(!t.contains(&Point::from_ints(1, 1)));
    }

    #[test]
    fn affine_from_triangles_round_trips() {
        let src = [Point::origin(), Point::from_ints(1, 0), Point::from_ints(0, 1)];
        let dst = [Point::from_ints(2, 3), Point::from_ints(2, 4), Point::from_ints(1, 3)];
        let m = AffineMap::from_triangles(&src, &dst).unwrap();
        for (s, d) in src.iter().zip(dst.iter()) {
            assert_eq!(&m.apply(s), d);
        }
        assert!(m.is_isometry());
        let back = AffineMap::from_triangles(&dst, &src).unwrap();
        assert_eq!(m.then(&back), AffineMap::identity());
    }
}
