use alloc::vec::Vec;

use super::geometry::{orient, PlacedTriangle, Point};
use crate::exactnum::{int, FieldValue, Rational};
use crate::{Error, Result};

/// The polygon being tiled or covered.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// Axis-aligned square `[0, side]²`.
    Square { side: FieldValue },
    /// Base from `(0, 0)` to `(side, 0)`, apex above.
    Equilateral { side: FieldValue },
    /// An arbitrary triangle (the larger triangle of a scaling composition).
    Triangle(PlacedTriangle),
}

impl Target {
    pub fn square(side: FieldValue) -> Result<Self> {
        if !side.is_positive() {
            return Err(Error::NotPositive("side"));
        }
        Ok(Target::Square { side })
    }

    pub fn equilateral(side: FieldValue) -> Result<Self> {
        if !side.is_positive() {
            return Err(Error::NotPositive("side"));
        }
        Ok(Target::Equilateral { side })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Target::Square { .. } => "square",
            Target::Equilateral { .. } => "equilateral",
            Target::Triangle(_) => "triangle",
        }
    }

    /// Vertices in counter-clockwise order.
    pub fn vertices(&self) -> Vec<Point> {
        match self {
            Target::Square { side } => {
                let z = FieldValue::zero();
                alloc::vec![
                    Point::new(z.clone(), z.clone()),
                    Point::new(side.clone(), z.clone()),
                    Point::new(side.clone(), side.clone()),
                    Point::new(z, side.clone()),
                ]
            }
            Target::Equilateral { side } => {
                let half = Rational::new(1.into(), 2.into());
                let apex = Point::new(side.scale(&half), (side * &FieldValue::sqrt3()).scale(&half));
                alloc::vec![Point::origin(), Point::new(side.clone(), FieldValue::zero()), apex]
            }
            Target::Triangle(t) => t.vertices().to_vec(),
        }
    }

    pub fn area(&self) -> FieldValue {
        match self {
            Target::Square { side } => side.square(),
            Target::Equilateral { side } => {
                (&side.square() * &FieldValue::sqrt3()).scale(&Rational::new(1.into(), 4.into()))
            }
            Target::Triangle(t) => t.area(),
        }
    }

    /// Closed containment in the (convex) target.
    pub fn contains(&self, p: &Point) -> bool {
        let v = self.vertices();
        (0..v.len()).all(|i| !orient(&v[i], &v[(i + 1) % v.len()], p).is_negative())
    }
}

/// Whether pieces must tile the target or may overlap while covering it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Disjoint,
    Covering,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Disjoint => "disjoint",
            Mode::Covering => "covering",
        }
    }
}

/// Triangles placed over a target polygon.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dissection {
    pub target: Target,
    pub pieces: Vec<PlacedTriangle>,
    pub mode: Mode,
}

impl Dissection {
    pub fn pieces_area(&self) -> FieldValue {
        self.pieces.iter().fold(FieldValue::zero(), |acc, p| &acc + &p.area())
    }

    /// Distinct piece edges as unordered point pairs.
    pub fn edge_set(&self) -> Vec<(Point, Point)> {
        let mut out: Vec<(Point, Point)> = Vec::new();
        for piece in &self.pieces {
            for (a, b) in piece.edges() {
                if !out.iter().any(|e| same_edge(e, &(a.clone(), b.clone()))) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

pub(crate) fn same_edge(e: &(Point, Point), f: &(Point, Point)) -> bool {
    (e.0 == f.0 && e.1 == f.1) || (e.0 == f.1 && e.1 == f.0)
}

fn tri(a: &Point, b: &Point, c: &Point) -> PlacedTriangle {
    PlacedTriangle::new(a.clone(), b.clone(), c.clone()).expect("canonical pieces are non-degenerate")
}

/// Square cut by the diagonal from the origin: two isosceles right pieces.
pub fn economical_square(side: FieldValue) -> Result<Dissection> {
    let target = Target::square(side)?;
    let [a, b, c, d]: [Point; 4] = target.vertices().try_into().expect("square has 4 vertices");
    Ok(Dissection { pieces: alloc::vec![tri(&a, &b, &c), tri(&a, &c, &d)], target, mode: Mode::Disjoint })
}

/// Equilateral triangle cut by the altitude from its apex.
pub fn economical_equilateral(side: FieldValue) -> Result<Dissection> {
    let target = Target::equilateral(side)?;
    let [a, b, c]: [Point; 3] = target.vertices().try_into().expect("triangle has 3 vertices");
    let m = a.midpoint(&b);
    Ok(Dissection { pieces: alloc::vec![tri(&a, &m, &c), tri(&m, &b, &c)], target, mode: Mode::Disjoint })
}

/// Square cut by both diagonals: four isosceles right pieces meeting at the center.
pub fn timaeus_square(side: FieldValue) -> Result<Dissection> {
    let target = Target::square(side)?;
    let v = target.vertices();
    let center = v[0].midpoint(&v[2]);
    let pieces = (0..4).map(|i| tri(&v[i], &v[(i + 1) % 4], &center)).collect();
    Ok(Dissection { target, pieces, mode: Mode::Disjoint })
}

/// Equilateral triangle cut by its three altitudes: six half-equilateral
/// pieces meeting at the centroid.
pub fn timaeus_equilateral(side: FieldValue) -> Result<Dissection> {
    let target = Target::equilateral(side)?;
    let v = target.vertices();
    let third = Rational::new(1.into(), 3.into());
    let centroid =
        Point::new((&(&v[0].x + &v[1].x) + &v[2].x).scale(&third), (&(&v[0].y + &v[1].y) + &v[2].y).scale(&third));
    let mut pieces = Vec::with_capacity(6);
    for i in 0..3 {
        let p = &v[i];
        let q = &v[(i + 1) % 3];
        let m = p.midpoint(q);
        pieces.push(tri(p, &m, &centroid));
        pieces.push(tri(&m, q, &centroid));
    }
    Ok(Dissection { target, pieces, mode: Mode::Disjoint })
}

/// Split any triangle into two right triangles along the altitude from the
/// vertex with the largest angle (lowest index on ties).
pub fn split_right(a: &Point, b: &Point, c: &Point) -> Result<[PlacedTriangle; 2]> {
    if orient(a, b, c).is_zero() {
        return Err(Error::DegenerateTriangle);
    }
    let v = [a, b, c];
    // The largest angle faces the longest side.
    let opposite: Vec<FieldValue> = (0..3).map(|i| v[(i + 1) % 3].dist2(v[(i + 2) % 3])).collect();
    let mut apex = 0;
    for i in 1..3 {
        if opposite[i] > opposite[apex] {
            apex = i;
        }
    }
    let top = v[apex];
    let p = v[(apex + 1) % 3];
    let q = v[(apex + 2) % 3];
    let t = top.minus(p).dot(&q.minus(p)).checked_div(&opposite[apex])?;
    debug_assert!(t.is_positive() && t < FieldValue::one());
    let foot = p.lerp(q, &t);
    Ok([PlacedTriangle::new(top.clone(), p.clone(), foot.clone())?, PlacedTriangle::new(top.clone(), foot, q.clone())?])
}

/// A failure found by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Interiors of two pieces intersect (disjoint mode).
    Overlap { first: usize, second: usize },
    /// A piece vertex lies outside the target.
    OutsideTarget { piece: usize, vertex: Point },
    /// Piece areas do not sum to the target area (disjoint mode).
    AreaMismatch { target: FieldValue, pieces: FieldValue },
    /// A probe point of the target is in no piece (covering mode).
    Uncovered { point: Point },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub mode: Mode,
    pub target_area: FieldValue,
    pub pieces_area: FieldValue,
    /// Number of probe points tested (covering mode only).
    pub probes: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Default grid resolution for covering checks: 64 steps per side.
pub const DEFAULT_GRID: u32 = 64;

/// True when the interiors of two counter-clockwise triangles intersect.
///
/// Two convex polygons have disjoint interiors iff some edge line of one of
/// them has the whole other polygon on its closed outer side.
pub fn interiors_overlap(s: &PlacedTriangle, t: &PlacedTriangle) -> bool {
    let separated_by = |a: &PlacedTriangle, b: &PlacedTriangle| {
        a.edges().iter().any(|(p, q)| b.vertices().iter().all(|v| !orient(p, q, v).is_positive()))
    };
    !(separated_by(s, t) || separated_by(t, s))
}

/// Check a dissection exactly. Covering mode samples a `grid × grid`
/// lattice over the target's bounding box plus every target vertex and
/// edge midpoint.
pub fn validate(d: &Dissection, grid: u32) -> ValidationReport {
    let mut violations = Vec::new();
    for (i, piece) in d.pieces.iter().enumerate() {
        for v in piece.vertices() {
            if !d.target.contains(v) {
                violations.push(Violation::OutsideTarget { piece: i, vertex: v.clone() });
            }
        }
    }
    let target_area = d.target.area();
    let pieces_area = d.pieces_area();
    let mut probes = 0;
    match d.mode {
        Mode::Disjoint => {
            for i in 0..d.pieces.len() {
                for j in i + 1..d.pieces.len() {
                    if interiors_overlap(&d.pieces[i], &d.pieces[j]) {
                        violations.push(Violation::Overlap { first: i, second: j });
                    }
                }
            }
            if target_area != pieces_area {
                violations.push(Violation::AreaMismatch { target: target_area.clone(), pieces: pieces_area.clone() });
            }
        }
        Mode::Covering => {
            let boxes: Vec<[f64; 4]> = d.pieces.iter().map(approx_bbox).collect();
            for p in probe_points(&d.target, grid.max(1)) {
                probes += 1;
                let (px, py) = (p.x.to_f64(), p.y.to_f64());
                let covered = d.pieces.iter().zip(&boxes).any(|(piece, b)| {
                    // coarse rejection well outside float error; exact test otherwise
                    const SLACK: f64 = 1e-9;
                    let outside = px < b[0] - SLACK || px > b[2] + SLACK || py < b[1] - SLACK || py > b[3] + SLACK;
                    !outside && piece.contains(&p)
                });
                if !covered {
                    violations.push(Violation::Uncovered { point: p });
                }
            }
        }
    }
    ValidationReport { mode: d.mode, target_area, pieces_area, probes, violations }
}

fn approx_bbox(t: &PlacedTriangle) -> [f64; 4] {
    let xs = t.vertices().iter().map(|v| v.x.to_f64());
    let ys = t.vertices().iter().map(|v| v.y.to_f64());
    [
        xs.clone().fold(f64::INFINITY, f64::min),
        ys.clone().fold(f64::INFINITY, f64::min),
        xs.fold(f64::NEG_INFINITY, f64::max),
        ys.fold(f64::NEG_INFINITY, f64::max),
    ]
}

fn probe_points(target: &Target, grid: u32) -> Vec<Point> {
    let verts = target.vertices();
    let min_x = verts.iter().map(|v| &v.x).min().expect("nonempty").clone();
    let max_x = verts.iter().map(|v| &v.x).max().expect("nonempty").clone();
    let min_y = verts.iter().map(|v| &v.y).min().expect("nonempty").clone();
    let max_y = verts.iter().map(|v| &v.y).max().expect("nonempty").clone();
    let step_x = (&max_x - &min_x).scale(&Rational::new(1.into(), grid.into()));
    let step_y = (&max_y - &min_y).scale(&Rational::new(1.into(), grid.into()));
    let mut out = Vec::new();
    for i in 0..=grid {
        let x = &min_x + &step_x.scale(&int(i.into()));
        for j in 0..=grid {
            let p = Point::new(x.clone(), &min_y + &step_y.scale(&int(j.into())));
            if target.contains(&p) {
                out.push(p);
            }
        }
    }
    for i in 0..verts.len() {
        out.push(verts[i].clone());
        out.push(verts[i].midpoint(&verts[(i + 1) % verts.len()]));
    }
    out
}
