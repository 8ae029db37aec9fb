//! Exact planar constructions with the two basic right triangles.
//!
//! Canonical placements: squares are axis-aligned with a corner at the
//! origin; equilateral triangles have their base on the x-axis from the
//! origin with the apex above. All coordinates live in ℚ(√2, √3), so
//! areas, overlaps and symmetries are decided exactly.

mod dissection;
mod geometry;
mod scaling;
mod symmetry;

pub use dissection::{
    economical_equilateral, economical_square, interiors_overlap, split_right, timaeus_equilateral, timaeus_square,
    validate, Dissection, Mode, Target, ValidationReport, Violation, DEFAULT_GRID,
};
pub use geometry::{orient, AffineMap, BasicKind, BasicTriangle, PlacedTriangle, Point};
pub use scaling::{
    bounded_family, cornford_factor, cornford_scale, cornford_sequence, revisited_face, revisited_scale,
    BoundedFamilyReport, Composition, FaceCovering, FamilyMember,
};
pub use symmetry::{polygon_symmetries, symmetry_order, target_symmetries};
