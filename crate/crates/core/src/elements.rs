//! The four elements and the face-conservation algebra between them.
//!
//! Fire, air and water particles are regular polyhedra with equilateral
//! faces (4, 8 and 20 of them); earth is the cube with 6 square faces. A
//! transformation regroups equilateral faces among fire, air and water, so
//! the equilateral face count is conserved, while earth, built from the
//! other basic triangle, never converts.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{int, FieldValue, Rational};
use crate::tiling::{cornford_sequence, BasicKind};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Fire,
    Air,
    Water,
    Earth,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polyhedron {
    Tetrahedron,
    Octahedron,
    Icosahedron,
    Cube,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FaceShape {
    Equilateral,
    Square,
}

impl FaceShape {
    /// The basic triangle the face is assembled from.
    pub fn basic_kind(self) -> BasicKind {
        match self {
            FaceShape::Equilateral => BasicKind::HalfEquilateral,
            FaceShape::Square => BasicKind::IsoscelesRight,
        }
    }

    /// Basic triangles per face in the four/six-piece dissections.
    pub fn triangles_per_face(self) -> u32 {
        match self {
            FaceShape::Equilateral => 6,
            FaceShape::Square => 4,
        }
    }
}

impl FromStr for FaceShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "equilateral" | "equilaterals" => Ok(FaceShape::Equilateral),
            "square" | "squares" => Ok(FaceShape::Square),
            _ => Err(Error::Parse(alloc::format!("unknown face shape {s:?}"))),
        }
    }
}

impl Element {
    pub const ALL: [Element; 4] = [Element::Fire, Element::Air, Element::Water, Element::Earth];

    pub fn polyhedron(self) -> Polyhedron {
        match self {
            Element::Fire => Polyhedron::Tetrahedron,
            Element::Air => Polyhedron::Octahedron,
            Element::Water => Polyhedron::Icosahedron,
            Element::Earth => Polyhedron::Cube,
        }
    }

    pub fn face_shape(self) -> FaceShape {
        match self {
            Element::Earth => FaceShape::Square,
            _ => FaceShape::Equilateral,
        }
    }

    pub fn face_count(self) -> u32 {
        match self {
            Element::Fire => 4,
            Element::Air => 8,
            Element::Water => 20,
            Element::Earth => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Element::Fire => "fire",
            Element::Air => "air",
            Element::Water => "water",
            Element::Earth => "earth",
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Element {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fire" => Ok(Element::Fire),
            "air" => Ok(Element::Air),
            "water" => Ok(Element::Water),
            "earth" => Ok(Element::Earth),
            _ => Err(Error::Parse(alloc::format!("unknown element {s:?}"))),
        }
    }
}

/// An element at a size class (face side multiplier relative to the basic
/// face).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Particle {
    pub element: Element,
    pub size_class: FieldValue,
}

impl Particle {
    pub fn new(element: Element, size_class: FieldValue) -> Result<Self> {
        if !size_class.is_positive() {
            return Err(Error::NotPositive("size class"));
        }
        Ok(Particle { element, size_class })
    }

    /// Particle at the basic size.
    pub fn basic(element: Element) -> Self {
        Particle { element, size_class: FieldValue::one() }
    }
}

fn require_qty(qty: &Rational) -> Result<()> {
    if qty.is_positive() {
        Ok(())
    } else {
        Err(Error::NotPositive("quantity"))
    }
}

/// Faces carried by `qty` particles: equilateral faces for fire, air and
/// water; square faces for earth.
pub fn face_budget(p: &Particle, qty: &Rational) -> Result<Rational> {
    require_qty(qty)?;
    Ok(qty * int(p.element.face_count().into()))
}

/// Basic triangles carried by `qty` particles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleCount {
    pub kind: BasicKind,
    pub count: Rational,
}

/// Six half-equilaterals per equilateral face, four isosceles right
/// triangles per square face.
pub fn basic_triangle_budget(p: &Particle, qty: &Rational) -> Result<TriangleCount> {
    let faces = face_budget(p, qty)?;
    let shape = p.element.face_shape();
    Ok(TriangleCount { kind: shape.basic_kind(), count: faces * int(shape.triangles_per_face().into()) })
}

/// One side of a reaction entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub particle: Particle,
    pub qty: Rational,
}

impl Term {
    pub fn new(particle: Particle, qty: Rational) -> Result<Self> {
        require_qty(&qty)?;
        Ok(Term { particle, qty })
    }

    /// Basic-size particle.
    pub fn basic(element: Element, qty: Rational) -> Result<Self> {
        Self::new(Particle::basic(element), qty)
    }
}

/// A rewrite of one particle multiset into another.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Reaction {
    pub inputs: Vec<Term>,
    pub outputs: Vec<Term>,
}

impl Reaction {
    pub fn new(inputs: Vec<Term>, outputs: Vec<Term>) -> Result<Self> {
        if inputs.is_empty() || outputs.is_empty() {
            return Err(Error::InvalidArgument("a reaction needs inputs and outputs".into()));
        }
        Ok(Reaction { inputs, outputs })
    }

    /// Inputs aggregated by particle.
    pub fn input_census(&self) -> BTreeMap<Particle, Rational> {
        census(&self.inputs)
    }

    pub fn output_census(&self) -> BTreeMap<Particle, Rational> {
        census(&self.outputs)
    }
}

fn census(terms: &[Term]) -> BTreeMap<Particle, Rational> {
    let mut out: BTreeMap<Particle, Rational> = BTreeMap::new();
    for t in terms {
        *out.entry(t.particle.clone()).or_insert_with(Rational::zero) += &t.qty;
    }
    out
}

impl fmt::Display for Reaction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |terms: &[Term]| -> String {
            let parts: Vec<String> = terms
                .iter()
                .map(|t| {
                    if t.particle.size_class == FieldValue::one() {
                        alloc::format!("{} {}", t.qty, t.particle.element)
                    } else {
                        alloc::format!("{} {}[{:?}]", t.qty, t.particle.element, t.particle.size_class)
                    }
                })
                .collect();
            parts.join(" + ")
        };
        write!(f, "{} -> {}", side(&self.inputs), side(&self.outputs))
    }
}

/// A broken conservation clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReactionViolation {
    /// Earth appears on one side only, or with different square-face budgets.
    EarthConverted { input_faces: Rational, output_faces: Rational },
    /// Non-earth participants of one event must share a size class.
    MixedSizeClasses { classes: Vec<FieldValue> },
    /// Equilateral face budgets differ between the sides.
    FaceImbalance { input_faces: Rational, output_faces: Rational },
}

fn budgets(terms: &[Term]) -> (Rational, Rational) {
    let mut equilateral = Rational::zero();
    let mut square = Rational::zero();
    for t in terms {
        let faces = &t.qty * int(t.particle.element.face_count().into());
        match t.particle.element.face_shape() {
            FaceShape::Equilateral => equilateral += faces,
            FaceShape::Square => square += faces,
        }
    }
    (equilateral, square)
}

/// Equilateral and square face budgets of a multiset of terms.
pub fn face_totals(terms: &[Term]) -> (Rational, Rational) {
    budgets(terms)
}

/// Check every conservation clause; an empty list means the reaction is valid.
pub fn validate_reaction(r: &Reaction) -> Vec<ReactionViolation> {
    let mut violations = Vec::new();
    let (eq_in, sq_in) = budgets(&r.inputs);
    let (eq_out, sq_out) = budgets(&r.outputs);
    let has_earth = |terms: &[Term]| terms.iter().any(|t| t.particle.element == Element::Earth);
    if has_earth(&r.inputs) != has_earth(&r.outputs) || sq_in != sq_out {
        violations.push(ReactionViolation::EarthConverted { input_faces: sq_in, output_faces: sq_out });
    }
    let mut classes: Vec<FieldValue> = r
        .inputs
        .iter()
        .chain(&r.outputs)
        .filter(|t| t.particle.element != Element::Earth)
        .map(|t| t.particle.size_class.clone())
        .collect();
    classes.sort();
    classes.dedup();
    if classes.len() > 1 {
        violations.push(ReactionViolation::MixedSizeClasses { classes });
    }
    if eq_in != eq_out {
        violations.push(ReactionViolation::FaceImbalance { input_faces: eq_in, output_faces: eq_out });
    }
    violations
}

/// All `(fire, air, water)` quantity triples with `4a + 8b + 20c = faces`,
/// each quantity a nonnegative multiple of `1/denominator_bound` (of 1 when
/// `integral_only`). Sorted lexicographically.
pub fn enumerate_decompositions(
    faces: &Rational,
    integral_only: bool,
    denominator_bound: u32,
) -> Result<Vec<[Rational; 3]>> {
    if !faces.is_positive() {
        return Err(Error::NotPositive("face total"));
    }
    if denominator_bound == 0 {
        return Err(Error::NotPositive("denominator bound"));
    }
    let den = if integral_only { 1 } else { denominator_bound };
    let step = Rational::new(One::one(), den.into());
    // Work in units of `step`: 4a' + 8b' + 20c' = F·den over integers.
    let scaled = faces * int(den.into());
    if !scaled.is_integer() {
        return Ok(Vec::new());
    }
    let total = scaled.to_integer();
    let mut out = Vec::new();
    let mut c = BigInt::zero();
    while &c * 20 <= total {
        let rest_c = &total - &c * 20;
        let mut b = BigInt::zero();
        while &b * 8 <= rest_c {
            let rest: BigInt = &rest_c - &b * 8;
            if rest.is_multiple_of(&BigInt::from(4)) {
                let a = rest / 4;
                out.push([
                    Rational::from_integer(a) * &step,
                    Rational::from_integer(b.clone()) * &step,
                    Rational::from_integer(c.clone()) * &step,
                ]);
            }
            b += 1;
        }
        c += 1;
    }
    out.sort();
    Ok(out)
}

/// Switches for [`relative_size_audit`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AuditConfig {
    /// Exempt water from the upper side of the ordering (water variants may
    /// be larger than air). Off by default.
    pub water_unbounded: bool,
}

/// Outcome of [`relative_size_audit`].
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SizeAudit {
    Ordered,
    /// The largest variant of `larger` is not strictly smaller than the basic
    /// particle of the next element. Areas are in basic-face units.
    Counterexample {
        larger: Particle,
        smaller: Particle,
        larger_area: FieldValue,
        smaller_area: FieldValue,
    },
}

impl SizeAudit {
    pub fn is_ordered(&self) -> bool {
        matches!(self, SizeAudit::Ordered)
    }
}

/// Total face area of a particle, in units of the basic face.
pub fn face_area(p: &Particle) -> FieldValue {
    p.size_class.square().scale(&int(p.element.face_count().into()))
}

/// With size classes in `[1, bound]`, check that every fire variant is
/// strictly smaller than every air variant and every air variant strictly
/// smaller than every water variant (total face area). Earth is exempt.
pub fn relative_size_audit(bound: &FieldValue, config: AuditConfig) -> Result<SizeAudit> {
    if bound <= &FieldValue::one() {
        return Err(Error::BoundTooSmall(alloc::format!("{bound:?}")));
    }
    let mut pairs = alloc::vec![(Element::Fire, Element::Air)];
    if !config.water_unbounded {
        pairs.push((Element::Air, Element::Water));
    }
    for (small, large) in pairs {
        let biggest = Particle { element: small, size_class: bound.clone() };
        let smallest = Particle::basic(large);
        let (ba, sa) = (face_area(&biggest), face_area(&smallest));
        if ba >= sa {
            return Ok(SizeAudit::Counterexample {
                larger: biggest,
                smaller: smallest,
                larger_area: ba,
                smaller_area: sa,
            });
        }
    }
    Ok(SizeAudit::Ordered)
}

/// How many more face sizes the √2/√3 side-by-side scaling yields than the
/// plain integer scaling, up to area `n_max²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyAudit {
    pub shape: FaceShape,
    pub max_area: u64,
    /// `{n²}` up to `max_area`.
    pub economical: Vec<u64>,
    /// `{n², k·n²}` up to `max_area`, deduplicated.
    pub cornford: Vec<u64>,
    pub ratio: Rational,
    pub below_two: bool,
    /// Both families contain sizes beyond any fixed bound as `n` grows.
    pub unbounded_growth: bool,
}

pub fn cornford_family_audit(shape: FaceShape, n_max: u32) -> Result<FamilyAudit> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(alloc::format!("n_max must be at least 2, got {n_max}")));
    }
    let max_area = u64::from(n_max) * u64::from(n_max);
    let economical: Vec<u64> = (1..=u64::from(n_max)).map(|n| n * n).collect();
    let cornford: Vec<u64> =
        cornford_sequence(shape.basic_kind(), n_max)?.into_iter().filter(|&a| a <= max_area).collect();
    let ratio = Rational::new(cornford.len().into(), economical.len().into());
    Ok(FamilyAudit { shape, max_area, below_two: ratio < int(2), ratio, economical, cornford, unbounded_growth: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    fn t(e: Element, n: i64, d: i64) -> Term {
        Term::basic(e, ratio(n, d)).unwrap()
    }

    #[test]
    fn element_table() {
        assert_eq!(Element::Fire.polyhedron(), Polyhedron::Tetrahedron);
        assert_eq!(Element::Air.face_count(), 8);
        assert_eq!(Element::Water.face_count(), 20);
        assert_eq!(Element::Earth.face_shape(), FaceShape::Square);
        assert_eq!(Element::Earth.face_count(), 6);
    }

    #[test]
    fn budgets() {
        let w = Particle::basic(Element::Water);
        assert_eq!(face_budget(&w, &ratio(1, 1)), Ok(ratio(20, 1)));
        assert_eq!(face_budget(&Particle::basic(Element::Air), &ratio(1, 2)), Ok(ratio(4, 1)));
        assert!(face_budget(&Particle::basic(Element::Fire), &ratio(0, 1)).is_err());
        let fire = basic_triangle_budget(&Particle::basic(Element::Fire), &ratio(1, 1)).unwrap();
        assert_eq!(fire, TriangleCount { kind: BasicKind::HalfEquilateral, count: ratio(24, 1) });
        assert_eq!(basic_triangle_budget(&w, &ratio(1, 1)).unwrap().count, ratio(120, 1));
        let earth = basic_triangle_budget(&Particle::basic(Element::Earth), &ratio(1, 1)).unwrap();
        assert_eq!(earth, TriangleCount { kind: BasicKind::IsoscelesRight, count: ratio(24, 1) });
    }

    #[test]
    fn reactions() {
        use Element::*;
        let ok = |r: Reaction| assert_eq!(validate_reaction(&r), []);
        ok(Reaction::new(alloc::vec![t(Water, 1, 1)], alloc::vec![t(Fire, 1, 1), t(Air, 2, 1)]).unwrap());
        ok(Reaction::new(alloc::vec![t(Air, 5, 2)], alloc::vec![t(Water, 1, 1)]).unwrap());
        let bad = Reaction::new(alloc::vec![t(Earth, 1, 1)], alloc::vec![t(Fire, 6, 1)]).unwrap();
        let v = validate_reaction(&bad);
        assert!(matches!(v[0], ReactionViolation::EarthConverted { .. }));
    }

    #[test]
    fn earth_spectator_allowed() {
        use Element::*;
        let r = Reaction::new(alloc::vec![t(Earth, 1, 1), t(Air, 1, 1)], alloc::vec![t(Earth, 1, 1), t(Fire, 2, 1)])
            .unwrap();
        assert_eq!(validate_reaction(&r), []);
    }

    #[test]
    fn mixed_sizes_rejected() {
        let big = Particle::new(Element::Fire, FieldValue::ratio(5, 4)).unwrap();
        let r = Reaction::new(alloc::vec![t(Element::Air, 1, 1)], alloc::vec![Term::new(big, ratio(2, 1)).unwrap()])
            .unwrap();
        let v = validate_reaction(&r);
        assert_eq!(v.len(), 1);
        assert!(matches!(v[0], ReactionViolation::MixedSizeClasses { .. }));
    }

    #[test]
    fn imbalance_reported() {
        let r = Reaction::new(alloc::vec![t(Element::Air, 1, 1)], alloc::vec![t(Element::Fire, 3, 1)]).unwrap();
        assert_eq!(
            validate_reaction(&r),
            [ReactionViolation::FaceImbalance { input_faces: ratio(8, 1), output_faces: ratio(12, 1) }]
        );
    }

    #[test]
    fn decompositions() {
        let tri = |a, b, c| [ratio(a, 1), ratio(b, 1), ratio(c, 1)];
        assert_eq!(
            enumerate_decompositions(&ratio(20, 1), true, 1).unwrap(),
            [tri(0, 0, 1), tri(1, 2, 0), tri(3, 1, 0), tri(5, 0, 0)]
        );
        assert_eq!(enumerate_decompositions(&ratio(8, 1), true, 1).unwrap(), [tri(0, 1, 0), tri(2, 0, 0)]);
        assert_eq!(enumerate_decompositions(&ratio(4, 1), true, 1).unwrap(), [tri(1, 0, 0)]);
        assert!(enumerate_decompositions(&ratio(6, 1), true, 1).unwrap().is_empty());
        let halves = enumerate_decompositions(&ratio(20, 1), false, 2).unwrap();
        assert!(halves.contains(&[ratio(0, 1), ratio(5, 2), ratio(0, 1)]));
        assert!(enumerate_decompositions(&ratio(0, 1), true, 1).is_err());
    }

    #[test]
    fn size_audits() {
        let cfg = AuditConfig::default();
        assert!(relative_size_audit(&FieldValue::ratio(4, 3), cfg).unwrap().is_ordered());
        match relative_size_audit(&FieldValue::ratio(3, 2), cfg).unwrap() {
            SizeAudit::Counterexample { larger, smaller, larger_area, smaller_area } => {
                assert_eq!(larger.element, Element::Fire);
                assert_eq!(smaller.element, Element::Air);
                assert_eq!(larger_area, FieldValue::integer(9));
                assert_eq!(smaller_area, FieldValue::integer(8));
            }
            SizeAudit::Ordered => panic!("3/2 must break the ordering"),
        }
        assert!(!relative_size_audit(&FieldValue::sqrt2(), cfg).unwrap().is_ordered());
        assert!(relative_size_audit(&FieldValue::one(), cfg).is_err());
    }

    #[test]
    fn water_switch_only_relaxes_air_water() {
        let relaxed = AuditConfig { water_unbounded: true };
        // B² = 2.25: fire already breaks, switch or not
        assert!(!relative_size_audit(&FieldValue::ratio(3, 2), relaxed).unwrap().is_ordered());
    }

    #[test]
    fn family_audits() {
        let sq = cornford_family_audit(FaceShape::Square, 4).unwrap();
        assert_eq!(sq.economical, [1, 4, 9, 16]);
        assert_eq!(sq.cornford, [1, 2, 4, 8, 9, 16]);
        assert_eq!(sq.ratio, ratio(3, 2));
        assert!(sq.below_two);
        let eq = cornford_family_audit(FaceShape::Equilateral, 3).unwrap();
        assert_eq!(eq.cornford, [1, 3, 4, 9]);
        assert_eq!(eq.ratio, ratio(4, 3));
        assert!(cornford_family_audit(FaceShape::Square, 1).is_err());
    }
}
