//! Acceptance gate: one PASS/FAIL line per criterion. Exits nonzero when
//! any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{brute_force_decompositions, decimal_sign, field_value, positive_rational, q};
use num_rational::BigRational;
use platonic::reactions::{default_rules, parse_state};
use platonic::trace::to_json_lines;
use platonic_core::elements::{
    enumerate_decompositions, relative_size_audit, validate_reaction, AuditConfig, Element, Particle, Reaction,
    ReactionViolation, SizeAudit, Term,
};
use platonic_core::proportion::{check_two_means, construct_two_means, Magnitude};
use platonic_core::simulate::{conservation_report, run};
use platonic_core::tiling::{
    cornford_scale, economical_equilateral, economical_square, revisited_face, revisited_scale, symmetry_order,
    timaeus_equilateral, timaeus_square, validate, BasicKind, Mode, Target, DEFAULT_GRID,
};
use platonic_core::FieldValue;
use proptest::test_runner::{Config, TestRunner};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, format!("{what} took {elapsed:?}, limit {limit:?}"))
}

fn basic(e: Element, n: i64, d: i64) -> Term {
    Term::basic(e, q(n, d)).unwrap()
}

fn reaction(inputs: Vec<Term>, outputs: Vec<Term>) -> Reaction {
    Reaction::new(inputs, outputs).unwrap()
}

fn reaction_fidelity() -> Check {
    use Element::*;
    let start = Instant::now();
    let valid = [
        reaction(vec![basic(Water, 1, 1)], vec![basic(Fire, 1, 1), basic(Air, 2, 1)]),
        reaction(vec![basic(Air, 1, 1)], vec![basic(Fire, 2, 1)]),
        reaction(vec![basic(Fire, 2, 1)], vec![basic(Air, 1, 1)]),
        reaction(vec![basic(Air, 5, 2)], vec![basic(Water, 1, 1)]),
    ];
    for r in &valid {
        let v = validate_reaction(r);
        ensure(v.is_empty(), format!("{r} rejected: {v:?}"))?;
    }
    let earth_sources = [
        vec![basic(Fire, 6, 1)],
        vec![basic(Air, 3, 1)],
        vec![basic(Water, 6, 5)],
        vec![basic(Fire, 1, 1), basic(Air, 1, 1)],
        vec![basic(Water, 1, 1)],
    ];
    for outputs in earth_sources {
        let r = reaction(vec![basic(Earth, 1, 1)], outputs);
        let v = validate_reaction(&r);
        ensure(v.iter().any(|x| matches!(x, ReactionViolation::EarthConverted { .. })), format!("{r} accepted"))?;
    }
    within(start.elapsed(), Duration::from_secs(1), "reaction checks")?;
    Ok(format!("4 reactions valid, 5 earth conversions rejected in {:?}", start.elapsed()))
}

fn enumeration_oracle() -> Check {
    let got: Vec<(i64, i64, i64)> = enumerate_decompositions(&q(20, 1), true, 1)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|t| {
            let v: Vec<i64> = t.iter().map(|x| x.to_integer().try_into().unwrap()).collect();
            (v[0], v[1], v[2])
        })
        .collect();
    let expected = vec![(0, 0, 1), (1, 2, 0), (3, 1, 0), (5, 0, 0)];
    ensure(got == expected, format!("got {got:?}"))?;
    ensure(got == brute_force_decompositions(20), "differs from brute force")?;
    ensure(got.contains(&(1, 2, 0)) && got.contains(&(5, 0, 0)), "named decompositions missing")?;
    Ok(format!("{got:?}"))
}

fn two_mean_identity() -> Check {
    let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });
    runner
        .run(&(positive_rational(), positive_rational()), |(a, r)| {
            let t: Vec<FieldValue> = (0..4).map(|k| FieldValue::rational(&a * num_traits::pow(r.clone(), k))).collect();
            let m: Vec<Magnitude> = t.iter().cloned().map(Magnitude::Exact).collect();
            let zero = BigRational::from_integer(0.into());
            assert!(check_two_means(&m[0], &m[1], &m[2], &m[3], &zero).unwrap());
            assert_eq!(t[1].pow(3), &t[0].square() * &t[3]);
            Ok(())
        })
        .map_err(|e| e.to_string())?;

    let width = common::q(1, 1_000_000_000);
    let tol = common::q(1, 1_000_000);
    let (one, two) = (FieldValue::one(), FieldValue::integer(2));
    let (c, d) = construct_two_means(&one, &two, &width).map_err(|e| e.to_string())?;
    let (ci, di) = (c.interval(), d.interval());
    ensure(ci.width() <= width && di.width() <= width, "enclosures wider than 1e-9")?;
    let checked =
        check_two_means(&Magnitude::Exact(one), &c, &d, &Magnitude::Exact(two), &tol).map_err(|e| e.to_string())?;
    ensure(checked, "enclosure chain fails check_two_means")?;
    let two_q = q(2, 1);
    let residual = (&ci.pow(3) - &platonic_core::Interval::point(two_q.clone())).magnitude();
    ensure(residual < tol, format!("residual bound {residual} not below 1e-6"))?;
    // independent bracket of the cube root of 2
    let (lo, hi) = (ci.lo(), ci.hi());
    ensure(lo * lo * lo <= two_q && two_q <= hi * hi * hi, "enclosure misses the cube root of 2")?;
    Ok(format!("1000 exact chains; |c^3 - 2| <= {:.3e}", platonic::values::rational_to_f64(&residual)))
}

fn symmetry_separation() -> Check {
    let start = Instant::now();
    let order = |d| symmetry_order(&d).map_err(|e| e.to_string());
    let ts = order(timaeus_square(FieldValue::one()).unwrap())?;
    let es = order(economical_square(FieldValue::one()).unwrap())?;
    let te = order(timaeus_equilateral(FieldValue::integer(2)).unwrap())?;
    let ee = order(economical_equilateral(FieldValue::integer(2)).unwrap())?;
    ensure(ts == 8 && ts > es, format!("square orders {ts} vs {es}"))?;
    ensure(te == 6 && ee == 2, format!("equilateral orders {te} vs {ee}"))?;
    within(start.elapsed(), Duration::from_secs(1), "stabilizer search")?;
    Ok(format!("square {ts} > {es}, equilateral {te} > {ee}, {:?}", start.elapsed()))
}

fn scaling_ratios() -> Check {
    let err = |e: platonic_core::Error| e.to_string();
    let iso = cornford_scale(BasicKind::IsoscelesRight, 2).map_err(err)?;
    let half = cornford_scale(BasicKind::HalfEquilateral, 3).map_err(err)?;
    ensure(iso.area_ratio == FieldValue::integer(2), format!("isosceles area ratio {:?}", iso.area_ratio))?;
    ensure(half.area_ratio == FieldValue::integer(3), format!("half-equilateral area ratio {:?}", half.area_ratio))?;
    for c in [&iso, &half] {
        ensure(validate(&c.dissection, DEFAULT_GRID).passed(), "side-by-side composition invalid")?;
    }
    for kind in [BasicKind::IsoscelesRight, BasicKind::HalfEquilateral] {
        let r = revisited_scale(kind);
        ensure(r.side_ratio == FieldValue::ratio(3, 2), format!("side ratio {:?}", r.side_ratio))?;
        ensure(r.area_ratio == FieldValue::ratio(9, 4), format!("area ratio {:?}", r.area_ratio))?;
        ensure(validate(&r.dissection, DEFAULT_GRID).passed(), "three-copy composition does not cover")?;
    }
    let face = revisited_face(BasicKind::IsoscelesRight).map_err(err)?;
    let d = &face.dissection;
    ensure(
        matches!(d.target, Target::Square { .. }) && d.mode == Mode::Covering,
        "larger face is not a covered square",
    )?;
    ensure(d.pieces.len() == 12, format!("{} pieces", d.pieces.len()))?;
    ensure(
        d.pieces
            .iter()
            .all(|p| p.basic().is_some_and(|b| b.kind == BasicKind::IsoscelesRight && b.scale == FieldValue::one())),
        "a piece is not a basic isosceles triangle",
    )?;
    let check = validate(d, DEFAULT_GRID);
    ensure(check.passed(), format!("12-piece square fails: {:?}", check.violations.first()))?;
    ensure(face.side_ratio == FieldValue::ratio(3, 2) && face.area_ratio == FieldValue::ratio(9, 4), "face ratios")?;
    Ok(format!("areas 2 and 3; revisited 3/2 and 9/4; 12-piece square covered ({} probes)", check.probes))
}

fn bound_audit() -> Check {
    let audit = |b: FieldValue| relative_size_audit(&b, AuditConfig::default()).map_err(|e| e.to_string());
    let b = FieldValue::ratio(4, 3);
    ensure(b.square() == FieldValue::ratio(16, 9), "4/3 squared")?;
    ensure(audit(b)?.is_ordered(), "B = 4/3 not ordered")?;
    match audit(FieldValue::ratio(3, 2))? {
        SizeAudit::Counterexample { larger, smaller, larger_area, smaller_area } => {
            ensure(larger == Particle { element: Element::Fire, size_class: FieldValue::ratio(3, 2) }, "larger")?;
            ensure(smaller == Particle::basic(Element::Air), "smaller")?;
            ensure(larger_area == FieldValue::integer(9) && smaller_area == FieldValue::integer(8), "areas 9 > 8")?;
        }
        SizeAudit::Ordered => return Err("B = 3/2 passed".into()),
    }
    ensure(!audit(FieldValue::sqrt2())?.is_ordered(), "B = sqrt2 passed strict ordering")?;
    Ok("4/3 ordered; 3/2 gives fire 9 >= air 8; sqrt2 fails".into())
}

fn conservation_dynamics() -> Check {
    let rules = default_rules();
    let s0 = parse_state(r#"{"water": 50}"#).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let trace = run(&s0, &rules, 10_000, 20_240_601);
    let elapsed = start.elapsed();
    ensure(trace.steps.len() == 10_000, format!("stopped after {} steps", trace.steps.len()))?;
    let scalene = q(6000, 1);
    let zero = q(0, 1);
    ensure(trace.steps.iter().all(|s| s.budgets.scalene == scalene && s.budgets.earth == zero), "budget drift")?;
    ensure(conservation_report(&trace).conserved(), "conservation report flags drift")?;
    let replay = run(&s0, &rules, 10_000, 20_240_601);
    ensure(to_json_lines(&trace, &rules) == to_json_lines(&replay, &rules), "replay differs")?;
    within(elapsed, Duration::from_secs(5), "10^4-step run")?;
    Ok(format!("scalene 6000 and earth 0 over 10000 steps; replay identical; run {elapsed:?}"))
}

fn field_soundness() -> Check {
    let mut runner = TestRunner::new(Config { cases: 10_000, failure_persistence: None, ..Config::default() });
    runner
        .run(&(field_value(), field_value(), field_value()), |(x, y, z)| {
            assert_eq!(&x + &y, &y + &x);
            assert_eq!(&x * &y, &y * &x);
            assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            assert!((&x + &(-&x)).is_zero());
            if !x.is_zero() {
                assert_eq!(&x * &x.inverse().unwrap(), FieldValue::one());
            }
            Ok(())
        })
        .map_err(|e| format!("field axioms: {e}"))?;
    let mut runner = TestRunner::new(Config { cases: 10_000, failure_persistence: None, ..Config::default() });
    runner
        .run(&field_value(), |x| {
            match decimal_sign(&x, 60) {
                Some(s) => assert_eq!(x.signum(), s, "{x:?}"),
                None => assert!(x.is_zero(), "oracle undecided on {x:?}"),
            }
            Ok(())
        })
        .map_err(|e| format!("sign: {e}"))?;
    let root = FieldValue::ratio(9, 4).sqrt_in_field().map_err(|e| e.to_string())?;
    ensure(root == Some(FieldValue::ratio(3, 2)), format!("sqrt(9/4) = {root:?}"))?;
    let five = FieldValue::integer(5).sqrt_in_field().map_err(|e| e.to_string())?;
    ensure(five.is_none(), "sqrt(5) found in the field")?;
    Ok("10000 axiom cases, 10000 signs vs 60-digit evaluation, sqrt(9/4) = 3/2, sqrt(5) absent".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("reaction fidelity", reaction_fidelity),
        ("enumeration oracle", enumeration_oracle),
        ("two-mean identity", two_mean_identity),
        ("symmetry separation", symmetry_separation),
        ("scaling ratios", scaling_ratios),
        ("bound audit", bound_audit),
        ("conservation under dynamics", conservation_dynamics),
        ("field soundness", field_soundness),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(msg)
        });
        match result {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
