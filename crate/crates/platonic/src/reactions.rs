//! Reaction, rule-set and state documents.
//!
//! JSON reaction: `{"inputs": [{"element", "size_class", "qty"}], "outputs": [...]}`
//! where `size_class` defaults to 1 and `qty` is a rational string or a
//! JSON number. The compact text form is
//! `1 water -> 1 fire + 2 air`, optionally wrapped in braces, with `→` for
//! `->`, `½` for a trailing half and `air[3/2]` or `air@3/2` for a size
//! class.
//!
//! A state is either an object mapping element names to basic-size
//! quantities (`{"water": 50}`) or an array of terms.

use platonic_core::elements::{validate_reaction, Element, FaceShape, Particle, Reaction, ReactionViolation, Term};
use platonic_core::exactnum::parse_rational;
use platonic_core::simulate::{RuleSet, State};
use platonic_core::{FieldValue, Rational};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::values::{field_from_json, parse_field, rational_from_json, ExactValue, RationalValue};
use crate::FormatError;

/// One term as written out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub element: String,
    /// Canonical text of the size class.
    pub size_class: String,
    pub qty: String,
}

impl TermDoc {
    pub fn new(t: &Term) -> Self {
        Self::from_parts(&t.particle, &t.qty)
    }

    pub fn from_parts(p: &Particle, qty: &Rational) -> Self {
        TermDoc { element: p.element.name().into(), size_class: p.size_class.to_string(), qty: qty.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReactionDoc {
    pub inputs: Vec<TermDoc>,
    pub outputs: Vec<TermDoc>,
}

impl ReactionDoc {
    pub fn new(r: &Reaction) -> Self {
        ReactionDoc {
            inputs: r.inputs.iter().map(TermDoc::new).collect(),
            outputs: r.outputs.iter().map(TermDoc::new).collect(),
        }
    }
}

fn element(s: &str) -> Result<Element, FormatError> {
    s.trim().parse::<Element>().map_err(|_| FormatError(format!("unknown element {s:?}")))
}

fn term_from_json(v: &Value) -> Result<Term, FormatError> {
    let obj = v.as_object().ok_or_else(|| FormatError(format!("expected a term object, got {v}")))?;
    let name =
        obj.get("element").and_then(Value::as_str).ok_or_else(|| FormatError("term is missing \"element\"".into()))?;
    let size = match obj.get("size_class") {
        Some(v) => field_from_json(v)?,
        None => FieldValue::one(),
    };
    let qty = match obj.get("qty") {
        Some(v) => rational_from_json(v)?,
        None => Rational::from_integer(1.into()),
    };
    Ok(Term::new(Particle::new(element(name)?, size)?, qty)?)
}

fn terms_from_json(v: Option<&Value>, side: &str) -> Result<Vec<Term>, FormatError> {
    let items =
        v.and_then(Value::as_array).ok_or_else(|| FormatError(format!("reaction is missing the \"{side}\" array")))?;
    items.iter().map(term_from_json).collect()
}

pub fn reaction_from_json(v: &Value) -> Result<Reaction, FormatError> {
    let inputs = terms_from_json(v.get("inputs"), "inputs")?;
    let outputs = terms_from_json(v.get("outputs"), "outputs")?;
    Ok(Reaction::new(inputs, outputs)?)
}

fn parse_qty(s: &str) -> Result<Rational, FormatError> {
    let half = Rational::new(1.into(), 2.into());
    match s.strip_suffix('½') {
        Some("") => Ok(half),
        Some(whole) => Ok(parse_rational(whole)? + half),
        None => Ok(parse_rational(s)?),
    }
}

fn parse_compact_term(s: &str) -> Result<Term, FormatError> {
    let s = s.trim();
    let (qty, rest) = match s.split_once(char::is_whitespace) {
        Some((q, rest)) => (parse_qty(q)?, rest.trim()),
        None => {
            // "2air" or bare "air"
            let split = s.find(|c: char| c.is_alphabetic()).unwrap_or(s.len());
            let q = &s[..split];
            let qty = if q.is_empty() { Rational::from_integer(1.into()) } else { parse_qty(q)? };
            (qty, &s[split..])
        }
    };
    let (name, size) = if let Some((name, size)) = rest.split_once('@') {
        (name, parse_field(size)?)
    } else if let Some((name, size)) = rest.strip_suffix(']').and_then(|r| r.split_once('[')) {
        (name, parse_field(size)?)
    } else {
        (rest, FieldValue::one())
    };
    Ok(Term::new(Particle::new(element(name)?, size)?, qty)?)
}

/// Split on `+` outside brackets.
fn split_terms(side: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in side.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&side[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&side[start..]);
    out
}

pub fn parse_compact_reaction(s: &str) -> Result<Reaction, FormatError> {
    let s = s.trim();
    let s = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')).unwrap_or(s);
    let s = s.replace('→', "->");
    let (lhs, rhs) =
        s.split_once("->").ok_or_else(|| FormatError(format!("expected \"inputs -> outputs\", got {s:?}")))?;
    let side = |text: &str| -> Result<Vec<Term>, FormatError> {
        split_terms(text).into_iter().filter(|t| !t.trim().is_empty()).map(parse_compact_term).collect()
    };
    Ok(Reaction::new(side(lhs)?, side(rhs)?)?)
}

/// JSON when the text parses as a JSON object, compact form otherwise.
pub fn parse_reaction(s: &str) -> Result<Reaction, FormatError> {
    match serde_json::from_str::<Value>(s) {
        Ok(v @ Value::Object(_)) => reaction_from_json(&v),
        Ok(Value::String(inner)) => parse_compact_reaction(&inner),
        _ => parse_compact_reaction(s),
    }
}

/// A JSON array whose items are reaction objects or compact strings.
pub fn parse_rules(s: &str) -> Result<RuleSet, FormatError> {
    let v: Value = serde_json::from_str(s)?;
    let items = v.as_array().ok_or_else(|| FormatError("rules must be a JSON array".into()))?;
    let rules = items
        .iter()
        .map(|item| match item {
            Value::String(text) => parse_compact_reaction(text),
            other => reaction_from_json(other),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RuleSet::new(rules)?)
}

/// The three non-earth transformations: water into fire and air, fire
/// fusing into air, air splitting into fire.
pub fn default_rules() -> RuleSet {
    let rules = ["1 water -> 1 fire + 2 air", "2 fire -> 1 air", "1 air -> 2 fire"]
        .map(|r| parse_compact_reaction(r).expect("built-in rule parses"));
    RuleSet::new(rules.to_vec()).expect("built-in rules are valid")
}

pub fn parse_state(s: &str) -> Result<State, FormatError> {
    let v: Value = serde_json::from_str(s)?;
    let mut state = State::new();
    match &v {
        Value::Object(map) => {
            for (name, qty) in map {
                state.credit(Particle::basic(element(name)?), nonnegative(rational_from_json(qty)?)?)?;
            }
        }
        Value::Array(items) => {
            for item in items {
                let t = term_from_json(item)?;
                state.credit(t.particle, t.qty)?;
            }
        }
        other => return Err(FormatError(format!("expected a state object or array, got {other}"))),
    }
    Ok(state)
}

fn nonnegative(q: Rational) -> Result<Rational, FormatError> {
    if q < Rational::from_integer(0.into()) {
        Err(FormatError(format!("negative quantity {q}")))
    } else {
        Ok(q)
    }
}

pub fn state_doc(s: &State) -> Vec<TermDoc> {
    s.iter().map(|(p, q)| TermDoc::from_parts(p, q)).collect()
}

/// One broken clause with its details.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub clause: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_faces: Option<RationalValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_faces: Option<RationalValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size_classes: Option<Vec<ExactValue>>,
}

impl ViolationDoc {
    pub fn new(v: &ReactionViolation) -> Self {
        match v {
            ReactionViolation::EarthConverted { input_faces, output_faces } => ViolationDoc {
                clause: "earth-exclusion".into(),
                message: "earth neither forms from nor turns into other elements".into(),
                input_faces: Some(RationalValue::new(input_faces)),
                output_faces: Some(RationalValue::new(output_faces)),
                size_classes: None,
            },
            ReactionViolation::MixedSizeClasses { classes } => ViolationDoc {
                clause: "single-size-class".into(),
                message: "non-earth participants must share one size class".into(),
                input_faces: None,
                output_faces: None,
                size_classes: Some(classes.iter().map(ExactValue::new).collect()),
            },
            ReactionViolation::FaceImbalance { input_faces, output_faces } => ViolationDoc {
                clause: "face-balance".into(),
                message: "equilateral face totals differ between the sides".into(),
                input_faces: Some(RationalValue::new(input_faces)),
                output_faces: Some(RationalValue::new(output_faces)),
                size_classes: None,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceTotals {
    pub equilateral: RationalValue,
    pub square: RationalValue,
}

/// Output of `platonic react`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReactionReport {
    pub schema: String,
    pub reaction: String,
    pub inputs: Vec<TermDoc>,
    pub outputs: Vec<TermDoc>,
    pub valid: bool,
    pub input_faces: FaceTotals,
    pub output_faces: FaceTotals,
    pub violations: Vec<ViolationDoc>,
}

fn totals(terms: &[Term]) -> FaceTotals {
    let mut eq = Rational::from_integer(0.into());
    let mut sq = eq.clone();
    for t in terms {
        let faces = &t.qty * Rational::from_integer(t.particle.element.face_count().into());
        match t.particle.element.face_shape() {
            FaceShape::Equilateral => eq += faces,
            FaceShape::Square => sq += faces,
        }
    }
    FaceTotals { equilateral: RationalValue::new(&eq), square: RationalValue::new(&sq) }
}

impl ReactionReport {
    pub fn new(r: &Reaction) -> Self {
        let violations: Vec<ViolationDoc> = validate_reaction(r).iter().map(ViolationDoc::new).collect();
        let doc = ReactionDoc::new(r);
        ReactionReport {
            schema: format!("reaction-report/v{}", crate::SCHEMA_VERSION),
            reaction: r.to_string(),
            inputs: doc.inputs,
            outputs: doc.outputs,
            valid: violations.is_empty(),
            input_faces: totals(&r.inputs),
            output_faces: totals(&r.outputs),
            violations,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn compact_forms() {
        let r = parse_reaction("{1 water → 1 fire + 2 air}").unwrap();
        assert_eq!(r.inputs, vec![Term::basic(Element::Water, q(1, 1)).unwrap()]);
        assert_eq!(r.outputs.len(), 2);
        let half = parse_reaction("2½ air -> water").unwrap();
        assert_eq!(half.inputs[0].qty, q(5, 2));
        let sized = parse_reaction("2 fire[3/2] -> air@3/2").unwrap();
        assert_eq!(sized.outputs[0].particle.size_class, FieldValue::ratio(3, 2));
        assert!(parse_reaction("water fire").is_err());
        assert!(parse_reaction("1 aether -> 1 fire").is_err());
        assert!(parse_reaction("-1 water -> 1 fire").is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["5/2 air -> 1 water", "2 fire[r2] -> 1 air[r2]", "1 earth -> 1 earth"] {
            let r = parse_reaction(text).unwrap();
            assert_eq!(parse_reaction(&r.to_string()).unwrap(), r);
        }
    }

    #[test]
    fn json_form() {
        let text = r#"{"inputs":[{"element":"air","size_class":"1","qty":2.5}],
                       "outputs":[{"element":"water","qty":"1"}]}"#;
        let r = parse_reaction(text).unwrap();
        assert_eq!(r, parse_reaction("5/2 air -> water").unwrap());
        let doc = serde_json::to_string(&ReactionDoc::new(&r)).unwrap();
        assert_eq!(parse_reaction(&doc).unwrap(), r);
        assert!(parse_reaction(r#"{"inputs":[]}"#).is_err());
    }

    #[test]
    fn states_and_rules() {
        let s = parse_state(r#"{"water": 50, "air": "1/2"}"#).unwrap();
        assert_eq!(s.get(&Particle::basic(Element::Water)), q(50, 1));
        let back = serde_json::to_string(&state_doc(&s)).unwrap();
        assert_eq!(parse_state(&back).unwrap(), s);
        assert!(parse_state(r#"{"water": -1}"#).is_err());
        let rules = parse_rules(
            r#"["1 water -> 1 fire + 2 air", {"inputs":[{"element":"fire","qty":2}],"outputs":[{"element":"air"}]}]"#,
        )
        .unwrap();
        assert_eq!(rules.rules().len(), 2);
        assert!(parse_rules(r#"["1 earth -> 6 fire"]"#).is_err());
        assert_eq!(default_rules().rules().len(), 3);
    }

    #[test]
    fn report_details() {
        let bad = ReactionReport::new(&parse_reaction("1 earth -> 2 fire").unwrap());
        assert!(!bad.valid);
        let clauses: Vec<&str> = bad.violations.iter().map(|v| v.clause.as_str()).collect();
        assert_eq!(clauses, ["earth-exclusion", "face-balance"]);
        let good = ReactionReport::new(&parse_reaction("1 water -> 1 fire + 2 air").unwrap());
        assert!(good.valid);
        assert_eq!(good.input_faces.equilateral.exact, "20");
    }
}
