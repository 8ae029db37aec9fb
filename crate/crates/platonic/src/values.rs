//! JSON forms of exact values.
//!
//! A field value travels either as its canonical text
//! `"q0 + q1*r2 + q2*r3 + q3*r6"` or as an array of four rational strings.
//! Reports carry both plus a 12-significant-digit decimal under the key
//! `approx`, which is for reading only.

use platonic_core::exactnum::parse_rational;
use platonic_core::{Enclosure, FieldValue, Interval, Rational};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::FormatError;

/// Significant digits in every `approx` field.
pub const APPROX_DIGITS: usize = 12;

/// `x` to [`APPROX_DIGITS`] significant digits, trailing zeros trimmed;
/// scientific notation outside `1e-6 ..= 1e15`.
pub fn approx_decimal(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", APPROX_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = mantissa.strip_prefix('-').map_or(("", mantissa), |m| ("-", m));
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    if !(-6..=15).contains(&exp) {
        let m = trim_fraction(&format!("{}.{}", &digits[..1], &digits[1..]));
        return format!("{sign}{m}e{exp}");
    }
    let body = if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
    } else {
        let split = exp as usize + 1;
        if split >= digits.len() {
            format!("{}{}", digits, "0".repeat(split - digits.len()))
        } else {
            format!("{}.{}", &digits[..split], &digits[split..])
        }
    };
    format!("{sign}{}", trim_fraction(&body))
}

fn trim_fraction(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    FieldValue::rational(q.clone()).to_f64()
}

/// An exact field value as reported.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactValue {
    /// Canonical text form.
    pub exact: String,
    /// Coordinates over `1, √2, √3, √6`.
    pub coords: [String; 4],
    pub approx: String,
}

impl ExactValue {
    pub fn new(x: &FieldValue) -> Self {
        ExactValue { exact: x.to_string(), coords: coords(x), approx: approx_decimal(x.to_f64()) }
    }

    pub fn value(&self) -> Result<FieldValue, FormatError> {
        from_coords(&self.coords)
    }
}

/// An exact rational as reported.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalValue {
    pub exact: String,
    pub approx: String,
}

impl RationalValue {
    pub fn new(q: &Rational) -> Self {
        RationalValue { exact: q.to_string(), approx: approx_decimal(rational_to_f64(q)) }
    }
}

/// A certified bracket `[lo, hi]` with dyadic rational ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalValue {
    pub lo: String,
    pub hi: String,
    pub width: RationalValue,
    /// Midpoint.
    pub approx: String,
}

impl IntervalValue {
    pub fn new(i: &Interval) -> Self {
        IntervalValue {
            lo: i.lo().to_string(),
            hi: i.hi().to_string(),
            width: RationalValue::new(&i.width()),
            approx: approx_decimal(rational_to_f64(&i.midpoint())),
        }
    }

    pub fn from_enclosure(e: &Enclosure) -> Self {
        Self::new(e.interval())
    }
}

pub fn coords(x: &FieldValue) -> [String; 4] {
    x.coords().clone().map(|q| q.to_string())
}

pub fn from_coords(c: &[String; 4]) -> Result<FieldValue, FormatError> {
    let mut out: [Rational; 4] = Default::default();
    for (slot, s) in out.iter_mut().zip(c) {
        *slot = parse_rational(s)?;
    }
    Ok(FieldValue::from_coords(out))
}

pub fn parse_field(s: &str) -> Result<FieldValue, FormatError> {
    s.parse::<FieldValue>().map_err(|e| FormatError(format!("cannot parse {s:?} as a field value: {e}")))
}

/// A rational from a JSON string (`"5/2"`, `"2.5"`) or number (`2.5`),
/// read exactly from its decimal text.
pub fn rational_from_json(v: &Value) -> Result<Rational, FormatError> {
    match v {
        Value::String(s) => Ok(parse_rational(s)?),
        Value::Number(n) => Ok(parse_rational(&n.to_string())?),
        other => Err(FormatError(format!("expected a rational, got {other}"))),
    }
}

/// A field value from canonical or loose text, a number, or a
/// four-element coordinate array.
pub fn field_from_json(v: &Value) -> Result<FieldValue, FormatError> {
    match v {
        Value::String(s) => parse_field(s),
        Value::Number(_) => Ok(FieldValue::rational(rational_from_json(v)?)),
        Value::Array(items) if items.len() == 4 => {
            let mut out: [Rational; 4] = Default::default();
            for (slot, item) in out.iter_mut().zip(items) {
                *slot = rational_from_json(item)?;
            }
            Ok(FieldValue::from_coords(out))
        }
        other => Err(FormatError(format!("expected a field value, got {other}"))),
    }
}
