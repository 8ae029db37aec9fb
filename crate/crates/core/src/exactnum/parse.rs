use alloc::format;
use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::{FieldValue, Rational};
use crate::{Error, Result};

fn parse_int(s: &str) -> Result<BigInt> {
    BigInt::from_str(s).map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

/// Parse `p`, `p/q`, a decimal `1.25`, or scientific `1e-9` / `2.5E3`
/// into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_int(num.trim())?;
        let den = parse_int(den.trim())?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(num, den));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit())
    {
        return Err(Error::Parse(format!("not a number: {s:?}")));
    }
    let mut all: String = String::from(int_part);
    all.push_str(frac_part);
    let mut value = Rational::from_integer(parse_int(&all)?);
    let shift = exp - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    if shift >= 0 {
        value *= Rational::from_integer(ten.pow(shift as u32));
    } else {
        value /= Rational::from_integer(ten.pow(shift.unsigned_abs()));
    }
    Ok(if neg { -value } else { value })
}

fn radical_index(unit: &str) -> Option<usize> {
    match unit {
        "r2" | "sqrt2" | "√2" => Some(1),
        "r3" | "sqrt3" | "√3" => Some(2),
        "r6" | "sqrt6" | "√6" => Some(3),
        _ => None,
    }
}

fn parse_term(term: &str, acc: &mut [Rational; 4]) -> Result<()> {
    let (neg, body) = match term.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, term.strip_prefix('+').unwrap_or(term)),
    };
    let (coeff, idx) = if let Some(idx) = radical_index(body) {
        (Rational::one(), idx)
    } else if let Some((c, unit)) = body.rsplit_once('*') {
        let idx = radical_index(unit).ok_or_else(|| Error::Parse(format!("unknown radical {unit:?}")))?;
        (parse_rational(c)?, idx)
    } else if let Some(pos) = ["r2", "r3", "r6", "√2", "√3", "√6", "sqrt2", "sqrt3", "sqrt6"]
        .iter()
        .find_map(|u| body.strip_suffix(u).map(|c| (c, *u)))
    {
        // juxtaposition such as "3r2" or "3√2"
        (parse_rational(pos.0)?, radical_index(pos.1).unwrap_or(0))
    } else {
        (parse_rational(body)?, 0)
    };
    acc[idx] += if neg { -coeff } else { coeff };
    Ok(())
}

/// Accepts the canonical `q0 + q1*r2 + q2*r3 + q3*r6` form as well as any
/// signed sum of terms like `3/2`, `r2`, `-2*r3`, `1/2√6`.
impl FromStr for FieldValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty field value".into()));
        }
        let mut acc: [Rational; 4] = Default::default();
        let bytes: alloc::vec::Vec<char> = compact.chars().collect();
        let mut start = 0;
        for i in 1..bytes.len() {
            let c = bytes[i];
            let prev = bytes[i - 1];
            let is_split = (c == '+' || c == '-') && !matches!(prev, '+' | '-' | '*' | '/' | 'e' | 'E');
            if is_split {
                let term: String = bytes[start..i].iter().collect();
                parse_term(&term, &mut acc)?;
                start = i;
            }
        }
        let term: String = bytes[start..].iter().collect();
        parse_term(&term, &mut acc)?;
        Ok(FieldValue::from_coords(acc))
    }
}
