//! JSON encodings of cyclotomic numbers, group-ring elements and pairs.
//!
//! ```text
//! CycloNum        {"order": N, "coeffs": [[num, den], ...]}
//! group ring elem {"group": [n1, ...], "terms": [{"exp": [...], "coeff": c}, ...]}
//! pair            {"s": <group ring elem>, "t": <group ring elem>}
//! ```
//!
//! Integers that do not fit in an `i64` are written as decimal strings.
//! Fractions are in lowest terms with a positive denominator; terms follow
//! the canonical element order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::cyclotomic::{CycloNum, CyclotomicField};
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement, GroupRingElem, Scalar};
use crate::pcr::PairElem;

pub trait ToJson {
    fn to_json(&self) -> Value;
}

pub fn bigint_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

impl ToJson for BigInt {
    fn to_json(&self) -> Value {
        bigint_json(self)
    }
}

/// Exact form only.
impl ToJson for CycloNum {
    fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs()
            .iter()
            .map(|q| json!([bigint_json(q.numer()), bigint_json(q.denom())]))
            .collect();
        json!({"order": self.order(), "coeffs": coeffs})
    }
}

fn display_round(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Exact form plus a rounded complex approximation under `"display_only"`.
pub fn cyclo_display_json(x: &CycloNum) -> Value {
    let mut v = x.to_json();
    let (re, im) = x.to_complex();
    v["display_only"] = json!({"re": display_round(re), "im": display_round(im)});
    v
}

pub fn element_json(e: &GroupElement) -> Value {
    json!(e.exponents())
}

pub fn group_ring_json_with<R: Scalar>(x: &GroupRingElem<R>, coeff: impl Fn(&R) -> Value) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(e, v)| json!({"exp": e.exponents(), "coeff": coeff(v)}))
        .collect();
    json!({"group": x.group().orders(), "terms": terms})
}

impl<R: Scalar + ToJson> ToJson for GroupRingElem<R> {
    fn to_json(&self) -> Value {
        group_ring_json_with(self, ToJson::to_json)
    }
}

impl<R: Scalar + ToJson> ToJson for PairElem<R> {
    fn to_json(&self) -> Value {
        json!({"s": self.s_part().to_json(), "t": self.t_part().to_json()})
    }
}

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        pointer: pointer.into(),
        message: message.into(),
    }
}

/// Reads an integer given as a JSON number or a decimal string.
pub fn parse_bigint(v: &Value, pointer: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(schema(pointer, "expected an integer"))
            }
        }
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| schema(pointer, "expected an integer string")),
        _ => Err(schema(pointer, "expected an integer")),
    }
}

pub fn parse_usize_array(v: &Value, pointer: &str) -> Result<Vec<usize>> {
    let arr = v
        .as_array()
        .ok_or_else(|| schema(pointer, "expected an array of nonnegative integers"))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| {
            x.as_u64()
                .and_then(|u| usize::try_from(u).ok())
                .ok_or_else(|| schema(format!("{pointer}/{i}"), "expected a nonnegative integer"))
        })
        .collect()
}

pub fn parse_cyclo(v: &Value, field: &CyclotomicField, pointer: &str) -> Result<CycloNum> {
    let obj = v
        .as_object()
        .ok_or_else(|| schema(pointer, "expected a cyclotomic number object"))?;
    let order = obj
        .get("order")
        .and_then(Value::as_u64)
        .ok_or_else(|| schema(format!("{pointer}/order"), "expected a positive integer"))?;
    if order as usize != field.order() {
        return Err(schema(
            format!("{pointer}/order"),
            format!("expected order {}", field.order()),
        ));
    }
    let coeffs = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| schema(format!("{pointer}/coeffs"), "expected an array"))?;
    let mut rationals = Vec::with_capacity(coeffs.len());
    for (i, c) in coeffs.iter().enumerate() {
        let p = format!("{pointer}/coeffs/{i}");
        let pair = c
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| schema(&p, "expected [numerator, denominator]"))?;
        let num = parse_bigint(&pair[0], &format!("{p}/0"))?;
        let den = parse_bigint(&pair[1], &format!("{p}/1"))?;
        if den == BigInt::from(0) {
            return Err(schema(format!("{p}/1"), "zero denominator"));
        }
        rationals.push(BigRational::new(num, den));
    }
    CycloNum::from_coeffs(field, &rationals).map_err(|e| schema(format!("{pointer}/coeffs"), e.to_string()))
}

/// Parses a `{"group": ..., "terms": ...}` document with coefficients read by `coeff`.
pub fn parse_group_ring<R: Scalar>(
    v: &Value,
    pointer: &str,
    coeff: impl Fn(&Value, &AbelianGroup, &str) -> Result<R>,
) -> Result<GroupRingElem<R>> {
    let obj: &Map<String, Value> = v
        .as_object()
        .ok_or_else(|| schema(pointer, "expected a group ring element object"))?;
    let orders = parse_usize_array(
        obj.get("group")
            .ok_or_else(|| schema(format!("{pointer}/group"), "missing"))?,
        &format!("{pointer}/group"),
    )?;
    let group = AbelianGroup::new(&orders).map_err(|e| schema(format!("{pointer}/group"), e.to_string()))?;
    let terms = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| schema(format!("{pointer}/terms"), "expected an array"))?;
    let mut parsed = Vec::with_capacity(terms.len());
    for (i, t) in terms.iter().enumerate() {
        let p = format!("{pointer}/terms/{i}");
        let exp = parse_usize_array(
            t.get("exp").ok_or_else(|| schema(format!("{p}/exp"), "missing"))?,
            &format!("{p}/exp"),
        )?;
        let e = group
            .element(&exp)
            .map_err(|e| schema(format!("{p}/exp"), e.to_string()))?;
        let c = coeff(
            t.get("coeff").ok_or_else(|| schema(format!("{p}/coeff"), "missing"))?,
            &group,
            &format!("{p}/coeff"),
        )?;
        parsed.push((e, c));
    }
    GroupRingElem::from_terms(&group, parsed)
}
