//! JSON encoding of exact values.
//!
//! A rational is an integer when its denominator is 1 and a `[numerator,
//! denominator]` pair otherwise. Integers that do not fit in 64 bits are
//! emitted as decimal strings. A `BiPoly` is a rectangular matrix, row =
//! t-exponent, column = u-exponent.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use super::{ArithError, BiPoly, Rat, UniPoly, Var};

fn bigint_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

fn bigint_from_json(v: &Value) -> Result<BigInt, ArithError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| ArithError::Json(format!("non-integer number {n}"))),
        Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| ArithError::Json(format!("bad integer string {s:?}"))),
        other => Err(ArithError::Json(format!("expected integer, got {other}"))),
    }
}

pub fn rat_to_json(r: &Rat) -> Value {
    if super::is_integer(r) {
        bigint_to_json(r.numer())
    } else {
        Value::Array(vec![bigint_to_json(r.numer()), bigint_to_json(r.denom())])
    }
}

pub fn rat_from_json(v: &Value) -> Result<Rat, ArithError> {
    match v {
        Value::Array(pair) if pair.len() == 2 => {
            let n = bigint_from_json(&pair[0])?;
            let d = bigint_from_json(&pair[1])?;
            if d.is_zero() {
                return Err(ArithError::Json("zero denominator".into()));
            }
            Ok(Rat::new(n, d))
        }
        other => bigint_from_json(other).map(Rat::from_integer),
    }
}

impl BiPoly {
    pub fn to_json(&self) -> Value {
        let width = (self.deg_u() + 1).max(0) as usize;
        Value::Array(
            self.rows()
                .iter()
                .map(|r| Value::Array((0..width).map(|k| rat_to_json(&r.coeff(k))).collect()))
                .collect(),
        )
    }

    /// Accepts ragged rows; missing entries are zero.
    pub fn from_json(v: &Value) -> Result<Self, ArithError> {
        let rows = v
            .as_array()
            .ok_or_else(|| ArithError::Json("polynomial must be an array of rows".into()))?;
        rows.iter()
            .map(|row| {
                let cells = row
                    .as_array()
                    .ok_or_else(|| ArithError::Json("row must be an array".into()))?;
                cells
                    .iter()
                    .map(rat_from_json)
                    .collect::<Result<Vec<_>, _>>()
                    .map(|c| UniPoly::new(Var::U, c))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BiPoly::new)
    }
}

impl UniPoly {
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(rat_to_json).collect())
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        BiPoly::from_json(&v).map_err(D::Error::custom)
    }
}
