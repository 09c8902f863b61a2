//! Output records and their JSON encoding.
//!
//! Exact kinds encode losslessly: rationals as `"p/q"` strings, cyclotomic
//! numbers as `{"modulus", "coeffs"}` in the canonical basis, special values
//! as `{"pi_power", "coeff"}`, polynomials as ascending coefficient lists.
//! Decoding and re-encoding gives the same bytes.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use zeta_exact::exact::{parse_rational, CycPolynomial, Cyclotomic, Polynomial, Rational, RationalPolynomial};
use zeta_exact::numeric::Residual;
use zeta_exact::SpecialValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Rational,
    Cyclotomic,
    SpecialValue,
    Polynomial,
    Residual,
    Report,
}

impl Kind {
    pub fn is_exact(self) -> bool {
        !matches!(self, Kind::Residual | Kind::Report)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub op: String,
    pub args: Map<String, Value>,
}

impl Provenance {
    pub fn new(op: &str, args: Value) -> Self {
        let args = match args {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        Provenance { op: op.to_string(), args }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OutputRecord {
    pub kind: Kind,
    pub payload: Value,
    pub provenance: Provenance,
    /// Human-readable form, not serialized.
    #[serde(skip)]
    pub text: String,
}

impl OutputRecord {
    pub fn new(kind: Kind, payload: Value, text: impl Into<String>, provenance: Provenance) -> Self {
        OutputRecord {
            kind,
            payload,
            provenance,
            text: text.into(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        serde_json::from_str(s).map_err(|e| e.to_string())
    }

    pub fn rational(r: &Rational, p: Provenance) -> Self {
        Self::new(Kind::Rational, encode_rational(r), r.to_string(), p)
    }

    pub fn cyclotomic(c: &Cyclotomic, p: Provenance) -> Self {
        Self::new(Kind::Cyclotomic, encode_cyclotomic(c), c.to_string(), p)
    }

    pub fn special_value(v: &SpecialValue, p: Provenance) -> Self {
        Self::new(Kind::SpecialValue, encode_special_value(v), v.to_string(), p)
    }

    pub fn polynomial(poly: &RationalPolynomial, p: Provenance) -> Self {
        Self::new(Kind::Polynomial, encode_rational_polynomial(poly), poly.to_string(), p)
    }

    pub fn cyc_polynomial(poly: &CycPolynomial, p: Provenance) -> Self {
        Self::new(Kind::Polynomial, encode_cyc_polynomial(poly), poly.to_string(), p)
    }

    pub fn residual(r: &Residual, p: Provenance) -> Self {
        let payload = json!({
            "value": r.value.to_string_digits(6),
            "bound": r.bound.to_string_digits(3),
            "pass": r.pass,
        });
        Self::new(Kind::Residual, payload, r.to_string(), p)
    }

    pub fn report(payload: Value, text: impl Into<String>, p: Provenance) -> Self {
        Self::new(Kind::Report, payload, text, p)
    }
}

impl fmt::Display for OutputRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

pub fn encode_rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn encode_cyclotomic(c: &Cyclotomic) -> Value {
    json!({
        "modulus": c.modulus(),
        "coeffs": c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
    })
}

pub fn encode_special_value(v: &SpecialValue) -> Value {
    json!({ "pi_power": v.pi_power, "coeff": encode_cyclotomic(&v.coeff) })
}

pub fn encode_rational_polynomial(p: &RationalPolynomial) -> Value {
    json!({ "variable": "a", "coeffs": p.coeffs().iter().map(encode_rational).collect::<Vec<_>>() })
}

pub fn encode_cyc_polynomial(p: &CycPolynomial) -> Value {
    json!({ "variable": "a", "coeffs": p.coeffs().iter().map(encode_cyclotomic).collect::<Vec<_>>() })
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value, String> {
    v.get(name).ok_or_else(|| format!("missing field '{name}'"))
}

pub fn decode_rational(v: &Value) -> Result<Rational, String> {
    let s = v.as_str().ok_or("rational must be a string")?;
    parse_rational(s).map_err(|e| e.to_string())
}

pub fn decode_cyclotomic(v: &Value) -> Result<Cyclotomic, String> {
    let q = field(v, "modulus")?.as_u64().ok_or("modulus must be an integer")?;
    let coeffs = field(v, "coeffs")?
        .as_array()
        .ok_or("coeffs must be a list")?
        .iter()
        .map(decode_rational)
        .collect::<Result<Vec<_>, _>>()?;
    Cyclotomic::from_parts(q, coeffs).map_err(|e| e.to_string())
}

pub fn decode_special_value(v: &Value) -> Result<SpecialValue, String> {
    let k = field(v, "pi_power")?.as_u64().ok_or("pi_power must be an integer")?;
    Ok(SpecialValue::new(decode_cyclotomic(field(v, "coeff")?)?, k as u32))
}

fn coeff_list(v: &Value) -> Result<&Vec<Value>, String> {
    field(v, "coeffs")?.as_array().ok_or_else(|| "coeffs must be a list".into())
}

pub fn decode_rational_polynomial(v: &Value) -> Result<RationalPolynomial, String> {
    Ok(Polynomial::new(coeff_list(v)?.iter().map(decode_rational).collect::<Result<_, _>>()?))
}

pub fn decode_cyc_polynomial(v: &Value) -> Result<CycPolynomial, String> {
    Ok(Polynomial::new(coeff_list(v)?.iter().map(decode_cyclotomic).collect::<Result<_, _>>()?))
}

/// Decodes an exact payload and encodes it again.
pub fn reencode(kind: Kind, payload: &Value) -> Result<Value, String> {
    Ok(match kind {
        Kind::Rational => encode_rational(&decode_rational(payload)?),
        Kind::Cyclotomic => encode_cyclotomic(&decode_cyclotomic(payload)?),
        Kind::SpecialValue => encode_special_value(&decode_special_value(payload)?),
        Kind::Polynomial => match coeff_list(payload)?.first() {
            Some(Value::Object(_)) => encode_cyc_polynomial(&decode_cyc_polynomial(payload)?),
            _ => encode_rational_polynomial(&decode_rational_polynomial(payload)?),
        },
        Kind::Residual | Kind::Report => return Err("not an exact kind".into()),
    })
}
