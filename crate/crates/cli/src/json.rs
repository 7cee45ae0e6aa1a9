//! JSON encodings of the library's exact values. Numbers that can exceed
//! 64 bits are always strings.

use serde_json::{json, Map, Value};

use surfinv_core::exact_arith::{BigInt, BigRational, ModZValue};
use surfinv_core::f2_forms::F2QuadraticForm;
use surfinv_core::poly::IntPolynomial;

use crate::error::CliError;

/// `{"num": "p", "den": "q"}`.
pub fn rational(r: &BigRational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

pub fn integer(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

/// Canonical representative in `[0, 1)` plus `alias` when it exceeds 1/2.
pub fn modz(v: &ModZValue) -> Value {
    let mut obj = match rational(v.residue()) {
        Value::Object(m) => m,
        _ => unreachable!(),
    };
    if let Some(alias) = v.alias() {
        obj.insert("alias".into(), rational(&alias));
    }
    Value::Object(obj)
}

/// The legible form of a value in Q/Z: the alias when there is one.
pub fn modz_human(v: &ModZValue) -> String {
    match v.alias() {
        Some(a) => a.to_string(),
        None => v.residue().to_string(),
    }
}

pub fn form(q: &F2QuadraticForm) -> Value {
    json!({ "g": q.genus(), "basis_values": q.to_bitstring() })
}

/// List of `{"coeff", "exponents": {generator: power}}`.
pub fn polynomial(p: &IntPolynomial) -> Value {
    Value::Array(
        p.terms()
            .map(|(mono, c)| {
                let exps: Map<String, Value> = mono.iter().map(|(g, e)| (g.name().to_string(), json!(e))).collect();
                json!({ "coeff": c.to_string(), "exponents": exps })
            })
            .collect(),
    )
}

/// Reads `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    s.trim().parse::<BigRational>().map_err(|_| CliError::Document(format!("'{s}' is not a rational number")))
}
