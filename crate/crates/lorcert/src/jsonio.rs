//! JSON envelopes for polynomials, verdicts, and reports.
//!
//! Polynomials serialize as `{"nvars": n, "terms": [{"exp": [..], "coef":
//! "p/q"}, ..]}` with coefficients as decimal-free strings, highest terms
//! first. Operators reuse the polynomial envelope with a `"role":
//! "operator"` tag. Rational inputs are accepted either as strings or as
//! plain integers.

use crate::error::{Error, Result};
use crate::geom::{AfReport, BoxFamily, QuadFormTuple};
use crate::lorentz::{ConeSpec, QuadraticForm, Verdict};
use crate::poly::{ExpVec, Polynomial, Rational};
use serde_json::{json, Map, Value};
use std::str::FromStr;

/// Parses `"p/q"` or `"n"`.
pub fn rational_from_str(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|e| Error::Invalid(format!("bad rational '{s}': {e}")))
}

fn rational_from_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => rational_from_str(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else {
                Err(Error::Invalid(format!(
                    "coefficient {n} is not a plain integer; use a \"p/q\" string"
                )))
            }
        }
        other => Err(Error::Invalid(format!("expected rational, got {other}"))),
    }
}

pub fn poly_to_json(p: &Polynomial) -> Value {
    let terms: Vec<Value> = p
        .iter()
        .rev()
        .map(|(e, c)| json!({"exp": e.entries(), "coef": c.to_string()}))
        .collect();
    json!({"nvars": p.nvars(), "terms": terms})
}

/// Polynomial envelope with a role tag (used for operators).
pub fn poly_to_json_with_role(p: &Polynomial, role: &str) -> Value {
    let mut v = poly_to_json(p);
    if let Value::Object(map) = &mut v {
        map.insert("role".into(), Value::String(role.into()));
    }
    v
}

fn get<'v>(map: &'v Map<String, Value>, key: &str) -> Result<&'v Value> {
    map.get(key)
        .ok_or_else(|| Error::Invalid(format!("missing field '{key}'")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| Error::Invalid(format!("{what} must be a non-negative integer")))
}

pub fn poly_from_json(v: &Value) -> Result<Polynomial> {
    let map = v
        .as_object()
        .ok_or_else(|| Error::Invalid("polynomial must be an object".into()))?;
    let nvars = as_usize(get(map, "nvars")?, "nvars")?;
    let terms = get(map, "terms")?
        .as_array()
        .ok_or_else(|| Error::Invalid("terms must be an array".into()))?;
    let mut pairs = Vec::with_capacity(terms.len());
    for t in terms {
        let tm = t
            .as_object()
            .ok_or_else(|| Error::Invalid("term must be an object".into()))?;
        let exp_v = get(tm, "exp")?
            .as_array()
            .ok_or_else(|| Error::Invalid("exp must be an array".into()))?;
        let mut exp = Vec::with_capacity(exp_v.len());
        for e in exp_v {
            exp.push(as_usize(e, "exponent")? as u32);
        }
        if exp.len() != nvars {
            return Err(Error::LengthMismatch {
                expected: nvars,
                got: exp.len(),
            });
        }
        let coef = rational_from_value(get(tm, "coef")?)?;
        pairs.push((ExpVec::new(exp), coef));
    }
    Ok(Polynomial::from_terms(nvars, pairs))
}

pub fn rationals_from_json(v: &Value, what: &str) -> Result<Vec<Rational>> {
    v.as_array()
        .ok_or_else(|| Error::Invalid(format!("{what} must be an array")))?
        .iter()
        .map(rational_from_value)
        .collect()
}

/// A symmetric matrix as an array of rows.
pub fn quadratic_form_from_json(v: &Value) -> Result<QuadraticForm> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Invalid("matrix must be an array of rows".into()))?;
    let entries: Result<Vec<Vec<Rational>>> = rows
        .iter()
        .map(|r| rationals_from_json(r, "matrix row"))
        .collect();
    QuadraticForm::new(entries?)
}

/// `{"dim": d, "forms": [matrix, ...]}`.
pub fn form_tuple_from_json(v: &Value) -> Result<QuadFormTuple> {
    let map = v
        .as_object()
        .ok_or_else(|| Error::Invalid("form tuple must be an object".into()))?;
    let dim = as_usize(get(map, "dim")?, "dim")?;
    let forms_v = get(map, "forms")?
        .as_array()
        .ok_or_else(|| Error::Invalid("forms must be an array".into()))?;
    let mut forms = Vec::with_capacity(forms_v.len());
    for f in forms_v {
        let form = quadratic_form_from_json(f)?;
        if form.dim() != dim {
            return Err(Error::LengthMismatch {
                expected: dim,
                got: form.dim(),
            });
        }
        forms.push(form);
    }
    QuadFormTuple::new(forms)
}

/// `{"dim": d, "edges": [[..], ..]}`.
pub fn box_family_from_json(v: &Value) -> Result<BoxFamily> {
    let map = v
        .as_object()
        .ok_or_else(|| Error::Invalid("box family must be an object".into()))?;
    let dim = as_usize(get(map, "dim")?, "dim")?;
    let edges_v = get(map, "edges")?
        .as_array()
        .ok_or_else(|| Error::Invalid("edges must be an array".into()))?;
    let edges: Result<Vec<Vec<Rational>>> = edges_v
        .iter()
        .map(|e| rationals_from_json(e, "edge vector"))
        .collect();
    BoxFamily::new(dim, edges?)
}

/// `{"ambient_dim": n, "generators": [[..], ..]}`.
pub fn cone_from_json(v: &Value) -> Result<ConeSpec> {
    let map = v
        .as_object()
        .ok_or_else(|| Error::Invalid("cone must be an object".into()))?;
    let dim = as_usize(get(map, "ambient_dim")?, "ambient_dim")?;
    let gens_v = get(map, "generators")?
        .as_array()
        .ok_or_else(|| Error::Invalid("generators must be an array".into()))?;
    let gens: Result<Vec<Vec<Rational>>> = gens_v
        .iter()
        .map(|g| rationals_from_json(g, "generator"))
        .collect();
    ConeSpec::new(dim, gens?)
}

pub fn verdict_to_json(v: &Verdict) -> Value {
    serde_json::to_value(v).expect("verdict serialization cannot fail")
}

pub fn af_report_to_json(r: &AfReport) -> Value {
    json!({
        "lhs": r.lhs.to_string(),
        "rhs": r.rhs.to_string(),
        "margin": r.margin.to_string(),
        "verdict": serde_json::to_value(r.verdict).unwrap(),
        "proportionality": r.proportionality,
    })
}

pub fn sequence_to_json(values: &[Rational]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|v| Value::String(v.to_string()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::is_lorentzian;
    use crate::poly::{rat, rat_pq};

    #[test]
    fn poly_round_trip() {
        let p = Polynomial::from_terms(
            2,
            [
                (ExpVec::new(vec![2, 0]), rat(2)),
                (ExpVec::new(vec![1, 1]), rat_pq(7, 3)),
            ],
        );
        let v = poly_to_json(&p);
        assert_eq!(v["nvars"], 2);
        assert_eq!(v["terms"][0]["exp"], serde_json::json!([2, 0]));
        assert_eq!(v["terms"][1]["coef"], "7/3");
        assert_eq!(poly_from_json(&v).unwrap(), p);
    }

    #[test]
    fn poly_from_json_integer_coefs() {
        let v = serde_json::json!({
            "nvars": 2,
            "terms": [{"exp": [2, 0], "coef": 2}, {"exp": [0, 2], "coef": "1/2"}]
        });
        let p = poly_from_json(&v).unwrap();
        assert_eq!(p.coeff(&ExpVec::new(vec![2, 0])), rat(2));
        assert_eq!(p.coeff(&ExpVec::new(vec![0, 2])), rat_pq(1, 2));
    }

    #[test]
    fn poly_from_json_rejects_bad_exp() {
        let v = serde_json::json!({
            "nvars": 2,
            "terms": [{"exp": [2], "coef": 1}]
        });
        assert!(poly_from_json(&v).is_err());
    }

    #[test]
    fn verdict_shape() {
        let gap = &Polynomial::variable(2, 0).pow(2) + &Polynomial::variable(2, 1).pow(2);
        let verdict = is_lorentzian(&gap);
        let v = verdict_to_json(&verdict);
        assert_eq!(v["status"], "not_lorentzian");
        assert_eq!(v["witness"]["kind"], "m_convexity");
        let ok = verdict_to_json(&is_lorentzian(&Polynomial::one(1)));
        assert_eq!(ok["status"], "lorentzian");
        assert!(ok.get("witness").is_none());
    }

    #[test]
    fn tuple_and_family_inputs() {
        let t = form_tuple_from_json(&serde_json::json!({
            "dim": 2,
            "forms": [[[1, 0], [0, 1]], [[1, 0], [0, 2]]]
        }))
        .unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(*t.forms()[1].get(1, 1), rat(2));

        let b = box_family_from_json(&serde_json::json!({
            "dim": 2,
            "edges": [[1, 2], ["3/2", 1]]
        }))
        .unwrap();
        assert_eq!(b.edges()[1][0], rat_pq(3, 2));

        let c = cone_from_json(&serde_json::json!({
            "ambient_dim": 2,
            "generators": [[1, 0], [1, 1]]
        }))
        .unwrap();
        assert_eq!(c.generators().len(), 2);

        assert!(form_tuple_from_json(&serde_json::json!({
            "dim": 2,
            "forms": [[[1, 0]]]
        }))
        .is_err());
    }

    #[test]
    fn operator_role_tag() {
        let p = Polynomial::variable(2, 0);
        let v = poly_to_json_with_role(&p, "operator");
        assert_eq!(v["role"], "operator");
        assert_eq!(poly_from_json(&v).unwrap(), p);
    }
}
