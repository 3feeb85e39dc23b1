//! JSON form of ring presentations and classes.
//!
//! ```json
//! {"generators": ["x", "y"],
//!  "relations": [{"lhs": [0, 2], "rhs": [[1, [2, 0]], [-1, [1, 1]]]}],
//!  "top_degree": 6,
//!  "fundamental": [2, 1]}
//! ```

use serde_json::{json, Value};

use super::{GradedClass, Monomial, RewriteRule, RingPresentation};
use crate::error::{Error, Result};
use crate::rational;

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name)
        .ok_or_else(|| Error::schema(name, "missing required field"))
}

pub(crate) fn exponents_from_json(v: &Value, nvars: usize, path: &str) -> Result<Monomial> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::schema(path, "expected an exponent vector"))?;
    if arr.len() != nvars {
        return Err(Error::schema(
            path,
            format!("exponent vector has length {}, expected {nvars}", arr.len()),
        ));
    }
    let exps = arr
        .iter()
        .enumerate()
        .map(|(i, e)| {
            e.as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| Error::schema(format!("{path}[{i}]"), "expected a nonnegative integer"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Monomial::new(exps))
}

/// Parses `[[coef, exponent-vector], ...]`. Coefficients must be exact integers
/// (or `"p/q"` strings when `integral` is false).
pub fn class_from_json(v: &Value, nvars: usize, path: &str) -> Result<GradedClass> {
    class_from_json_with(v, nvars, path, true)
}

pub(crate) fn class_from_json_with(
    v: &Value,
    nvars: usize,
    path: &str,
    integral: bool,
) -> Result<GradedClass> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::schema(path, "expected a list of [coefficient, exponents] pairs"))?;
    let mut terms = Vec::with_capacity(arr.len());
    for (i, t) in arr.iter().enumerate() {
        let p = format!("{path}[{i}]");
        let pair = t
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::schema(&p, "expected [coefficient, exponents]"))?;
        let coef = if integral {
            rational::integer_from_json(&pair[0], &format!("{p}[0]"))?
        } else {
            rational::from_json(&pair[0], &format!("{p}[0]"))?
        };
        let m = exponents_from_json(&pair[1], nvars, &format!("{p}[1]"))?;
        terms.push((m, coef));
    }
    GradedClass::from_terms(nvars, terms)
}

/// Serializes a class with string coefficients, largest monomial first.
pub fn class_to_json(c: &GradedClass) -> Value {
    Value::Array(
        c.terms()
            .rev()
            .map(|(m, coef)| json!([rational::format(coef), m.exponents()]))
            .collect(),
    )
}

pub fn parse_presentation(doc: &Value) -> Result<RingPresentation> {
    let gens = field(doc, "generators")?
        .as_array()
        .ok_or_else(|| Error::schema("generators", "expected a list of names"))?
        .iter()
        .enumerate()
        .map(|(i, g)| {
            g.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::schema(format!("generators[{i}]"), "expected a string"))
        })
        .collect::<Result<Vec<_>>>()?;
    if gens.is_empty() {
        return Err(Error::schema("generators", "at least one generator is required"));
    }
    let n = gens.len();
    let rels = field(doc, "relations")?
        .as_array()
        .ok_or_else(|| Error::schema("relations", "expected a list"))?;
    let mut rules = Vec::with_capacity(rels.len());
    for (i, r) in rels.iter().enumerate() {
        let p = format!("relations[{i}]");
        let lhs = r
            .get("lhs")
            .ok_or_else(|| Error::schema(format!("{p}.lhs"), "missing required field"))?;
        let rhs = r
            .get("rhs")
            .ok_or_else(|| Error::schema(format!("{p}.rhs"), "missing required field"))?;
        rules.push(RewriteRule {
            lhs: exponents_from_json(lhs, n, &format!("{p}.lhs"))?,
            rhs: class_from_json(rhs, n, &format!("{p}.rhs"))?,
        });
    }
    let top = field(doc, "top_degree")?
        .as_u64()
        .and_then(|t| u32::try_from(t).ok())
        .ok_or_else(|| Error::schema("top_degree", "expected a nonnegative integer"))?;
    let fundamental = exponents_from_json(field(doc, "fundamental")?, n, "fundamental")?;
    RingPresentation::new(gens, rules, top, fundamental)
}

pub fn presentation_to_json(ring: &RingPresentation) -> Value {
    json!({
        "generators": ring.generators(),
        "relations": ring.rules().iter().map(|r| json!({
            "lhs": r.lhs.exponents(),
            "rhs": class_to_json(&r.rhs),
        })).collect::<Vec<_>>(),
        "top_degree": ring.top_degree(),
        "fundamental": ring.fundamental().exponents(),
    })
}
