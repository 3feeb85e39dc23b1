//! The built-in case library.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::rings;
use crate::ring::{presentation_to_json, RingPresentation};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuiltinParams {
    /// `q` for the `R(2q)` family.
    pub q: Option<i64>,
    /// Complex dimension for the projective-space families.
    pub n: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltinInfo {
    pub name: &'static str,
    pub description: &'static str,
    /// Parameter the case accepts, if any.
    pub parameter: Option<&'static str>,
}

const BUILTINS: &[BuiltinInfo] = &[
    BuiltinInfo { name: "cp2-connect-sum", description: "CP2 # CP2: p1 = 6u^2, e = 4u^2; no line-bundle splitting, congruence fails", parameter: None },
    BuiltinInfo { name: "cp2-connect-sum-bar", description: "CP2 # -CP2: tangent bundle splits into line bundles", parameter: None },
    BuiltinInfo { name: "su3-t2", description: "Eschenburg's inhomogeneous SU(3)//T^2: p1 = 8x^2, e = 6x^2y; no splitting", parameter: None },
    BuiltinInfo { name: "r-p", description: "the R(2q) family in the v-basis, staged search and change of basis", parameter: Some("q") },
    BuiltinInfo { name: "sp2-t2", description: "the inhomogeneous Sp(2)//T^2: p1 = 12z^2, e = 8z^3u; no splitting of four line bundles", parameter: None },
    BuiltinInfo { name: "s2xs2", description: "S^2 x S^2: splits as (2u, 2v)", parameter: None },
    BuiltinInfo { name: "cpn-split", description: "CP^n: line-bundle splittings matching the total Chern class (1+h)^(n+1)", parameter: Some("n") },
    BuiltinInfo { name: "genus-cpn", description: "chi_y of CP^n from the stable roots (n+1) h", parameter: Some("n") },
    BuiltinInfo { name: "hp1-presentation", description: "HP^1 as Spin(8)/Spin(7) x SU(2): no representation V gives the tangent bundle", parameter: None },
    BuiltinInfo { name: "m20-eschenburg", description: "M^20 with isotropy SU(2) x Spin(11): chi = 6, sigma = 0, no representation V", parameter: None },
    BuiltinInfo { name: "cp2-presentation", description: "CP^2 with isotropy Spin(5) x S^1: the representation question reduces to line bundles", parameter: None },
    BuiltinInfo { name: "spin-catalogs", description: "irreducible catalogs for Spin(11), Spin(19) and SU(2)", parameter: None },
];

/// Names of every built-in case, with the parameterized families expanded for `n <= 4`.
pub fn list_builtin_cases() -> Vec<(String, &'static BuiltinInfo)> {
    let mut out = Vec::new();
    for b in BUILTINS {
        match b.parameter {
            Some("n") => {
                out.push((b.name.to_string(), b));
                for n in 1..=4 {
                    out.push((format!("{}-{n}", b.name), b));
                }
            }
            _ => out.push((b.name.to_string(), b)),
        }
    }
    out
}

fn cls(terms: &[(i64, &[u32])]) -> Value {
    Value::Array(terms.iter().map(|(c, e)| json!([c, e])).collect())
}

fn with_ring(name: &str, description: &str, ring: &RingPresentation) -> Map<String, Value> {
    let mut doc = match presentation_to_json(ring) {
        Value::Object(m) => m,
        _ => unreachable!("presentations serialize to objects"),
    };
    doc.insert("name".into(), json!(name));
    doc.insert("description".into(), json!(description));
    doc
}

fn bare(name: &str, description: &str) -> Map<String, Value> {
    let mut doc = Map::new();
    doc.insert("name".into(), json!(name));
    doc.insert("description".into(), json!(description));
    doc
}

fn split_family(name: &str) -> (&str, Option<u32>) {
    for fam in ["cpn-split", "genus-cpn"] {
        if let Some(rest) = name.strip_prefix(fam).and_then(|r| r.strip_prefix('-')) {
            if let Ok(n) = rest.parse() {
                return (fam, Some(n));
            }
        }
    }
    (name, None)
}

pub fn builtin_case(name: &str, params: &BuiltinParams) -> Result<Value> {
    let (base, suffix_n) = split_family(name);
    let info = BUILTINS
        .iter()
        .find(|b| b.name == base)
        .ok_or_else(|| Error::UnknownCase(name.to_string()))?;
    let desc = info.description;
    let doc = match base {
        "cp2-connect-sum" => {
            let ring = rings::cp2_connect_sum()?;
            let mut d = with_ring(name, desc, &ring);
            d.insert("targets".into(), json!({
                "p1": cls(&[(6, &[2, 0])]),
                "euler": cls(&[(4, &[2, 0])]),
                "euler_sign_flexible": true,
                "real_rank": 4,
            }));
            d.insert("candidates".into(), json!([[cls(&[(2, &[1, 0]), (1, &[0, 1])]), cls(&[(1, &[1, 0])])]]));
            d.insert("search".into(), json!({
                "m": 2,
                "bound": {"type": "sum_of_squares", "multipliers": [1]},
            }));
            d.insert("congruence".into(), json!({"chi": 4, "sigma": 2, "m": 1}));
            d
        }
        "cp2-connect-sum-bar" => {
            let ring = rings::cp2_connect_sum_bar()?;
            let mut d = with_ring(name, desc, &ring);
            d.insert("targets".into(), json!({
                "p1": [],
                "euler": cls(&[(4, &[2, 0])]),
                "euler_sign_flexible": true,
                "real_rank": 4,
            }));
            d.insert("search".into(), json!({
                "m": 2,
                "bound": {"type": "explicit", "per_variable": 3, "acknowledged": true},
            }));
            d.insert("congruence".into(), json!({"chi": 4, "sigma": 0, "m": 1}));
            d
        }
        "su3-t2" => {
            let ring = rings::su3_t2()?;
            let mut d = with_ring(name, desc, &ring);
            d.insert("targets".into(), json!({
                "p1": cls(&[(8, &[2, 0])]),
                "euler": cls(&[(6, &[2, 1])]),
                "euler_sign_flexible": true,
                "real_rank": 6,
            }));
            d.insert("search".into(), json!({
                "m": 3,
                "bound": {"type": "sum_of_squares", "multipliers": [1, 0]},
            }));
            d
        }
        "r-p" => {
            let q = params.q.unwrap_or(2);
            if q < 1 {
                return Err(Error::schema("q", "q must be a positive integer"));
            }
            let ring = rings::r_p_v_basis(q)?;
            let mut d = with_ring(name, desc, &ring);
            d.insert("parameters".into(), json!({"q": q, "p": 2 * q}));
            d.insert("targets".into(), json!({
                "p1": cls(&[(6 + 8 * q * q, &[2, 0, 0])]),
                "euler": cls(&[(8, &[2, 0, 1])]),
                "euler_sign_flexible": true,
                "real_rank": 6,
            }));
            d.insert("search".into(), json!({
                "m": 3,
                "bound": {"type": "sum_of_squares", "multipliers": [1, 0, 0]},
                "enumeration": "staged",
            }));
            let target = rings::r_p_u_basis(2 * q)?;
            d.insert("substitution".into(), json!({
                "target": presentation_to_json(&target),
                "images": rings::r_p_change_of_basis(q)
                    .iter()
                    .map(crate::ring::class_to_json)
                    .collect::<Vec<_>>(),
            }));
            d
        }
        "sp2-t2" => {
            let ring = rings::sp2_t2()?;
            let mut d = with_ring(name, desc, &ring);
            d.insert("targets".into(), json!({
                "p1": cls(&[(12, &[2, 0])]),
                "euler": cls(&[(8, &[3, 1])]),
                "euler_sign_flexible": true,
                "real_rank": 8,
            }));
            d.insert("search".into(), json!({
                "m": 4,
                "bound": {"type": "sum_of_squares", "multipliers": [1, 0]},
            }));
            d
        }
        "s2xs2" => {
            let ring = rings::s2_times_s2()?;
            let mut d = with_ring(name, desc, &ring);
            d.insert("targets".into(), json!({
                "p1": [],
                "euler": cls(&[(4, &[1, 1])]),
                "euler_sign_flexible": true,
                "real_rank": 4,
            }));
            d.insert("candidates".into(), json!([[cls(&[(2, &[1, 0])]), cls(&[(2, &[0, 1])])]]));
            d.insert("search".into(), json!({
                "m": 2,
                "bound": {"type": "explicit", "per_variable": 3, "acknowledged": true},
            }));
            d.insert("congruence".into(), json!({"chi": 4, "sigma": 0, "m": 1}));
            d
        }
        "cpn-split" => {
            let n = suffix_n.or(params.n).unwrap_or(2);
            if n == 0 {
                return Err(Error::schema("n", "n must be at least 1"));
            }
            let ring = rings::cpn(n)?;
            let mut d = with_ring(name, desc, &ring);
            let n1 = n as i64 + 1;
            let chern: Vec<(i64, Vec<u32>)> = (0..=n)
                .map(|k| (binomial(n1, k as i64), vec![k]))
                .collect();
            let chern_json = Value::Array(chern.iter().map(|(c, e)| json!([c, e])).collect());
            let p1 = if n >= 2 { cls(&[(n1, &[2])]) } else { json!([]) };
            d.insert("parameters".into(), json!({"n": n}));
            d.insert("targets".into(), json!({
                "p1": p1,
                "euler": cls(&[(n1, &[n])]),
                "euler_sign_flexible": false,
                "real_rank": 2 * n,
                "total_chern": chern_json,
            }));
            let bound = if n >= 2 {
                json!({"type": "sum_of_squares", "multipliers": [1]})
            } else {
                json!({"type": "explicit", "per_variable": 3, "acknowledged": true})
            };
            d.insert("search".into(), json!({"m": n, "bound": bound}));
            d
        }
        "genus-cpn" => {
            let n = suffix_n.or(params.n).unwrap_or(2);
            let ring = rings::cpn(n)?;
            let mut d = with_ring(name, desc, &ring);
            d.insert("parameters".into(), json!({"n": n}));
            let roots: Vec<Value> = (0..=n).map(|_| cls(&[(1, &[1])])).collect();
            d.insert("genus".into(), json!({
                "roots": roots,
                "trivial_summands": 1,
                "manifold": true,
            }));
            if n % 2 == 0 && n > 0 {
                d.insert("congruence".into(), json!({"from": "genus"}));
            }
            d
        }
        "hp1-presentation" => {
            let mut d = bare(name, desc);
            d.insert("congruence".into(), json!({"chi": 2, "sigma": 0, "m": 1}));
            d.insert("obstruction".into(), json!({
                "factors": [{"type": "A1"}, {"type": "B", "rank": 3}],
                "manifold_dim": 4,
                "euler_nonzero": true,
                "almost_complex_forbidden": true,
                "provenance": "external: quaternionic projective spaces are not almost complex",
            }));
            d
        }
        "m20-eschenburg" => {
            let mut d = bare(name, desc);
            d.insert("congruence".into(), json!({"chi": 6, "sigma": 0, "m": 5}));
            d.insert("obstruction".into(), json!({
                "factors": [{"type": "A1"}, {"type": "B", "rank": 5}],
                "manifold_dim": 20,
                "euler_nonzero": true,
                "almost_complex_forbidden": "congruence",
                "provenance": "computed: chi = 6 and sigma = 0 violate chi = (-1)^m sigma mod 4",
            }));
            d
        }
        "cp2-presentation" => {
            let mut d = bare(name, desc);
            d.insert("congruence".into(), json!({"chi": 3, "sigma": 1, "m": 1}));
            d.insert("obstruction".into(), json!({
                "factors": [{"type": "circle"}, {"type": "B", "rank": 2}],
                "manifold_dim": 4,
                "euler_nonzero": true,
                "almost_complex_forbidden": "congruence",
                "provenance": "computed: CP^2 satisfies the congruence, so no almost-complex filter applies",
            }));
            d
        }
        "spin-catalogs" => {
            let mut d = bare(name, desc);
            d.insert("reps".into(), json!({"catalogs": [
                {"type": "B", "rank": 5, "bound": 36},
                {"type": "B", "rank": 9, "bound": 36},
                {"type": "A1", "bound": 6, "dim": "complex"},
                {"type": "A1", "bound": 6},
            ]}));
            d
        }
        _ => return Err(Error::UnknownCase(name.to_string())),
    };
    Ok(Value::Object(doc))
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
