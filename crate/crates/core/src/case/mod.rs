//! Case documents: a ring plus any of targets, candidate splittings, a search, a change of
//! basis, genus data, a congruence check, an obstruction case and catalog queries.

mod builtin;
mod report;

pub use builtin::{builtin_case, list_builtin_cases, BuiltinInfo, BuiltinParams};
pub use report::{catalog_json, emit_report, render_report, run_case, Report, RunOptions, TOOL_VERSION};

use serde_json::Value;

use crate::charclass::TargetClasses;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::reps::{GroupFactor, ObstructionCase, RootSystem};
use crate::ring::{class_from_json, parse_presentation, GradedClass, RingPresentation};
use crate::search::{BoundStrategy, Enumeration, SearchSpec, DEFAULT_BUDGET};

#[derive(Clone, Debug)]
pub struct GenusSection {
    pub roots: Vec<GradedClass>,
    pub trivial_summands: usize,
    pub manifold: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CongruenceSection {
    Given { chi: i64, sigma: i64, m: i64 },
    /// Euler characteristic and signature read off the genus section.
    FromGenus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Forbidden {
    Flag(bool),
    /// Forbidden exactly when the congruence section fails.
    Congruence,
}

#[derive(Clone, Debug)]
pub struct ObstructionSection {
    pub case: ObstructionCase,
    pub forbidden: Forbidden,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepsQuery {
    pub factor: RootSystem,
    pub bound: u128,
    pub by_complex_dim: bool,
}

#[derive(Clone, Debug)]
/// Maps the case ring's generators into `target` and reduces every relation there.
pub struct Substitution {
    pub target: RingPresentation,
    pub images: Vec<GradedClass>,
}

#[derive(Clone, Debug)]
pub struct CaseDocument {
    pub name: String,
    pub description: Option<String>,
    pub ring: Option<RingPresentation>,
    pub targets: Option<TargetClasses>,
    pub candidates: Vec<Vec<GradedClass>>,
    pub search: Option<SearchSpec>,
    pub substitution: Option<Substitution>,
    pub genus: Option<GenusSection>,
    pub congruence: Option<CongruenceSection>,
    pub obstruction: Option<ObstructionSection>,
    pub reps: Vec<RepsQuery>,
    /// The document as given, for the input digest.
    pub source: Value,
}

fn get<'a>(v: &'a Value, key: &str) -> Option<&'a Value> {
    v.get(key).filter(|x| !x.is_null())
}

fn need<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    get(v, key).ok_or_else(|| Error::schema(format!("{path}.{key}"), "missing required field"))
}

fn as_bool(v: &Value, path: &str) -> Result<bool> {
    v.as_bool().ok_or_else(|| Error::schema(path, "expected a boolean"))
}

fn as_u64(v: &Value, path: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| Error::schema(path, "expected a nonnegative integer"))
}

fn as_i64(v: &Value, path: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| Error::schema(path, "expected an integer"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::schema(path, "expected a list"))
}

fn class_list(v: &Value, ring: &RingPresentation, path: &str) -> Result<Vec<GradedClass>> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, c)| class_from_json(c, ring.nvars(), &format!("{path}[{i}]")))
        .collect()
}

fn need_ring<'a>(ring: &'a Option<RingPresentation>, section: &str) -> Result<&'a RingPresentation> {
    ring.as_ref()
        .ok_or_else(|| Error::schema(section, "section requires a ring presentation"))
}

fn parse_targets(v: &Value, ring: &RingPresentation) -> Result<TargetClasses> {
    let p1 = class_from_json(need(v, "p1", "targets")?, ring.nvars(), "targets.p1")?;
    let euler = class_from_json(need(v, "euler", "targets")?, ring.nvars(), "targets.euler")?;
    let flexible = match get(v, "euler_sign_flexible") {
        Some(b) => as_bool(b, "targets.euler_sign_flexible")?,
        None => true,
    };
    let rank = match get(v, "real_rank") {
        Some(r) => as_u64(r, "targets.real_rank")? as usize,
        None => ring.top_degree() as usize,
    };
    let t = TargetClasses::new(ring, p1, euler, flexible, rank)?;
    match get(v, "total_chern") {
        Some(c) => {
            let c = class_from_json(c, ring.nvars(), "targets.total_chern")?;
            t.with_total_chern(ring, c)
        }
        None => Ok(t),
    }
}

fn parse_search(v: &Value, targets: &TargetClasses) -> Result<SearchSpec> {
    let m = as_u64(need(v, "m", "search")?, "search.m")? as usize;
    let b = need(v, "bound", "search")?;
    let kind = need(b, "type", "search.bound")?
        .as_str()
        .ok_or_else(|| Error::schema("search.bound.type", "expected a string"))?;
    let bound = match kind {
        "sum_of_squares" => {
            let ms = as_array(need(b, "multipliers", "search.bound")?, "search.bound.multipliers")?
                .iter()
                .enumerate()
                .map(|(i, x)| rational::from_json(x, &format!("search.bound.multipliers[{i}]")))
                .collect::<Result<Vec<Rational>>>()?;
            BoundStrategy::SumOfSquares { multipliers: ms }
        }
        "explicit" => {
            let pv = need(b, "per_variable", "search.bound")?;
            let per_variable = if let Some(n) = pv.as_u64() {
                vec![n]
            } else {
                as_array(pv, "search.bound.per_variable")?
                    .iter()
                    .enumerate()
                    .map(|(i, x)| as_u64(x, &format!("search.bound.per_variable[{i}]")))
                    .collect::<Result<Vec<_>>>()?
            };
            let acknowledged = match get(b, "acknowledged") {
                Some(a) => as_bool(a, "search.bound.acknowledged")?,
                None => false,
            };
            BoundStrategy::Explicit {
                per_variable,
                acknowledged,
            }
        }
        other => {
            return Err(Error::schema(
                "search.bound.type",
                format!("unknown bound type `{other}`"),
            ))
        }
    };
    let mut spec = SearchSpec::new(targets.clone(), m, bound);
    spec.budget = match get(v, "budget") {
        Some(x) => as_u64(x, "search.budget")?,
        None => DEFAULT_BUDGET,
    };
    spec.enumeration = match get(v, "enumeration").map(|e| e.as_str()) {
        None | Some(Some("box")) => Enumeration::Box,
        Some(Some("staged")) => Enumeration::Staged,
        _ => {
            return Err(Error::schema(
                "search.enumeration",
                "expected \"box\" or \"staged\"",
            ))
        }
    };
    Ok(spec)
}

fn parse_root_system(v: &Value, path: &str) -> Result<GroupFactor> {
    let kind = need(v, "type", path)?
        .as_str()
        .ok_or_else(|| Error::schema(format!("{path}.type"), "expected a string"))?;
    match kind {
        "A1" | "SU2" => Ok(GroupFactor::Simple(RootSystem::A1)),
        "B" | "Spin" => {
            let m = as_u64(need(v, "rank", path)?, &format!("{path}.rank"))? as usize;
            if m == 0 {
                return Err(Error::schema(format!("{path}.rank"), "rank must be at least 1"));
            }
            Ok(GroupFactor::Simple(RootSystem::B(m)))
        }
        "circle" => Ok(GroupFactor::Circle),
        other => Err(Error::schema(
            format!("{path}.type"),
            format!("unknown factor type `{other}`"),
        )),
    }
}

fn parse_obstruction(v: &Value, name: &str) -> Result<ObstructionSection> {
    let factors = as_array(need(v, "factors", "obstruction")?, "obstruction.factors")?
        .iter()
        .enumerate()
        .map(|(i, f)| parse_root_system(f, &format!("obstruction.factors[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let manifold_dim = as_u64(need(v, "manifold_dim", "obstruction")?, "obstruction.manifold_dim")?;
    let euler_nonzero = as_bool(need(v, "euler_nonzero", "obstruction")?, "obstruction.euler_nonzero")?;
    let forbidden = match need(v, "almost_complex_forbidden", "obstruction")? {
        Value::Bool(b) => Forbidden::Flag(*b),
        Value::String(s) if s == "congruence" => Forbidden::Congruence,
        _ => {
            return Err(Error::schema(
                "obstruction.almost_complex_forbidden",
                "expected a boolean or \"congruence\"",
            ))
        }
    };
    let provenance = get(v, "provenance")
        .and_then(Value::as_str)
        .unwrap_or_default()
        .to_string();
    let catalog_bound = match get(v, "catalog_bound") {
        Some(b) => Some(as_u64(b, "obstruction.catalog_bound")? as u128),
        None => None,
    };
    Ok(ObstructionSection {
        case: ObstructionCase {
            name: name.to_string(),
            factors,
            manifold_dim: manifold_dim as u128,
            euler_nonzero,
            almost_complex_forbidden: matches!(forbidden, Forbidden::Flag(true)),
            provenance,
            catalog_bound,
        },
        forbidden,
    })
}

pub fn parse_case(doc: &Value) -> Result<CaseDocument> {
    if !doc.is_object() {
        return Err(Error::schema("$", "a case document must be a JSON object"));
    }
    let name = get(doc, "name")
        .map(|n| {
            n.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::schema("name", "expected a string"))
        })
        .transpose()?
        .unwrap_or_else(|| "unnamed".into());
    let description = get(doc, "description").and_then(Value::as_str).map(str::to_string);
    let ring = if get(doc, "generators").is_some() {
        Some(parse_presentation(doc)?)
    } else {
        None
    };
    let targets = match get(doc, "targets") {
        Some(t) => Some(parse_targets(t, need_ring(&ring, "targets")?)?),
        None => None,
    };
    let candidates = match get(doc, "candidates") {
        Some(c) => {
            let r = need_ring(&ring, "candidates")?;
            if targets.is_none() {
                return Err(Error::schema("candidates", "candidates require targets"));
            }
            as_array(c, "candidates")?
                .iter()
                .enumerate()
                .map(|(i, c)| class_list(c, r, &format!("candidates[{i}]")))
                .collect::<Result<Vec<_>>>()?
        }
        None => Vec::new(),
    };
    let search = match get(doc, "search") {
        Some(s) => {
            need_ring(&ring, "search")?;
            let t = targets
                .as_ref()
                .ok_or_else(|| Error::schema("search", "search requires targets"))?;
            Some(parse_search(s, t)?)
        }
        None => None,
    };
    let substitution = match get(doc, "substitution") {
        Some(s) => {
            need_ring(&ring, "substitution")?;
            let target = parse_presentation(need(s, "target", "substitution")?)
                .map_err(|e| e.in_section("substitution.target"))?;
            let images =
                class_list(need(s, "images", "substitution")?, &target, "substitution.images")?;
            Some(Substitution { target, images })
        }
        None => None,
    };
    let genus = match get(doc, "genus") {
        Some(g) => {
            let r = need_ring(&ring, "genus")?;
            let roots = class_list(need(g, "roots", "genus")?, r, "genus.roots")?;
            let trivial_summands = match get(g, "trivial_summands") {
                Some(k) => as_u64(k, "genus.trivial_summands")? as usize,
                None => 0,
            };
            let manifold = match get(g, "manifold") {
                Some(b) => as_bool(b, "genus.manifold")?,
                None => false,
            };
            Some(GenusSection {
                roots,
                trivial_summands,
                manifold,
            })
        }
        None => None,
    };
    let congruence = match get(doc, "congruence") {
        Some(c) => {
            if get(c, "from").and_then(Value::as_str) == Some("genus") {
                if genus.is_none() {
                    return Err(Error::schema("congruence.from", "no genus section to read from"));
                }
                Some(CongruenceSection::FromGenus)
            } else {
                Some(CongruenceSection::Given {
                    chi: as_i64(need(c, "chi", "congruence")?, "congruence.chi")?,
                    sigma: as_i64(need(c, "sigma", "congruence")?, "congruence.sigma")?,
                    m: as_i64(need(c, "m", "congruence")?, "congruence.m")?,
                })
            }
        }
        None => None,
    };
    let obstruction = match get(doc, "obstruction") {
        Some(o) => {
            let o = parse_obstruction(o, &name)?;
            if o.forbidden == Forbidden::Congruence && congruence.is_none() {
                return Err(Error::schema(
                    "obstruction.almost_complex_forbidden",
                    "\"congruence\" requires a congruence section",
                ));
            }
            Some(o)
        }
        None => None,
    };
    let reps = match get(doc, "reps") {
        Some(r) => as_array(need(r, "catalogs", "reps")?, "reps.catalogs")?
            .iter()
            .enumerate()
            .map(|(i, q)| {
                let path = format!("reps.catalogs[{i}]");
                let factor = match parse_root_system(q, &path)? {
                    GroupFactor::Simple(rs) => rs,
                    GroupFactor::Circle => {
                        return Err(Error::schema(path, "catalogs are for A1 and B factors"))
                    }
                };
                let bound = as_u64(need(q, "bound", &path)?, &format!("{path}.bound"))? as u128;
                let by_complex_dim = get(q, "dim").and_then(Value::as_str) == Some("complex");
                Ok(RepsQuery {
                    factor,
                    bound,
                    by_complex_dim,
                })
            })
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    let actionable = ring.is_some()
        || congruence.is_some()
        || obstruction.is_some()
        || !reps.is_empty();
    if !actionable {
        return Err(Error::schema("$", "document has no actionable section"));
    }
    Ok(CaseDocument {
        name,
        description,
        ring,
        targets,
        candidates,
        search,
        substitution,
        genus,
        congruence,
        obstruction,
        reps,
        source: doc.clone(),
    })
}
