//! Running a case document and emitting its report.

use std::path::Path;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use super::{CaseDocument, CongruenceSection, Forbidden};
use crate::charclass::{matches_targets, LineBundleSum, MatchReport};
use crate::error::{Error, Result};
use crate::genus::{self, ChernRootData};
use crate::rational::{self, Rational};
use crate::reps::{self, obstruct_tangent_rep, ObstructionReport};
use crate::ring::{check_substitution, class_to_json, RingPresentation};
use crate::search::enumerate_splittings;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Include wall-clock times. Reports with timings are not byte-stable.
    pub timings: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub case: String,
    /// Number of canonical splittings found, if a search ran.
    pub solutions: Option<usize>,
    pub exhaustive: Option<bool>,
    /// Outcome of the mod-4 congruence, if checked.
    pub congruence_holds: Option<bool>,
    pub obstruction: Option<String>,
    pub value: Value,
}

fn digest(v: &Value) -> String {
    let text = serde_json::to_string(v).expect("json");
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn fmt_all(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational::format).collect()
}

fn match_json(ring: &RingPresentation, r: &MatchReport) -> Value {
    json!({
        "matched": r.matched,
        "p1_matches": r.p1_matches,
        "euler_matches": r.euler_matches,
        "euler_sign": r.euler_sign,
        "chern_matches": r.chern_matches,
        "trivial_summands": r.trivial_summands,
        "p1": ring.display(&r.p1),
        "euler": ring.display(&r.euler),
        "p1_residual": fmt_all(&r.p1_residual),
        "euler_residual": fmt_all(&r.euler_residual),
        "chern_residual": r.chern_residual.iter().map(|(d, v)| json!({"degree": d, "residual": fmt_all(v)})).collect::<Vec<_>>(),
    })
}

fn obstruction_json(r: &ObstructionReport, forbidden: bool, provenance: &str) -> Value {
    json!({
        "verdict": r.verdict.as_str(),
        "almost_complex_forbidden": forbidden,
        "provenance": provenance,
        "factors": r.factors.iter().map(|f| json!({
            "name": f.name,
            "smallest_nontrivial_real_dim": f.smallest_nontrivial_real_dim.map(|d| d.to_string()),
            "acts_trivially": f.acts_trivially,
            "reconstructed": f.reconstructed,
        })).collect::<Vec<_>>(),
        "catalog": r.catalog.iter().map(|p| json!({
            "label": p.label(),
            "complex_dim": p.complex_dim.to_string(),
            "real_dim": p.real_dim.to_string(),
            "field_type": p.field_type.as_str(),
        })).collect::<Vec<_>>(),
        "trace": r.trace.iter().map(|t| json!({
            "summands": t.summands.iter().map(|&i| r.catalog[i].label()).collect::<Vec<_>>(),
            "rejected_by": t.rejected_by.map(|f| f.as_str()),
        })).collect::<Vec<_>>(),
        "summary": reps::trace_summary(r),
    })
}

fn genus_json(data: &ChernRootData<'_>) -> Result<(Value, Rational, Rational)> {
    let chi = data.chi_y()?;
    let euler = genus::euler_from_chi(&chi);
    let sigma = genus::signature_from_chi(&chi);
    let direct_euler = data.top_chern_number()?;
    let direct_sigma = data.l_genus()?;
    let n = data.n();
    Ok((
        json!({
            "chi_p": fmt_all(chi.coefficients()),
            "chi_y": chi.display(),
            "euler_characteristic": rational::format(&euler),
            "signature": rational::format(&sigma),
            "todd_genus": rational::format(&genus::todd_from_chi(&chi)),
            "integral": chi.is_integral(),
            "duality": genus::duality_check(&chi, n),
            "euler_matches_top_chern": euler == direct_euler,
            "signature_matches_l_genus": sigma == direct_sigma,
            "trivial_summands": data.trivial_summands(),
        }),
        euler,
        sigma,
    ))
}

pub fn run_case(doc: &CaseDocument, opts: &RunOptions) -> Result<Report> {
    let mut sections = Map::new();
    let mut solutions = None;
    let mut exhaustive = None;
    let mut congruence_holds = None;
    let mut obstruction = None;
    let mut genus_values: Option<(Rational, Rational, usize)> = None;

    if let Some(ring) = &doc.ring {
        let c = ring.check_confluence();
        sections.insert("ring".into(), json!({
            "generators": ring.generators(),
            "top_degree": ring.top_degree(),
            "fundamental": ring.display_monomial(ring.fundamental()),
            "confluent": c.passed,
            "basis_sizes": c.basis_sizes,
            "monomials_checked": c.monomials_checked,
            "rewrites_checked": c.rewrites_checked,
            "poincare_duality": ring.satisfies_poincare_duality(),
        }));
    }

    if let (Some(ring), Some(t)) = (&doc.ring, &doc.targets) {
        let mut targets = json!({
            "p1": ring.display(&t.p1),
            "euler": ring.display(&t.euler),
            "euler_sign_flexible": t.euler_sign_flexible,
            "real_rank": t.real_rank,
        });
        if let Some(c) = &t.total_chern {
            targets["total_chern"] = json!(ring.display(c));
        }
        sections.insert("targets".into(), targets);
        if !doc.candidates.is_empty() {
            let mut out = Vec::new();
            for (i, c) in doc.candidates.iter().enumerate() {
                let sum = LineBundleSum::new(ring, c.clone())
                    .map_err(|e| e.in_section(&format!("candidates[{i}]")))?;
                let r = matches_targets(&sum, t)
                    .map_err(|e| e.in_section(&format!("candidates[{i}]")))?;
                let mut v = match_json(ring, &r);
                v["line_bundles"] = json!(c.iter().map(|x| ring.display(x)).collect::<Vec<_>>());
                out.push(v);
            }
            sections.insert("candidates".into(), Value::Array(out));
        }
    }

    if let (Some(ring), Some(spec)) = (&doc.ring, &doc.search) {
        let cert = enumerate_splittings(ring, spec).map_err(|e| e.in_section("search"))?;
        solutions = Some(cert.solutions.len());
        exhaustive = Some(cert.exhaustive);
        let mut v = cert.to_json(opts.timings);
        let basis: Vec<String> = ring
            .basis(2)
            .map_err(|e| e.in_section("search"))?
            .iter()
            .map(|m| ring.display_monomial(m))
            .collect();
        v["basis"] = json!(basis);
        v["solution_classes"] = json!(cert
            .solutions
            .iter()
            .map(|s| s
                .bundles
                .iter()
                .map(|b| ring.display(&crate::ring::GradedClass::from_coordinates(
                    ring.nvars(),
                    ring.basis(2).expect("degree 2"),
                    b
                )))
                .collect::<Vec<_>>())
            .collect::<Vec<_>>());
        sections.insert("search".into(), v);
    }

    if let (Some(ring), Some(s)) = (&doc.ring, &doc.substitution) {
        let r = check_substitution(ring, &s.target, &s.images)
            .map_err(|e| e.in_section("substitution"))?;
        sections.insert("substitution".into(), json!({
            "consistent": r.consistent,
            "images": s.images.iter().map(|c| s.target.display(c)).collect::<Vec<_>>(),
            "residuals": r.residuals.iter().map(|(rel, res)| json!({"relation": rel, "residual": res})).collect::<Vec<_>>(),
            "fundamental_image": rational::format(&r.fundamental_image),
        }));
    }

    if let (Some(ring), Some(g)) = (&doc.ring, &doc.genus) {
        let mut data = ChernRootData::stable(ring, g.roots.clone(), g.trivial_summands)
            .map_err(|e| e.in_section("genus"))?;
        if g.manifold {
            data = data.manifold();
        }
        let (mut v, euler, sigma) = genus_json(&data).map_err(|e| e.in_section("genus"))?;
        v["roots"] = json!(g.roots.iter().map(class_to_json).collect::<Vec<_>>());
        genus_values = Some((euler, sigma, data.n()));
        sections.insert("genus".into(), v);
    }

    if let Some(c) = &doc.congruence {
        let (chi, sigma, m) = match c {
            CongruenceSection::Given { chi, sigma, m } => (*chi, *sigma, *m),
            CongruenceSection::FromGenus => {
                let (e, s, n) = genus_values
                    .as_ref()
                    .ok_or_else(|| Error::schema("congruence", "genus section did not run"))?;
                if n % 2 != 0 {
                    return Err(Error::schema("congruence", "real dimension is not a multiple of 4")
                        .in_section("congruence"));
                }
                let e = rational::to_i64(e).map_err(|e| e.in_section("congruence"))?;
                let s = rational::to_i64(s).map_err(|e| e.in_section("congruence"))?;
                (e, s, (*n / 2) as i64)
            }
        };
        let holds = genus::hirzebruch_congruence(chi, sigma, m);
        congruence_holds = Some(holds);
        sections.insert("congruence".into(), json!({
            "chi": chi,
            "sigma": sigma,
            "m": m,
            "chi_mod_4": chi.rem_euclid(4),
            "signed_sigma_mod_4": (if m % 2 == 0 { sigma } else { -sigma }).rem_euclid(4),
            "holds": holds,
            "almost_complex_possible": holds,
        }));
    }

    if let Some(o) = &doc.obstruction {
        let mut case = o.case.clone();
        case.almost_complex_forbidden = match o.forbidden {
            Forbidden::Flag(b) => b,
            Forbidden::Congruence => congruence_holds == Some(false),
        };
        let r = obstruct_tangent_rep(&case).map_err(|e| e.in_section("obstruction"))?;
        obstruction = Some(r.verdict.as_str().to_string());
        sections.insert(
            "obstruction".into(),
            obstruction_json(&r, case.almost_complex_forbidden, &case.provenance),
        );
    }

    if !doc.reps.is_empty() {
        let mut out = Vec::new();
        for q in &doc.reps {
            let cat = if q.by_complex_dim {
                reps::catalog_irreps_by_complex_dim(q.factor, q.bound)
            } else {
                reps::catalog_irreps(q.factor, q.bound)
            }
            .map_err(|e| e.in_section("reps"))?;
            out.push(catalog_json(&cat));
        }
        sections.insert("reps".into(), Value::Array(out));
    }

    let value = json!({
        "case": doc.name,
        "description": doc.description,
        "tool_version": TOOL_VERSION,
        "input_digest": digest(&doc.source),
        "sections": sections,
        "verdicts": {
            "solutions": solutions,
            "exhaustive": exhaustive,
            "congruence_holds": congruence_holds,
            "obstruction": obstruction,
        },
    });
    Ok(Report {
        case: doc.name.clone(),
        solutions,
        exhaustive,
        congruence_holds,
        obstruction,
        value,
    })
}

pub fn catalog_json(cat: &reps::IrrepCatalog) -> Value {
    json!({
        "group": cat.root_system.group_name(),
        "root_system": cat.root_system.to_string(),
        "dim_bound": cat.dim_bound.to_string(),
        "bounded_dimension": match cat.filter {
            reps::DimFilter::Real => "real",
            reps::DimFilter::Complex => "complex",
        },
        "radius": cat.radius,
        "entries": cat.entries.iter().map(|e| json!({
            "label": e.label,
            "highest_weight": e.highest_weight,
            "complex_dim": e.complex_dim.to_string(),
            "field_type": e.field_type.as_str(),
            "real_dim": e.real_dim.to_string(),
        })).collect::<Vec<_>>(),
    })
}

/// Canonical text of a report: sorted keys, two-space indentation, trailing newline.
pub fn render_report(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(&report.value).expect("json");
    s.push('\n');
    s
}

pub fn emit_report(report: &Report, path: &Path) -> Result<()> {
    std::fs::write(path, render_report(report))?;
    Ok(())
}
