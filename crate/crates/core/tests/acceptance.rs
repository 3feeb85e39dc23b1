//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p biquot-core --test acceptance -- --nocapture`.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use biquot_core::case::{render_report, run_case, CongruenceSection, Forbidden, RunOptions};
use biquot_core::charclass::SplittingEvaluator;
use biquot_core::genus::{
    congruence_identity, duality_check, euler_from_chi, hirzebruch_congruence, signature_from_chi,
    ChernRootData, YPolynomial,
};
use biquot_core::rational::{int, ratio, to_i64};
use biquot_core::reps::{
    catalog_irreps, field_type, obstruct_tangent_rep, smallest_nontrivial, weyl_dim, FieldType,
    Filter, ProductIrrep, RootSystem, Verdict,
};
use biquot_core::ring::{check_substitution, GradedClass, RingPresentation};
use biquot_core::rings;
use biquot_core::search::{canonicalize_solution, derive_bounds, enumerate_splittings, Symmetry};
use biquot_core::Rational;
use common::*;
use rand::Rng;

/// Sub-checks that fail against the stated expectation, with the reason recorded in
/// the README. Any other failure fails the test.
const KNOWN_FAILURES: &[(u32, &str)] = &[
    (8, "Spin(11): second smallest is Delta of real dim 32"),
    (8, "Spin(11): Delta is of real type"),
];

#[derive(Default)]
struct Checks(Vec<(String, bool, String)>);

impl Checks {
    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.0.push((name.into(), ok, detail.into()));
    }

    fn runtime(&mut self, what: &str, elapsed: Duration, limit: Duration) {
        self.check(
            format!("{what} runtime < {limit:?}"),
            elapsed < limit,
            format!("{elapsed:.2?}"),
        );
    }
}

fn coords(ring: &RingPresentation, c: &GradedClass, degree: u32) -> Vec<Rational> {
    ring.coordinates(c, degree).unwrap()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn criterion_1(c: &mut Checks) {
    let doc = case("cp2-connect-sum", None, None);
    let ring = doc.ring.as_ref().unwrap();
    let spec = doc.search.as_ref().unwrap();
    c.check(
        "targets p1 = 6u^2, e = 4u^2",
        coords(ring, &spec.targets.p1, 4) == ints(&[6]) && coords(ring, &spec.targets.euler, 4) == ints(&[4]),
        "",
    );
    let start = Instant::now();
    let bounds = derive_bounds(ring, spec).unwrap();
    let cert = enumerate_splittings(ring, spec).unwrap();
    let elapsed = start.elapsed();
    let b = isqrt(6) as u64;
    c.check(
        "derived bound |coeff| <= 2",
        bounds.certified && bounds.per_variable == vec![b; 4] && b == 2,
        format!("{:?}", bounds.per_variable),
    );
    c.check(
        "box of 5^4 tuples enumerated exhaustively",
        cert.box_size == 625 && cert.enumerated == 625 && cert.exhaustive,
        format!("box {} enumerated {}", cert.box_size, cert.enumerated),
    );
    c.check("0 solutions", cert.solutions.is_empty() && cert.raw_solutions == 0, "");
    let mut oracle = 0;
    for_each_tuple(4, 3, |x| {
        let (p1, e) = cp2_expand(x);
        if p1 == 6 && e.abs() == 4 {
            oracle += 1;
        }
    });
    c.check("hand-expanded oracle on [-3,3]^4 finds none", oracle == 0, format!("{oracle}"));
    c.runtime("search", elapsed, Duration::from_secs(1));
}

fn criterion_2(c: &mut Checks) {
    let doc = case("su3-t2", None, None);
    let ring = doc.ring.as_ref().unwrap();
    let spec = doc.search.as_ref().unwrap();
    c.check(
        "targets p1 = 8x^2, e = 6x^2y",
        coords(ring, &spec.targets.p1, 4) == ints(&[8, 0])
            && coords(ring, &spec.targets.euler, 6) == ints(&[6])
            && spec.m == 3,
        "",
    );
    let start = Instant::now();
    let cert = enumerate_splittings(ring, spec).unwrap();
    let elapsed = start.elapsed();
    c.check(
        "derived bound |coeff| <= 2",
        cert.bounds.certified && cert.bounds.per_variable == vec![isqrt(8) as u64; 6],
        format!("{:?}", cert.bounds.per_variable),
    );
    c.check(
        "exhaustive, 0 solutions",
        cert.exhaustive && cert.enumerated == 15625 && cert.solutions.is_empty(),
        format!("enumerated {}", cert.enumerated),
    );
    let mut oracle = 0;
    for_each_tuple(6, 3, |x| {
        let (p1, e) = su3_expand(x);
        if p1 == [8, 0] && e.abs() == 6 {
            oracle += 1;
        }
    });
    c.check("hand-expanded oracle on [-3,3]^6 finds none", oracle == 0, format!("{oracle}"));
    c.runtime("search", elapsed, Duration::from_secs(10));
}

fn criterion_3(c: &mut Checks) {
    let mut g = rng(3);
    for q in 2..=5i64 {
        let doc = case("r-p", Some(q), None);
        let ring = doc.ring.as_ref().unwrap();
        let spec = doc.search.as_ref().unwrap();
        let start = Instant::now();
        let cert = enumerate_splittings(ring, spec).unwrap();
        let elapsed = start.elapsed();
        let quad = cert.bounds.quadratic.as_ref().unwrap();
        // floor(4 + 3/q^2)
        let expected = (4 * q * q + 3) / (q * q);
        c.check(
            format!("q={q}: c-stage bound sum c_i^2 <= 4"),
            quad.outer_square_sum_bound as i64 == expected && expected == 4,
            format!("{}", quad.outer_square_sum_bound),
        );
        c.check(
            format!("q={q}: staged search exhaustive with 0 solutions"),
            cert.exhaustive && cert.solutions.is_empty(),
            format!("enumerated {} in {} stages", cert.enumerated, cert.stages.len()),
        );
        let ev = SplittingEvaluator::new(ring, &spec.targets, spec.m).unwrap();
        let mut agree = true;
        for _ in 0..2000 {
            let x: Vec<i64> = cert
                .bounds
                .per_variable
                .iter()
                .map(|&b| g.random_range(-(b as i64)..=b as i64))
                .collect();
            let (p1, e) = rp_expand(q, &x);
            let p1_lib: Vec<i64> = ev.p1(&x).iter().map(|&v| v as i64).collect();
            agree &= p1_lib == p1 && ev.euler(&x) == vec![e as i128];
        }
        c.check(format!("q={q}: evaluator agrees with hand expansion on 2000 samples"), agree, "");
        c.runtime(&format!("q={q} search"), elapsed, Duration::from_secs(60));
    }
}

fn criterion_4(c: &mut Checks) {
    let doc = case("sp2-t2", None, None);
    let ring = doc.ring.as_ref().unwrap();
    let spec = doc.search.as_ref().unwrap();
    let z = ring.generator(ring.generator_index("z").unwrap());
    let u = ring.generator(ring.generator_index("u").unwrap());
    let u2 = ring.mul(&u, &u).unwrap();
    let z2 = ring.mul(&z, &z).unwrap();
    let rel = ring.add(&u2, &z2.scale(&int(-2))).unwrap();
    let z4 = ring.pow(&z, 4).unwrap();
    let z3u = ring.mul(&ring.pow(&z, 3).unwrap(), &u).unwrap();
    c.check(
        "ring Z[u,z]/<u^2 - 2z^2, z^4>",
        rel.is_zero() && z4.is_zero() && ring.integrate(&z3u).unwrap() == int(1),
        "",
    );
    c.check(
        "targets p1 = 12z^2, e = +-8z^3u, m = 4",
        coords(ring, &spec.targets.p1, 4) == ints(&[12, 0])
            && coords(ring, &spec.targets.euler, 8) == ints(&[8])
            && spec.targets.euler_sign_flexible
            && spec.m == 4,
        "",
    );
    let start = Instant::now();
    let cert = enumerate_splittings(ring, spec).unwrap();
    let elapsed = start.elapsed();
    c.check(
        "exhaustive, 0 solutions",
        cert.exhaustive && cert.solutions.is_empty(),
        format!("enumerated {}", cert.enumerated),
    );
    let ev = SplittingEvaluator::new(ring, &spec.targets, spec.m).unwrap();
    let mut g = rng(4);
    let mut agree = true;
    for _ in 0..5000 {
        let x: Vec<i64> = cert
            .bounds
            .per_variable
            .iter()
            .map(|&b| g.random_range(-(b as i64)..=b as i64))
            .collect();
        let (p1, e) = sp2_expand(&x);
        let p1_lib: Vec<i64> = ev.p1(&x).iter().map(|&v| v as i64).collect();
        agree &= p1_lib == p1 && ev.euler(&x) == vec![e as i128];
    }
    c.check("evaluator agrees with hand expansion on 5000 samples", agree, "");
    let mut oracle = 0;
    for_each_tuple(8, 3, |x| {
        let (p1, e) = sp2_expand(x);
        if p1 == [12, 0] && e.abs() == 8 {
            oracle += 1;
        }
    });
    c.check("hand-expanded oracle on [-3,3]^8 finds none", oracle == 0, format!("{oracle}"));
    c.runtime("search", elapsed, Duration::from_secs(60));
}

fn criterion_5(c: &mut Checks) {
    let doc = case("s2xs2", None, None);
    let ring = doc.ring.as_ref().unwrap();
    let spec = doc.search.as_ref().unwrap();
    let cert = enumerate_splittings(ring, spec).unwrap();
    let sym = Symmetry::for_targets(&spec.targets);
    let expected = brute_canonical(&[vec![2, 0], vec![0, 2]], sym == Symmetry::PermutationsAndSigns);
    let found: BTreeSet<Vec<Vec<i64>>> = cert.solutions.iter().map(|s| s.bundles.clone()).collect();
    c.check(
        "S^2 x S^2 splits as (2u, 2v) up to symmetry",
        cert.exhaustive && found.contains(&expected),
        format!("{found:?}"),
    );
    // u^2 = v^2 = 0: p1 = sum 2 a_i b_i uv, e = (a1 b2 + a2 b1) uv
    let mut oracle = BTreeSet::new();
    for_each_tuple(4, 3, |x| {
        if 2 * (x[0] * x[1] + x[2] * x[3]) == 0 && (x[0] * x[3] + x[1] * x[2]).abs() == 4 {
            oracle.insert(brute_canonical(&[x[..2].to_vec(), x[2..].to_vec()], true));
        }
    });
    c.check("solution set matches hand-expanded oracle", oracle == found, format!("{oracle:?}"));
    c.check(
        "library canonical form agrees with brute-force orbit minimum",
        canonicalize_solution(&[vec![0, 2], vec![2, 0]], sym) == expected,
        "",
    );
    for n in 1..=4u32 {
        let doc = case("cpn-split", None, Some(n));
        let ring = doc.ring.as_ref().unwrap();
        let spec = doc.search.as_ref().unwrap();
        let cert = enumerate_splittings(ring, spec).unwrap();
        let mut oracle = BTreeSet::new();
        for_each_tuple(n as usize, 3, |a| {
            let e = elementary_symmetric(a);
            if (1..=n as u64).all(|k| e[k as usize] as i128 == binomial(n as u64 + 1, k) as i128) {
                let mut s = a.to_vec();
                s.sort();
                oracle.insert(s);
            }
        });
        let found: BTreeSet<Vec<i64>> = cert
            .solutions
            .iter()
            .map(|s| s.bundles.iter().map(|b| b[0]).collect())
            .collect();
        let ok = cert.exhaustive && found == oracle && (n == 1) == !found.is_empty();
        c.check(
            format!("CP^{n}: {} Chern-matching splittings", if n == 1 { "one" } else { "0" }),
            ok,
            format!("found {found:?}, oracle {oracle:?}"),
        );
    }
}

fn criterion_6(c: &mut Checks) {
    let start = Instant::now();
    for n in 1..=4u32 {
        let ring = rings::cpn(n).unwrap();
        let h = ring.generator(0);
        let data = ChernRootData::stable(&ring, vec![h; n as usize + 1], 1).unwrap();
        let chi = data.chi_y().unwrap();
        let expected: Vec<i64> = (0..=n).map(|p| if p % 2 == 0 { 1 } else { -1 }).collect();
        c.check(format!("chi_y(CP^{n}) = sum (-y)^p"), chi == YPolynomial::from_integers(&expected), chi.display());
    }
    let mut g = rng(6);
    let ts = [int(-1), int(2), int(3)];
    for (name, ring) in rings::all_builtin() {
        let n = ring.complex_dim();
        let basis = ring.basis(2).unwrap().to_vec();
        let (mut p1, mut p2, mut p3, mut pt) = (0, 0, 0, 0);
        let instances = 500;
        for _ in 0..instances {
            let roots: Vec<GradedClass> = (0..n)
                .map(|_| GradedClass::from_coordinates(ring.nvars(), &basis, &random_vec(&mut g, basis.len(), 3)))
                .collect();
            let data = ChernRootData::new(&ring, roots).unwrap();
            let chi = data.chi_y().unwrap();
            p1 += (euler_from_chi(&chi) == data.top_chern_number().unwrap()) as usize;
            p2 += duality_check(&chi, n) as usize;
            p3 += (signature_from_chi(&chi) == data.l_genus().unwrap()) as usize;
            pt += ts.iter().all(|t| data.chi_y_scaled(t).unwrap() == chi) as usize;
        }
        c.check(
            format!("{name}: properties on {instances} random root data"),
            p1 == instances && p2 == instances && p3 == instances && pt == instances,
            format!("euler {p1}, duality {p2}, signature {p3}, t-invariance {pt}"),
        );
    }
    c.runtime("genus suite", start.elapsed(), Duration::from_secs(30));
}

fn criterion_7(c: &mut Checks) {
    let mut g = rng(7);
    let total = 10_000;
    let (mut direct, mut identity) = (0, 0);
    for i in 0..total {
        let n = 2 * (i % 6 + 1);
        let mut coeffs = vec![0i64; n + 1];
        for p in 0..=n / 2 {
            let v = g.random_range(-1000..=1000);
            coeffs[p] = v;
            coeffs[n - p] = v;
        }
        let chi_m1: i64 = coeffs.iter().enumerate().map(|(p, &v)| if p % 2 == 0 { v } else { -v }).sum();
        let chi_1: i64 = coeffs.iter().sum();
        let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
        direct += ((chi_m1 - sign * chi_1).rem_euclid(4) == 0) as usize;
        let chi = YPolynomial::from_integers(&coeffs);
        identity += congruence_identity(&chi).is_some_and(|id| {
            id.holds && hirzebruch_congruence(to_i64(&id.euler).unwrap(), to_i64(&id.signature).unwrap(), id.m as i64)
        }) as usize;
    }
    c.check(
        format!("congruence holds on {total} duality-symmetric vectors"),
        direct == total && identity == total,
        format!("direct {direct}, library {identity}"),
    );
    c.check("(chi=4, sigma=2, m=1) fails", !hirzebruch_congruence(4, 2, 1), "");
    c.check("(chi=6, sigma=0, m=5) fails", !hirzebruch_congruence(6, 0, 5), "");
    let report = run_case(&case("cp2-connect-sum", None, None), &RunOptions::default()).unwrap();
    c.check("cp2-connect-sum report: congruence fails", report.congruence_holds == Some(false), "");
}

fn criterion_8(c: &mut Checks) {
    let start = Instant::now();
    let mut closed = true;
    for m in 1..=10usize {
        let rs = RootSystem::B(m);
        for i in 1..m {
            closed &= weyl_dim(rs, &rs.fundamental_weight(i)).unwrap() == binomial(2 * m as u64 + 1, i as u64);
        }
        closed &= weyl_dim(rs, &rs.fundamental_weight(m)).unwrap() == 1u128 << m;
    }
    c.check("weyl_dim closed forms C(2m+1, i) and 2^m for m <= 10", closed, "");
    let mut unique = true;
    for n in 2..=10usize {
        let cat = catalog_irreps(RootSystem::B(n), 2 * n as u128 + 1).unwrap();
        let nt: Vec<_> = cat.nontrivial().collect();
        unique &= nt.len() == 1 && nt[0].label == "Lambda^1" && nt[0].real_dim == 2 * n as u128 + 1;
    }
    c.check("smallest nontrivial of Spin(2n+1) is Lambda^1 alone, 2 <= n <= 10", unique, "");
    for n in [3u128, 5, 7, 9] {
        let rs = RootSystem::B(2 * n as usize - 1);
        let l2 = 8 * n * n - 6 * n + 1;
        let two = smallest_nontrivial(rs, 2 * l2).unwrap();
        let first_ok = two.first() == Some(&("Lambda^1".to_string(), 4 * n - 1));
        if n == 3 {
            c.check(
                "Spin(11): second smallest is Delta of real dim 32",
                first_ok && two.get(1) == Some(&("Delta".to_string(), 32)),
                format!("computed {two:?}"),
            );
        } else {
            c.check(
                format!("Spin({}): second smallest is Lambda^2 of dim {l2}", 4 * n - 1),
                first_ok && two.get(1) == Some(&("Lambda^2".to_string(), l2)),
                format!("computed {two:?}"),
            );
        }
    }
    let spin5 = field_type(RootSystem::B(2), &RootSystem::B(2).fundamental_weight(2)).unwrap();
    c.check("Spin(5): Delta is of quaternionic type", spin5 == FieldType::Quaternionic, spin5.as_str());
    let spin11 = field_type(RootSystem::B(5), &RootSystem::B(5).fundamental_weight(5)).unwrap();
    c.check("Spin(11): Delta is of real type", spin11 == FieldType::Real, format!("computed {}", spin11.as_str()));
    c.runtime("representation suite", start.elapsed(), Duration::from_secs(10));
}

fn expected_filter(members: &[&ProductIrrep], euler_nonzero: bool, forbidden: bool) -> Option<Filter> {
    if euler_nonzero && members.iter().any(|p| p.real_dim % 2 == 1) {
        Some(Filter::F1)
    } else if forbidden && members.iter().all(|p| p.field_type.carries_complex_structure()) {
        Some(Filter::F2)
    } else {
        None
    }
}

/// Multisets of catalog entries with the given total real dimension.
fn count_multisets(dims: &[u128], total: u128) -> usize {
    let mut ways = vec![0usize; total as usize + 1];
    ways[0] = 1;
    for &d in dims {
        for s in d as usize..=total as usize {
            ways[s] += ways[s - d as usize];
        }
    }
    ways[total as usize]
}

fn criterion_9(c: &mut Checks) {
    for name in ["hp1-presentation", "m20-eschenburg"] {
        let doc = case(name, None, None);
        let report = run_case(&doc, &RunOptions::default()).unwrap();
        let section = doc.obstruction.as_ref().unwrap();
        let mut ocase = section.case.clone();
        ocase.almost_complex_forbidden = match section.forbidden {
            Forbidden::Flag(b) => b,
            Forbidden::Congruence => match doc.congruence {
                Some(CongruenceSection::Given { chi, sigma, m }) => !hirzebruch_congruence(chi, sigma, m),
                _ => false,
            },
        };
        let r = obstruct_tangent_rep(&ocase).unwrap();
        let dims: Vec<u128> = r.catalog.iter().map(|p| p.real_dim).filter(|&d| d > 0).collect();
        let complete = r.trace.len() == count_multisets(&dims, ocase.manifold_dim);
        let mut cited = true;
        for t in &r.trace {
            let members: Vec<&ProductIrrep> = t.summands.iter().map(|&i| &r.catalog[i]).collect();
            let dim: u128 = members.iter().map(|p| p.real_dim).sum();
            cited &= dim == ocase.manifold_dim
                && t.rejected_by.is_some()
                && t.rejected_by == expected_filter(&members, ocase.euler_nonzero, ocase.almost_complex_forbidden);
        }
        c.check(
            format!("{name}: NO-VALID-V"),
            r.verdict == Verdict::NoValidV && report.obstruction.as_deref() == Some("NO-VALID-V"),
            format!("{:?}", report.obstruction),
        );
        c.check(
            format!("{name}: trace complete, each rejection cites exactly one filter"),
            complete && cited,
            format!("{} multisets, F1 {}, F2 {}", r.trace.len(), r.rejected_by(Filter::F1), r.rejected_by(Filter::F2)),
        );
    }
}

fn criterion_10(c: &mut Checks) {
    let mut g = rng(10);
    for (name, ring) in rings::all_builtin() {
        c.check(format!("{name}: confluent"), ring.check_confluence().passed, "");
        let one = ring.one();
        let zero = ring.zero();
        let mut ok = 0;
        let triples = 1000;
        for _ in 0..triples {
            let a = random_class(&ring, &mut g);
            let b = random_class(&ring, &mut g);
            let cc = random_class(&ring, &mut g);
            let ab = ring.mul(&a, &b).unwrap();
            let assoc = ring.mul(&ab, &cc).unwrap() == ring.mul(&a, &ring.mul(&b, &cc).unwrap()).unwrap();
            let comm = ab == ring.mul(&b, &a).unwrap();
            let bc = ring.add(&b, &cc).unwrap();
            let dist = ring.mul(&a, &bc).unwrap() == ring.add(&ab, &ring.mul(&a, &cc).unwrap()).unwrap();
            let unit = ring.mul(&one, &a).unwrap() == a && ring.add(&zero, &a).unwrap() == a;
            let inverse = ring.add(&a, &a.neg()).unwrap().is_zero();
            ok += (assoc && comm && dist && unit && inverse) as usize;
        }
        c.check(format!("{name}: ring axioms on {triples} triples"), ok == triples, format!("{ok}"));
    }
    for q in 2..=5 {
        let v = rings::r_p_v_basis(q).unwrap();
        let u = rings::r_p_u_basis(2 * q).unwrap();
        let rep = check_substitution(&v, &u, &rings::r_p_change_of_basis(q)).unwrap();
        c.check(
            format!("R({}): change of basis v -> u consistent", 2 * q),
            rep.consistent && rep.fundamental_image == ratio(-1, 1),
            format!("{:?}", rep.residuals),
        );
    }
    c.check(
        "R(p): literal printed u-basis table is reported as a typo",
        rings::r_p_u_basis_literal(4).is_err(),
        "",
    );
    for name in ["sp2-t2", "r-p", "m20-eschenburg"] {
        let doc = case(name, None, None);
        let outputs: Vec<String> = [1, 2, 4]
            .iter()
            .map(|&t| {
                let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build().unwrap();
                pool.install(|| render_report(&run_case(&doc, &RunOptions::default()).unwrap()))
            })
            .collect();
        c.check(
            format!("{name}: report byte-stable across 1, 2, 4 threads"),
            outputs.windows(2).all(|w| w[0] == w[1]),
            "",
        );
    }
}

#[test]
fn acceptance() {
    let criteria: [(u32, &str, fn(&mut Checks)); 10] = [
        (1, "CP2 # CP2 has no line-bundle splitting", criterion_1),
        (2, "SU(3)//T^2 has no line-bundle splitting", criterion_2),
        (3, "R(p) has no line-bundle splitting, q = 2..5", criterion_3),
        (4, "Sp(2)//T^2 has no line-bundle splitting", criterion_4),
        (5, "positive controls S^2 x S^2 and CP^n", criterion_5),
        (6, "chi_y genus suite", criterion_6),
        (7, "mod-4 congruence as combinatorics", criterion_7),
        (8, "representation suite", criterion_8),
        (9, "obstruction chain", criterion_9),
        (10, "infrastructure properties", criterion_10),
    ];
    let mut unexpected = Vec::new();
    let mut failed_known = BTreeSet::new();
    let mut passed = 0;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let mut checks = Checks::default();
        run(&mut checks);
        let elapsed = start.elapsed();
        let ok = checks.0.iter().all(|(_, ok, _)| *ok);
        passed += ok as usize;
        println!("{} {id:>2}. {title} ({elapsed:.2?})", if ok { "PASS" } else { "FAIL" });
        for (name, ok, detail) in &checks.0 {
            if !ok {
                println!("        failed: {name} [{detail}]");
                if KNOWN_FAILURES.contains(&(id, name.as_str())) {
                    failed_known.insert((id, name.clone()));
                } else {
                    unexpected.push(format!("{id}: {name} [{detail}]"));
                }
            }
        }
    }
    println!("{passed}/10 criteria pass");
    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:#?}");
    let known: BTreeSet<(u32, String)> = KNOWN_FAILURES.iter().map(|&(i, n)| (i, n.to_string())).collect();
    assert_eq!(failed_known, known, "a documented failure now passes; update KNOWN_FAILURES");
}
