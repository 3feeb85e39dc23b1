//! Certified exhaustive search for line-bundle splittings.
//!
//! A search looks for integer coordinates `x[i * r + k]` (line bundle `i`, degree-2 basis
//! element `k`) whose line-bundle sum reproduces the target classes. Bounds come from a
//! positive-definite diagonal combination of the `p1` equations, or are supplied explicitly.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::charclass::{matches_targets, LineBundleSum, SplittingEvaluator, TargetClasses};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::ring::{class_to_json, presentation_to_json, GradedClass, RingPresentation};

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq)]
pub enum BoundStrategy {
    /// Nonnegative multipliers over the degree-4 basis equations of the `p1` match.
    SumOfSquares { multipliers: Vec<Rational> },
    /// `|x_j| <= per_variable[j]`; a single entry applies to every variable.
    Explicit {
        per_variable: Vec<u64>,
        acknowledged: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Enumeration {
    /// Every tuple of the box is evaluated.
    Box,
    /// The heaviest-weight variables are enumerated first, the rest on the exact
    /// sum-of-squares shell left over by each outer tuple.
    Staged,
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub targets: TargetClasses,
    pub m: usize,
    pub bound: BoundStrategy,
    pub budget: u64,
    pub enumeration: Enumeration,
}

impl SearchSpec {
    pub fn new(targets: TargetClasses, m: usize, bound: BoundStrategy) -> Self {
        SearchSpec {
            targets,
            m,
            bound,
            budget: DEFAULT_BUDGET,
            enumeration: Enumeration::Box,
        }
    }

    pub fn staged(mut self) -> Self {
        self.enumeration = Enumeration::Staged;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn to_json(&self, ring: &RingPresentation) -> Value {
        let bound = match &self.bound {
            BoundStrategy::SumOfSquares { multipliers } => json!({
                "type": "sum_of_squares",
                "multipliers": multipliers.iter().map(rational::format).collect::<Vec<_>>(),
            }),
            BoundStrategy::Explicit {
                per_variable,
                acknowledged,
            } => json!({
                "type": "explicit",
                "per_variable": per_variable,
                "acknowledged": acknowledged,
            }),
        };
        let t = &self.targets;
        json!({
            "ring": presentation_to_json(ring),
            "targets": {
                "p1": class_to_json(&t.p1),
                "euler": class_to_json(&t.euler),
                "euler_sign_flexible": t.euler_sign_flexible,
                "real_rank": t.real_rank,
                "total_chern": t.total_chern.as_ref().map(class_to_json),
            },
            "m": self.m,
            "bound": bound,
            "budget": self.budget,
            "enumeration": match self.enumeration {
                Enumeration::Box => "box",
                Enumeration::Staged => "staged",
            },
        })
    }

    pub fn digest(&self, ring: &RingPresentation) -> String {
        let text = serde_json::to_string(&self.to_json(ring)).expect("json");
        hex::encode(Sha256::digest(text.as_bytes()))
    }
}

/// The quadratic identity `sum_j weights[k] * x_{i,k}^2 = constant` implied by the
/// multipliers, with the outer stage split off for staged searches.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticBound {
    /// Weight of each degree-2 basis element.
    pub weights: Vec<Rational>,
    pub constant: Rational,
    /// Basis indices of maximal weight.
    pub outer_basis: Vec<usize>,
    /// `floor(constant / outer weight)`: the bound on the sum of squares of the outer
    /// variables.
    pub outer_square_sum_bound: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DerivedBounds {
    pub per_variable: Vec<u64>,
    pub certified: bool,
    pub quadratic: Option<QuadraticBound>,
}

impl DerivedBounds {
    pub fn box_size(&self) -> u128 {
        self.per_variable
            .iter()
            .fold(1u128, |acc, &b| acc.saturating_mul(2 * b as u128 + 1))
    }
}

fn quadratic_bound(
    ring: &RingPresentation,
    spec: &SearchSpec,
    multipliers: &[Rational],
) -> Result<QuadraticBound> {
    if ring.top_degree() < 4 {
        return Err(Error::Bound("the ring has no degree-4 equations".into()));
    }
    let b2 = ring.basis(2)?.to_vec();
    let d4 = ring.basis(4)?.len();
    if multipliers.len() != d4 {
        return Err(Error::Bound(format!(
            "{} multipliers for {d4} degree-4 equations",
            multipliers.len()
        )));
    }
    if multipliers.iter().any(Signed::is_negative) {
        return Err(Error::Bound("multipliers must be nonnegative".into()));
    }
    let combine = |c: &GradedClass| -> Result<Rational> {
        let coords = ring.coordinates(c, 4)?;
        Ok(coords
            .iter()
            .zip(multipliers)
            .map(|(a, l)| a * l)
            .fold(Rational::zero(), |s, t| s + t))
    };
    let r = b2.len();
    let mut weights = Vec::with_capacity(r);
    for k in 0..r {
        for l in 0..r {
            let prod = ring.mul(
                &GradedClass::monomial(b2[k].clone(), Rational::one()),
                &GradedClass::monomial(b2[l].clone(), Rational::one()),
            )?;
            let w = combine(&prod)?;
            if k == l {
                if !w.is_positive() {
                    return Err(Error::Bound(format!(
                        "combined form has weight {} on {}",
                        rational::format(&w),
                        ring.display_monomial(&b2[k])
                    )));
                }
                weights.push(w);
            } else if !w.is_zero() {
                return Err(Error::Bound(format!(
                    "combined form is not diagonal: cross term {}*{}",
                    ring.display_monomial(&b2[k]),
                    ring.display_monomial(&b2[l])
                )));
            }
        }
    }
    let constant = combine(&spec.targets.p1)?;
    if constant.is_negative() {
        return Err(Error::Bound(format!(
            "combined constant {} is negative",
            rational::format(&constant)
        )));
    }
    let max = weights.iter().max().expect("nonempty basis").clone();
    let outer_basis: Vec<usize> = (0..r).filter(|&k| weights[k] == max).collect();
    let outer_square_sum_bound = (&constant / &max)
        .floor()
        .to_integer()
        .to_u64()
        .unwrap_or(u64::MAX);
    Ok(QuadraticBound {
        weights,
        constant,
        outer_basis,
        outer_square_sum_bound,
    })
}

pub fn derive_bounds(ring: &RingPresentation, spec: &SearchSpec) -> Result<DerivedBounds> {
    if spec.m == 0 {
        return Err(Error::schema("search.m", "at least one line bundle is required"));
    }
    spec.targets.trivial_summands(spec.m)?;
    let r = ring.basis(2)?.len();
    let n = spec.m * r;
    match &spec.bound {
        BoundStrategy::SumOfSquares { multipliers } => {
            let q = quadratic_bound(ring, spec, multipliers)?;
            let per_variable = (0..n)
                .map(|v| rational::floor_sqrt_ratio(&q.constant, &q.weights[v % r]))
                .collect();
            Ok(DerivedBounds {
                per_variable,
                certified: true,
                quadratic: Some(q),
            })
        }
        BoundStrategy::Explicit {
            per_variable,
            acknowledged,
        } => {
            let per_variable = match per_variable.len() {
                1 => vec![per_variable[0]; n],
                len if len == n => per_variable.clone(),
                len => {
                    return Err(Error::Bound(format!(
                        "{len} explicit bounds for {n} variables"
                    )))
                }
            };
            Ok(DerivedBounds {
                per_variable,
                certified: *acknowledged,
                quadratic: None,
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Solution {
    /// Coordinates of each line bundle's first Chern class in the degree-2 basis.
    pub bundles: Vec<Vec<i64>>,
    pub euler_sign: i8,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StageRecord {
    pub outer: Vec<i64>,
    /// Sum-of-squares budget left for the inner variables.
    pub residual: Rational,
    pub inner_bounds: Vec<u64>,
    /// Rejected because the Euler class vanishes for every inner completion.
    pub euler_pruned: bool,
    pub evaluated: u64,
    pub solutions: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchCertificate {
    pub spec_digest: String,
    pub bounds: DerivedBounds,
    pub enumeration: Enumeration,
    pub box_size: u128,
    /// Tuples evaluated through the splitting evaluator.
    pub enumerated: u64,
    /// Accepted tuples before symmetry reduction.
    pub raw_solutions: u64,
    pub solutions: Vec<Solution>,
    pub exhaustive: bool,
    pub visited_fraction: Rational,
    pub stages: Vec<StageRecord>,
    pub elapsed: Duration,
}

impl SearchCertificate {
    /// Canonical JSON. The wall-clock time is only included on request so reports stay
    /// byte-stable.
    pub fn to_json(&self, with_timing: bool) -> Value {
        let mut v = json!({
            "spec_digest": self.spec_digest,
            "bounds": {
                "per_variable": self.bounds.per_variable,
                "certified": self.bounds.certified,
                "quadratic": self.bounds.quadratic.as_ref().map(|q| json!({
                    "weights": q.weights.iter().map(rational::format).collect::<Vec<_>>(),
                    "constant": rational::format(&q.constant),
                    "outer_basis": q.outer_basis,
                    "outer_square_sum_bound": q.outer_square_sum_bound,
                })),
            },
            "enumeration": match self.enumeration {
                Enumeration::Box => "box",
                Enumeration::Staged => "staged",
            },
            "box_size": self.box_size.to_string(),
            "enumerated": self.enumerated,
            "raw_solutions": self.raw_solutions,
            "solutions": self.solutions.iter().map(|s| json!({
                "bundles": s.bundles,
                "euler_sign": s.euler_sign,
            })).collect::<Vec<_>>(),
            "exhaustive": self.exhaustive,
            "visited_fraction": rational::format(&self.visited_fraction),
            "stages": self.stages.iter().map(|s| json!({
                "outer": s.outer,
                "residual": rational::format(&s.residual),
                "inner_bounds": s.inner_bounds,
                "euler_pruned": s.euler_pruned,
                "evaluated": s.evaluated,
                "solutions": s.solutions,
            })).collect::<Vec<_>>(),
        });
        if with_timing {
            v["elapsed_seconds"] = json!(self.elapsed.as_secs_f64());
        }
        v
    }
}

/// Symmetries under which solution sets are closed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// Reordering line bundles.
    Permutations,
    /// Reordering line bundles and negating any single one.
    PermutationsAndSigns,
}

impl Symmetry {
    pub fn for_targets(t: &TargetClasses) -> Self {
        if t.total_chern.is_none() && t.euler_sign_flexible {
            Symmetry::PermutationsAndSigns
        } else {
            Symmetry::Permutations
        }
    }
}

/// Lexicographically least image of `bundles` under the symmetry group.
pub fn canonicalize_solution(bundles: &[Vec<i64>], symmetry: Symmetry) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = bundles
        .iter()
        .map(|v| {
            if symmetry == Symmetry::PermutationsAndSigns {
                let neg: Vec<i64> = v.iter().map(|x| -x).collect();
                neg.min(v.clone())
            } else {
                v.clone()
            }
        })
        .collect();
    out.sort();
    out
}

#[derive(Default)]
struct Partial {
    evaluated: u64,
    raw: u64,
    found: BTreeSet<Vec<Vec<i64>>>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.evaluated += other.evaluated;
        self.raw += other.raw;
        self.found.extend(other.found);
        self
    }
}

struct Ctx<'a> {
    ev: &'a SplittingEvaluator,
    r: usize,
    symmetry: Symmetry,
}

impl Ctx<'_> {
    fn test(&self, x: &[i64], acc: &mut Partial) {
        acc.evaluated += 1;
        if self.ev.accepts(x).is_some() {
            acc.raw += 1;
            let rows: Vec<Vec<i64>> = x.chunks(self.r).map(<[i64]>::to_vec).collect();
            acc.found.insert(canonicalize_solution(&rows, self.symmetry));
        }
    }
}

pub fn enumerate_splittings(ring: &RingPresentation, spec: &SearchSpec) -> Result<SearchCertificate> {
    let start = Instant::now();
    let bounds = derive_bounds(ring, spec)?;
    let ev = SplittingEvaluator::new(ring, &spec.targets, spec.m)?;
    let max = bounds.per_variable.iter().copied().max().unwrap_or(0);
    if !ev.fits(max) {
        return Err(Error::Overflow("splitting evaluation"));
    }
    let ctx = Ctx {
        ev: &ev,
        r: ev.rank_h2(),
        symmetry: Symmetry::for_targets(&spec.targets),
    };
    let box_size = bounds.box_size();
    let (partial, stages, visited_fraction) = match spec.enumeration {
        Enumeration::Box => {
            let (p, fraction) = run_box(&ctx, &bounds.per_variable, box_size, spec.budget);
            (p, Vec::new(), fraction)
        }
        Enumeration::Staged => {
            let q = bounds.quadratic.as_ref().ok_or_else(|| {
                Error::Bound("staged enumeration needs a sum-of-squares bound".into())
            })?;
            run_staged(&ctx, spec, q)?
        }
    };
    let mut solutions = Vec::with_capacity(partial.found.len());
    for bundles in partial.found {
        let sum = LineBundleSum::from_coordinates(ring, &bundles)?;
        let report = matches_targets(&sum, &spec.targets)?;
        let sign = match (report.matched, report.euler_sign) {
            (true, Some(s)) => s,
            _ => return Err(Error::Verification(format!("{bundles:?}"))),
        };
        solutions.push(Solution {
            bundles,
            euler_sign: sign,
        });
    }
    let complete = visited_fraction == Rational::one();
    Ok(SearchCertificate {
        spec_digest: spec.digest(ring),
        exhaustive: bounds.certified && complete,
        bounds,
        enumeration: spec.enumeration,
        box_size,
        enumerated: partial.evaluated,
        raw_solutions: partial.raw,
        solutions,
        visited_fraction,
        stages,
        elapsed: start.elapsed(),
    })
}

const CHUNK: u128 = 1 << 14;

fn run_box(ctx: &Ctx<'_>, bounds: &[u64], box_size: u128, budget: u64) -> (Partial, Rational) {
    let limit = box_size.min(budget as u128);
    let chunks = limit.div_ceil(CHUNK) as u64;
    let radix: Vec<u128> = bounds.iter().map(|&b| 2 * b as u128 + 1).collect();
    let partial = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c as u128 * CHUNK;
            let hi = (lo + CHUNK).min(limit);
            let mut x = vec![0i64; bounds.len()];
            let mut rem = lo;
            for v in (0..bounds.len()).rev() {
                x[v] = (rem % radix[v]) as i64 - bounds[v] as i64;
                rem /= radix[v];
            }
            let mut acc = Partial::default();
            for _ in lo..hi {
                ctx.test(&x, &mut acc);
                for v in (0..x.len()).rev() {
                    if x[v] < bounds[v] as i64 {
                        x[v] += 1;
                        break;
                    }
                    x[v] = -(bounds[v] as i64);
                }
            }
            acc
        })
        .reduce(Partial::default, Partial::merge);
    let fraction = if box_size == 0 {
        Rational::one()
    } else {
        Rational::new(limit.into(), box_size.into())
    };
    (partial, fraction)
}

fn isqrt(n: i128) -> i128 {
    if n <= 0 {
        return 0;
    }
    let mut s = (n as f64).sqrt() as i128;
    while s * s > n {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= n {
        s += 1;
    }
    s
}

/// Integer weights and constant: the quadratic identity scaled by a common denominator.
fn integer_form(q: &QuadraticBound) -> Result<(Vec<i128>, i128)> {
    let l = q
        .weights
        .iter()
        .chain(std::iter::once(&q.constant))
        .fold(num_bigint::BigInt::one(), |acc, w| acc.lcm(w.denom()));
    let scale = |w: &Rational| -> Result<i128> {
        (w * Rational::from_integer(l.clone()))
            .to_integer()
            .to_i128()
            .ok_or(Error::Overflow("sum-of-squares constant"))
    };
    let w = q.weights.iter().map(scale).collect::<Result<Vec<_>>>()?;
    Ok((w, scale(&q.constant)?))
}

fn run_staged(
    ctx: &Ctx<'_>,
    spec: &SearchSpec,
    q: &QuadraticBound,
) -> Result<(Partial, Vec<StageRecord>, Rational)> {
    let r = ctx.r;
    let (w, c) = integer_form(q)?;
    let nvars = spec.m * r;
    let outer: Vec<usize> = (0..nvars).filter(|v| q.outer_basis.contains(&(v % r))).collect();
    let inner: Vec<usize> = (0..nvars).filter(|v| !q.outer_basis.contains(&(v % r))).collect();
    if inner.is_empty() {
        return Err(Error::Bound(
            "staged enumeration needs variables lighter than the outer stage".into(),
        ));
    }
    let weight = |v: usize| w[v % r];

    // outer tuples with sum of weighted squares at most c, in lexicographic order
    let mut outer_tuples = Vec::new();
    let mut cur = vec![0i64; outer.len()];
    outer_rec(&outer, &weight, 0, c, &mut cur, &mut outer_tuples);

    let mut plan = Vec::with_capacity(outer_tuples.len());
    let mut total: u128 = 0;
    for (t, rem) in &outer_tuples {
        let inner_bounds: Vec<u64> = inner
            .iter()
            .map(|&v| isqrt(rem / weight(v)) as u64)
            .collect();
        let inner_w: Vec<i128> = inner.iter().map(|&v| weight(v)).collect();
        let size = shell_points(&inner_w, *rem);
        total = total.saturating_add(size);
        plan.push((t.clone(), *rem, inner_bounds, size));
    }
    // the budget caps the number of shell points evaluated, admitted in stage order
    let mut admitted = 0usize;
    let mut spent: u128 = 0;
    for (_, _, _, size) in &plan {
        if spent + size > spec.budget as u128 {
            break;
        }
        spent += size;
        admitted += 1;
    }
    let euler_nonzero = !ctx.ev.euler_target_is_zero();
    let scale = Rational::from_integer(
        q.weights
            .iter()
            .chain(std::iter::once(&q.constant))
            .fold(num_bigint::BigInt::one(), |acc, w| acc.lcm(w.denom())),
    );
    let results: Vec<(Partial, StageRecord)> = plan[..admitted]
        .par_iter()
        .map(|(t, rem, inner_bounds, _)| {
            let mut x = vec![0i64; nvars];
            for (&v, &val) in outer.iter().zip(t) {
                x[v] = val;
            }
            let mut acc = Partial::default();
            let pruned = euler_nonzero && ctx.ev.euler_vanishes_given(&outer, t);
            if !pruned {
                inner_rec(ctx, &inner, &weight, 0, *rem, &mut x, &mut acc);
            }
            let record = StageRecord {
                outer: t.clone(),
                residual: Rational::from_integer((*rem).into()) / &scale,
                inner_bounds: inner_bounds.clone(),
                euler_pruned: pruned,
                evaluated: acc.evaluated,
                solutions: acc.raw,
            };
            (acc, record)
        })
        .collect();
    let mut partial = Partial::default();
    let mut stages = Vec::with_capacity(results.len());
    for (p, s) in results {
        partial = partial.merge(p);
        stages.push(s);
    }
    let fraction = if admitted == plan.len() {
        Rational::one()
    } else {
        Rational::new(spent.into(), total.into())
    };
    Ok((partial, stages, fraction))
}

/// Number of integer points with `sum w_i x_i^2 = rem`, counted by convolution.
fn shell_points(w: &[i128], rem: i128) -> u128 {
    let n = rem as usize;
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for &wi in w {
        let mut next = vec![0u128; n + 1];
        for (s, &c) in ways.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut t: i128 = 0;
            loop {
                let add = (wi * t * t) as usize;
                if s + add > n {
                    break;
                }
                let mult = if t == 0 { 1 } else { 2 };
                next[s + add] = next[s + add].saturating_add(c * mult);
                t += 1;
            }
        }
        ways = next;
    }
    ways[n]
}

fn outer_rec(
    outer: &[usize],
    weight: &dyn Fn(usize) -> i128,
    pos: usize,
    rem: i128,
    cur: &mut Vec<i64>,
    out: &mut Vec<(Vec<i64>, i128)>,
) {
    if pos == outer.len() {
        out.push((cur.clone(), rem));
        return;
    }
    let w = weight(outer[pos]);
    let b = isqrt(rem / w) as i64;
    for t in -b..=b {
        cur[pos] = t;
        outer_rec(outer, weight, pos + 1, rem - w * (t as i128) * (t as i128), cur, out);
    }
    cur[pos] = 0;
}

fn inner_rec(
    ctx: &Ctx<'_>,
    inner: &[usize],
    weight: &dyn Fn(usize) -> i128,
    pos: usize,
    rem: i128,
    x: &mut Vec<i64>,
    acc: &mut Partial,
) {
    let v = inner[pos];
    let w = weight(v);
    if pos + 1 == inner.len() {
        // the last variable must land exactly on the shell
        if rem % w != 0 {
            return;
        }
        let s = isqrt(rem / w);
        if s * s * w != rem {
            return;
        }
        x[v] = -(s as i64);
        ctx.test(x, acc);
        if s != 0 {
            x[v] = s as i64;
            ctx.test(x, acc);
        }
        x[v] = 0;
        return;
    }
    let b = isqrt(rem / w) as i64;
    for t in -b..=b {
        x[v] = t;
        inner_rec(ctx, inner, weight, pos + 1, rem - w * (t as i128) * (t as i128), x, acc);
    }
    x[v] = 0;
}
