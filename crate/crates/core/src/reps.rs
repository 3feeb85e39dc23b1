//! Irreducible representations of `Spin(2m+1)`, `SU(2)` and the circle through the Weyl
//! dimension formula, and the representation-dimension obstruction for tangent bundles.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootSystem {
    /// `B_m`, the root system of `Spin(2m+1)`.
    B(usize),
    /// `A_1`, the root system of `SU(2)`.
    A1,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        match self {
            RootSystem::B(m) => *m,
            RootSystem::A1 => 1,
        }
    }

    pub fn group_name(&self) -> String {
        match self {
            RootSystem::B(m) => format!("Spin({})", 2 * m + 1),
            RootSystem::A1 => "SU(2)".into(),
        }
    }

    fn ambient(&self) -> usize {
        match self {
            RootSystem::B(m) => *m,
            RootSystem::A1 => 2,
        }
    }

    /// Positive roots in the standard orthonormal coordinates.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let d = self.ambient();
        let unit = |i: usize| -> Vec<i64> {
            let mut v = vec![0; d];
            v[i] = 1;
            v
        };
        match self {
            RootSystem::A1 => vec![vec![1, -1]],
            RootSystem::B(m) => {
                let mut out = Vec::new();
                for i in 0..*m {
                    for j in i + 1..*m {
                        let (a, b) = (unit(i), unit(j));
                        out.push(a.iter().zip(&b).map(|(x, y)| x - y).collect());
                        out.push(a.iter().zip(&b).map(|(x, y)| x + y).collect());
                    }
                    out.push(unit(i));
                }
                out
            }
        }
    }

    /// Twice the fundamental weight `omega_i` (0-based), in orthonormal coordinates.
    fn doubled_fundamental(&self, i: usize) -> Vec<i64> {
        match self {
            RootSystem::A1 => vec![1, -1],
            RootSystem::B(m) => {
                if i + 1 < *m {
                    (0..*m).map(|j| if j <= i { 2 } else { 0 }).collect()
                } else {
                    vec![1; *m]
                }
            }
        }
    }

    /// `2 rho`, the sum of the positive roots.
    fn doubled_rho(&self) -> Vec<i64> {
        let mut rho = vec![0; self.ambient()];
        for a in self.positive_roots() {
            for (r, x) in rho.iter_mut().zip(a) {
                *r += x;
            }
        }
        rho
    }

    fn check_weight(&self, weight: &[i64]) -> Result<()> {
        if weight.len() != self.rank() || weight.iter().any(|&a| a < 0) {
            return Err(Error::NonDominant(format!("{weight:?} for {}", self.group_name())));
        }
        Ok(())
    }

    fn doubled_weight(&self, weight: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.ambient()];
        for (i, &a) in weight.iter().enumerate() {
            for (o, f) in out.iter_mut().zip(self.doubled_fundamental(i)) {
                *o += a * f;
            }
        }
        out
    }

    /// Highest weight of `Lambda^i` (`1 <= i < m`) or of the spin representation (`i = m`).
    pub fn fundamental_weight(&self, i: usize) -> Vec<i64> {
        let mut w = vec![0; self.rank()];
        w[i - 1] = 1;
        w
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSystem::B(m) => write!(f, "B{m}"),
            RootSystem::A1 => write!(f, "A1"),
        }
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `prod_{alpha > 0} <lambda + rho, alpha> / <rho, alpha>`.
pub fn weyl_dim(rs: RootSystem, weight: &[i64]) -> Result<u128> {
    rs.check_weight(weight)?;
    let lam = rs.doubled_weight(weight);
    let rho = rs.doubled_rho();
    let shifted: Vec<i64> = lam.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut value = Rational::one();
    for alpha in rs.positive_roots() {
        value *= Rational::new(BigInt::from(dot(&shifted, &alpha)), BigInt::from(dot(&rho, &alpha)));
    }
    if !value.is_integer() {
        return Err(Error::NonIntegralDimension(crate::rational::format(&value)));
    }
    value
        .to_integer()
        .to_u128()
        .ok_or(Error::Overflow("Weyl dimension"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldType {
    Real,
    Complex,
    Quaternionic,
}

impl FieldType {
    pub fn as_str(&self) -> &'static str {
        match self {
            FieldType::Real => "real",
            FieldType::Complex => "complex",
            FieldType::Quaternionic => "quaternionic",
        }
    }

    /// Type of an external tensor product of irreducibles of two groups.
    pub fn tensor(self, other: FieldType) -> FieldType {
        use FieldType::*;
        match (self, other) {
            (Complex, _) | (_, Complex) => Complex,
            (Real, Real) | (Quaternionic, Quaternionic) => Real,
            _ => Quaternionic,
        }
    }

    /// Whether the underlying real representation admits an invariant complex structure.
    pub fn carries_complex_structure(&self) -> bool {
        !matches!(self, FieldType::Real)
    }

    pub fn real_dim(&self, complex_dim: u128) -> u128 {
        match self {
            FieldType::Real => complex_dim,
            _ => 2 * complex_dim,
        }
    }
}

/// Every irreducible of `B_m` and `A_1` is self-dual, so the type is the Frobenius-Schur
/// sign `(-1)^{<lambda, 2 rho^vee>}`. For `B_m` only the spin coefficient contributes, with
/// exponent `a_m m(m+1)/2`; for `A_1` the exponent is the weight itself.
pub fn field_type(rs: RootSystem, weight: &[i64]) -> Result<FieldType> {
    rs.check_weight(weight)?;
    let exponent = match rs {
        RootSystem::A1 => weight[0],
        RootSystem::B(m) => weight[m - 1] * (m as i64 * (m as i64 + 1) / 2),
    };
    Ok(if exponent % 2 == 0 {
        FieldType::Real
    } else {
        FieldType::Quaternionic
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irrep {
    pub label: String,
    pub highest_weight: Vec<i64>,
    pub complex_dim: u128,
    pub field_type: FieldType,
    pub real_dim: u128,
}

fn label(rs: RootSystem, w: &[i64], cdim: u128) -> String {
    if w.iter().all(|&a| a == 0) {
        return "1".into();
    }
    match rs {
        RootSystem::A1 => format!("W{cdim}"),
        RootSystem::B(m) => {
            let nz: Vec<usize> = (0..m).filter(|&i| w[i] != 0).collect();
            if nz.len() == 1 && w[nz[0]] == 1 {
                if nz[0] + 1 == m {
                    "Delta".into()
                } else {
                    format!("Lambda^{}", nz[0] + 1)
                }
            } else {
                format!("V{w:?}")
            }
        }
    }
}

pub fn irrep(rs: RootSystem, weight: &[i64]) -> Result<Irrep> {
    let complex_dim = weyl_dim(rs, weight)?;
    let field_type = field_type(rs, weight)?;
    Ok(Irrep {
        label: label(rs, weight, complex_dim),
        highest_weight: weight.to_vec(),
        complex_dim,
        field_type,
        real_dim: field_type.real_dim(complex_dim),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimFilter {
    Real,
    Complex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepCatalog {
    pub root_system: RootSystem,
    pub dim_bound: u128,
    pub filter: DimFilter,
    /// Sorted by real dimension, then complex dimension, then highest weight.
    pub entries: Vec<Irrep>,
    /// Largest coefficient sum among the weights explored.
    pub radius: i64,
}

impl IrrepCatalog {
    pub fn nontrivial(&self) -> impl Iterator<Item = &Irrep> {
        self.entries.iter().filter(|e| e.complex_dim > 1)
    }
}

/// Irreducibles with `real_dim <= dim_bound`.
pub fn catalog_irreps(rs: RootSystem, dim_bound: u128) -> Result<IrrepCatalog> {
    catalog_with(rs, dim_bound, DimFilter::Real)
}

/// Irreducibles with `complex_dim <= dim_bound`.
pub fn catalog_irreps_by_complex_dim(rs: RootSystem, dim_bound: u128) -> Result<IrrepCatalog> {
    catalog_with(rs, dim_bound, DimFilter::Complex)
}

/// The complex dimension strictly increases along every coordinate ray, so the weights
/// with `complex_dim <= bound` form a down-set reachable from 0 by unit steps. The walk
/// checks that monotonicity at every step it takes.
fn catalog_with(rs: RootSystem, dim_bound: u128, filter: DimFilter) -> Result<IrrepCatalog> {
    let rank = rs.rank();
    let zero = vec![0i64; rank];
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut entries = Vec::new();
    let mut radius = 0;
    seen.insert(zero.clone());
    queue.push_back((zero, 1u128));
    while let Some((w, d)) = queue.pop_front() {
        let rep = irrep(rs, &w)?;
        radius = radius.max(w.iter().sum());
        let keep = match filter {
            DimFilter::Real => rep.real_dim <= dim_bound,
            DimFilter::Complex => rep.complex_dim <= dim_bound,
        };
        if keep {
            entries.push(rep);
        }
        for i in 0..rank {
            let mut next = w.clone();
            next[i] += 1;
            let nd = weyl_dim(rs, &next)?;
            if nd <= d {
                return Err(Error::NonIntegralDimension(format!(
                    "dimension not increasing from {w:?} to {next:?}"
                )));
            }
            if nd <= dim_bound && seen.insert(next.clone()) {
                queue.push_back((next, nd));
            }
        }
    }
    entries.sort_by(|a, b| {
        (a.real_dim, a.complex_dim, &a.highest_weight).cmp(&(b.real_dim, b.complex_dim, &b.highest_weight))
    });
    Ok(IrrepCatalog {
        root_system: rs,
        dim_bound,
        filter,
        entries,
        radius,
    })
}

/// Smallest and second-smallest real dimensions of nontrivial irreducibles, with labels.
pub fn smallest_nontrivial(rs: RootSystem, dim_bound: u128) -> Result<Vec<(String, u128)>> {
    let cat = catalog_irreps(rs, dim_bound)?;
    Ok(cat
        .nontrivial()
        .take(2)
        .map(|e| (e.label.clone(), e.real_dim))
        .collect())
}

/// A factor of the isotropy group `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupFactor {
    Simple(RootSystem),
    /// `S^1`: the trivial representation and the rotation representations `R^2_k`, `k >= 1`.
    /// All `R^2_k` share dimension and type, so one entry stands for the family.
    Circle,
}

impl GroupFactor {
    pub fn name(&self) -> String {
        match self {
            GroupFactor::Simple(rs) => rs.group_name(),
            GroupFactor::Circle => "S^1".into(),
        }
    }

    /// The circle catalog is a reconstruction: weights of circle representations are not
    /// tabulated by the root-system machinery.
    pub fn is_reconstructed(&self) -> bool {
        matches!(self, GroupFactor::Circle)
    }

    pub fn catalog(&self, real_bound: u128) -> Result<Vec<Irrep>> {
        match self {
            GroupFactor::Simple(rs) => Ok(catalog_irreps(*rs, real_bound)?.entries),
            GroupFactor::Circle => {
                let mut out = vec![Irrep {
                    label: "1".into(),
                    highest_weight: vec![0],
                    complex_dim: 1,
                    field_type: FieldType::Real,
                    real_dim: 1,
                }];
                if real_bound >= 2 {
                    out.push(Irrep {
                        label: "R^2_k".into(),
                        highest_weight: vec![1],
                        complex_dim: 1,
                        field_type: FieldType::Complex,
                        real_dim: 2,
                    });
                }
                Ok(out)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionCase {
    pub name: String,
    pub factors: Vec<GroupFactor>,
    pub manifold_dim: u128,
    pub euler_nonzero: bool,
    pub almost_complex_forbidden: bool,
    /// Where the almost-complex obstruction comes from.
    pub provenance: String,
    /// Real dimension up to which factor catalogs are built; defaults to `manifold_dim`.
    pub catalog_bound: Option<u128>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Filter {
    /// Nonzero Euler class forbids odd-dimensional summands.
    F1,
    /// No almost complex structure, so not every summand may carry a complex structure.
    F2,
}

impl Filter {
    pub fn as_str(&self) -> &'static str {
        match self {
            Filter::F1 => "F1",
            Filter::F2 => "F2",
        }
    }
}

/// An external tensor product of one irreducible per factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductIrrep {
    pub labels: Vec<String>,
    pub complex_dim: u128,
    pub field_type: FieldType,
    pub real_dim: u128,
}

impl ProductIrrep {
    pub fn label(&self) -> String {
        self.labels.join("(x)")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    /// Indices into the product catalog, nondecreasing.
    pub summands: Vec<usize>,
    pub rejected_by: Option<Filter>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSummary {
    pub name: String,
    pub smallest_nontrivial_real_dim: Option<u128>,
    /// The factor has no nontrivial irreducible of dimension at most the manifold's.
    pub acts_trivially: bool,
    pub reconstructed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    NoValidV,
    Valid,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::NoValidV => "NO-VALID-V",
            Verdict::Valid => "VALID-V-EXISTS",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub factors: Vec<FactorSummary>,
    pub catalog: Vec<ProductIrrep>,
    pub trace: Vec<TraceEntry>,
}

impl ObstructionReport {
    pub fn rejected_by(&self, f: Filter) -> usize {
        self.trace.iter().filter(|t| t.rejected_by == Some(f)).count()
    }

    pub fn survivors(&self) -> impl Iterator<Item = &TraceEntry> {
        self.trace.iter().filter(|t| t.rejected_by.is_none())
    }
}

pub fn obstruct_tangent_rep(case: &ObstructionCase) -> Result<ObstructionReport> {
    let dim = case.manifold_dim;
    if dim == 0 || dim % 2 != 0 {
        return Err(Error::schema("obstruction.manifold_dim", "must be even and positive"));
    }
    if case.factors.is_empty() {
        return Err(Error::schema("obstruction.factors", "at least one factor is required"));
    }
    let mut catalogs = Vec::with_capacity(case.factors.len());
    let mut factors = Vec::with_capacity(case.factors.len());
    let bound = case.catalog_bound.unwrap_or(dim);
    for f in &case.factors {
        // factor dimensions never exceed the dimension of a product containing them
        if bound < dim {
            return Err(Error::IncompleteCatalog {
                factor: f.name(),
                covered: bound as u64,
                needed: dim as u64,
            });
        }
        let cat = f.catalog(bound)?;
        let smallest = cat.iter().filter(|e| e.complex_dim > 1 || e.field_type != FieldType::Real).map(|e| e.real_dim).min();
        factors.push(FactorSummary {
            name: f.name(),
            smallest_nontrivial_real_dim: smallest,
            acts_trivially: smallest.is_none(),
            reconstructed: f.is_reconstructed(),
        });
        catalogs.push(cat);
    }

    // external tensor products with real dimension at most `dim`
    let mut products: Vec<ProductIrrep> = vec![ProductIrrep {
        labels: Vec::new(),
        complex_dim: 1,
        field_type: FieldType::Real,
        real_dim: 1,
    }];
    for cat in &catalogs {
        let mut next = Vec::new();
        for p in &products {
            for e in cat {
                let complex_dim = p.complex_dim * e.complex_dim;
                let field_type = p.field_type.tensor(e.field_type);
                let real_dim = field_type.real_dim(complex_dim);
                if real_dim <= dim {
                    let mut labels = p.labels.clone();
                    labels.push(e.label.clone());
                    next.push(ProductIrrep {
                        labels,
                        complex_dim,
                        field_type,
                        real_dim,
                    });
                }
            }
        }
        products = next;
    }
    products.sort_by(|a, b| (a.real_dim, a.label()).cmp(&(b.real_dim, b.label())));

    let mut trace = Vec::new();
    let mut current = Vec::new();
    multisets(&products, 0, dim, &mut current, &mut trace);
    for t in &mut trace {
        t.rejected_by = classify(case, &products, &t.summands);
    }
    let verdict = if trace.iter().all(|t| t.rejected_by.is_some()) {
        Verdict::NoValidV
    } else {
        Verdict::Valid
    };
    Ok(ObstructionReport {
        verdict,
        factors,
        catalog: products,
        trace,
    })
}

fn classify(case: &ObstructionCase, products: &[ProductIrrep], summands: &[usize]) -> Option<Filter> {
    if case.euler_nonzero && summands.iter().any(|&i| products[i].real_dim % 2 == 1) {
        return Some(Filter::F1);
    }
    if case.almost_complex_forbidden
        && summands
            .iter()
            .all(|&i| products[i].field_type.carries_complex_structure())
    {
        return Some(Filter::F2);
    }
    None
}

fn multisets(
    products: &[ProductIrrep],
    start: usize,
    remaining: u128,
    current: &mut Vec<usize>,
    out: &mut Vec<TraceEntry>,
) {
    if remaining == 0 {
        out.push(TraceEntry {
            summands: current.clone(),
            rejected_by: None,
        });
        return;
    }
    for i in start..products.len() {
        let d = products[i].real_dim;
        if d > remaining {
            break;
        }
        current.push(i);
        multisets(products, i, remaining - d, current, out);
        current.pop();
    }
}

/// Count of multisets per filter outcome, keyed by `"F1"`, `"F2"` and `"none"`.
pub fn trace_summary(report: &ObstructionReport) -> BTreeMap<&'static str, usize> {
    let mut out = BTreeMap::new();
    for t in &report.trace {
        *out.entry(t.rejected_by.map_or("none", |f| f.as_str())).or_insert(0) += 1;
    }
    out
}
