//! Characteristic classes of realified sums of complex line bundles.
//!
//! For `L = L_1 + ... + L_m` with first Chern classes `c_i`:
//! `p1(rL) = sum c_i^2`, `e(rL) = prod c_i` and `c(L) = prod (1 + c_i)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::ring::{GradedClass, RingPresentation};

#[derive(Clone, Debug)]
pub struct LineBundleSum<'r> {
    ring: &'r RingPresentation,
    c1: Vec<GradedClass>,
}

impl<'r> LineBundleSum<'r> {
    pub fn new(ring: &'r RingPresentation, c1: Vec<GradedClass>) -> Result<Self> {
        if c1.is_empty() {
            return Err(Error::schema("line_bundles", "at least one line bundle is required"));
        }
        let c1 = c1
            .iter()
            .map(|c| {
                let nf = ring.normal_form(c)?;
                if !nf.is_homogeneous_of(2) {
                    return Err(Error::WrongDegree {
                        expected: 2,
                        found: nf.degree().unwrap_or(0),
                    });
                }
                if !nf.is_integral() {
                    return Err(Error::NonIntegral(ring.display(&nf)));
                }
                Ok(nf)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LineBundleSum { ring, c1 })
    }

    /// Line bundles given by integer coordinates in the degree-2 basis.
    pub fn from_coordinates(ring: &'r RingPresentation, coords: &[Vec<i64>]) -> Result<Self> {
        let basis = ring.basis(2)?;
        let classes = coords
            .iter()
            .map(|x| {
                if x.len() != basis.len() {
                    return Err(Error::GeneratorMismatch {
                        expected: basis.len(),
                        found: x.len(),
                    });
                }
                Ok(GradedClass::from_coordinates(ring.nvars(), basis, x))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, classes)
    }

    pub fn ring(&self) -> &RingPresentation {
        self.ring
    }

    pub fn first_chern_classes(&self) -> &[GradedClass] {
        &self.c1
    }

    pub fn len(&self) -> usize {
        self.c1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c1.is_empty()
    }

    pub fn first_pontryagin(&self) -> GradedClass {
        let mut p1 = self.ring.zero();
        for c in &self.c1 {
            let sq = self.ring.mul(c, c).expect("same ring");
            p1 = p1.add(&sq).expect("same ring");
        }
        p1
    }

    pub fn euler_class(&self) -> GradedClass {
        self.ring.product(&self.c1).expect("same ring")
    }

    pub fn total_chern(&self) -> GradedClass {
        let mut c = self.ring.one();
        for ci in &self.c1 {
            let factor = self.ring.one().add(ci).expect("same ring");
            c = self.ring.mul(&c, &factor).expect("same ring");
        }
        c
    }
}

/// Characteristic classes a splitting must reproduce.
#[derive(Clone, Debug)]
pub struct TargetClasses {
    pub p1: GradedClass,
    pub euler: GradedClass,
    pub euler_sign_flexible: bool,
    pub real_rank: usize,
    /// Optional total Chern class, for complex splittings.
    pub total_chern: Option<GradedClass>,
}

impl TargetClasses {
    pub fn new(
        ring: &RingPresentation,
        p1: GradedClass,
        euler: GradedClass,
        euler_sign_flexible: bool,
        real_rank: usize,
    ) -> Result<Self> {
        let p1 = ring.normal_form(&p1)?;
        let euler = ring.normal_form(&euler)?;
        if !p1.is_homogeneous_of(4) {
            return Err(Error::WrongDegree {
                expected: 4,
                found: p1.degree().unwrap_or(0),
            });
        }
        if !euler.is_homogeneous_of(real_rank as u32) {
            return Err(Error::WrongDegree {
                expected: real_rank as u32,
                found: euler.degree().unwrap_or(0),
            });
        }
        for c in [&p1, &euler] {
            if !c.is_integral() {
                return Err(Error::NonIntegral(ring.display(c)));
            }
        }
        Ok(TargetClasses {
            p1,
            euler,
            euler_sign_flexible,
            real_rank,
            total_chern: None,
        })
    }

    pub fn with_total_chern(mut self, ring: &RingPresentation, c: GradedClass) -> Result<Self> {
        let c = ring.normal_form(&c)?;
        if !c.is_integral() {
            return Err(Error::NonIntegral(ring.display(&c)));
        }
        self.total_chern = Some(c);
        Ok(self)
    }

    /// Number of trivial real summands needed next to `m` line bundles.
    pub fn trivial_summands(&self, m: usize) -> Result<usize> {
        let rank = 2 * m;
        if rank > self.real_rank {
            return Err(Error::RankMismatch {
                real_rank: self.real_rank,
                line_bundles: m,
                reason: "line bundles exceed the target rank".into(),
            });
        }
        if rank < self.real_rank && !self.euler.is_zero() {
            return Err(Error::RankMismatch {
                real_rank: self.real_rank,
                line_bundles: m,
                reason: "a trivial summand forces a zero Euler class but the target is nonzero"
                    .into(),
            });
        }
        Ok(self.real_rank - rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchReport {
    pub matched: bool,
    pub p1_matches: bool,
    pub euler_matches: bool,
    /// `+1` or `-1` when the Euler class matched, recording the orientation used.
    pub euler_sign: Option<i8>,
    pub chern_matches: Option<bool>,
    pub trivial_summands: usize,
    /// `computed - target` in the degree-4 basis.
    pub p1_residual: Vec<Rational>,
    /// `computed - sign * target` in the degree `real_rank` basis (sign `+1` if no match).
    pub euler_residual: Vec<Rational>,
    /// `(degree, computed - target)` for each graded piece of the total Chern class.
    pub chern_residual: Vec<(u32, Vec<Rational>)>,
    pub p1: GradedClass,
    pub euler: GradedClass,
}

fn coords(ring: &RingPresentation, c: &GradedClass, degree: u32) -> Result<Vec<Rational>> {
    if degree > ring.top_degree() {
        return Ok(Vec::new());
    }
    ring.coordinates(c, degree)
}

pub fn matches_targets(sum: &LineBundleSum<'_>, targets: &TargetClasses) -> Result<MatchReport> {
    let ring = sum.ring();
    let trivial = targets.trivial_summands(sum.len())?;
    let p1 = sum.first_pontryagin();
    let p1_residual = coords(ring, &p1.sub(&targets.p1)?, 4)?;
    let p1_matches = p1_residual.iter().all(Zero::is_zero);

    let euler = if trivial > 0 {
        ring.zero()
    } else {
        sum.euler_class()
    };
    let rank = targets.real_rank as u32;
    let plus = coords(ring, &euler.sub(&targets.euler)?, rank)?;
    let minus = coords(ring, &euler.add(&targets.euler)?, rank)?;
    let (euler_sign, euler_residual) = if plus.iter().all(Zero::is_zero) {
        (Some(1), plus)
    } else if targets.euler_sign_flexible && minus.iter().all(Zero::is_zero) {
        (Some(-1), minus)
    } else {
        (None, plus)
    };
    let euler_matches = euler_sign.is_some();

    let (chern_matches, chern_residual) = match &targets.total_chern {
        None => (None, Vec::new()),
        Some(target) => {
            let diff = sum.total_chern().sub(target)?;
            let mut residual = Vec::new();
            for d in (2..=ring.top_degree()).step_by(2) {
                residual.push((d, ring.coordinates(&diff.component(d), d)?));
            }
            let ok = diff.is_zero();
            (Some(ok), residual)
        }
    };
    Ok(MatchReport {
        matched: p1_matches && euler_matches && chern_matches.unwrap_or(true),
        p1_matches,
        euler_matches,
        euler_sign,
        chern_matches,
        trivial_summands: trivial,
        p1_residual,
        euler_residual,
        chern_residual,
        p1,
        euler,
    })
}

/// Integer structure constants for `p1`, `e` and `c` of `m` line bundles whose first
/// Chern classes are given by coordinates in the degree-2 basis.
///
/// Every constant is a coordinate of a reduced product of basis classes computed by
/// the ring itself, so evaluating an integer tuple here is the same computation as
/// [`LineBundleSum`] specialised to integers.
#[derive(Clone, Debug)]
pub struct SplittingEvaluator {
    m: usize,
    r: usize,
    trivial: usize,
    /// `pair[(k * r + l) * d4 + j]`: coordinate `j` of `b_k * b_l` in degree 4.
    pair: Vec<i64>,
    d4: usize,
    p1_target: Vec<i64>,
    /// Coordinates of `b_{k_1} ... b_{k_m}` in degree `2m`, flattened over `r^m` tuples.
    euler: Vec<i64>,
    de: usize,
    euler_target: Vec<i64>,
    euler_sign_flexible: bool,
    /// `(k, tensor over r^k, width, target coords)` for each Chern degree `2k`.
    chern: Vec<(usize, Vec<i64>, usize, Vec<i64>)>,
    max_coefficient: i64,
}

fn to_i64_vec(v: &[Rational]) -> Result<Vec<i64>> {
    v.iter().map(rational::to_i64).collect()
}

fn product_tensor(ring: &RingPresentation, k: usize) -> Result<(Vec<i64>, usize)> {
    let basis = ring.basis(2)?.to_vec();
    let r = basis.len();
    let degree = 2 * k as u32;
    if degree > ring.top_degree() {
        return Ok((vec![0; r.pow(k as u32)], 0));
    }
    let width = ring.basis(degree)?.len();
    let mut out = Vec::with_capacity(r.pow(k as u32) * width);
    let mut idx = vec![0usize; k];
    loop {
        let mut prod = ring.one();
        for &i in &idx {
            let b = GradedClass::monomial(basis[i].clone(), num_traits::One::one());
            prod = ring.mul(&prod, &b)?;
        }
        out.extend(to_i64_vec(&ring.coordinates(&prod, degree)?)?);
        // odometer, last index fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok((out, width));
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < r {
                break;
            }
            idx[pos] = 0;
        }
    }
}

impl SplittingEvaluator {
    pub fn new(ring: &RingPresentation, targets: &TargetClasses, m: usize) -> Result<Self> {
        let trivial = targets.trivial_summands(m)?;
        let r = ring.basis(2)?.len();
        let (pair, d4) = product_tensor(ring, 2)?;
        let p1_target = to_i64_vec(&coords(ring, &targets.p1, 4)?)?;
        let (euler, de) = if trivial == 0 {
            product_tensor(ring, m)?
        } else {
            (Vec::new(), 0)
        };
        let euler_target = if trivial == 0 {
            to_i64_vec(&coords(ring, &targets.euler, 2 * m as u32)?)?
        } else {
            Vec::new()
        };
        let mut chern = Vec::new();
        if let Some(target) = &targets.total_chern {
            for k in 1..=m.min(ring.complex_dim()) {
                let (t, w) = product_tensor(ring, k)?;
                let d = 2 * k as u32;
                let tc = to_i64_vec(&ring.coordinates(&target.component(d), d)?)?;
                chern.push((k, t, w, tc));
            }
            // graded pieces beyond m must vanish in the target
            for k in m + 1..=ring.complex_dim() {
                let d = 2 * k as u32;
                let tc = to_i64_vec(&ring.coordinates(&target.component(d), d)?)?;
                let w = tc.len();
                chern.push((k, vec![0; r.pow(k as u32) * w], w, tc));
            }
        }
        let max_coefficient = pair
            .iter()
            .chain(&euler)
            .chain(chern.iter().flat_map(|c| c.1.iter()))
            .map(|x| x.abs())
            .max()
            .unwrap_or(0);
        Ok(SplittingEvaluator {
            m,
            r,
            trivial,
            pair,
            d4,
            p1_target,
            euler,
            de,
            euler_target,
            euler_sign_flexible: targets.euler_sign_flexible,
            chern,
            max_coefficient,
        })
    }

    pub fn line_bundles(&self) -> usize {
        self.m
    }

    pub fn rank_h2(&self) -> usize {
        self.r
    }

    pub fn variables(&self) -> usize {
        self.m * self.r
    }

    /// True if 128-bit evaluation cannot overflow for entries bounded by `max_abs`.
    pub fn fits(&self, max_abs: u64) -> bool {
        let terms = (self.r as f64).powi(self.m as i32).max(self.variables() as f64 * self.r as f64);
        let size = (max_abs.max(1) as f64).powi(self.m.max(2) as i32)
            * (self.max_coefficient.max(1) as f64)
            * terms
            * (self.m.max(1) as f64);
        size < 2f64.powi(120)
    }

    pub fn p1(&self, x: &[i64]) -> Vec<i128> {
        let (r, d4) = (self.r, self.d4);
        let mut out = vec![0i128; d4];
        for i in 0..self.m {
            let xi = &x[i * r..(i + 1) * r];
            for k in 0..r {
                if xi[k] == 0 {
                    continue;
                }
                for l in 0..r {
                    if xi[l] == 0 {
                        continue;
                    }
                    let w = xi[k] as i128 * xi[l] as i128;
                    let row = &self.pair[(k * r + l) * d4..(k * r + l + 1) * d4];
                    for (o, &p) in out.iter_mut().zip(row) {
                        *o += w * p as i128;
                    }
                }
            }
        }
        out
    }

    fn multilinear(&self, tensor: &[i64], width: usize, rows: &[&[i64]]) -> Vec<i128> {
        let r = self.r;
        let k = rows.len();
        let mut out = vec![0i128; width];
        let mut idx = vec![0usize; k];
        let mut flat = 0usize;
        loop {
            let mut w: i128 = 1;
            for (row, &i) in rows.iter().zip(&idx) {
                w *= row[i] as i128;
                if w == 0 {
                    break;
                }
            }
            if w != 0 {
                for (o, &t) in out.iter_mut().zip(&tensor[flat * width..(flat + 1) * width]) {
                    *o += w * t as i128;
                }
            }
            flat += 1;
            let mut pos = k;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < r {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    pub fn euler(&self, x: &[i64]) -> Vec<i128> {
        if self.trivial > 0 {
            return Vec::new();
        }
        let rows: Vec<&[i64]> = x.chunks(self.r).collect();
        self.multilinear(&self.euler, self.de, &rows)
    }

    /// Graded pieces `c_1, ..., c_n` of the total Chern class.
    pub fn chern(&self, x: &[i64]) -> Vec<Vec<i128>> {
        let rows: Vec<&[i64]> = x.chunks(self.r).collect();
        self.chern
            .iter()
            .map(|(k, tensor, width, _)| {
                let mut acc = vec![0i128; *width];
                if *k <= self.m {
                    for subset in subsets(self.m, *k) {
                        let sel: Vec<&[i64]> = subset.iter().map(|&i| rows[i]).collect();
                        for (a, v) in acc.iter_mut().zip(self.multilinear(tensor, *width, &sel)) {
                            *a += v;
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// Euler sign if `x` reproduces every target, `None` otherwise.
    pub fn accepts(&self, x: &[i64]) -> Option<i8> {
        debug_assert_eq!(x.len(), self.variables());
        if self
            .p1(x)
            .iter()
            .zip(&self.p1_target)
            .any(|(a, &b)| *a != b as i128)
        {
            return None;
        }
        let sign = if self.trivial > 0 {
            1
        } else {
            let e = self.euler(x);
            if e.iter().zip(&self.euler_target).all(|(a, &b)| *a == b as i128) {
                1
            } else if self.euler_sign_flexible
                && e.iter().zip(&self.euler_target).all(|(a, &b)| *a == -(b as i128))
            {
                -1
            } else {
                return None;
            }
        };
        if !self.chern.is_empty() {
            let c = self.chern(x);
            for (piece, (_, _, _, target)) in c.iter().zip(&self.chern) {
                if piece.iter().zip(target).any(|(a, &b)| *a != b as i128) {
                    return None;
                }
            }
        }
        Some(sign)
    }

    /// Whether the Euler class vanishes identically once the variables in `fixed` are
    /// pinned to `values`, whatever the remaining variables are.
    pub fn euler_vanishes_given(&self, fixed: &[usize], values: &[i64]) -> bool {
        if self.trivial > 0 {
            return false;
        }
        let r = self.r;
        let m = self.m;
        let mut pinned = vec![None; self.variables()];
        for (&v, &x) in fixed.iter().zip(values) {
            pinned[v] = Some(x);
        }
        // group terms of the multilinear expansion by their pattern of free variables
        let mut groups: std::collections::HashMap<Vec<usize>, Vec<i128>> = Default::default();
        let mut idx = vec![0usize; m];
        let mut flat = 0usize;
        loop {
            let mut coef: i128 = 1;
            let mut pattern = Vec::new();
            for (i, &k) in idx.iter().enumerate() {
                match pinned[i * r + k] {
                    Some(x) => coef *= x as i128,
                    None => pattern.push(i * r + k),
                }
            }
            if coef != 0 {
                let entry = groups.entry(pattern).or_insert_with(|| vec![0; self.de]);
                for (e, &t) in entry.iter_mut().zip(&self.euler[flat * self.de..(flat + 1) * self.de]) {
                    *e += coef * t as i128;
                }
            }
            flat += 1;
            let mut pos = m;
            loop {
                if pos == 0 {
                    return groups.values().all(|g| g.iter().all(|&c| c == 0));
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < r {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    pub fn euler_target_is_zero(&self) -> bool {
        self.trivial > 0 || self.euler_target.iter().all(|&x| x == 0)
    }

    pub fn p1_target(&self) -> &[i64] {
        &self.p1_target
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// `(1 + h)^(n+1)` truncated in `Z[h]/h^(n+1)`, the total Chern class of `CP^n`.
pub fn cpn_total_chern(ring: &RingPresentation) -> Result<GradedClass> {
    let h = ring.generator(0);
    let one_plus_h = ring.one().add(&h)?;
    ring.pow(&one_plus_h, ring.complex_dim() as u32 + 1)
}
