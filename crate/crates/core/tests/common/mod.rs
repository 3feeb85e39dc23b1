//! Shared fixtures and hand-expanded oracles for the integration tests.
#![allow(dead_code)]

use biquot_core::case::{builtin_case, parse_case, BuiltinParams, CaseDocument};
use biquot_core::rational::int;
use biquot_core::ring::{GradedClass, Monomial, RingPresentation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn case(name: &str, q: Option<i64>, n: Option<u32>) -> CaseDocument {
    let doc = builtin_case(name, &BuiltinParams { q, n }).expect("builtin case");
    parse_case(&doc).expect("builtin case parses")
}

pub fn isqrt(n: i64) -> i64 {
    let mut r = 0;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// A random inhomogeneous class with up to six terms, in normal form.
pub fn random_class(ring: &RingPresentation, rng: &mut ChaCha8Rng) -> GradedClass {
    let n = ring.nvars();
    let half = ring.top_degree() / 2;
    let terms = rng.random_range(0..=6);
    let mut out = Vec::new();
    for _ in 0..terms {
        let total = rng.random_range(0..=half);
        let mut exps = vec![0u32; n];
        for _ in 0..total {
            exps[rng.random_range(0..n)] += 1;
        }
        out.push((Monomial::new(exps), int(rng.random_range(-5..=5))));
    }
    let c = GradedClass::from_terms(n, out).expect("terms");
    ring.normal_form(&c).expect("normal form")
}

pub fn random_vec(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<i64> {
    (0..len).map(|_| rng.random_range(-bound..=bound)).collect()
}

/// Every vector of `len` integers in `[-bound, bound]`.
pub fn for_each_tuple(len: usize, bound: i64, mut f: impl FnMut(&[i64])) {
    let mut x = vec![-bound; len];
    loop {
        f(&x);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            if x[i] < bound {
                x[i] += 1;
                break;
            }
            x[i] = -bound;
            i += 1;
        }
    }
}

/// Orbit minimum under reordering and negating bundles, by brute force.
pub fn brute_canonical(bundles: &[Vec<i64>], signs: bool) -> Vec<Vec<i64>> {
    fn perms(items: &[Vec<i64>]) -> Vec<Vec<Vec<i64>>> {
        if items.len() <= 1 {
            return vec![items.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.to_vec();
            let head = rest.remove(i);
            for mut p in perms(&rest) {
                p.insert(0, head.clone());
                out.push(p);
            }
        }
        out
    }
    let m = bundles.len();
    let masks = if signs { 1u32 << m } else { 1 };
    let mut best: Option<Vec<Vec<i64>>> = None;
    for mask in 0..masks {
        let signed: Vec<Vec<i64>> = bundles
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if mask >> i & 1 == 1 {
                    v.iter().map(|x| -x).collect()
                } else {
                    v.clone()
                }
            })
            .collect();
        for p in perms(&signed) {
            if best.as_ref().is_none_or(|b| p < *b) {
                best = Some(p);
            }
        }
    }
    best.unwrap_or_default()
}

/// `Z[u,v]/<u^2 - v^2, uv>`: `(x^2 coefficient of p1, euler integral)` for `(a_i u + b_i v)`.
pub fn cp2_expand(x: &[i64]) -> (i64, i64) {
    let (a1, b1, a2, b2) = (x[0], x[1], x[2], x[3]);
    (a1 * a1 + b1 * b1 + a2 * a2 + b2 * b2, a1 * a2 + b1 * b2)
}

/// `Z[x,y]/<x^3, y^2 + xy - x^2>` with bundles `a_i x + b_i y`: p1 in `{x^2, xy}` and
/// the euler integral against `x^2 y`.
pub fn su3_expand(x: &[i64]) -> ([i64; 2], i64) {
    let mut p1 = [0; 2];
    for k in 0..x.len() / 2 {
        let (a, b) = (x[2 * k], x[2 * k + 1]);
        p1[0] += a * a + b * b;
        p1[1] += 2 * a * b - b * b;
    }
    // integrals of x^3, x^2y, xy^2, y^3
    let table = [0, 1, -1, 2];
    let mut e = 0;
    for mask in 0..8u32 {
        let mut coef = 1;
        let mut ys = 0;
        for k in 0..3 {
            if mask >> k & 1 == 1 {
                coef *= x[2 * k + 1];
                ys += 1;
            } else {
                coef *= x[2 * k];
            }
        }
        e += coef * table[ys];
    }
    (p1, e)
}

/// The v-basis of `R(2q)` with bundles `a v1 + b v2 + c v3`: p1 in
/// `{v1^2, v1v3, v2v3}` and the euler integral against `v1^2 v3`.
pub fn rp_expand(q: i64, x: &[i64]) -> ([i64; 3], i64) {
    let k = 2 * q * q;
    let mut p1 = [0; 3];
    for t in x.chunks(3) {
        let (a, b, c) = (t[0], t[1], t[2]);
        p1[0] += a * a + b * b + k * c * c;
        p1[1] += 2 * a * c;
        p1[2] += 2 * b * c;
    }
    let integral = |e: [usize; 3]| -> i64 {
        match e {
            [2, 0, 1] | [0, 2, 1] => 1,
            [0, 0, 3] => k,
            _ => 0,
        }
    };
    let mut e = 0;
    for i in 0..3 {
        for j in 0..3 {
            for l in 0..3 {
                let mut exps = [0; 3];
                exps[i] += 1;
                exps[j] += 1;
                exps[l] += 1;
                e += x[i] * x[3 + j] * x[6 + l] * integral(exps);
            }
        }
    }
    (p1, e)
}

/// `Z[z,u]/<u^2 - 2z^2, z^4>` with bundles `a_i z + b_i u`: p1 in `{z^2, uz}` and the
/// euler integral against `z^3 u`.
pub fn sp2_expand(x: &[i64]) -> ([i64; 2], i64) {
    let m = x.len() / 2;
    let mut p1 = [0; 2];
    for k in 0..m {
        let (a, b) = (x[2 * k], x[2 * k + 1]);
        p1[0] += a * a + 2 * b * b;
        p1[1] += 2 * a * b;
    }
    let mut e = 0;
    for mask in 0..(1u32 << m) {
        let mut coef = 1;
        let mut us = 0u32;
        for k in 0..m {
            if mask >> k & 1 == 1 {
                coef *= x[2 * k + 1];
                us += 1;
            } else {
                coef *= x[2 * k];
            }
        }
        if us % 2 == 1 {
            e += coef << ((us - 1) / 2);
        }
    }
    (p1, e)
}

/// `e_k(a)` for `k = 0..=len`.
pub fn elementary_symmetric(a: &[i64]) -> Vec<i64> {
    let mut e = vec![0; a.len() + 1];
    e[0] = 1;
    for (i, &x) in a.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            e[k] += e[k - 1] * x;
        }
    }
    e
}

pub fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
