//! Cohomology rings of the manifolds treated by the built-in cases.

use crate::error::Result;
use crate::rational::int;
use crate::ring::{GradedClass, Monomial, RewriteRule, RingPresentation};

fn names(gens: &[&str]) -> Vec<String> {
    gens.iter().map(|s| s.to_string()).collect()
}

pub(crate) fn class(nvars: usize, terms: &[(i64, &[u32])]) -> GradedClass {
    GradedClass::from_terms(
        nvars,
        terms
            .iter()
            .map(|(c, e)| (Monomial::new(e.to_vec()), int(*c))),
    )
    .expect("consistent generator count")
}

fn rule(lhs: &[u32], rhs: &[(i64, &[u32])]) -> RewriteRule {
    RewriteRule {
        lhs: Monomial::new(lhs.to_vec()),
        rhs: class(lhs.len(), rhs),
    }
}

/// `Z[u,v]/<u^2 - v^2, uv>`, the connected sum of two complex projective planes.
pub fn cp2_connect_sum() -> Result<RingPresentation> {
    RingPresentation::new(
        names(&["u", "v"]),
        vec![rule(&[0, 2], &[(1, &[2, 0])]), rule(&[1, 1], &[])],
        4,
        Monomial::new(vec![2, 0]),
    )
}

/// `Z[u,v]/<u^2 + v^2, uv>`, the connected sum with reversed orientation.
pub fn cp2_connect_sum_bar() -> Result<RingPresentation> {
    RingPresentation::new(
        names(&["u", "v"]),
        vec![rule(&[0, 2], &[(-1, &[2, 0])]), rule(&[1, 1], &[])],
        4,
        Monomial::new(vec![2, 0]),
    )
}

/// `Z[u,v]/<u^2, v^2>`.
pub fn s2_times_s2() -> Result<RingPresentation> {
    RingPresentation::new(
        names(&["u", "v"]),
        vec![rule(&[2, 0], &[]), rule(&[0, 2], &[])],
        4,
        Monomial::new(vec![1, 1]),
    )
}

/// `Z[x,y]/<x^3, y^2 + xy - x^2>` with the listed degree-6 consequences.
pub fn su3_t2() -> Result<RingPresentation> {
    RingPresentation::new(
        names(&["x", "y"]),
        vec![
            rule(&[3, 0], &[]),
            rule(&[0, 2], &[(1, &[2, 0]), (-1, &[1, 1])]),
            rule(&[0, 3], &[(2, &[2, 1])]),
            rule(&[1, 2], &[(-1, &[2, 1])]),
        ],
        6,
        Monomial::new(vec![2, 1]),
    )
}

/// Cohomology of `R(2q)` in the basis `v1 = u1 + u2`, `v2 = u2`, `v3 = q u1 + u3`.
pub fn r_p_v_basis(q: i64) -> Result<RingPresentation> {
    let k = 2 * q * q;
    RingPresentation::new(
        names(&["v1", "v2", "v3"]),
        vec![
            rule(&[0, 2, 0], &[(1, &[2, 0, 0])]),
            rule(&[1, 1, 0], &[]),
            rule(&[0, 0, 2], &[(k, &[2, 0, 0])]),
            rule(&[3, 0, 0], &[]),
            rule(&[0, 3, 0], &[]),
            rule(&[2, 1, 0], &[]),
            rule(&[1, 2, 0], &[]),
            rule(&[1, 1, 1], &[]),
            rule(&[1, 0, 2], &[]),
            rule(&[0, 0, 3], &[(k, &[2, 0, 1])]),
            rule(&[0, 2, 1], &[(1, &[2, 0, 1])]),
        ],
        6,
        Monomial::new(vec![2, 0, 1]),
    )
}

/// Cohomology of `R(p)` in the original basis `u1, u2, u3`.
///
/// The printed relation table is read with two corrections: the third ideal
/// generator is `u3^2 + p u1 u3`, and the degree-6 entry `u3^2 = -2p^2 u1u2u3` is
/// read as `u3^3 = -2p^2 u1u2u3` (the printed form mixes degrees 4 and 6).
pub fn r_p_u_basis(p: i64) -> Result<RingPresentation> {
    RingPresentation::new(
        names(&["u1", "u2", "u3"]),
        vec![
            rule(&[2, 0, 0], &[(-2, &[1, 1, 0])]),
            rule(&[0, 2, 0], &[(-1, &[1, 1, 0])]),
            rule(&[0, 0, 2], &[(-p, &[1, 0, 1])]),
            rule(&[3, 0, 0], &[]),
            rule(&[0, 3, 0], &[]),
            rule(&[2, 1, 0], &[]),
            rule(&[1, 2, 0], &[]),
            rule(&[0, 0, 3], &[(-2 * p * p, &[1, 1, 1])]),
            rule(&[2, 0, 1], &[(-2, &[1, 1, 1])]),
            rule(&[1, 0, 2], &[(2 * p, &[1, 1, 1])]),
            rule(&[0, 2, 1], &[(-1, &[1, 1, 1])]),
            rule(&[0, 1, 2], &[(-p, &[1, 1, 1])]),
        ],
        6,
        Monomial::new(vec![1, 1, 1]),
    )
}

/// The printed u-basis table taken literally, with `u3^2 = -2p^2 u1u2u3` as a rule.
pub fn r_p_u_basis_literal(p: i64) -> Result<RingPresentation> {
    RingPresentation::new(
        names(&["u1", "u2", "u3"]),
        vec![
            rule(&[2, 0, 0], &[(-2, &[1, 1, 0])]),
            rule(&[0, 2, 0], &[(-1, &[1, 1, 0])]),
            rule(&[0, 0, 2], &[(-p, &[1, 0, 1])]),
            rule(&[0, 0, 2], &[(-2 * p * p, &[1, 1, 1])]),
        ],
        6,
        Monomial::new(vec![1, 1, 1]),
    )
}

/// Images of `v1, v2, v3` in the u-basis ring, for `p = 2q`.
pub fn r_p_change_of_basis(q: i64) -> Vec<GradedClass> {
    vec![
        class(3, &[(1, &[1, 0, 0]), (1, &[0, 1, 0])]),
        class(3, &[(1, &[0, 1, 0])]),
        class(3, &[(q, &[1, 0, 0]), (1, &[0, 0, 1])]),
    ]
}

/// `Z[u,z]/<u^2 - 2z^2, z^4>`, with generators ordered `(z, u)` so that the degree-4
/// basis reads `{z^2, uz}`.
pub fn sp2_t2() -> Result<RingPresentation> {
    RingPresentation::new(
        names(&["z", "u"]),
        vec![rule(&[0, 2], &[(2, &[2, 0])]), rule(&[4, 0], &[])],
        8,
        Monomial::new(vec![3, 1]),
    )
}

/// `Z[h]/<h^(n+1)>`.
pub fn cpn(n: u32) -> Result<RingPresentation> {
    let mut lhs = [0u32; 1];
    lhs[0] = n + 1;
    RingPresentation::new(
        names(&["h"]),
        vec![rule(&lhs, &[])],
        2 * n,
        Monomial::new(vec![n]),
    )
}

/// Every built-in presentation, labelled, for suite-wide checks.
pub fn all_builtin() -> Vec<(String, RingPresentation)> {
    let mut out = vec![
        ("cp2-connect-sum".to_string(), cp2_connect_sum().unwrap()),
        ("cp2-connect-sum-bar".to_string(), cp2_connect_sum_bar().unwrap()),
        ("s2xs2".to_string(), s2_times_s2().unwrap()),
        ("su3-t2".to_string(), su3_t2().unwrap()),
        ("sp2-t2".to_string(), sp2_t2().unwrap()),
    ];
    for q in 2..=5 {
        out.push((format!("r-p(v, q={q})"), r_p_v_basis(q).unwrap()));
        out.push((format!("r-p(u, p={})", 2 * q), r_p_u_basis(2 * q).unwrap()));
    }
    for n in 1..=4 {
        out.push((format!("cp{n}"), cpn(n).unwrap()));
    }
    out
}
