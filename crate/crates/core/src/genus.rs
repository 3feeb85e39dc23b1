//! The `chi_y` genus from Chern-root data.
//!
//! `chi_y(M) = int_M prod_i x_i (1 + y e^{-x_i}) / (1 - e^{-x_i})`, evaluated exactly in the
//! graded ring with `y` a formal variable of degree 0.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::ring::{GradedClass, RingPresentation};

/// A power series in one variable, truncated after `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, i| acc * rational::int(i))
}

impl TruncatedSeries {
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    fn from_fn(order: usize, f: impl Fn(usize) -> Rational) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let k = self.order().min(other.order());
        let mut out = vec![Rational::zero(); k + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(k + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(k + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// `self / other`; requires a nonzero constant term in `other`.
    pub fn div(&self, other: &TruncatedSeries) -> Option<TruncatedSeries> {
        let c0 = other.coeff(0);
        if c0.is_zero() {
            return None;
        }
        let k = self.order().min(other.order());
        let mut q: Vec<Rational> = Vec::with_capacity(k + 1);
        for n in 0..=k {
            let mut acc = self.coeff(n);
            for (i, qi) in q.iter().enumerate() {
                acc -= qi * other.coeff(n - i);
            }
            q.push(acc / &c0);
        }
        Some(TruncatedSeries { coeffs: q })
    }

    /// Substitutes a degree-2 class and reduces in the ring.
    pub fn evaluate(&self, ring: &RingPresentation, x: &GradedClass) -> Result<GradedClass> {
        let mut out = ring.zero();
        let mut power = ring.one();
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power = ring.mul(&power, x)?;
            }
            if power.is_zero() {
                break;
            }
            if !a.is_zero() {
                out = out.add(&power.scale(a))?;
            }
        }
        Ok(out)
    }
}

pub fn series_exp_neg(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        rational::int(sign) / factorial(k)
    })
}

/// `x / (1 - e^{-x})`.
pub fn series_todd_factor(order: usize) -> TruncatedSeries {
    // (1 - e^{-x}) / x = sum (-1)^k x^k / (k+1)!
    let denom = TruncatedSeries::from_fn(order, |k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        rational::int(sign) / factorial(k + 1)
    });
    TruncatedSeries::new(vec![Rational::one()], order)
        .div(&denom)
        .expect("unit constant term")
}

/// `x / tanh(x) = x cosh(x) / sinh(x)`.
pub fn series_tanh_factor(order: usize) -> TruncatedSeries {
    let even = |f: fn(usize) -> usize| {
        move |k: usize| {
            if k % 2 == 0 {
                Rational::one() / factorial(f(k))
            } else {
                Rational::zero()
            }
        }
    };
    let cosh = TruncatedSeries::from_fn(order, even(|k| k));
    let sinh_over_x = TruncatedSeries::from_fn(order, even(|k| k + 1));
    cosh.div(&sinh_over_x).expect("unit constant term")
}

/// `sum_p chi^p y^p` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YPolynomial {
    coeffs: Vec<Rational>,
}

impl YPolynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        YPolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        YPolynomial::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `n`, where the polynomial carries `chi^0 .. chi^n`.
    pub fn n(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, y: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * y + c)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    /// Exact division by `(1 + y)`; `None` if there is a remainder.
    fn div_one_plus_y(&self) -> Option<YPolynomial> {
        if self.coeffs.len() < 2 {
            return None;
        }
        let n = self.coeffs.len() - 1;
        let mut q = vec![Rational::zero(); n];
        // synthetic division from the top coefficient
        let mut carry = Rational::zero();
        for i in (1..=n).rev() {
            let c = &self.coeffs[i] - &carry;
            q[i - 1] = c.clone();
            carry = c;
        }
        if self.coeffs[0] != carry {
            return None;
        }
        Some(YPolynomial { coeffs: q })
    }

    pub fn display(&self) -> String {
        let mut out = String::new();
        for (p, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match p {
                0 => String::new(),
                1 => "y".into(),
                _ => format!("y^{p}"),
            };
            if mono.is_empty() || !abs.is_one() {
                out.push_str(&rational::format(&abs));
                if !mono.is_empty() {
                    out.push('*');
                }
            }
            out.push_str(&mono);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Chern roots of the tangent bundle, possibly stabilised by trivial summands.
///
/// With `k = trivial_summands`, `roots` holds `n + k` classes whose elementary symmetric
/// functions are the Chern classes of `TM + C^k` (as for `CP^n`, whose stable roots are
/// `n + 1` copies of `h`). The genus of the stabilised data is `(1 + y)^k chi_y(M)`.
#[derive(Clone, Debug)]
pub struct ChernRootData<'r> {
    ring: &'r RingPresentation,
    roots: Vec<GradedClass>,
    trivial_summands: usize,
    manifold: bool,
}

impl<'r> ChernRootData<'r> {
    pub fn new(ring: &'r RingPresentation, roots: Vec<GradedClass>) -> Result<Self> {
        Self::stable(ring, roots, 0)
    }

    pub fn stable(
        ring: &'r RingPresentation,
        roots: Vec<GradedClass>,
        trivial_summands: usize,
    ) -> Result<Self> {
        let expected = ring.complex_dim() + trivial_summands;
        if roots.len() != expected {
            return Err(Error::RootCount {
                expected,
                found: roots.len(),
            });
        }
        let roots = roots
            .iter()
            .map(|x| {
                let x = ring.normal_form(x)?;
                if !x.is_homogeneous_of(2) {
                    return Err(Error::WrongDegree {
                        expected: 2,
                        found: x.degree().unwrap_or(0),
                    });
                }
                if !x.is_integral() {
                    return Err(Error::NonIntegral(ring.display(&x)));
                }
                Ok(x)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChernRootData {
            ring,
            roots,
            trivial_summands,
            manifold: false,
        })
    }

    /// Requires integral `chi^p` (genuine manifold data).
    pub fn manifold(mut self) -> Self {
        self.manifold = true;
        self
    }

    pub fn ring(&self) -> &RingPresentation {
        self.ring
    }

    pub fn roots(&self) -> &[GradedClass] {
        &self.roots
    }

    pub fn trivial_summands(&self) -> usize {
        self.trivial_summands
    }

    pub fn n(&self) -> usize {
        self.ring.complex_dim()
    }

    /// Integral of the top component of `prod_i f(x_i)`.
    pub fn integrate_multiplicative(&self, f: &TruncatedSeries) -> Result<Rational> {
        let mut prod = self.ring.one();
        for x in &self.roots {
            prod = self.ring.mul(&prod, &f.evaluate(self.ring, x)?)?;
        }
        self.ring.integrate_top(&prod)
    }

    /// Top Chern number `int c_n`.
    pub fn top_chern_number(&self) -> Result<Rational> {
        let mut c = self.ring.one();
        for x in &self.roots {
            c = self.ring.mul(&c, &self.ring.one().add(x)?)?;
        }
        self.ring.integrate_top(&c)
    }

    /// `int prod_i x_i / tanh(x_i)`, the L-genus in Chern-root form.
    pub fn l_genus(&self) -> Result<Rational> {
        self.integrate_multiplicative(&series_tanh_factor(self.n()))
    }

    fn chi_y_with(&self, t: &Rational) -> Result<YPolynomial> {
        let ring = self.ring;
        let order = self.n();
        let todd = series_todd_factor(order);
        let todd_exp = todd.mul(&series_exp_neg(order));
        // y-coefficients of the running product, each a ring class
        let mut prod: Vec<GradedClass> = vec![ring.one()];
        for x in &self.roots {
            let tx = x.scale(t);
            let a = todd.evaluate(ring, &tx)?;
            let b = todd_exp.evaluate(ring, &tx)?;
            let mut next = vec![ring.zero(); prod.len() + 1];
            for (p, c) in prod.iter().enumerate() {
                next[p] = next[p].add(&ring.mul(c, &a)?)?;
                next[p + 1] = next[p + 1].add(&ring.mul(c, &b)?)?;
            }
            prod = next;
        }
        let t_n = (0..self.n()).fold(Rational::one(), |acc, _| acc * t);
        let mut raw = Vec::with_capacity(prod.len());
        for c in &prod {
            // each root contributes a factor of t in top degree
            raw.push(ring.integrate_top(c)? / &t_n);
        }
        let mut chi = YPolynomial::new(raw);
        for _ in 0..self.trivial_summands {
            chi = chi
                .div_one_plus_y()
                .ok_or(Error::StableDivision(self.trivial_summands))?;
        }
        if self.manifold {
            if let Some(c) = chi.coeffs.iter().find(|c| !c.is_integer()) {
                return Err(Error::NonIntegralGenus(rational::format(c)));
            }
        }
        Ok(chi)
    }

    pub fn chi_y(&self) -> Result<YPolynomial> {
        self.chi_y_with(&Rational::one())
    }

    /// `chi_y` computed with every root replaced by `t x_i`, divided by `t^n`.
    pub fn chi_y_scaled(&self, t: &Rational) -> Result<YPolynomial> {
        if t.is_zero() {
            return Err(Error::schema("t", "scaling parameter must be nonzero"));
        }
        self.chi_y_with(t)
    }
}

pub fn euler_from_chi(chi: &YPolynomial) -> Rational {
    chi.eval(&rational::int(-1))
}

pub fn signature_from_chi(chi: &YPolynomial) -> Rational {
    chi.eval(&Rational::one())
}

pub fn todd_from_chi(chi: &YPolynomial) -> Rational {
    chi.eval(&Rational::zero())
}

/// `chi^p = (-1)^n chi^{n-p}` for every `p`.
pub fn duality_check(chi: &YPolynomial, n: usize) -> bool {
    if chi.coeffs.len() != n + 1 {
        return false;
    }
    (0..=n).all(|p| {
        let mirror = &chi.coeffs[n - p];
        if n % 2 == 0 {
            chi.coeffs[p] == *mirror
        } else {
            chi.coeffs[p] == -mirror
        }
    })
}

/// `chi = (-1)^m sigma (mod 4)`.
pub fn hirzebruch_congruence(chi: i64, sigma: i64, m: i64) -> bool {
    let s = if m.rem_euclid(2) == 0 { sigma } else { -sigma };
    (chi as i128 - s as i128).rem_euclid(4) == 0
}

/// The telescoping decomposition of `chi(-1)` behind the mod-4 congruence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceIdentity {
    pub m: usize,
    pub euler: Rational,
    pub signature: Rational,
    /// `sum_{p<k} chi^{2p+1}` for even `m = 2k`, `sum_{p<=k} chi^{2p}` for odd `m = 2k+1`.
    pub quotient: Rational,
    /// `euler = signature - 4 quotient` (even `m`) or `euler = -signature + 4 quotient`
    /// (odd `m`) holds exactly.
    pub holds: bool,
}

/// Requires `n = 2m` coefficients plus one and duality.
pub fn congruence_identity(chi: &YPolynomial) -> Option<CongruenceIdentity> {
    let n = chi.n();
    if n % 2 != 0 || !duality_check(chi, n) {
        return None;
    }
    let m = n / 2;
    let c = &chi.coeffs;
    let euler = euler_from_chi(chi);
    let signature = signature_from_chi(chi);
    let four = rational::int(4);
    let (quotient, rhs) = if m % 2 == 0 {
        let k = m / 2;
        let q = (0..k).fold(Rational::zero(), |acc, p| acc + &c[2 * p + 1]);
        let rhs = &signature - &four * &q;
        (q, rhs)
    } else {
        let k = (m - 1) / 2;
        let q = (0..=k).fold(Rational::zero(), |acc, p| acc + &c[2 * p]);
        let rhs = -&signature + &four * &q;
        (q, rhs)
    };
    Some(CongruenceIdentity {
        m,
        holds: euler == rhs,
        euler,
        signature,
        quotient,
    })
}

/// `chi mod 4` as an integer in `0..4`, for integral values.
pub fn mod4(r: &Rational) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    let four = num_bigint::BigInt::from(4);
    let (_, rem) = r.to_integer().div_mod_floor(&four);
    rational::to_i64(&Rational::from_integer(rem)).ok()
}
