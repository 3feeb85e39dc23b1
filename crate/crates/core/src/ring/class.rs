use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Monomial;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Finite exact linear combination of monomials. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedClass {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedClass {
    pub fn zero(nvars: usize) -> Self {
        GradedClass {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(Monomial::one(nvars), Rational::one())
    }

    pub fn monomial(m: Monomial, coef: Rational) -> Self {
        let mut c = Self::zero(m.nvars());
        c.add_term(m, coef);
        c
    }

    pub fn generator(nvars: usize, index: usize) -> Self {
        Self::monomial(Monomial::generator(nvars, index), Rational::one())
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut c = Self::zero(nvars);
        for (m, coef) in terms {
            if m.nvars() != nvars {
                return Err(Error::GeneratorMismatch {
                    expected: nvars,
                    found: m.nvars(),
                });
            }
            c.add_term(m, coef);
        }
        Ok(c)
    }

    /// Linear combination `sum coeffs[k] * basis[k]` with integer coefficients.
    pub fn from_coordinates(nvars: usize, basis: &[Monomial], coeffs: &[i64]) -> Self {
        let mut c = Self::zero(nvars);
        for (m, &x) in basis.iter().zip(coeffs) {
            c.add_term(m.clone(), rational::int(x));
        }
        c
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Common degree of all monomials; `None` for the zero class or inhomogeneous classes.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    pub fn component(&self, degree: u32) -> GradedClass {
        GradedClass {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub(crate) fn check_vars(&self, other: &GradedClass) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::GeneratorMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &GradedClass) -> Result<GradedClass> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GradedClass) -> Result<GradedClass> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GradedClass {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, r: &Rational) -> GradedClass {
        if r.is_zero() {
            return Self::zero(self.nvars);
        }
        GradedClass {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    /// Polynomial product without reduction, dropping monomials above `max_degree`.
    pub(crate) fn mul_truncated(&self, other: &GradedClass, max_degree: u32) -> GradedClass {
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if m.degree() <= max_degree {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = m.display(names);
            if m.is_one() {
                out.push_str(&rational::format(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&rational::format(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}
