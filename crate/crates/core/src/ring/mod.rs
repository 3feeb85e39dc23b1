//! Graded commutative rings over the integers presented by degree-2 generators and an
//! ordered set of monomial rewrite rules, truncated above a top degree.

mod class;
mod document;
mod monomial;
mod rewrite;

pub use class::GradedClass;
pub use document::{class_from_json, class_to_json, parse_presentation, presentation_to_json};
pub use monomial::Monomial;
pub use rewrite::{ConfluenceReport, RewriteRule, RewriteSystem};

use num_traits::Zero;
use crate::error::{Error, Result};
use crate::rational::Rational;
use rewrite::NormalFormTable;

/// A validated presentation: confluent, terminating, with a fundamental monomial that
/// spans the top degree.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    system: RewriteSystem,
    fundamental: Monomial,
    table: NormalFormTable,
    bases: Vec<Vec<Monomial>>,
    report: ConfluenceReport,
}

impl RingPresentation {
    pub fn new(
        generators: Vec<String>,
        rules: Vec<RewriteRule>,
        top_degree: u32,
        fundamental: Monomial,
    ) -> Result<Self> {
        if top_degree % 2 != 0 {
            return Err(Error::BadDegree(top_degree));
        }
        let system = RewriteSystem {
            generators,
            rules,
            top_degree,
        };
        let (report, table) = system.check_confluence()?;
        let n = system.nvars();
        if fundamental.nvars() != n {
            return Err(Error::GeneratorMismatch {
                expected: n,
                found: fundamental.nvars(),
            });
        }
        let bases: Vec<Vec<Monomial>> = (0..=top_degree / 2)
            .map(|k| {
                Monomial::all_of_degree(n, 2 * k)
                    .into_iter()
                    .filter(|m| {
                        let nf = &table[m];
                        nf.len() == 1 && nf.coefficient(m) == num_traits::One::one()
                    })
                    .collect()
            })
            .collect();
        let names = &system.generators;
        if fundamental.degree() != top_degree {
            return Err(Error::BadFundamental(format!(
                "{} has degree {}, expected {top_degree}",
                fundamental.display(names),
                fundamental.degree()
            )));
        }
        let top = bases.last().expect("degree 0 always present");
        if top.len() != 1 || top[0] != fundamental {
            return Err(Error::BadFundamental(format!(
                "{} is not the unique irreducible monomial of degree {top_degree} (basis: [{}])",
                fundamental.display(names),
                top.iter()
                    .map(|m| m.display(names))
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
        Ok(RingPresentation {
            system,
            fundamental,
            table,
            bases,
            report,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.system.generators
    }

    pub fn nvars(&self) -> usize {
        self.system.nvars()
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.system.rules
    }

    pub fn top_degree(&self) -> u32 {
        self.system.top_degree
    }

    /// Complex dimension `n` with `2n = top_degree`.
    pub fn complex_dim(&self) -> usize {
        (self.system.top_degree / 2) as usize
    }

    pub fn fundamental(&self) -> &Monomial {
        &self.fundamental
    }

    pub fn check_confluence(&self) -> &ConfluenceReport {
        &self.report
    }

    pub fn zero(&self) -> GradedClass {
        GradedClass::zero(self.nvars())
    }

    pub fn one(&self) -> GradedClass {
        GradedClass::one(self.nvars())
    }

    pub fn generator(&self, index: usize) -> GradedClass {
        GradedClass::generator(self.nvars(), index)
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.system.generators.iter().position(|g| g == name)
    }

    fn check(&self, c: &GradedClass) -> Result<()> {
        if c.nvars() != self.nvars() {
            return Err(Error::GeneratorMismatch {
                expected: self.nvars(),
                found: c.nvars(),
            });
        }
        Ok(())
    }

    /// Fixpoint of rule application. Monomials above the top degree vanish.
    pub fn normal_form(&self, c: &GradedClass) -> Result<GradedClass> {
        self.check(c)?;
        let mut out = self.zero();
        for (m, coef) in c.terms() {
            if let Some(nf) = self.table.get(m) {
                for (u, d) in nf.terms() {
                    out.add_term(u.clone(), coef * d);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, a: &GradedClass, b: &GradedClass) -> Result<GradedClass> {
        self.check(a)?;
        self.normal_form(&a.add(b)?)
    }

    pub fn mul(&self, a: &GradedClass, b: &GradedClass) -> Result<GradedClass> {
        self.check(a)?;
        self.check(b)?;
        let a = self.normal_form(a)?;
        let b = self.normal_form(b)?;
        self.normal_form(&a.mul_truncated(&b, self.top_degree()))
    }

    pub fn scale(&self, r: &Rational, a: &GradedClass) -> Result<GradedClass> {
        self.normal_form(&a.scale(r))
    }

    pub fn pow(&self, a: &GradedClass, k: u32) -> Result<GradedClass> {
        let mut out = self.one();
        for _ in 0..k {
            out = self.mul(&out, a)?;
        }
        Ok(out)
    }

    pub fn product<'a, I>(&self, factors: I) -> Result<GradedClass>
    where
        I: IntoIterator<Item = &'a GradedClass>,
    {
        let mut out = self.one();
        for f in factors {
            out = self.mul(&out, f)?;
        }
        Ok(out)
    }

    /// Coefficient of the fundamental monomial. The class must be homogeneous of top
    /// degree (or zero).
    pub fn integrate(&self, c: &GradedClass) -> Result<Rational> {
        self.check(c)?;
        if !c.is_homogeneous_of(self.top_degree()) {
            let found = c
                .terms()
                .map(|(m, _)| m.degree())
                .find(|&d| d != self.top_degree())
                .unwrap_or(0);
            return Err(Error::WrongDegree {
                expected: self.top_degree(),
                found,
            });
        }
        Ok(self.normal_form(c)?.coefficient(&self.fundamental))
    }

    /// Integral of the top-degree component of an inhomogeneous class.
    pub fn integrate_top(&self, c: &GradedClass) -> Result<Rational> {
        self.integrate(&c.component(self.top_degree()))
    }

    pub fn basis(&self, degree: u32) -> Result<&[Monomial]> {
        if degree % 2 != 0 || degree > self.top_degree() {
            return Err(Error::BadDegree(degree));
        }
        Ok(&self.bases[(degree / 2) as usize])
    }

    /// Coordinates of a homogeneous class in `basis(degree)`.
    pub fn coordinates(&self, c: &GradedClass, degree: u32) -> Result<Vec<Rational>> {
        let nf = self.normal_form(c)?;
        if !nf.is_homogeneous_of(degree) {
            return Err(Error::WrongDegree {
                expected: degree,
                found: nf.degree().unwrap_or(0),
            });
        }
        Ok(self
            .basis(degree)?
            .iter()
            .map(|m| nf.coefficient(m))
            .collect())
    }

    pub fn basis_sizes(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn satisfies_poincare_duality(&self) -> bool {
        let s = self.basis_sizes();
        s.iter().eq(s.iter().rev())
    }

    pub fn display(&self, c: &GradedClass) -> String {
        c.display(self.generators())
    }

    pub fn display_monomial(&self, m: &Monomial) -> String {
        m.display(self.generators())
    }
}

/// Outcome of mapping the generators of one presentation into another ring.
#[derive(Clone, Debug)]
pub struct SubstitutionReport {
    pub consistent: bool,
    /// `(relation, image of lhs - rhs after reduction)` for every rule of the source.
    pub residuals: Vec<(String, String)>,
    /// Image of the source's fundamental monomial, as a multiple of the target's.
    pub fundamental_image: Rational,
}

/// Substitutes `images[i]` (degree-2 classes of `target`) for generator `i` of `source`
/// and reduces every source relation `lhs - rhs` in `target`.
pub fn check_substitution(
    source: &RingPresentation,
    target: &RingPresentation,
    images: &[GradedClass],
) -> Result<SubstitutionReport> {
    if images.len() != source.nvars() {
        return Err(Error::GeneratorMismatch {
            expected: source.nvars(),
            found: images.len(),
        });
    }
    for img in images {
        target.check(img)?;
        if !img.is_homogeneous_of(2) {
            return Err(Error::WrongDegree {
                expected: 2,
                found: img.degree().unwrap_or(0),
            });
        }
    }
    let eval = |c: &GradedClass| -> Result<GradedClass> {
        let mut out = target.zero();
        for (m, coef) in c.terms() {
            let mut term = target.one();
            for (i, &e) in m.exponents().iter().enumerate() {
                term = target.mul(&term, &target.pow(&images[i], e)?)?;
            }
            out = target.add(&out, &term.scale(coef))?;
        }
        Ok(out)
    };
    let mut residuals = Vec::new();
    let mut consistent = true;
    for rule in source.rules() {
        let lhs = GradedClass::monomial(rule.lhs.clone(), num_traits::One::one());
        let diff = eval(&lhs)?.sub(&eval(&rule.rhs)?)?;
        let diff = target.normal_form(&diff)?;
        consistent &= diff.is_zero();
        residuals.push((
            format!(
                "{} = {}",
                source.display_monomial(&rule.lhs),
                source.display(&rule.rhs)
            ),
            target.display(&diff),
        ));
    }
    let fund = eval(&GradedClass::monomial(
        source.fundamental().clone(),
        num_traits::One::one(),
    ))?;
    let fundamental_image = target.integrate(&fund)?;
    if fundamental_image.is_zero() {
        consistent = false;
    }
    Ok(SubstitutionReport {
        consistent,
        residuals,
        fundamental_image,
    })
}
