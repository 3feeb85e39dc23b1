use std::fmt::Write;

/// Exponent vector over the ring's generators. Every generator has degree 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn generator(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_exponent(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn degree(&self) -> u32 {
        2 * self.total_exponent()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn quotient(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        Some(Monomial(
            self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn display(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (name, &e) in names.iter().zip(&self.0) {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(name);
            if e > 1 {
                write!(out, "^{e}").unwrap();
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    /// All monomials of the given cohomological degree, in descending lexicographic
    /// order of exponent vectors (`x^2` before `x*y` before `y^2`).
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        assert!(degree % 2 == 0, "odd degree");
        let total = degree / 2;
        let mut out = Vec::new();
        let mut current = vec![0u32; nvars];
        fill(&mut current, 0, total, &mut out);
        out
    }
}

fn fill(current: &mut Vec<u32>, index: usize, remaining: u32, out: &mut Vec<Monomial>) {
    let n = current.len();
    if n == 0 {
        if remaining == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    if index == n - 1 {
        current[index] = remaining;
        out.push(Monomial(current.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[index] = e;
        fill(current, index + 1, remaining - e, out);
    }
    current[index] = 0;
}
