//! Exact multivariate polynomials in n commuting variables.
//!
//! Monomials are exponent vectors ordered graded-lexicographically
//! (total degree first, then lexicographic on the exponent tuple), which
//! fixes a canonical term order for iteration, printing and echelon
//! pivots. Terms with coefficient zero are never stored, and the degree
//! of the zero polynomial is the sentinel -1.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

/// Exponent vector of a single monomial; index i holds the power of x_{i+1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The constant monomial 1 in n variables.
    pub fn unit(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The monomial x_{axis+1} (0-based axis).
    pub fn var(n: usize, axis: usize) -> Self {
        assert!(axis < n, "variable axis {axis} out of range for n={n}");
        let mut e = vec![0; n];
        e[axis] = 1;
        Monomial(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, axis: usize) -> u32 {
        self.0[axis]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Product of monomials: exponentwise sum.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.len(), other.len(), "monomial dimension mismatch");
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Divides by x_{axis+1}; returns the old exponent alongside, or None
    /// if the monomial does not contain the variable.
    pub fn step_down(&self, axis: usize) -> Option<(Monomial, u32)> {
        let e = self.0[axis];
        if e == 0 {
            return None;
        }
        let mut exps = self.0.clone();
        exps[axis] = e - 1;
        Some((Monomial(exps), e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len(), other.len());
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: a term map keyed by monomials in graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<T: Scalar> {
    dim: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "polynomials need at least one variable");
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: T) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(Monomial::unit(dim), c);
        p
    }

    /// The coordinate polynomial x_{axis+1}.
    pub fn var(dim: usize, axis: usize) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(Monomial::var(dim, axis), T::one());
        p
    }

    pub fn monomial(dim: usize, m: Monomial, c: T) -> Self {
        assert_eq!(m.len(), dim, "monomial dimension mismatch");
        let mut p = Self::zero(dim);
        p.add_term(m, c);
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; -1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .next_back()
            .map(|m| i64::from(m.total_degree()))
            .unwrap_or(-1)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    /// Accumulates a term, dropping the entry if the sum vanishes.
    pub fn add_term(&mut self, m: Monomial, c: T) {
        assert_eq!(m.len(), self.dim, "monomial dimension mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(prev) => {
                let sum = prev + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "polynomial dimension mismatch");
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (m, c) in self.terms() {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.dim);
        if c.is_zero() {
            return out;
        }
        for (m, a) in self.terms() {
            out.terms.insert(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "polynomial dimension mismatch");
        let mut out = Self::zero(self.dim);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Formal partial derivative along x_{axis+1} (0-based axis).
    pub fn partial(&self, axis: usize) -> Self {
        assert!(axis < self.dim, "axis {axis} out of range");
        let mut out = Self::zero(self.dim);
        for (m, c) in self.terms() {
            if let Some((down, e)) = m.step_down(axis) {
                out.add_term(down, c.clone() * crate::scalar::int(i64::from(e)));
            }
        }
        out
    }

    /// Sum of the terms of total degree exactly k.
    pub fn homogeneous_part(&self, k: usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (m, c) in self.terms() {
            if m.total_degree() as usize == k {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.terms.keys().all(|m| m.total_degree() as usize == k)
    }

    /// True if any stored term involves x_{axis+1}.
    pub fn depends_on(&self, axis: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(axis) > 0)
    }

    /// Composes with a linear change of variables: each x_{i+1} is replaced
    /// by `images[i]`, a polynomial in the new coordinates.
    pub fn substitute(&self, images: &[Polynomial<T>]) -> Self {
        assert_eq!(images.len(), self.dim, "one image per variable required");
        let out_dim = images.first().map(|p| p.dim).unwrap_or(self.dim);
        // power cache per variable, filled on demand
        let mut powers: Vec<Vec<Polynomial<T>>> = images
            .iter()
            .map(|p| vec![Polynomial::constant(out_dim, T::one()), p.clone()])
            .collect();
        let mut out = Self::zero(out_dim);
        for (m, c) in self.terms() {
            let mut term = Polynomial::constant(out_dim, c.clone());
            for axis in 0..self.dim {
                let e = m.exponent(axis) as usize;
                while powers[axis].len() <= e {
                    let next = powers[axis].last().unwrap().mul(&images[axis]);
                    powers[axis].push(next);
                }
                if e > 0 {
                    term = term.mul(&powers[axis][e]);
                }
            }
            out = out.add(&term);
        }
        out
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        Polynomial::add(self, rhs)
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        Polynomial::sub(self, rhs)
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        Polynomial::mul(self, rhs)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::neg(self)
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (axis, &e) in m.exponents().iter().enumerate() {
        if e == 1 {
            parts.push(format!("x{}", axis + 1));
        } else if e > 1 {
            parts.push(format!("x{}^{}", axis + 1, e));
        }
    }
    parts.join("*")
}

/// Canonical textual form: terms in descending graded-lex order,
/// coefficients as `num/den` with unit coefficients elided, monomial
/// factors joined by `*`.
impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let negative = c.is_negative();
            let abs = c.abs();
            let mono = fmt_monomial(m);
            let body = if mono.is_empty() {
                format!("{abs}")
            } else if abs.is_one() {
                mono
            } else {
                format!("{abs}*{mono}")
            };
            if first {
                if negative {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if negative {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::{Poly, Rat};

    fn x(axis: usize) -> Poly {
        Poly::var(2, axis)
    }

    #[test]
    fn addition_cancels_inverses() {
        let p = x(0).add(&x(0).neg());
        assert!(p.is_zero());
        assert_eq!(p.degree(), -1);
    }

    #[test]
    fn addition_of_disjoint_supports() {
        let p = x(0).mul(&x(0)).add(&x(1));
        assert_eq!(p.terms().count(), 2);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.to_string(), "x1^2 + x2");
    }

    #[test]
    fn like_terms_merge() {
        let half = Poly::monomial(
            2,
            Monomial::new(vec![1, 1]),
            ratio::<Rat>(1, 2),
        );
        let p = half.add(&half);
        assert_eq!(p.to_string(), "x1*x2");
    }

    #[test]
    fn difference_of_squares() {
        let p = x(0).add(&x(1)).mul(&x(0).sub(&x(1)));
        assert_eq!(p.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn zero_annihilates() {
        let p = Poly::zero(2).mul(&x(0).add(&x(1)));
        assert!(p.is_zero());
    }

    #[test]
    fn squaring_a_variable() {
        assert_eq!(x(0).mul(&x(0)).to_string(), "x1^2");
    }

    #[test]
    fn partial_derivatives() {
        let sq = x(0).mul(&x(0));
        assert_eq!(sq.partial(0).to_string(), "2*x1");
        assert!(sq.partial(1).is_zero());
        assert_eq!(x(0).mul(&x(1)).partial(0).to_string(), "x2");
    }

    #[test]
    #[should_panic(expected = "axis")]
    fn partial_rejects_bad_axis() {
        let _ = x(0).partial(2);
    }

    #[test]
    fn homogeneous_parts() {
        let p = x(0).mul(&x(0)).add(&x(1));
        assert_eq!(p.homogeneous_part(2).to_string(), "x1^2");
        assert_eq!(p.homogeneous_part(1).to_string(), "x2");
        assert!(Poly::zero(2).homogeneous_part(3).is_zero());
    }

    #[test]
    fn graded_lex_order_is_degree_major() {
        let m1 = Monomial::new(vec![0, 1]); // x2
        let m2 = Monomial::new(vec![1, 0]); // x1
        let m3 = Monomial::new(vec![2, 0]); // x1^2
        assert!(m1 < m2);
        assert!(m2 < m3);
        assert!(Monomial::new(vec![0, 2]) < Monomial::new(vec![1, 1]));
    }

    #[test]
    fn substitution_with_linear_images() {
        // p(x1, x2) = x1^2 under x1 -> u1 + u2, x2 -> u1 - u2
        let p = x(0).mul(&x(0));
        let images = vec![x(0).add(&x(1)), x(0).sub(&x(1))];
        let q = p.substitute(&images);
        assert_eq!(q.to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }

    #[test]
    fn display_of_constants_and_fractions() {
        assert_eq!(Poly::zero(2).to_string(), "0");
        assert_eq!(Poly::constant(2, ratio::<Rat>(-1, 2)).to_string(), "-1/2");
        let p = Poly::constant(2, ratio::<Rat>(3, 1)).sub(&x(1));
        assert_eq!(p.to_string(), "-x2 + 3");
    }
}
