//! Polynomial vector fields on R^n.
//!
//! A field is a tuple of n polynomials; component i multiplies the
//! coordinate derivative d_{i+1}. The module supplies the Lie bracket,
//! divergence, the degree filtration, and the finite-dimensional
//! coordinate encoding of the space of fields of bounded degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField<T: Scalar> {
    dim: usize,
    components: Vec<Polynomial<T>>,
}

impl<T: Scalar> VectorField<T> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "vector fields need at least one coordinate");
        VectorField {
            dim,
            components: (0..dim).map(|_| Polynomial::zero(dim)).collect(),
        }
    }

    pub fn from_components(components: Vec<Polynomial<T>>) -> Self {
        let dim = components.len();
        assert!(dim >= 1, "vector fields need at least one coordinate");
        for c in &components {
            assert_eq!(c.dim(), dim, "component dimension mismatch");
        }
        VectorField { dim, components }
    }

    /// The field c * x^m d_{axis+1}.
    pub fn monomial_field(dim: usize, m: Monomial, axis: usize, c: T) -> Self {
        let mut f = Self::zero(dim);
        f.components[axis] = Polynomial::monomial(dim, m, c);
        f
    }

    /// The coordinate derivative d_{axis+1}.
    pub fn basis_derivative(dim: usize, axis: usize) -> Self {
        Self::monomial_field(dim, Monomial::unit(dim), axis, T::one())
    }

    /// The Euler field x1 d1 + ... + xn dn.
    pub fn euler(dim: usize) -> Self {
        let mut f = Self::zero(dim);
        for axis in 0..dim {
            f.components[axis] = Polynomial::var(dim, axis);
        }
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn component(&self, axis: usize) -> &Polynomial<T> {
        &self.components[axis]
    }

    pub fn components(&self) -> &[Polynomial<T>] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Max of the component degrees; -1 for the zero field.
    pub fn degree(&self) -> i64 {
        self.components.iter().map(Polynomial::degree).max().unwrap_or(-1)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "field dimension mismatch");
        VectorField {
            dim: self.dim,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        VectorField {
            dim: self.dim,
            components: self.components.iter().map(Polynomial::neg).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        VectorField {
            dim: self.dim,
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Commutator [X, Y] = X∘Y - Y∘X acting on functions:
    /// [X, Y]^i = sum_j (X^j d_j Y^i - Y^j d_j X^i).
    pub fn lie_bracket(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "field dimension mismatch");
        let n = self.dim;
        let mut components = Vec::with_capacity(n);
        for i in 0..n {
            let mut comp = Polynomial::zero(n);
            for j in 0..n {
                comp = comp.add(&self.components[j].mul(&other.components[i].partial(j)));
                comp = comp.sub(&other.components[j].mul(&self.components[i].partial(j)));
            }
            components.push(comp);
        }
        VectorField { dim: n, components }
    }

    /// sum_i d_i X^i.
    pub fn divergence(&self) -> Polynomial<T> {
        let mut out = Polynomial::zero(self.dim);
        for (axis, comp) in self.components.iter().enumerate() {
            out = out.add(&comp.partial(axis));
        }
        out
    }

    /// Directional derivative X(f) of a scalar.
    pub fn apply(&self, f: &Polynomial<T>) -> Polynomial<T> {
        assert_eq!(self.dim, f.dim(), "field/scalar dimension mismatch");
        let mut out = Polynomial::zero(self.dim);
        for (axis, comp) in self.components.iter().enumerate() {
            out = out.add(&comp.mul(&f.partial(axis)));
        }
        out
    }

    /// Componentwise partial derivative; equals the bracket [d_{axis+1}, X].
    pub fn partial(&self, axis: usize) -> Self {
        VectorField {
            dim: self.dim,
            components: self.components.iter().map(|p| p.partial(axis)).collect(),
        }
    }

    /// Componentwise homogeneous part of degree k.
    pub fn homogeneous_part(&self, k: usize) -> Self {
        VectorField {
            dim: self.dim,
            components: self
                .components
                .iter()
                .map(|p| p.homogeneous_part(k))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.components.iter().all(|p| p.is_homogeneous(k))
    }
}

impl<T: Scalar> Add for &VectorField<T> {
    type Output = VectorField<T>;
    fn add(self, rhs: Self) -> VectorField<T> {
        VectorField::add(self, rhs)
    }
}

impl<T: Scalar> Sub for &VectorField<T> {
    type Output = VectorField<T>;
    fn sub(self, rhs: Self) -> VectorField<T> {
        VectorField::sub(self, rhs)
    }
}

impl<T: Scalar> Neg for &VectorField<T> {
    type Output = VectorField<T>;
    fn neg(self) -> VectorField<T> {
        VectorField::neg(self)
    }
}

/// Displays in the field expression language, e.g. `x1^2 d2`;
/// see [`crate::dsl`] for the grammar.
impl<T: Scalar> fmt::Display for VectorField<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::dsl::print_field(self))
    }
}

/// The monomial-field basis of the space of fields of degree at most
/// `cap`, ordered by (total degree, graded-lex monomial, component).
/// The ordering is a stable public contract: coordinate vectors written
/// against one cap embed as prefixes of any larger cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordBasis {
    dim: usize,
    cap: usize,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl CoordBasis {
    pub fn new(dim: usize, cap: usize) -> Self {
        assert!(dim >= 1);
        let mut monomials = Vec::new();
        let mut exps = vec![0u32; dim];
        collect_monomials(&mut monomials, &mut exps, 0, cap as u32);
        monomials.sort();
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        CoordBasis {
            dim,
            cap,
            monomials,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Number of monomials of degree <= cap, i.e. C(dim + cap, dim).
    pub fn monomial_count(&self) -> usize {
        self.monomials.len()
    }

    /// Dimension of the encoded space: dim * C(dim + cap, dim).
    pub fn space_dim(&self) -> usize {
        self.monomials.len() * self.dim
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Monomials of total degree exactly k, in canonical order.
    pub fn monomials_of_degree(&self, k: usize) -> impl Iterator<Item = &Monomial> {
        self.monomials
            .iter()
            .filter(move |m| m.total_degree() as usize == k)
    }

    fn slot(&self, m: &Monomial, axis: usize) -> Option<usize> {
        self.index.get(m).map(|i| i * self.dim + axis)
    }

    /// Coefficient vector of a field over the basis; errors when the
    /// field degree exceeds the cap.
    pub fn encode<S: Scalar>(&self, f: &VectorField<S>) -> Result<Vec<S>> {
        if f.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: f.dim(),
            });
        }
        if f.degree() > self.cap as i64 {
            return Err(Error::DegreeExceedsCap {
                degree: f.degree(),
                cap: self.cap,
            });
        }
        let mut v = vec![S::zero(); self.space_dim()];
        for (axis, comp) in f.components().iter().enumerate() {
            for (m, c) in comp.terms() {
                let slot = self
                    .slot(m, axis)
                    .expect("degree-checked monomial is indexed");
                v[slot] = c.clone();
            }
        }
        Ok(v)
    }

    /// Inverse of [`CoordBasis::encode`].
    pub fn decode<S: Scalar>(&self, v: &[S]) -> VectorField<S> {
        assert_eq!(v.len(), self.space_dim(), "coordinate length mismatch");
        let mut f = VectorField::zero(self.dim);
        for (i, m) in self.monomials.iter().enumerate() {
            for axis in 0..self.dim {
                let c = &v[i * self.dim + axis];
                if !c.is_zero() {
                    f.components[axis].add_term(m.clone(), c.clone());
                }
            }
        }
        f
    }

    /// The basis field associated with a coordinate slot.
    pub fn unit_field<S: Scalar>(&self, slot: usize) -> VectorField<S> {
        let m = self.monomials[slot / self.dim].clone();
        VectorField::monomial_field(self.dim, m, slot % self.dim, S::one())
    }

    /// Monomial fields x^m d_i of total degree exactly k, in slot order.
    pub fn monomial_fields_of_degree<S: Scalar>(&self, k: usize) -> Vec<VectorField<S>> {
        let mut out = Vec::new();
        for m in self.monomials_of_degree(k) {
            for axis in 0..self.dim {
                out.push(VectorField::monomial_field(
                    self.dim,
                    m.clone(),
                    axis,
                    S::one(),
                ));
            }
        }
        out
    }
}

fn collect_monomials(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, axis: usize, budget: u32) {
    if axis == exps.len() {
        out.push(Monomial::new(exps.clone()));
        return;
    }
    for e in 0..=budget {
        exps[axis] = e;
        collect_monomials(out, exps, axis + 1, budget - e);
    }
    exps[axis] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_field;
    use crate::{Rat, VField};

    fn vf(src: &str, n: usize) -> VField {
        parse_field(src, n).unwrap()
    }

    #[test]
    fn bracket_of_affine_pair() {
        // [d1, x1 d1] = d1
        let x = VField::basis_derivative(2, 0);
        let y = vf("x1 d1", 2);
        assert_eq!(x.lie_bracket(&y), x);
    }

    #[test]
    fn bracket_with_quadratic_conformal_generator() {
        // [-x1 d1, x1 x2 d1 + (x2^2 - x1^2)/2 d2] = x1^2 d2,
        // expanded by hand from the commutator formula.
        let y = vf("-x1 d1", 2);
        let z = vf("x1 x2 d1 + 1/2 x2^2 d2 - 1/2 x1^2 d2", 2);
        let w = y.lie_bracket(&z);
        assert_eq!(w, vf("x1^2 d2", 2));
        assert!(w.divergence().is_zero());
    }

    #[test]
    fn bracket_is_alternating() {
        let x = vf("x1^2 d2 + x2 d1", 2);
        assert!(x.lie_bracket(&x).is_zero());
    }

    #[test]
    fn divergence_examples() {
        assert_eq!(
            VField::euler(2).divergence(),
            Polynomial::constant(2, crate::scalar::int::<Rat>(2))
        );
        assert!(vf("x1^2 d2", 2).divergence().is_zero());
    }

    #[test]
    fn homogeneous_parts_of_fields() {
        let x = vf("1 d1 + x1 d1", 2);
        assert_eq!(x.homogeneous_part(1), vf("x1 d1", 2));
        assert_eq!(x.homogeneous_part(0), vf("1 d1", 2));
        assert!(x.homogeneous_part(5).is_zero());
    }

    #[test]
    fn coordinate_space_dimensions() {
        assert_eq!(CoordBasis::new(2, 1).space_dim(), 6);
        assert_eq!(CoordBasis::new(2, 3).space_dim(), 20);
        assert_eq!(CoordBasis::new(3, 3).space_dim(), 60);
    }

    #[test]
    fn encode_zero_and_round_trip() {
        let basis = CoordBasis::new(2, 3);
        let zero = basis.encode::<Rat>(&VField::zero(2)).unwrap();
        assert!(zero.iter().all(Zero::is_zero));

        let x = vf("x1^2 d2 - 1/3 x2 d1 + 2 d2", 2);
        let v = basis.encode(&x).unwrap();
        assert_eq!(basis.decode(&v), x);
    }

    #[test]
    fn encode_rejects_degree_overflow() {
        let basis = CoordBasis::new(2, 1);
        let err = basis.encode::<Rat>(&vf("x1^2 d2", 2)).unwrap_err();
        assert!(matches!(err, Error::DegreeExceedsCap { .. }));
    }

    #[test]
    fn coordinate_prefix_embedding_across_caps() {
        let small = CoordBasis::new(2, 2);
        let large = CoordBasis::new(2, 4);
        assert_eq!(
            small.monomials(),
            &large.monomials()[..small.monomial_count()]
        );
    }
}
