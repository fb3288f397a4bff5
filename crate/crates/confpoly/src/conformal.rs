//! Flat diagonal metrics, the conformal predicate, and the generators of
//! the embedded conformal algebra.
//!
//! A field X is conformal for g = sum_i a_i (dx^i)^2 when L_X g is a
//! scalar multiple of g. Componentwise this is
//!
//! ```text
//!   a_j d_i X^j + a_i d_j X^i = 0   (i != j)
//!   d_i X^i = d_j X^j               (all i, j)
//! ```
//!
//! Note the second line compares the raw diagonal derivatives. Weighting
//! them by the metric signs instead would wrongly reject homotheties in
//! mixed signature: for the Euler field the weighted difference is
//! a_i - a_j, not zero. The conformal factor is then 2 d_1 X^1.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{int, ratio, Scalar};
use crate::span::{kernel_basis, SpanBasis};
use crate::vector_field::{CoordBasis, VectorField};

/// Signature data (p, q): p plus-signs followed by q minus-signs on the
/// diagonal of the metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Metric {
    p: usize,
    q: usize,
}

impl Metric {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q < 2 {
            return Err(Error::DimensionTooSmall(p + q));
        }
        Ok(Metric { p, q })
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Diagonal entry a_{axis+1} (0-based axis), +1 or -1.
    pub fn sign(&self, axis: usize) -> i8 {
        assert!(axis < self.n(), "axis out of range");
        if axis < self.p {
            1
        } else {
            -1
        }
    }

    pub fn sign_scalar<T: Scalar>(&self, axis: usize) -> T {
        if self.sign(axis) > 0 {
            T::one()
        } else {
            -T::one()
        }
    }
}

/// Square rational matrix; the entry A^i_j sits at row i, column j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap<T: Scalar> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Scalar> LinearMap<T> {
    pub fn zero(n: usize) -> Self {
        LinearMap {
            n,
            entries: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            *m.get_mut(i, i) = T::one();
        }
        m
    }

    /// The matrix unit E_{ij} (0-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        *m.get_mut(i, j) = T::one();
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.entries[i * self.n + j]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        LinearMap {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        LinearMap {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        LinearMap {
            n: self.n,
            entries: self.entries.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = T::zero();
                for k in 0..n {
                    acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
                }
                *out.get_mut(i, j) = acc;
            }
        }
        out
    }

    /// Matrix commutator AB - BA.
    pub fn commutator(&self, other: &Self) -> Self {
        self.matmul(other).sub(&other.matmul(self))
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.n {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    /// Metric conjugate g^-1 A^T g; for diagonal +-1 metrics this is
    /// (A^T)_{ij} scaled by a_i a_j.
    pub fn conjugate(&self, m: &Metric) -> Self {
        assert_eq!(self.n, m.n());
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let s: T = m.sign_scalar::<T>(i) * m.sign_scalar::<T>(j);
                *out.get_mut(i, j) = s * self.get(j, i).clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }
}

/// A covector (alpha_1, ..., alpha_n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covector<T: Scalar> {
    entries: Vec<T>,
}

impl<T: Scalar> Covector<T> {
    pub fn new(entries: Vec<T>) -> Self {
        assert!(!entries.is_empty());
        Covector { entries }
    }

    /// The coordinate covector dx^{axis+1}.
    pub fn basis(n: usize, axis: usize) -> Self {
        assert!(axis < n);
        let mut entries = vec![T::zero(); n];
        entries[axis] = T::one();
        Covector { entries }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, axis: usize) -> &T {
        &self.entries[axis]
    }

    /// The linear form alpha(x) as a polynomial.
    pub fn as_linear_form(&self) -> Polynomial<T> {
        let n = self.n();
        let mut p = Polynomial::zero(n);
        for (axis, c) in self.entries.iter().enumerate() {
            p = p.add(&Polynomial::var(n, axis).scale(c));
        }
        p
    }
}

/// Outcome of the conformal predicate; `factor` carries the conformal
/// factor exactly when the field is conformal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConformalVerdict<T: Scalar> {
    pub is_conformal: bool,
    pub factor: Option<Polynomial<T>>,
}

/// The symmetric matrix (L_X g)_{ij} = a_j d_i X^j + a_i d_j X^i.
pub fn lie_derivative_metric<T: Scalar>(
    x: &VectorField<T>,
    m: &Metric,
) -> Vec<Vec<Polynomial<T>>> {
    let n = m.n();
    assert_eq!(x.dim(), n, "field/metric dimension mismatch");
    let mut out = vec![vec![Polynomial::zero(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            let a = x.component(j).partial(i).scale(&m.sign_scalar::<T>(j));
            let b = x.component(i).partial(j).scale(&m.sign_scalar::<T>(i));
            out[i][j] = a.add(&b);
        }
    }
    out
}

/// Decides L_X g = alpha g via the componentwise equations; the factor
/// returned is 2 d_1 X^1 (the diagonal equality makes the index choice
/// immaterial).
pub fn conformal_check<T: Scalar>(x: &VectorField<T>, m: &Metric) -> ConformalVerdict<T> {
    let n = m.n();
    assert_eq!(x.dim(), n, "field/metric dimension mismatch");
    let diag0 = x.component(0).partial(0);
    for i in 0..n {
        for j in (i + 1)..n {
            let off = x
                .component(j)
                .partial(i)
                .scale(&m.sign_scalar::<T>(j))
                .add(&x.component(i).partial(j).scale(&m.sign_scalar::<T>(i)));
            if !off.is_zero() {
                return ConformalVerdict {
                    is_conformal: false,
                    factor: None,
                };
            }
        }
        if !x.component(i).partial(i).sub(&diag0).is_zero() {
            return ConformalVerdict {
                is_conformal: false,
                factor: None,
            };
        }
    }
    ConformalVerdict {
        is_conformal: true,
        factor: Some(diag0.scale(&int(2))),
    }
}

/// Translation generator: h maps to -sum_i h^i d_i.
pub fn translation<T: Scalar>(h: &[T]) -> VectorField<T> {
    let n = h.len();
    let mut components = Vec::with_capacity(n);
    for hi in h {
        components.push(Polynomial::constant(n, -hi.clone()));
    }
    VectorField::from_components(components)
}

/// Linear-field embedding: A maps to -sum_{i,j} A^i_j x^j d_i.
/// With the bracket convention [X, Y] = XY - YX this is a Lie algebra
/// homomorphism from matrices with the commutator.
pub fn linear_field<T: Scalar>(a: &LinearMap<T>) -> VectorField<T> {
    let n = a.n();
    let mut components = Vec::with_capacity(n);
    for i in 0..n {
        let mut comp = Polynomial::zero(n);
        for j in 0..n {
            comp = comp.sub(&Polynomial::var(n, j).scale(a.get(i, j)));
        }
        components.push(comp);
    }
    VectorField::from_components(components)
}

/// Quadratic conformal generator:
/// alpha(x) sum_i x^i d_i - (1/2)(sum_i a_i (x^i)^2) alpha#,
/// with alpha# = sum_i a_i alpha_i d_i.
pub fn special_conformal<T: Scalar>(alpha: &Covector<T>, m: &Metric) -> VectorField<T> {
    let n = m.n();
    assert_eq!(alpha.n(), n, "covector/metric dimension mismatch");
    let form = alpha.as_linear_form();
    let mut quadric = Polynomial::zero(n);
    for k in 0..n {
        let xk = Polynomial::var(n, k);
        quadric = quadric.add(&xk.mul(&xk).scale(&m.sign_scalar::<T>(k)));
    }
    let half = ratio::<T>(1, 2);
    let mut components = Vec::with_capacity(n);
    for i in 0..n {
        let sharp_i = m.sign_scalar::<T>(i) * alpha.entry(i).clone();
        let comp = form
            .mul(&Polynomial::var(n, i))
            .sub(&quadric.scale(&(half.clone() * sharp_i)));
        components.push(comp);
    }
    VectorField::from_components(components)
}

/// Basis of the metric-skew matrices: M_{ij} = a_j E_{ij} - a_i E_{ji}
/// for i < j in lexicographic order. Each satisfies gM + M^T g = 0.
pub fn so_basis<T: Scalar>(m: &Metric) -> Vec<LinearMap<T>> {
    let n = m.n();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let mij = LinearMap::unit(n, i, j)
                .scale(&m.sign_scalar::<T>(j))
                .sub(&LinearMap::unit(n, j, i).scale(&m.sign_scalar::<T>(i)));
            out.push(mij);
        }
    }
    out
}

/// The embedded basis of so(p+1, q+1) inside polynomial fields, in the
/// stable order: translations, rotations/boosts by (i, j), the dilation,
/// then the quadratic generators. Its length is (n+1)(n+2)/2.
pub fn conformal_basis<T: Scalar>(m: &Metric) -> Vec<VectorField<T>> {
    let n = m.n();
    let mut out = Vec::with_capacity((n + 1) * (n + 2) / 2);
    for i in 0..n {
        let mut h = vec![T::zero(); n];
        h[i] = T::one();
        out.push(translation(&h));
    }
    for mat in so_basis::<T>(m) {
        out.push(linear_field(&mat));
    }
    out.push(linear_field(&LinearMap::identity(n)));
    for i in 0..n {
        out.push(special_conformal(&Covector::basis(n, i), m));
    }
    out
}

/// Splits A into (scalar, metric-skew, traceless self-conjugate) parts:
/// A = (tr A / n) Id + (A - A°)/2 + ((A + A°)/2 - (tr A / n) Id)
/// where A° is the metric conjugate.
pub fn decompose_gl<T: Scalar>(
    a: &LinearMap<T>,
    m: &Metric,
) -> (LinearMap<T>, LinearMap<T>, LinearMap<T>) {
    let n = a.n();
    assert_eq!(n, m.n(), "matrix/metric dimension mismatch");
    let half = ratio::<T>(1, 2);
    let conj = a.conjugate(m);
    let scalar = LinearMap::identity(n).scale(&(a.trace() / int::<T>(n as i64)));
    let skew = a.sub(&conj).scale(&half);
    let plus = a.add(&conj).scale(&half).sub(&scalar);
    (scalar, skew, plus)
}

/// Splits a homogeneous quadratic field into its conformal part
/// (1/n) alpha* with alpha(x) = div X, and a divergence-free remainder.
pub fn quadratic_split<T: Scalar>(
    x: &VectorField<T>,
    m: &Metric,
) -> Result<(VectorField<T>, VectorField<T>)> {
    let n = m.n();
    assert_eq!(x.dim(), n, "field/metric dimension mismatch");
    if !x.is_homogeneous(2) {
        return Err(Error::NotHomogeneousQuadratic);
    }
    let div = x.divergence();
    let mut alpha = vec![T::zero(); n];
    for (axis, slot) in alpha.iter_mut().enumerate() {
        *slot = div.coefficient(&crate::poly::Monomial::var(n, axis));
    }
    let conformal_part =
        special_conformal(&Covector::new(alpha), m).scale(&ratio::<T>(1, n as i64));
    let divfree = x.sub(&conformal_part);
    debug_assert!(divfree.divergence().is_zero());
    Ok((conformal_part, divfree))
}

/// Cauchy-Riemann test for n = 2: the first component plus i times the
/// second is a holomorphic function of x1 + i x2.
pub fn is_holomorphic<T: Scalar>(x: &VectorField<T>) -> bool {
    assert_eq!(x.dim(), 2, "holomorphic test requires n = 2");
    let u = x.component(0);
    let v = x.component(1);
    u.partial(0).sub(&v.partial(1)).is_zero() && u.partial(1).add(&v.partial(0)).is_zero()
}

/// Change to lightcone coordinates 2u^1 = x^1 + x^2, 2u^2 = x^1 - x^2:
/// the pushforward mixes components by one half of the substitution
/// matrix. A field is conformal for signature (1, 1) exactly when the
/// image has the split form U^1(u^1) d1 + U^2(u^2) d2.
pub fn lightcone<T: Scalar>(x: &VectorField<T>) -> VectorField<T> {
    assert_eq!(x.dim(), 2, "lightcone transform requires n = 2");
    // x^1 = u^1 + u^2, x^2 = u^1 - u^2
    let images = vec![
        Polynomial::var(2, 0).add(&Polynomial::var(2, 1)),
        Polynomial::var(2, 0).sub(&Polynomial::var(2, 1)),
    ];
    let half = ratio::<T>(1, 2);
    let sum = x.component(0).add(x.component(1)).substitute(&images);
    let diff = x.component(0).sub(x.component(1)).substitute(&images);
    VectorField::from_components(vec![sum.scale(&half), diff.scale(&half)])
}

/// Exact inverse of [`lightcone`].
pub fn lightcone_inverse<T: Scalar>(x: &VectorField<T>) -> VectorField<T> {
    assert_eq!(x.dim(), 2, "lightcone transform requires n = 2");
    let half = ratio::<T>(1, 2);
    // u^1 = (x^1 + x^2)/2, u^2 = (x^1 - x^2)/2
    let images = vec![
        Polynomial::var(2, 0).add(&Polynomial::var(2, 1)).scale(&half),
        Polynomial::var(2, 0).sub(&Polynomial::var(2, 1)).scale(&half),
    ];
    let sum = x.component(0).add(x.component(1)).substitute(&images);
    let diff = x.component(0).sub(x.component(1)).substitute(&images);
    VectorField::from_components(vec![sum, diff])
}

/// True when component 1 does not involve the second variable and
/// component 2 does not involve the first.
pub fn is_product_form<T: Scalar>(x: &VectorField<T>) -> bool {
    assert_eq!(x.dim(), 2, "product-form test requires n = 2");
    !x.component(0).depends_on(1) && !x.component(1).depends_on(0)
}

/// The pair of fields matching z^k and i z^k under the identification of
/// the (2, 0) conformal fields with holomorphic ones (n = 2).
pub fn holomorphic_pair<T: Scalar>(k: usize) -> (VectorField<T>, VectorField<T>) {
    // iterate re + i*im = (x1 + i x2)^k
    let mut re = Polynomial::constant(2, T::one());
    let mut im = Polynomial::zero(2);
    let x1 = Polynomial::var(2, 0);
    let x2 = Polynomial::var(2, 1);
    for _ in 0..k {
        let next_re = re.mul(&x1).sub(&im.mul(&x2));
        let next_im = re.mul(&x2).add(&im.mul(&x1));
        re = next_re;
        im = next_im;
    }
    (
        VectorField::from_components(vec![re.clone(), im.clone()]),
        VectorField::from_components(vec![im.neg(), re]),
    )
}

/// A spanning set of the conformal fields of degree at most `cap`.
///
/// For n >= 3 the embedded so(p+1, q+1) basis is already the whole
/// conformal space. For n = 2 the conformal space keeps growing with the
/// degree; the basis is extended by the holomorphic pairs (signature
/// (2, 0)) or the split lightcone pairs (signature (1, 1)) of degrees
/// 3..=cap, giving dimension 2(cap + 1).
pub fn conformal_fields_up_to<T: Scalar>(m: &Metric, cap: usize) -> Vec<VectorField<T>> {
    let mut out = conformal_basis::<T>(m);
    if m.n() == 2 {
        for k in 3..=cap {
            if m.q() == 0 || m.p() == 0 {
                let (a, b) = holomorphic_pair::<T>(k);
                out.push(a);
                out.push(b);
            } else {
                let mono = crate::poly::Monomial::new(vec![k as u32, 0]);
                let left = VectorField::monomial_field(2, mono, 0, T::one());
                let mono = crate::poly::Monomial::new(vec![0, k as u32]);
                let right = VectorField::monomial_field(2, mono, 1, T::one());
                out.push(lightcone_inverse(&left));
                out.push(lightcone_inverse(&right));
            }
        }
    }
    out
}

/// Exact census of the conformal fields of degree at most `cap`: the
/// componentwise equations become a homogeneous linear system on the
/// coordinate space, and its kernel is echelonized into a span.
pub fn conformal_kernel<T: Scalar>(m: &Metric, cap: usize) -> SpanBasis<T> {
    let n = m.n();
    let coords = CoordBasis::new(n, cap);
    let width = coords.space_dim();
    // one constraint row per (i, j) pair, equation type and monomial;
    // each coordinate slot contributes linearly, so the rows are filled
    // by evaluating the equations on unit fields.
    let mut row_index = std::collections::BTreeMap::new();
    let mut rows: Vec<Vec<T>> = Vec::new();
    for slot in 0..width {
        let f: VectorField<T> = coords.unit_field(slot);
        for i in 0..n {
            for j in (i + 1)..n {
                let off = f
                    .component(j)
                    .partial(i)
                    .scale(&m.sign_scalar::<T>(j))
                    .add(&f.component(i).partial(j).scale(&m.sign_scalar::<T>(i)));
                for (mono, c) in off.terms() {
                    let key = (i, j, false, mono.clone());
                    let idx = *row_index.entry(key).or_insert_with(|| {
                        rows.push(vec![T::zero(); width]);
                        rows.len() - 1
                    });
                    rows[idx][slot] = c.clone();
                }
                let diag = f.component(i).partial(i).sub(&f.component(j).partial(j));
                for (mono, c) in diag.terms() {
                    let key = (i, j, true, mono.clone());
                    let idx = *row_index.entry(key).or_insert_with(|| {
                        rows.push(vec![T::zero(); width]);
                        rows.len() - 1
                    });
                    rows[idx][slot] = c.clone();
                }
            }
        }
    }
    let kernel = kernel_basis(rows, width);
    let mut span = SpanBasis::with_coords(coords);
    for v in kernel {
        span.insert_vec(v);
    }
    span
}

/// Dimension of the space of conformal fields of degree at most `cap`.
pub fn conformal_dimension(m: &Metric, cap: usize) -> usize {
    conformal_kernel::<crate::Rat>(m, cap).dimension()
}
