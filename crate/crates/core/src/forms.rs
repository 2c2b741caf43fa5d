//! Chevalley–Eilenberg calculus on left-invariant forms.
//!
//! Conventions: `dθ(X, Y) = −θ([X, Y])` for 1-forms, extended as a
//! derivation, and `(α∧β)(X, Y) = α(X)β(Y) − α(Y)β(X)` with no `1/2`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::liealg::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::{Field, GaussRational, Scalar};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FormError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    Ambient(usize, usize),
    #[error("map shape mismatch: expected {expected} columns of length {rows}")]
    Shape { expected: usize, rows: usize },
}

/// Alternating k-form on an `n`-dimensional algebra, stored by its values on
/// strictly increasing basis tuples.
#[derive(Clone, PartialEq)]
pub struct KForm<S> {
    n: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, S>,
}

impl<S: Scalar> KForm<S> {
    pub fn zero(n: usize, degree: usize) -> Self {
        KForm { n, degree, coeffs: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: S) -> Self {
        let mut f = KForm::zero(n, 0);
        f.add_term(Vec::new(), c);
        f
    }

    /// The dual basis form `e^i`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut f = KForm::zero(n, 1);
        f.add_term(vec![i], S::one());
        f
    }

    /// `e^{i_1}∧…∧e^{i_k}` for increasing indices.
    pub fn monomial(n: usize, idx: &[usize]) -> Self {
        let mut f = KForm::constant(n, S::one());
        for &i in idx {
            f = f.wedge(&KForm::basis(n, i)).unwrap();
        }
        f
    }

    /// The 1-form taking value `values[i]` on `e_i`.
    pub fn one_form(values: &[S]) -> Self {
        let mut f = KForm::zero(values.len(), 1);
        for (i, v) in values.iter().enumerate() {
            f.add_term(vec![i], v.clone());
        }
        f
    }

    fn add_term(&mut self, idx: Vec<usize>, c: S) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(idx.clone()).or_insert_with(S::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &S)> {
        self.coeffs.iter()
    }

    /// Coefficient on an increasing index tuple.
    pub fn coeff(&self, idx: &[usize]) -> S {
        self.coeffs.get(idx).cloned().unwrap_or_else(S::zero)
    }

    pub fn add(&self, other: &KForm<S>) -> KForm<S> {
        assert_eq!((self.n, self.degree), (other.n, other.degree), "adding incompatible forms");
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.add_term(idx.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &KForm<S>) -> KForm<S> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> KForm<S> {
        let mut out = KForm::zero(self.n, self.degree);
        for (idx, a) in &self.coeffs {
            out.add_term(idx.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn wedge(&self, other: &KForm<S>) -> Result<KForm<S>, FormError> {
        if self.n != other.n {
            return Err(FormError::Ambient(self.n, other.n));
        }
        let mut out = KForm::zero(self.n, self.degree + other.degree);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                if let Some((idx, sign)) = merge_sign(a, b) {
                    let c = x.clone() * y.clone();
                    out.add_term(idx, if sign { c } else { -c });
                }
            }
        }
        Ok(out)
    }

    /// Contraction with `v` in the first slot.
    pub fn interior(&self, v: &[S]) -> KForm<S> {
        assert_eq!(v.len(), self.n, "interior: vector length mismatch");
        assert!(self.degree > 0, "interior product of a 0-form");
        let mut out = KForm::zero(self.n, self.degree - 1);
        for (idx, c) in &self.coeffs {
            for (pos, &i) in idx.iter().enumerate() {
                if v[i].is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(pos);
                let t = c.clone() * v[i].clone();
                out.add_term(rest, if pos % 2 == 0 { t } else { -t });
            }
        }
        out
    }

    /// `a(v_1, …, v_k)`.
    pub fn eval(&self, vs: &[Vec<S>]) -> S {
        assert_eq!(vs.len(), self.degree, "eval: wrong number of arguments");
        let mut f = self.clone();
        for v in vs {
            f = f.interior(v);
        }
        f.coeff(&[])
    }

    /// Chevalley–Eilenberg differential on `g`.
    pub fn d(&self, g: &LieAlgebra) -> KForm<S> {
        assert_eq!(g.dim(), self.n, "d: ambient dimension mismatch");
        let de: Vec<KForm<S>> = (0..self.n).map(|k| d_basis(g, k)).collect();
        let mut out = KForm::zero(self.n, self.degree + 1);
        for (idx, c) in &self.coeffs {
            for r in 0..idx.len() {
                let left = KForm::monomial(self.n, &idx[..r]);
                let right = KForm::monomial(self.n, &idx[r + 1..]);
                let term = left.wedge(&de[idx[r]]).unwrap().wedge(&right).unwrap();
                let sign = if r % 2 == 0 { c.clone() } else { -c.clone() };
                out = out.add(&term.scale(&sign));
            }
        }
        out
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> KForm<T> {
        let mut out = KForm::zero(self.n, self.degree);
        for (idx, c) in &self.coeffs {
            out.add_term(idx.clone(), f(c));
        }
        out
    }
}

impl<S: Scalar + fmt::Display> KForm<S> {
    /// Renders as e.g. `x^y - 2 z^u` using the given 1-form names.
    pub fn render(&self, names: &[String]) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (idx, c) in &self.coeffs {
            let mono = if idx.is_empty() {
                String::new()
            } else {
                idx.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join("^")
            };
            let cs = c.to_string();
            let term = match (cs.as_str(), mono.is_empty()) {
                (_, true) => cs,
                ("1", false) => mono,
                ("-1", false) => format!("-{mono}"),
                (_, false) if cs.contains(' ') => format!("({cs}) {mono}"),
                (_, false) => format!("{cs} {mono}"),
            };
            parts.push(term);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl<S: Scalar> fmt::Debug for KForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KForm(deg {}, {:?})", self.degree, self.coeffs)
    }
}

/// Lowercase dual names for a basis: `X1 → x1`, `T → t`.
pub fn dual_names(g: &LieAlgebra) -> Vec<String> {
    g.basis_names().iter().map(|s| s.to_lowercase()).collect()
}

/// Merges two increasing index lists; `None` on repetition, otherwise the
/// merged list and whether the sorting permutation is even.
fn merge_sign(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut inversions = 0usize;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((out, inversions % 2 == 0))
}

/// `d e^k = −Σ_{i<j} c^k_{ij} e^i∧e^j`.
fn d_basis<S: Scalar>(g: &LieAlgebra, k: usize) -> KForm<S> {
    let n = g.dim();
    let mut out = KForm::zero(n, 2);
    for i in 0..n {
        for j in i + 1..n {
            let c = g.structure_constant(i, j, k);
            if !c.is_zero() {
                out.add_term(vec![i, j], -S::from_gauss(c));
            }
        }
    }
    out
}

/// Linear map from a source algebra into a target algebra, viewed as a
/// target-valued 1-form on the source.
#[derive(Clone)]
pub struct GValuedOneForm<S> {
    source: Arc<LieAlgebra>,
    target: Arc<LieAlgebra>,
    /// `columns[i]` is the image of the `i`-th source basis vector.
    columns: Vec<Vec<S>>,
}

impl<S: Scalar> GValuedOneForm<S> {
    pub fn new(source: Arc<LieAlgebra>, target: Arc<LieAlgebra>, columns: Vec<Vec<S>>) -> Result<Self, FormError> {
        if columns.len() != source.dim() || columns.iter().any(|c| c.len() != target.dim()) {
            return Err(FormError::Shape { expected: source.dim(), rows: target.dim() });
        }
        Ok(GValuedOneForm { source, target, columns })
    }

    /// Maurer–Cartan form of `g`: the identity map.
    pub fn identity(g: Arc<LieAlgebra>) -> Self {
        let n = g.dim();
        let columns = (0..n)
            .map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect())
            .collect();
        GValuedOneForm { source: g.clone(), target: g, columns }
    }

    pub fn source(&self) -> &Arc<LieAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<LieAlgebra> {
        &self.target
    }

    pub fn columns(&self) -> &[Vec<S>] {
        &self.columns
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.source.dim(), "apply: vector length mismatch");
        let mut out = vec![S::zero(); self.target.dim()];
        for (c, col) in v.iter().zip(&self.columns) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(col) {
                if !x.is_zero() {
                    *o = o.clone() + c.clone() * x.clone();
                }
            }
        }
        out
    }

    /// `Ω(e_i, e_j) = [ω e_i, ω e_j] − ω([e_i, e_j])` for `i < j`, nonzero
    /// entries only.
    pub fn curvature(&self) -> Curvature<S> {
        let n = self.source.dim();
        let mut entries = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.target.br(&self.columns[i], &self.columns[j]);
                let src: Vec<S> = {
                    let mut v = vec![S::zero(); n];
                    for (k, c) in self.source.bracket_terms(i, j) {
                        v[*k] = S::from_gauss(c);
                    }
                    v
                };
                let rhs = self.apply(&src);
                let diff: Vec<S> = lhs.into_iter().zip(rhs).map(|(a, b)| a - b).collect();
                if diff.iter().any(|x| !x.is_zero()) {
                    entries.insert((i, j), diff);
                }
            }
        }
        Curvature { n, target_dim: self.target.dim(), entries }
    }

    /// Components `ω^a` as scalar 1-forms on the source.
    pub fn component_forms(&self) -> Vec<KForm<S>> {
        (0..self.target.dim())
            .map(|a| KForm::one_form(&self.columns.iter().map(|c| c[a].clone()).collect::<Vec<_>>()))
            .collect()
    }

    /// `dω^a + Σ_{b<c} c^a_{bc} ω^b∧ω^c`, computed through the exterior
    /// calculus; equals [`Self::curvature`] componentwise.
    pub fn curvature_forms(&self) -> Vec<KForm<S>> {
        let comps = self.component_forms();
        let t = &self.target;
        let m = t.dim();
        let mut out: Vec<KForm<S>> = comps.iter().map(|w| w.d(&self.source)).collect();
        for b in 0..m {
            for c in b + 1..m {
                let terms = t.bracket_terms(b, c);
                if terms.is_empty() {
                    continue;
                }
                let wbc = comps[b].wedge(&comps[c]).unwrap();
                if wbc.is_zero() {
                    continue;
                }
                for (a, k) in terms {
                    out[*a] = out[*a].add(&wbc.scale(&S::from_gauss(k)));
                }
            }
        }
        out
    }

    pub fn is_homomorphism(&self) -> bool {
        self.curvature().is_zero()
    }

    /// `ω ∘ A` where the columns of `a` are images of source basis vectors.
    pub fn precompose(&self, a: &[Vec<S>]) -> GValuedOneForm<S> {
        let columns = a.iter().map(|v| self.apply(v)).collect();
        GValuedOneForm { source: self.source.clone(), target: self.target.clone(), columns }
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> GValuedOneForm<T> {
        GValuedOneForm {
            source: self.source.clone(),
            target: self.target.clone(),
            columns: self.columns.iter().map(|c| c.iter().map(&f).collect()).collect(),
        }
    }
}

impl<S: Scalar + Field> GValuedOneForm<S> {
    pub fn rank(&self) -> usize {
        Matrix::from_cols(self.target.dim(), &self.columns).rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }
}

/// Target-valued alternating 2-form, stored on basis pairs `i < j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Curvature<S> {
    n: usize,
    target_dim: usize,
    entries: BTreeMap<(usize, usize), Vec<S>>,
}

impl<S: Scalar> Curvature<S> {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), Vec<S>> {
        &self.entries
    }

    /// First nonzero basis pair.
    pub fn witness(&self) -> Option<((usize, usize), &Vec<S>)> {
        self.entries.iter().next().map(|(k, v)| (*k, v))
    }

    /// `Ω(v, w)` by bilinear extension.
    pub fn eval(&self, v: &[S], w: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.target_dim];
        for ((i, j), val) in &self.entries {
            let c = v[*i].clone() * w[*j].clone() - v[*j].clone() * w[*i].clone();
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(val) {
                *o = o.clone() + c.clone() * x.clone();
            }
        }
        out
    }

    /// Components as scalar 2-forms on the source.
    pub fn as_forms(&self) -> Vec<KForm<S>> {
        let mut out: Vec<KForm<S>> = (0..self.target_dim).map(|_| KForm::zero(self.n, 2)).collect();
        for ((i, j), val) in &self.entries {
            for (a, x) in val.iter().enumerate() {
                out[a].add_term(vec![*i, *j], x.clone());
            }
        }
        out
    }
}

/// `φ∧(dφ)^m`.
pub fn contact_volume<S: Scalar>(g: &LieAlgebra, phi: &KForm<S>, m: usize) -> KForm<S> {
    let dphi = phi.d(g);
    let mut vol = phi.clone();
    for _ in 0..m {
        vol = vol.wedge(&dphi).unwrap();
    }
    vol
}

/// Convenience: 1-form with Gaussian-rational values.
pub fn gauss_one_form(values: &[GaussRational]) -> KForm<GaussRational> {
    KForm::one_form(values)
}

/// Random `k`-form with small rational coefficients on up to `terms`
/// basis monomials.
pub fn random_form<R: rand::Rng>(rng: &mut R, n: usize, k: usize, terms: usize) -> KForm<GaussRational> {
    let mut f = KForm::zero(n, k);
    if k > n {
        return f;
    }
    for _ in 0..terms {
        let mut idx = rand::seq::index::sample(rng, n, k).into_vec();
        idx.sort_unstable();
        let c = GaussRational::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4));
        f = f.add(&KForm::monomial(n, &idx).scale(&c));
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;
    use proptest::prelude::*;
    use rand::SeedableRng;

    type F = KForm<GaussRational>;

    #[test]
    fn wedge_normalization() {
        let x = F::basis(3, 0);
        let y = F::basis(3, 1);
        let xy = x.wedge(&y).unwrap();
        let e = |i| {
            let mut v = vec![GaussRational::zero(); 3];
            v[i] = GaussRational::one();
            v
        };
        assert_eq!(xy.eval(&[e(0), e(1)]), GaussRational::one());
        assert_eq!(xy.eval(&[e(1), e(0)]), -GaussRational::one());
        assert!(x.wedge(&x).unwrap().is_zero());
        assert_eq!(y.wedge(&x).unwrap(), xy.scale(&-GaussRational::one()));
    }

    #[test]
    fn heisenberg_dz() {
        let h = builtin("heis3").unwrap();
        let z = F::basis(3, 2);
        assert_eq!(z.d(&h), F::monomial(3, &[0, 1]));
        assert_eq!(z.d(&h).render(&dual_names(&h)), "x^y");
        assert!(F::basis(3, 0).d(&h).is_zero());
    }

    #[test]
    fn interior_rules() {
        let h = builtin("heis3").unwrap();
        let xy = F::monomial(3, &[0, 1]);
        assert_eq!(xy.interior(&h.e("X")), F::basis(3, 1));
        assert!(xy.interior(&h.e("Z")).is_zero());
        assert_eq!(F::basis(3, 2).interior(&h.e("Z")).coeff(&[]), GaussRational::one());
    }

    #[test]
    fn merge_sign_cases() {
        assert_eq!(merge_sign(&[1], &[0]), Some((vec![0, 1], false)));
        assert_eq!(merge_sign(&[0, 2], &[1, 3]), Some((vec![0, 1, 2, 3], false)));
        assert_eq!(merge_sign(&[0, 1], &[2]), Some((vec![0, 1, 2], true)));
        assert_eq!(merge_sign(&[1], &[1]), None);
    }

    #[test]
    fn identity_is_flat_and_two_curvature_paths_agree() {
        let g = Arc::new(builtin("su2").unwrap());
        let id = GValuedOneForm::<GaussRational>::identity(g.clone());
        assert!(id.curvature().is_zero());
        assert!(id.curvature_forms().iter().all(KForm::is_zero));
        let scaled = id.precompose(&[g.e("X"), g.e("Y"), g.e("Z").iter().map(|c| c.scale(&2.into())).collect()]);
        assert!(!scaled.is_homomorphism());
        assert_eq!(scaled.curvature().as_forms(), scaled.curvature_forms());
    }

    proptest! {
        #[test]
        fn d_squared_vanishes(idx in 0usize..17, seed in any::<u64>(), k in 0usize..4) {
            let name = crate::catalog::valid_builtin_names().nth(idx).unwrap();
            let g = builtin(name).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = random_form(&mut rng, g.dim(), k.min(g.dim()), 4);
            prop_assert!(f.d(&g).d(&g).is_zero(), "{}", name);
        }

        #[test]
        fn d_is_a_derivation(idx in 0usize..17, seed in any::<u64>(), p in 0usize..3) {
            let name = crate::catalog::valid_builtin_names().nth(idx).unwrap();
            let g = builtin(name).unwrap();
            let n = g.dim();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let a = random_form(&mut rng, n, p.min(n), 3);
            let b = random_form(&mut rng, n, 1, 3);
            let sign = if a.degree() % 2 == 0 { GaussRational::one() } else { -GaussRational::one() };
            let lhs = a.wedge(&b).unwrap().d(&g);
            let rhs = a.d(&g).wedge(&b).unwrap().add(&a.wedge(&b.d(&g)).unwrap().scale(&sign));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn broken_fixture_has_nonzero_d_squared() {
        let g = builtin("broken_heis3").unwrap();
        assert!((0..3).any(|j| !F::basis(3, j).d(&g).d(&g).is_zero()));
    }
}
