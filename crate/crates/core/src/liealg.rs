//! Lie algebras given by structure constants `[e_i, e_j] = Σ_k c^k_{ij} e_k`.

use std::fmt;

use serde::Serialize;

use crate::linalg::{hermitian_signature, unit_vectors, Matrix, Signature, Subspace};
use crate::scalar::{GaussRational, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LieError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("structure constants not antisymmetric at (i={i}, j={j}, k={k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("algebra flagged real has complex structure constant at (i={i}, j={j}, k={k})")]
    NotReal { i: usize, j: usize, k: usize },
    #[error("unknown basis element {0:?}")]
    UnknownBasis(String),
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("subspace is not closed under the bracket")]
    NotClosed,
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Finite-dimensional Lie algebra with ℚ(i) structure constants.
///
/// Real algebras carry `real = true` and purely real constants; the same
/// tensor acts on complex coordinate vectors as the complexification.
#[derive(Clone, PartialEq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    real: bool,
    /// `c[(i * n + j) * n + k] = c^k_{ij}`
    c: Vec<GaussRational>,
    /// nonzero `(k, c^k_{ij})` for each `(i, j)`
    table: Vec<Vec<(usize, GaussRational)>>,
}

impl LieAlgebra {
    /// Builds from a dense tensor, rejecting non-antisymmetric input.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        real: bool,
        c: Vec<GaussRational>,
    ) -> Result<Self, LieError> {
        let n = basis.len();
        if c.len() != n * n * n {
            return Err(LieError::DimensionMismatch { expected: n * n * n, got: c.len() });
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = &c[(i * n + j) * n + k];
                    if *a != -&c[(j * n + i) * n + k] {
                        return Err(LieError::NotAntisymmetric { i, j, k });
                    }
                    if real && !a.is_real() {
                        return Err(LieError::NotReal { i, j, k });
                    }
                }
            }
        }
        let table = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter(|&k| !c[ij * n + k].is_zero())
                    .map(|k| (k, c[ij * n + k].clone()))
                    .collect()
            })
            .collect();
        Ok(LieAlgebra { name: name.into(), basis, real, c, table })
    }

    /// Builds from brackets `[e_i, e_j] = Σ coeff·e_k` listed once per pair;
    /// the reversed pair is filled in by antisymmetry.
    pub fn from_brackets(
        name: impl Into<String>,
        basis: &[&str],
        real: bool,
        brackets: &[(usize, usize, Vec<(usize, GaussRational)>)],
    ) -> Result<Self, LieError> {
        let n = basis.len();
        let mut c = vec![GaussRational::zero(); n * n * n];
        for (i, j, terms) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n {
                return Err(LieError::DimensionMismatch { expected: n, got: i.max(j) + 1 });
            }
            if i == j {
                return Err(LieError::NotAntisymmetric { i, j, k: 0 });
            }
            for (k, v) in terms {
                if *k >= n {
                    return Err(LieError::DimensionMismatch { expected: n, got: k + 1 });
                }
                c[(i * n + j) * n + k] += v;
                c[(j * n + i) * n + k] -= v;
            }
        }
        LieAlgebra::new(name, basis.iter().map(|s| s.to_string()).collect(), real, c)
    }

    /// Abelian algebra on the given basis.
    pub fn abelian(name: impl Into<String>, basis: &[&str]) -> Self {
        LieAlgebra::from_brackets(name, basis, true, &[]).unwrap()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn is_real(&self) -> bool {
        self.real
    }

    pub fn index_of(&self, name: &str) -> Result<usize, LieError> {
        self.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| LieError::UnknownBasis(name.to_string()))
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &GaussRational {
        let n = self.dim();
        &self.c[(i * n + j) * n + k]
    }

    /// Nonzero terms of `[e_i, e_j]`.
    pub fn bracket_terms(&self, i: usize, j: usize) -> &[(usize, GaussRational)] {
        &self.table[i * self.dim() + j]
    }

    pub fn unit(&self, i: usize) -> Vec<GaussRational> {
        let mut v = vec![GaussRational::zero(); self.dim()];
        v[i] = GaussRational::one();
        v
    }

    /// Basis vector by name.
    pub fn e(&self, name: &str) -> Vec<GaussRational> {
        self.unit(self.index_of(name).unwrap_or_else(|e| panic!("{e}")))
    }

    pub fn bracket<S: Scalar>(&self, v: &[S], w: &[S]) -> Result<Vec<S>, LieError> {
        let n = self.dim();
        for len in [v.len(), w.len()] {
            if len != n {
                return Err(LieError::DimensionMismatch { expected: n, got: len });
            }
        }
        Ok(self.br(v, w))
    }

    /// Bracket without the length check; panics on mismatched lengths.
    pub fn br<S: Scalar>(&self, v: &[S], w: &[S]) -> Vec<S> {
        let n = self.dim();
        assert!(v.len() == n && w.len() == n, "bracket: vector length mismatch");
        let mut out = vec![S::zero(); n];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, wj) in w.iter().enumerate() {
                if wj.is_zero() || i == j {
                    continue;
                }
                let terms = &self.table[i * n + j];
                if terms.is_empty() {
                    continue;
                }
                let vw = vi.clone() * wj.clone();
                for (k, c) in terms {
                    out[*k] = out[*k].clone() + vw.clone() * S::from_gauss(c);
                }
            }
        }
        out
    }

    /// Matrix of `ad_x` (column `j` is `[x, e_j]`).
    pub fn ad(&self, x: &[GaussRational]) -> Matrix<GaussRational> {
        let cols: Vec<Vec<GaussRational>> = (0..self.dim()).map(|j| self.br(x, &self.unit(j))).collect();
        Matrix::from_cols(self.dim(), &cols)
    }

    pub fn check_jacobi(&self) -> JacobiReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
                    let a = self.br(&self.br(&x, &y), &z);
                    let b = self.br(&self.br(&y, &z), &x);
                    let c = self.br(&self.br(&z, &x), &y);
                    let s: Vec<GaussRational> =
                        a.iter().zip(&b).zip(&c).map(|((a, b), c)| &(a + b) + c).collect();
                    if s.iter().any(|x| !x.is_zero()) {
                        violations.push(JacobiViolation {
                            triple: [i, j, k],
                            names: [self.basis[i].clone(), self.basis[j].clone(), self.basis[k].clone()],
                            jacobiator: self.render(&s),
                        });
                    }
                }
            }
        }
        JacobiReport { violations }
    }

    /// Span of `[a, b]` for `a ∈ A`, `b ∈ B`.
    pub fn bracket_span(&self, a: &Subspace<GaussRational>, b: &Subspace<GaussRational>) -> Subspace<GaussRational> {
        let mut vecs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                let v = self.br(x, y);
                if v.iter().any(|c| !c.is_zero()) {
                    vecs.push(v);
                }
            }
        }
        Subspace::span(self.dim(), &vecs)
    }

    pub fn full(&self) -> Subspace<GaussRational> {
        Subspace::full(self.dim())
    }

    pub fn derived_algebra(&self) -> Subspace<GaussRational> {
        let g = self.full();
        self.bracket_span(&g, &g)
    }

    /// Centralizer of a subspace.
    pub fn centralizer(&self, s: &Subspace<GaussRational>) -> Subspace<GaussRational> {
        let n = self.dim();
        let mut rows = Vec::new();
        for y in s.basis() {
            // rows of x ↦ [x, y]
            let m = Matrix::from_cols(n, &(0..n).map(|i| self.br(&self.unit(i), y)).collect::<Vec<_>>());
            rows.extend(m.row_vecs());
        }
        if rows.is_empty() {
            return Subspace::full(n);
        }
        Subspace::span(n, &Matrix::from_rows(n, rows).nullspace())
    }

    pub fn center(&self) -> Subspace<GaussRational> {
        self.centralizer(&self.full())
    }

    /// `g ⊇ [g,g] ⊇ …` until it stabilizes.
    pub fn derived_series(&self) -> Vec<Subspace<GaussRational>> {
        let mut series = vec![self.full()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(last, last);
            if next == *last {
                return series;
            }
            series.push(next);
        }
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …` until it stabilizes.
    pub fn lower_central_series(&self) -> Vec<Subspace<GaussRational>> {
        let g = self.full();
        let mut series = vec![g.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(&g, last);
            if next == *last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// `K_ij = tr(ad_{e_i} ad_{e_j})`.
    pub fn killing_form(&self) -> Matrix<GaussRational> {
        let n = self.dim();
        let ads: Vec<Matrix<GaussRational>> = (0..n).map(|i| self.ad(&self.unit(i))).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut acc = GaussRational::zero();
                for a in 0..n {
                    for b in 0..n {
                        let x = ads[i].get(a, b);
                        if x.is_zero() {
                            continue;
                        }
                        let y = ads[j].get(b, a);
                        if !y.is_zero() {
                            acc += &(x * y);
                        }
                    }
                }
                k.set(i, j, acc.clone());
                k.set(j, i, acc);
            }
        }
        k
    }

    /// Inertia of the Killing form; requires a real algebra.
    pub fn killing_signature(&self) -> Signature {
        hermitian_signature(&self.killing_form())
    }

    pub fn subalgebra_closed(&self, s: &Subspace<GaussRational>) -> bool {
        s.contains_space(&self.bracket_span(s, s))
    }

    pub fn is_ideal(&self, s: &Subspace<GaussRational>) -> bool {
        s.contains_space(&self.bracket_span(&self.full(), s))
    }

    /// Radical by Cartan's criterion: the Killing-orthogonal of `[g,g]`.
    /// The result is checked to be a solvable ideal.
    pub fn radical(&self) -> Result<Subspace<GaussRational>, LieError> {
        let n = self.dim();
        let k = self.killing_form();
        let rows: Vec<Vec<GaussRational>> = self.derived_algebra().basis().iter().map(|y| k.mul_vec(y)).collect();
        let rad = if rows.is_empty() {
            self.full()
        } else {
            Subspace::span(n, &Matrix::from_rows(n, rows).nullspace())
        };
        if !self.is_ideal(&rad) {
            return Err(LieError::Internal("radical is not an ideal".into()));
        }
        if !self.restrict(&rad, "rad")?.is_solvable() {
            return Err(LieError::Internal("radical is not solvable".into()));
        }
        Ok(rad)
    }

    /// Subalgebra on the echelon basis of `s`, named `{prefix}{i}`.
    pub fn restrict(&self, s: &Subspace<GaussRational>, prefix: &str) -> Result<LieAlgebra, LieError> {
        let names: Vec<String> = (0..s.dim()).map(|i| format!("{prefix}{i}")).collect();
        self.subalgebra(format!("{}|{prefix}", self.name), s.basis(), names)
    }

    /// Subalgebra spanned by the given independent vectors, in that basis.
    pub fn subalgebra(
        &self,
        name: impl Into<String>,
        vecs: &[Vec<GaussRational>],
        names: Vec<String>,
    ) -> Result<LieAlgebra, LieError> {
        let d = vecs.len();
        if names.len() != d {
            return Err(LieError::DimensionMismatch { expected: d, got: names.len() });
        }
        let p = Matrix::from_cols(self.dim(), vecs);
        if p.rank() != d {
            return Err(LieError::Dependent);
        }
        let mut c = vec![GaussRational::zero(); d * d * d];
        let real = self.real && vecs.iter().flatten().all(GaussRational::is_real);
        for i in 0..d {
            for j in 0..d {
                let b = self.br(&vecs[i], &vecs[j]);
                let coords = p.solve(&b).ok_or(LieError::NotClosed)?;
                for (k, x) in coords.into_iter().enumerate() {
                    c[(i * d + j) * d + k] = x;
                }
            }
        }
        LieAlgebra::new(name, names, real, c)
    }

    /// Same algebra in the basis given by the columns `vecs`.
    pub fn change_basis(&self, vecs: &[Vec<GaussRational>], names: Vec<String>) -> Result<LieAlgebra, LieError> {
        if vecs.len() != self.dim() {
            return Err(LieError::DimensionMismatch { expected: self.dim(), got: vecs.len() });
        }
        self.subalgebra(self.name.clone(), vecs, names)
    }

    /// `g / s`, on the basis of coordinate axes not used as pivots by `s`.
    pub fn quotient(&self, s: &Subspace<GaussRational>) -> Result<LieAlgebra, LieError> {
        if !self.is_ideal(s) {
            return Err(LieError::NotIdeal);
        }
        let keep: Vec<usize> = (0..self.dim()).filter(|c| !s.pivots().contains(c)).collect();
        let d = keep.len();
        let mut c = vec![GaussRational::zero(); d * d * d];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let r = s.reduce(&self.br(&self.unit(i), &self.unit(j)));
                for (k, &kk) in keep.iter().enumerate() {
                    c[(a * d + b) * d + k] = r[kk].clone();
                }
            }
        }
        let names = keep.iter().map(|&i| self.basis[i].clone()).collect();
        LieAlgebra::new(format!("{}/ideal", self.name), names, self.real, c)
    }

    /// Invariant-based identification of 3-dimensional real algebras.
    pub fn fingerprint3(&self) -> Result<Fingerprint, LieError> {
        if self.dim() != 3 {
            return Err(LieError::DimensionMismatch { expected: 3, got: self.dim() });
        }
        let killing = self.killing_signature();
        let derived = self.derived_algebra();
        let center = self.center().dim();
        let nilpotent = self.is_nilpotent();
        let solvable = self.is_solvable();
        match (derived.dim(), center, nilpotent) {
            (3, _, _) if killing == Signature::new(0, 3, 0) => return Ok(Fingerprint::Su2),
            (3, _, _) if killing == Signature::new(2, 1, 0) => return Ok(Fingerprint::Sl2R),
            (1, 1, true) => return Ok(Fingerprint::Heis3),
            (1, 1, false) => return Ok(Fingerprint::AffPlusR),
            _ => {}
        }
        let ad_ratio = if derived.dim() == 2 && solvable {
            let x = derived.complement_basis().remove(0);
            let ad = self.ad(&x);
            let restricted: Vec<Vec<GaussRational>> = derived
                .basis()
                .iter()
                .map(|b| derived.coordinates(&ad.mul_vec(b)).expect("derived algebra is an ideal"))
                .collect();
            let m = Matrix::from_cols(2, &restricted);
            let (tr, det) = (m.trace(), m.det());
            det.inv().map(|di| &(&tr * &tr) * &di)
        } else {
            None
        };
        Ok(Fingerprint::Other(Descriptor {
            killing,
            center,
            derived: derived.dim(),
            nilpotent,
            solvable,
            ad_ratio: ad_ratio.map(|r| r.to_string()),
        }))
    }

    /// Human-readable linear combination of basis names.
    pub fn render<S: Scalar + fmt::Display>(&self, v: &[S]) -> String {
        render_combination(v, &self.basis)
    }

    /// Is every structure constant of `self` equal to the other's up to names?
    pub fn same_constants(&self, other: &LieAlgebra) -> bool {
        self.c == other.c
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}, dim {})", self.name, self.dim())?;
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let v = self.br(&self.unit(i), &self.unit(j));
                if v.iter().any(|x| !x.is_zero()) {
                    write!(f, " [{},{}]={}", self.basis[i], self.basis[j], self.render(&v))?;
                }
            }
        }
        Ok(())
    }
}

pub fn render_combination<S: Scalar + fmt::Display>(v: &[S], names: &[String]) -> String {
    let mut parts = Vec::new();
    for (x, name) in v.iter().zip(names) {
        if x.is_zero() {
            continue;
        }
        let s = x.to_string();
        let term = if s == "1" {
            name.clone()
        } else if s == "-1" {
            format!("-{name}")
        } else if s.contains(' ') {
            format!("({s}){name}")
        } else {
            format!("{s}{name}")
        };
        parts.push(term);
    }
    if parts.is_empty() {
        return "0".into();
    }
    parts.join(" + ").replace("+ -", "- ")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JacobiViolation {
    pub triple: [usize; 3],
    pub names: [String; 3],
    pub jacobiator: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JacobiReport {
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Invariants used to separate 3-dimensional algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Descriptor {
    pub killing: Signature,
    pub center: usize,
    pub derived: usize,
    pub nilpotent: bool,
    pub solvable: bool,
    /// `tr²/det` of `ad_x` on a 2-dimensional derived algebra.
    pub ad_ratio: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Fingerprint {
    Su2,
    Sl2R,
    AffPlusR,
    Heis3,
    Other(Descriptor),
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fingerprint::Su2 => write!(f, "su2"),
            Fingerprint::Sl2R => write!(f, "sl2R"),
            Fingerprint::AffPlusR => write!(f, "aff_plus_R"),
            Fingerprint::Heis3 => write!(f, "heis3"),
            Fingerprint::Other(d) => {
                write!(
                    f,
                    "other({}, derived dim {}, center {}",
                    if d.nilpotent {
                        "nilpotent"
                    } else if d.solvable {
                        "solvable"
                    } else {
                        "non-solvable"
                    },
                    d.derived,
                    d.center
                )?;
                if let Some(r) = &d.ad_ratio {
                    write!(f, ", tr^2/det {r}")?;
                }
                write!(f, ", killing {})", d.killing)
            }
        }
    }
}

/// Random invertible rational change of basis, used by invariance tests.
pub fn random_basis_change<R: rand::Rng>(n: usize, rng: &mut R) -> Vec<Vec<GaussRational>> {
    loop {
        let cols: Vec<Vec<GaussRational>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| GaussRational::real(Rational::new(rng.gen_range(-3..=3), rng.gen_range(1..=3))))
                    .collect()
            })
            .collect();
        if !Matrix::from_cols(n, &cols).det().is_zero() {
            return cols;
        }
    }
}

pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Coordinate unit vectors of an algebra.
pub fn units(g: &LieAlgebra) -> Vec<Vec<GaussRational>> {
    unit_vectors(g.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn q(n: i64) -> GaussRational {
        GaussRational::from_int(n)
    }

    fn heis3() -> LieAlgebra {
        LieAlgebra::from_brackets("heis3", &["X", "Y", "Z"], true, &[(0, 1, vec![(2, q(-1))])]).unwrap()
    }

    fn su2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            "su2",
            &["X", "Y", "Z"],
            true,
            &[(0, 1, vec![(2, q(-1))]), (2, 0, vec![(1, q(-1))]), (2, 1, vec![(0, q(1))])],
        )
        .unwrap()
    }

    #[test]
    fn bracket_basics() {
        let h = heis3();
        assert_eq!(h.br(&h.e("X"), &h.e("Y")), h.e("Z").iter().map(|x| -x).collect::<Vec<_>>());
        assert!(h.br(&h.e("X"), &h.e("X")).iter().all(GaussRational::is_zero));
        assert!(h.bracket(&h.e("X"), &[q(1)]).is_err());
    }

    #[test]
    fn antisymmetry_enforced() {
        let mut c = vec![GaussRational::zero(); 27];
        c[(0 * 3 + 1) * 3 + 2] = q(1);
        let err = LieAlgebra::new("bad", vec!["X".into(), "Y".into(), "Z".into()], true, c).unwrap_err();
        assert!(matches!(err, LieError::NotAntisymmetric { .. }));
    }

    #[test]
    fn jacobi_negative_control() {
        let broken = LieAlgebra::from_brackets(
            "broken",
            &["X", "Y", "Z"],
            true,
            &[(0, 1, vec![(2, q(-1))]), (1, 2, vec![(1, q(1))])],
        )
        .unwrap();
        let rep = broken.check_jacobi();
        assert_eq!(rep.violations.len(), 1);
        assert_eq!(rep.violations[0].triple, [0, 1, 2]);
        assert!(su2().check_jacobi().passed());
    }

    #[test]
    fn series_and_center() {
        let h = heis3();
        assert_eq!(h.center(), Subspace::span(3, &[h.e("Z")]));
        assert!(h.is_nilpotent());
        assert_eq!(h.lower_central_series().len(), 3);
        assert!(!su2().is_solvable());
        assert!(su2().center().is_zero());
    }

    #[test]
    fn killing_and_fingerprint() {
        assert_eq!(su2().killing_signature(), Signature::new(0, 3, 0));
        assert_eq!(heis3().killing_signature(), Signature::new(0, 0, 3));
        assert_eq!(su2().fingerprint3().unwrap(), Fingerprint::Su2);
        assert_eq!(heis3().fingerprint3().unwrap(), Fingerprint::Heis3);
    }

    #[test]
    fn quotient_and_radical() {
        let h = heis3();
        let qt = h.quotient(&h.center()).unwrap();
        assert!(qt.is_abelian());
        assert_eq!(qt.dim(), 2);
        assert!(h.quotient(&Subspace::span(3, &[h.e("X")])).is_err());
        assert_eq!(h.radical().unwrap(), h.full());
        assert!(su2().radical().unwrap().is_zero());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn invariants_survive_basis_change(idx in 0usize..17, seed in any::<u64>()) {
            let name = crate::catalog::valid_builtin_names().nth(idx).unwrap();
            let g = crate::catalog::builtin(name).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let cols = random_basis_change(g.dim(), &mut rng);
            let h = g.change_basis(&cols, default_names("e", g.dim())).unwrap();
            prop_assert!(h.check_jacobi().passed());
            prop_assert_eq!(h.killing_signature(), g.killing_signature());
            prop_assert_eq!(h.center().dim(), g.center().dim());
            prop_assert_eq!(h.derived_algebra().dim(), g.derived_algebra().dim());
            if g.dim() == 3 {
                prop_assert_eq!(h.fingerprint3().unwrap(), g.fingerprint3().unwrap());
            }
        }
    }
}
