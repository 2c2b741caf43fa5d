//! Matrix model of `su(p+1, q+1)` with its grading and distinguished
//! subalgebras.
//!
//! Matrices are `(m+2)×(m+2)` with index `0`, block indices `1..=m` and
//! `L = m+1`; the Hermitian form is
//! `F = [[0, 0, i], [0, I_{p,q}, 0], [−i, 0, 0]]`. Solving `F M + M* F = 0`
//! gives
//!
//! ```text
//!     [ β   −i v* S    b  ]
//! M = [ u     𝔲        v  ]      S = I_{p,q}, a, b real,
//!     [ a    i u* S   −β̄  ]      𝔲 ∈ u(p,q), tr 𝔲 + 2i Im β = 0.
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::liealg::{LieAlgebra, LieError};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{Field, GaussRational, Rational, Scalar};

#[derive(Debug, thiserror::Error)]
pub enum SuError {
    #[error("need p + q >= 1, got p = {p}, q = {q}")]
    BadSignature { p: usize, q: usize },
    #[error("basis matrix {name} violates the defining relations:\n{matrix}")]
    Relation { name: String, matrix: String },
    #[error("matrix is not in the span of the model basis")]
    NotInModel,
    #[error(transparent)]
    Lie(#[from] LieError),
}

type M = Matrix<GaussRational>;

fn g(re: i64, im: i64) -> GaussRational {
    GaussRational::ints(re, im)
}

fn unit_matrix(n: usize, i: usize, j: usize, c: GaussRational) -> M {
    let mut e = M::zeros(n, n);
    e.set(i, j, c);
    e
}

/// Named subspaces of the model, all coordinate subspaces of its basis.
#[derive(Debug, Clone)]
pub struct Parts {
    index: BTreeMap<&'static str, Vec<usize>>,
    dim: usize,
}

impl Parts {
    pub const NAMES: [&'static str; 11] = [
        "grade-2", "grade-1", "grade0", "grade1", "grade2", "heis", "t_part", "s_part", "cartan_a", "borel", "h0",
    ];

    pub fn indices(&self, name: &str) -> &[usize] {
        &self.index[name]
    }

    pub fn get(&self, name: &str) -> Subspace<GaussRational> {
        Subspace::coordinate(self.dim, self.indices(name))
    }

    pub fn h0(&self) -> Subspace<GaussRational> {
        self.get("h0")
    }

    pub fn heis(&self) -> Subspace<GaussRational> {
        self.get("heis")
    }

    pub fn borel(&self) -> Subspace<GaussRational> {
        self.get("borel")
    }

    pub fn cartan_a(&self) -> Subspace<GaussRational> {
        self.get("cartan_a")
    }

    /// `g^{-2}, …, g^{2}`.
    pub fn grades(&self) -> Vec<Subspace<GaussRational>> {
        ["grade-2", "grade-1", "grade0", "grade1", "grade2"].iter().map(|n| self.get(n)).collect()
    }

    pub fn manifest(&self) -> &BTreeMap<&'static str, Vec<usize>> {
        &self.index
    }
}

pub struct SUModel {
    p: usize,
    q: usize,
    algebra: Arc<LieAlgebra>,
    matrices: Vec<M>,
    form: M,
    parts: Parts,
    // realified basis restricted to independent rows, and its inverse
    pivot_rows: Vec<usize>,
    pivot_inv: Matrix<Rational>,
}

impl fmt::Debug for SUModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SUModel(su({},{}), dim {})", self.p + 1, self.q + 1, self.dim())
    }
}

fn realify(mat: &M) -> Vec<Rational> {
    let mut out = Vec::with_capacity(2 * mat.rows() * mat.cols());
    for i in 0..mat.rows() {
        for j in 0..mat.cols() {
            out.push(mat.get(i, j).re.clone());
            out.push(mat.get(i, j).im.clone());
        }
    }
    out
}

/// Basis names in model order.
pub fn basis_names(m: usize) -> Vec<String> {
    let idx = |s: &str, i: usize| if m == 1 { s.to_string() } else { format!("{s}{i}") };
    let mut names: Vec<String> = (1..=m).map(|i| idx("X", i)).collect();
    names.extend((1..=m).map(|i| idx("Y", i)));
    names.push("Z".into());
    names.push("U".into());
    names.extend((1..=m).map(|i| idx("V", i)));
    for j in 1..=m {
        for k in j + 1..=m {
            names.push(format!("R{j}{k}"));
            names.push(format!("I{j}{k}"));
        }
    }
    names.extend((1..=m).map(|i| idx("P", i)));
    names.extend((1..=m).map(|i| idx("Q", i)));
    names.push("B".into());
    names
}

pub fn build_su(p: usize, q: usize) -> Result<SUModel, SuError> {
    let m = p + q;
    if m == 0 {
        return Err(SuError::BadSignature { p, q });
    }
    let n = m + 2;
    let l = m + 1;
    let sgn = |k: usize| if k <= p { 1 } else { -1 };
    let half = GaussRational::ratio(1, 2);

    let mut mats: Vec<M> = Vec::new();
    for i in 1..=m {
        mats.push(unit_matrix(n, i, 0, g(1, 0)).add(&unit_matrix(n, l, i, g(0, sgn(i)))).scale(&half));
    }
    for j in 1..=m {
        mats.push(unit_matrix(n, j, 0, g(0, sgn(j))).add(&unit_matrix(n, l, j, g(1, 0))).scale(&half));
    }
    mats.push(unit_matrix(n, l, 0, half.clone()));
    mats.push(unit_matrix(n, 0, 0, g(-1, 0)).add(&unit_matrix(n, l, l, g(1, 0))));
    for k in 1..=m {
        let theta = GaussRational::new(Rational::zero(), Rational::new(-sgn(k), n as i64));
        let mut v = M::zeros(n, n);
        for d in 0..n {
            v.set(d, d, theta.clone());
        }
        v.set(k, k, &theta + &g(0, sgn(k)));
        mats.push(v);
    }
    for j in 1..=m {
        for k in j + 1..=m {
            let ss = sgn(j) * sgn(k);
            mats.push(unit_matrix(n, j, k, g(1, 0)).add(&unit_matrix(n, k, j, g(-ss, 0))));
            mats.push(unit_matrix(n, j, k, g(0, 1)).add(&unit_matrix(n, k, j, g(0, ss))));
        }
    }
    for j in 1..=m {
        mats.push(unit_matrix(n, j, l, g(1, 0)).add(&unit_matrix(n, 0, j, g(0, -sgn(j)))));
    }
    for j in 1..=m {
        mats.push(unit_matrix(n, j, l, g(0, 1)).add(&unit_matrix(n, 0, j, g(-sgn(j), 0))));
    }
    mats.push(unit_matrix(n, 0, l, g(1, 0)));

    let mut form = M::zeros(n, n);
    form.set(0, l, g(0, 1));
    form.set(l, 0, g(0, -1));
    for k in 1..=m {
        form.set(k, k, g(sgn(k), 0));
    }

    let names = basis_names(m);
    for (name, mat) in names.iter().zip(&mats) {
        let rel = form.mul(mat).add(&mat.adjoint().mul(&form));
        if !rel.is_zero() || !mat.trace().is_zero() {
            return Err(SuError::Relation { name: name.clone(), matrix: mat.to_string() });
        }
    }

    let dim = mats.len();
    let cols: Vec<Vec<Rational>> = mats.iter().map(realify).collect();
    let big = Matrix::from_cols(2 * n * n, &cols);
    let (_, pivot_rows) = big.transpose().rref();
    debug_assert_eq!(pivot_rows.len(), dim);
    let sub = Matrix::from_rows(dim, pivot_rows.iter().map(|&r| big.row(r)).collect());
    let pivot_inv = sub.inverse().expect("model basis is independent");

    let parts = make_parts(m, dim);
    let mut model = SUModel {
        p,
        q,
        algebra: Arc::new(LieAlgebra::abelian("tmp", &[])),
        matrices: mats,
        form,
        parts,
        pivot_rows,
        pivot_inv,
    };

    let mut c = vec![GaussRational::zero(); dim * dim * dim];
    for i in 0..dim {
        for j in i + 1..dim {
            let br = model.matrices[i].commutator(&model.matrices[j]);
            let coords = model.coords_of(&br)?;
            for (k, x) in coords.into_iter().enumerate() {
                c[(i * dim + j) * dim + k] = GaussRational::real(x.clone());
                c[(j * dim + i) * dim + k] = GaussRational::real(-x);
            }
        }
    }
    let name = format!("su({},{})", p + 1, q + 1);
    model.algebra = Arc::new(LieAlgebra::new(name, names, true, c)?);
    Ok(model)
}

fn make_parts(m: usize, dim: usize) -> Parts {
    let r = |a: usize, b: usize| (a..b).collect::<Vec<_>>();
    let z = 2 * m;
    let u = 2 * m + 1;
    let v0 = 2 * m + 2;
    let g1 = m * m + 2 * m + 2;
    let b = dim - 1;
    let mut index = BTreeMap::new();
    index.insert("grade-2", vec![z]);
    index.insert("grade-1", r(0, 2 * m));
    index.insert("grade0", r(u, g1));
    index.insert("grade1", r(g1, b));
    index.insert("grade2", vec![b]);
    index.insert("heis", r(0, z + 1));
    index.insert("t_part", vec![u]);
    index.insert("s_part", r(v0, v0 + m));
    index.insert("cartan_a", r(u, v0 + m));
    index.insert("borel", r(0, v0 + m));
    index.insert("h0", r(u, dim));
    Parts { index, dim }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mismatch {
    pub check: String,
    pub detail: String,
}

impl SUModel {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn m(&self) -> usize {
        self.p + self.q
    }

    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn matrices(&self) -> &[M] {
        &self.matrices
    }

    pub fn hermitian_form(&self) -> &M {
        &self.form
    }

    pub fn parts(&self) -> &Parts {
        &self.parts
    }

    fn named(&self, s: &str, i: usize) -> Vec<GaussRational> {
        let name = if self.m() == 1 { s.to_string() } else { format!("{s}{i}") };
        self.algebra.e(&name)
    }

    /// `X_i`, 1-based.
    pub fn x(&self, i: usize) -> Vec<GaussRational> {
        self.named("X", i)
    }

    pub fn y(&self, i: usize) -> Vec<GaussRational> {
        self.named("Y", i)
    }

    pub fn z(&self) -> Vec<GaussRational> {
        self.algebra.e("Z")
    }

    pub fn u(&self) -> Vec<GaussRational> {
        self.algebra.e("U")
    }

    pub fn v(&self, k: usize) -> Vec<GaussRational> {
        self.named("V", k)
    }

    /// Real coordinates of a matrix in the model basis.
    pub fn coords_of(&self, mat: &M) -> Result<Vec<Rational>, SuError> {
        let flat = realify(mat);
        let rhs: Vec<Rational> = self.pivot_rows.iter().map(|&r| flat[r].clone()).collect();
        let c = self.pivot_inv.mul_vec(&rhs);
        if self.matrix_of_real(&c) != *mat {
            return Err(SuError::NotInModel);
        }
        Ok(c)
    }

    /// Coordinates of a matrix over any scalar extension (e.g. entries
    /// depending on a formal real parameter).
    pub fn coords_generic<S: Field + Scalar>(&self, mat: &Matrix<S>) -> Result<Vec<S>, SuError> {
        let n = self.m() + 2;
        let mut flat = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            for j in 0..n {
                flat.push(mat.get(i, j).re_part());
                flat.push(mat.get(i, j).im_part());
            }
        }
        let dim = self.dim();
        let c: Vec<S> = (0..dim)
            .map(|k| {
                self.pivot_rows.iter().enumerate().fold(S::zero(), |acc, (a, &r)| {
                    let w = self.pivot_inv.get(k, a);
                    if w.is_zero() {
                        acc
                    } else {
                        acc + S::from_rational(w) * flat[r].clone()
                    }
                })
            })
            .collect();
        let mut back: Matrix<S> = Matrix::zeros(n, n);
        for (x, basis) in c.iter().zip(&self.matrices) {
            if x.is_zero() {
                continue;
            }
            let lifted = Matrix::from_rows(n, basis.row_vecs().iter().map(|r| r.iter().map(S::from_gauss).collect()).collect());
            back = back.add(&lifted.scale(x));
        }
        if back != *mat {
            return Err(SuError::NotInModel);
        }
        Ok(c)
    }

    fn matrix_of_real(&self, c: &[Rational]) -> M {
        let n = self.m() + 2;
        let mut out = M::zeros(n, n);
        for (x, mat) in c.iter().zip(&self.matrices) {
            if !x.is_zero() {
                out = out.add(&mat.scale(&GaussRational::real(x.clone())));
            }
        }
        out
    }

    /// `Σ c_i M_i` for real coordinates (imaginary parts must vanish).
    pub fn matrix_of(&self, c: &[GaussRational]) -> M {
        assert!(c.iter().all(GaussRational::is_real), "matrix_of: complex coordinates");
        let re: Vec<Rational> = c.iter().map(|x| x.re.clone()).collect();
        self.matrix_of_real(&re)
    }

    /// Dimensions of `g^{-2}..g^{2}` and any pair `(i, j)` of basis vectors
    /// with `[g^i, g^j] ⊄ g^{i+j}`.
    pub fn grading(&self) -> (Vec<usize>, Vec<Mismatch>) {
        let grades = self.parts.grades();
        let dims = grades.iter().map(Subspace::dim).collect();
        let mut bad = Vec::new();
        let names = self.algebra.basis_names();
        for (gi, a) in grades.iter().enumerate() {
            for (gj, b) in grades.iter().enumerate() {
                let target = gi as i64 + gj as i64 - 4;
                let allowed = if target.abs() > 2 {
                    Subspace::zero(self.dim())
                } else {
                    grades[(target + 2) as usize].clone()
                };
                for (&ia, x) in self.parts.indices(Parts::NAMES[gi]).iter().zip(a.basis()) {
                    for (&ib, y) in self.parts.indices(Parts::NAMES[gj]).iter().zip(b.basis()) {
                        if !allowed.contains(&self.algebra.br(x, y)) {
                            bad.push(Mismatch {
                                check: "grading".into(),
                                detail: format!("[{}, {}]", names[ia], names[ib]),
                            });
                        }
                    }
                }
            }
        }
        (dims, bad)
    }

    /// Closure of each named part, and `[borel, borel] = heis`.
    pub fn parts_check(&self) -> Vec<Mismatch> {
        let mut bad = Vec::new();
        for name in ["h0", "cartan_a", "t_part", "s_part", "borel", "heis", "grade0"] {
            if !self.algebra.subalgebra_closed(&self.parts.get(name)) {
                bad.push(Mismatch { check: "closed".into(), detail: name.into() });
            }
        }
        for name in ["grade-1", "grade1"] {
            if self.algebra.subalgebra_closed(&self.parts.get(name)) {
                bad.push(Mismatch { check: "not closed".into(), detail: name.into() });
            }
        }
        let b = self.parts.borel();
        if self.algebra.bracket_span(&b, &b) != self.parts.heis() {
            bad.push(Mismatch { check: "derived borel".into(), detail: "[b,b] != heis".into() });
        }
        if !self.complement_check(&self.parts.heis()) {
            bad.push(Mismatch { check: "complement".into(), detail: "heis + h0 != g".into() });
        }
        bad
    }

    /// The bracket tables of `ad_U` and `ad_{V_k}` on `X_i, Y_j, Z`.
    pub fn ad_table_check(&self) -> Vec<Mismatch> {
        let g = &self.algebra;
        let m = self.m();
        let neg = |v: Vec<GaussRational>| v.into_iter().map(|x| -x).collect::<Vec<_>>();
        let zero = vec![GaussRational::zero(); self.dim()];
        let two_z: Vec<GaussRational> = self.z().iter().map(|x| x * &GaussRational::from_int(2)).collect();
        let mut expected: Vec<(String, Vec<GaussRational>, Vec<GaussRational>, Vec<GaussRational>)> = Vec::new();
        for i in 1..=m {
            expected.push((format!("ad_U X{i}"), self.u(), self.x(i), self.x(i)));
            expected.push((format!("ad_U Y{i}"), self.u(), self.y(i), self.y(i)));
        }
        expected.push(("ad_U Z".into(), self.u(), self.z(), two_z));
        for k in 1..=m {
            for j in 1..=m {
                let (ex, ey) = if j == k { (self.y(k), neg(self.x(k))) } else { (zero.clone(), zero.clone()) };
                expected.push((format!("ad_V{k} X{j}"), self.v(k), self.x(j), ex));
                expected.push((format!("ad_V{k} Y{j}"), self.v(k), self.y(j), ey));
            }
            expected.push((format!("ad_V{k} Z"), self.v(k), self.z(), zero.clone()));
        }
        expected
            .into_iter()
            .filter(|(_, a, b, want)| g.br(a, b) != *want)
            .map(|(label, a, b, _)| Mismatch { check: "ad table".into(), detail: format!("{label} = {}", g.render(&g.br(&a, &b))) })
            .collect()
    }

    /// `L ∩ h0 = 0` and `dim L + dim h0 = dim g`.
    pub fn complement_check(&self, l: &Subspace<GaussRational>) -> bool {
        let h0 = self.parts.h0();
        l.dim() + h0.dim() == self.dim() && l.intersection(&h0).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Signature;

    #[test]
    fn dimensions_and_relations() {
        for (p, q, dim, grades) in [(1, 0, 8, vec![1, 2, 2, 2, 1]), (1, 1, 15, vec![1, 4, 5, 4, 1]), (2, 0, 15, vec![1, 4, 5, 4, 1])] {
            let s = build_su(p, q).unwrap();
            assert_eq!(s.dim(), dim);
            assert!(s.matrices().iter().all(|mat| mat.trace().is_zero()));
            let (dims, bad) = s.grading();
            assert_eq!(dims, grades);
            assert!(bad.is_empty(), "{bad:?}");
            assert!(s.parts_check().is_empty(), "{:?}", s.parts_check());
            assert!(s.ad_table_check().is_empty(), "{:?}", s.ad_table_check());
            assert!(s.algebra().check_jacobi().passed());
        }
        assert!(matches!(build_su(0, 0), Err(SuError::BadSignature { .. })));
    }

    #[test]
    fn part_dimensions_m1() {
        let s = build_su(1, 0).unwrap();
        assert_eq!(s.parts().h0().dim(), 5);
        assert_eq!(s.parts().borel().dim(), 5);
        assert_eq!(s.parts().heis().dim(), 3);
        assert_eq!(s.algebra().basis_names().join(" "), "X Y Z U V P Q B");
        assert!(!s.complement_check(&s.parts().borel()));
    }

    #[test]
    fn heisenberg_brackets_and_coords() {
        let s = build_su(1, 1).unwrap();
        let g = s.algebra();
        for i in 1..=2 {
            for j in 1..=2 {
                let want: Vec<GaussRational> = if i == j { s.z().iter().map(|x| -x).collect() } else { vec![GaussRational::zero(); 15] };
                assert_eq!(g.br(&s.x(i), &s.y(j)), want);
            }
        }
        let v: Vec<GaussRational> = (0..15).map(|i| GaussRational::from_int(i as i64 - 7)).collect();
        let back = s.coords_of(&s.matrix_of(&v)).unwrap();
        assert_eq!(back.into_iter().map(GaussRational::real).collect::<Vec<_>>(), v);
        let n = 4;
        assert!(matches!(s.coords_of(&Matrix::identity(n)), Err(SuError::NotInModel)));
    }

    #[test]
    fn killing_signature_matches_root_count() {
        // su(a,b): noncompact part 2ab, compact part a² + b² − 1
        for (p, q) in [(1, 0), (1, 1), (2, 0)] {
            let (a, b) = (p + 1, q + 1);
            let s = build_su(p, q).unwrap();
            assert_eq!(s.algebra().killing_signature(), Signature::new(2 * a * b, a * a + b * b - 1, 0));
            assert!(s.algebra().radical().unwrap().is_zero());
        }
    }
}
