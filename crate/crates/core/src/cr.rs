//! CR structures on Lie algebras: a codimension-one `D ⊂ g` with `J² = −1`
//! on `D`, or equivalently `𝔨 = {v − iJv : v ∈ D} ⊂ g_ℂ`.

use std::sync::Arc;

use serde::Serialize;

use crate::catalog::{CrSpec, CrSpecBody};
use crate::forms::{contact_volume, KForm};
use crate::liealg::LieAlgebra;
use crate::linalg::{hermitian_signature, Matrix, Signature, Subspace};
use crate::scalar::{conj_vec, GaussRational, MultiPoly, Rational};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CrError {
    #[error("CR structures need odd ambient dimension at least 3, got {0}")]
    BadAmbient(usize),
    #[error("D must have dimension {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("D must be spanned by real vectors")]
    NotReal,
    #[error("J does not square to -1 on D")]
    NotComplexStructure,
    #[error("k meets its conjugate nontrivially")]
    SelfConjugate,
    #[error("vector is not in D")]
    NotInD,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

fn check_ambient(g: &LieAlgebra) -> Result<usize, CrError> {
    let n = g.dim();
    if n < 3 || n % 2 == 0 {
        return Err(CrError::BadAmbient(n));
    }
    Ok((n - 1) / 2)
}

fn is_zero_vec(v: &[GaussRational]) -> bool {
    v.iter().all(GaussRational::is_zero)
}

fn neg_vec(v: &[GaussRational]) -> Vec<GaussRational> {
    v.iter().map(|x| -x).collect()
}

fn add_vec(a: &[GaussRational], b: &[GaussRational]) -> Vec<GaussRational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_vec(a: &[GaussRational], b: &[GaussRational]) -> Vec<GaussRational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale_vec(a: &[GaussRational], c: &GaussRational) -> Vec<GaussRational> {
    a.iter().map(|x| x * c).collect()
}

fn dot(phi: &[GaussRational], v: &[GaussRational]) -> GaussRational {
    phi.iter().zip(v).fold(GaussRational::zero(), |acc, (a, b)| &acc + &(a * b))
}

/// A pair `(D, J)`; `J` is stored by the images `J d_a` of a basis of `D`.
#[derive(Clone, Debug)]
pub struct CRStructure {
    g: Arc<LieAlgebra>,
    d_basis: Vec<Vec<GaussRational>>,
    j_images: Vec<Vec<GaussRational>>,
    d: Subspace<GaussRational>,
    coords: Matrix<GaussRational>,
}

impl CRStructure {
    /// `j_images[a] = J(d_basis[a])`, both as ambient vectors.
    pub fn new(
        g: Arc<LieAlgebra>,
        d_basis: Vec<Vec<GaussRational>>,
        j_images: Vec<Vec<GaussRational>>,
    ) -> Result<Self, CrError> {
        let m = check_ambient(&g)?;
        let n = g.dim();
        if d_basis.len() != 2 * m || j_images.len() != 2 * m {
            return Err(CrError::WrongDimension { expected: 2 * m, got: d_basis.len() });
        }
        if d_basis.iter().chain(&j_images).flatten().any(|x| !x.is_real()) {
            return Err(CrError::NotReal);
        }
        let d = Subspace::span(n, &d_basis);
        if d.dim() != 2 * m {
            return Err(CrError::WrongDimension { expected: 2 * m, got: d.dim() });
        }
        let coords = Matrix::from_cols(n, &d_basis);
        let cr = CRStructure { g, d_basis, j_images, d, coords };
        for (v, jv) in cr.d_basis.iter().zip(&cr.j_images) {
            let jjv = cr.apply_j(jv).map_err(|_| CrError::NotComplexStructure)?;
            if jjv != neg_vec(v) {
                return Err(CrError::NotComplexStructure);
            }
        }
        Ok(cr)
    }

    /// `J` given as a matrix in the `D` basis: column `a` holds the
    /// coordinates of `J d_a`.
    pub fn from_matrix(
        g: Arc<LieAlgebra>,
        d_basis: Vec<Vec<GaussRational>>,
        j: &Matrix<GaussRational>,
    ) -> Result<Self, CrError> {
        let n = g.dim();
        if j.rows() != d_basis.len() || j.cols() != d_basis.len() {
            return Err(CrError::WrongDimension { expected: d_basis.len(), got: j.rows() });
        }
        let images = (0..j.cols())
            .map(|a| {
                let mut v = vec![GaussRational::zero(); n];
                for (b, db) in d_basis.iter().enumerate() {
                    v = add_vec(&v, &scale_vec(db, j.get(b, a)));
                }
                v
            })
            .collect();
        CRStructure::new(g, d_basis, images)
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.g
    }

    pub fn d(&self) -> &Subspace<GaussRational> {
        &self.d
    }

    pub fn d_basis(&self) -> &[Vec<GaussRational>] {
        &self.d_basis
    }

    pub fn half_dim(&self) -> usize {
        self.d_basis.len() / 2
    }

    pub fn apply_j(&self, v: &[GaussRational]) -> Result<Vec<GaussRational>, CrError> {
        let c = self.coords.solve(v).ok_or(CrError::NotInD)?;
        let mut out = vec![GaussRational::zero(); self.g.dim()];
        for (ca, ja) in c.iter().zip(&self.j_images) {
            if !ca.is_zero() {
                out = add_vec(&out, &scale_vec(ja, ca));
            }
        }
        Ok(out)
    }

    /// A real 1-form with kernel `D`.
    pub fn contact_form(&self) -> Vec<GaussRational> {
        let m = Matrix::from_rows(self.g.dim(), self.d_basis.clone());
        m.nullspace().remove(0)
    }

    pub fn to_k(&self) -> CRSubalgebra {
        pair_to_k(self)
    }

    /// Levi form normalized by [`Self::contact_form`].
    pub fn levi(&self) -> LeviReport {
        levi(&self.g, &self.to_k(), &self.contact_form()).expect("kernel of the annihilator is D")
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.levi().signature.is_nondegenerate()
    }

    pub fn is_strictly_pseudoconvex(&self) -> bool {
        self.levi().signature.is_definite()
    }
}

/// Complex subspace `𝔨 ⊂ g_ℂ`.
#[derive(Clone, Debug)]
pub struct CRSubalgebra {
    g: Arc<LieAlgebra>,
    k: Subspace<GaussRational>,
}

impl CRSubalgebra {
    pub fn new(g: Arc<LieAlgebra>, vecs: &[Vec<GaussRational>]) -> Self {
        let k = Subspace::span(g.dim(), vecs);
        CRSubalgebra { g, k }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.g
    }

    pub fn space(&self) -> &Subspace<GaussRational> {
        &self.k
    }

    pub fn meets_conjugate(&self) -> bool {
        !self.k.intersection(&self.k.conj()).is_zero()
    }

    pub fn is_subalgebra(&self) -> bool {
        self.g.subalgebra_closed(&self.k)
    }

    /// `D_ℂ = 𝔨 ⊕ conj 𝔨`.
    pub fn d_complex(&self) -> Subspace<GaussRational> {
        self.k.sum(&self.k.conj())
    }
}

pub fn pair_to_k(cr: &CRStructure) -> CRSubalgebra {
    let vecs: Vec<Vec<GaussRational>> = cr
        .d_basis
        .iter()
        .zip(&cr.j_images)
        .map(|(v, jv)| sub_vec(v, &scale_vec(jv, &GaussRational::i())))
        .collect();
    CRSubalgebra::new(cr.g.clone(), &vecs)
}

/// Recovers `(D, J)` with `D = span{Re w, Im w}`, `J Re w = −Im w`,
/// `J Im w = Re w` for `w` running over a basis of `𝔨`.
pub fn k_to_pair(k: &CRSubalgebra) -> Result<CRStructure, CrError> {
    let m = check_ambient(&k.g)?;
    if k.k.dim() != m {
        return Err(CrError::WrongDimension { expected: m, got: k.k.dim() });
    }
    if k.meets_conjugate() {
        return Err(CrError::SelfConjugate);
    }
    let mut d_basis = Vec::new();
    let mut j_images = Vec::new();
    for w in k.k.basis() {
        let re: Vec<GaussRational> = w.iter().map(|x| GaussRational::real(x.re.clone())).collect();
        let im: Vec<GaussRational> = w.iter().map(|x| GaussRational::real(x.im.clone())).collect();
        j_images.push(neg_vec(&im));
        j_images.push(re.clone());
        d_basis.push(re);
        d_basis.push(im);
    }
    CRStructure::new(k.g.clone(), d_basis, j_images)
}

/// `[JX, Y] + [X, JY] ∈ D` and `N_J(X, Y) = 0` on all basis pairs of `D`.
pub fn is_cr_integrable(cr: &CRStructure) -> bool {
    let g = &cr.g;
    let b = &cr.d_basis;
    for a in 0..b.len() {
        for c in a + 1..b.len() {
            let (x, y) = (&b[a], &b[c]);
            let (jx, jy) = (&cr.j_images[a], &cr.j_images[c]);
            let s = add_vec(&g.br(jx, y), &g.br(x, jy));
            let Ok(js) = cr.apply_j(&s) else {
                return false;
            };
            let n = sub_vec(&sub_vec(&g.br(jx, jy), &g.br(x, y)), &js);
            if !is_zero_vec(&n) {
                return false;
            }
        }
    }
    true
}

/// `𝔨 ∩ conj 𝔨 = 0` and `𝔨 ⊕ conj 𝔨` is not a subalgebra.
pub fn is_regular(g: &LieAlgebra, k: &Subspace<GaussRational>) -> bool {
    if !k.intersection(&k.conj()).is_zero() {
        return false;
    }
    !g.subalgebra_closed(&k.sum(&k.conj()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LeviReport {
    pub matrix: Vec<Vec<GaussRational>>,
    pub signature: Signature,
    pub normalizing_form: Vec<GaussRational>,
}

impl LeviReport {
    pub fn render_matrix(&self) -> String {
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

/// `h_ab = −i φ([v_a, conj v_b])` on a basis of `𝔨`.
pub fn levi(g: &LieAlgebra, k: &CRSubalgebra, phi: &[GaussRational]) -> Result<LeviReport, CrError> {
    let n = g.dim();
    if phi.len() != n || is_zero_vec(phi) {
        return Err(CrError::Precondition("phi must be a nonzero 1-form".into()));
    }
    let dc = k.d_complex();
    if dc.dim() != n - 1 || dc.basis().iter().any(|v| !dot(phi, v).is_zero()) {
        return Err(CrError::Precondition("ker(phi) must equal k + conj k".into()));
    }
    let vs = k.k.basis();
    let mi = -GaussRational::i();
    let matrix: Vec<Vec<GaussRational>> = vs
        .iter()
        .map(|va| vs.iter().map(|vb| &mi * &dot(phi, &g.br(va, &conj_vec(vb)))).collect())
        .collect();
    let h = Matrix::from_rows(vs.len(), matrix.clone());
    Ok(LeviReport { matrix, signature: hermitian_signature(&h), normalizing_form: phi.to_vec() })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reeb {
    /// `φ` is contact and `η` is its Reeb field.
    Unique { eta: Vec<GaussRational> },
    /// `φ∧(dφ)^m = 0`; the Reeb system has `solutions_dim`-dimensional
    /// solution set (`None` when inconsistent).
    NonContact { solutions_dim: Option<usize>, particular: Option<Vec<GaussRational>> },
}

impl Reeb {
    pub fn eta(&self) -> Option<&Vec<GaussRational>> {
        match self {
            Reeb::Unique { eta } => Some(eta),
            Reeb::NonContact { .. } => None,
        }
    }
}

/// Solves `φ(η) = 1`, `dφ(η, ·) = 0`.
pub fn reeb(g: &LieAlgebra, phi: &[GaussRational], m: usize) -> Reeb {
    let n = g.dim();
    let form = KForm::one_form(phi);
    let contact = 2 * m + 1 == n && !contact_volume(g, &form, m).is_zero();
    // rows: φ, then j ↦ dφ(η, e_j) = −φ([η, e_j])
    let mut rows = vec![phi.to_vec()];
    let mut rhs = vec![GaussRational::one()];
    for j in 0..n {
        let row: Vec<GaussRational> = (0..n).map(|i| -dot(phi, &g.br(&g.unit(i), &g.unit(j)))).collect();
        rows.push(row);
        rhs.push(GaussRational::zero());
    }
    let a = Matrix::from_rows(n, rows);
    let sol = a.solve(&rhs);
    match (contact, sol) {
        (true, Some(eta)) => Reeb::Unique { eta },
        (_, sol) => Reeb::NonContact {
            solutions_dim: sol.as_ref().map(|_| n - a.rank()),
            particular: sol,
        },
    }
}

/// Does `ad_η` preserve `𝔨`?
pub fn is_normal(g: &LieAlgebra, k: &CRSubalgebra, eta: &[GaussRational]) -> bool {
    k.k.basis().iter().all(|v| k.k.contains(&g.br(eta, v)))
}

/// `Φ(D_1) = D_2` and `Φ J_1 = J_2 Φ` on `D_1`; columns of `map` are the
/// images of the basis of the first algebra.
pub fn cr_equivalent_via(map: &Matrix<GaussRational>, cr1: &CRStructure, cr2: &CRStructure) -> bool {
    if map.rows() != cr2.g.dim() || map.cols() != cr1.g.dim() || map.inverse().is_none() {
        return false;
    }
    for (v, jv) in cr1.d_basis.iter().zip(&cr1.j_images) {
        let pv = map.mul_vec(v);
        match cr2.apply_j(&pv) {
            Ok(j2pv) if j2pv == map.mul_vec(jv) => {}
            _ => return false,
        }
    }
    true
}

/// Largest coefficient of the Nijenhuis tensor of a full complex structure
/// `J` (columns are images of basis vectors); zero iff integrable.
pub fn nijenhuis_full(g: &LieAlgebra, j: &Matrix<GaussRational>) -> Result<Rational, CrError> {
    let n = g.dim();
    if n % 2 != 0 || j.rows() != n || j.cols() != n {
        return Err(CrError::BadAmbient(n));
    }
    if j.mul(j) != Matrix::identity(n).scale(&-GaussRational::one()) {
        return Err(CrError::NotComplexStructure);
    }
    let mut worst = Rational::zero();
    for a in 0..n {
        for b in a + 1..n {
            let (x, y) = (g.unit(a), g.unit(b));
            let (jx, jy) = (j.col(a), j.col(b));
            let inner = add_vec(&g.br(&x, &jy), &g.br(&jx, &y));
            let nv = sub_vec(&sub_vec(&g.br(&jx, &jy), &g.br(&x, &y)), &j.mul_vec(&inner));
            for c in nv {
                let m = c.max_abs();
                if m > worst {
                    worst = m;
                }
            }
        }
    }
    Ok(worst)
}

fn lemma_j(n: usize, t: usize, z: usize, delta: &GaussRational, pairs: &[(usize, usize, i64)]) -> Matrix<GaussRational> {
    let (k, l) = (delta.re.clone(), delta.im.clone());
    assert!(!k.is_zero(), "Re(delta) must be nonzero");
    let kinv = k.recip().unwrap();
    let mut j = Matrix::zeros(n, n);
    // J Z = −(T − l Z)/k
    j.set(t, z, GaussRational::real(-&kinv));
    j.set(z, z, GaussRational::real(&l * &kinv));
    // J T = J(T − l Z) + l J Z = k Z − l(T − l Z)/k
    j.set(t, t, GaussRational::real(-(&l * &kinv)));
    j.set(z, t, GaussRational::real(&k + &(&(&l * &l) * &kinv)));
    for &(x, y, eps) in pairs {
        j.set(y, x, GaussRational::from_int(eps));
        j.set(x, y, GaussRational::from_int(-eps));
    }
    j
}

/// `J_{δ,±}` on `u(2)` or `gl(2,ℝ)` in the basis `{T, X, Y, Z}`.
pub fn lemma1_j(delta: &GaussRational, sign: i64) -> Matrix<GaussRational> {
    lemma_j(4, 0, 3, delta, &[(1, 2, sign)])
}

/// `J_{(δ; ε)}` on `ℝ ⊕ h_{2m+1}` in the basis `{T, X_1..X_m, Y_1..Y_m, Z}`.
pub fn lemma2_j(delta: &GaussRational, eps: &[i64]) -> Matrix<GaussRational> {
    let m = eps.len();
    let pairs: Vec<(usize, usize, i64)> = eps.iter().enumerate().map(|(i, &e)| (1 + i, 1 + m + i, e)).collect();
    lemma_j(2 * m + 2, 0, 2 * m + 1, delta, &pairs)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContactCertificate {
    pub possible: bool,
    /// Coefficient of `φ∧(dφ)^m` on the volume element for generic
    /// `φ = Σ a_i θ^i`.
    pub volume: String,
    pub witness: Option<Vec<Rational>>,
}

/// Generic coefficient of the volume element of `φ∧(dφ)^m`.
pub fn generic_volume(g: &LieAlgebra, m: usize) -> MultiPoly {
    let n = g.dim();
    let vals: Vec<MultiPoly> = (0..n).map(MultiPoly::var).collect();
    let phi = KForm::one_form(&vals);
    let vol = contact_volume(g, &phi, m);
    vol.coeff(&(0..n).collect::<Vec<_>>())
}

/// Symbolic test for the existence of a contact form.
pub fn contact_possible(g: &LieAlgebra, m: usize) -> Result<ContactCertificate, CrError> {
    if g.dim() != 2 * m + 1 {
        return Err(CrError::BadAmbient(g.dim()));
    }
    let vol = generic_volume(g, m);
    let names: Vec<String> = (0..g.dim()).map(|i| format!("a{i}")).collect();
    let volume = vol.render(&names);
    if vol.is_identically_zero() {
        return Ok(ContactCertificate { possible: false, volume, witness: None });
    }
    Ok(ContactCertificate { possible: true, volume, witness: Some(nonvanishing_point(&vol, g.dim())) })
}

/// Integer point where a nonzero polynomial does not vanish, found one
/// variable at a time among `0..=deg`.
pub fn nonvanishing_point(p: &MultiPoly, nvars: usize) -> Vec<Rational> {
    assert!(!p.is_identically_zero());
    let mut cur = p.clone();
    let mut point = Vec::with_capacity(nvars);
    for v in 0..nvars {
        let deg = cur.degree_in(v) as i64;
        let (val, next) = (0..=deg)
            .map(|c| (c, cur.substitute(v, &GaussRational::from_int(c))))
            .find(|(_, q)| !q.is_identically_zero())
            .expect("a nonzero polynomial of degree d has a non-root among d+1 points");
        point.push(Rational::from_integer(val));
        cur = next;
    }
    point
}

/// Builds a CR structure from a catalog entry; returns the optional form.
pub fn from_spec(g: Arc<LieAlgebra>, spec: &CrSpec) -> Result<(CRStructure, Option<Vec<GaussRational>>), CrError> {
    let cr = match &spec.body {
        CrSpecBody::Sub { k } => k_to_pair(&CRSubalgebra::new(g.clone(), k))?,
        CrSpecBody::Pair { d, j } => {
            let jm = Matrix::from_rows(d.len(), j.clone());
            CRStructure::from_matrix(g.clone(), d.clone(), &jm)?
        }
    };
    Ok((cr, spec.phi.clone()))
}

/// Nondegenerate 2-form `dφ` induced on `g / center`?
pub fn quotient_form_nondegenerate(g: &LieAlgebra, phi: &[GaussRational]) -> bool {
    let center = g.center();
    let comp = center.complement_basis();
    let dphi = KForm::one_form(phi).d(g);
    let rows: Vec<Vec<GaussRational>> =
        comp.iter().map(|a| comp.iter().map(|b| dphi.eval(&[a.clone(), b.clone()])).collect()).collect();
    !Matrix::from_rows(comp.len(), rows).det().is_zero()
}

/// `k = span{X_i − i ε_i Y_i}` on `h_{2m+1}` with basis `X.., Y.., Z`.
pub fn heisenberg_k(g: Arc<LieAlgebra>, eps: &[i64]) -> CRSubalgebra {
    let m = eps.len();
    let vecs: Vec<Vec<GaussRational>> = (0..m)
        .map(|i| {
            let mut v = vec![GaussRational::zero(); 2 * m + 1];
            v[i] = GaussRational::one();
            v[m + i] = GaussRational::ints(0, -eps[i]);
            v
        })
        .collect();
    CRSubalgebra::new(g, &vecs)
}

/// Random automorphism of `h_{2m+1}` (basis `X.., Y.., Z`): two symplectic
/// shears of the horizontal part followed by `e ↦ e + c_e Z`. Columns are
/// images of basis vectors.
pub fn random_heis_automorphism<R: rand::Rng>(rng: &mut R, m: usize) -> Matrix<GaussRational> {
    let n = 2 * m + 1;
    let mut sym = || {
        let mut s = vec![vec![0i64; m]; m];
        for i in 0..m {
            for j in i..m {
                let v = rng.gen_range(-2..=2);
                s[i][j] = v;
                s[j][i] = v;
            }
        }
        s
    };
    let (s1, s2) = (sym(), sym());
    let mut upper = Matrix::identity(n);
    let mut lower = Matrix::identity(n);
    for i in 0..m {
        for j in 0..m {
            upper.set(i, m + j, GaussRational::from_int(s1[i][j]));
            lower.set(m + i, j, GaussRational::from_int(s2[i][j]));
        }
    }
    let mut f = upper.mul(&lower);
    for j in 0..2 * m {
        f.set(2 * m, j, GaussRational::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2)));
    }
    f
}

/// `F_*` of the standard structure `heisenberg_k(eps)` under a random
/// automorphism `F`.
pub fn random_heis_cr<R: rand::Rng>(rng: &mut R, g: Arc<LieAlgebra>, eps: &[i64]) -> Result<CRStructure, CrError> {
    let f = random_heis_automorphism(rng, eps.len());
    let base = k_to_pair(&heisenberg_k(g.clone(), eps))?;
    let d: Vec<Vec<GaussRational>> = base.d_basis.iter().map(|v| f.mul_vec(v)).collect();
    let j: Vec<Vec<GaussRational>> = base.j_images.iter().map(|v| f.mul_vec(v)).collect();
    CRStructure::new(g, d, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    fn alg(name: &str) -> Arc<LieAlgebra> {
        Arc::new(builtin(name).unwrap())
    }

    fn c(re: i64, im: i64) -> GaussRational {
        GaussRational::ints(re, im)
    }

    #[test]
    fn heisenberg_round_trip_and_levi() {
        let h = alg("heis3");
        let cr = CRStructure::new(h.clone(), vec![h.e("X"), h.e("Y")], vec![h.e("Y"), neg_vec(&h.e("X"))]).unwrap();
        let k = pair_to_k(&cr);
        assert_eq!(*k.space(), Subspace::span(3, &[vec![c(1, 0), c(0, -1), c(0, 0)]]));
        let back = k_to_pair(&k).unwrap();
        assert_eq!(back.d(), cr.d());
        for v in cr.d_basis() {
            assert_eq!(back.apply_j(v).unwrap(), cr.apply_j(v).unwrap());
        }
        let rep = levi(&h, &k, &h.e("Z")).unwrap();
        assert_eq!(rep.matrix, vec![vec![c(-2, 0)]]);
        assert_eq!(rep.signature, Signature::new(0, 1, 0));
        assert!(is_cr_integrable(&cr));
        assert!(cr.is_strictly_pseudoconvex());
    }

    #[test]
    fn rejections() {
        let h = alg("heis3");
        let real_line = CRSubalgebra::new(h.clone(), &[h.e("X")]);
        assert!(matches!(k_to_pair(&real_line), Err(CrError::SelfConjugate)));
        assert!(!is_regular(&h, real_line.space()));
        let degenerate = Subspace::span(3, &[vec![c(1, 0), c(0, 0), c(0, -1)]]);
        assert!(!is_regular(&h, &degenerate));
        assert!(is_regular(&h, &Subspace::span(3, &[vec![c(1, 0), c(0, -1), c(0, 0)]])));
        let even = alg("u2");
        assert!(matches!(
            CRStructure::new(even, vec![], vec![]),
            Err(CrError::BadAmbient(4))
        ));
    }

    #[test]
    fn reeb_fields() {
        let h = alg("heis3");
        assert_eq!(reeb(&h, &h.e("Z"), 1).eta().unwrap(), &h.e("Z"));
        let aff = alg("aff_plus_R");
        let eta = reeb(&aff, &aff.e("Z"), 1).eta().unwrap().clone();
        assert_eq!(eta, sub_vec(&aff.e("Z"), &aff.e("Y")));
        let ab = alg("abelian3");
        assert!(matches!(reeb(&ab, &ab.e("Z"), 1), Reeb::NonContact { .. }));
    }

    #[test]
    fn su2_normality_only_at_t_one() {
        let g = alg("su2");
        for (t, expect) in [(1, true), (2, false)] {
            let k = CRSubalgebra::new(g.clone(), &[vec![c(1, 0), c(0, t), c(0, 0)]]);
            let phi = scale_vec(&g.e("Z"), &c(2, 0));
            let eta = reeb(&g, &phi, 1).eta().unwrap().clone();
            assert_eq!(is_normal(&g, &k, &eta), expect);
        }
    }

    #[test]
    fn nijenhuis_examples() {
        let rh = alg("R_plus_heis3");
        assert!(nijenhuis_full(&rh, &lemma2_j(&c(1, 0), &[1])).unwrap().is_zero());
        let u2 = alg("u2");
        assert!(nijenhuis_full(&u2, &lemma1_j(&c(1, 0), 1)).unwrap().is_zero());
        // J T = X, J X = −T, J Y = Z, J Z = −Y
        let mut j = Matrix::zeros(4, 4);
        j.set(1, 0, c(1, 0));
        j.set(0, 1, c(-1, 0));
        j.set(3, 2, c(1, 0));
        j.set(2, 3, c(-1, 0));
        assert!(!nijenhuis_full(&rh, &j).unwrap().is_zero());
        assert!(nijenhuis_full(&rh, &Matrix::identity(4)).is_err());
    }

    #[test]
    fn random_heisenberg_automorphisms() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let h = alg("heis5");
        for _ in 0..5 {
            let f = random_heis_automorphism(&mut rng, 2);
            for a in 0..5 {
                for b in 0..5 {
                    let lhs = h.br(&f.col(a), &f.col(b));
                    assert_eq!(lhs, f.mul_vec(&h.br(&h.unit(a), &h.unit(b))));
                }
            }
            let cr = random_heis_cr(&mut rng, h.clone(), &[1, -1]).unwrap();
            assert!(is_cr_integrable(&cr));
            assert_eq!(cr.levi().signature, Signature::new(1, 1, 0));
        }
    }

    #[test]
    fn contact_certificates() {
        let r2 = builtin("r2_equal").unwrap();
        assert!(!contact_possible(&r2, 1).unwrap().possible);
        let h = builtin("heis3").unwrap();
        let cert = contact_possible(&h, 1).unwrap();
        assert!(cert.possible);
        let w: Vec<GaussRational> = cert.witness.unwrap().into_iter().map(GaussRational::real).collect();
        assert!(!contact_volume(&h, &KForm::one_form(&w), 1).is_zero());
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(32))]
        #[test]
        fn heisenberg_center_is_reeb_line(seed in proptest::prelude::any::<u64>(), m in 1usize..=3, signs in 0u8..8) {
            use rand::SeedableRng;
            let g = alg(&format!("heis{}", 2 * m + 1));
            let eps: Vec<i64> = (0..m).map(|i| if signs >> i & 1 == 1 { -1 } else { 1 }).collect();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let cr = random_heis_cr(&mut rng, g.clone(), &eps).unwrap();
            proptest::prop_assert!(is_cr_integrable(&cr) && cr.is_nondegenerate());
            let phi = cr.contact_form();
            let eta = reeb(&g, &phi, m).eta().unwrap().clone();
            proptest::prop_assert_eq!(g.center(), Subspace::span(g.dim(), &[eta]));
            proptest::prop_assert!(quotient_form_nondegenerate(&g, &phi));
        }
    }
}
