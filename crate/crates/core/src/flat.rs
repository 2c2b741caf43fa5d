//! Flat models inside `su(p+1, q+1)`: modified brackets, the `Φ_t` families
//! on `su(2)`, `sl(2,ℝ)` and `h_3`, the flatness predicate, and the
//! classification harnesses.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::catalog::{builtin, CatalogError};
use crate::cr::{contact_possible, is_cr_integrable, is_normal, reeb, CRStructure, CrError, Reeb};
use crate::forms::{FormError, GValuedOneForm};
use crate::liealg::{JacobiReport, LieAlgebra, LieError};
use crate::linalg::{Matrix, Subspace};
use crate::report::Status;
use crate::scalar::{GaussRational, RatFuncS, Rational, Ring, UPoly};
use crate::sugrp::{SUModel, SuError};

#[derive(Debug, thiserror::Error)]
pub enum FlatError {
    #[error("derivation {0} is not a derivation of the algebra")]
    NotDerivation(usize),
    #[error("derivations {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("tau does not vanish on [e{0}, e{1}]")]
    TauOnDerived(usize, usize),
    #[error("tau has wrong shape")]
    TauShape,
    #[error("modified bracket violates Jacobi at {0}")]
    Jacobi(String, JacobiReport),
    #[error("parameter s must be nonzero")]
    ZeroParameter,
    #[error("image is not complementary to h0")]
    NotComplement,
    #[error("unknown family {0:?} (expected su2, sl2R or heis3)")]
    UnknownKind(String),
    #[error(transparent)]
    Su(#[from] SuError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Cr(#[from] CrError),
}

fn gr(re: i64, im: i64) -> GaussRational {
    GaussRational::ints(re, im)
}

fn zeros(n: usize) -> Vec<GaussRational> {
    vec![GaussRational::zero(); n]
}

/// Algebra `h` with commuting derivations `D_a` and a map `τ: h → span{D_a}`;
/// `tau[i][a]` is the coefficient of `D_a` in `τ(e_i)`.
#[derive(Debug, Clone)]
pub struct Modification {
    pub h: Arc<LieAlgebra>,
    pub derivations: Vec<Matrix<GaussRational>>,
    pub tau: Vec<Vec<GaussRational>>,
}

impl Modification {
    pub fn new(h: Arc<LieAlgebra>, derivations: Vec<Matrix<GaussRational>>, tau: Vec<Vec<GaussRational>>) -> Self {
        Modification { h, derivations, tau }
    }

    pub fn zero(h: Arc<LieAlgebra>, derivations: Vec<Matrix<GaussRational>>) -> Self {
        let tau = vec![zeros(derivations.len()); h.dim()];
        Modification { h, derivations, tau }
    }

    /// `τ(v)` as a matrix acting on `h`.
    pub fn tau_of(&self, v: &[GaussRational]) -> Matrix<GaussRational> {
        let n = self.h.dim();
        let mut out = Matrix::zeros(n, n);
        for (vi, row) in v.iter().zip(&self.tau) {
            for (c, d) in row.iter().zip(&self.derivations) {
                let w = vi * c;
                if !w.is_zero() {
                    out = out.add(&d.scale(&w));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), FlatError> {
        let h = &self.h;
        let n = h.dim();
        if self.tau.len() != n || self.tau.iter().any(|r| r.len() != self.derivations.len()) {
            return Err(FlatError::TauShape);
        }
        for (a, d) in self.derivations.iter().enumerate() {
            for i in 0..n {
                for j in i + 1..n {
                    let (x, y) = (h.unit(i), h.unit(j));
                    let lhs = d.mul_vec(&h.br(&x, &y));
                    let rhs: Vec<GaussRational> =
                        h.br(&d.mul_vec(&x), &y).iter().zip(h.br(&x, &d.mul_vec(&y))).map(|(p, q)| p + &q).collect();
                    if lhs != rhs {
                        return Err(FlatError::NotDerivation(a));
                    }
                }
            }
        }
        for a in 0..self.derivations.len() {
            for b in a + 1..self.derivations.len() {
                if !self.derivations[a].commutator(&self.derivations[b]).is_zero() {
                    return Err(FlatError::NotCommuting(a, b));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if !self.tau_of(&h.br(&h.unit(i), &h.unit(j))).is_zero() {
                    return Err(FlatError::TauOnDerived(i, j));
                }
            }
        }
        Ok(())
    }

    /// `[X, Y]_τ = [X, Y] + τ(X)(Y) − τ(Y)(X)`, without any checks.
    pub fn bracket_algebra(&self) -> Result<LieAlgebra, FlatError> {
        let h = &self.h;
        let n = h.dim();
        let mut c = vec![GaussRational::zero(); n * n * n];
        for i in 0..n {
            let ti = self.tau_of(&h.unit(i));
            for j in 0..n {
                let tj = self.tau_of(&h.unit(j));
                let base = h.br(&h.unit(i), &h.unit(j));
                for k in 0..n {
                    c[(i * n + j) * n + k] = &(&base[k] + ti.get(k, j)) - tj.get(k, i);
                }
            }
        }
        Ok(LieAlgebra::new(h.name(), h.basis_names().to_vec(), h.is_real(), c)?)
    }

    /// Does `τ` vanish on `[h, h]_τ`? Equivalent to the graph of `τ` being
    /// a subalgebra of `h ⋊ a`.
    pub fn graph_closed(&self) -> Result<bool, FlatError> {
        let g = self.bracket_algebra()?;
        let n = g.dim();
        Ok((0..n).all(|i| (i + 1..n).all(|j| self.tau_of(&g.br(&g.unit(i), &g.unit(j))).is_zero())))
    }

    /// Modified algebra; validation and Jacobi are checked.
    pub fn modify(&self) -> Result<LieAlgebra, FlatError> {
        self.validate()?;
        let g = self.bracket_algebra()?;
        let rep = g.check_jacobi();
        if !rep.passed() {
            let v = &rep.violations[0];
            let at = format!("({}, {}, {}) = {}", v.names[0], v.names[1], v.names[2], v.jacobiator);
            return Err(FlatError::Jacobi(at, rep));
        }
        Ok(g)
    }
}

/// Heisenberg part of a model with the action of `a = span{U, V_1..V_m}`.
pub fn heis_modification(model: &SUModel, tau: Vec<Vec<GaussRational>>) -> Result<Modification, FlatError> {
    let g = model.algebra();
    let idx = model.parts().indices("heis").to_vec();
    let units: Vec<Vec<GaussRational>> = idx.iter().map(|&i| g.unit(i)).collect();
    let names: Vec<String> = idx.iter().map(|&i| g.basis_names()[i].clone()).collect();
    let h = g.subalgebra(format!("heis{}", idx.len()), &units, names)?;
    let derivations = a_basis(model)
        .iter()
        .map(|a| {
            let ad = g.ad(a);
            let k = idx.len();
            let mut d = Matrix::zeros(k, k);
            for (r, &ir) in idx.iter().enumerate() {
                for (c, &ic) in idx.iter().enumerate() {
                    d.set(r, c, ad.get(ir, ic).clone());
                }
            }
            d
        })
        .collect();
    Ok(Modification::new(Arc::new(h), derivations, tau))
}

/// `U, V_1, …, V_m` as model vectors.
pub fn a_basis(model: &SUModel) -> Vec<Vec<GaussRational>> {
    let mut out = vec![model.u()];
    out.extend((1..=model.m()).map(|k| model.v(k)));
    out
}

/// Graph `{X + τ(X)}` of a Heisenberg modification inside the model.
pub fn graph(model: &SUModel, m: &Modification) -> Vec<Vec<GaussRational>> {
    let a = a_basis(model);
    let idx = model.parts().indices("heis");
    idx.iter()
        .zip(&m.tau)
        .map(|(&i, row)| {
            let mut v = model.algebra().unit(i);
            for (c, av) in row.iter().zip(&a) {
                for (x, y) in v.iter_mut().zip(av) {
                    *x = &*x + &(c * y);
                }
            }
            v
        })
        .collect()
}

/// Zero `τ` table for a model: one row per Heisenberg basis vector, one
/// column per element of [`a_basis`].
pub fn empty_tau(model: &SUModel) -> Vec<Vec<GaussRational>> {
    vec![zeros(model.m() + 1); 2 * model.m() + 1]
}

/// Source algebra with a map into a model, candidate for a flat model.
#[derive(Clone)]
pub struct FlatModelCandidate {
    pub source: Arc<LieAlgebra>,
    pub omega0: GValuedOneForm<GaussRational>,
}

impl FlatModelCandidate {
    pub fn new(source: Arc<LieAlgebra>, model: &SUModel, columns: Vec<Vec<GaussRational>>) -> Result<Self, FlatError> {
        let omega0 = GValuedOneForm::new(source.clone(), model.algebra().clone(), columns)?;
        Ok(FlatModelCandidate { source, omega0 })
    }

    /// Inclusion of the subalgebra spanned by `vecs`.
    pub fn inclusion(model: &SUModel, name: &str, vecs: &[Vec<GaussRational>], names: &[&str]) -> Result<Self, FlatError> {
        let names = names.iter().map(|s| s.to_string()).collect();
        let source = Arc::new(model.algebra().subalgebra(name, vecs, names)?);
        FlatModelCandidate::new(source, model, vecs.to_vec())
    }

    pub fn image(&self) -> Subspace<GaussRational> {
        Subspace::span(self.omega0.target().dim(), self.omega0.columns())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Flat,
    NotHomomorphism { pair: (String, String), defect: String },
    NotInjective { rank: usize },
    NotComplement,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Flat => write!(f, "flat"),
            Verdict::NotHomomorphism { pair, defect } => {
                write!(f, "not a homomorphism: curvature({}, {}) = {}", pair.0, pair.1, defect)
            }
            Verdict::NotInjective { rank } => write!(f, "not injective (rank {rank})"),
            Verdict::NotComplement => write!(f, "image meets h0 or has wrong dimension"),
        }
    }
}

pub fn is_flat_model(c: &FlatModelCandidate, model: &SUModel) -> Verdict {
    let curv = c.omega0.curvature();
    if let Some(((i, j), v)) = curv.witness() {
        let names = c.source.basis_names();
        return Verdict::NotHomomorphism {
            pair: (names[i].clone(), names[j].clone()),
            defect: model.algebra().render(v),
        };
    }
    let rank = c.omega0.rank();
    if rank != c.source.dim() {
        return Verdict::NotInjective { rank };
    }
    if !model.complement_check(&c.image()) {
        return Verdict::NotComplement;
    }
    Verdict::Flat
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum PhiKind {
    #[serde(rename = "su2")]
    Su2,
    #[serde(rename = "sl2R")]
    Sl2R,
    #[serde(rename = "heis3")]
    Heis3,
}

impl PhiKind {
    pub const ALL: [PhiKind; 3] = [PhiKind::Su2, PhiKind::Sl2R, PhiKind::Heis3];

    pub fn name(&self) -> &'static str {
        match self {
            PhiKind::Su2 => "su2",
            PhiKind::Sl2R => "sl2R",
            PhiKind::Heis3 => "heis3",
        }
    }

    pub fn source(&self) -> Arc<LieAlgebra> {
        Arc::new(builtin(self.name()).expect("shipped catalog"))
    }
}

impl fmt::Display for PhiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PhiKind {
    type Err = FlatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "su2" => Ok(PhiKind::Su2),
            "sl2R" | "sl2" => Ok(PhiKind::Sl2R),
            "heis3" | "heis" => Ok(PhiKind::Heis3),
            _ => Err(FlatError::UnknownKind(s.into())),
        }
    }
}

/// Candidate scale factors, tried in lexicographic order over `(X, Y, Z)`.
pub fn calibration_candidates() -> Vec<Rational> {
    [(1, 1), (-1, 1), (1, 2), (-1, 2), (1, 4), (-1, 4), (2, 1), (-2, 1)].iter().map(|&(a, b)| Rational::new(a, b)).collect()
}

#[derive(Debug, Clone, Deserialize)]
struct CalibrationFile {
    scales: BTreeMap<PhiKind, [Rational; 3]>,
}

/// Frozen scale factors `ω0(e_a) = scale_a · Φ(e_a)`.
pub fn calibration(kind: PhiKind) -> [Rational; 3] {
    let file: CalibrationFile =
        serde_json::from_str(include_str!("../golden/phi_calibration.json")).expect("golden calibration parses");
    file.scales[&kind].clone()
}

/// Unscaled 3×3 matrices `Φ(e_a)` over `ℚ(i)(s)`, `t = s²`.
pub fn display_matrices(kind: PhiKind) -> Vec<Matrix<RatFuncS>> {
    let k = |x: GaussRational| RatFuncS::constant(x);
    let s = RatFuncS::s();
    let sinv = s.inv().unwrap();
    let zero = RatFuncS::zero();
    let i = k(GaussRational::i());
    if kind == PhiKind::Heis3 {
        let vals = [(zero.clone(), k(GaussRational::ratio(1, 2))), (zero.clone(), k(GaussRational::new(Rational::zero(), Rational::new(1, 2)))), (RatFuncS::one(), zero.clone())];
        return vals
            .iter()
            .map(|(phi, psi)| {
                Matrix::from_rows(
                    3,
                    vec![
                        vec![zero.clone(), zero.clone(), zero.clone()],
                        vec![psi.clone(), zero.clone(), zero.clone()],
                        vec![phi.clone(), i.clone() * psi.conj(), zero.clone()],
                    ],
                )
            })
            .collect();
    }
    let sign = if kind == PhiKind::Su2 { 1 } else { -1 };
    let t = s.clone() * s.clone();
    let tinv = t.inv().unwrap();
    let quarter_i = k(GaussRational::new(Rational::zero(), Rational::new(sign, 4)));
    let b = quarter_i.clone() * (tinv.clone() + t.clone());
    let c = quarter_i * (tinv - t);
    let y_sign = k(GaussRational::from_int(sign));
    // (φ, ψ, ψ̄) on X, Y, Z
    let vals = [
        (zero.clone(), s.clone(), s.clone()),
        (zero.clone(), y_sign.clone() * i.clone() * sinv.clone(), -(y_sign * i.clone() * sinv)),
        (k(GaussRational::from_int(2)), zero.clone(), zero.clone()),
    ];
    let corner = c.clone() * c.conj() - b.clone() * b.conj();
    vals.iter()
        .map(|(phi, psi, psib)| {
            Matrix::from_rows(
                3,
                vec![
                    vec![b.clone() * phi.clone(), i.clone() * (b.clone() * psib.clone() + c.clone() * psi.clone()), corner.clone() * phi.clone()],
                    vec![psi.clone(), -(k(GaussRational::from_int(2)) * b.clone() * phi.clone()), b.clone() * psi.clone() + c.clone() * psib.clone()],
                    vec![phi.clone(), i.clone() * psib.clone(), b.clone() * phi.clone()],
                ],
            )
        })
        .collect()
}

/// `Φ_t` with the given scales, as an `su(2,1)`-valued form over `ℚ(i)(s)`.
pub fn phi_formal(kind: PhiKind, model: &SUModel, scales: &[Rational; 3]) -> Result<GValuedOneForm<RatFuncS>, FlatError> {
    let columns = display_matrices(kind)
        .iter()
        .zip(scales)
        .map(|(m, sc)| Ok(model.coords_generic(&m.scale(&RatFuncS::from_rational(sc)))?))
        .collect::<Result<Vec<_>, FlatError>>()?;
    Ok(GValuedOneForm::new(kind.source(), model.algebra().clone(), columns)?)
}

fn at_s(form: &GValuedOneForm<RatFuncS>, s: &Rational) -> GValuedOneForm<GaussRational> {
    form.map_scalars(|f| f.eval_s(s).expect("poles only at s = 0"))
}

/// Oracle: the first scale triple making `Φ_1` a homomorphism.
pub fn calibrate(kind: PhiKind, model: &SUModel) -> Option<[Rational; 3]> {
    let cands = calibration_candidates();
    let unit = phi_formal(kind, model, &[Rational::one(), Rational::one(), Rational::one()]).ok()?;
    let base = at_s(&unit, &Rational::one());
    for a in &cands {
        for b in &cands {
            for c in &cands {
                let sc = [a, b, c];
                let cols: Vec<Vec<GaussRational>> = base
                    .columns()
                    .iter()
                    .zip(sc)
                    .map(|(col, x)| col.iter().map(|v| v.scale(x)).collect())
                    .collect();
                let f = GValuedOneForm::new(base.source().clone(), base.target().clone(), cols).ok()?;
                if f.is_homomorphism() {
                    return Some([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    None
}

/// Calibrated `Φ_{s²}` at a rational `s ≠ 0`.
pub fn phi_family(kind: PhiKind, model: &SUModel, s: &Rational) -> Result<FlatModelCandidate, FlatError> {
    if s.is_zero() {
        return Err(FlatError::ZeroParameter);
    }
    let form = phi_formal(kind, model, &calibration(kind))?;
    let omega0 = at_s(&form, s);
    Ok(FlatModelCandidate { source: omega0.source().clone(), omega0 })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlatLocus {
    pub kind: PhiKind,
    /// Curvature vanishes for every `s`.
    pub identically_flat: bool,
    /// Monic gcd of the curvature numerators.
    pub gcd: String,
    /// Positive rational roots of the gcd.
    pub positive_roots: Vec<Rational>,
    /// Factor of the gcd without rational roots (other roots are irrational
    /// or non-real).
    pub cofactor: String,
}

pub fn flat_locus(kind: PhiKind, model: &SUModel) -> Result<FlatLocus, FlatError> {
    let form = phi_formal(kind, model, &calibration(kind))?;
    let curv = form.curvature();
    let mut g = UPoly::zero();
    for v in curv.entries().values() {
        for x in v {
            if !x.is_zero() {
                g = g.gcd(x.numer());
            }
        }
    }
    if curv.is_zero() {
        return Ok(FlatLocus { kind, identically_flat: true, gcd: "0".into(), positive_roots: Vec::new(), cofactor: "0".into() });
    }
    let (roots, rest) = g.rational_roots();
    let positive_roots = roots.into_iter().map(|(r, _)| r).filter(Rational::is_positive).collect();
    Ok(FlatLocus { kind, identically_flat: false, gcd: g.to_string(), positive_roots, cofactor: rest.to_string() })
}

/// CR structure pulled back from the model: `D = ω0⁻¹(g^{-1} ⊕ h0)`, with
/// `J` acting as multiplication by `−i` on the `u`-coordinate.
pub fn pulled_back_cr(c: &FlatModelCandidate, model: &SUModel) -> Result<CRStructure, FlatError> {
    let m = model.m();
    let k = 2 * m + 1;
    if c.source.dim() != k {
        return Err(FlatError::NotComplement);
    }
    let heis = model.parts().indices("heis");
    let cols: Vec<Vec<GaussRational>> =
        c.omega0.columns().iter().map(|col| heis.iter().map(|&i| col[i].clone()).collect()).collect();
    let proj = Matrix::from_cols(k, &cols);
    let inv = proj.inverse().ok_or(FlatError::NotComplement)?;
    let unit = |i: usize| {
        let mut v = zeros(k);
        v[i] = GaussRational::one();
        v
    };
    let mut d_basis = Vec::new();
    let mut j_images = Vec::new();
    for i in 0..m {
        let s = if i < model.p() { 1 } else { -1 };
        // J X_i = −s_i Y_i, J Y_i = s_i X_i
        d_basis.push(inv.mul_vec(&unit(i)));
        j_images.push(inv.mul_vec(&unit(m + i).iter().map(|x| x * &gr(-s, 0)).collect::<Vec<_>>()));
        d_basis.push(inv.mul_vec(&unit(m + i)));
        j_images.push(inv.mul_vec(&unit(i).iter().map(|x| x * &gr(s, 0)).collect::<Vec<_>>()));
    }
    Ok(CRStructure::new(c.source.clone(), d_basis, j_images)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LeviType {
    Semisimple,
    Solvable,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Lemma3Report {
    pub closed: bool,
    pub complement: bool,
    pub dim: usize,
    pub radical_dim: usize,
    pub solvable: bool,
    pub levi_type: LeviType,
    /// Nontrivial radical implies solvable.
    pub holds: bool,
}

pub fn lemma3_check(model: &SUModel, l: &Subspace<GaussRational>) -> Result<Lemma3Report, FlatError> {
    let g = model.algebra();
    let closed = g.subalgebra_closed(l);
    let complement = model.complement_check(l);
    let sub = g.restrict(l, "l")?;
    let rad = sub.radical()?;
    let solvable = sub.is_solvable();
    let levi_type = if rad.is_zero() {
        LeviType::Semisimple
    } else if rad.dim() == sub.dim() {
        LeviType::Solvable
    } else {
        LeviType::Mixed
    };
    Ok(Lemma3Report {
        closed,
        complement,
        dim: sub.dim(),
        radical_dim: rad.dim(),
        solvable,
        levi_type,
        holds: rad.is_zero() || solvable,
    })
}

/// Whether a computed property is certified or a claim read off the
/// literature that the computation may contradict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    Certified,
    Claimed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Expectation {
    pub field: String,
    pub expected: String,
    pub computed: String,
    pub kind: ClaimKind,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HarnessRow {
    pub id: String,
    pub description: String,
    pub dim: usize,
    pub jacobi: bool,
    pub closed: bool,
    pub complement: Option<bool>,
    pub fingerprint: Option<String>,
    pub contact: Option<bool>,
    pub nondegenerate: Option<bool>,
    pub normal: Option<bool>,
    pub cr_integrable: Option<bool>,
    pub center_kept: Option<bool>,
    pub status: Status,
    pub mismatches: Vec<Expectation>,
}

impl HarnessRow {
    fn blank(id: &str, description: &str, dim: usize) -> Self {
        HarnessRow {
            id: id.into(),
            description: description.into(),
            dim,
            jacobi: true,
            closed: true,
            complement: None,
            fingerprint: None,
            contact: None,
            nondegenerate: None,
            normal: None,
            cr_integrable: None,
            center_kept: None,
            status: Status::Pass,
            mismatches: Vec::new(),
        }
    }

    fn field(&self, name: &str) -> String {
        let b = |x: Option<bool>| x.map_or("n/a".to_string(), |v| v.to_string());
        match name {
            "jacobi" => self.jacobi.to_string(),
            "closed" => self.closed.to_string(),
            "complement" => b(self.complement),
            "fingerprint" => self.fingerprint.clone().unwrap_or_else(|| "n/a".into()),
            "contact" => b(self.contact),
            "nondegenerate" => b(self.nondegenerate),
            "normal" => b(self.normal),
            "cr_integrable" => b(self.cr_integrable),
            "center_kept" => b(self.center_kept),
            _ => panic!("unknown harness field {name}"),
        }
    }

    /// Compares against expectations and sets the status: a certified
    /// mismatch fails, a claimed one is a discrepancy.
    fn judge(mut self, expect: &[(&str, &str, ClaimKind)]) -> Self {
        for (field, want, kind) in expect {
            let got = self.field(field);
            if got != *want {
                self.mismatches.push(Expectation {
                    field: field.to_string(),
                    expected: want.to_string(),
                    computed: got,
                    kind: *kind,
                });
            }
        }
        self.status = if self.mismatches.iter().any(|m| m.kind == ClaimKind::Certified) {
            Status::Fail
        } else if self.mismatches.is_empty() {
            Status::Pass
        } else {
            Status::Discrepancy
        };
        self
    }

    pub fn summary(&self) -> String {
        let mut parts = vec![format!("dim {}", self.dim)];
        for f in ["jacobi", "closed", "complement", "fingerprint", "contact", "nondegenerate", "normal", "cr_integrable", "center_kept"] {
            let v = self.field(f);
            if v != "n/a" {
                parts.push(format!("{f}={v}"));
            }
        }
        for m in &self.mismatches {
            let who = if m.kind == ClaimKind::Claimed { "claimed" } else { "expected" };
            parts.push(format!("[{who} {}={}, computed {}]", m.field, m.expected, m.computed));
        }
        parts.join(" ")
    }
}

/// Evaluates the row properties of an abstract algebra `l` mapped into the
/// model by `columns`.
fn evaluate(model: &SUModel, id: &str, description: &str, l: Arc<LieAlgebra>, columns: Vec<Vec<GaussRational>>) -> Result<HarnessRow, FlatError> {
    let g = model.algebra();
    let n = l.dim();
    let mut row = HarnessRow::blank(id, description, n);
    row.jacobi = l.check_jacobi().passed();
    let image = Subspace::span(g.dim(), &columns);
    row.closed = g.subalgebra_closed(&image);
    row.complement = Some(image.dim() == n && model.complement_check(&image));
    if n == 3 && row.jacobi {
        row.fingerprint = Some(l.fingerprint3()?.to_string());
    }
    if n % 2 == 1 && row.jacobi {
        row.contact = Some(contact_possible(&l, (n - 1) / 2)?.possible);
    }
    let cand = FlatModelCandidate::new(l.clone(), model, columns)?;
    if row.complement == Some(true) && row.jacobi && is_flat_model(&cand, model) == Verdict::Flat {
        let cr = pulled_back_cr(&cand, model)?;
        row.cr_integrable = Some(is_cr_integrable(&cr));
        let phi = cr.contact_form();
        let lev = cr.levi();
        row.nondegenerate = Some(lev.signature.is_nondegenerate());
        row.normal = match reeb(&l, &phi, cr.half_dim()) {
            Reeb::Unique { eta } => Some(is_normal(&l, &cr.to_k(), &eta)),
            Reeb::NonContact { .. } => None,
        };
    }
    Ok(row)
}

fn inclusion_row(model: &SUModel, id: &str, description: &str, names: &[&str]) -> Result<HarnessRow, FlatError> {
    let g = model.algebra();
    let vecs: Vec<Vec<GaussRational>> = names.iter().map(|n| g.e(n)).collect();
    let image = Subspace::span(g.dim(), &vecs);
    if !g.subalgebra_closed(&image) {
        let mut row = HarnessRow::blank(id, description, names.len());
        row.closed = false;
        return Ok(row);
    }
    let l = Arc::new(g.subalgebra(id, &vecs, names.iter().map(|s| s.to_string()).collect())?);
    evaluate(model, id, description, l, vecs)
}

fn modification_row(model: &SUModel, id: &str, description: &str, tau: Vec<Vec<GaussRational>>) -> Result<HarnessRow, FlatError> {
    let m = heis_modification(model, tau)?;
    let h = m.h.clone();
    match m.modify() {
        Ok(hbar) => {
            let hbar = Arc::new(hbar.with_name(id));
            let mut row = evaluate(model, id, description, hbar.clone(), graph(model, &m))?;
            row.center_kept = Some(hbar.center() == h.center());
            Ok(row)
        }
        Err(FlatError::Jacobi(_, _)) => {
            let mut row = HarnessRow::blank(id, description, h.dim());
            row.jacobi = false;
            let gr = graph(model, &m);
            row.closed = model.algebra().subalgebra_closed(&Subspace::span(model.dim(), &gr));
            Ok(row)
        }
        Err(e) => Err(e),
    }
}

const C: ClaimKind = ClaimKind::Certified;
const P: ClaimKind = ClaimKind::Claimed;

/// Three-dimensional candidates inside `su(2,1)`.
pub fn classify3_harness(model: &SUModel) -> Result<Vec<HarnessRow>, FlatError> {
    assert_eq!((model.p(), model.q()), (1, 0), "classify3 runs on su(2,1)");
    let mut rows = Vec::new();
    let flat_expect = |fp: &'static str| {
        vec![("closed", "true", C), ("complement", "true", C), ("fingerprint", fp, C), ("contact", "true", C), ("nondegenerate", "true", C), ("cr_integrable", "true", C)]
    };
    for kind in PhiKind::ALL {
        let cand = phi_family(kind, model, &Rational::one())?;
        let row = evaluate(model, &format!("phi_{kind}"), &format!("image of the calibrated {kind} map at s = 1"), cand.source.clone(), cand.omega0.columns().to_vec())?;
        let mut exp = flat_expect(kind.name());
        if kind != PhiKind::Heis3 {
            exp.push(("normal", "true", C));
        }
        rows.push(row.judge(&exp));
    }
    rows.push(inclusion_row(model, "l0", "span{X, Y, Z}", &["X", "Y", "Z"])?.judge(&flat_expect("heis3")));

    let r2 = builtin("r2_equal")?.fingerprint3()?.to_string();
    let l1 = inclusion_row(model, "l1", "span{X, Z, U}", &["X", "Z", "U"])?;
    rows.push(l1.judge(&[("closed", "true", C), ("complement", "false", C), ("fingerprint", &r2, P), ("contact", "false", P)]));
    let l2 = inclusion_row(model, "l2", "span{Z, U, V}", &["Z", "U", "V"])?;
    rows.push(l2.judge(&[("closed", "true", C), ("complement", "false", C), ("fingerprint", "aff_plus_R", C)]));

    let mut tau = empty_tau(model);
    tau[0][1] = GaussRational::one();
    tau[1][0] = -GaussRational::one();
    let aff = modification_row(model, "tau_XV_YU", "h3 modified by tau(X) = V, tau(Y) = -U", tau)?;
    rows.push(aff.judge(&flat_expect("aff_plus_R")));

    let mut tau = empty_tau(model);
    tau[0][0] = GaussRational::one();
    let tu = modification_row(model, "tau_X_U", "h3 modified by tau(X) = U", tau)?;
    rows.push(tu.judge(&[("jacobi", "true", C), ("complement", "true", C), ("fingerprint", &r2, P), ("contact", "false", P)]));

    let r2_alg = builtin("r2_equal")?;
    let mut r2_row = HarnessRow::blank("r2_equal", "equal-weight R^2 x| R (abstract)", 3);
    r2_row.jacobi = r2_alg.check_jacobi().passed();
    r2_row.fingerprint = Some(r2);
    r2_row.contact = Some(contact_possible(&r2_alg, 1)?.possible);
    rows.push(r2_row.judge(&[("jacobi", "true", C), ("contact", "false", C)]));
    Ok(rows)
}

/// `τ(X_{p+i}) = a_i·V_1`, `τ(Y_{p+i}) = b_i·V_1` for `i = 1..q`; the other
/// Heisenberg generators are in the kernel.
pub fn eq68_tau(model: &SUModel, a: &[GaussRational], b: &[GaussRational]) -> Vec<Vec<GaussRational>> {
    let (p, m) = (model.p(), model.m());
    let mut tau = empty_tau(model);
    for i in 0..m - p {
        tau[p + i][1] = a[i].clone();
        tau[m + p + i][1] = b[i].clone();
    }
    tau
}

/// Modification constructions in dimension `2m+1`.
pub fn thm4_harness(model: &SUModel) -> Result<Vec<HarnessRow>, FlatError> {
    let m = model.m();
    let mut rows = Vec::new();
    let heis = format!("heis{}", 2 * m + 1);

    let t0 = modification_row(model, "tau_zero", &format!("{heis} with tau = 0"), empty_tau(model))?;
    let same = heis_modification(model, empty_tau(model))?.modify()?.same_constants(&heis_modification(model, empty_tau(model))?.h);
    let mut t0 = t0.judge(&[("jacobi", "true", C), ("complement", "true", C), ("contact", "true", C), ("nondegenerate", "true", C), ("cr_integrable", "true", C), ("center_kept", "true", C)]);
    if !same {
        t0.status = Status::Fail;
    }
    rows.push(t0);

    if model.q() >= 1 && model.p() >= 1 {
        let q = model.q();
        let tau = if m == 3 {
            // τ(X_3) = τ(Y_3) = V_1 + V_2
            let mut t = empty_tau(model);
            for r in [2, 5] {
                t[r][1] = GaussRational::one();
                t[r][2] = GaussRational::one();
            }
            t
        } else {
            eq68_tau(model, &vec![GaussRational::one(); q], &vec![GaussRational::from_int(2); q])
        };
        let row = modification_row(model, "eq68", "Heisenberg modified into s", tau)?;
        rows.push(row.judge(&[("jacobi", "true", C), ("complement", "true", C), ("center_kept", "true", C), ("contact", "true", C), ("nondegenerate", "true", C), ("cr_integrable", "true", C)]));
    }

    let mut tau = empty_tau(model);
    tau[2 * m - 1][0] = GaussRational::one();
    let row = modification_row(model, "eq67", &format!("{heis} modified by tau(Y_{m}) = U"), tau)?;
    rows.push(row.judge(&[("jacobi", "true", C), ("complement", "true", C), ("cr_integrable", "true", C), ("contact", "false", P)]));

    if m >= 2 {
        let mut tau = empty_tau(model);
        tau[1][1] = GaussRational::one();
        tau[2 * m - 1][0] = GaussRational::one();
        let row = modification_row(model, "eq69", "composite tau(X_2) = V_1, tau(Y_m) = U", tau)?;
        rows.push(row.judge(&[("jacobi", "true", P), ("closed", "true", P)]));
    }
    Ok(rows)
}
