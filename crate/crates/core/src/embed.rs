//! Explicit holomorphic maps of `ℝ × H_{2m+1}`, `ℝ × SU(2)` and
//! `ℝ × SL(2,ℝ)`, and the hyperquadric membership predicate.
//!
//! The Heisenberg map is exact over `ℚ(i)`; the other two involve `exp` and
//! are evaluated in double precision.

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::linalg::{is_hermitian, Matrix};
use crate::scalar::{GaussRational, Rational};

/// Precondition tolerance for float inputs.
pub const INPUT_TOL: f64 = 1e-12;
/// Tolerance for the norm and membership laws.
pub const LAW_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EmbedError {
    #[error("Re(delta) must be nonzero")]
    DegenerateDelta,
    #[error("expected {expected} coordinates, got {got}")]
    Length { expected: usize, got: usize },
    #[error("eps entries must be +1 or -1")]
    BadEps,
    #[error("H must be Hermitian and nondegenerate")]
    BadForm,
    #[error("input violates its constraint by {defect:e}")]
    Precondition { defect: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Convention {
    /// `Re z_{m+1} = Σ h_ij z_i z̄_j`
    Re,
    /// `Im z_{m+1} = Σ h_ij z_i z̄_j`
    Im,
}

/// `{ coord(z_{m+1}) = Σ h_ij z_i z̄_j } ⊂ ℂ^{m+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperquadric {
    h: Matrix<GaussRational>,
    convention: Convention,
}

impl Hyperquadric {
    pub fn new(h: Matrix<GaussRational>, convention: Convention) -> Result<Self, EmbedError> {
        if h.rows() != h.cols() || !is_hermitian(&h) || h.det().is_zero() {
            return Err(EmbedError::BadForm);
        }
        Ok(Hyperquadric { h, convention })
    }

    pub fn diagonal(diag: &[Rational], convention: Convention) -> Result<Self, EmbedError> {
        let mut h = Matrix::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            h.set(i, i, GaussRational::real(d.clone()));
        }
        Hyperquadric::new(h, convention)
    }

    /// Calibrated quadric for the Heisenberg map: `H = diag(ε_i / 2)`, real part.
    pub fn heisenberg(eps: &[i64]) -> Self {
        let d: Vec<Rational> = eps.iter().map(|&e| Rational::new(e, 2)).collect();
        Hyperquadric::diagonal(&d, Convention::Re).expect("diagonal with nonzero entries")
    }

    pub fn m(&self) -> usize {
        self.h.rows()
    }

    pub fn form(&self) -> &Matrix<GaussRational> {
        &self.h
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }
}

/// `coord(z_{m+1}) − Σ h_ij z_i z̄_j`; zero iff the point lies on `Q`.
pub fn quadric_residual(q: &Hyperquadric, point: &[GaussRational]) -> Result<GaussRational, EmbedError> {
    let m = q.m();
    if point.len() != m + 1 {
        return Err(EmbedError::Length { expected: m + 1, got: point.len() });
    }
    let mut form = GaussRational::zero();
    for i in 0..m {
        for j in 0..m {
            let h = q.h.get(i, j);
            if !h.is_zero() {
                form += &(&(h * &point[i]) * &point[j].conj());
            }
        }
    }
    let last = &point[m];
    let coord = match q.convention {
        Convention::Re => GaussRational::real(last.re.clone()),
        Convention::Im => GaussRational::real(last.im.clone()),
    };
    Ok(&coord - &form)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingParams {
    pub delta: GaussRational,
    pub eps: Vec<i64>,
}

impl EmbeddingParams {
    pub fn new(delta: GaussRational, eps: Vec<i64>) -> Result<Self, EmbedError> {
        if delta.re.is_zero() {
            return Err(EmbedError::DegenerateDelta);
        }
        if eps.iter().any(|e| e.abs() != 1) {
            return Err(EmbedError::BadEps);
        }
        Ok(EmbeddingParams { delta, eps })
    }

    pub fn m(&self) -> usize {
        self.eps.len()
    }
}

/// Heisenberg group element `(x, y, z)`: the matrix `[[1, x, z], [0, I, yᵗ], [0, 0, 1]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct HeisElement {
    pub x: Vec<Rational>,
    pub y: Vec<Rational>,
    pub z: Rational,
}

impl HeisElement {
    pub fn identity(m: usize) -> Self {
        HeisElement { x: vec![Rational::zero(); m], y: vec![Rational::zero(); m], z: Rational::zero() }
    }

    /// Matrix product: `z'' = z + z' + x·y'` (unweighted dot product).
    pub fn mul(&self, other: &HeisElement) -> HeisElement {
        let dot = self.x.iter().zip(&other.y).fold(Rational::zero(), |acc, (a, b)| &acc + &(a * b));
        HeisElement {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            y: self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect(),
            z: &(&self.z + &other.z) + &dot,
        }
    }
}

fn weighted(eps: &[i64], a: &[Rational], b: &[Rational]) -> Rational {
    eps.iter()
        .zip(a.iter().zip(b))
        .fold(Rational::zero(), |acc, (&e, (x, y))| &acc + &(&Rational::from_integer(e) * &(x * y)))
}

/// `(x + iy, 2kt + ½(‖x‖² + ‖y‖²) + i(2(lt + z) − x·y))` with ε-weighted
/// products.
pub fn embed_heisenberg(params: &EmbeddingParams, t: &Rational, g: &HeisElement) -> Result<Vec<GaussRational>, EmbedError> {
    let m = params.m();
    if g.x.len() != m || g.y.len() != m {
        return Err(EmbedError::Length { expected: m, got: g.x.len().min(g.y.len()) });
    }
    let (k, l) = (&params.delta.re, &params.delta.im);
    let two = Rational::from_integer(2);
    let half = Rational::new(1, 2);
    let mut out: Vec<GaussRational> =
        g.x.iter().zip(&g.y).map(|(a, b)| GaussRational::new(a.clone(), b.clone())).collect();
    let norms = &weighted(&params.eps, &g.x, &g.x) + &weighted(&params.eps, &g.y, &g.y);
    let re = &(&two * &(k * t)) + &(&half * &norms);
    let im = &(&two * &(&(l * t) + &g.z)) - &weighted(&params.eps, &g.x, &g.y);
    out.push(GaussRational::new(re, im));
    Ok(out)
}

/// Candidate quadrics for the Heisenberg image, in the order tried.
pub fn quadric_candidates(eps: &[i64]) -> Vec<(String, Hyperquadric)> {
    let d = |f: &dyn Fn(i64) -> Rational| eps.iter().map(|&e| f(e)).collect::<Vec<_>>();
    let forms: Vec<(&str, Vec<Rational>)> = vec![
        ("diag(eps/2)", d(&|e| Rational::new(e, 2))),
        ("diag(-eps/2)", d(&|e| Rational::new(-e, 2))),
        ("diag(eps)", d(&|e| Rational::from_integer(e))),
        ("diag(1/2)", d(&|_| Rational::new(1, 2))),
    ];
    let mut out = Vec::new();
    for (name, diag) in forms {
        for conv in [Convention::Re, Convention::Im] {
            out.push((format!("{name}, {conv:?}"), Hyperquadric::diagonal(&diag, conv).unwrap()));
        }
    }
    out
}

#[derive(Deserialize)]
struct QuadricGolden {
    form: String,
    convention: Convention,
}

/// Frozen calibration as `"<form>, <convention>"`.
pub fn quadric_calibration() -> String {
    let g: QuadricGolden =
        serde_json::from_str(include_str!("../golden/quadric_calibration.json")).expect("golden calibration parses");
    format!("{}, {:?}", g.form, g.convention)
}

/// Oracle: candidates vanishing exactly on every `t = 0` image point.
pub fn calibrate_quadric(params: &EmbeddingParams, samples: &[HeisElement]) -> Vec<String> {
    let pts: Vec<Vec<GaussRational>> =
        samples.iter().map(|g| embed_heisenberg(params, &Rational::zero(), g).unwrap()).collect();
    quadric_candidates(&params.eps)
        .into_iter()
        .filter(|(_, q)| pts.iter().all(|p| quadric_residual(q, p).unwrap().is_zero()))
        .map(|(name, _)| name)
        .collect()
}

/// Rational with numerator in `[-n, n]` and denominator in `[1, n]`.
pub fn random_rational<R: Rng>(rng: &mut R, n: i64) -> Rational {
    Rational::new(rng.gen_range(-n..=n), rng.gen_range(1..=n))
}

pub fn random_heis<R: Rng>(rng: &mut R, m: usize) -> HeisElement {
    HeisElement {
        x: (0..m).map(|_| random_rational(rng, 9)).collect(),
        y: (0..m).map(|_| random_rational(rng, 9)).collect(),
        z: random_rational(rng, 9),
    }
}

/// `(t, z_1, z_2) ↦ e^{δt}(z_1, z_2)` on `ℝ × S³`.
pub fn embed_su2(delta: Complex64, t: f64, z1: Complex64, z2: Complex64) -> Result<[Complex64; 2], EmbedError> {
    if delta.re == 0.0 {
        return Err(EmbedError::DegenerateDelta);
    }
    let defect = (z1.norm_sqr() + z2.norm_sqr() - 1.0).abs();
    if defect > INPUT_TOL {
        return Err(EmbedError::Precondition { defect });
    }
    let f = (delta * t).exp();
    Ok([f * z1, f * z2])
}

/// `(t, [[a, b], [c, d]]) ↦ ((ac + bd)/(c² + d²) + i/(c² + d²), e^{δt}(d + ic))`.
pub fn embed_sl2(delta: Complex64, t: f64, a: f64, b: f64, c: f64, d: f64) -> Result<(Complex64, Complex64), EmbedError> {
    if delta.re == 0.0 {
        return Err(EmbedError::DegenerateDelta);
    }
    let defect = (a * d - b * c - 1.0).abs();
    if defect > INPUT_TOL {
        return Err(EmbedError::Precondition { defect });
    }
    let r = c * c + d * d;
    let w = Complex64::new((a * c + b * d) / r, 1.0 / r);
    Ok((w, (delta * t).exp() * Complex64::new(d, c)))
}

/// Uniform-ish point on `S³`.
pub fn random_s3<R: Rng>(rng: &mut R) -> (Complex64, Complex64) {
    loop {
        let v: [f64; 4] = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 0.1 {
            return (Complex64::new(v[0] / n, v[1] / n), Complex64::new(v[2] / n, v[3] / n));
        }
    }
}

/// Unit-determinant matrix `[[1, u], [0, 1]]·diag(r, 1/r)·[[1, 0], [v, 1]]`.
pub fn random_sl2<R: Rng>(rng: &mut R) -> [f64; 4] {
    let u: f64 = rng.gen_range(-2.0..2.0);
    let v: f64 = rng.gen_range(-2.0..2.0);
    let r: f64 = rng.gen_range(0.25..4.0);
    let ri = 1.0 / r;
    // [[r, u/r], [0, 1/r]] · [[1, 0], [v, 1]]
    [r + u * ri * v, u * ri, ri * v, ri]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn el(x: &[i64], y: &[i64], z: i64) -> HeisElement {
        HeisElement {
            x: x.iter().map(|&v| q(v, 1)).collect(),
            y: y.iter().map(|&v| q(v, 1)).collect(),
            z: q(z, 1),
        }
    }

    #[test]
    fn heisenberg_examples() {
        let p1 = EmbeddingParams::new(GaussRational::one(), vec![1]).unwrap();
        let img = embed_heisenberg(&p1, &Rational::zero(), &el(&[1], &[0], 0)).unwrap();
        assert_eq!(img, vec![GaussRational::one(), GaussRational::ratio(1, 2)]);
        assert_eq!(quadric_residual(&Hyperquadric::heisenberg(&[1]), &img).unwrap(), GaussRational::zero());
        let origin = embed_heisenberg(&p1, &Rational::zero(), &HeisElement::identity(1)).unwrap();
        assert!(origin.iter().all(GaussRational::is_zero));
        let p2 = EmbeddingParams::new(GaussRational::one(), vec![1, -1]).unwrap();
        let img = embed_heisenberg(&p2, &Rational::zero(), &el(&[1, 1], &[0, 0], 0)).unwrap();
        assert_eq!(img, vec![GaussRational::one(), GaussRational::one(), GaussRational::zero()]);
        assert!(quadric_residual(&Hyperquadric::heisenberg(&[1, -1]), &img).unwrap().is_zero());
        let im = Hyperquadric::diagonal(&[q(1, 2)], Convention::Im).unwrap();
        assert_eq!(quadric_residual(&im, &[GaussRational::zero(), GaussRational::i()]).unwrap(), GaussRational::one());
        assert!(EmbeddingParams::new(GaussRational::i(), vec![1]).is_err());
    }

    #[test]
    fn calibration_is_unique() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for eps in [vec![1], vec![1, -1], vec![1, 1]] {
            let p = EmbeddingParams::new(GaussRational::ints(1, 1), eps.clone()).unwrap();
            let samples: Vec<HeisElement> = (0..20).map(|_| random_heis(&mut rng, eps.len())).collect();
            let found = calibrate_quadric(&p, &samples);
            assert_eq!(found[0], quadric_calibration());
            // diag(1/2) coincides with diag(eps/2) when every sign is positive
            assert_eq!(found.len(), if eps.contains(&-1) { 1 } else { 2 });
        }
    }

    #[test]
    fn float_maps() {
        let one = Complex64::new(1.0, 0.0);
        let z = Complex64::new(0.0, 0.0);
        assert_eq!(embed_su2(one, 0.0, one, z).unwrap(), [one, z]);
        let [w1, _] = embed_su2(one, 1.0, one, z).unwrap();
        assert!((w1.norm_sqr() - std::f64::consts::E.powi(2)).abs() < LAW_TOL);
        let (w, v) = embed_sl2(one, 0.0, 1.0, 0.0, 0.0, 1.0).unwrap();
        assert!((w - Complex64::new(0.0, 1.0)).norm() < LAW_TOL && (v - one).norm() < LAW_TOL);
        assert!(matches!(embed_sl2(one, 0.0, 1.0, 1.0, 1.0, 1.0), Err(EmbedError::Precondition { .. })));
        assert!(matches!(embed_su2(one, 0.0, one, one), Err(EmbedError::Precondition { .. })));
    }

    fn rat() -> impl Strategy<Value = Rational> {
        (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
    }

    proptest! {
        #[test]
        fn heisenberg_image_on_quadric(
            x in proptest::collection::vec(rat(), 2),
            y in proptest::collection::vec(rat(), 2),
            z in rat(),
            t in rat(),
            l in rat(),
            eps in proptest::collection::vec(prop_oneof![Just(1i64), Just(-1i64)], 2),
        ) {
            let p = EmbeddingParams::new(GaussRational::new(Rational::one(), l), eps.clone()).unwrap();
            let g = HeisElement { x, y, z };
            let q = Hyperquadric::heisenberg(&eps);
            let res = quadric_residual(&q, &embed_heisenberg(&p, &t, &g).unwrap()).unwrap();
            prop_assert_eq!(res, GaussRational::real(&Rational::from_integer(2) * &t));
        }

        #[test]
        fn products_stay_on_quadric(
            a in proptest::collection::vec(rat(), 5),
            b in proptest::collection::vec(rat(), 5),
        ) {
            let el = |v: &[Rational]| HeisElement { x: v[0..2].to_vec(), y: v[2..4].to_vec(), z: v[4].clone() };
            let (g, h) = (el(&a), el(&b));
            let p = EmbeddingParams::new(GaussRational::ints(1, 1), vec![1, -1]).unwrap();
            let q = Hyperquadric::heisenberg(&[1, -1]);
            let prod = g.mul(&h);
            prop_assert!(quadric_residual(&q, &embed_heisenberg(&p, &Rational::zero(), &prod).unwrap()).unwrap().is_zero());
            prop_assert_eq!(g.mul(&HeisElement::identity(2)), g.clone());
        }

        #[test]
        fn su2_norm_law(k in 0.1f64..3.0, l in -3.0f64..3.0, t in -2.0f64..2.0, seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let (z1, z2) = random_s3(&mut rng);
            let [w1, w2] = embed_su2(Complex64::new(k, l), t, z1, z2).unwrap();
            prop_assert!(((w1.norm_sqr() + w2.norm_sqr()).ln() - 2.0 * k * t).abs() < LAW_TOL);
        }

        #[test]
        fn sl2_image_in_upper_half_plane(seed in any::<u64>(), t in -2.0f64..2.0) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let [a, b, c, d] = random_sl2(&mut rng);
            let (w, v) = embed_sl2(Complex64::new(1.0, 0.5), t, a, b, c, d).unwrap();
            prop_assert!(w.im > 0.0 && v.norm() > 0.0);
        }
    }
}
