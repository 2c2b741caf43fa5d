//! Independent recomputation of the frozen calibrations.

use crlie::embed::{embed_heisenberg, quadric_calibration, quadric_candidates, random_heis, EmbeddingParams};
use crlie::flat::{calibrate, calibration, phi_formal, PhiKind};
use crlie::scalar::{GaussRational, Rational};
use crlie::sugrp::build_su;
use rand::SeedableRng;

/// `coord − Σ c_i |w_i|²` evaluated directly from a diagonal.
fn residual(point: &[GaussRational], diag: &[Rational], re: bool) -> Rational {
    let m = diag.len();
    let form = (0..m).fold(Rational::zero(), |acc, i| &acc + &(&diag[i] * &point[i].norm_sqr()));
    let last = &point[m];
    &(if re { last.re.clone() } else { last.im.clone() }) - &form
}

#[test]
fn quadric_fit_is_unique_for_mixed_signs() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    let eps = [1i64, -1];
    let half = |e: i64| Rational::new(e, 2);
    for delta in [GaussRational::one(), GaussRational::ints(1, 1)] {
        let p = EmbeddingParams::new(delta, eps.to_vec()).unwrap();
        let pts: Vec<_> = (0..20).map(|_| embed_heisenberg(&p, &Rational::zero(), &random_heis(&mut rng, 2)).unwrap()).collect();
        let mut fits = Vec::new();
        let diags: [(&str, Vec<Rational>); 4] = [
            ("diag(eps/2)", eps.iter().map(|&e| half(e)).collect()),
            ("diag(-eps/2)", eps.iter().map(|&e| half(-e)).collect()),
            ("diag(eps)", eps.iter().map(|&e| Rational::from_integer(e)).collect()),
            ("diag(1/2)", eps.iter().map(|_| half(1)).collect()),
        ];
        for (name, d) in &diags {
            for (conv, re) in [("Re", true), ("Im", false)] {
                if pts.iter().all(|w| residual(w, d, re).is_zero()) {
                    fits.push(format!("{name}, {conv}"));
                }
            }
        }
        assert_eq!(fits, vec![quadric_calibration()]);
    }
    assert_eq!(quadric_candidates(&eps).len(), 8);
}

#[test]
fn phi_scales_are_the_only_homomorphic_sign_choice() {
    let model = build_su(1, 0).unwrap();
    for kind in PhiKind::ALL {
        let golden = calibration(kind);
        assert_eq!(calibrate(kind, &model), Some(golden.clone()));
        let form = phi_formal(kind, &model, &golden).unwrap();
        let at_one = form.map_scalars(|x| x.eval_s(&Rational::one()).unwrap());
        assert!(at_one.is_homomorphism(), "{kind}");
        for i in 0..3 {
            let mut flipped = golden.clone();
            flipped[i] = -&flipped[i];
            let f = phi_formal(kind, &model, &flipped).unwrap();
            let f1 = f.map_scalars(|x| x.eval_s(&Rational::one()).unwrap());
            assert!(!f1.is_homomorphism(), "{kind} with scale {i} negated");
        }
    }
}
