//! Named check suites: `forms`, `su`, `flat`, `classify3`, `thm1`, `thm4`,
//! `embed`, and `all`.

use std::error::Error;
use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{builtin, builtin_file, valid_builtin_names};
use crate::cr::{
    contact_possible, cr_equivalent_via, from_spec, heisenberg_k, is_cr_integrable, is_normal, k_to_pair, levi,
    quotient_form_nondegenerate, random_heis_cr, reeb, CRSubalgebra, Reeb,
};
use crate::embed::{
    calibrate_quadric, embed_heisenberg, embed_sl2, embed_su2, quadric_calibration, quadric_residual, random_heis,
    random_s3, random_sl2, EmbeddingParams, Hyperquadric, LAW_TOL,
};
use crate::flat::{
    calibrate, calibration, classify3_harness, eq68_tau, flat_locus, graph, heis_modification, is_flat_model,
    lemma3_check, phi_family, pulled_back_cr, thm4_harness, PhiKind, Verdict,
};
use crate::forms::{dual_names, random_form, GValuedOneForm, KForm};
use crate::liealg::LieAlgebra;
use crate::linalg::{Matrix, Signature, Subspace};
use crate::report::{CheckReport, Status};
use crate::scalar::{GaussRational, Rational};
use crate::sugrp::{build_su, SUModel};

pub const DEFAULT_SEED: u64 = 42;

pub const SUITES: [&str; 8] = ["all", "forms", "su", "flat", "classify3", "thm1", "thm4", "embed"];

type Outcome = Result<(bool, String), Box<dyn Error>>;

#[derive(Debug, thiserror::Error)]
#[error("unknown suite {0:?}; expected one of {SUITES:?}")]
pub struct UnknownSuite(pub String);

/// Records `f`, turning an internal error into a failure with the message
/// as witness.
fn check(r: &mut CheckReport, id: impl Into<String>, f: impl FnOnce() -> Outcome) {
    r.timed(id, || match f() {
        Ok((ok, w)) => (Status::from_bool(ok), (!w.is_empty()).then_some(w)),
        Err(e) => (Status::Fail, Some(format!("error: {e}"))),
    });
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn run(name: &str, seed: u64) -> Result<CheckReport, UnknownSuite> {
    Ok(match name {
        "forms" => forms_suite(seed),
        "su" => su_suite(),
        "flat" => flat_suite(seed),
        "classify3" => classify3_suite(),
        "thm1" => thm1_suite(seed),
        "thm4" => thm4_suite(),
        "embed" => embed_suite(seed),
        "all" => {
            let mut all = CheckReport::new("all");
            for s in &SUITES[1..] {
                all.extend(run(s, seed)?);
            }
            all
        }
        other => return Err(UnknownSuite(other.to_string())),
    })
}

/// `d(dω) = 0` for random forms of every degree up to `n − 2`.
pub fn dd_zero(g: &LieAlgebra, rng: &mut impl Rng, per_degree: usize) -> Option<KForm<GaussRational>> {
    let n = g.dim();
    for k in 0..=n.saturating_sub(2) {
        for _ in 0..per_degree {
            let f = random_form(rng, n, k, 4);
            if !f.d(g).d(g).is_zero() {
                return Some(f);
            }
        }
    }
    None
}

/// `d(α∧β) = dα∧β + (−1)^p α∧dβ` on random forms.
pub fn leibniz_holds(g: &LieAlgebra, rng: &mut impl Rng, trials: usize) -> bool {
    let n = g.dim();
    (0..trials).all(|i| {
        let p = 1 + i % 2;
        let q = 1;
        if p + q + 1 > n {
            return true;
        }
        let a = random_form(rng, n, p, 3);
        let b = random_form(rng, n, q, 3);
        let lhs = a.wedge(&b).unwrap().d(g);
        let sign = if p % 2 == 0 { GaussRational::one() } else { -GaussRational::one() };
        let rhs = a.d(g).wedge(&b).unwrap().add(&a.wedge(&b.d(g)).unwrap().scale(&sign));
        lhs == rhs
    })
}

fn forms_suite(seed: u64) -> CheckReport {
    let mut r = CheckReport::new("forms");
    for name in valid_builtin_names() {
        check(&mut r, format!("jacobi/{name}"), || {
            let rep = builtin(name)?.check_jacobi();
            Ok((rep.passed(), String::new()))
        });
    }
    check(&mut r, "jacobi/broken_heis3 rejected", || {
        let rep = builtin("broken_heis3")?.check_jacobi();
        let w = rep.violations.first().map(|v| format!("{v:?}")).unwrap_or_default();
        Ok((!rep.passed(), w))
    });
    for (name, want) in [("su2", Signature::new(0, 3, 0)), ("sl2R", Signature::new(2, 1, 0)), ("heis3", Signature::new(0, 0, 3))] {
        check(&mut r, format!("killing/{name}"), || {
            let got = builtin(name)?.killing_signature();
            Ok((got == want, format!("{got}")))
        });
    }
    let mut rng = rng_for(seed, 1);
    for name in valid_builtin_names() {
        let g = builtin(name).expect("builtin");
        let bad = dd_zero(&g, &mut rng, 5);
        r.record(format!("dd/{name}"), bad.is_none(), bad.map(|f| format!("{f:?}")).unwrap_or_default());
        r.record(format!("leibniz/{name}"), leibniz_holds(&g, &mut rng, 6), "");
        let id = GValuedOneForm::<GaussRational>::identity(Arc::new(g));
        r.record(format!("maurer_cartan/{name}"), id.curvature().is_zero(), "");
    }
    check(&mut r, "dd/broken_heis3 detects", || {
        let g = builtin("broken_heis3")?;
        let found = (0..g.dim()).any(|i| !KForm::<GaussRational>::basis(g.dim(), i).d(&g).d(&g).is_zero());
        Ok((found, String::new()))
    });
    check(&mut r, "heis3 dz", || {
        let g = builtin("heis3")?;
        let dz = KForm::<GaussRational>::basis(3, 2).d(&g).render(&dual_names(&g));
        Ok((dz == "x^y", dz))
    });
    r
}

fn su_suite() -> CheckReport {
    let mut r = CheckReport::new("su");
    for (p, q) in [(1, 0), (2, 0), (1, 1)] {
        let tag = format!("su({},{})", p + 1, q + 1);
        let model = match build_su(p, q) {
            Ok(m) => m,
            Err(e) => {
                r.record(format!("{tag}/build"), false, e.to_string());
                continue;
            }
        };
        let m = model.m();
        r.record(format!("{tag}/dim"), model.dim() == (m + 2) * (m + 2) - 1, model.dim().to_string());
        r.record(format!("{tag}/jacobi"), model.algebra().check_jacobi().passed(), "");
        let (dims, bad) = model.grading();
        r.record(format!("{tag}/grade dims"), dims == vec![1, 2 * m, m * m + 1, 2 * m, 1], format!("{dims:?}"));
        r.record(format!("{tag}/grading"), bad.is_empty(), bad.iter().map(|b| b.detail.clone()).collect::<Vec<_>>().join(", "));
        let bad = model.parts_check();
        r.record(format!("{tag}/parts"), bad.is_empty(), bad.iter().map(|b| format!("{}: {}", b.check, b.detail)).collect::<Vec<_>>().join(", "));
        let bad = model.ad_table_check();
        r.record(format!("{tag}/ad tables"), bad.is_empty(), bad.iter().map(|b| b.detail.clone()).collect::<Vec<_>>().join(", "));
    }
    check(&mut r, "su(2,1)/radical", || {
        let model = build_su(1, 0)?;
        let rad = model.algebra().radical()?;
        Ok((rad.is_zero(), format!("dim {}", rad.dim())))
    });
    check(&mut r, "su(2,1)/radical of borel", || {
        let model = build_su(1, 0)?;
        let b = model.algebra().restrict(&model.parts().borel(), "b")?;
        let rad = b.radical()?;
        Ok((rad.dim() == b.dim(), format!("{} of {}", rad.dim(), b.dim())))
    });
    r
}

/// Subspaces of `su(2,1)` examined for the radical criterion.
pub fn lemma3_subspaces(model: &SUModel) -> Result<Vec<(String, Subspace<GaussRational>)>, Box<dyn Error>> {
    let g = model.algebra();
    let span = |names: &[&str]| Subspace::span(g.dim(), &names.iter().map(|n| g.e(n)).collect::<Vec<_>>());
    let mut out = vec![
        ("l0".to_string(), span(&["X", "Y", "Z"])),
        ("l1".to_string(), span(&["X", "Z", "U"])),
        ("l2".to_string(), span(&["Z", "U", "V"])),
        ("borel".to_string(), model.parts().borel()),
        ("h0".to_string(), model.parts().h0()),
    ];
    for kind in PhiKind::ALL {
        out.push((format!("phi_{kind}"), phi_family(kind, model, &Rational::one())?.image()));
    }
    let mut tau = crate::flat::empty_tau(model);
    tau[0][1] = GaussRational::one();
    tau[1][0] = -GaussRational::one();
    let md = heis_modification(model, tau)?;
    out.push(("tau_XV_YU".to_string(), Subspace::span(g.dim(), &graph(model, &md))));
    Ok(out)
}

fn random_rational(rng: &mut impl Rng) -> GaussRational {
    loop {
        let v = GaussRational::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        if !v.is_zero() {
            return v;
        }
    }
}

fn flat_suite(seed: u64) -> CheckReport {
    let mut r = CheckReport::new("flat");
    let model = build_su(1, 0).expect("su(2,1) builds");
    for kind in PhiKind::ALL {
        check(&mut r, format!("calibration/{kind}"), || {
            let got = calibrate(kind, &model);
            let want = calibration(kind);
            Ok((got.as_ref() == Some(&want), format!("{got:?}")))
        });
        check(&mut r, format!("locus/{kind}"), || {
            let loc = flat_locus(kind, &model)?;
            let ok = match kind {
                PhiKind::Heis3 => loc.identically_flat,
                _ => !loc.identically_flat && loc.positive_roots == vec![Rational::one()],
            };
            Ok((ok, format!("gcd {}, positive roots {:?}", loc.gcd, loc.positive_roots.iter().map(|x| x.to_string()).collect::<Vec<_>>())))
        });
        check(&mut r, format!("flat model/{kind}"), || {
            let c = phi_family(kind, &model, &Rational::one())?;
            let v = is_flat_model(&c, &model);
            let dims = c.image().dim() + model.parts().h0().dim();
            Ok((v == Verdict::Flat && dims == model.dim(), format!("{v}, {} + {}", c.image().dim(), model.parts().h0().dim())))
        });
    }
    check(&mut r, "flat model/su2 off locus", || {
        let c = phi_family(PhiKind::Su2, &model, &Rational::from_integer(2))?;
        let v = is_flat_model(&c, &model);
        Ok((v != Verdict::Flat, v.to_string()))
    });

    let su22 = build_su(1, 1).expect("su(2,2) builds");
    check(&mut r, "modification/tau zero", || {
        let md = heis_modification(&su22, crate::flat::empty_tau(&su22))?;
        Ok((md.modify()?.same_constants(&md.h), String::new()))
    });
    let mut rng = rng_for(seed, 11);
    for i in 0..20 {
        let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
        check(&mut r, format!("modification/eq68 #{i}"), || {
            let md = heis_modification(&su22, eq68_tau(&su22, &[a.clone()], &[b.clone()]))?;
            let hbar = Arc::new(md.modify()?);
            let gr = Subspace::span(su22.dim(), &graph(&su22, &md));
            let center = hbar.center() == md.h.center();
            let complement = su22.complement_check(&gr);
            let cand = crate::flat::FlatModelCandidate::new(hbar.clone(), &su22, graph(&su22, &md))?;
            let integrable = is_cr_integrable(&pulled_back_cr(&cand, &su22)?);
            Ok((center && complement && integrable, format!("a = {a}, b = {b}, center {center}, complement {complement}, integrable {integrable}")))
        });
    }

    match lemma3_subspaces(&model) {
        Ok(subs) => {
            for (id, l) in subs {
                check(&mut r, format!("lemma3/{id}"), || {
                    let rep = lemma3_check(&model, &l)?;
                    Ok((!rep.closed || rep.holds, format!("dim {}, radical {}, {:?}", rep.dim, rep.radical_dim, rep.levi_type)))
                });
            }
        }
        Err(e) => r.record("lemma3", false, e.to_string()),
    }
    r
}

fn classify3_suite() -> CheckReport {
    let mut r = CheckReport::new("classify3");
    match build_su(1, 0).map_err(Box::<dyn Error>::from).and_then(|m| Ok(classify3_harness(&m)?)) {
        Ok(rows) => {
            for row in rows {
                r.push(row.id.clone(), row.status, Some(row.summary()));
            }
        }
        Err(e) => r.record("harness", false, e.to_string()),
    }
    for (name, m) in [("r2_equal", 1), ("r4_equal", 2)] {
        check(&mut r, format!("no contact/{name}"), || {
            let cert = contact_possible(&builtin(name)?, m)?;
            Ok((!cert.possible, format!("volume {}", cert.volume)))
        });
    }
    check(&mut r, "contact witness/heis3", || {
        let g = builtin("heis3")?;
        let cert = contact_possible(&g, 1)?;
        let Some(w) = cert.witness else { return Ok((false, "no witness".into())) };
        let phi: Vec<GaussRational> = w.iter().cloned().map(GaussRational::real).collect();
        let vol = crate::forms::contact_volume(&g, &KForm::one_form(&phi), 1);
        Ok((!vol.is_zero(), format!("{:?}", w.iter().map(|x| x.to_string()).collect::<Vec<_>>())))
    });
    r
}

/// Normality of the CR structure `span{k}` with respect to any contact form
/// annihilating its `D`.
pub fn normal_for(g: Arc<LieAlgebra>, k: Vec<GaussRational>) -> Result<bool, Box<dyn Error>> {
    let sub = CRSubalgebra::new(g.clone(), &[k]);
    let cr = k_to_pair(&sub)?;
    let phi = cr.contact_form();
    match reeb(&g, &phi, 1) {
        Reeb::Unique { eta } => Ok(is_normal(&g, &sub, &eta)),
        Reeb::NonContact { .. } => Err("D is not a contact distribution".into()),
    }
}

pub const NORMALITY_T: [(i64, i64); 5] = [(1, 3), (1, 2), (1, 1), (2, 1), (3, 1)];

fn thm1_suite(seed: u64) -> CheckReport {
    let mut r = CheckReport::new("thm1");
    for (eps, want) in [(vec![1, 1], "definite"), (vec![1, -1], "(1,1)")] {
        check(&mut r, format!("levi/heis5 eps {eps:?}"), || {
            let g = Arc::new(builtin("heis5")?);
            let rep = levi(&g, &heisenberg_k(g.clone(), &eps), &g.e("Z"))?;
            let s = rep.signature;
            let ok = if want == "definite" { s.is_definite() } else { s.pos == 1 && s.neg == 1 };
            Ok((ok, format!("{s}")))
        });
    }
    let su2 = Arc::new(builtin("su2").expect("su2"));
    let sl2 = Arc::new(builtin("sl2R").expect("sl2R"));
    for (n, d) in NORMALITY_T {
        let t = Rational::new(n, d);
        let it = GaussRational::new(Rational::zero(), t.clone());
        let one_t = t == Rational::one();
        let z = GaussRational::zero;
        check(&mut r, format!("normal/su2 k_t t={t}"), || {
            let got = normal_for(su2.clone(), vec![GaussRational::one(), it.clone(), z()])?;
            Ok((got == one_t, format!("normal {got}")))
        });
        check(&mut r, format!("normal/sl2R k_Z t={t}"), || {
            let got = normal_for(sl2.clone(), vec![GaussRational::one(), -&it, z()])?;
            Ok((got == one_t, format!("normal {got}")))
        });
        check(&mut r, format!("normal/sl2R k_X t={t}"), || {
            let got = normal_for(sl2.clone(), vec![z(), GaussRational::one(), -&it])?;
            Ok((!got, format!("normal {got}")))
        });
    }
    let mut rng = rng_for(seed, 21);
    for (name, m) in [("heis5", 2usize), ("heis7", 3)] {
        let g = Arc::new(builtin(name).expect("heisenberg"));
        for i in 0..20 {
            let eps: Vec<i64> = (0..m).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
            let cr = random_heis_cr(&mut rng, g.clone(), &eps);
            check(&mut r, format!("center is reeb/{name} #{i}"), || {
                let cr = cr?;
                let nondeg = cr.is_nondegenerate() && is_cr_integrable(&cr);
                let phi = cr.contact_form();
                let eta = reeb(&g, &phi, m).eta().cloned().ok_or("not contact")?;
                let center = g.center() == Subspace::span(g.dim(), &[eta]);
                let quotient = quotient_form_nondegenerate(&g, &phi);
                Ok((nondeg && center && quotient, format!("eps {eps:?}, levi {}", cr.levi().signature)))
            });
        }
    }
    check(&mut r, "equivalence/aff_plus_R ~ sl2R k_Z1", || {
        let aff = Arc::new(builtin("aff_plus_R")?);
        let file = builtin_file("sl2R")?;
        let (c2, _) = from_spec(sl2.clone(), file.cr_structure("k_Z1").ok_or("missing k_Z1")?)?;
        let (c1, _) = from_spec(aff.clone(), builtin_file("aff_plus_R")?.cr_structure("standard").ok_or("missing standard")?)?;
        Ok((cr_equivalent_via(&Matrix::identity(3), &c1, &c2), String::new()))
    });
    r
}

fn thm4_suite() -> CheckReport {
    let mut r = CheckReport::new("thm4");
    for (p, q) in [(1, 1), (2, 1)] {
        let tag = format!("su({},{})", p + 1, q + 1);
        match build_su(p, q).map_err(Box::<dyn Error>::from).and_then(|m| Ok(thm4_harness(&m)?)) {
            Ok(rows) => {
                for row in rows {
                    r.push(format!("{tag}/{}", row.id), row.status, Some(row.summary()));
                }
            }
            Err(e) => r.record(format!("{tag}/harness"), false, e.to_string()),
        }
    }
    r
}

pub const EMBED_CONFIGS: [&[i64]; 3] = [&[1], &[1, -1], &[1, 1]];

fn embed_suite(seed: u64) -> CheckReport {
    let mut r = CheckReport::new("embed");
    let mut rng = rng_for(seed, 31);
    for eps in EMBED_CONFIGS {
        for delta in [GaussRational::one(), GaussRational::ints(1, 1)] {
            let tag = format!("heisenberg eps {eps:?} delta {delta}");
            let params = EmbeddingParams::new(delta.clone(), eps.to_vec()).expect("valid params");
            let samples: Vec<_> = (0..100).map(|_| random_heis(&mut rng, eps.len())).collect();
            check(&mut r, format!("{tag}/calibration"), || {
                let found = calibrate_quadric(&params, &samples[..20]);
                Ok((found.first() == Some(&quadric_calibration()), found.join("; ")))
            });
            let q = Hyperquadric::heisenberg(eps);
            check(&mut r, format!("{tag}/residual"), || {
                let bad = samples
                    .iter()
                    .filter(|g| !quadric_residual(&q, &embed_heisenberg(&params, &Rational::zero(), g).unwrap()).unwrap().is_zero())
                    .count();
                Ok((bad == 0, format!("{bad} of {} nonzero", samples.len())))
            });
            check(&mut r, format!("{tag}/group law"), || {
                let bad = samples
                    .chunks(2)
                    .filter(|w| {
                        let prod = w[0].mul(&w[1]);
                        !quadric_residual(&q, &embed_heisenberg(&params, &Rational::zero(), &prod).unwrap()).unwrap().is_zero()
                    })
                    .count();
                Ok((bad == 0, format!("{bad} products off the quadric")))
            });
        }
    }
    for (kn, kd) in [(1, 1), (2, 1), (1, 2)] {
        let k = kn as f64 / kd as f64;
        check(&mut r, format!("su2 norm law k={kn}/{kd}"), || {
            let mut worst = 0.0f64;
            for _ in 0..100 {
                let delta = Complex64::new(k, rng.gen_range(-2.0..2.0));
                let t = rng.gen_range(-2.0..2.0);
                let (z1, z2) = random_s3(&mut rng);
                let [w1, w2] = embed_su2(delta, t, z1, z2)?;
                worst = worst.max(((w1.norm_sqr() + w2.norm_sqr()).ln() - 2.0 * k * t).abs());
            }
            Ok((worst < LAW_TOL, format!("max defect {worst:.1e}")))
        });
    }
    check(&mut r, "sl2 membership", || {
        let mut bad = 0;
        for _ in 0..100 {
            let [a, b, c, d] = random_sl2(&mut rng);
            let delta = Complex64::new(rng.gen_range(0.5..2.0), rng.gen_range(-2.0..2.0));
            let (w, v) = embed_sl2(delta, rng.gen_range(-2.0..2.0), a, b, c, d)?;
            let r2 = c * c + d * d;
            if !(w.im > 0.0 && (w.im - 1.0 / r2).abs() < LAW_TOL && v.norm() > 0.0) {
                bad += 1;
            }
        }
        Ok((bad == 0, format!("{bad} of 100 outside H x C*")))
    });
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run("nope", DEFAULT_SEED).is_err());
    }

    #[test]
    fn small_suites_pass() {
        for name in ["forms", "embed", "classify3"] {
            let rep = run(name, DEFAULT_SEED).unwrap();
            assert!(rep.passed(), "{}", rep.to_text());
        }
    }

    #[test]
    fn json_is_deterministic() {
        let a = run("embed", 7).unwrap().to_json();
        let b = run("embed", 7).unwrap().to_json();
        assert_eq!(a, b);
    }
}
