//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the console.

use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crlie::catalog::{builtin, builtin_file, valid_builtin_names};
use crlie::cr::{
    contact_possible, cr_equivalent_via, from_spec, heisenberg_k, is_cr_integrable, levi, quotient_form_nondegenerate,
    random_heis_cr, reeb,
};
use crlie::embed::{
    calibrate_quadric, embed_heisenberg, embed_sl2, embed_su2, quadric_calibration, quadric_residual, random_heis,
    random_s3, random_sl2, EmbeddingParams, Hyperquadric,
};
use crlie::flat::{
    calibrate, calibration, eq68_tau, flat_locus, graph, heis_modification, is_flat_model, lemma3_check, phi_family,
    pulled_back_cr, FlatModelCandidate, PhiKind, Verdict,
};
use crlie::forms::{dual_names, random_form, GValuedOneForm, KForm};
use crlie::linalg::{Matrix, Signature, Subspace};
use crlie::scalar::{GaussRational, Rational};
use crlie::suites::{lemma3_subspaces, normal_for, NORMALITY_T};
use crlie::sugrp::build_su;

const SEED: u64 = 42;
/// Float tolerance for the SU(2) norm law.
const NORM_TOL: f64 = 1e-9;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn catalog_integrity() -> Outcome {
    let mut n = 0;
    for name in valid_builtin_names() {
        ensure(builtin(name).map_err(err)?.check_jacobi().passed(), format!("{name} violates Jacobi"))?;
        n += 1;
    }
    let broken = builtin("broken_heis3").map_err(err)?.check_jacobi();
    let w = broken.violations.first().ok_or("broken fixture passes Jacobi")?;
    Ok(format!("{n} catalogs, broken fixture witness {:?}", w.names))
}

fn killing_signatures() -> Outcome {
    for (name, want) in [("su2", Signature::new(0, 3, 0)), ("sl2R", Signature::new(2, 1, 0)), ("heis3", Signature::new(0, 0, 3))] {
        let got = builtin(name).map_err(err)?.killing_signature();
        ensure(got == want, format!("{name}: {got}"))?;
    }
    Ok("su2 (0,3,0), sl2R (2,1,0), heis3 (0,0,3)".into())
}

fn ce_calculus() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut forms = 0;
    for name in valid_builtin_names() {
        let g = builtin(name).map_err(err)?;
        let n = g.dim();
        for k in 0..n {
            for _ in 0..4 {
                let f = random_form(&mut rng, n, k, 4);
                ensure(f.d(&g).d(&g).is_zero(), format!("d^2 != 0 on {name}"))?;
                forms += 1;
            }
        }
        for p in 0..3.min(n) {
            let a = random_form(&mut rng, n, p, 3);
            let b = random_form(&mut rng, n, 1, 3);
            let sign = if p % 2 == 0 { GaussRational::one() } else { -GaussRational::one() };
            let lhs = a.wedge(&b).map_err(err)?.d(&g);
            let rhs = a.d(&g).wedge(&b).map_err(err)?.add(&a.wedge(&b.d(&g)).map_err(err)?.scale(&sign));
            ensure(lhs == rhs, format!("derivation rule fails on {name}"))?;
        }
    }
    let h = builtin("heis3").map_err(err)?;
    let dz = KForm::<GaussRational>::basis(3, 2).d(&h).render(&dual_names(&h));
    ensure(dz == "x^y", format!("dz = {dz}"))?;
    Ok(format!("{forms} random forms, dz = {dz}"))
}

fn maurer_cartan() -> Outcome {
    let mut n = 0;
    for name in valid_builtin_names() {
        let id = GValuedOneForm::<GaussRational>::identity(Arc::new(builtin(name).map_err(err)?));
        ensure(id.curvature().is_zero(), format!("{name} curvature nonzero"))?;
        n += 1;
    }
    Ok(format!("{n} algebras flat"))
}

fn flat_loci() -> Outcome {
    let model = build_su(1, 0).map_err(err)?;
    let h0 = model.parts().h0().dim();
    for kind in PhiKind::ALL {
        ensure(calibrate(kind, &model) == Some(calibration(kind)), format!("{kind} calibration drifted"))?;
        let loc = flat_locus(kind, &model).map_err(err)?;
        match kind {
            PhiKind::Heis3 => ensure(loc.identically_flat, "heis3 map not flat")?,
            _ => ensure(
                !loc.identically_flat && loc.positive_roots == vec![Rational::one()],
                format!("{kind} locus {:?}", loc.positive_roots),
            )?,
        }
        let c = phi_family(kind, &model, &Rational::one()).map_err(err)?;
        ensure(is_flat_model(&c, &model) == Verdict::Flat, format!("{kind} at s = 1 not a flat model"))?;
        ensure(c.image().dim() + h0 == 8, format!("{kind}: dims {} + {h0}", c.image().dim()))?;
    }
    Ok("su2, sl2R flat only at s = 1; heis3 flat; 3 + 5 = 8".into())
}

fn su_structure() -> Outcome {
    for (p, q) in [(1, 0), (2, 0), (1, 1)] {
        let s = build_su(p, q).map_err(err)?;
        let m = p + q;
        ensure(s.dim() == (m + 2) * (m + 2) - 1, format!("dim {}", s.dim()))?;
        let (dims, bad) = s.grading();
        ensure(dims == vec![1, 2 * m, m * m + 1, 2 * m, 1], format!("grades {dims:?}"))?;
        ensure(bad.is_empty(), format!("grading violated at {:?}", bad.first()))?;
        let b = s.parts().borel();
        ensure(s.algebra().bracket_span(&b, &b) == s.parts().heis(), "[b,b] != heis")?;
        ensure(s.complement_check(&s.parts().heis()), "heis + h0 != g")?;
        ensure(s.ad_table_check().is_empty(), format!("ad tables: {:?}", s.ad_table_check().first()))?;
    }
    Ok("su(2,1), su(3,1), su(2,2)".into())
}

fn levi_signatures() -> Outcome {
    let g = Arc::new(builtin("heis5").map_err(err)?);
    let plus = levi(&g, &heisenberg_k(g.clone(), &[1, 1]), &g.e("Z")).map_err(err)?.signature;
    let mixed = levi(&g, &heisenberg_k(g.clone(), &[1, -1]), &g.e("Z")).map_err(err)?.signature;
    ensure(plus.is_definite(), format!("(+,+) gives {plus}"))?;
    ensure(mixed.pos == 1 && mixed.neg == 1, format!("(+,-) gives {mixed}"))?;
    Ok(format!("(+,+) {plus}, (+,-) {mixed}"))
}

fn normality() -> Outcome {
    let su2 = Arc::new(builtin("su2").map_err(err)?);
    let sl2 = Arc::new(builtin("sl2R").map_err(err)?);
    for (n, d) in NORMALITY_T {
        let t = Rational::new(n, d);
        let it = GaussRational::new(Rational::zero(), t.clone());
        let one = t == Rational::one();
        let z = GaussRational::zero();
        let a = normal_for(su2.clone(), vec![GaussRational::one(), it.clone(), z.clone()]).map_err(err)?;
        let b = normal_for(sl2.clone(), vec![GaussRational::one(), -&it, z.clone()]).map_err(err)?;
        let c = normal_for(sl2.clone(), vec![z, GaussRational::one(), -&it]).map_err(err)?;
        ensure(a == one && b == one && !c, format!("t = {t}: su2 {a}, k_Z {b}, k_X {c}"))?;
    }
    Ok("normal iff t = 1; k_X never normal".into())
}

fn center_is_reeb() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut count = 0;
    for (name, m) in [("heis5", 2usize), ("heis7", 3)] {
        let g = Arc::new(builtin(name).map_err(err)?);
        for _ in 0..20 {
            let eps: Vec<i64> = (0..m).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
            let cr = random_heis_cr(&mut rng, g.clone(), &eps).map_err(err)?;
            ensure(cr.is_nondegenerate() && is_cr_integrable(&cr), "random structure degenerate")?;
            let phi = cr.contact_form();
            let eta = reeb(&g, &phi, m).eta().cloned().ok_or("not contact")?;
            ensure(g.center() == Subspace::span(g.dim(), &[eta]), format!("{name}: center != <reeb>"))?;
            ensure(quotient_form_nondegenerate(&g, &phi), format!("{name}: quotient form degenerate"))?;
            count += 1;
        }
    }
    Ok(format!("{count} structures"))
}

fn contact_certificates() -> Outcome {
    for (name, m) in [("r2_equal", 1), ("r4_equal", 2)] {
        let cert = contact_possible(&builtin(name).map_err(err)?, m).map_err(err)?;
        ensure(!cert.possible, format!("{name} admits a contact form: {}", cert.volume))?;
    }
    let h = builtin("heis3").map_err(err)?;
    let cert = contact_possible(&h, 1).map_err(err)?;
    let w = cert.witness.ok_or("no witness on heis3")?;
    let phi: Vec<GaussRational> = w.iter().cloned().map(GaussRational::real).collect();
    ensure(!crlie::forms::contact_volume(&h, &KForm::one_form(&phi), 1).is_zero(), "witness is not contact")?;
    Ok(format!("m = 1, 2 identically zero; heis3 witness {:?}", w.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
}

fn modifications() -> Outcome {
    let model = build_su(1, 1).map_err(err)?;
    let zero = heis_modification(&model, eq68_tau(&model, &[GaussRational::zero()], &[GaussRational::zero()])).map_err(err)?;
    ensure(zero.modify().map_err(err)?.same_constants(&zero.h), "tau = 0 changes the bracket")?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..20 {
        let mut pick = || GaussRational::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        let (a, b) = (pick(), pick());
        let md = heis_modification(&model, eq68_tau(&model, &[a.clone()], &[b.clone()])).map_err(err)?;
        let hbar = Arc::new(md.modify().map_err(|e| format!("a = {a}, b = {b}: {e}"))?);
        ensure(hbar.center() == md.h.center(), format!("center lost at a = {a}, b = {b}"))?;
        let cols = graph(&model, &md);
        ensure(model.complement_check(&Subspace::span(model.dim(), &cols)), "complement fails")?;
        let cand = FlatModelCandidate::new(hbar, &model, cols).map_err(err)?;
        ensure(is_cr_integrable(&pulled_back_cr(&cand, &model).map_err(err)?), "CR structure not integrable")?;
    }
    Ok("tau = 0 identity; 20 random tau".into())
}

fn radicals() -> Outcome {
    let model = build_su(1, 0).map_err(err)?;
    ensure(model.algebra().radical().map_err(err)?.is_zero(), "su(2,1) radical nonzero")?;
    let b = model.algebra().restrict(&model.parts().borel(), "b").map_err(err)?;
    ensure(b.radical().map_err(err)?.dim() == b.dim(), "radical(b) != b")?;
    let mut checked = 0;
    for (id, l) in lemma3_subspaces(&model).map_err(err)? {
        let rep = lemma3_check(&model, &l).map_err(err)?;
        if rep.closed && rep.complement && rep.radical_dim > 0 {
            ensure(rep.solvable, format!("{id}: radical {} but not solvable", rep.radical_dim))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} complementary subalgebras with radical, all solvable"))
}

fn embeddings() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for eps in [vec![1], vec![1, -1], vec![1, 1]] {
        for delta in [GaussRational::one(), GaussRational::ints(1, 1)] {
            let p = EmbeddingParams::new(delta, eps.clone()).map_err(err)?;
            let samples: Vec<_> = (0..100).map(|_| random_heis(&mut rng, eps.len())).collect();
            ensure(calibrate_quadric(&p, &samples[..20]).first() == Some(&quadric_calibration()), "calibration drifted")?;
            let q = Hyperquadric::heisenberg(&eps);
            for g in &samples {
                let res = quadric_residual(&q, &embed_heisenberg(&p, &Rational::zero(), g).map_err(err)?).map_err(err)?;
                ensure(res.is_zero(), format!("residual {res}"))?;
            }
        }
    }
    let mut worst = 0.0f64;
    for k in [1.0, 2.0, 0.5] {
        for _ in 0..100 {
            let t = rng.gen_range(-2.0..2.0);
            let (z1, z2) = random_s3(&mut rng);
            let [w1, w2] = embed_su2(Complex64::new(k, rng.gen_range(-1.0..1.0)), t, z1, z2).map_err(err)?;
            worst = worst.max(((w1.norm_sqr() + w2.norm_sqr()).ln() - 2.0 * k * t).abs());
        }
    }
    ensure(worst < NORM_TOL, format!("su2 norm defect {worst:e}"))?;
    for _ in 0..100 {
        let [a, b, c, d] = random_sl2(&mut rng);
        let (w, v) = embed_sl2(Complex64::new(1.0, 0.3), rng.gen_range(-2.0..2.0), a, b, c, d).map_err(err)?;
        ensure(w.im > 0.0 && v.norm() > 0.0, "sl2 image outside H x C*")?;
    }
    Ok(format!("600 exact residuals zero, su2 defect {worst:.1e}, sl2 100 in H x C*"))
}

fn cr_equivalence() -> Outcome {
    let aff = Arc::new(builtin("aff_plus_R").map_err(err)?);
    let sl2 = Arc::new(builtin("sl2R").map_err(err)?);
    let f1 = builtin_file("aff_plus_R").map_err(err)?;
    let f2 = builtin_file("sl2R").map_err(err)?;
    let (c1, _) = from_spec(aff, f1.cr_structure("standard").ok_or("missing structure")?).map_err(err)?;
    let (c2, _) = from_spec(sl2, f2.cr_structure("k_Z1").ok_or("missing k_Z1")?).map_err(err)?;
    ensure(cr_equivalent_via(&Matrix::identity(3), &c1, &c2), "identity is not a CR map")?;
    Ok("identity map".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("catalog integrity", catalog_integrity),
        ("Killing signatures", killing_signatures),
        ("CE calculus", ce_calculus),
        ("Maurer-Cartan flatness", maurer_cartan),
        ("flat loci of the calibrated families", flat_loci),
        ("su(p+1,q+1) structure", su_structure),
        ("Levi signatures on heis5", levi_signatures),
        ("normality", normality),
        ("center spanned by the Reeb field", center_is_reeb),
        ("contact nonexistence certificates", contact_certificates),
        ("modification suite", modifications),
        ("radical criterion", radicals),
        ("embeddings", embeddings),
        ("CR equivalence aff_plus_R ~ sl2R", cr_equivalence),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let (tag, detail) = match f() {
            Ok(d) => ("PASS", d),
            Err(e) => {
                failed += 1;
                ("FAIL", e)
            }
        };
        println!("{tag} {:>2} {title}: {detail} [{:.2?}]", i + 1, start.elapsed());
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
