//! CR structures: Levi form, Reeb field, normality, and integrable complex
//! structures on even-dimensional extensions.

use std::sync::Arc;

use crlie::catalog::builtin;
use crlie::cr::{heisenberg_k, is_cr_integrable, is_normal, k_to_pair, levi, lemma1_j, lemma2_j, nijenhuis_full, reeb, CRSubalgebra};
use crlie::scalar::{GaussRational, Rational};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = Arc::new(builtin("heis5")?);
    for eps in [[1, 1], [1, -1]] {
        let k = heisenberg_k(h.clone(), &eps);
        let rep = levi(&h, &k, &h.e("Z"))?;
        println!("heis5 eps {eps:?}: levi {} signature {}", rep.render_matrix(), rep.signature);
    }

    let su2 = Arc::new(builtin("su2")?);
    for t in [Rational::new(1, 2), Rational::one(), Rational::from_integer(2)] {
        let it = GaussRational::new(Rational::zero(), t.clone());
        let k = CRSubalgebra::new(su2.clone(), &[vec![GaussRational::one(), it, GaussRational::zero()]]);
        let cr = k_to_pair(&k)?;
        let phi = cr.contact_form();
        let eta = reeb(&su2, &phi, 1).eta().cloned().expect("contact");
        println!(
            "su2 k_t, t = {t}: integrable {}, pseudoconvex {}, reeb {}, normal {}",
            is_cr_integrable(&cr),
            cr.is_strictly_pseudoconvex(),
            su2.render(&eta),
            is_normal(&su2, &k, &eta)
        );
    }

    let delta = GaussRational::ints(2, -1);
    let u2 = builtin("u2")?;
    let rh = builtin("R_plus_heis5")?;
    println!("N(J) on u2 for delta = {delta}: {}", nijenhuis_full(&u2, &lemma1_j(&delta, 1))?);
    println!("N(J) on R + heis5 for delta = {delta}: {}", nijenhuis_full(&rh, &lemma2_j(&delta, &[1, -1]))?);
    Ok(())
}
