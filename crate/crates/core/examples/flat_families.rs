//! The calibrated one-parameter maps into su(2,1): where they are flat, and
//! the CR structure a flat one pulls back.

use crlie::flat::{calibration, flat_locus, is_flat_model, phi_family, pulled_back_cr, PhiKind};
use crlie::scalar::Rational;
use crlie::sugrp::build_su;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let model = build_su(1, 0)?;
    for kind in PhiKind::ALL {
        let scales: Vec<String> = calibration(kind).iter().map(|s| s.to_string()).collect();
        let locus = flat_locus(kind, &model)?;
        println!("{kind}: scales {scales:?}");
        if locus.identically_flat {
            println!("  flat for every s");
        } else {
            let roots: Vec<String> = locus.positive_roots.iter().map(|r| r.to_string()).collect();
            println!("  curvature gcd {}, flat at s in {roots:?}", locus.gcd);
        }
        for s in [Rational::new(1, 2), Rational::one(), Rational::from_integer(3)] {
            let c = phi_family(kind, &model, &s)?;
            println!("  s = {s}: {}", is_flat_model(&c, &model));
        }
        let c = phi_family(kind, &model, &Rational::one())?;
        let cr = pulled_back_cr(&c, &model)?;
        println!("  pulled back CR structure: levi signature {}", cr.levi().signature);
    }
    Ok(())
}
