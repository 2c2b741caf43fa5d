//! Modifying the Heisenberg subalgebra of su(2,2) by a derivation-valued
//! map and checking the result is still a flat model.

use std::sync::Arc;

use crlie::cr::is_cr_integrable;
use crlie::flat::{eq68_tau, graph, heis_modification, is_flat_model, pulled_back_cr, FlatModelCandidate};
use crlie::scalar::GaussRational;
use crlie::sugrp::build_su;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let model = build_su(1, 1)?;
    for (a, b) in [(0, 0), (1, 2), (-3, 1)] {
        let tau = eq68_tau(&model, &[GaussRational::from_int(a)], &[GaussRational::from_int(b)]);
        let md = heis_modification(&model, tau)?;
        let hbar = Arc::new(md.modify()?);
        let cols = graph(&model, &md);
        let cand = FlatModelCandidate::new(hbar.clone(), &model, cols)?;
        let cr = pulled_back_cr(&cand, &model)?;
        println!(
            "a = {a}, b = {b}: {}, center kept {}, CR integrable {}, levi {}",
            is_flat_model(&cand, &model),
            hbar.center() == md.h.center(),
            is_cr_integrable(&cr),
            cr.levi().signature
        );
        let names = hbar.basis_names();
        for i in 0..hbar.dim() {
            for j in i + 1..hbar.dim() {
                let v = hbar.br(&hbar.unit(i), &hbar.unit(j));
                if v.iter().any(|c| !c.is_zero()) {
                    print!("  [{}, {}] = {}", names[i], names[j], hbar.render(&v));
                }
            }
        }
        println!();
    }
    Ok(())
}
