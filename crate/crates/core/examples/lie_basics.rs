//! Loading catalog algebras and computing their basic invariants.

use crlie::catalog::{builtin, valid_builtin_names};
use crlie::forms::{dual_names, KForm};
use crlie::scalar::GaussRational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in valid_builtin_names() {
        let g = builtin(name)?;
        let derived: Vec<usize> = g.derived_series().iter().map(|s| s.dim()).collect();
        print!("{name:<14} dim {} killing {} center {} derived {derived:?}", g.dim(), g.killing_signature(), g.center().dim());
        if g.dim() == 3 {
            print!("  [{}]", g.fingerprint3()?);
        }
        println!();
    }

    let broken = builtin("broken_heis3")?;
    let report = broken.check_jacobi();
    println!("broken_heis3 violates Jacobi at {:?}", report.violations[0].names);

    let h = builtin("heis3")?;
    let names = dual_names(&h);
    for i in 0..3 {
        let d = KForm::<GaussRational>::basis(3, i).d(&h);
        println!("d{} = {}", names[i], if d.is_zero() { "0".to_string() } else { d.render(&names) });
    }
    Ok(())
}
