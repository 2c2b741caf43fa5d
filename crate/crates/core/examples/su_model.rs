//! The matrix model of su(p+1, q+1): basis, grading and named subalgebras.

use crlie::sugrp::build_su;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (p, q) = std::env::args()
        .nth(1)
        .and_then(|s| s.split_once(',').map(|(a, b)| (a.parse().unwrap_or(1), b.parse().unwrap_or(1))))
        .unwrap_or((1, 1));
    let model = build_su(p, q)?;
    let g = model.algebra();
    println!("{} has dimension {}", g.name(), model.dim());
    println!("basis: {}", g.basis_names().join(" "));
    let (dims, bad) = model.grading();
    println!("grade dimensions -2..2: {dims:?} ({} violations)", bad.len());
    for (name, idx) in model.parts().manifest() {
        let names: Vec<&str> = idx.iter().map(|&i| g.basis_names()[i].as_str()).collect();
        println!("  {name:<9} {}", names.join(" "));
    }
    println!("killing signature {}", g.killing_signature());
    for i in 1..=model.m() {
        let (x, y) = (model.x(i), model.y(i));
        println!("[X{i}, Y{i}] = {}", g.render(&g.br(&x, &y)));
        println!("[U, X{i}] = {}", g.render(&g.br(&model.u(), &x)));
    }
    println!("ad table mismatches: {}", model.ad_table_check().len());
    Ok(())
}
