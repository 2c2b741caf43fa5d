//! Three-dimensional and higher-dimensional flat-model candidates inside
//! su(p+1, q+1), with computed properties and any disagreement flagged.

use crlie::flat::{classify3_harness, thm4_harness};
use crlie::sugrp::build_su;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let su21 = build_su(1, 0)?;
    println!("three-dimensional candidates in {}:", su21.algebra().name());
    for row in classify3_harness(&su21)? {
        println!("  {:<11} {:<12} {}", row.status.to_string(), row.id, row.summary());
    }
    for (p, q) in [(1, 1), (2, 1)] {
        let model = build_su(p, q)?;
        println!("modifications in {}:", model.algebra().name());
        for row in thm4_harness(&model)? {
            println!("  {:<11} {:<12} {}", row.status.to_string(), row.id, row.summary());
        }
    }
    Ok(())
}
