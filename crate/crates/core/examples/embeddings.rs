//! Holomorphic images of R x H, R x SU(2) and R x SL(2,R).

use num_complex::Complex64;
use rand::SeedableRng;

use crlie::embed::{
    embed_heisenberg, embed_sl2, embed_su2, quadric_residual, random_heis, random_s3, random_sl2, EmbeddingParams,
    Hyperquadric,
};
use crlie::scalar::{GaussRational, Rational};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    let eps = vec![1, -1];
    let params = EmbeddingParams::new(GaussRational::ints(1, 2), eps.clone())?;
    let q = Hyperquadric::heisenberg(&eps);
    for t in [Rational::zero(), Rational::new(1, 3)] {
        let g = random_heis(&mut rng, 2);
        let w = embed_heisenberg(&params, &t, &g)?;
        let coords: Vec<String> = w.iter().map(|c| c.to_string()).collect();
        println!("t = {t}: ({}) residual {}", coords.join(", "), quadric_residual(&q, &w)?);
    }

    let delta = Complex64::new(0.5, 1.0);
    let (z1, z2) = random_s3(&mut rng);
    let [w1, w2] = embed_su2(delta, 1.0, z1, z2)?;
    println!("su2: |w|^2 = {:.12}, e^(2kt) = {:.12}", w1.norm_sqr() + w2.norm_sqr(), (2.0 * delta.re).exp());

    let [a, b, c, d] = random_sl2(&mut rng);
    let (w, v) = embed_sl2(delta, 0.5, a, b, c, d)?;
    println!("sl2: det {:.3e} off 1, w = {w:.6}, v = {v:.6}", a * d - b * c - 1.0);
    Ok(())
}
