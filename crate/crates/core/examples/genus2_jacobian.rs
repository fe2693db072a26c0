//! Harmonic forms on a genus-two Jacobian and the factorization of
//! eigenfunctions over the symmetric cube.
//!
//!     cargo run --example genus2_jacobian -- [omega.json]

use abelian_langlands::abelian_hecke::symmetric_power_eval;
use abelian_langlands::torus_geometry::{period_pairing, solve_harmonic, CohomologyClass, Cycle, RiemannMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> abelian_langlands::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let lattice = match std::env::args().nth(1) {
        Some(path) => RiemannMatrix::from_json(&std::fs::read_to_string(path).expect("readable file"))?,
        None => RiemannMatrix::random(2, &mut rng)?,
    };
    println!("{}", lattice.to_json());

    let gamma = CohomologyClass::new(vec![1, -2], vec![0, 3])?;
    let form = solve_harmonic(&gamma, &lattice)?;
    println!("u = [{:.6}, {:.6}]", form.u[0], form.u[1]);
    for k in 0..4 {
        let period = period_pairing(&form, &Cycle::basis(2, k), &lattice);
        println!("period on cycle {k}: {period:+.12}");
    }

    let triple: Vec<_> = (0..3).map(|_| lattice.random_point(&mut rng)).collect();
    let eval = symmetric_power_eval(&gamma, &triple, &lattice)?;
    println!("f(x1 + x2 + x3) = {:.12}", eval.at_sum);
    println!("prod lambda(x_i) = {:.12}", eval.product);
    println!("discrepancy = {:.2e}", eval.discrepancy());
    Ok(())
}
