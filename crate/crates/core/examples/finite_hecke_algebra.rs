//! The finite Hecke algebra of `SL₂(F_q)` acting on `ℙ¹(F_q)`, by brute-force
//! convolution of invariant kernels.
//!
//!     cargo run --example finite_hecke_algebra -- 7

use abelian_langlands::finite_models::{convolve, verify_hecke_relations, HeckeKernel, PrimeField};

fn main() -> abelian_langlands::Result<()> {
    let q: u64 = std::env::args().nth(1).map_or(5, |s| s.parse().expect("integer q"));
    let field = PrimeField::new(q)?;
    let cs = HeckeKernel::cs(field);
    let square = convolve(&cs, &cs)?;
    println!("c_s * c_s = {:?}", square.to_element()?);
    if q <= 5 {
        for row in square.values() {
            println!("  {row:?}");
        }
    }
    let report = verify_hecke_relations(field);
    for check in &report.checks {
        println!("{:<28} {}", check.name, if check.pass { "ok" } else { "FAILED" });
    }
    Ok(())
}
