//! Scan `GL₁`-opers `d − λdz` on `ℂ/(ℤ + iℤ)` and list those with real
//! monodromy. They sit exactly at `λ = π(n + im)`, the opers attached to
//! the harmonics.
//!
//!     cargo run --example gl1_opers -- [scan.csv]

use std::f64::consts::PI;

use abelian_langlands::connections::{
    gl1_oper_from_class, spectrum_scan, split_real_predicate, write_spectrum_csv, SpectrumRow,
};
use abelian_langlands::torus_geometry::{CohomologyClass, RiemannMatrix};
use abelian_langlands::Complex64;

fn main() -> abelian_langlands::Result<()> {
    let lattice = RiemannMatrix::elliptic(Complex64::new(0.0, 1.0))?;
    let scan = spectrum_scan(&lattice, -2.0 * PI, 2.0 * PI, 41)?;
    println!("split-real opers among {} scanned:", scan.len());
    for oper in scan.iter().filter(|o| split_real_predicate(o)) {
        let l = oper.lambda / PI;
        println!("  lambda/pi = {:+.3}{:+.3}i", l.re, l.im);
    }
    let oper = gl1_oper_from_class(&CohomologyClass::elliptic(1, 2), &lattice)?;
    println!("gamma = (1, 2) gives lambda = {:.12}", oper.lambda);
    if let Some(path) = std::env::args().nth(1) {
        let rows: Vec<_> = scan.iter().map(SpectrumRow::new).collect();
        write_spectrum_csv(std::fs::File::create(path).expect("writable path"), &rows)?;
    }
    Ok(())
}
