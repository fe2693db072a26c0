//! Hecke eigenvalues of the harmonics `f^τ_{m,n}` on an elliptic curve.
//!
//!     cargo run --example elliptic_eigenbasis -- 0.3+1.2i

use abelian_langlands::abelian_hecke::{elliptic, hecke_eigenvalue, verify_eigenfunction};
use abelian_langlands::complex::{format_complex, parse_complex};
use abelian_langlands::torus_geometry::{aj_elliptic, CohomologyClass, RiemannMatrix};
use abelian_langlands::Complex64;

fn main() -> abelian_langlands::Result<()> {
    let tau = match std::env::args().nth(1) {
        Some(s) => parse_complex(&s)?,
        None => Complex64::new(0.0, 1.0),
    };
    let lattice = RiemannMatrix::elliptic(tau)?;
    let p = aj_elliptic(Complex64::new(0.37, 0.21), &lattice)?;
    println!("tau = {}, p = {}", format_complex(tau), format_complex(p.z()));
    println!("{:>3} {:>3}  {:>26}  {:>10}  {:>10}", "m", "n", "lambda", "closed", "grid");
    for gamma in CohomologyClass::box_enumerate(1, 2) {
        let (m, n) = (gamma.a[0], gamma.b[0]);
        let record = hecke_eigenvalue(&gamma, &p, &lattice)?;
        let closed = (record.value - elliptic::eigenvalue(m, n, tau, p.z())).norm();
        let grid = verify_eigenfunction(&gamma, &p, &lattice, 32)?;
        println!(
            "{m:>3} {n:>3}  {:>26}  {closed:>10.2e}  {grid:>10.2e}",
            format_complex(record.value)
        );
    }
    Ok(())
}
