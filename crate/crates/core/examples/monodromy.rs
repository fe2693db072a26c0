//! Unitary flat connections `d − 2πi(ω_γ + ω̄_γ)` have trivial monodromy and
//! their holonomy from the base point is the Hecke eigenvalue.

use abelian_langlands::abelian_hecke::hecke_eigenvalue;
use abelian_langlands::connections::{connection_from_class, holonomy, monodromy_generators, TorusPath};
use abelian_langlands::torus_geometry::{CohomologyClass, RiemannMatrix};
use abelian_langlands::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> abelian_langlands::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let lattice = RiemannMatrix::elliptic(Complex64::new(0.3, 1.2))?;
    for gamma in [CohomologyClass::elliptic(1, 0), CohomologyClass::elliptic(-2, 3), CohomologyClass::elliptic(5, 5)] {
        let conn = connection_from_class(&gamma, &lattice)?;
        let gens = monodromy_generators(&conn, &lattice);
        let worst = gens.iter().map(|w| (w - 1.0).norm()).fold(0.0, f64::max);
        let p = lattice.random_point(&mut rng);
        let hol = holonomy(&conn, &TorusPath::from_origin(p.coords.clone()));
        let lambda = hecke_eigenvalue(&gamma, &p, &lattice)?.value;
        println!(
            "gamma = ({:+}, {:+})  |monodromy - 1| = {worst:.1e}  holonomy = {hol:.10}  |hol - lambda| = {:.1e}",
            gamma.a[0],
            gamma.b[0],
            (hol - lambda).norm()
        );
    }
    Ok(())
}
