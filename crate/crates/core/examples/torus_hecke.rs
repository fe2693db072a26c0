//! Harmonics on `Bun_T` for a rank-two torus with non-diagonal pairing
//! between cocharacters and characters.

use abelian_langlands::torus_geometry::{CohomologyClass, RiemannMatrix};
use abelian_langlands::torus_groups::{
    t_harmonic_eval, t_hecke_apply, t_hecke_eigenvalue, t_orthogonality_check, BunTPoint, TCohomologyClass,
    TorusData,
};
use abelian_langlands::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> abelian_langlands::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let lattice = RiemannMatrix::elliptic(Complex64::new(0.1, 1.3))?;
    let torus = TorusData::new(vec![vec![2, 1], vec![1, 1]])?;
    println!("{}", torus.to_json());

    let gamma = TCohomologyClass::new(vec![CohomologyClass::elliptic(1, -1), CohomologyClass::elliptic(0, 2)])?;
    let mu = [1, -2];
    let p = lattice.random_point(&mut rng);
    let point = BunTPoint {
        components: vec![lattice.random_point(&mut rng), lattice.random_point(&mut rng)],
    };
    let f = |x: &BunTPoint| t_harmonic_eval(&gamma, x, &torus, &lattice);
    let shifted = t_hecke_apply(f, &p, &mu, &lattice)(&point)?;
    let lambda = t_hecke_eigenvalue(&gamma, &mu, &p, &lattice, &torus)?;
    let before = t_harmonic_eval(&gamma, &point, &torus, &lattice)?;
    println!("(T f)(L)  = {shifted:.12}");
    println!("lambda f(L) = {:.12}", lambda * before);

    let other = TCohomologyClass::new(vec![CohomologyClass::elliptic(1, 0), CohomologyClass::elliptic(0, 0)])?;
    println!("<f, f>  = {:.3e}", t_orthogonality_check(&gamma, &gamma, &torus, &lattice, 32)?);
    println!("<f, f'> = {:.3e}", t_orthogonality_check(&gamma, &other, &torus, &lattice, 32)?.norm());
    Ok(())
}
