//! Hecke fibers over rank-two bundles on an elliptic curve, their point
//! counts over `F_q`, and the double cover in the odd-degree case.

use abelian_langlands::finite_models::{example2_cover, fq_hecke_apply, BundleDescriptor, CatalogReport, LineBundle};
use abelian_langlands::torus_geometry::{aj_elliptic, RiemannMatrix};
use abelian_langlands::Complex64;

fn main() -> abelian_langlands::Result<()> {
    let o = LineBundle::trivial();
    let bundles = [
        BundleDescriptor::decomposable(o.twisted(2), o.clone()),
        BundleDescriptor::f2_of_x(),
        BundleDescriptor::decomposable(o.clone(), o.twisted(1)),
        BundleDescriptor::decomposable(LineBundle::new("L1", 0), LineBundle::new("L2", 0)),
    ];
    for m in &bundles {
        let report = CatalogReport::new(m)?;
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    }

    // counting function: 1 on every bundle gives the number of F_q points of the fiber
    for q in [3, 5, 7] {
        let counts: Vec<i64> = bundles.iter().map(|m| fq_hecke_apply(|_| 1, m, q)).collect::<Result<_, _>>()?;
        println!("q = {q}: {counts:?}");
    }

    let lattice = RiemannMatrix::elliptic(Complex64::new(0.0, 1.0))?;
    for z in [Complex64::new(0.2, 0.7), Complex64::new(-0.2, -0.7), Complex64::new(0.5, 0.5)] {
        let a = aj_elliptic(z, &lattice)?;
        println!("a = {z}: {}", example2_cover(&a, &lattice)?.descriptor(&lattice));
    }
    Ok(())
}
