//! Finite-field models: the Hecke algebra of `SL₂(F_q)` and Hecke fibers over
//! rank-two bundles on an elliptic curve.

mod fibers;
mod hecke_algebra;

pub use fibers::{
    example2_cover, fiber_catalog, fq_hecke_apply, hecke_coefficients, BundleDescriptor, CatalogCase,
    CatalogReport, CoverFiber, FiberStratumRecord, LineBundle, Polynomial,
};
pub use hecke_algebra::{
    convolve, p1_points, verify_hecke_relations, HeckeAlgebraElement, HeckeKernel, HeckeRelationReport, P1Point,
    PrimeField, RelationCheck,
};
