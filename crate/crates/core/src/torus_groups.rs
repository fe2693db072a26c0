//! Split tori `T` of rank `r`: `Bun⁰_T(X) ≅ Pic⁰(X) ⊗ Λ_*(T)` and its Hecke operators.
//!
//! A torus is fixed by bases `χ_1..χ_r` of the character lattice and
//! `μ̌_1..μ̌_r` of the cocharacter lattice together with the integer pairing
//! `P_ij = ⟨χ_i, μ̌_j⟩`. A point of `Bun⁰_T` is `Σ_j v_j ⊗ μ̌_j` and a class in
//! `H¹(X, Λ*(T))` is `Σ_i γ_i ⊗ χ_i`; the harmonic is
//! `exp(2πi Σ_ij P_ij φ_{γ_i}(v_j))`.

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::abelian_hecke::Harmonic;
use crate::complex::unit_phase;
use crate::connections::{connection_from_class, monodromy_generators};
use crate::torus_geometry::{
    aj_line_integral, line_integral, reduce_point, CohomologyClass, JacobianPoint, RiemannMatrix,
};
use crate::{Error, Result};

/// Rank and character/cocharacter pairing of a split torus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusData {
    pub rank: usize,
    pub pairing: Vec<Vec<i64>>,
}

impl TorusData {
    pub fn new(pairing: Vec<Vec<i64>>) -> Result<Self> {
        let rank = pairing.len();
        if rank == 0 || pairing.iter().any(|row| row.len() != rank) {
            return Err(Error::ShapeMismatch {
                expected: rank,
                actual: pairing.iter().map(Vec::len).find(|&l| l != rank).unwrap_or(0),
            });
        }
        let det = integer_determinant(&pairing);
        if det.abs() != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(Self { rank, pairing })
    }

    /// `GL₁^r` with dual bases.
    pub fn split(rank: usize) -> Self {
        let pairing = (0..rank)
            .map(|i| (0..rank).map(|j| (i == j) as i64).collect())
            .collect();
        Self { rank, pairing }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: TorusData = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        let parsed = Self::new(raw.pairing)?;
        if parsed.rank != raw.rank {
            return Err(Error::ShapeMismatch {
                expected: raw.rank,
                actual: parsed.rank,
            });
        }
        Ok(parsed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("torus data serializes")
    }

    /// Class seen by the `j`-th cocharacter coordinate: `Σ_i P_ij γ_i`.
    fn effective_class(&self, gamma: &TCohomologyClass, j: usize) -> CohomologyClass {
        let g = gamma.components[0].genus();
        (0..self.rank).fold(CohomologyClass::zero(g), |acc, i| {
            acc.add(&gamma.components[i].scale(self.pairing[i][j]))
        })
    }

    fn check_rank(&self, actual: usize) -> Result<()> {
        if actual != self.rank {
            return Err(Error::ShapeMismatch {
                expected: self.rank,
                actual,
            });
        }
        Ok(())
    }
}

/// Fraction-free (Bareiss) determinant.
fn integer_determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// `γ ∈ H¹(X, Λ*(T)) ≅ (ℤ^{2g})^r` in the character basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TCohomologyClass {
    pub components: Vec<CohomologyClass>,
}

impl TCohomologyClass {
    pub fn new(components: Vec<CohomologyClass>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::ShapeMismatch { expected: 1, actual: 0 });
        };
        let g = first.genus();
        if let Some(bad) = components.iter().find(|c| c.genus() != g) {
            return Err(Error::GenusMismatch {
                expected: g,
                actual: bad.genus(),
            });
        }
        Ok(Self { components })
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }
}

/// A point of `Bun⁰_T(X) ≅ (Pic⁰)^r` in the cocharacter basis.
#[derive(Debug, Clone, PartialEq)]
pub struct BunTPoint {
    pub components: Vec<JacobianPoint>,
}

impl BunTPoint {
    pub fn origin(genus: usize, rank: usize) -> Self {
        Self {
            components: vec![JacobianPoint::origin(genus); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }
}

fn phase_sum(torus: &TorusData, gamma: &TCohomologyClass, lattice: &RiemannMatrix, displacements: &[DVector<Complex64>]) -> Result<f64> {
    let mut total = 0.0;
    for (j, v) in displacements.iter().enumerate() {
        let h = Harmonic::new(&torus.effective_class(gamma, j), lattice)?;
        total += line_integral(h.form(), v);
    }
    Ok(total)
}

/// `exp(2πi Σ_ij P_ij φ_{γ_i}(v_j))`.
pub fn t_harmonic_eval(
    gamma: &TCohomologyClass,
    point: &BunTPoint,
    torus: &TorusData,
    lattice: &RiemannMatrix,
) -> Result<Complex64> {
    torus.check_rank(gamma.rank())?;
    torus.check_rank(point.rank())?;
    let coords: Vec<_> = point.components.iter().map(|p| p.coords.clone()).collect();
    Ok(unit_phase(phase_sum(torus, gamma, lattice, &coords)?))
}

/// `T_p^μ̌` normalized by `p₀`: shifts the `j`-th component by `μ̌_j·AJ(p)`.
pub fn t_hecke_shift(point: &BunTPoint, p: &JacobianPoint, mu_check: &[i64], lattice: &RiemannMatrix) -> Result<BunTPoint> {
    if mu_check.len() != point.rank() {
        return Err(Error::ShapeMismatch {
            expected: point.rank(),
            actual: mu_check.len(),
        });
    }
    Ok(BunTPoint {
        components: point
            .components
            .iter()
            .zip(mu_check)
            .map(|(v, &k)| reduce_point(&(&v.coords + &p.coords * Complex64::new(k as f64, 0.0)), lattice))
            .collect(),
    })
}

/// Pull-back of `f` along [`t_hecke_shift`].
pub fn t_hecke_apply<'a, F>(
    f: F,
    p: &'a JacobianPoint,
    mu_check: &'a [i64],
    lattice: &'a RiemannMatrix,
) -> impl Fn(&BunTPoint) -> Result<Complex64> + 'a
where
    F: Fn(&BunTPoint) -> Result<Complex64> + 'a,
{
    move |point| f(&t_hecke_shift(point, p, mu_check, lattice)?)
}

/// `μ̌(e^{2πi∫_{p₀}^p(ω_γ + ω̄_γ)})`: `exp(2πi Σ_ij P_ij μ̌_j ∫_{p₀}^p (ω_{γ_i} + ω̄_{γ_i}))`.
pub fn t_hecke_eigenvalue(
    gamma: &TCohomologyClass,
    mu_check: &[i64],
    p: &JacobianPoint,
    lattice: &RiemannMatrix,
    torus: &TorusData,
) -> Result<Complex64> {
    torus.check_rank(gamma.rank())?;
    torus.check_rank(mu_check.len())?;
    let mut total = 0.0;
    for (i, gamma_i) in gamma.components.iter().enumerate() {
        let h = Harmonic::new(gamma_i, lattice)?;
        let integral = aj_line_integral(h.form(), p);
        for (j, &k) in mu_check.iter().enumerate() {
            total += (torus.pairing[i][j] * k) as f64 * integral;
        }
    }
    Ok(unit_phase(total))
}

/// Product quadrature of `⟨f_γ, f_γ'⟩` over `(N^{2g})^r` nodes, one factor per cocharacter coordinate.
pub fn t_orthogonality_check(
    gamma1: &TCohomologyClass,
    gamma2: &TCohomologyClass,
    torus: &TorusData,
    lattice: &RiemannMatrix,
    resolution: usize,
) -> Result<Complex64> {
    torus.check_rank(gamma1.rank())?;
    torus.check_rank(gamma2.rank())?;
    let mut product = Complex64::new(1.0, 0.0);
    for j in 0..torus.rank {
        let a = torus.effective_class(gamma1, j);
        let b = torus.effective_class(gamma2, j);
        product *= crate::abelian_hecke::orthogonality_check(&a, &b, lattice, resolution)?;
    }
    Ok(product)
}

/// Generator holonomies of `∇_{γ_i}` for every character component.
pub fn t_monodromy_generators(gamma: &TCohomologyClass, lattice: &RiemannMatrix) -> Result<Vec<Vec<Complex64>>> {
    gamma
        .components
        .iter()
        .map(|c| Ok(monodromy_generators(&connection_from_class(c, lattice)?, lattice)))
        .collect()
}
