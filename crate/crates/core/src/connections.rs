//! Flat unitary connections attached to Hecke eigenfunctions, and GL₁-opers.
//!
//! For a class `γ` the connection `∇_γ = d − 2πi(ω_γ + ω̄_γ)` on the trivial
//! line bundle has holonomy `e^{2πi ∫(ω_γ + ω̄_γ)}` along a path, which from
//! the reference point to `p` is the Hecke eigenvalue `λ^γ_p`. Its periods are
//! integers, so the monodromy is trivial.

use std::f64::consts::PI;
use std::io::Write;

use nalgebra::DVector;
use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::complex::unit_phase;
use crate::torus_geometry::{line_integral, solve_harmonic, CohomologyClass, HarmonicForm, RiemannMatrix};
use crate::{Error, Result};

/// Relative tolerance for deciding that a monodromy multiplier is real.
pub const REAL_MONODROMY_TOL: f64 = 1e-10;

/// `∇_γ = d − 2πi(ω_γ + ω̄_γ)`; the coefficient one-form is real.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryFlatConnection {
    pub form: HarmonicForm,
}

impl UnitaryFlatConnection {
    /// Coefficients of `dz_j` in `2πi(ω_γ + ω̄_γ)`; the `dz̄_j` coefficients are `−conj` of these.
    pub fn dz_coefficients(&self) -> DVector<Complex64> {
        self.form.u.map(|u| Complex64::new(0.0, 2.0 * PI) * u)
    }
}

pub fn connection_from_class(gamma: &CohomologyClass, lattice: &RiemannMatrix) -> Result<UnitaryFlatConnection> {
    Ok(UnitaryFlatConnection {
        form: solve_harmonic(gamma, lattice)?,
    })
}

/// Straight segment in the universal cover `ℂ^g`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusPath {
    pub start: DVector<Complex64>,
    pub end: DVector<Complex64>,
}

impl TorusPath {
    pub fn new(start: DVector<Complex64>, end: DVector<Complex64>) -> Result<Self> {
        if start.len() != end.len() {
            return Err(Error::ShapeMismatch {
                expected: start.len(),
                actual: end.len(),
            });
        }
        if start.iter().chain(end.iter()).any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { start, end })
    }

    pub fn from_origin(end: DVector<Complex64>) -> Self {
        Self {
            start: DVector::zeros(end.len()),
            end,
        }
    }

    /// A path whose endpoints differ by a lattice vector descends to a loop on the torus.
    pub fn is_closed_on(&self, lattice: &RiemannMatrix, tol: f64) -> bool {
        lattice.torus_distance(&self.end, &self.start) <= tol
    }
}

/// Parallel-transport multiplier `e^{2πi(u·Δ + ū·Δ̄)}`, `Δ = end − start`.
pub fn holonomy(conn: &UnitaryFlatConnection, path: &TorusPath) -> Complex64 {
    unit_phase(line_integral(&conn.form, &(&path.end - &path.start)))
}

/// Holonomies along the `2g` generator loops `e_1..e_g, Ωe_1..Ωe_g`.
pub fn monodromy_generators(conn: &UnitaryFlatConnection, lattice: &RiemannMatrix) -> Vec<Complex64> {
    let g = lattice.genus();
    (0..2 * g)
        .map(|k| {
            let mut n = vec![0; g];
            let mut m = vec![0; g];
            if k < g {
                n[k] = 1;
            } else {
                m[k - g] = 1;
            }
            holonomy(conn, &TorusPath::from_origin(lattice.lattice_vector(&n, &m)))
        })
        .collect()
}

/// The holomorphic connection `d − λ dz` on the trivial bundle over `E_τ`.
#[derive(Debug, Clone, PartialEq)]
pub struct GL1Oper {
    pub lambda: Complex64,
    pub lattice: RiemannMatrix,
}

impl GL1Oper {
    pub fn new(lambda: Complex64, lattice: &RiemannMatrix) -> Result<Self> {
        lattice.tau()?;
        if !lambda.re.is_finite() || !lambda.im.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Self {
            lambda,
            lattice: lattice.clone(),
        })
    }
}

/// The anti-holomorphic connection `d − μ dz̄` on the trivial bundle over `E_τ`.
#[derive(Debug, Clone, PartialEq)]
pub struct AntiGL1Oper {
    pub mu: Complex64,
    pub lattice: RiemannMatrix,
}

impl AntiGL1Oper {
    pub fn new(mu: Complex64, lattice: &RiemannMatrix) -> Result<Self> {
        lattice.tau()?;
        if !mu.re.is_finite() || !mu.im.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Self {
            mu,
            lattice: lattice.clone(),
        })
    }
}

/// Multipliers of the horizontal section `e^{λz}` along `1` and `τ`.
pub fn oper_monodromy(oper: &GL1Oper) -> (Complex64, Complex64) {
    let tau = oper.lattice.omega()[(0, 0)];
    (oper.lambda.exp(), (oper.lambda * tau).exp())
}

/// Multipliers of the horizontal section `e^{μz̄}` along `1` and `τ`.
pub fn anti_oper_monodromy(oper: &AntiGL1Oper) -> (Complex64, Complex64) {
    let tau = oper.lattice.omega()[(0, 0)];
    (oper.mu.exp(), (oper.mu * tau.conj()).exp())
}

/// `w` is a nonzero real number, relative to its own size.
pub fn is_split_real(w: Complex64) -> bool {
    w.norm() > 0.0 && w.im.abs() <= REAL_MONODROMY_TOL * w.norm().max(1.0)
}

/// Monodromy lies in the split real form `ℝ^× ⊂ ℂ^×`.
pub fn split_real_predicate(oper: &GL1Oper) -> bool {
    let (a, b) = oper_monodromy(oper);
    is_split_real(a) && is_split_real(b)
}

pub fn anti_split_real_predicate(oper: &AntiGL1Oper) -> bool {
    let (a, b) = anti_oper_monodromy(oper);
    is_split_real(a) && is_split_real(b)
}

/// Eigenvalues `(λ_z, λ_z̄)` of `∂_z` and `∂_z̄` on `f^τ_{m,n}`.
///
/// Writing `f^τ_{m,n} = e^{az + bz̄}` gives `a = 2πi(n − mτ̄)/(τ − τ̄)` and
/// `b = 2πi(mτ − n)/(τ − τ̄)`. For `τ = i` these are `π(n + im)` and `−π(n − im)`.
pub fn diffop_eigenvalues(m: i64, n: i64, tau: Complex64) -> Result<(Complex64, Complex64)> {
    if tau.im.is_nan() || tau.im <= 0.0 {
        return Err(Error::ImaginaryPartNotPositiveDefinite);
    }
    let two_pi_i = Complex64::new(0.0, 2.0 * PI);
    let denom = tau - tau.conj();
    let (m, n) = (m as f64, n as f64);
    Ok((
        two_pi_i * (n - tau.conj() * m) / denom,
        two_pi_i * (tau * m - n) / denom,
    ))
}

/// Max relative error of central differences for `∂_z f` and `∂_z̄ f`
/// against [`diffop_eigenvalues`], at `samples` random points of the
/// fundamental domain. `f` is evaluated through the harmonic solve, so this
/// also cross-checks the closed form.
pub fn finite_difference_check<R: Rng + ?Sized>(
    m: i64,
    n: i64,
    tau: Complex64,
    step: f64,
    samples: usize,
    rng: &mut R,
) -> Result<f64> {
    if !(step > 0.0 && step < 0.1) {
        return Err(Error::Malformed(format!("step {step} outside (0, 0.1)")));
    }
    let lattice = RiemannMatrix::elliptic(tau)?;
    let form = solve_harmonic(&CohomologyClass::elliptic(m, n), &lattice)?;
    let f = |z: Complex64| unit_phase(line_integral(&form, &DVector::from_element(1, z)));
    let (lz, lzb) = diffop_eigenvalues(m, n, tau)?;
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let z = Complex64::new(rng.gen::<f64>(), 0.0) + tau * rng.gen::<f64>();
        let dx = (f(z + step) - f(z - step)) / (2.0 * step);
        let dy = (f(z + Complex64::new(0.0, step)) - f(z - Complex64::new(0.0, step))) / (2.0 * step);
        let i = Complex64::new(0.0, 1.0);
        let dz = (dx - i * dy) / 2.0;
        let dzb = (dx + i * dy) / 2.0;
        let fz = f(z);
        let err_z = (dz - lz * fz).norm() / lz.norm().max(1.0);
        let err_zb = (dzb - lzb * fz).norm() / lzb.norm().max(1.0);
        worst = worst.max(err_z).max(err_zb);
    }
    Ok(worst)
}

/// Coefficient vector `2πi·u` of the holomorphic connection `d − 2πi ω_γ`.
pub fn torus_oper_from_class(gamma: &CohomologyClass, lattice: &RiemannMatrix) -> Result<DVector<Complex64>> {
    let form = solve_harmonic(gamma, lattice)?;
    Ok(form.u.map(|u| Complex64::new(0.0, 2.0 * PI) * u))
}

/// For genus one, the oper `d − 2πi u dz` attached to `γ`.
pub fn gl1_oper_from_class(gamma: &CohomologyClass, lattice: &RiemannMatrix) -> Result<GL1Oper> {
    lattice.expect_genus(1)?;
    let coeffs = torus_oper_from_class(gamma, lattice)?;
    GL1Oper::new(coeffs[0], lattice)
}

/// One row of a spectrum scan.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SpectrumRow {
    pub lambda_re: f64,
    pub lambda_im: f64,
    pub mono1_re: f64,
    pub mono1_im: f64,
    pub mono2_re: f64,
    pub mono2_im: f64,
    pub split_real: u8,
}

impl SpectrumRow {
    pub fn new(oper: &GL1Oper) -> Self {
        let (a, b) = oper_monodromy(oper);
        Self {
            lambda_re: oper.lambda.re,
            lambda_im: oper.lambda.im,
            mono1_re: a.re,
            mono1_im: a.im,
            mono2_re: b.re,
            mono2_im: b.im,
            split_real: split_real_predicate(oper) as u8,
        }
    }
}

/// Opers `d − λ dz` for `λ` on a `side × side` grid over `[lo, hi]²`, row-major in `Im λ`.
pub fn spectrum_scan(lattice: &RiemannMatrix, lo: f64, hi: f64, side: usize) -> Result<Vec<GL1Oper>> {
    let step = if side > 1 { (hi - lo) / (side - 1) as f64 } else { 0.0 };
    (0..side * side)
        .map(|k| {
            let (i, j) = (k / side, k % side);
            GL1Oper::new(Complex64::new(lo + j as f64 * step, lo + i as f64 * step), lattice)
        })
        .collect()
}

/// Writes `lambda_re, lambda_im, mono1_re, mono1_im, mono2_re, mono2_im, split_real`.
pub fn write_spectrum_csv<W: Write>(writer: W, rows: &[SpectrumRow]) -> Result<()> {
    let mut out = csv::Writer::from_writer(writer);
    for row in rows {
        out.serialize(row).map_err(|e| Error::Malformed(e.to_string()))?;
    }
    out.flush().map_err(|e| Error::Malformed(e.to_string()))?;
    Ok(())
}
