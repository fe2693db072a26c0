//! Hecke operators on `Pic⁰(X)` and their Fourier-harmonic eigenbasis.
//!
//! With the reference point `p₀` fixed, the Hecke operator `_{p₀}H_p` is the
//! pull-back along translation by the Abel–Jacobi image of `p`. The harmonics
//! `e^{2πi φ_γ}`, `φ_γ(v) = u·v + ū·v̄`, are characters of the torus and hence
//! joint eigenfunctions with eigenvalue `λ^γ_p = e^{2πi φ_γ(p)}`.

use std::io::Write;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::complex::{format_complex, unit_phase};
use crate::torus_geometry::{
    aj_line_integral, line_integral, reduce_point, solve_harmonic, CohomologyClass, HarmonicForm,
    JacobianPoint, RiemannMatrix,
};
use crate::{Error, Result};

/// The harmonic `e^{2πi φ_γ}` together with its solved form `ω_γ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Harmonic {
    form: HarmonicForm,
}

impl Harmonic {
    pub fn new(gamma: &CohomologyClass, lattice: &RiemannMatrix) -> Result<Self> {
        Ok(Self {
            form: solve_harmonic(gamma, lattice)?,
        })
    }

    pub fn from_form(form: HarmonicForm) -> Self {
        Self { form }
    }

    pub fn gamma(&self) -> &CohomologyClass {
        &self.form.class
    }

    pub fn form(&self) -> &HarmonicForm {
        &self.form
    }

    /// Value at any lift `v ∈ ℂ^g`; lattice shifts leave it unchanged.
    pub fn eval(&self, v: &DVector<Complex64>) -> Complex64 {
        unit_phase(line_integral(&self.form, v))
    }
}

/// `e^{2πi(u·v + ū·v̄)}` at a Jacobian point.
pub fn harmonic_eval(h: &Harmonic, point: &JacobianPoint) -> Complex64 {
    h.eval(&point.coords)
}

/// A harmonic pulled back along a translation, kept in closed form so that
/// Hecke operators act without interpolation.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedHarmonic {
    pub harmonic: Harmonic,
    pub shift: DVector<Complex64>,
}

impl ShiftedHarmonic {
    pub fn new(harmonic: Harmonic) -> Self {
        let g = harmonic.form.genus();
        Self {
            harmonic,
            shift: DVector::zeros(g),
        }
    }

    pub fn eval(&self, v: &DVector<Complex64>) -> Complex64 {
        self.harmonic.eval(&(v + &self.shift))
    }

    /// `(H_p f)(q) = f(q + p)`.
    pub fn hecke_apply(&self, p: &JacobianPoint) -> Self {
        Self {
            harmonic: self.harmonic.clone(),
            shift: &self.shift + &p.coords,
        }
    }

    pub fn sample(&self, lattice: &RiemannMatrix, resolution: usize) -> GridFunction {
        GridFunction::sample(lattice, resolution, |v| self.eval(v))
    }
}

/// Samples of a function on the uniform `(s, t)` grid of `[0,1)^{2g}`.
///
/// Node `(i_1..i_g, j_1..j_g)` sits at `s_k = i_k/N`, `t_k = j_k/N`; the flat
/// index is row-major with `s_1` slowest.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    lattice: RiemannMatrix,
    resolution: usize,
    values: Vec<Complex64>,
}

impl GridFunction {
    pub fn sample(
        lattice: &RiemannMatrix,
        resolution: usize,
        f: impl Fn(&DVector<Complex64>) -> Complex64,
    ) -> Self {
        let len = resolution.pow(2 * lattice.genus() as u32);
        let values = (0..len)
            .map(|idx| f(&node_point(lattice, resolution, idx)))
            .collect();
        Self {
            lattice: lattice.clone(),
            resolution,
            values,
        }
    }

    pub fn from_values(lattice: &RiemannMatrix, resolution: usize, values: Vec<Complex64>) -> Result<Self> {
        let expected = resolution.pow(2 * lattice.genus() as u32);
        if values.len() != expected {
            return Err(Error::ShapeMismatch {
                expected,
                actual: values.len(),
            });
        }
        if values.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self {
            lattice: lattice.clone(),
            resolution,
            values,
        })
    }

    pub fn lattice(&self) -> &RiemannMatrix {
        &self.lattice
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn node(&self, idx: usize) -> DVector<Complex64> {
        node_point(&self.lattice, self.resolution, idx)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            values: self.values.iter().map(|z| z * factor).collect(),
            ..self.clone()
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.resolution != other.resolution || self.values.len() != other.values.len() {
            return Err(Error::ResolutionMismatch(self.resolution, other.resolution));
        }
        Ok(())
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_compatible(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// `∫ f·conj(g)` against the mass-one uniform measure.
    pub fn inner_product(&self, other: &Self) -> Result<Complex64> {
        self.check_compatible(other)?;
        let sum: Complex64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .sum();
        Ok(sum / self.values.len() as f64)
    }

    /// Multilinear interpolation at lattice coordinates `(s, t)` on the periodic grid.
    pub fn interpolate(&self, s: &DVector<f64>, t: &DVector<f64>) -> Complex64 {
        let n = self.resolution;
        let coords: Vec<f64> = s.iter().chain(t.iter()).map(|x| x * n as f64).collect();
        let dims = coords.len();
        let base: Vec<i64> = coords.iter().map(|x| x.floor() as i64).collect();
        let frac: Vec<f64> = coords.iter().zip(&base).map(|(x, b)| x - *b as f64).collect();
        let mut acc = Complex64::new(0.0, 0.0);
        for corner in 0..(1usize << dims) {
            let mut weight = 1.0;
            let mut idx = 0usize;
            for d in 0..dims {
                let up = (corner >> (dims - 1 - d)) & 1 == 1;
                weight *= if up { frac[d] } else { 1.0 - frac[d] };
                let i = (base[d] + up as i64).rem_euclid(n as i64) as usize;
                idx = idx * n + i;
            }
            if weight != 0.0 {
                acc += self.values[idx] * weight;
            }
        }
        acc
    }
}

fn node_lattice_coords(genus: usize, resolution: usize, mut idx: usize) -> (DVector<f64>, DVector<f64>) {
    let mut digits = vec![0usize; 2 * genus];
    for d in digits.iter_mut().rev() {
        *d = idx % resolution;
        idx /= resolution;
    }
    let n = resolution as f64;
    let s = DVector::from_iterator(genus, digits[..genus].iter().map(|&i| i as f64 / n));
    let t = DVector::from_iterator(genus, digits[genus..].iter().map(|&i| i as f64 / n));
    (s, t)
}

fn node_point(lattice: &RiemannMatrix, resolution: usize, idx: usize) -> DVector<Complex64> {
    let (s, t) = node_lattice_coords(lattice.genus(), resolution, idx);
    lattice.from_lattice_coords(&s, &t)
}

/// Calls `f` with `q = s + Ωt` for every grid node, in index order, reusing one buffer.
fn for_each_node(lattice: &RiemannMatrix, resolution: usize, mut f: impl FnMut(&[Complex64])) {
    let g = lattice.genus();
    let omega = lattice.omega();
    let n = resolution as f64;
    let mut digits = vec![0usize; 2 * g];
    let mut q = vec![Complex64::new(0.0, 0.0); g];
    for mut idx in 0..resolution.pow(2 * g as u32) {
        for d in digits.iter_mut().rev() {
            *d = idx % resolution;
            idx /= resolution;
        }
        for (i, qi) in q.iter_mut().enumerate() {
            *qi = Complex64::new(digits[i] as f64 / n, 0.0);
            for j in 0..g {
                *qi += omega[(i, j)] * (digits[g + j] as f64 / n);
            }
        }
        f(&q);
    }
}

/// `2Re(u·v)`.
fn phase(u: &DVector<Complex64>, v: impl Iterator<Item = Complex64>) -> f64 {
    2.0 * u.iter().zip(v).map(|(a, b)| a * b).sum::<Complex64>().re
}

/// Hecke operator on tabulated data: `(H_p f)(q) = f(reduce(q + p))`,
/// evaluated by multilinear interpolation on the `(s, t)` torus.
pub fn hecke_apply(f: &GridFunction, p: &JacobianPoint) -> GridFunction {
    let (ps, pt) = f.lattice.lattice_coords(&p.coords);
    let g = f.lattice.genus();
    let values = (0..f.values.len())
        .map(|idx| {
            let (s, t) = node_lattice_coords(g, f.resolution, idx);
            f.interpolate(&(s + &ps), &(t + &pt))
        })
        .collect();
    GridFunction {
        values,
        ..f.clone()
    }
}

/// `λ^γ_p` with its inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenvalueRecord {
    pub gamma: CohomologyClass,
    pub point: JacobianPoint,
    pub value: Complex64,
}

/// `λ^γ_p = e^{2πi ∫_{p₀}^p (ω_γ + ω̄_γ)}`.
pub fn hecke_eigenvalue(
    gamma: &CohomologyClass,
    p: &JacobianPoint,
    lattice: &RiemannMatrix,
) -> Result<EigenvalueRecord> {
    let form = solve_harmonic(gamma, lattice)?;
    Ok(EigenvalueRecord {
        gamma: gamma.clone(),
        point: p.clone(),
        value: unit_phase(aj_line_integral(&form, p)),
    })
}

/// Max over the grid of `|(H_p f_γ)(q) − λ^γ_p f_γ(q)|`, with exact evaluation of both sides.
pub fn verify_eigenfunction(
    gamma: &CohomologyClass,
    p: &JacobianPoint,
    lattice: &RiemannMatrix,
    resolution: usize,
) -> Result<f64> {
    let harmonic = Harmonic::new(gamma, lattice)?;
    let lambda = unit_phase(aj_line_integral(harmonic.form(), p));
    let u = &harmonic.form().u;
    let mut worst = 0.0f64;
    for_each_node(lattice, resolution, |q| {
        let at_q = phase(u, q.iter().copied());
        let at_shift = phase(u, q.iter().zip(p.coords.iter()).map(|(a, b)| a + b));
        worst = worst.max((unit_phase(at_shift) - lambda * unit_phase(at_q)).norm());
    });
    Ok(worst)
}

/// Value at `L ∈ Pic^d` of the eigenfunction extending `f₀` from `Pic⁰`:
/// `f(L) = μ_{p₀}^d · f₀(L₀)` where `L₀ = L(−d·p₀)`.
pub fn extend_to_pic(
    f0: impl Fn(&JacobianPoint) -> Complex64,
    mu_p0: Complex64,
    degree: i32,
    l0: &JacobianPoint,
) -> Result<Complex64> {
    if mu_p0 == Complex64::new(0.0, 0.0) {
        return Err(Error::ZeroMultiplier);
    }
    Ok(mu_p0.powi(degree) * f0(l0))
}

/// The two sides of the factorization on the symmetric power `X^(d)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricPowerEval {
    /// Harmonic evaluated at the Abel–Jacobi image `Σ v_i` of the divisor.
    pub at_sum: Complex64,
    /// `∏ λ^γ_{x_i}`.
    pub product: Complex64,
}

impl SymmetricPowerEval {
    pub fn discrepancy(&self) -> f64 {
        (self.at_sum - self.product).norm()
    }
}

/// Evaluates the pulled-back eigenfunction on `X^(d)` both at the summed
/// Abel–Jacobi image and as a product of single-point eigenvalues. The
/// normalization constant is 1 because `Pic^d` is identified with `Pic⁰`
/// through `d·p₀`.
pub fn symmetric_power_eval(
    gamma: &CohomologyClass,
    points: &[JacobianPoint],
    lattice: &RiemannMatrix,
) -> Result<SymmetricPowerEval> {
    if points.is_empty() {
        return Err(Error::Malformed("symmetric power needs at least one point".into()));
    }
    let harmonic = Harmonic::new(gamma, lattice)?;
    let g = lattice.genus();
    let mut sum = DVector::<Complex64>::zeros(g);
    let mut product = Complex64::new(1.0, 0.0);
    for x in points {
        if x.genus() != g {
            return Err(Error::GenusMismatch {
                expected: g,
                actual: x.genus(),
            });
        }
        sum += &x.coords;
        product *= unit_phase(aj_line_integral(harmonic.form(), x));
    }
    let divisor_image = reduce_point(&sum, lattice);
    Ok(SymmetricPowerEval {
        at_sum: harmonic_eval(&harmonic, &divisor_image),
        product,
    })
}

fn nyquist_check(max_mode: i64, resolution: usize) -> Result<()> {
    if (resolution as i64) <= 2 * max_mode {
        return Err(Error::ResolutionTooLow {
            resolution,
            max_mode,
        });
    }
    Ok(())
}

/// Uniform-grid quadrature of `f_{γ₁}·conj(f_{γ₂})` over the whole `N^{2g}` grid.
pub fn orthogonality_check(
    gamma1: &CohomologyClass,
    gamma2: &CohomologyClass,
    lattice: &RiemannMatrix,
    resolution: usize,
) -> Result<Complex64> {
    nyquist_check(gamma1.max_abs_entry().max(gamma2.max_abs_entry()), resolution)?;
    let h1 = Harmonic::new(gamma1, lattice)?;
    let h2 = Harmonic::new(gamma2, lattice)?;
    let mut sum = Complex64::new(0.0, 0.0);
    for_each_node(lattice, resolution, |q| {
        let (a, b) = (phase(&h1.form().u, q.iter().copied()), phase(&h2.form().u, q.iter().copied()));
        sum += unit_phase(a) * unit_phase(b).conj();
    });
    Ok(sum / resolution.pow(2 * lattice.genus() as u32) as f64)
}

/// Gram matrix `⟨f_{γ_i}, f_{γ_j}⟩` on the `N^{2g}` grid.
///
/// The grid is the product of `2g` one-dimensional grids along the lattice
/// generators `e_k` and `Ωe_k`, and each harmonic is a character, so its value
/// at a node is the product of its values at the node's components along each
/// generator. The grid sum therefore factors into `2g` one-dimensional sums.
/// Along one axis many classes restrict to the same function, so the
/// one-dimensional sums are computed once per distinct restriction.
/// [`orthogonality_check`] is the unfactored route.
pub fn gram_matrix(
    classes: &[CohomologyClass],
    lattice: &RiemannMatrix,
    resolution: usize,
) -> Result<DMatrix<Complex64>> {
    let max_mode = classes.iter().map(CohomologyClass::max_abs_entry).max().unwrap_or(0);
    nyquist_check(max_mode, resolution)?;
    let g = lattice.genus();
    let harmonics = classes
        .iter()
        .map(|c| Harmonic::new(c, lattice))
        .collect::<Result<Vec<_>>>()?;
    let n = resolution as f64;
    let k = classes.len();
    let mut gram = DMatrix::from_element(k, k, Complex64::new(1.0, 0.0));
    for axis in 0..2 * g {
        let mut distinct: Vec<Vec<Complex64>> = Vec::new();
        let mut label = Vec::with_capacity(k);
        for h in &harmonics {
            let restriction: Vec<Complex64> = (0..resolution)
                .map(|i| {
                    let mut s = DVector::zeros(g);
                    let mut t = DVector::zeros(g);
                    if axis < g {
                        s[axis] = i as f64 / n;
                    } else {
                        t[axis - g] = i as f64 / n;
                    }
                    h.eval(&lattice.from_lattice_coords(&s, &t))
                })
                .collect();
            let found = distinct.iter().position(|d| {
                d.iter().zip(&restriction).all(|(a, b)| (a - b).norm() <= 1e-9)
            });
            label.push(found.unwrap_or_else(|| {
                distinct.push(restriction);
                distinct.len() - 1
            }));
        }
        let dots = DMatrix::from_fn(distinct.len(), distinct.len(), |a, b| {
            distinct[a].iter().zip(&distinct[b]).map(|(x, y)| x * y.conj()).sum::<Complex64>() / n
        });
        for i in 0..k {
            for j in 0..k {
                gram[(i, j)] *= dots[(label[i], label[j])];
            }
        }
    }
    Ok(gram)
}

/// Closed forms for `E_τ = ℂ/(ℤ + ℤτ)`, written directly in `z, z̄, τ, τ̄`.
pub mod elliptic {
    use num_complex::Complex64;

    use crate::complex::unit_phase;

    fn exponent(m: i64, n: i64, z: Complex64, tau: Complex64) -> Complex64 {
        let (zb, taub) = (z.conj(), tau.conj());
        (z * taub - zb * tau) / (taub - tau) * m as f64 + (z - zb) / (tau - taub) * n as f64
    }

    /// `f^τ_{m,n}(z) = e^{2πim(zτ̄ − z̄τ)/(τ̄ − τ)} · e^{2πin(z − z̄)/(τ − τ̄)}`.
    pub fn eigenfunction(m: i64, n: i64, tau: Complex64, z: Complex64) -> Complex64 {
        // the exponent is real up to rounding
        unit_phase(exponent(m, n, z, tau).re)
    }

    /// Eigenvalue of `_{p₀}H_p` on `f^τ_{m,n}`: the same expression evaluated at `p`.
    pub fn eigenvalue(m: i64, n: i64, tau: Complex64, p: Complex64) -> Complex64 {
        unit_phase(exponent(m, n, p, tau).re)
    }
}

/// One row of an eigenvalue table.
#[derive(Debug, Clone, Serialize)]
pub struct EigenvalueRow {
    pub g: usize,
    pub omega: String,
    pub gamma_a: String,
    pub gamma_b: String,
    pub p_re: String,
    pub p_im: String,
    pub lambda_re: f64,
    pub lambda_im: f64,
    pub residual: f64,
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
}

impl EigenvalueRow {
    /// Vector-valued fields are `;`-joined; `omega` is row-major `a+bi` entries.
    pub fn new(record: &EigenvalueRecord, lattice: &RiemannMatrix, residual: f64) -> Self {
        let omega = lattice.omega();
        Self {
            g: lattice.genus(),
            omega: join(omega.transpose().iter().map(|z| format_complex(*z))),
            gamma_a: join(&record.gamma.a),
            gamma_b: join(&record.gamma.b),
            p_re: join(record.point.coords.iter().map(|z| z.re)),
            p_im: join(record.point.coords.iter().map(|z| z.im)),
            lambda_re: record.value.re,
            lambda_im: record.value.im,
            residual,
        }
    }
}

/// Writes `g, omega, gamma_a, gamma_b, p_re, p_im, lambda_re, lambda_im, residual` rows.
pub fn write_eigenvalue_csv<W: Write>(writer: W, rows: &[EigenvalueRow]) -> Result<()> {
    let mut out = csv::Writer::from_writer(writer);
    if rows.is_empty() {
        out.write_record([
            "g", "omega", "gamma_a", "gamma_b", "p_re", "p_im", "lambda_re", "lambda_im", "residual",
        ])
        .map_err(|e| Error::Malformed(e.to_string()))?;
    }
    for row in rows {
        out.serialize(row).map_err(|e| Error::Malformed(e.to_string()))?;
    }
    out.flush().map_err(|e| Error::Malformed(e.to_string()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn square() -> RiemannMatrix {
        RiemannMatrix::elliptic(c(0.0, 1.0)).unwrap()
    }

    fn skew() -> RiemannMatrix {
        RiemannMatrix::elliptic(c(0.3, 1.2)).unwrap()
    }

    fn pt(z: Complex64) -> JacobianPoint {
        JacobianPoint {
            coords: DVector::from_element(1, z),
        }
    }

    #[test]
    fn harmonic_eval_examples() {
        let h = Harmonic::new(&CohomologyClass::elliptic(1, 0), &square()).unwrap();
        assert_abs_diff_eq!((harmonic_eval(&h, &pt(c(0.25, 0.0))) - c(0.0, 1.0)).norm(), 0.0, epsilon = 1e-15);
        let h0 = Harmonic::new(&CohomologyClass::elliptic(0, 0), &skew()).unwrap();
        assert_eq!(harmonic_eval(&h0, &pt(c(0.37, 0.81))), c(1.0, 0.0));
        let h11 = Harmonic::new(&CohomologyClass::elliptic(1, 1), &square()).unwrap();
        assert_abs_diff_eq!((harmonic_eval(&h11, &pt(c(0.5, 0.5))) - c(1.0, 0.0)).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn analytic_shift_examples() {
        let h = Harmonic::new(&CohomologyClass::elliptic(1, 0), &square()).unwrap();
        let f = ShiftedHarmonic::new(h);
        let shifted = f.hecke_apply(&pt(c(0.25, 0.0)));
        let lhs = shifted.sample(&square(), 8);
        let rhs = f.sample(&square(), 8).scale(c(0.0, 1.0));
        assert!(lhs.max_abs_diff(&rhs).unwrap() < 1e-14);
        // shift by the reference point is the identity
        assert_eq!(f.hecke_apply(&JacobianPoint::origin(1)).sample(&square(), 8), f.sample(&square(), 8));
        // commuting shifts
        let p = pt(c(0.13, 0.4));
        let q = pt(c(0.71, 0.05));
        assert_eq!(f.hecke_apply(&p).hecke_apply(&q), f.hecke_apply(&q).hecke_apply(&p));
    }

    #[test]
    fn tabulated_shift_by_grid_vector_is_exact() {
        let l = skew();
        let h = ShiftedHarmonic::new(Harmonic::new(&CohomologyClass::elliptic(2, -1), &l).unwrap());
        let f = h.sample(&l, 16);
        // a shift by exactly 3 grid steps is a pure permutation of samples
        let p = reduce_point(&l.from_lattice_coords(&DVector::from_element(1, 3.0 / 16.0), &DVector::from_element(1, 0.0)), &l);
        let shifted = hecke_apply(&f, &p);
        let exact = h.hecke_apply(&p).sample(&l, 16);
        assert!(shifted.max_abs_diff(&exact).unwrap() < 1e-12);
        assert_eq!(hecke_apply(&f, &JacobianPoint::origin(1)), f);
    }

    #[test]
    fn tabulated_shift_converges_with_resolution() {
        let l = skew();
        let h = ShiftedHarmonic::new(Harmonic::new(&CohomologyClass::elliptic(1, 1), &l).unwrap());
        let p = pt(c(0.37, 0.29));
        let err = |n| {
            hecke_apply(&h.sample(&l, n), &p)
                .max_abs_diff(&h.hecke_apply(&p).sample(&l, n))
                .unwrap()
        };
        let (coarse, fine) = (err(16), err(64));
        // bilinear interpolation is second order
        assert!(fine < coarse / 10.0, "{coarse} {fine}");
    }

    #[test]
    fn resolution_mismatch() {
        let l = square();
        let a = GridFunction::sample(&l, 4, |_| c(1.0, 0.0));
        let b = GridFunction::sample(&l, 8, |_| c(1.0, 0.0));
        assert_eq!(a.max_abs_diff(&b), Err(Error::ResolutionMismatch(4, 8)));
        assert_eq!(a.inner_product(&b), Err(Error::ResolutionMismatch(4, 8)));
        assert!(GridFunction::from_values(&l, 4, vec![c(0.0, 0.0); 15]).is_err());
        assert!(GridFunction::from_values(&l, 2, vec![c(f64::NAN, 0.0); 4]).is_err());
    }

    #[test]
    fn eigenvalue_examples() {
        let l = square();
        let v = hecke_eigenvalue(&CohomologyClass::elliptic(3, -2), &JacobianPoint::origin(1), &l).unwrap();
        assert_eq!(v.value, c(1.0, 0.0));
        let v = hecke_eigenvalue(&CohomologyClass::elliptic(1, 0), &pt(c(0.25, 0.0)), &l).unwrap();
        assert_abs_diff_eq!((v.value - c(0.0, 1.0)).norm(), 0.0, epsilon = 1e-15);
        // τ = i: e^{2πi(m x_p + n y_p)}
        let p = c(0.31, 0.77);
        let v = hecke_eigenvalue(&CohomologyClass::elliptic(2, 3), &pt(p), &l).unwrap();
        assert_abs_diff_eq!((v.value - unit_phase(2.0 * 0.31 + 3.0 * 0.77)).norm(), 0.0, epsilon = 1e-13);
    }

    #[test]
    fn closed_form_matches_solve() {
        let l = skew();
        let tau = l.tau().unwrap();
        for (m, n) in [(1, 0), (0, 1), (2, -3), (-1, 2)] {
            let gamma = CohomologyClass::elliptic(m, n);
            let h = Harmonic::new(&gamma, &l).unwrap();
            for p in [c(0.1, 0.2), c(0.9, 0.4), c(0.55, 1.1)] {
                let p = reduce_point(&DVector::from_element(1, p), &l);
                let ev = hecke_eigenvalue(&gamma, &p, &l).unwrap().value;
                assert_abs_diff_eq!((ev - elliptic::eigenvalue(m, n, tau, p.z())).norm(), 0.0, epsilon = 1e-12);
                assert_abs_diff_eq!(
                    (harmonic_eval(&h, &p) - elliptic::eigenfunction(m, n, tau, p.z())).norm(),
                    0.0,
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn verify_eigenfunction_examples() {
        let r = verify_eigenfunction(&CohomologyClass::elliptic(1, 0), &pt(c(0.25, 0.0)), &square(), 16).unwrap();
        assert!(r <= 1e-12);
        let r = verify_eigenfunction(&CohomologyClass::elliptic(0, 0), &pt(c(0.6, 0.3)), &skew(), 8).unwrap();
        assert_eq!(r, 0.0);
        let r = verify_eigenfunction(&CohomologyClass::elliptic(2, -3), &pt(c(0.61, 0.93)), &skew(), 32).unwrap();
        assert!(r <= 1e-10);
    }

    #[test]
    fn extend_to_pic_examples() {
        let p = JacobianPoint::origin(1);
        let f0 = |_: &JacobianPoint| c(0.3, -0.4);
        assert_eq!(extend_to_pic(f0, c(2.0, 1.0), 0, &p).unwrap(), c(0.3, -0.4));
        assert_eq!(extend_to_pic(|_| c(1.0, 0.0), c(2.0, 0.0), 3, &p).unwrap(), c(8.0, 0.0));
        let v = extend_to_pic(|_| c(1.0, 0.0), c(0.0, 1.0), -2, &p).unwrap();
        assert_abs_diff_eq!((v - c(-1.0, 0.0)).norm(), 0.0, epsilon = 1e-15);
        assert_eq!(extend_to_pic(f0, c(0.0, 0.0), 1, &p), Err(Error::ZeroMultiplier));
    }

    #[test]
    fn symmetric_power_examples() {
        let l = skew();
        let gamma = CohomologyClass::elliptic(1, 2);
        let x = pt(c(0.4, 0.7));
        let single = symmetric_power_eval(&gamma, std::slice::from_ref(&x), &l).unwrap();
        let lambda = hecke_eigenvalue(&gamma, &x, &l).unwrap().value;
        assert!((single.product - lambda).norm() < 1e-15);
        assert!((single.at_sum - lambda).norm() < 1e-12);
        let base = symmetric_power_eval(&gamma, &vec![JacobianPoint::origin(1); 3], &l).unwrap();
        assert_eq!(base.at_sum, c(1.0, 0.0));
        assert_eq!(base.product, c(1.0, 0.0));
        let pts = [pt(c(0.9, 0.2)), pt(c(0.5, 1.1)), pt(c(0.05, 0.6))];
        let pts: Vec<_> = pts.iter().map(|p| reduce_point(&p.coords, &l)).collect();
        assert!(symmetric_power_eval(&gamma, &pts, &l).unwrap().discrepancy() <= 1e-10);
        assert!(symmetric_power_eval(&gamma, &[], &l).is_err());
    }

    #[test]
    fn orthogonality_examples() {
        let l = square();
        let e10 = CohomologyClass::elliptic(1, 0);
        let ip = orthogonality_check(&e10, &e10, &l, 16).unwrap();
        assert_abs_diff_eq!((ip - c(1.0, 0.0)).norm(), 0.0, epsilon = 1e-12);
        let ip = orthogonality_check(&e10, &CohomologyClass::elliptic(0, 1), &l, 16).unwrap();
        assert!(ip.norm() <= 1e-12);
        let e23 = CohomologyClass::elliptic(2, 3);
        let ip = orthogonality_check(&e23, &e23, &skew(), 32).unwrap();
        assert_abs_diff_eq!((ip - c(1.0, 0.0)).norm(), 0.0, epsilon = 1e-12);
        assert_eq!(
            orthogonality_check(&e23, &e10, &l, 6),
            Err(Error::ResolutionTooLow { resolution: 6, max_mode: 3 })
        );
    }

    #[test]
    fn factored_gram_matches_direct_quadrature() {
        let l = RiemannMatrix::from_rows(&[
            vec![c(0.2, 1.1), c(0.3, 0.25)],
            vec![c(0.3, 0.25), c(-0.1, 0.9)],
        ])
        .unwrap();
        let classes = CohomologyClass::box_enumerate(2, 1);
        let picked: Vec<_> = classes.iter().step_by(9).cloned().collect();
        let gram = gram_matrix(&picked, &l, 4).unwrap();
        for (i, a) in picked.iter().enumerate() {
            for (j, b) in picked.iter().enumerate() {
                let direct = orthogonality_check(a, b, &l, 4).unwrap();
                assert!((gram[(i, j)] - direct).norm() < 1e-12, "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn csv_has_spec_columns() {
        let l = skew();
        let rec = hecke_eigenvalue(&CohomologyClass::elliptic(1, 2), &pt(c(0.2, 0.3)), &l).unwrap();
        let mut buf = Vec::new();
        write_eigenvalue_csv(&mut buf, &[EigenvalueRow::new(&rec, &l, 0.0)]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "g,omega,gamma_a,gamma_b,p_re,p_im,lambda_re,lambda_im,residual"
        );
        assert!(lines.next().unwrap().starts_with("1,0.3+1.2i,1,2,0.2,0.3,"));
    }
}
