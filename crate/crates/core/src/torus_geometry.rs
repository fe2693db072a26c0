//! Jacobian tori `ℂ^g/(ℤ^g + Ωℤ^g)` from period data.
//!
//! A [`RiemannMatrix`] fixes the lattice. Points are kept as canonical
//! representatives in the box `v = s + Ωt`, `s, t ∈ [0,1)^g`. An integral
//! class `γ = (γᵃ, γᵇ)`, written in the basis dual to a symplectic cycle basis
//! `(a_i, b_i)`, determines a unique holomorphic form `ω_γ = Σ u_j ω_j` with
//! `ω_γ + ω̄_γ` having periods `γᵃ` on the a-cycles and `γᵇ` on the b-cycles.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Maximum tolerated `|Ω_ij − Ω_ji|`.
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Tolerance for the harmonic-form and period invariants.
pub const INVARIANT_TOL: f64 = 1e-10;

/// Symmetric `g×g` complex matrix with positive-definite imaginary part.
#[derive(Debug, Clone, PartialEq)]
pub struct RiemannMatrix {
    omega: DMatrix<Complex64>,
    re: DMatrix<f64>,
    im_inv: DMatrix<f64>,
}

/// Validates `omega` as a Riemann matrix.
pub fn validate_period_matrix(omega: DMatrix<Complex64>) -> Result<RiemannMatrix> {
    let (rows, cols) = omega.shape();
    if rows != cols || rows == 0 {
        return Err(Error::BadShape { rows, cols });
    }
    if omega.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let asym = (0..rows)
        .flat_map(|i| (0..rows).map(move |j| (i, j)))
        .map(|(i, j)| (omega[(i, j)] - omega[(j, i)]).norm())
        .fold(0.0, f64::max);
    if asym > SYMMETRY_TOL {
        return Err(Error::NotSymmetric(asym));
    }
    let im = omega.map(|z| z.im);
    let im_sym = (&im + im.transpose()) * 0.5;
    let min_eig = im_sym.clone().symmetric_eigen().eigenvalues.min();
    if min_eig.is_nan() || min_eig <= 0.0 {
        return Err(Error::ImaginaryPartNotPositiveDefinite);
    }
    let im_inv = im_sym
        .try_inverse()
        .ok_or(Error::ImaginaryPartNotPositiveDefinite)?;
    Ok(RiemannMatrix {
        re: omega.map(|z| z.re),
        omega,
        im_inv,
    })
}

impl RiemannMatrix {
    /// The genus-one lattice `ℤ + ℤτ`.
    pub fn elliptic(tau: Complex64) -> Result<Self> {
        validate_period_matrix(DMatrix::from_element(1, 1, tau))
    }

    /// A random Riemann matrix: `Re Ω = (B + Bᵀ)/2` and `Im Ω = AAᵀ + I/2`,
    /// with `A`, `B` uniform in `[−½, ½]`.
    pub fn random<R: Rng + ?Sized>(genus: usize, rng: &mut R) -> Result<Self> {
        let b = DMatrix::from_fn(genus, genus, |_, _| rng.gen_range(-0.5..0.5));
        let re = (&b + b.transpose()) * 0.5;
        let a = DMatrix::from_fn(genus, genus, |_, _| rng.gen_range(-0.5..0.5));
        let im = &a * a.transpose() + DMatrix::identity(genus, genus) * 0.5;
        validate_period_matrix(re.zip_map(&im, Complex64::new))
    }

    /// A uniformly random point of the fundamental box.
    pub fn random_point<R: Rng + ?Sized>(&self, rng: &mut R) -> JacobianPoint {
        let g = self.genus();
        let s = DVector::from_fn(g, |_, _| rng.gen::<f64>());
        let t = DVector::from_fn(g, |_, _| rng.gen::<f64>());
        JacobianPoint {
            coords: self.from_lattice_coords(&s, &t),
        }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let g = rows.len();
        if rows.iter().any(|r| r.len() != g) {
            let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
            return Err(Error::BadShape { rows: g, cols });
        }
        validate_period_matrix(DMatrix::from_fn(g, g, |i, j| rows[i][j]))
    }

    pub fn genus(&self) -> usize {
        self.omega.nrows()
    }

    pub fn omega(&self) -> &DMatrix<Complex64> {
        &self.omega
    }

    /// `τ` for a genus-one lattice.
    pub fn tau(&self) -> Result<Complex64> {
        self.expect_genus(1)?;
        Ok(self.omega[(0, 0)])
    }

    pub(crate) fn expect_genus(&self, g: usize) -> Result<()> {
        if self.genus() == g {
            Ok(())
        } else {
            Err(Error::GenusMismatch {
                expected: g,
                actual: self.genus(),
            })
        }
    }

    /// Real lattice coordinates `(s, t)` with `v = s + Ωt`.
    pub fn lattice_coords(&self, v: &DVector<Complex64>) -> (DVector<f64>, DVector<f64>) {
        let t = &self.im_inv * v.map(|z| z.im);
        let s = v.map(|z| z.re) - &self.re * &t;
        (s, t)
    }

    /// `s + Ωt`.
    pub fn from_lattice_coords(&self, s: &DVector<f64>, t: &DVector<f64>) -> DVector<Complex64> {
        let tc = t.map(|x| Complex64::new(x, 0.0));
        s.map(|x| Complex64::new(x, 0.0)) + &self.omega * tc
    }

    /// The lattice vector `n + Ωm`.
    pub fn lattice_vector(&self, n: &[i64], m: &[i64]) -> DVector<Complex64> {
        let s = DVector::from_iterator(n.len(), n.iter().map(|&x| x as f64));
        let t = DVector::from_iterator(m.len(), m.iter().map(|&x| x as f64));
        self.from_lattice_coords(&s, &t)
    }

    /// Torus distance between two points: max over lattice coordinates of the
    /// wrapped difference.
    pub fn torus_distance(&self, a: &DVector<Complex64>, b: &DVector<Complex64>) -> f64 {
        let (s, t) = self.lattice_coords(&(a - b));
        s.iter()
            .chain(t.iter())
            .map(|x| (x - x.round()).abs())
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> String {
        let file = PeriodMatrixFile {
            genus: self.genus(),
            omega: (0..self.genus())
                .map(|i| {
                    (0..self.genus())
                        .map(|j| ComplexJson::from(self.omega[(i, j)]))
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string(&file).expect("period matrix serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PeriodMatrixFile =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        if file.omega.len() != file.genus {
            return Err(Error::BadShape {
                rows: file.omega.len(),
                cols: file.genus,
            });
        }
        let rows: Vec<Vec<Complex64>> = file
            .omega
            .iter()
            .map(|r| r.iter().map(|&z| z.into()).collect())
            .collect();
        Self::from_rows(&rows)
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexJson> for Complex64 {
    fn from(z: ComplexJson) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// On-disk form of a period matrix: `{"genus": g, "omega": [[{"re":…,"im":…}, …], …]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PeriodMatrixFile {
    pub genus: usize,
    pub omega: Vec<Vec<ComplexJson>>,
}

/// A point of `Pic⁰(X)` as its canonical representative in `ℂ^g`.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobianPoint {
    pub coords: DVector<Complex64>,
}

impl JacobianPoint {
    pub fn origin(genus: usize) -> Self {
        Self {
            coords: DVector::zeros(genus),
        }
    }

    pub fn genus(&self) -> usize {
        self.coords.len()
    }

    /// First coordinate; convenient in genus one.
    pub fn z(&self) -> Complex64 {
        self.coords[0]
    }
}

/// Canonical representative of `v` modulo `ℤ^g + Ωℤ^g`.
pub fn reduce_point(v: &DVector<Complex64>, lattice: &RiemannMatrix) -> JacobianPoint {
    let (s, t) = lattice.lattice_coords(v);
    let s = s.map(wrap_unit);
    let t = t.map(wrap_unit);
    JacobianPoint {
        coords: lattice.from_lattice_coords(&s, &t),
    }
}

/// Maps `x` into `[0, 1)`.
fn wrap_unit(x: f64) -> f64 {
    let r = x - x.floor();
    // x slightly below an integer can round up to exactly 1.0
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

/// Abel–Jacobi image of `p ∈ ℂ` on `E_τ`, relative to the reference point 0.
pub fn aj_elliptic(p: Complex64, tau: &RiemannMatrix) -> Result<JacobianPoint> {
    tau.expect_genus(1)?;
    Ok(reduce_point(&DVector::from_element(1, p), tau))
}

/// Integral class `γ ∈ H¹(X, ℤ) ≅ ℤ^{2g}` in the basis dual to `(a_i, b_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CohomologyClass {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl CohomologyClass {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        if a.len() != b.len() || a.is_empty() {
            return Err(Error::ShapeMismatch {
                expected: a.len(),
                actual: b.len(),
            });
        }
        Ok(Self { a, b })
    }

    /// `(m, n)` on an elliptic curve: `m` pairs with the a-cycle `1`, `n` with the b-cycle `τ`.
    pub fn elliptic(m: i64, n: i64) -> Self {
        Self { a: vec![m], b: vec![n] }
    }

    pub fn zero(genus: usize) -> Self {
        Self {
            a: vec![0; genus],
            b: vec![0; genus],
        }
    }

    /// Builds a class from the flat vector `(γᵃ, γᵇ)`.
    pub fn from_flat(entries: &[i64]) -> Result<Self> {
        if entries.is_empty() || !entries.len().is_multiple_of(2) {
            return Err(Error::Malformed(format!(
                "class needs an even, nonzero number of entries, got {}",
                entries.len()
            )));
        }
        let g = entries.len() / 2;
        Ok(Self {
            a: entries[..g].to_vec(),
            b: entries[g..].to_vec(),
        })
    }

    pub fn genus(&self) -> usize {
        self.a.len()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&x| x == 0)
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.a.iter().chain(&self.b).map(|x| x.abs()).max().unwrap_or(0)
    }

    pub fn flat(&self) -> Vec<i64> {
        self.a.iter().chain(&self.b).copied().collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect(),
            b: self.b.iter().zip(&other.b).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            a: self.a.iter().map(|x| -x).collect(),
            b: self.b.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            a: self.a.iter().map(|x| k * x).collect(),
            b: self.b.iter().map(|x| k * x).collect(),
        }
    }

    /// Every class of genus `g` with entries in `[-bound, bound]`, in lexicographic order.
    pub fn box_enumerate(genus: usize, bound: i64) -> Vec<Self> {
        let side = (2 * bound + 1) as usize;
        let total = side.pow(2 * genus as u32);
        (0..total)
            .map(|mut idx| {
                let mut flat = vec![0i64; 2 * genus];
                for slot in flat.iter_mut().rev() {
                    *slot = (idx % side) as i64 - bound;
                    idx /= side;
                }
                Self::from_flat(&flat).expect("even length")
            })
            .collect()
    }
}

/// A homology cycle `Σ n_a,i a_i + Σ n_b,i b_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl Cycle {
    /// The `k`-th of the `2g` standard generators (`a_1..a_g, b_1..b_g`).
    pub fn basis(genus: usize, k: usize) -> Self {
        let mut flat = vec![0; 2 * genus];
        flat[k] = 1;
        Self {
            a: flat[..genus].to_vec(),
            b: flat[genus..].to_vec(),
        }
    }
}

/// The holomorphic form `ω_γ` with `ω_γ + ω̄_γ` representing `γ`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicForm {
    pub class: CohomologyClass,
    /// Coefficients in the normalized basis `∫_{a_i} ω_j = δ_ij`, `∫_{b_i} ω_j = Ω_ij`.
    pub u: DVector<Complex64>,
}

impl HarmonicForm {
    pub fn genus(&self) -> usize {
        self.u.len()
    }

    /// Max residual of `u + ū = γᵃ` and `Ωu + Ω̄ū = γᵇ`.
    pub fn invariant_residual(&self, lattice: &RiemannMatrix) -> f64 {
        let a_periods = self.u.map(|z| 2.0 * z.re);
        let b_periods = (lattice.omega() * &self.u).map(|z| 2.0 * z.re);
        a_periods
            .iter()
            .zip(&self.class.a)
            .chain(b_periods.iter().zip(&self.class.b))
            .map(|(x, &k)| (x - k as f64).abs())
            .fold(0.0, f64::max)
    }
}

/// Solves for `u` from the real `2g×2g` system in `(Re u, Im u)`.
///
/// `u + ū = γᵃ` gives `2 Re u = γᵃ`; `Ωu + Ω̄ū = γᵇ` gives
/// `2 (Re Ω · Re u − Im Ω · Im u) = γᵇ`.
pub fn solve_harmonic(gamma: &CohomologyClass, lattice: &RiemannMatrix) -> Result<HarmonicForm> {
    let g = lattice.genus();
    if gamma.genus() != g {
        return Err(Error::GenusMismatch {
            expected: g,
            actual: gamma.genus(),
        });
    }
    let omega = lattice.omega();
    let mut system = DMatrix::<f64>::zeros(2 * g, 2 * g);
    let mut rhs = DVector::<f64>::zeros(2 * g);
    for i in 0..g {
        system[(i, i)] = 2.0;
        rhs[i] = gamma.a[i] as f64;
        for j in 0..g {
            system[(g + i, j)] = 2.0 * omega[(i, j)].re;
            system[(g + i, g + j)] = -2.0 * omega[(i, j)].im;
        }
        rhs[g + i] = gamma.b[i] as f64;
    }
    let solution = system.lu().solve(&rhs).ok_or(Error::SingularSystem)?;
    if solution.iter().any(|x| !x.is_finite()) {
        return Err(Error::SingularSystem);
    }
    let u = DVector::from_fn(g, |i, _| Complex64::new(solution[i], solution[g + i]));
    Ok(HarmonicForm {
        class: gamma.clone(),
        u,
    })
}

/// `∫_β (ω_γ + ω̄_γ)` for `β = Σ n_a,i a_i + n_b,i b_i`.
pub fn period_pairing(form: &HarmonicForm, cycle: &Cycle, lattice: &RiemannMatrix) -> f64 {
    let a_periods = form.u.map(|z| 2.0 * z.re);
    let b_periods = (lattice.omega() * &form.u).map(|z| 2.0 * z.re);
    cycle
        .a
        .iter()
        .zip(a_periods.iter())
        .chain(cycle.b.iter().zip(b_periods.iter()))
        .map(|(&n, p)| n as f64 * p)
        .sum()
}

/// `u·v + ū·v̄ = 2 Re(u·v)`: the line integral of `ω_γ + ω̄_γ` from the
/// reference point along the straight path with Abel–Jacobi image `v`.
pub fn aj_line_integral(form: &HarmonicForm, target: &JacobianPoint) -> f64 {
    line_integral(form, &target.coords)
}

/// As [`aj_line_integral`] for an arbitrary displacement in the universal cover.
pub fn line_integral(form: &HarmonicForm, displacement: &DVector<Complex64>) -> f64 {
    2.0 * form
        .u
        .iter()
        .zip(displacement.iter())
        .map(|(u, v)| u * v)
        .sum::<Complex64>()
        .re
}
