//! Hecke fibers `ℙ¹` over rank-two bundles on an elliptic curve.
//!
//! The fiber of `Hecke_{1,x}` over `M` is the projective line of lower
//! modifications `M' ⊂ M` at `x`. For four families of `M` the fiber splits
//! into strata of mutually isomorphic `M'`; over `F_q` each stratum has a
//! point count polynomial in `q`, and the counts add up to `q + 1`.
//!
//! Bundles are symbolic: line bundles carry a label and a twist by `x`, which
//! is all the catalog needs to tell targets apart.

use std::fmt;

use serde::Serialize;

use crate::torus_geometry::{reduce_point, JacobianPoint, RiemannMatrix};
use crate::{Error, Result};

/// `base(k·x)`: a labelled line bundle twisted `k` times by the point `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineBundle {
    pub base: String,
    pub base_degree: i64,
    pub x_twist: i64,
}

impl LineBundle {
    pub fn new(base: impl Into<String>, base_degree: i64) -> Self {
        Self {
            base: base.into(),
            base_degree,
            x_twist: 0,
        }
    }

    pub fn trivial() -> Self {
        Self::new("O", 0)
    }

    pub fn degree(&self) -> i64 {
        self.base_degree + self.x_twist
    }

    pub fn twisted(&self, k: i64) -> Self {
        Self {
            x_twist: self.x_twist + k,
            ..self.clone()
        }
    }

    /// `self ⊗ other` for an untwisted `other`, as a new label.
    fn tensor(&self, other: &LineBundle) -> Self {
        if other.base == "O" {
            return self.twisted(other.x_twist);
        }
        if self.base == "O" {
            return other.twisted(self.x_twist);
        }
        Self {
            base: format!("{}⊗{}", self.base, other.base),
            base_degree: self.base_degree + other.base_degree,
            x_twist: self.x_twist + other.x_twist,
        }
    }

    fn is_trivial(&self) -> bool {
        self.base == "O" && self.x_twist == 0
    }
}

impl fmt::Display for LineBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.x_twist {
            0 => write!(f, "{}", self.base),
            1 => write!(f, "{}(x)", self.base),
            -1 => write!(f, "{}(-x)", self.base),
            k => write!(f, "{}({k}x)", self.base),
        }
    }
}

/// Rank-two bundles appearing in the catalog.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BundleDescriptor {
    /// `first ⊕ second`, ordered by decreasing degree then label.
    Decomposable { first: LineBundle, second: LineBundle },
    /// `twist ⊗ F₂`, with `F₂` the nontrivial self-extension of `O_X`.
    IndecomposableF2 { twist: LineBundle },
    /// `F₂(x) ⊗ twist`, with `F₂(x)` the nontrivial extension of `O_X(x)` by `O_X`.
    IndecomposableF2Twisted { twist: LineBundle },
}

impl BundleDescriptor {
    pub fn decomposable(l1: LineBundle, l2: LineBundle) -> Self {
        let key = |l: &LineBundle| (-l.degree(), l.clone());
        let (first, second) = if key(&l1) <= key(&l2) { (l1, l2) } else { (l2, l1) };
        Self::Decomposable { first, second }
    }

    pub fn f2() -> Self {
        Self::IndecomposableF2 {
            twist: LineBundle::trivial(),
        }
    }

    pub fn f2_of_x() -> Self {
        Self::IndecomposableF2Twisted {
            twist: LineBundle::trivial(),
        }
    }

    pub fn degree(&self) -> i64 {
        match self {
            Self::Decomposable { first, second } => first.degree() + second.degree(),
            Self::IndecomposableF2 { twist } => 2 * twist.degree(),
            Self::IndecomposableF2Twisted { twist } => 1 + 2 * twist.degree(),
        }
    }

    /// Which worked case of the catalog `self` falls under.
    pub fn classify(&self) -> Result<CatalogCase> {
        match self {
            Self::Decomposable { first, second } => {
                if first.degree() > second.degree() + 1 {
                    Ok(CatalogCase::WideDegreeGap)
                } else if *first == second.twisted(1) {
                    Ok(CatalogCase::LinePlusLineOfX)
                } else if first.degree() == 0 && second.degree() == 0 && first != second {
                    Ok(CatalogCase::DistinctDegreeZero)
                } else {
                    Err(Error::UnsupportedBundleCase(self.to_string()))
                }
            }
            Self::IndecomposableF2Twisted { .. } => Ok(CatalogCase::OddIndecomposable),
            Self::IndecomposableF2 { .. } => Err(Error::UnsupportedBundleCase(self.to_string())),
        }
    }
}

impl fmt::Display for BundleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Decomposable { first, second } => write!(f, "{first}⊕{second}"),
            Self::IndecomposableF2 { twist } if twist.is_trivial() => write!(f, "F2"),
            Self::IndecomposableF2 { twist } => write!(f, "{twist}⊗F2"),
            Self::IndecomposableF2Twisted { twist } if twist.is_trivial() => write!(f, "F2(x)"),
            Self::IndecomposableF2Twisted { twist } => write!(f, "F2(x)⊗{twist}"),
        }
    }
}

/// The four worked fiber computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CatalogCase {
    /// `L₁ ⊕ L₂` with `deg L₁ > deg L₂ + 1`.
    WideDegreeGap,
    /// `F₂(x) ⊗ L`: the fiber is a double cover of `Pic⁰` ramified at four points.
    OddIndecomposable,
    /// `L ⊕ L(x)`, in particular `O ⊕ O(x)`.
    LinePlusLineOfX,
    /// `L₁ ⊕ L₂` with `L₁ ≇ L₂` both of degree zero.
    DistinctDegreeZero,
}

/// Integer polynomial in `q`, coefficients from the constant term up.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Polynomial(pub Vec<i64>);

impl Polynomial {
    pub fn constant(c: i64) -> Self {
        Self(vec![c])
    }

    pub fn linear(c0: i64, c1: i64) -> Self {
        Self(vec![c0, c1])
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, c| acc * q + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let coeff = |p: &Self, i: usize| p.0.get(i).copied().unwrap_or(0);
        let mut out: Vec<i64> = (0..n).map(|i| coeff(self, i) + coeff(other, i)).collect();
        while out.len() > 1 && out.last() == Some(&0) {
            out.pop();
        }
        Self(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match k {
                0 => c.to_string(),
                1 if c == 1 => "q".to_string(),
                1 => format!("{c}q"),
                _ => format!("{c}q^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+").replace("+-", "-"))
        }
    }
}

/// One stratum of a Hecke fiber: all `M'` in it are isomorphic to `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberStratumRecord {
    pub target: BundleDescriptor,
    pub count: Polynomial,
    pub note: String,
}

fn stratum(target: BundleDescriptor, count: Polynomial, note: &str) -> FiberStratumRecord {
    FiberStratumRecord {
        target,
        count,
        note: note.to_string(),
    }
}

const RAMIFICATION_NOTE: &str =
    "ramification point L_i⊗F2; count assumes all four square roots of O_X are F_q-rational";

/// Strata of the Hecke fiber over `m`.
pub fn fiber_catalog(m: &BundleDescriptor) -> Result<Vec<FiberStratumRecord>> {
    let case = m.classify()?;
    let strata = match (case, m) {
        (CatalogCase::WideDegreeGap, BundleDescriptor::Decomposable { first, second }) => vec![
            stratum(
                BundleDescriptor::decomposable(first.twisted(-1), second.clone()),
                Polynomial::linear(0, 1),
                "affine line",
            ),
            stratum(
                BundleDescriptor::decomposable(first.clone(), second.twisted(-1)),
                Polynomial::constant(1),
                "single point",
            ),
        ],
        (CatalogCase::LinePlusLineOfX, BundleDescriptor::Decomposable { second: line, .. }) => vec![
            stratum(
                BundleDescriptor::decomposable(line.clone(), line.clone()),
                Polynomial::constant(1),
                "single point",
            ),
            stratum(
                BundleDescriptor::decomposable(line.twisted(-1), line.twisted(1)),
                Polynomial::constant(1),
                "single point",
            ),
            stratum(
                BundleDescriptor::IndecomposableF2 { twist: line.clone() },
                Polynomial::linear(-1, 1),
                "ℂ^× worth of copies of the same indecomposable bundle",
            ),
        ],
        (CatalogCase::DistinctDegreeZero, BundleDescriptor::Decomposable { first, second }) => {
            let root = LineBundle::new(format!("sqrt({}⊗{})", first.base, second.base), 0);
            vec![
                stratum(
                    BundleDescriptor::decomposable(first.twisted(-1), second.clone()),
                    Polynomial::constant(1),
                    "single point",
                ),
                stratum(
                    BundleDescriptor::decomposable(first.clone(), second.twisted(-1)),
                    Polynomial::constant(1),
                    "single point",
                ),
                stratum(
                    BundleDescriptor::IndecomposableF2Twisted { twist: root.twisted(-1) },
                    Polynomial::linear(-1, 1),
                    "ℂ^× worth of copies of the same indecomposable bundle",
                ),
            ]
        }
        (CatalogCase::OddIndecomposable, BundleDescriptor::IndecomposableF2Twisted { twist }) => {
            let generic = BundleDescriptor::decomposable(
                LineBundle::new("L[a]", 0).tensor(twist),
                LineBundle::new("L[a]^-1", 0).tensor(twist),
            );
            let mut strata = vec![stratum(
                generic,
                Polynomial::linear(-3, 1),
                "two-sheeted cover of Pic0 away from ramification: a continuum of pairwise non-isomorphic bundles",
            )];
            strata.extend(
                ["O", "L_1", "L_2", "L_3"]
                    .iter()
                    .map(|root| {
                        let root = LineBundle::new(*root, 0).tensor(twist);
                        stratum(
                            BundleDescriptor::IndecomposableF2 { twist: root },
                            Polynomial::constant(1),
                            RAMIFICATION_NOTE,
                        )
                    }),
            );
            strata
        }
        _ => unreachable!("classify matched the variant"),
    };
    Ok(strata)
}

/// Coefficient of `f(target)` in `(H_{1,x} f)(M)` over `F_q`.
pub fn hecke_coefficients(m: &BundleDescriptor, q: u64) -> Result<Vec<(BundleDescriptor, i64)>> {
    crate::finite_models::PrimeField::new(q)?;
    let strata = fiber_catalog(m)?;
    if m.classify()? == CatalogCase::OddIndecomposable && q + 1 < 4 {
        return Err(Error::TooFewRationalPoints {
            q,
            needed: 4,
            available: q + 1,
        });
    }
    Ok(strata
        .into_iter()
        .map(|s| (s.target, s.count.eval(q as i64)))
        .collect())
}

/// `(H_{1,x} f)(M) = Σ_strata count(q) · f(target)`.
pub fn fq_hecke_apply(f: impl Fn(&BundleDescriptor) -> i64, m: &BundleDescriptor, q: u64) -> Result<i64> {
    Ok(hecke_coefficients(m, q)?
        .iter()
        .map(|(target, count)| count * f(target))
        .sum())
}

#[derive(Debug, Clone, Serialize)]
pub struct StratumJson {
    pub target: String,
    pub count_coeffs: Vec<i64>,
    pub note: String,
}

/// JSON form: `{"bundle": …, "strata": [{"target": …, "count_coeffs": […], "note": …}], "total_check": "q+1"}`.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogReport {
    pub bundle: String,
    pub strata: Vec<StratumJson>,
    pub total_check: String,
}

impl CatalogReport {
    pub fn new(m: &BundleDescriptor) -> Result<Self> {
        let strata = fiber_catalog(m)?;
        let total = strata
            .iter()
            .fold(Polynomial::constant(0), |acc, s| acc.add(&s.count));
        Ok(Self {
            bundle: m.to_string(),
            strata: strata
                .into_iter()
                .map(|s| StratumJson {
                    target: s.target.to_string(),
                    count_coeffs: s.count.0,
                    note: s.note,
                })
                .collect(),
            total_check: total.to_string(),
        })
    }

    pub fn total_is_q_plus_one(&self) -> bool {
        self.total_check == "q+1"
    }
}

/// Where `a ∈ Pic⁰(E_τ)` lands in the Hecke fiber over `F₂(x)`.
#[derive(Debug, Clone, PartialEq)]
pub enum CoverFiber {
    /// `a` is 2-torsion: `(2s, 2t) ∈ {0,1}²` names the square root `L_i` of `O_X`.
    Ramification { half_period: (u8, u8) },
    /// The unordered pair `{L[a], L[a]^{-1}}`, stored by its lexicographically
    /// smaller canonical representative in `(s, t)` coordinates.
    Generic { representative: JacobianPoint },
}

impl CoverFiber {
    /// Equality up to `tol` in lattice coordinates.
    pub fn same_as(&self, other: &Self, lattice: &RiemannMatrix, tol: f64) -> bool {
        match (self, other) {
            (Self::Ramification { half_period: a }, Self::Ramification { half_period: b }) => a == b,
            (Self::Generic { representative: a }, Self::Generic { representative: b }) => {
                lattice.torus_distance(&a.coords, &b.coords) <= tol
            }
            _ => false,
        }
    }

    /// Symbolic target bundle `M'(a)`.
    pub fn descriptor(&self, lattice: &RiemannMatrix) -> BundleDescriptor {
        match self {
            Self::Ramification { half_period } => {
                let name = match half_period {
                    (0, 0) => "O",
                    (1, 0) => "L[1/2]",
                    (0, 1) => "L[tau/2]",
                    _ => "L[(1+tau)/2]",
                };
                BundleDescriptor::IndecomposableF2 {
                    twist: LineBundle::new(name, 0),
                }
            }
            Self::Generic { representative } => {
                let (s, t) = lattice.lattice_coords(&representative.coords);
                let label = format!("L[{:.12},{:.12}]", s[0], t[0]);
                BundleDescriptor::decomposable(
                    LineBundle::new(label.clone(), 0),
                    LineBundle::new(format!("{label}^-1"), 0),
                )
            }
        }
    }
}

const TWO_TORSION_TOL: f64 = 1e-10;

/// The double cover `Pic⁰(E_τ) → ℙ¹ = Hecke fiber over F₂(x)`, `a ~ −a`.
pub fn example2_cover(a: &JacobianPoint, lattice: &RiemannMatrix) -> Result<CoverFiber> {
    lattice.expect_genus(1)?;
    let plus = reduce_point(&a.coords, lattice);
    let (s, t) = lattice.lattice_coords(&plus.coords);
    let (ds, dt) = (2.0 * s[0], 2.0 * t[0]);
    if (ds - ds.round()).abs() <= TWO_TORSION_TOL && (dt - dt.round()).abs() <= TWO_TORSION_TOL {
        let bit = |x: f64| (x.round() as i64).rem_euclid(2) as u8;
        return Ok(CoverFiber::Ramification {
            half_period: (bit(ds), bit(dt)),
        });
    }
    let minus = reduce_point(&(-&a.coords), lattice);
    let key = |p: &JacobianPoint| {
        let (s, t) = lattice.lattice_coords(&p.coords);
        (s[0], t[0])
    };
    let representative = if key(&plus) <= key(&minus) { plus } else { minus };
    Ok(CoverFiber::Generic { representative })
}
