//! `ℋ_q(SL₂)` as `G(F_q)`-invariant kernels on `ℙ¹(F_q) × ℙ¹(F_q)`.
//!
//! `G/B = ℙ¹`, and `G` has two orbits on pairs of points: the diagonal (`c₁`)
//! and its complement (`c_s`). Convolution sums over the middle point with
//! weight one per point, which is the normalization `vol(B(F_q)) = 1`.

use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        let prime = q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d));
        if prime {
            Ok(Self { q })
        } else {
            Err(Error::NotPrime(q))
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    fn inv(&self, x: u64) -> u64 {
        // Fermat
        let mut base = x % self.q;
        let mut exp = self.q - 2;
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.q;
            }
            base = base * base % self.q;
            exp >>= 1;
        }
        acc
    }
}

/// A point `[1:0]` or `[x:1]` of `ℙ¹(F_q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum P1Point {
    Infinity,
    Affine(u64),
}

impl P1Point {
    fn index(self) -> usize {
        match self {
            P1Point::Infinity => 0,
            P1Point::Affine(x) => x as usize + 1,
        }
    }

    fn normalize(x: u64, y: u64, field: PrimeField) -> Self {
        if y.is_multiple_of(field.q) {
            P1Point::Infinity
        } else {
            P1Point::Affine(x * field.inv(y) % field.q)
        }
    }

    /// Action of `[[a, b], [c, d]]` on column vectors `(x, y)`.
    fn transform(self, m: [u64; 4], field: PrimeField) -> Self {
        let (x, y) = match self {
            P1Point::Infinity => (1, 0),
            P1Point::Affine(x) => (x, 1),
        };
        let q = field.q;
        P1Point::normalize((m[0] * x + m[1] * y) % q, (m[2] * x + m[3] * y) % q, field)
    }
}

/// `[1:0]` followed by `[x:1]` for `x = 0..q-1`.
pub fn p1_points(field: PrimeField) -> Vec<P1Point> {
    std::iter::once(P1Point::Infinity)
        .chain((0..field.q).map(P1Point::Affine))
        .collect()
}

/// `a·c₁ + b·c_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HeckeAlgebraElement {
    pub a: i64,
    pub b: i64,
}

impl HeckeAlgebraElement {
    pub const ONE: Self = Self { a: 1, b: 0 };
    pub const S: Self = Self { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// Product from the structure constants `c_s ⋆ c_s = q c₁ + (q−1) c_s`.
    pub fn mul(self, other: Self, q: u64) -> Self {
        let q = q as i64;
        let ss = self.b * other.b;
        Self {
            a: self.a * other.a + q * ss,
            b: self.a * other.b + self.b * other.a + (q - 1) * ss,
        }
    }
}

/// A `(q+1)×(q+1)` integer kernel indexed by `ℙ¹(F_q)` in [`p1_points`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeKernel {
    field: PrimeField,
    values: Vec<Vec<i64>>,
}

impl HeckeKernel {
    pub fn from_element(element: HeckeAlgebraElement, field: PrimeField) -> Self {
        let n = field.q as usize + 1;
        let values = (0..n)
            .map(|i| (0..n).map(|j| if i == j { element.a } else { element.b }).collect())
            .collect();
        Self { field, values }
    }

    pub fn c1(field: PrimeField) -> Self {
        Self::from_element(HeckeAlgebraElement::ONE, field)
    }

    pub fn cs(field: PrimeField) -> Self {
        Self::from_element(HeckeAlgebraElement::S, field)
    }

    /// Wraps raw values; rejects kernels that are not constant on the two orbits.
    pub fn from_values(field: PrimeField, values: Vec<Vec<i64>>) -> Result<Self> {
        let n = field.q as usize + 1;
        if values.len() != n || values.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch {
                expected: n,
                actual: values.len(),
            });
        }
        let kernel = Self { field, values };
        kernel.to_element()?;
        Ok(kernel)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn at(&self, x: P1Point, y: P1Point) -> i64 {
        self.values[x.index()][y.index()]
    }

    /// Coordinates in the `{c₁, c_s}` basis; fails unless diagonal-constant and off-diagonal-constant.
    pub fn to_element(&self) -> Result<HeckeAlgebraElement> {
        let a = self.values[0][0];
        let b = self.values[0][1];
        let n = self.values.len();
        let constant = (0..n).all(|i| (0..n).all(|j| self.values[i][j] == if i == j { a } else { b }));
        if constant {
            Ok(HeckeAlgebraElement { a, b })
        } else {
            Err(Error::NotInvariant)
        }
    }

    /// `f(gx, gy) = f(x, y)` for the generators `[[1,1],[0,1]]` and `[[0,-1],[1,0]]` of `SL₂(F_q)`.
    pub fn is_group_invariant(&self) -> bool {
        let q = self.field.q;
        let generators = [[1, 1, 0, 1], [0, q - 1, 1, 0]];
        let points = p1_points(self.field);
        generators.iter().all(|&g| {
            points.iter().all(|&x| {
                points.iter().all(|&y| {
                    self.at(x.transform(g, self.field), y.transform(g, self.field)) == self.at(x, y)
                })
            })
        })
    }
}

/// `(f₁ ⋆ f₂)(x, y) = Σ_z f₁(x, z) f₂(z, y)`, summed over all of `ℙ¹(F_q)`.
pub fn convolve(f1: &HeckeKernel, f2: &HeckeKernel) -> Result<HeckeKernel> {
    if f1.field != f2.field {
        return Err(Error::FieldMismatch(f1.field.q, f2.field.q));
    }
    let n = f1.values.len();
    let values = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| (0..n).map(|z| f1.values[x][z] * f2.values[z][y]).sum())
                .collect()
        })
        .collect();
    Ok(HeckeKernel {
        field: f1.field,
        values,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeckeRelationReport {
    pub q: u64,
    pub checks: Vec<RelationCheck>,
}

impl HeckeRelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Brute-force convolution check of the defining relations, two-sided unit,
/// associativity on basis triples, and invariance of products.
pub fn verify_hecke_relations(field: PrimeField) -> HeckeRelationReport {
    let q = field.q;
    let c1 = HeckeKernel::c1(field);
    let cs = HeckeKernel::cs(field);
    let conv = |a: &HeckeKernel, b: &HeckeKernel| convolve(a, b).expect("same field");
    let expected_ss = HeckeKernel::from_element(HeckeAlgebraElement::new(q as i64, q as i64 - 1), field);
    let basis = [&c1, &cs];
    let mut checks = vec![
        ("c1*c1=c1", conv(&c1, &c1) == c1),
        ("c1*cs=cs", conv(&c1, &cs) == cs),
        ("cs*c1=cs", conv(&cs, &c1) == cs),
        ("cs*cs=q*c1+(q-1)*cs", conv(&cs, &cs) == expected_ss),
    ];
    let associative = basis.iter().all(|a| {
        basis
            .iter()
            .all(|b| basis.iter().all(|c| conv(&conv(a, b), c) == conv(a, &conv(b, c))))
    });
    checks.push(("associativity", associative));
    let sample = HeckeKernel::from_element(HeckeAlgebraElement::new(3, -2), field);
    checks.push(("unit", conv(&c1, &sample) == sample && conv(&sample, &c1) == sample));
    let products_invariant = basis.iter().all(|a| {
        basis.iter().all(|b| {
            let p = conv(a, b);
            p.to_element().is_ok() && p.is_group_invariant()
        })
    });
    checks.push(("invariance", products_invariant));
    let structure = basis.iter().zip([HeckeAlgebraElement::ONE, HeckeAlgebraElement::S]).all(|(ka, ea)| {
        basis
            .iter()
            .zip([HeckeAlgebraElement::ONE, HeckeAlgebraElement::S])
            .all(|(kb, eb)| conv(ka, kb).to_element() == Ok(ea.mul(eb, q)))
    });
    checks.push(("structure-constants", structure));
    HeckeRelationReport {
        q,
        checks: checks
            .into_iter()
            .map(|(name, pass)| RelationCheck {
                name: name.to_string(),
                pass,
            })
            .collect(),
    }
}
