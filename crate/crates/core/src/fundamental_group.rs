//! Exact audit of a candidate map `ℤ × ℤ → μ × μ` into finite-order
//! characters of `π₁(E_τ) = ⟨A, B⟩ ≅ ℤ²`.
//!
//! A nonzero `(k, l)` is written `k'·(α, β)` with `k' > 0` and `(α, β)`
//! primitive, and `(α, β)` is completed to `g = (α β; γ δ) ∈ SL₂(ℤ)`. The
//! completion is only defined up to `(γ, δ) ↦ (γ + xα, δ + xβ)`. The character
//! `A ↦ e^{2πiδ/k'}, B ↦ e^{−2πiγ/k'}` depends on `x` whenever `k' > 1`; the
//! variant `A ↦ e^{2πiα/k'}, B ↦ e^{2πiβ/k'}` does not, but is not injective.
//!
//! Characters are stored as exact elements of `ℚ/ℤ`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// Signed gcd: `l` if `k = 0`, `k` if `l = 0`, otherwise `gcd(|k|, |l|)` times both signs.
pub fn signed_gcd(k: i64, l: i64) -> i64 {
    match (k, l) {
        (0, _) => l,
        (_, 0) => k,
        _ => k.abs().gcd(&l.abs()) * k.signum() * l.signum(),
    }
}

/// `(k, l) = k'·(α, β)` with `k' = |gcd(k, l)| > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalForm {
    pub k_prime: i64,
    pub alpha: i64,
    pub beta: i64,
}

pub fn gcd_normal_form(k: i64, l: i64) -> Result<NormalForm> {
    if k == 0 && l == 0 {
        return Err(Error::ZeroInput);
    }
    let k_prime = signed_gcd(k, l).abs();
    Ok(NormalForm {
        k_prime,
        alpha: k / k_prime,
        beta: l / k_prime,
    })
}

/// `(a11 a12; a21 a22)` with determinant one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SL2ZMatrix {
    pub a11: i64,
    pub a12: i64,
    pub a21: i64,
    pub a22: i64,
}

impl SL2ZMatrix {
    pub fn new(a11: i64, a12: i64, a21: i64, a22: i64) -> Result<Self> {
        let m = Self { a11, a12, a21, a22 };
        if m.det() != 1 {
            return Err(Error::Malformed(format!("determinant {} != 1", m.det())));
        }
        Ok(m)
    }

    pub fn det(&self) -> i64 {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    /// `(1 0; x 1)·self`: the completion for family parameter `x`.
    pub fn family_member(&self, x: i64) -> Self {
        Self {
            a21: self.a21 + x * self.a11,
            a22: self.a22 + x * self.a12,
            ..*self
        }
    }
}

/// Completes a primitive row `(α, β)` to `SL₂(ℤ)`.
///
/// Picks the solution with `0 ≤ a22 < |β|` (for `β = 0`, `a22 = α = ±1` and
/// `a21 = 0`). Every other completion is [`SL2ZMatrix::family_member`] of this one.
pub fn complete_to_sl2(alpha: i64, beta: i64) -> Result<SL2ZMatrix> {
    if alpha.abs().gcd(&beta.abs()) != 1 {
        return Err(Error::NotCoprime(alpha, beta));
    }
    if beta == 0 {
        return SL2ZMatrix::new(alpha, 0, 0, alpha);
    }
    let modulus = beta.abs();
    // α·a22 ≡ 1 (mod |β|)
    let ext = alpha.rem_euclid(modulus).extended_gcd(&modulus);
    let a22 = ext.x.rem_euclid(modulus);
    let a21 = (alpha * a22 - 1) / beta;
    SL2ZMatrix::new(alpha, beta, a21, a22)
}

/// A character `A ↦ e^{2πi·a}, B ↦ e^{2πi·b}` with `a, b ∈ [0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterOnPi1 {
    pub value_a: Rational64,
    pub value_b: Rational64,
}

fn mod_one(r: Rational64) -> Rational64 {
    r - r.floor()
}

fn fmt_fraction(r: Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl CharacterOnPi1 {
    pub fn new(value_a: Rational64, value_b: Rational64) -> Self {
        Self {
            value_a: mod_one(value_a),
            value_b: mod_one(value_b),
        }
    }

    pub fn trivial() -> Self {
        Self::new(Rational64::zero(), Rational64::zero())
    }

    pub fn is_trivial(&self) -> bool {
        self.value_a.is_zero() && self.value_b.is_zero()
    }
}

impl fmt::Display for CharacterOnPi1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(A: {}, B: {})", fmt_fraction(self.value_a), fmt_fraction(self.value_b))
    }
}

impl Serialize for CharacterOnPi1 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = BTreeMap::new();
        map.insert("A", fmt_fraction(self.value_a));
        map.insert("B", fmt_fraction(self.value_b));
        map.serialize(serializer)
    }
}

/// `A ↦ (δ + xβ)/k'`, `B ↦ −(γ + xα)/k'` for the completion with parameter `x`.
pub fn langlands_character(k: i64, l: i64, x: i64) -> Result<CharacterOnPi1> {
    let nf = gcd_normal_form(k, l)?;
    let g = complete_to_sl2(nf.alpha, nf.beta)?.family_member(x);
    Ok(character_from_completion(&g, nf.k_prime))
}

fn character_from_completion(g: &SL2ZMatrix, k_prime: i64) -> CharacterOnPi1 {
    CharacterOnPi1::new(Rational64::new(g.a22, k_prime), Rational64::new(-g.a21, k_prime))
}

/// Distinct characters produced by one `(k, l)` across a range of completions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub k: i64,
    pub l: i64,
    pub k_prime: i64,
    pub characters: Vec<CharacterOnPi1>,
    pub well_defined: bool,
}

pub fn well_definedness_audit(k: i64, l: i64, xs: impl IntoIterator<Item = i64>) -> Result<AuditReport> {
    let nf = gcd_normal_form(k, l)?;
    let base = complete_to_sl2(nf.alpha, nf.beta)?;
    let characters: BTreeSet<_> = xs
        .into_iter()
        .map(|x| character_from_completion(&base.family_member(x), nf.k_prime))
        .collect();
    Ok(AuditReport {
        k,
        l,
        k_prime: nf.k_prime,
        well_defined: characters.len() == 1,
        characters: characters.into_iter().collect(),
    })
}

/// `A ↦ α/k'`, `B ↦ β/k'`, with `(0, 0)` sent to the trivial character.
pub fn fixed_variant_character(k: i64, l: i64) -> CharacterOnPi1 {
    match gcd_normal_form(k, l) {
        Ok(nf) => CharacterOnPi1::new(Rational64::new(nf.alpha, nf.k_prime), Rational64::new(nf.beta, nf.k_prime)),
        Err(_) => CharacterOnPi1::trivial(),
    }
}

/// The fixed variant read off the first row of an arbitrary completion.
pub fn fixed_variant_from_matrix(g: &SL2ZMatrix, k_prime: i64) -> CharacterOnPi1 {
    CharacterOnPi1::new(Rational64::new(g.a11, k_prime), Rational64::new(g.a12, k_prime))
}

/// Image of the fixed variant on the box `|k|, |l| ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReachabilityReport {
    pub bound: i64,
    pub max_denominator: i64,
    /// Characters with both denominators `≤ max_denominator`.
    pub candidates: usize,
    pub unreached: Vec<CharacterOnPi1>,
    /// Two distinct inputs with the same image.
    pub collision: Option<((i64, i64), (i64, i64))>,
}

pub fn reachability_search(bound: i64, max_denominator: i64) -> ReachabilityReport {
    let mut image: BTreeMap<CharacterOnPi1, (i64, i64)> = BTreeMap::new();
    let mut collision = None;
    for k in -bound..=bound {
        for l in -bound..=bound {
            let chi = fixed_variant_character(k, l);
            match image.get(&chi) {
                Some(&first) if collision.is_none() => collision = Some((first, (k, l))),
                Some(_) => {}
                None => {
                    image.insert(chi, (k, l));
                }
            }
        }
    }
    let fractions: BTreeSet<Rational64> = (1..=max_denominator)
        .flat_map(|d| (0..d).map(move |n| Rational64::new(n, d)))
        .collect();
    let candidates: Vec<CharacterOnPi1> = fractions
        .iter()
        .flat_map(|&a| fractions.iter().map(move |&b| CharacterOnPi1::new(a, b)))
        .collect();
    let unreached = candidates.iter().filter(|c| !image.contains_key(c)).copied().collect();
    ReachabilityReport {
        bound,
        max_denominator,
        candidates: candidates.len(),
        unreached,
        collision,
    }
}

/// Order of a character in `(ℚ/ℤ)²`: the lcm of its denominators.
pub fn character_order(chi: &CharacterOnPi1) -> i64 {
    chi.value_a.denom().lcm(chi.value_b.denom())
}

/// A preimage of `chi` under the fixed variant, if one exists with `|k|, |l| ≤ bound`.
///
/// With `n` the order of `chi` and `chi = (a/n, b/n)`, any primitive lift
/// `(α, β) ≡ (a, b) mod n` gives the preimage `n·(α, β)`.
pub fn fixed_variant_preimage(chi: &CharacterOnPi1, bound: i64) -> Option<(i64, i64)> {
    if chi.is_trivial() {
        return Some((1, 0));
    }
    let n = character_order(chi);
    let a = (chi.value_a * n).to_integer();
    let b = (chi.value_b * n).to_integer();
    let reach = bound / n;
    let lifts = |r: i64| (-reach..=reach).filter(move |v| (v - r).rem_euclid(n) == 0);
    lifts(a)
        .flat_map(|alpha| lifts(b).map(move |beta| (alpha, beta)))
        .filter(|&(alpha, beta)| alpha.abs().gcd(&beta.abs()) == 1)
        .min_by_key(|&(alpha, beta)| (alpha.abs().max(beta.abs()), alpha, beta))
        .map(|(alpha, beta)| (n * alpha, n * beta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn signed_gcd_convention() {
        assert_eq!(signed_gcd(0, -4), -4);
        assert_eq!(signed_gcd(-5, 0), -5);
        assert_eq!(signed_gcd(-6, 4), -2);
        assert_eq!(signed_gcd(-6, -4), 2);
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(gcd_normal_form(2, 4).unwrap(), NormalForm { k_prime: 2, alpha: 1, beta: 2 });
        assert_eq!(gcd_normal_form(5, 0).unwrap(), NormalForm { k_prime: 5, alpha: 1, beta: 0 });
        assert_eq!(gcd_normal_form(1, 1).unwrap(), NormalForm { k_prime: 1, alpha: 1, beta: 1 });
        assert_eq!(gcd_normal_form(-6, 4).unwrap(), NormalForm { k_prime: 2, alpha: -3, beta: 2 });
        assert_eq!(gcd_normal_form(0, 0), Err(Error::ZeroInput));
    }

    #[test]
    fn completion_examples() {
        assert_eq!(complete_to_sl2(1, 2).unwrap(), SL2ZMatrix { a11: 1, a12: 2, a21: 0, a22: 1 });
        assert_eq!(complete_to_sl2(1, 0).unwrap(), SL2ZMatrix { a11: 1, a12: 0, a21: 0, a22: 1 });
        assert_eq!(complete_to_sl2(3, 5).unwrap(), SL2ZMatrix { a11: 3, a12: 5, a21: 1, a22: 2 });
        assert_eq!(complete_to_sl2(-1, 0).unwrap().det(), 1);
        assert_eq!(complete_to_sl2(-3, -7).unwrap().det(), 1);
        assert_eq!(complete_to_sl2(2, 4), Err(Error::NotCoprime(2, 4)));
        assert_eq!(complete_to_sl2(0, 0), Err(Error::NotCoprime(0, 0)));
        assert!(SL2ZMatrix::new(1, 1, 1, 1).is_err());
    }

    #[test]
    fn character_examples() {
        assert_eq!(langlands_character(2, 4, 0).unwrap(), CharacterOnPi1::new(r(1, 2), r(0, 1)));
        assert_eq!(langlands_character(2, 4, 1).unwrap(), CharacterOnPi1::new(r(1, 2), r(1, 2)));
        for x in -3..=3 {
            assert!(langlands_character(1, 1, x).unwrap().is_trivial());
        }
        assert_eq!(langlands_character(0, 0, 0), Err(Error::ZeroInput));
    }

    #[test]
    fn audit_examples() {
        let a = well_definedness_audit(2, 4, [0, 1]).unwrap();
        assert_eq!(a.characters.len(), 2);
        assert!(!a.well_defined);
        let a = well_definedness_audit(1, 7, 0..=5).unwrap();
        assert_eq!(a.characters.len(), 1);
        assert!(a.well_defined);
        let a = well_definedness_audit(3, 0, 0..=2).unwrap();
        assert_eq!(a.characters.len(), 3);
        let json = serde_json::to_value(well_definedness_audit(2, 4, [0, 1]).unwrap()).unwrap();
        assert_eq!(json["k_prime"], 2);
        assert_eq!(json["characters"][0], serde_json::json!({"A": "1/2", "B": "0/1"}));
        assert_eq!(json["well_defined"], false);
    }

    #[test]
    fn fixed_variant_examples() {
        assert_eq!(fixed_variant_character(2, 4), CharacterOnPi1::new(r(1, 2), r(0, 1)));
        assert!(fixed_variant_character(1, 0).is_trivial());
        assert!(fixed_variant_character(0, 0).is_trivial());
        assert_eq!(fixed_variant_character(3, 3), CharacterOnPi1::new(r(1, 3), r(1, 3)));
        assert_eq!(fixed_variant_character(2, 0), CharacterOnPi1::new(r(1, 2), r(0, 1)));
        // not injective
        assert_eq!(fixed_variant_character(2, 0), fixed_variant_character(-2, 0));
    }

    #[test]
    fn reachability_small_box() {
        let report = reachability_search(4, 2);
        assert_eq!(report.candidates, 4);
        assert!(report.unreached.is_empty());
        assert!(report.collision.is_some());
        // (1/3, 1/5) needs order 15, out of reach of a box of radius 4
        let report = reachability_search(4, 5);
        assert!(report.unreached.contains(&CharacterOnPi1::new(r(1, 3), r(1, 5))));
    }

    #[test]
    fn preimages() {
        let chi = CharacterOnPi1::new(r(1, 2), r(1, 3));
        let (k, l) = fixed_variant_preimage(&chi, 40).unwrap();
        assert_eq!(fixed_variant_character(k, l), chi);
        assert_eq!(fixed_variant_preimage(&CharacterOnPi1::new(r(1, 6), r(1, 5)), 40), None);
        assert_eq!(fixed_variant_preimage(&CharacterOnPi1::trivial(), 1), Some((1, 0)));
    }
}
