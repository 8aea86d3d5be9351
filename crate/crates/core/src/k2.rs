//! `K₂ mod m` of `F_q(t)`: symbols, tame residues and the local-global zero
//! test.
//!
//! Over a global function field with μ_m in the constants, a class vanishes
//! exactly when all its tame residues do, so residues serve as the equality
//! oracle; no normal form for sums of symbols is attempted.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::funcfield::{divisor, unit_residue, Place, RationalFunction};
use crate::gf::{FieldSpec, Poly};

/// `coeff·{a, b}` with `a, b ≠ 0` and `coeff` reduced mod `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symbol2 {
    pub a: RationalFunction,
    pub b: RationalFunction,
    pub coeff: u32,
}

impl Symbol2 {
    pub fn new(a: RationalFunction, b: RationalFunction, coeff: i64, m: u32) -> Result<Symbol2> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroFunction);
        }
        Ok(Symbol2 {
            a,
            b,
            coeff: coeff.rem_euclid(m as i64) as u32,
        })
    }
}

/// A class in `K₂(F)/m` written as a finite sum of symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K2Element {
    spec: FieldSpec,
    terms: Vec<Symbol2>,
}

impl K2Element {
    pub fn zero(spec: &FieldSpec) -> K2Element {
        K2Element {
            spec: spec.clone(),
            terms: Vec::new(),
        }
    }

    /// The single symbol `{a, b}`.
    pub fn symbol(spec: &FieldSpec, a: RationalFunction, b: RationalFunction) -> Result<K2Element> {
        Ok(K2Element {
            spec: spec.clone(),
            terms: vec![Symbol2::new(a, b, 1, spec.m())?],
        })
    }

    pub fn from_terms(spec: &FieldSpec, terms: Vec<Symbol2>) -> K2Element {
        let m = spec.m();
        K2Element {
            spec: spec.clone(),
            terms: terms
                .into_iter()
                .map(|mut s| {
                    s.coeff %= m;
                    s
                })
                .collect(),
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn terms(&self) -> &[Symbol2] {
        &self.terms
    }

    pub fn push(&mut self, s: Symbol2) {
        let m = self.spec.m();
        self.terms.push(Symbol2 {
            coeff: s.coeff % m,
            ..s
        });
    }

    pub fn add(&self, other: &K2Element) -> Result<K2Element> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch);
        }
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> K2Element {
        let m = self.spec.m() as i64;
        let c = c.rem_euclid(m);
        K2Element {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .map(|s| Symbol2 {
                    coeff: ((s.coeff as i64 * c) % m) as u32,
                    ..s.clone()
                })
                .collect(),
        }
    }

    pub fn negate(&self) -> K2Element {
        self.scale(-1)
    }

    /// `self - {f, b}`.
    pub fn minus_symbol(&self, f: &RationalFunction, b: &RationalFunction) -> Result<K2Element> {
        let mut out = self.clone();
        out.push(Symbol2::new(f.clone(), b.clone(), -1, self.spec.m())?);
        Ok(out)
    }
}

/// An element of `κ_v^× / κ_v^{×m} ≅ Z/mZ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueClass {
    pub place: Place,
    pub index: u32,
    /// Residue-field element whose power-residue index is `index`.
    pub representative: Poly,
}

/// Places with nonzero residue, sorted, with their residue classes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RamificationProfile {
    pub entries: Vec<ResidueClass>,
}

impl RamificationProfile {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn places(&self) -> impl Iterator<Item = &Place> {
        self.entries.iter().map(|e| &e.place)
    }

    pub fn get(&self, v: &Place) -> Option<&ResidueClass> {
        self.entries.iter().find(|e| &e.place == v)
    }

    /// Index at `v`; zero where unramified.
    pub fn index_at(&self, v: &Place) -> u32 {
        self.get(v).map_or(0, |e| e.index)
    }
}

/// Unscaled tame symbol `(-1)^{v(a)v(b)} · \overline{a^{-v(b)} b^{v(a)}}` as
/// a residue-field element.
fn tame_representative(a: &RationalFunction, b: &RationalFunction, v: &Place, k: &FieldSpec) -> Poly {
    let kappa = v.residue_field(k).field;
    let (va, ua) = unit_residue(v, a, k).expect("symbol entries are nonzero");
    let (vb, ub) = unit_residue(v, b, k).expect("symbol entries are nonzero");
    let rep = kappa.mul(&kappa.pow_i(&ua, -vb), &kappa.pow_i(&ub, va));
    if (va * vb) % 2 != 0 {
        kappa.neg(&rep)
    } else {
        rep
    }
}

/// `∂_v(coeff·{a, b})`.
pub fn tame_residue(s: &Symbol2, v: &Place, k: &FieldSpec) -> ResidueClass {
    let kappa = v.residue_field(k).field;
    let rep = kappa.pow(&tame_representative(&s.a, &s.b, v, k), s.coeff as u128);
    let index = kappa.power_index(&rep).expect("tame symbol is a unit");
    ResidueClass {
        place: v.clone(),
        index,
        representative: rep,
    }
}

/// Union of the supports of all symbol entries; residues vanish elsewhere.
pub fn candidate_places(alpha: &K2Element, seed: u64) -> BTreeSet<Place> {
    let k = &alpha.spec;
    let mut places = BTreeSet::new();
    let mut seen: Vec<&RationalFunction> = Vec::new();
    for s in &alpha.terms {
        if s.coeff == 0 {
            continue;
        }
        for f in [&s.a, &s.b] {
            if seen.contains(&f) {
                continue;
            }
            seen.push(f);
            for (v, _) in divisor(f, k, seed).expect("symbol entries are nonzero") {
                places.insert(v);
            }
        }
    }
    places
}

/// `∂_v(α)` summed over the terms of `α`.
pub fn residue_at(alpha: &K2Element, v: &Place) -> ResidueClass {
    let k = &alpha.spec;
    let kappa = v.residue_field(k).field;
    let mut rep = Poly::one();
    for s in alpha.terms.iter().filter(|s| s.coeff != 0) {
        let r = kappa.pow(&tame_representative(&s.a, &s.b, v, k), s.coeff as u128);
        rep = kappa.mul(&rep, &r);
    }
    let index = kappa.power_index(&rep).expect("tame symbol is a unit");
    ResidueClass {
        place: v.clone(),
        index,
        representative: rep,
    }
}

pub fn ramification_seeded(alpha: &K2Element, seed: u64) -> RamificationProfile {
    let entries = candidate_places(alpha, seed)
        .into_iter()
        .map(|v| residue_at(alpha, &v))
        .filter(|c| c.index != 0)
        .collect();
    RamificationProfile { entries }
}

/// The ramification of `α` at every place where it is nonzero.
pub fn ramification(alpha: &K2Element) -> RamificationProfile {
    ramification_seeded(alpha, 0)
}

/// Whether `α = 0` in `K₂(F_q(t))/m`.
pub fn is_zero(alpha: &K2Element) -> bool {
    ramification(alpha).is_empty()
}

/// `Σ_v index(N_{κ_v/F_q}(∂_v α))` and whether it vanishes. Weil reciprocity
/// makes the sum zero for every input; a nonzero value is an arithmetic bug.
pub fn reciprocity_check(alpha: &K2Element) -> (bool, u32) {
    reciprocity_sum(alpha, &ramification(alpha))
}

pub fn reciprocity_sum(alpha: &K2Element, profile: &RamificationProfile) -> (bool, u32) {
    let k = &alpha.spec;
    let m = k.m();
    let sum = profile.entries.iter().fold(0u32, |acc, c| {
        let kappa = c.place.residue_field(k).field;
        let n = kappa.norm_to_base(&c.representative);
        (acc + k.power_index(n).expect("residue is a unit")) % m
    });
    (sum == 0, sum)
}
